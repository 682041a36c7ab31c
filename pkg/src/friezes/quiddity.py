"""Eventually periodic bi-infinite quiddity sequences.

A quiddity sequence (a_i), i ranging over all integers, determines an
infinite frieze through the recurrence t(p, q+1) = a_q * t(p, q) - t(p, q-1)
with t(p, p) = 0 and t(p, p+1) = 1.  Here we only handle sequences that are
eventually periodic on both sides, presented as a finite core window flanked
by two periodic tails.  Every worked example in the literature is of this
shape, and it is closed under the strip-synthesis rewriting.

Indexing convention: the core occupies indices core_start .. core_start +
len(core) - 1.  Below the core the left period tiles leftward so that its
last element sits at index core_start - 1; above the core the right period
tiles rightward so that its first element sits just after the core.
"""

from __future__ import annotations

from dataclasses import dataclass


class QuiddityError(ValueError):
    """Raised for structurally invalid quiddity data."""


def tiled_value(left: tuple[int, ...], core: tuple[int, ...],
                right: tuple[int, ...], start: int, i: int) -> int:
    """Value at index i of the sequence described by (left, core, right, start)."""
    if i < start:
        d = start - 1 - i
        return left[len(left) - 1 - (d % len(left))]
    if i < start + len(core):
        return core[i - start]
    d = i - (start + len(core))
    return right[d % len(right)]


@dataclass(frozen=True)
class QuiddityDescriptor:
    """Finite presentation of a bi-infinite quiddity sequence.

    All values must be integers >= 1.  Purely periodic sequences are the
    special case of an empty core with equal tails.
    """

    left_period: tuple[int, ...]
    core: tuple[int, ...]
    right_period: tuple[int, ...]
    core_start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "left_period", tuple(self.left_period))
        object.__setattr__(self, "core", tuple(self.core))
        object.__setattr__(self, "right_period", tuple(self.right_period))
        if not self.left_period or not self.right_period:
            raise QuiddityError("periodic tails must be nonempty")
        for v in (*self.left_period, *self.core, *self.right_period):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise QuiddityError(f"quiddity values must be integers >= 1, got {v!r}")

    @classmethod
    def constant(cls, c: int) -> "QuiddityDescriptor":
        return cls((c,), (), (c,), 0)

    @classmethod
    def periodic(cls, values: tuple[int, ...], core_start: int = 0) -> "QuiddityDescriptor":
        """Purely periodic sequence with values[0] at index core_start."""
        vals = tuple(values)
        return cls(vals, (), vals, core_start)

    def value_at(self, i: int) -> int:
        return tiled_value(self.left_period, self.core, self.right_period,
                           self.core_start, i)

    def values(self, lo: int, hi: int) -> list[int]:
        """Values at indices lo..hi inclusive."""
        return [self.value_at(i) for i in range(lo, hi + 1)]

    def shift(self, n: int) -> "QuiddityDescriptor":
        """Translate by n: shift(q, n).value_at(i) == q.value_at(i - n)."""
        return QuiddityDescriptor(self.left_period, self.core,
                                  self.right_period, self.core_start + n)

    def has_value(self, v: int) -> bool:
        return v in self.left_period or v in self.core or v in self.right_period


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a depth-bounded positivity check.

    Positivity of every frieze entry is an infinite condition; a report can
    only certify the band of widths up to `depth`.  status is "valid_to_depth"
    or "invalid"; an invalid report carries the first nonpositive entry
    (i, j, t(i, j)) in scan order (increasing band j - i, then increasing i).
    """

    status: str
    depth: int
    witness: tuple[int, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.status == "valid_to_depth"


DEFAULT_DEPTH = 64


def validate(q: QuiddityDescriptor, depth: int = DEFAULT_DEPTH) -> ValidationReport:
    """Check t(i, j) >= 1 for all i < j with j - i <= depth.

    Rows are scanned over one full period of each tail plus the core; by
    periodicity this covers every band position of the bi-infinite frieze.
    """
    if depth < 2:
        raise QuiddityError("validation depth must be >= 2")
    core_end = q.core_start + len(q.core) - 1
    row_lo = q.core_start - depth + 1 - len(q.left_period)
    row_hi = core_end + len(q.right_period) + 1
    # rows[i][d] = t(i, i + d), filled by the three-term recurrence
    rows: dict[int, list[int]] = {}
    for i in range(row_lo, row_hi + 1):
        ts = [0, 1]
        for d in range(1, depth):
            ts.append(q.value_at(i + d) * ts[d] - ts[d - 1])
        rows[i] = ts
    for d in range(2, depth + 1):
        for i in range(row_lo, row_hi + 1):
            if rows[i][d] <= 0:
                return ValidationReport("invalid", depth, (i, i + d, rows[i][d]))
    return ValidationReport("valid_to_depth", depth)
