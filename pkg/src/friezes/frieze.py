"""Lazy evaluation of infinite frieze entries and their classical identities.

An infinite frieze is a map t on pairs of integers with zero diagonal, ones
on the superdiagonal, antisymmetry t(i, j) = -t(j, i), positivity above the
diagonal, and all adjacent 2x2 minors equal to 1.  It is determined by its
quiddity sequence a_i = t(i-1, i+1) via the three-term recurrence

    t(p, q+1) = a_q * t(p, q) - t(p, q-1).

FriezeView evaluates entries of the frieze of a given quiddity descriptor on
demand, memoizing computed values.  The remaining operations are the row
identities: the Ptolemy relation, reconstruction of any entry from two rows,
the continuant (tridiagonal determinant) form, and the row-pair determinant
coefficients whose value does not depend on the evaluation position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiddity import QuiddityDescriptor


class FriezeError(ValueError):
    """Raised when an identity precondition fails or input data is inconsistent."""


class FriezeView:
    """Memoized evaluator of the infinite frieze over a quiddity descriptor.

    Logically immutable: the cache is a pure memo (same key, same value), so
    concurrent readers at worst recompute an entry.  Entries are exact Python
    integers; they grow without bound with the band width.
    """

    def __init__(self, quiddity: QuiddityDescriptor):
        self.quiddity = quiddity
        self._memo: dict[tuple[int, int], int] = {}

    def entry(self, i: int, j: int) -> int:
        """t(i, j) for any integers i, j (antisymmetric below the diagonal)."""
        if i == j:
            return 0
        if i > j:
            return -self.entry(j, i)
        key = (i, j)
        memo = self._memo
        if key in memo:
            return memo[key]
        # walk the row forward from the last cached column, if any
        prev, cur = 0, 1  # t(i, i), t(i, i+1)
        col = i + 1
        while (i, col + 1) in memo and col < j:
            prev, cur = cur, memo[(i, col + 1)]
            col += 1
        a = self.quiddity.value_at
        while col < j:
            prev, cur = cur, a(col) * cur - prev
            col += 1
            memo[(i, col)] = cur
        return cur

    def row(self, i: int, lo: int, hi: int) -> list[int]:
        """[t(i, lo), ..., t(i, hi)]."""
        return [self.entry(i, j) for j in range(lo, hi + 1)]

    def continuant(self, p: int, q: int) -> int:
        """The tridiagonal determinant in a_{p+1}, ..., a_{q-1}; equals t(p, q).

        Requires q >= p + 2.  Off-diagonal entries of the matrix are 1, so the
        determinant satisfies D_k = a_k * D_{k-1} - D_{k-2}.
        """
        if q < p + 2:
            raise FriezeError(f"continuant needs q >= p + 2, got p={p}, q={q}")
        a = self.quiddity.value_at
        d_prev, d = 1, a(p + 1)
        for k in range(p + 2, q):
            d_prev, d = d, a(k) * d - d_prev
        return d

    def ptolemy_holds(self, i: int, j: int, p: int, q: int) -> bool:
        """t(i,p) t(j,q) == t(i,j) t(p,q) + t(i,q) t(j,p)."""
        t = self.entry
        return t(i, p) * t(j, q) == t(i, j) * t(p, q) + t(i, q) * t(j, p)

    def reconstruct_entry(self, i: int, j: int, p: int, q: int) -> int:
        """Recover t(p, q) from rows i and j: (t(i,p)t(j,q) - t(i,q)t(j,p)) / t(i,j).

        The division is exact for a genuine frieze; a remainder means the
        entries did not come from one and raises FriezeError.
        """
        if i == j:
            raise FriezeError("rows i and j must differ (t(i, j) = 0 otherwise)")
        t = self.entry
        num = t(i, p) * t(j, q) - t(i, q) * t(j, p)
        den = t(i, j)
        quo, rem = divmod(num, den)
        if rem:
            raise FriezeError(
                f"non-exact division reconstructing t({p},{q}) from rows {i},{j}")
        return quo

    def c_coeff(self, i: int, j: int, k: int) -> int:
        """det [[t(i,k), t(i,k+1)], [t(j,k), t(j,k+1)]]; independent of k."""
        t = self.entry
        return t(i, k) * t(j, k + 1) - t(i, k + 1) * t(j, k)

    def d_coeff(self, i: int, j: int, k: int) -> int:
        """det [[t(k,i), t(k,j)], [t(k+1,i), t(k+1,j)]]; independent of k."""
        t = self.entry
        return t(k, i) * t(k + 1, j) - t(k, j) * t(k + 1, i)


def entry_from_fg(f_p: int, f_q: int, g_p: int, g_q: int) -> int:
    """t(p, q) from the rows f_i = t(-1, i) and g_i = t(0, i): f_p g_q - f_q g_p."""
    return f_p * g_q - f_q * g_p


def quiddity_from_f(f: dict[int, int], a_minus1: int) -> dict[int, int]:
    """Recover quiddity values from a window of the f-row, t(-1, s).

    a_s = (f_{s-1} + f_{s+1}) / f_s for s != -1; the value a_{-1} is not
    determined by the f-row and must be supplied (any a_{-1} >= 1 extends the
    same f-row to a different frieze).  Returns {s: a_s} for every s interior
    to the window.  Raises FriezeError if the anchors f_{-1} = 0, f_0 = 1,
    f_{-2} = -1 fail where present, on division failure, or if some a_s < 1.
    """
    if a_minus1 < 1:
        raise FriezeError("a_{-1} must be >= 1")
    for s, want in ((-1, 0), (0, 1), (-2, -1)):
        if s in f and f[s] != want:
            raise FriezeError(f"f_{s} must be {want}, got {f[s]}")
    out: dict[int, int] = {}
    for s in sorted(f):
        if s - 1 not in f or s + 1 not in f:
            continue
        if s == -1:
            out[s] = a_minus1
            continue
        if f[s] == 0:
            raise FriezeError(f"f_{s} = 0 but s != -1; not an f-row")
        quo, rem = divmod(f[s - 1] + f[s + 1], f[s])
        if rem:
            raise FriezeError(f"f_{s} does not divide f_{s-1} + f_{s+1}")
        if quo < 1:
            raise FriezeError(f"recovered a_{s} = {quo} < 1")
        out[s] = quo
    return out


@dataclass(frozen=True)
class EnoughOnes:
    """Tri-state answer: "yes", "no" (with a witness pair), or "unknown"."""

    status: str
    witness: tuple[int, int] | None = None


def has_enough_ones(t: FriezeView, window: tuple[int, int],
                    depth: int = 16) -> EnoughOnes:
    """Decide whether every window pair i <= j is dominated by a 1-entry.

    A pair (i, j) is covered when t(i', j') = 1 for some i' <= i <= j <= j'.
    Each window pair is searched out to the given depth; full coverage gives
    "yes".  When some pair stays uncovered, the strip synthesis of the
    quiddity is consulted: a nonempty upper boundary certifies "no" (the
    witness is a pair straddled by a bridging arc, which no peripheral arc,
    hence no 1-entry, can dominate), an empty one upgrades to "yes", and an
    inconclusive run yields "unknown".
    """
    lo, hi = window
    if lo > hi:
        raise FriezeError("window lo must be <= hi")

    def covered(i: int, j: int) -> bool:
        if j <= i + 1:
            return True  # t(i, i+1) = 1 dominates
        for s in range(i, i - depth - 1, -1):
            for e in range(max(j, s + 2), j + depth + 1):
                if t.entry(s, e) == 1:
                    return True
        return False

    uncovered = [(i, j) for i in range(lo, hi + 1)
                 for j in range(i, hi + 1) if not covered(i, j)]
    if not uncovered:
        return EnoughOnes("yes")

    from . import synthesis  # local import: synthesis builds on this module's types

    try:
        outcome = synthesis.psi(t.quiddity, window)
    except synthesis.InconclusiveError:
        return EnoughOnes("unknown")
    if outcome.m2_class.kind == "empty":
        return EnoughOnes("yes")
    bridged = sorted({a.lower_index() for a in outcome.triangulation.arcs
                      if a.is_bridging()})
    if bridged:
        p = bridged[len(bridged) // 2]
        return EnoughOnes("no", (p - 1, p + 1))
    return EnoughOnes("no", uncovered[0])
