"""Synthesis of an admissible strip triangulation from a quiddity sequence.

The construction runs in two phases over a residual copy of the quiddity
sequence, where a position's value counts the triangles still missing at
that lower marked point (0 marks a fully consumed position):

* Phase A repeatedly scans for positions of value 1.  Each such position i
  receives a peripheral arc joining its nearest nonzero neighbours, then is
  zeroed out, and each neighbour loses one triangle slot per adjacent
  removed 1 (two slots when flanked on both sides).  All value-1 positions
  of a pass are processed simultaneously.  The phase ends when no 1 is left;
  it may also run forever, in which case the peripheral arcs alone already
  triangulate the strip with an empty upper boundary.
* Phase B distributes upper marked points.  The leftover values are 0 or
  >= 2; each value v >= 2 position still needs v - 1 bridging arcs.  A fan
  of points is planted at an anchor position of value > 2, then fountains
  are grown rightward and leftward: stepping from one value > 2 position to
  the next shares one upper point, positions of value exactly 2 hook onto
  the current extreme point, and a side with no further value > 2 positions
  ends in a single fountain point serving its whole tail.

The shape of the upper index set is read off from which phases terminate.
Residuals stay eventually periodic throughout, so passes are computed as
exact descriptor rewrites; arcs are materialized for a window plus margin.
Nontermination of phase A is detected by recurrence, up to translation, of
the residual with its zeros collapsed away (zero positions are inert, and
the gaps between survivors grow, so the uncollapsed residual never recurs).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .quiddity import QuiddityDescriptor, QuiddityError, tiled_value, validate
from .strip import (Arc, M2Class, M2_BI_INFINITE, M2_EMPTY, M2_NAT_LEFT,
                    M2_NAT_RIGHT, StripTriangulation, bridging, m2_finite,
                    peripheral)

DEFAULT_CAP = 1000
MARGIN_WINDOW_FACTOR = 2  # starting margin = factor * window width
MARGIN_DOUBLINGS = 2      # margin may grow to 4x the starting value


class InconclusiveError(RuntimeError):
    """A cap was reached before the synthesis could classify the input."""


@dataclass(frozen=True)
class Residual:
    """Working copy of a quiddity sequence during synthesis; zeros allowed.

    Same tiling convention as QuiddityDescriptor.  Values are never negative:
    a pass zeroes the removed positions and only decrements nonzero ones.
    """

    left: tuple[int, ...]
    core: tuple[int, ...]
    right: tuple[int, ...]
    start: int

    @classmethod
    def from_descriptor(cls, q: QuiddityDescriptor) -> "Residual":
        return cls(q.left_period, q.core, q.right_period, q.core_start)

    def value_at(self, i: int) -> int:
        return tiled_value(self.left, self.core, self.right, self.start, i)

    def values(self, lo: int, hi: int) -> list[int]:
        return [self.value_at(i) for i in range(lo, hi + 1)]

    def has_one(self) -> bool:
        return 1 in self.left or 1 in self.core or 1 in self.right

    def footprint(self) -> tuple[int, int]:
        """Index range holding the core plus one period of each tail."""
        return (self.start - len(self.left),
                self.start + len(self.core) + len(self.right) - 1)

    def next_nonzero(self, i: int) -> int | None:
        f_lo, f_hi = self.footprint()
        limit = max(f_hi, i + len(self.right)) + len(self.right) + 1
        for j in range(i + 1, limit + 1):
            if self.value_at(j):
                return j
        return None

    def prev_nonzero(self, i: int) -> int | None:
        f_lo, f_hi = self.footprint()
        limit = min(f_lo, i - len(self.left)) - len(self.left) - 1
        for j in range(i - 1, limit - 1, -1):
            if self.value_at(j):
                return j
        return None

    def max_zero_gap(self) -> int:
        """Upper bound on the distance from any position to a nonzero one."""
        w = (list(self.left) * 2 + list(self.core) + list(self.right) * 2)
        best = run = 0
        for v in w:
            run = run + 1 if v == 0 else 0
            best = max(best, run)
        return best + 1


def _primitive(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def _normalize(res: Residual) -> Residual:
    """Primitive tails and a core trimmed of values matching the tail patterns."""
    left = _primitive(res.left)
    right = _primitive(res.right)
    core = list(res.core)
    start = res.start
    while core and core[0] == left[0]:
        core.pop(0)
        start += 1
        left = left[1:] + left[:1]
    while core and core[-1] == right[-1]:
        core.pop()
        right = right[-1:] + right[:-1]
    return Residual(left, tuple(core), right, start)


def _collapsed(res: Residual) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    drop = lambda w: tuple(v for v in w if v)
    return drop(res.left), drop(res.core), drop(res.right)


def _check_no_adjacent_ones(res: Residual) -> None:
    """Two 1s with only zeros between would demand crossing arcs; reject.

    For a genuine frieze this pattern forces a zero entry two bands up, so
    hitting it means the input was not a valid quiddity sequence.
    """
    a, c, b = _collapsed(res)
    pairs = []
    if a:
        pairs += [(a[i], a[(i + 1) % len(a)]) for i in range(len(a))]
    if b:
        pairs += [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]
    chain = ([a[-1]] if a else []) + list(c) + ([b[0]] if b else [])
    pairs += list(zip(chain, chain[1:]))
    if any(x == 1 and y == 1 for x, y in pairs):
        raise QuiddityError(
            "two residual 1s are adjacent through zeros; "
            "the input is not the quiddity sequence of an infinite frieze")


def _collapsed_signature(res: Residual):
    """Canonical form of the zero-collapsed residual, up to index translation."""
    a, c, b = _collapsed(res)
    a, b = _primitive(a), _primitive(b)
    c = list(c)
    if a:
        while c and c[0] == a[0]:
            c.pop(0)
            a = a[1:] + a[:1]
    if b:
        while c and c[-1] == b[-1]:
            c.pop()
            b = b[-1:] + b[:-1]
    if not c and a and a == b:
        rotations = [a[i:] + a[:i] for i in range(len(a))]
        return ("pure", min(rotations))
    return ("mixed", a, tuple(c), b)


def _circular_pass(period: tuple[int, ...]) -> tuple[int, ...]:
    """One pass applied to a purely periodic residual, as a cyclic word."""
    n = len(period)
    if not any(period):
        return period
    out = []
    for idx, v in enumerate(period):
        if v <= 1:
            out.append(0)
            continue
        dec = 0
        for step in itertools.count(1):
            w = period[(idx - step) % n]
            if w:
                dec += 1 if w == 1 else 0
                break
        for step in itertools.count(1):
            w = period[(idx + step) % n]
            if w:
                dec += 1 if w == 1 else 0
                break
        out.append(v - dec)
    return tuple(out)


@dataclass(frozen=True)
class PassRecord:
    """What one phase-A pass did inside the materialized range."""

    index: int
    ones: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    residual_after: Residual
    double_decrement: bool


def pass_arcs(res: Residual, lo: int, hi: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Value-1 positions and their peripheral arcs relevant to [lo, hi].

    An arc reaches at most max_zero_gap beyond its 1, so scanning a padded
    range catches every arc whose span meets [lo, hi].
    """
    gap = res.max_zero_gap()
    ones, arcs = [], []
    for i in range(lo - gap - 1, hi + gap + 2):
        if res.value_at(i) != 1:
            continue
        p, n = res.prev_nonzero(i), res.next_nonzero(i)
        if p is None or n is None:
            raise QuiddityError(
                f"residual 1 at {i} has no nonzero neighbour; "
                "input is not a valid quiddity sequence")
        if lo <= i <= hi:
            ones.append(i)
        if n >= lo and p <= hi:
            arcs.append((p, n))
    return ones, sorted(set(arcs))


def step_a_pass(res: Residual) -> tuple[Residual, bool]:
    """Apply one simultaneous pass to the residual descriptor.

    Returns the rewritten residual and whether any position lost two slots
    at once (both nearest nonzero neighbours were 1s).  The rewrite works on
    two period copies per side so that tail-core boundary effects land in
    the new core; the outermost copies see pure tail context and become the
    new periods.
    """
    _check_no_adjacent_ones(res)
    L, C, R = len(res.left), len(res.core), len(res.right)
    w_lo = res.start - 2 * L
    w_hi = res.start + C + 2 * R - 1
    new: dict[int, int] = {}
    double = False
    for i in range(w_lo, w_hi + 1):
        v = res.value_at(i)
        if v <= 1:
            new[i] = 0
            continue
        dec = 0
        p, n = res.prev_nonzero(i), res.next_nonzero(i)
        if p is not None and res.value_at(p) == 1:
            dec += 1
        if n is not None and res.value_at(n) == 1:
            dec += 1
        if dec == 2:
            double = True
        new[i] = v - dec
    new_left = tuple(new[i] for i in range(w_lo, w_lo + L))
    new_core = tuple(new[i] for i in range(w_lo + L, w_hi - R + 1))
    new_right = tuple(new[i] for i in range(w_hi - R + 1, w_hi + 1))
    if new_left != _circular_pass(res.left) or new_right != _circular_pass(res.right):
        raise AssertionError("tail rewrite deviated from its periodic context")
    return _normalize(Residual(new_left, new_core, new_right, w_lo + L)), double


@dataclass(frozen=True)
class StepAResult:
    verdict: str  # "terminated" | "nonterminating" | "cap_reached"
    passes: int
    residual: Residual
    arcs: tuple[tuple[int, int], ...]
    trace: tuple[PassRecord, ...]
    detected_at: int | None = None  # pass index where recurrence was seen


def run_step_a(q: QuiddityDescriptor | Residual, mat_lo: int, mat_hi: int,
               cap: int = DEFAULT_CAP) -> StepAResult:
    """Iterate phase-A passes until no 1 remains, recurrence, or the cap.

    On recurrence of the collapsed residual the run is known nonterminating;
    passes continue until the materialized range is fully consumed and one
    arc spans it, so that window queries see final data.
    """
    if cap < 1:
        raise QuiddityError("pass cap must be >= 1")
    res = q if isinstance(q, Residual) else Residual.from_descriptor(q)
    res = _normalize(res)
    seen = {_collapsed_signature(res): 0}
    trace: list[PassRecord] = []
    arcs: list[tuple[int, int]] = []
    detected: int | None = None
    k = 0
    while True:
        if not res.has_one():
            return StepAResult("terminated", k, res, tuple(sorted(set(arcs))),
                               tuple(trace))
        if detected is not None and _materialization_done(res, arcs, mat_lo, mat_hi):
            return StepAResult("nonterminating", k, res, tuple(sorted(set(arcs))),
                               tuple(trace), detected_at=detected)
        if k >= cap:
            return StepAResult("cap_reached", k, res, tuple(sorted(set(arcs))),
                               tuple(trace), detected_at=detected)
        ones, new_arcs = pass_arcs(res, mat_lo, mat_hi)
        res, double = step_a_pass(res)
        arcs += new_arcs
        trace.append(PassRecord(k, tuple(ones), tuple(new_arcs), res, double))
        k += 1
        if detected is None:
            sig = _collapsed_signature(res)
            if sig in seen:
                detected = k
            else:
                seen[sig] = k


def _materialization_done(res: Residual, arcs: list[tuple[int, int]],
                          lo: int, hi: int) -> bool:
    # positions never revive, so a zeroed range can gain no further arc ends
    if any(res.value_at(i) for i in range(lo, hi + 1)):
        return False
    return any(a <= lo and hi <= b for a, b in arcs)


@dataclass(frozen=True)
class StepBResult:
    bridging_arcs: tuple[Arc, ...]
    upper_labels: tuple[int, ...]
    b1_terminated: bool
    b2_terminated: bool
    n_value: int | None  # None when infinite
    anchor: int | None
    m2: M2Class


def _pick_anchor(res: Residual, mid: int) -> int | None:
    f_lo, f_hi = res.footprint()
    scan_hi = max(mid, f_hi) + len(res.right)
    scan_lo = min(mid, f_lo) - len(res.left)
    for i in range(mid, scan_hi + 1):
        if res.value_at(i) > 2:
            return i
    for i in range(mid - 1, scan_lo - 1, -1):
        if res.value_at(i) > 2:
            return i
    return None


def _next_gt2(res: Residual, i: int, bound: int) -> int | None:
    for j in range(i + 1, bound + 1):
        if res.value_at(j) > 2:
            return j
    return None


def _prev_gt2(res: Residual, i: int, bound: int) -> int | None:
    for j in range(i - 1, bound - 1, -1):
        if res.value_at(j) > 2:
            return j
    return None


def step_b(res: Residual, window: tuple[int, int], mat_lo: int, mat_hi: int,
           anchor: int | None = None) -> StepBResult:
    """Plant upper marked points and bridging arcs on a terminated residual.

    The anchor defaults to the value > 2 position nearest the window
    midpoint (preferring the right); it is the one free choice of the
    construction and amounts, on a bi-infinite upper boundary, to fixing the
    twist class representative.  Fountain families are materialized for
    lower indices in [mat_lo, mat_hi].
    """
    if res.has_one():
        raise QuiddityError("phase B requires a residual with no 1s")
    right_inf = any(v > 2 for v in res.right)
    left_inf = any(v > 2 for v in res.left)
    b1_term, b2_term = not right_inf, not left_inf
    f_lo, f_hi = res.footprint()
    if b1_term and b2_term:
        n_value = 1 + sum(v - 2 for v in res.values(f_lo, f_hi) if v > 2)
        # one period of each tail is all {0, 2}, hence so is the rest
    else:
        n_value = None

    lo, hi = window
    mid = (lo + hi) // 2
    if anchor is None:
        anchor = _pick_anchor(res, mid)
    elif res.value_at(anchor) <= 2:
        raise QuiddityError(f"anchor {anchor} does not have residual value > 2")

    arcs: list[tuple[int, int]] = []  # (lower index, upper temp position)

    if anchor is None:
        # every position is 0 or 2: a single upper point serves them all
        twos = [i for i in range(mat_lo, mat_hi + 1) if res.value_at(i) == 2]
        if not twos and not any(res.values(f_lo, f_hi)):
            raise QuiddityError(
                "residual vanished entirely; a valid frieze cannot reach this state")
        arcs += [(i, 0) for i in twos]
        temps = [0]
        m2 = m2_finite(1)
        labels = {0: 1}
    else:
        v0 = res.value_at(anchor)
        temps = list(range(v0 - 1))
        arcs += [(anchor, t) for t in temps]
        rightmost, next_right = v0 - 2, v0 - 1
        # grow rightward
        pos = anchor
        while True:
            bound = max(mat_hi, f_hi + len(res.right)) if n_value is not None else mat_hi
            nxt = _next_gt2(res, pos, bound)
            if nxt is None:
                for i in range(pos + 1, mat_hi + 1):
                    if res.value_at(i) == 2:
                        arcs.append((i, rightmost))
                break
            for i in range(pos + 1, nxt):
                if res.value_at(i) == 2 and mat_lo <= i <= mat_hi:
                    arcs.append((i, rightmost))
            if mat_lo <= nxt <= mat_hi or n_value is not None:
                arcs.append((nxt, rightmost))
                w = res.value_at(nxt)
                fresh = list(range(next_right, next_right + w - 2))
                temps += fresh
                arcs += [(nxt, t) for t in fresh]
                rightmost, next_right = fresh[-1], next_right + w - 2
            pos = nxt
        # grow leftward
        leftmost, next_left = 0, -1
        pos = anchor
        while True:
            bound = min(mat_lo, f_lo - len(res.left)) if n_value is not None else mat_lo
            prv = _prev_gt2(res, pos, bound)
            if prv is None:
                for i in range(pos - 1, mat_lo - 1, -1):
                    if res.value_at(i) == 2:
                        arcs.append((i, leftmost))
                break
            for i in range(pos - 1, prv, -1):
                if res.value_at(i) == 2 and mat_lo <= i <= mat_hi:
                    arcs.append((i, leftmost))
            if mat_lo <= prv <= mat_hi or n_value is not None:
                arcs.append((prv, leftmost))
                w = res.value_at(prv)
                fresh = list(range(next_left, next_left - (w - 2), -1))
                temps += fresh
                arcs += [(prv, t) for t in fresh]
                leftmost, next_left = fresh[-1], next_left - (w - 2)
            pos = prv

        m2 = _m2_from(True, b1_term, b2_term, n_value)
        temps_sorted = sorted(set(temps))
        if m2.kind == "finite":
            if len(temps_sorted) != n_value:
                raise AssertionError("upper point count disagrees with 1 + sum of excesses")
            labels = {t: r + 1 for r, t in enumerate(temps_sorted)}
        elif m2.kind == "nat_left":
            top = temps_sorted[-1]
            labels = {t: t - top for t in temps_sorted}
        elif m2.kind == "nat_right":
            bot = temps_sorted[0]
            labels = {t: t - bot for t in temps_sorted}
        else:  # bi-infinite: leftmost point of the anchor fan gets label 1
            labels = {t: t + 1 for t in temps_sorted}

    final_arcs = tuple(sorted(bridging(i, labels[t]) for i, t in set(arcs)))
    upper = tuple(sorted(labels[t] for t in set(temps)))
    return StepBResult(final_arcs, upper, b1_term, b2_term, n_value, anchor, m2)


def _m2_from(a_terminated: bool, b1: bool | None, b2: bool | None,
             n: int | None) -> M2Class:
    if not a_terminated:
        return M2_EMPTY
    if b1 is None or b2 is None:
        raise QuiddityError("terminated runs need both fountain flags")
    if b1 and b2:
        if n is None:
            raise QuiddityError("both fountains terminated yet the excess sum is infinite")
        return m2_finite(n)
    if n is not None:
        raise QuiddityError("finite excess sum is inconsistent with a running fountain")
    if b1 and not b2:
        return M2_NAT_LEFT
    if b2 and not b1:
        return M2_NAT_RIGHT
    return M2_BI_INFINITE


def m2_class(a_terminated: bool, b1_terminated: bool | None,
             b2_terminated: bool | None, n_value: int | None) -> M2Class:
    """Upper index class from the phase termination flags (pure lookup)."""
    return _m2_from(a_terminated, b1_terminated, b2_terminated, n_value)


@dataclass(frozen=True)
class SynthesisOutcome:
    triangulation: StripTriangulation
    m2_class: M2Class
    step_a_verdict: str
    step_a_passes: int
    residual: Residual
    trace: tuple[PassRecord, ...]
    b1_terminated: bool | None
    b2_terminated: bool | None
    n_value: int | None
    anchor: int | None


def _build(q: QuiddityDescriptor, window: tuple[int, int], margin: int,
           cap: int, anchor: int | None) -> SynthesisOutcome:
    lo, hi = window
    mat_lo, mat_hi = lo - margin, hi + margin
    a = run_step_a(q, mat_lo, mat_hi, cap)
    if a.verdict == "cap_reached":
        raise InconclusiveError(
            f"phase A hit the {cap}-pass cap without terminating or recurring")
    arcs = {peripheral(i, j) for i, j in a.arcs}
    if a.verdict == "nonterminating":
        tri = StripTriangulation(window, margin, M2_EMPTY, frozenset(arcs))
        return SynthesisOutcome(tri, M2_EMPTY, a.verdict, a.passes, a.residual,
                                a.trace, None, None, None, None)
    b = step_b(a.residual, window, mat_lo, mat_hi, anchor)
    tri = StripTriangulation(window, margin, b.m2, frozenset(arcs) | set(b.bridging_arcs))
    return SynthesisOutcome(tri, b.m2, a.verdict, a.passes, a.residual, a.trace,
                            b.b1_terminated, b.b2_terminated, b.n_value, b.anchor)


def _window_incident(tri: StripTriangulation) -> frozenset[Arc]:
    lo, hi = tri.window
    out = set()
    for arc in tri.arcs:
        ends = [arc.a.index] if arc.is_bridging() else [arc.a.index, arc.b.index]
        if any(lo <= e <= hi for e in ends):
            out.add(arc)
    return frozenset(out)


def psi(q: QuiddityDescriptor, window: tuple[int, int], cap: int = DEFAULT_CAP,
        margin: int | None = None, anchor: int | None = None,
        validation_depth: int | None = None) -> SynthesisOutcome:
    """Full synthesis pipeline for a validated quiddity descriptor.

    The margin starts at twice the window width (or the explicit value) and
    doubles until an enlargement adds no arc incident to the window; the
    stable build is returned.  Raises QuiddityError on invalid input and
    InconclusiveError when a cap prevents classification.
    """
    from .quiddity import DEFAULT_DEPTH
    report = validate(q, validation_depth or DEFAULT_DEPTH)
    if not report.ok:
        raise QuiddityError(
            f"not a valid quiddity sequence: t{report.witness[:2]} = {report.witness[2]}")
    lo, hi = window
    width = hi - lo + 1
    m = margin if margin is not None else max(MARGIN_WINDOW_FACTOR * width, 8)
    prev = _build(q, window, m, cap, anchor)
    for _ in range(MARGIN_DOUBLINGS):
        m *= 2
        cur = _build(q, window, m, cap, anchor)
        if _window_incident(cur.triangulation) == _window_incident(prev.triangulation):
            return cur
        prev = cur
    raise InconclusiveError(
        "window-incident arcs kept changing under margin doubling")
