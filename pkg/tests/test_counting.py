"""Polygon cuts and the counting methods on strip triangulations."""

from __future__ import annotations

import pytest

from friezes import FriezeView, QuiddityDescriptor, bci_entry, cc_entry, cut_polygon, psi
from friezes.counting import CutError
from friezes.strip import M2_BI_INFINITE, StripTriangulation, bridging

import refdata


def test_cut_through_single_fountain():
    tri = psi(refdata.LINEAR, (-5, 5)).triangulation
    cut = cut_polygon(tri, 0, 3)
    assert cut.kind == "bridging"
    assert cut.polygon.n == 7  # lowers -1..4 plus the one upper point
    assert cut.lower_map[-1] == 1 and cut.lower_map[4] == 6


def test_cut_along_peripheral_arc():
    tri = psi(refdata.MIXED_TAILS, (-8, 8)).triangulation
    cut = cut_polygon(tri, -2, -1)
    assert cut.kind == "peripheral"
    assert set(cut.lower_map) == {-3, -2, -1, 0}  # cut along (-3, 0)


def test_single_point_cut_has_enough_vertices():
    tri = psi(refdata.MIXED_TAILS, (-8, 8)).triangulation
    cut = cut_polygon(tri, 0, 0)
    assert cut.polygon.n >= 3


def test_cc_entry_conventions():
    tri = psi(refdata.MIXED_TAILS, (-6, 6)).triangulation
    for i in range(-4, 5):
        assert cc_entry(tri, i, i) == 0
        assert cc_entry(tri, i, i + 1) == 1
        assert bci_entry(tri, i, i) == 0
        assert bci_entry(tri, i, i + 1) == 1


def test_cc_entry_examples():
    linear = psi(refdata.LINEAR, (-5, 5)).triangulation
    assert cc_entry(linear, 0, 4) == 4
    zig = psi(refdata.ZIGZAG, (-5, 5)).triangulation
    assert bci_entry(zig, -5, -3) == 5
    assert cc_entry(zig, -5, -3) == 5


def test_quiddity_from_adjacent_band():
    tri = psi(refdata.MIXED_TAILS, (-6, 6)).triangulation
    for i in range(-5, 5):
        assert cc_entry(tri, i, i + 2) == refdata.MIXED_TAILS.value_at(i + 1)


@pytest.mark.parametrize("q", [refdata.LINEAR, refdata.BUMPED,
                               refdata.MIXED_TAILS, refdata.ZIGZAG,
                               QuiddityDescriptor.constant(3)])
def test_three_way_agreement(q):
    tri = psi(q, (-5, 5)).triangulation
    view = FriezeView(q)
    for i in range(-5, 6):
        for j in range(i, 6):
            want = view.entry(i, j)
            assert cc_entry(tri, i, j) == want, (i, j)
            assert bci_entry(tri, i, j) == want, (i, j)


def test_cut_invariance_between_cut_kinds():
    # pairs inside (-3, 0) have both a peripheral cut (along that arc) and a
    # bridging cut (fountains at -3 and 0); the counts must not depend on it
    tri = psi(refdata.MIXED_TAILS, (-8, 8)).triangulation
    view = FriezeView(refdata.MIXED_TAILS)
    for i, j in [(-2, -1), (-2, -2), (-1, -1)]:
        per = cut_polygon(tri, i, j, route="peripheral")
        bri = cut_polygon(tri, i, j, route="bridging")
        assert per.kind == "peripheral" and bri.kind == "bridging"
        assert per.polygon.n != bri.polygon.n
        want = view.entry(i, j)
        for cut in (per, bri):
            labels = cut.polygon.cc_labels(cut.lower_map[i])
            assert labels[cut.lower_map[j]] == want
            walk = [cut.lower_map[k] for k in range(i, j + 1)]
            assert cut.polygon.bci_count(walk) == want


def test_cut_error_when_nothing_flanks():
    bare = StripTriangulation((-2, 2), 1, M2_BI_INFINITE,
                              frozenset({bridging(0, 0), bridging(0, 1)}))
    with pytest.raises(CutError):
        cut_polygon(bare, 1, 2)


def test_count_precondition():
    tri = psi(refdata.LINEAR, (-3, 3)).triangulation
    with pytest.raises(Exception):
        cc_entry(tri, 2, 1)


def test_forced_peripheral_route_errors_without_an_arc():
    tri = psi(refdata.LINEAR, (-3, 3)).triangulation  # no peripheral arcs at all
    with pytest.raises(CutError):
        cut_polygon(tri, 0, 1, route="peripheral")
    with pytest.raises(Exception):
        cut_polygon(tri, 0, 1, route="sideways")


def test_band_entries_are_continuants_of_polygon_quiddity():
    # the counting band of a triangulated n-gon obeys the same tridiagonal
    # determinant formula as the infinite friezes
    from friezes import polygon_from_quiddity

    def continuant(vals):
        prev, cur = 1, vals[0]
        for v in vals[1:]:
            prev, cur = cur, v * cur - prev
        return cur

    p = polygon_from_quiddity(refdata.HEPTAGON_QUIDDITY)
    fp = p.frieze_pattern()
    quid = p.quiddity()
    for i in range(1, 8):
        for j in range(i + 2, i + 6):
            vals = [quid[(k - 1) % 7] for k in range(i + 1, j)]
            assert fp.entry(i, j) == continuant(vals), (i, j)
