"""The quiddity-to-strip synthesis: phase traces, classification, round trips."""

from __future__ import annotations

import pytest

from friezes import (QuiddityDescriptor, QuiddityError, psi, run_step_a,
                     step_a_pass, step_b, m2_class)
from friezes.synthesis import Residual, _collapsed_signature, _normalize

import refdata


def test_worked_example_pass_by_pass():
    out = psi(refdata.MIXED_TAILS, (-8, 8))
    assert out.step_a_verdict == "terminated" and out.step_a_passes == 2
    first, second = out.trace
    assert first.ones == (-1,) and first.arcs == ((-2, 0),)
    assert first.residual_after.values(-5, 2) == [3, 3, 4, 1, 0, 5, 2, 2]
    assert second.ones == (-2,) and second.arcs == ((-3, 0),)
    assert second.residual_after.values(-5, 2) == [3, 3, 3, 0, 0, 4, 2, 2]


def test_worked_example_classification_and_shape():
    out = psi(refdata.MIXED_TAILS, (-8, 8))
    assert out.m2_class.kind == "nat_left"
    assert out.b1_terminated is True and out.b2_terminated is False
    tri = out.triangulation
    # anchor vertex (0,0): two peripheral arcs plus a fan of three bridging arcs
    star = tri.lower_star(0)
    assert [(a.a.index, a.b.index) for a in star if a.is_peripheral()] == [(-3, 0), (-2, 0)]
    assert sorted(a.upper_index() for a in star if a.is_bridging()) == [-2, -1, 0]
    # the right tail shares the single right fountain, labeled 0
    for i in range(1, 9):
        assert [a.upper_index() for a in tri.lower_star(i)] == [0]
    # each left-tail vertex hangs from two consecutive upper points
    assert sorted(a.upper_index() for a in tri.lower_star(-3) if a.is_bridging()) == [-3, -2]
    assert sorted(a.upper_index() for a in tri.lower_star(-4) if a.is_bridging()) == [-4, -3]


def test_worked_example_round_trip_and_cleanliness():
    out = psi(refdata.MIXED_TAILS, (-8, 8))
    tri = out.triangulation
    quid = tri.quiddity_of()
    assert quid == {i: refdata.MIXED_TAILS.value_at(i) for i in range(-8, 9)}
    assert tri.special_upper_points() == []
    assert tri.is_admissible_window()
    tri.check_pairwise_noncrossing()


def test_constant_two_single_fountain():
    out = psi(refdata.LINEAR, (-5, 5))
    assert out.step_a_passes == 0
    assert out.m2_class.kind == "finite" and out.m2_class.size == 1
    assert out.n_value == 1
    tri = out.triangulation
    assert not tri.peripheral_arcs
    assert all(a.upper_index() == 1 for a in tri.bridging_arcs)
    assert tri.quiddity_of() == {i: 2 for i in range(-5, 6)}


def test_bumped_quiddity_gives_two_upper_points():
    out = psi(refdata.BUMPED, (-5, 5))
    assert out.n_value == 2
    assert out.m2_class.kind == "finite" and out.m2_class.size == 2
    tri = out.triangulation
    assert sorted(a.upper_index() for a in tri.lower_star(-1)) == [1, 2]
    assert all(a.upper_index() == 2 for a in tri.lower_star(2))
    assert all(a.upper_index() == 1 for a in tri.lower_star(-4))
    assert tri.quiddity_of() == {i: refdata.BUMPED.value_at(i) for i in range(-5, 6)}


def test_constant_three_is_bi_infinite():
    out = psi(QuiddityDescriptor.constant(3), (-4, 4))
    assert out.m2_class.kind == "bi_infinite"
    assert out.b1_terminated is False and out.b2_terminated is False
    tri = out.triangulation
    for i in range(-4, 5):
        ups = sorted(a.upper_index() for a in tri.lower_star(i))
        assert len(ups) == 2 and ups[1] == ups[0] + 1
    assert tri.quiddity_of() == {i: 3 for i in range(-4, 5)}


def test_zigzag_nonterminating_empty_upper_boundary():
    out = psi(refdata.ZIGZAG, (-5, 5))
    assert out.step_a_verdict == "nonterminating"
    assert out.m2_class.kind == "empty"
    tri = out.triangulation
    assert not tri.bridging_arcs
    assert tri.quiddity_of() == {i: refdata.ZIGZAG.value_at(i) for i in range(-5, 6)}
    assert tri.is_admissible_window()
    tri.check_pairwise_noncrossing()
    # the printed strip picture: ladder arcs around the bend
    arcs = {(a.a.index, a.b.index) for a in tri.peripheral_arcs}
    assert {(-2, 0), (-2, 1), (1, 3), (-2, 3), (-4, -2), (-4, 3), (-4, 5), (3, 5)} <= arcs


def test_zigzag_collapsed_recurrence_detected():
    result = run_step_a(refdata.ZIGZAG, -10, 10)
    assert result.verdict == "nonterminating"
    assert result.detected_at is not None and result.detected_at <= 6


def test_step_a_pass_simultaneous_update():
    res = _normalize(Residual.from_descriptor(refdata.ZIGZAG))
    after, double = step_a_pass(res)
    assert after.values(-4, 4) == [3, 0, 3, 0, 1, 2, 0, 3, 0]
    assert double  # the 5s between two 1s lose both slots in one pass


def test_step_a_pass_rejects_adjacent_ones():
    res = Residual((2,), (1, 1), (2,), 0)
    with pytest.raises(QuiddityError):
        step_a_pass(res)


def test_step_a_terminates_immediately_without_ones():
    result = run_step_a(QuiddityDescriptor.constant(4), -5, 5)
    assert result.verdict == "terminated" and result.passes == 0 and not result.arcs


def test_step_b_requires_terminated_residual():
    with pytest.raises(QuiddityError):
        step_b(Residual((2,), (1,), (2,), 0), (-2, 2), -4, 4)


def test_step_b_anchor_override_must_have_excess():
    res = Residual((2,), (), (2,), 0)
    with pytest.raises(QuiddityError):
        step_b(res, (-2, 2), -6, 6, anchor=0)


def test_m2_class_lookup_table():
    assert m2_class(False, None, None, None).kind == "empty"
    assert m2_class(True, True, True, 3).kind == "finite"
    assert m2_class(True, True, True, 3).size == 3
    assert m2_class(True, True, False, None).kind == "nat_left"
    assert m2_class(True, False, True, None).kind == "nat_right"
    assert m2_class(True, False, False, None).kind == "bi_infinite"
    with pytest.raises(QuiddityError):
        m2_class(True, True, True, None)
    with pytest.raises(QuiddityError):
        m2_class(True, False, True, 4)


def test_collapsed_signature_ignores_shift_and_zeros():
    a = Residual((3, 0), (1, 0, 0, 2), (0, 3), 0)
    b = Residual((3, 0), (1, 0, 0, 0, 0, 2), (0, 3), -7)
    assert _collapsed_signature(a) == _collapsed_signature(b)
    c = Residual((3, 0), (2, 0, 0, 1), (0, 3), 0)
    assert _collapsed_signature(a) != _collapsed_signature(c)


def test_psi_rejects_invalid_quiddity():
    with pytest.raises(QuiddityError):
        psi(QuiddityDescriptor((2,), (1, 1), (2,), 0), (-3, 3))


def test_dehn_invariance_of_quiddity():
    out = psi(QuiddityDescriptor.constant(3), (-4, 4))
    tri = out.triangulation
    base = tri.quiddity_of()
    for n in range(-3, 4):
        assert tri.dehn_twist(n).quiddity_of() == base


def test_two_anchors_are_dehn_equivalent_with_predicted_shift():
    q = QuiddityDescriptor.constant(3)
    run0 = psi(q, (-4, 4), anchor=0).triangulation
    run2 = psi(q, (-4, 4), anchor=2).triangulation
    n = run0.dehn_equivalent(run2)
    # moving the anchor right by two excess-1 positions shifts labels down by 2
    assert n == -2
    assert run0.dehn_twist(n).dehn_equivalent(run2) == 0


def test_margin_stability_default_pipeline():
    out_small = psi(refdata.MIXED_TAILS, (-4, 4), margin=9)
    out_big = psi(refdata.MIXED_TAILS, (-4, 4), margin=30)
    assert out_small.triangulation.quiddity_of() == out_big.triangulation.quiddity_of()


@pytest.mark.parametrize("q", [refdata.LINEAR, refdata.BUMPED,
                               refdata.MIXED_TAILS, refdata.ZIGZAG,
                               QuiddityDescriptor.constant(3)])
def test_outputs_are_noncrossing_and_window_maximal(q):
    tri = psi(q, (-5, 5)).triangulation
    tri.check_pairwise_noncrossing()
    tri.check_window_maximality()


def test_nat_right_class_and_labels():
    q = QuiddityDescriptor((2,), (), (3,), 0)
    out = psi(q, (-4, 4))
    assert out.m2_class.kind == "nat_right"
    assert out.b1_terminated is False and out.b2_terminated is True
    tri = out.triangulation
    assert min(a.upper_index() for a in tri.bridging_arcs) == 0  # leftmost label
    assert tri.quiddity_of() == {i: q.value_at(i) for i in range(-4, 5)}
    assert tri.special_upper_points() == []


def test_window_away_from_core_uses_anchor_fallback():
    out = psi(refdata.MIXED_TAILS, (2, 9))
    assert out.anchor == 0  # no excess right of the window midpoint
    assert out.m2_class.kind == "nat_left"
    assert out.triangulation.quiddity_of() == {
        i: refdata.MIXED_TAILS.value_at(i) for i in range(2, 10)}


def test_purely_periodic_two_three():
    q = QuiddityDescriptor.periodic((2, 3))
    out = psi(q, (-4, 4))
    assert out.m2_class.kind == "bi_infinite"
    tri = out.triangulation
    assert tri.quiddity_of() == {i: q.value_at(i) for i in range(-4, 5)}
    tri.check_pairwise_noncrossing()
    tri.check_window_maximality()


def test_lower_stars_agree_across_windows():
    small = psi(refdata.ZIGZAG, (-3, 3)).triangulation
    large = psi(refdata.ZIGZAG, (-6, 6)).triangulation
    for i in range(-3, 4):
        assert small.lower_star(i) == large.lower_star(i), i
    assert small.quiddity_of() == large.quiddity_of((-3, 3))


def test_peripheral_arc_iff_entry_one_on_goldens():
    from friezes import FriezeView
    for q in (refdata.LINEAR, refdata.BUMPED, refdata.MIXED_TAILS, refdata.ZIGZAG):
        tri = psi(q, (-5, 5)).triangulation
        view = FriezeView(q)
        peripherals = {(a.a.index, a.b.index) for a in tri.peripheral_arcs}
        for i in range(-5, 6):
            for j in range(i + 2, 6):
                assert (view.entry(i, j) == 1) == ((i, j) in peripherals), (q, i, j)


def test_bridging_arcs_extend_both_ways():
    # a lower point carrying a bridging arc has such neighbours on both sides
    for q in (refdata.BUMPED, refdata.MIXED_TAILS, QuiddityDescriptor.constant(3)):
        tri = psi(q, (-5, 5)).triangulation
        carriers = sorted({a.lower_index() for a in tri.bridging_arcs})
        lo, hi = tri.window
        for j in carriers:
            if lo <= j <= hi:
                assert any(p < j for p in carriers), (q, j)
                assert any(p > j for p in carriers), (q, j)


def test_corpus_outputs_are_clean():
    from corpus import bijection_corpus
    for k, q in enumerate(bijection_corpus()):
        tri = psi(q, (-4, 4)).triangulation
        tri.check_pairwise_noncrossing()
        if k < 20:
            tri.check_window_maximality()
