"""Descriptor indexing, shifting, and depth-bounded validation."""

from __future__ import annotations

import random

import pytest

from friezes import QuiddityDescriptor, QuiddityError, validate

import refdata


def test_constant_descriptor_value_at():
    assert refdata.LINEAR.value_at(7) == 2
    assert refdata.LINEAR.value_at(-1000) == 2


def test_mixed_tails_values():
    q = refdata.MIXED_TAILS
    assert q.value_at(-1) == 1
    assert q.value_at(-5) == 3
    assert q.values(-5, 2) == [3, 3, 4, 2, 1, 6, 2, 2]


def test_zigzag_window_values():
    assert refdata.ZIGZAG.values(-4, 4) == [5, 1, 5, 1, 2, 3, 1, 5, 1]


def test_tail_periodicity_and_core_agreement():
    rng = random.Random(7)
    for q in (refdata.MIXED_TAILS, refdata.ZIGZAG, refdata.BUMPED):
        core_end = q.core_start + len(q.core) - 1
        for _ in range(100):
            i = rng.randint(-200, 200)
            if q.core_start <= i <= core_end:
                assert q.value_at(i) == q.core[i - q.core_start]
            elif i < q.core_start:
                assert q.value_at(i) == q.value_at(i - len(q.left_period))
            else:
                assert q.value_at(i) == q.value_at(i + len(q.right_period))


def test_shift_moves_values():
    assert refdata.LINEAR.shift(5).value_at(0) == 2
    shifted = refdata.MIXED_TAILS.shift(1)
    assert shifted.value_at(0) == 1  # a_{-1} moved to index 0
    for i in range(-10, 11):
        assert shifted.value_at(i) == refdata.MIXED_TAILS.value_at(i - 1)


def test_shift_zero_is_identity_pointwise():
    q = refdata.ZIGZAG
    assert all(q.shift(0).value_at(i) == q.value_at(i) for i in range(-20, 21))


def test_shift_composes():
    q = refdata.MIXED_TAILS
    rng = random.Random(3)
    for _ in range(20):
        m, n = rng.randint(-9, 9), rng.randint(-9, 9)
        lhs = q.shift(m).shift(n)
        rhs = q.shift(m + n)
        assert lhs.values(-15, 15) == rhs.values(-15, 15)


def test_rejects_nonpositive_values_and_empty_tails():
    with pytest.raises(QuiddityError):
        QuiddityDescriptor((2,), (0,), (2,))
    with pytest.raises(QuiddityError):
        QuiddityDescriptor((), (1,), (2,))
    with pytest.raises(QuiddityError):
        QuiddityDescriptor((2,), (-3,), (2,))


def test_validate_constant_two_to_depth_fifty():
    report = validate(refdata.LINEAR, 50)
    assert report.ok and report.depth == 50 and report.witness is None


@pytest.mark.parametrize("c", [2, 3, 4, 5])
@pytest.mark.parametrize("depth", [8, 32, 64])
def test_validate_constants_at_various_depths(c, depth):
    assert validate(QuiddityDescriptor.constant(c), depth).ok


def test_adjacent_ones_invalid_with_band3_witness():
    q = QuiddityDescriptor((2,), (1, 1), (2,), core_start=0)
    report = validate(q)
    assert not report.ok
    i, j, value = report.witness
    assert j - i == 3 and value == 0
    assert (i, j) == (-1, 2)  # a_0 a_1 - 1 = 0, first in band-major scan order


def test_all_ones_invalid_at_band3():
    report = validate(QuiddityDescriptor.constant(1))
    assert not report.ok
    i, j, value = report.witness
    assert j - i == 3 and value == 0


def test_validate_scan_order_deterministic():
    q = QuiddityDescriptor((2,), (1, 1), (2,), core_start=0)
    assert validate(q).witness == validate(q).witness == (-1, 2, 0)


def test_validate_golden_descriptors():
    for q in (refdata.LINEAR, refdata.BUMPED, refdata.ZIGZAG, refdata.MIXED_TAILS):
        assert validate(q).ok


def test_validate_rejects_shallow_depth():
    with pytest.raises(QuiddityError):
        validate(refdata.LINEAR, 1)


def test_long_two_run_before_a_one_is_caught():
    # continuant(2^k, 1, 6) = 5 - k turns negative, so a left 2-tail feeding
    # a lone 1 cannot belong to any infinite frieze
    q = QuiddityDescriptor((2,), (1, 6), (2,), core_start=0)
    assert not validate(q).ok
