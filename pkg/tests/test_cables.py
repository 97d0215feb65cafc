import pytest
from hypothesis import given, strategies as st

from lensobstruct.cables import (CableParams, FrontStats, cable_genus, cable_identity_check,
                                 cable_tb_bounds, p_copy_front, twist_adjust)
from lensobstruct.errors import OutOfScope

fronts = st.builds(FrontStats, st.integers(-40, 40), st.integers(1, 20).map(lambda c: 2 * c))


def test_front_stats():
    assert FrontStats(3, 4).tb == 1
    for bad in (0, 3, -2):
        with pytest.raises(ValueError):
            FrontStats(0, bad)


def test_cable_params_normalization():
    cp = CableParams(-2, 3)
    assert (cp.p, cp.q) == (2, -3)
    with pytest.raises(ValueError):
        CableParams(4, 6)
    with pytest.raises(ValueError):
        CableParams(1, 5)


def test_tb_bound_examples():
    assert cable_tb_bounds(CableParams(3, 2), 1) == (6, 6)
    assert cable_tb_bounds(CableParams(2, -3), -1) == (-6, -6)
    assert cable_tb_bounds(CableParams(2, 7), 1) == (9, 14)
    with pytest.raises(OutOfScope):
        cable_tb_bounds(CableParams(3, -1), -1)


def test_p_copy_examples():
    assert p_copy_front(FrontStats(0, 2), 2) == FrontStats(-2, 4)
    assert p_copy_front(FrontStats(0, 2), 2).tb == -4
    big = p_copy_front(FrontStats(3, 4), 3)
    assert (big.writhe, big.cusps, big.tb) == (15, 12, 9)


def test_twist_examples():
    base = p_copy_front(FrontStats(0, 2), 2)
    assert twist_adjust(base, 2, -1).tb == base.tb - 2
    assert twist_adjust(base, 2, 0) == base
    base3 = p_copy_front(FrontStats(0, 2), 3)
    assert twist_adjust(base3, 3, 1).tb == base3.tb + 2


def test_genus_examples():
    assert cable_genus(CableParams(3, 2), 1) == 4
    assert cable_genus(CableParams(2, 7), 1) == 5
    assert cable_genus(CableParams(5, 1), 0) == 0
    with pytest.raises(OutOfScope):
        cable_genus(CableParams(2, -3), 1)


def test_identity_examples():
    assert cable_identity_check(CableParams(2, 7), 1)
    assert cable_identity_check(CableParams(2, 1), 0)
    assert cable_identity_check(CableParams(3, 5), 1)
    with pytest.raises(OutOfScope):
        cable_identity_check(CableParams(3, 2), 1)


@given(fronts, st.integers(2, 20))
def test_p_copy_scales_tb(front, p):
    assert p_copy_front(front, p).tb == p * p * front.tb


@given(fronts, st.integers(2, 12), st.integers(-20, 20))
def test_twists_shift_tb(front, p, k):
    out = twist_adjust(p_copy_front(front, p), p, k)
    step = -p if k < 0 else p - 1
    assert out.tb == p * p * front.tb + abs(k) * step


@given(st.integers(2, 15), st.integers(-60, 60), st.integers(-8, 8))
def test_bounds_ordered_and_realized(p, q, tb_bar):
    import math
    if math.gcd(p, q) != 1 or q == -1:
        return
    lower, upper = cable_tb_bounds(CableParams(p, q), tb_bar)
    assert lower <= upper
    if q < p * tb_bar:
        assert lower == upper == p * q
        # realize: p-copy of a tb_bar representative, then p*tb_bar - q negative twists
        rep = FrontStats(tb_bar + 1, 2)
        twisted = twist_adjust(p_copy_front(rep, p), p, -(p * tb_bar - q))
        assert twisted.tb == p * q
