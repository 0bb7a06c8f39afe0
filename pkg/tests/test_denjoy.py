from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chabauty_rz import (
    BASEPOINT,
    IRRATIONAL,
    InvalidParameter,
    Interval,
    OnCircle,
    Unresolved,
    UnresolvedInput,
    blowup_interval_start,
    blowup_total_length,
    denjoy_xi,
    glue_boundary,
    slope_from_lambda,
    winding_count,
    winding_count_sampled,
)


class TestLayout:
    def test_total_lengths(self):
        # L_B = 1 + sum phi(b)/b^3 over b <= B
        assert blowup_total_length(1) == 2
        assert blowup_total_length(2) == F(17, 8)
        assert blowup_total_length(3) == F(475, 216)

    def test_interval_starts(self):
        assert blowup_interval_start(F(0), 2) == 0
        assert blowup_interval_start(F(1, 2), 2) == F(3, 2)
        assert blowup_interval_start(F(1, 3), 3) == F(1, 3) + 1

    def test_start_rejects_deep_rational(self):
        with pytest.raises(InvalidParameter):
            blowup_interval_start(F(1, 5), 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 20))
    def test_total_is_increasing_and_bounded(self, B):
        assert blowup_total_length(B) < blowup_total_length(B + 1)
        # tail over b > B is below 1/B
        assert blowup_total_length(200) - blowup_total_length(B) < F(1, B)


class TestLocation:
    def test_interval_midpoint(self):
        # u chosen so the arc position is the middle of I_{1/2} at B = 2
        got = denjoy_xi(F(25, 34), 2)
        assert got == Interval(F(1, 2), F(1, 2))

    def test_interval_origin(self):
        assert denjoy_xi(F(0), 2) == Interval(F(0), F(0))

    def test_gap_point(self):
        assert denjoy_xi(F(10, 17), 2) is IRRATIONAL

    def test_guard_band(self):
        # just past the right end of I_0: inside the width/B^2 guard
        assert denjoy_xi(F(9, 17), 2) == Unresolved(2)

    def test_domain_checks(self):
        with pytest.raises(InvalidParameter):
            denjoy_xi(F(3, 2), 8)
        with pytest.raises(InvalidParameter):
            denjoy_xi(F(1, 2), 0)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**16 - 1))
    def test_located_positions_are_consistent(self, j):
        u = F(j, 2**16)
        got = denjoy_xi(u, 16)
        if isinstance(got, Interval):
            start = blowup_interval_start(got.rational, 16)
            width = F(1, got.rational.denominator**3)
            assert u * blowup_total_length(16) == start + got.lam * width
            assert 0 <= got.lam <= 1


class TestSlope:
    def test_midpoint_is_zero(self):
        assert slope_from_lambda(F(1, 2)) == 0

    def test_strictly_increasing(self):
        lams = [F(j, 10) for j in range(1, 10)]
        ts = [slope_from_lambda(l) for l in lams]
        assert all(a < b for a, b in zip(ts, ts[1:]))


class TestGluing:
    def test_interval_wraps_to_circle(self):
        got = glue_boundary(3, Interval(F(1, 2), F(1, 2)))
        assert got == OnCircle(6, F(0))

    def test_degenerate_cone(self):
        assert glue_boundary(0, Interval(F(1, 2), F(1, 2))) is BASEPOINT

    def test_irrational_data(self):
        assert glue_boundary(2, IRRATIONAL) is BASEPOINT

    def test_interval_ends(self):
        assert glue_boundary(2, Interval(F(1, 2), F(0))) is BASEPOINT
        assert glue_boundary(2, Interval(F(1, 2), F(1))) is BASEPOINT

    def test_unresolved_rejected(self):
        with pytest.raises(UnresolvedInput):
            glue_boundary(2, Unresolved(8))


class TestSampledWinding:
    # precision 8 puts wide guard bands around interval ends and most small
    # grids hit one; precision 64 with a 1024 grid stays clear of them
    def test_small_cases(self):
        for k, m in [(1, 1), (1, 2), (1, 4), (2, 2), (2, 4), (2, 3)]:
            assert winding_count_sampled(k, m, 1024, 64) == winding_count(k, m)

    def test_zero_off_multiples(self):
        assert winding_count_sampled(3, 4, 1024, 64) == 0

    def test_grid_validation(self):
        with pytest.raises(InvalidParameter):
            winding_count_sampled(1, 1, 4, 8)
