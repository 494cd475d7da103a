"""Kernel tests: gamma, Pochhammer, 2F1, terminating pFq, accumulators."""

import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legdual.errors import MaxTermsError, NotTerminatingError
from legdual.hypergeom import (
    DEFAULT_POLICY,
    KahanSum,
    TruncationPolicy,
    gamma,
    gauss_2f1,
    is_nonpos_int,
    nonpos_int_distance,
    pfq_terminating,
    pochhammer,
    recip_gamma,
    terminating_index,
)

mp.mp.dps = 30


def _mp_close(ours, theirs, rel=1e-13):
    theirs = complex(theirs)
    assert abs(ours - theirs) <= rel * max(abs(theirs), 1e-300)


finite_complex = st.complex_numbers(
    min_magnitude=0.0, max_magnitude=20.0, allow_nan=False, allow_infinity=False
)


class TestPochhammer:
    def test_known_value(self):
        assert pochhammer(0.5, 2) == 0.75

    def test_empty_product(self):
        assert pochhammer(3.7 + 2j, 0) == 1.0

    def test_exact_zero_at_nonpositive_integer(self):
        assert pochhammer(-3, 5) == 0.0
        assert pochhammer(0.0, 4) == 0.0

    @given(finite_complex, st.integers(0, 12))
    @settings(max_examples=80, deadline=None)
    def test_recurrence(self, a, n):
        assert cmath.isclose(
            pochhammer(a, n + 1), pochhammer(a, n) * (a + n),
            rel_tol=1e-12, abs_tol=1e-290,
        )

    @given(finite_complex, st.integers(0, 10))
    @settings(max_examples=50, deadline=None)
    def test_matches_mpmath(self, a, n):
        _mp_close(pochhammer(a, n), mp.rf(mp.mpc(a), n), rel=1e-11)


class TestGamma:
    @pytest.mark.parametrize("z", [
        1.0, 0.5, 4.2, -0.7, -3.3, 12.0,
        0.5 + 0.2j, -1.4 + 2.7j, 3.0 - 4.0j, 0.001 + 0.001j, 25.0 + 10.0j,
    ])
    def test_matches_mpmath(self, z):
        _mp_close(gamma(z), mp.gamma(mp.mpc(z)), rel=1e-13)

    def test_half_integer(self):
        assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-15

    def test_factorials(self):
        for n in range(1, 15):
            assert abs(gamma(n + 1) / math.factorial(n) - 1.0) < 1e-13

    @given(st.complex_numbers(min_magnitude=0.1, max_magnitude=20.0,
                              allow_nan=False, allow_infinity=False))
    @settings(max_examples=80, deadline=None)
    def test_recurrence(self, z):
        if nonpos_int_distance(z) < 0.05 or nonpos_int_distance(z + 1) < 0.05:
            return
        lhs = gamma(z + 1)
        rhs = z * gamma(z)
        assert abs(lhs - rhs) <= 1e-11 * max(abs(lhs), abs(rhs), 1e-290)

    def test_reflection(self):
        for z in (0.3 + 0.4j, -0.7 + 1.1j, 0.25):
            lhs = gamma(z) * gamma(1.0 - z)
            rhs = cmath.pi / cmath.sin(cmath.pi * z)
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


class TestRecipGamma:
    def test_exact_zero_at_poles(self):
        for k in range(0, 8):
            assert recip_gamma(-k) == 0.0

    def test_entire_elsewhere(self):
        for z in (0.5, 2.0 + 1.0j, -2.5):
            assert abs(recip_gamma(z) * gamma(z) - 1.0) < 1e-12


class TestIntegerPredicates:
    def test_nonpos_int_distance(self):
        assert nonpos_int_distance(-3.0) == 0.0
        assert abs(nonpos_int_distance(-2.5) - 0.5) < 1e-15
        assert abs(nonpos_int_distance(1.0) - 1.0) < 1e-15

    def test_is_nonpos_int(self):
        assert is_nonpos_int(0.0)
        assert is_nonpos_int(-5.0 + 0j)
        assert not is_nonpos_int(2.0)
        assert not is_nonpos_int(-1.5)

    def test_terminating_index(self):
        assert terminating_index(-4.0) == 4
        assert terminating_index(0.0) == 0
        assert terminating_index(2.3) is None
        assert terminating_index(-3.0 + 1e-6j) is None


class TestGauss2F1:
    def test_geometric_special_case(self):
        # 2F1(1, b; b; t) = 1/(1-t)
        sv = gauss_2f1(1.0, 0.7, 0.7, 0.5)
        assert abs(sv.value - 2.0) < 1e-12
        assert sv.converged

    @pytest.mark.parametrize("a,b,c,t", [
        (0.3, 0.7, 1.2, 0.4),
        (0.5 + 0.2j, -0.3, 1.1, 0.25),
        (-1.2 + 0.5j, 2.0 - 1.0j, 3.5 + 0.1j, -0.6),
        (2.5, 1.5, 0.8, 0.3),
    ])
    def test_matches_mpmath(self, a, b, c, t):
        sv = gauss_2f1(a, b, c, t)
        _mp_close(sv.value, mp.hyp2f1(*(mp.mpc(v) for v in (a, b, c)), mp.mpf(t)))

    def test_terminating_polynomial(self):
        # 2F1(-2, b; c; t) is a quadratic; exact finite sum
        a, b, c, t = -2.0, 1.3, 0.9, 0.7
        sv = gauss_2f1(a, b, c, t)
        expect = 1.0 + a * b / c * t + a * (a + 1) * b * (b + 1) / (c * (c + 1) * 2) * t * t
        assert abs(sv.value - expect) < 1e-13

    def test_max_terms_enforced(self):
        policy = TruncationPolicy(rel_tol=1e-13, max_terms=5)
        with pytest.raises(MaxTermsError):
            gauss_2f1(0.3, 0.7, 1.2, 0.9, policy)


class TestPfqTerminating:
    def test_reduces_to_2f1(self):
        v = pfq_terminating([-3.0, 1.2], [0.7], 0.45, 3)
        sv = gauss_2f1(-3.0, 1.2, 0.7, 0.45)
        assert abs(v - sv.value) < 1e-13

    def test_3f2_against_mpmath(self):
        v = pfq_terminating([-4.0, 0.5, 1.1], [0.9, 2.2], 0.8, 4)
        ref = mp.hyper([-4, '0.5', '1.1'], ['0.9', '2.2'], '0.8')
        _mp_close(v, ref)


class TestKahanSum:
    def test_compensation_beats_naive(self):
        ks = KahanSum()
        naive = 0.0
        for _ in range(10**4):
            ks.add(0.1)
            naive += 0.1
        assert abs(ks.value().real - 1000.0) < 1e-12
        assert abs(naive - 1000.0) > 1e-11
