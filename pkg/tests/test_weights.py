"""Weight family values, validity scanning and the dominance order."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negcoeff import (
    ClassParams,
    IndexBelowRange,
    InvalidWeightFamily,
    MismatchedGapIndex,
    ParameterOutOfRange,
    deficiency,
    dominates,
    validity,
    weight,
)
from negcoeff.weights import exponent_scale, weight_value
from conftest import random_member

betas = st.sampled_from([0.0, 0.25, 0.5, 1.0, 2.0])


class TestWeight:
    def test_integral_beta_zero_collapses(self):
        assert weight(2, ClassParams(1, 1, 0.0, 1, "integral")) == 0.25

    def test_dual_bracket(self):
        # hand evaluation: 2 * (2 * 2 - 1) = 6
        assert weight(2, ClassParams(1, 1, 1.0, 1, "dual")) == 6.0

    def test_m_zero_bracket_is_one(self):
        for mode in ("integral", "dual"):
            assert weight(3, ClassParams(0, 0, 5.0, 1, mode)) == 1.0

    def test_k_below_range(self):
        with pytest.raises(IndexBelowRange):
            weight(2, ClassParams(1, 1, 0.0, 2, "integral"))

    @given(st.integers(2, 64), st.integers(0, 3), st.integers(0, 3), betas)
    @settings(max_examples=80, deadline=None)
    def test_exponent_shift(self, k, n, m, beta):
        shifted = weight_value(k, n + 1, m, beta, "integral")
        expected = weight_value(k, n, m, beta, "integral") / k
        assert shifted == pytest.approx(expected, rel=1e-15)

    @given(st.integers(2, 64), st.integers(0, 3), st.integers(0, 3), st.sampled_from(["integral", "dual"]))
    @settings(max_examples=80, deadline=None)
    def test_beta_zero_is_pure_power(self, k, n, m, mode):
        assert weight_value(k, n, m, 0.0, mode) == pytest.approx(
            exponent_scale(k, n + m, mode), rel=1e-15
        )

    def test_params_validation(self):
        with pytest.raises(ParameterOutOfRange):
            ClassParams(-1, 0, 0.0, 1, "integral")
        with pytest.raises(ParameterOutOfRange):
            ClassParams(0, 0, -0.5, 1, "integral")
        with pytest.raises(ParameterOutOfRange):
            ClassParams(0, 0, 0.0, 0, "integral")
        with pytest.raises(ParameterOutOfRange):
            ClassParams(0, 0, 0.0, 1, "primal")


class TestValidity:
    def test_integral_beta_one_fails_at_two(self):
        report = validity(ClassParams(1, 1, 1.0, 1, "integral"), 64)
        assert not report.valid
        assert report.first_failure_k == 2
        assert report.tail_verdict == "negative"

    def test_dual_beta_one_valid(self):
        report = validity(ClassParams(1, 1, 1.0, 1, "dual"), 64)
        assert report.valid and report.first_failure_k is None
        assert report.tail_verdict == "positive"

    def test_beta_zero_always_valid(self):
        for mode in ("integral", "dual"):
            assert validity(ClassParams(2, 2, 0.0, 1, mode), 64).valid

    def test_tail_overrules_short_scan(self):
        # Integral, beta = 0.2, m = 1: w(k) = (1.2/k - 0.2) stays positive up
        # to k = 5 but crosses zero at k = 6; a K = 4 scan alone would pass.
        report = validity(ClassParams(0, 1, 0.2, 1, "integral"), 4)
        assert not report.valid
        assert report.first_failure_k is None
        assert report.tail_verdict == "negative"

    def test_scan_limit_validation(self):
        with pytest.raises(ParameterOutOfRange):
            validity(ClassParams(0, 0, 0.0, 2, "dual"), 2)


class TestDominates:
    def test_deeper_integral_exponent_dominates(self):
        p1 = ClassParams(2, 1, 0.0, 1, "integral")
        p2 = ClassParams(1, 1, 0.0, 1, "integral")
        assert dominates(p1, p2, 64)

    def test_reflexive(self):
        p = ClassParams(1, 2, 0.5, 1, "dual")
        assert dominates(p, p, 64)

    def test_dual_beta_ordering(self):
        p_small = ClassParams(1, 1, 0.5, 1, "dual")
        p_large = ClassParams(1, 1, 1.0, 1, "dual")
        assert dominates(p_small, p_large, 64)
        assert not dominates(p_large, p_small, 64)

    def test_requires_matching_gap(self):
        with pytest.raises(MismatchedGapIndex):
            dominates(ClassParams(0, 0, 0.0, 1, "dual"), ClassParams(0, 0, 0.0, 2, "dual"), 64)

    def test_requires_valid_families(self):
        with pytest.raises(InvalidWeightFamily):
            dominates(
                ClassParams(1, 1, 1.0, 1, "integral"), ClassParams(1, 1, 0.0, 1, "integral"), 64
            )

    @given(
        st.integers(0, 2),
        st.integers(0, 2),
        st.permutations([0.25, 0.5, 1.0]),
    )
    @settings(max_examples=40, deadline=None)
    def test_transitive_on_dual_families(self, n, m, beta_triple):
        b1, b2, b3 = sorted(beta_triple)
        p1 = ClassParams(n, m, b1, 1, "dual")
        p2 = ClassParams(n, m, b2, 1, "dual")
        p3 = ClassParams(n, m, b3, 1, "dual")
        if dominates(p1, p2, 48) and dominates(p2, p3, 48):
            assert dominates(p1, p3, 48)

    def test_membership_implication(self):
        rng = random.Random(23)
        p1 = ClassParams(1, 1, 0.5, 1, "dual")
        p2 = ClassParams(1, 1, 1.0, 1, "dual")
        assert dominates(p1, p2, 64)
        for _ in range(100):
            f = random_member(rng, p2, sigma=rng.uniform(0.3, 1.5))
            if deficiency(f, p2).member:
                assert deficiency(f, p1).member
