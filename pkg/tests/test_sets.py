"""Approximation sets: psi functions, residue filters, interval geometry,
membership."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groshevlab.arith import totient
from groshevlab.dirichlet import PairTable, TargetScheme
from groshevlab.sets import (
    ApproxFunction,
    SetSpec,
    build_interval_set,
    membership,
    reduce_to_primitive,
    residue_filter,
    torus_map_image,
)

F = Fraction


class TestApproxFunction:
    def test_power(self):
        psi = ApproxFunction.power(F(1, 4), 1)
        assert psi(1) == F(1, 4)
        assert psi(10) == F(1, 40)
        assert psi.exact

    def test_capped(self):
        psi = ApproxFunction.capped(ApproxFunction.power(F(2, 5), 0))
        # base is constant 2/5; the cap brings q >= 3 down to 1/q
        assert psi(1) == F(2, 5)
        assert psi(2) == F(2, 5)
        assert psi(3) == F(1, 3)
        assert psi.is_capped

    def test_large_values_allowed(self):
        # values >= 1/2 are legal at evaluation time; only the exact set
        # constructors require delta < 1/2
        psi = ApproxFunction.power(F(1), 1)
        assert psi(1) == F(1)
        assert psi(3) == F(1, 3)

    def test_float_exponent(self):
        psi = ApproxFunction.power(1, 2.2)
        v = psi(100)
        assert isinstance(v, float)
        assert not psi.exact

    def test_table_and_sparse(self):
        t = ApproxFunction.from_table({1: F(1, 8), 2: F(1, 16)})
        assert t(1) == F(1, 8) and t(3) == 0
        s = ApproxFunction.sparse([2, 4, 8], F(1, 4))
        assert s(4) == F(1, 4) and s(5) == 0

    def test_zero(self):
        psi = ApproxFunction.zero()
        assert psi(7) == 0

    def test_domain(self):
        with pytest.raises(ValueError):
            ApproxFunction.zero()(0)


class TestResidueFilter:
    def test_plain_counts(self):
        assert residue_filter("plain", 6, TargetScheme.fixed_rational(0)) == list(range(6))

    @given(st.integers(min_value=1, max_value=200))
    def test_coprime_counts_totient(self, d):
        t = TargetScheme.fixed_rational(0)
        assert len(residue_filter("coprime", d, t)) == (totient(d) if d > 1 else 1)

    def test_tilde_equals_coprime_at_homogeneous(self):
        # pair at y = 0 is (0, 1): gcd(d, p) condition
        t = TargetScheme.fixed_rational(0)
        for d in range(1, 40):
            assert residue_filter("tilde", d, t) == residue_filter("coprime", d, t)

    def test_fixed_pair_filter(self):
        t = TargetScheme.fixed_pair(1, 3)
        # gcd(4, 3p + 1) = 1 <=> 3p + 1 odd <=> p even
        assert residue_filter("fixed-pair", 4, t) == [0, 2]


class TestIntervalSets:
    def test_hand_tilde_arcs(self):
        # d = 4, y = 1/3: pair (1, 3); admissible p with gcd(4, 3p+1)=1: {0, 2}
        t = TargetScheme.fixed_rational(F(1, 3))
        u = build_interval_set("tilde", 4, F(1, 10), t)
        assert u.measure == F(1, 10)
        # arcs at 1/12 and 7/12, radius (1/10)/4 = 1/40
        assert u.endpoint_strings() == ["7/120", "13/120", "67/120", "73/120"]

    def test_plain_measure(self):
        t = TargetScheme.fixed_rational(F(2, 7))
        for d in (1, 2, 9):
            assert build_interval_set("plain", d, F(1, 7), t).measure == F(2, 7)

    def test_zero_modulus_rejected(self):
        with pytest.raises(ValueError):
            build_interval_set("plain", 0, F(1, 10), TargetScheme.fixed_rational(0))

    def test_negative_modulus_same_measure(self):
        t = TargetScheme.fixed_rational(F(1, 3))
        a = build_interval_set("tilde", 5, F(1, 8), t)
        b = build_interval_set("tilde", -5, F(1, 8), t)
        assert a.measure == b.measure


class TestVectors:
    def test_reduce_to_primitive(self):
        assert reduce_to_primitive((4, 4)) == ((1, 1), 4)
        assert reduce_to_primitive((-6, 9)) == ((-2, 3), 3)

    def test_torus_map(self):
        img = torus_map_image((1, 1), [[F(3, 4)], [F(1, 2)]])
        assert img == (F(1, 4),)
        with pytest.raises(ValueError):
            torus_map_image((2, 2), [[F(1, 2)], [F(1, 2)]])


class TestMembership:
    @given(st.fractions(min_value=0, max_value=1, max_denominator=500),
           st.integers(min_value=1, max_value=20),
           st.sampled_from(["plain", "coprime", "tilde"]))
    @settings(max_examples=300)
    def test_membership_matches_interval_set(self, x, d, variant):
        """For (n, m) = (1, 1), membership agrees with the exact union."""
        target = TargetScheme.fixed_rational(F(1, 3))
        delta = F(1, 10)
        spec = SetSpec(1, 1, variant, (d,), delta, target)
        inside, witness = membership([[x]], spec)
        u = build_interval_set(variant, d, delta, target)
        assert inside == u.contains(x)
        if inside:
            assert witness is not None and witness.error < delta

    def test_zero_delta_empty(self):
        spec = SetSpec(1, 1, "plain", (3,), F(0), TargetScheme.fixed_rational(0))
        assert membership([[F(1, 3)]], spec) == (False, None)

    def test_vector_case(self):
        # q = (2, 1), x = (1/3, 1/4): qx = 11/12, y = 0 -> error 1/12
        spec = SetSpec(2, 1, "plain", (2, 1), F(1, 10),
                       TargetScheme.fixed_rational(0))
        inside, w = membership([[F(1, 3)], [F(1, 4)]], spec)
        assert inside and w.error == F(1, 12) and w.p == (1,)

    def test_float_boundary_flag(self):
        spec = SetSpec(1, 1, "plain", (1,), F(1, 10),
                       TargetScheme.fixed_rational(0))
        inside, w = membership([[0.1]], spec)  # exactly on the open boundary
        assert not inside
        assert w is not None and w.boundary

    def test_spec_validation(self):
        t = TargetScheme.fixed_rational(0)
        with pytest.raises(ValueError):
            SetSpec(2, 1, "plain", (0, 0), F(1, 10), t)
        with pytest.raises(ValueError):
            SetSpec(2, 1, "nope", (1, 0), F(1, 10), t)
        with pytest.raises(ValueError):
            SetSpec(2, 1, "fixed-pair", (1, 0), F(1, 10), t)
