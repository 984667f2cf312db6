"""Number-theoretic kernel: factorization, multiplicative functions, vectors."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groshevlab.arith import (
    count_vectors_with_gcd,
    divisor_count,
    divisor_sum,
    divisors,
    enumerate_vectors,
    factorize,
    gcd_vec,
    mobius,
    mobius_divisor_sum,
    prime_divisors,
    sup_norm,
    totient,
)


class TestFactorize:
    def test_hand_values(self):
        assert factorize(1) == []
        assert factorize(12) == [(2, 2), (3, 1)]
        assert factorize(97) == [(97, 1)]
        assert factorize(2**10) == [(2, 10)]

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-6)

    @given(st.integers(min_value=1, max_value=10**9))
    def test_product_reconstructs(self, n):
        prod = 1
        for p, k in factorize(n):
            prod *= p**k
        assert prod == n

    def test_large_prime_cofactor(self):
        p = 1_000_003  # beyond the sieve; verified prime by Miller-Rabin
        assert factorize(6 * p) == [(2, 1), (3, 1), (p, 1)]

    def test_composite_cofactor_rejected(self):
        # two primes beyond the sieve: out of the supported range, not silent
        with pytest.raises(ValueError, match="composite cofactor"):
            factorize(1_000_003 * 1_000_033)


class TestMultiplicative:
    def test_mobius_hand(self):
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    def test_totient_hand(self):
        assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]

    @given(st.integers(min_value=1, max_value=3000),
           st.integers(min_value=1, max_value=3000))
    def test_multiplicativity(self, a, b):
        if math.gcd(a, b) == 1:
            assert totient(a * b) == totient(a) * totient(b)
            assert mobius(a * b) == mobius(a) * mobius(b)

    @given(st.integers(min_value=1, max_value=5000))
    def test_totient_divisor_identity(self, n):
        assert sum(totient(d) for d in divisors(n)) == n

    def test_divisor_functions(self):
        assert divisor_count(12) == 6
        assert divisor_sum(12) == 28
        assert sorted(divisors(12)) == [1, 2, 3, 4, 6, 12]
        assert prime_divisors(360) == [2, 3, 5]

    def test_mobius_divisor_sum(self):
        # sum over l | n, gcd(l, b) = 1 of mu(l)/l^m
        assert mobius_divisor_sum(12, 1, 1) == Fraction(1, 3)  # (1-1/2)(1-1/3)
        assert mobius_divisor_sum(12, 1, 2) == Fraction(2, 3)  # only p=3 survives
        assert mobius_divisor_sum(1, 1, 1) == 1

    @given(st.integers(min_value=1, max_value=2000),
           st.integers(min_value=1, max_value=2), st.integers(min_value=1, max_value=30))
    def test_mobius_sum_is_euler_product(self, n, m, b):
        expected = Fraction(1)
        for p in prime_divisors(n):
            if b % p:
                expected *= 1 - Fraction(1, p**m)
        assert mobius_divisor_sum(n, m, b) == expected


class TestVectors:
    def test_gcd_vec(self):
        assert gcd_vec((4, 6)) == 2
        assert gcd_vec((-4, 6)) == 2
        assert gcd_vec((0, 5)) == 5
        with pytest.raises(ValueError):
            gcd_vec((0, 0))

    def test_sup_norm(self):
        assert sup_norm((3, -7)) == 7
        assert sup_norm((5,)) == 5

    @given(st.integers(min_value=1, max_value=60))
    def test_shell_count(self, s):
        vecs = enumerate_vectors(s, 2)
        assert len(vecs) == 8 * s
        assert len(set(vecs)) == 8 * s
        assert all(sup_norm(v) == s for v in vecs)

    def test_shell_n1(self):
        assert sorted(enumerate_vectors(3, 1)) == [(-3,), (3,)]

    @given(st.integers(min_value=1, max_value=200))
    def test_gcd_partition_of_shell(self, s):
        # counting identity: sum over d | s of #{|q| = s, gcd(q) = d} = 8s
        assert sum(count_vectors_with_gcd(s, d) for d in divisors(s)) == 8 * s

    def test_gcd_count_values(self):
        assert count_vectors_with_gcd(6, 6) == 8 * totient(1)
        assert count_vectors_with_gcd(6, 2) == 8 * totient(3)
        assert count_vectors_with_gcd(6, 4) == 0

    def test_gcd_count_matches_enumeration(self):
        for s in (1, 2, 6, 12):
            for d in divisors(s):
                explicit = sum(
                    1 for v in enumerate_vectors(s, 2) if gcd_vec(v) == d
                )
                assert count_vectors_with_gcd(s, d) == explicit
