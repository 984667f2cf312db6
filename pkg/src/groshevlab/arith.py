"""Exact number-theoretic kernel.

Rationals, factorization, multiplicative functions, and enumeration of
integer vectors by sup norm.  Every value here is exact: rationals are
`fractions.Fraction`, everything else is a Python int.  All functions are
pure, so they are safe to call from concurrent tasks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

# The universal exact scalar of the package.  stdlib Fraction already
# guarantees the reduced-form invariant (gcd(|num|, den) = 1, den >= 1).
Rational = Fraction

_SIEVE_LIMIT = 10**6

# (prime, exponent) pairs with strictly increasing primes.
Factorization = list[tuple[int, int]]


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below 10^6 by Eratosthenes sieve."""
    limit = _SIEVE_LIMIT
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


def _is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Prime factorization of 1 <= n <= 2^63 by trial division.

    factorize(1) is the empty product [].  Cofactors surviving the 10^6
    sieve must be prime (checked), otherwise the input is out of the
    supported desk-scale range.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n!r}")
    if n > 2**63:
        raise ValueError(f"factorize supports n <= 2^63, got {n}")
    factors: Factorization = []
    rest = n
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    if rest > 1:
        if not _is_probable_prime(rest):
            raise ValueError(f"composite cofactor {rest} beyond trial-division range")
        factors.append((rest, 1))
    return factors


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n: int) -> int:
    """Euler totient from the factorization."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def divisor_count(n: int) -> int:
    result = 1
    for _, e in factorize(n):
        result *= e + 1
    return result


def divisor_sum(n: int) -> int:
    result = 1
    for p, e in factorize(n):
        result *= (p ** (e + 1) - 1) // (p - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def gcd_vec(q: Sequence[int]) -> int:
    """gcd of the absolute values of the components; rejects the zero vector."""
    if not any(q):
        raise ValueError("gcd_vec of the zero vector is undefined")
    return math.gcd(*[abs(c) for c in q])


def sup_norm(q: Sequence[int]) -> int:
    return max(abs(c) for c in q)


def enumerate_vectors(s: int, n: int) -> list[tuple[int, ...]]:
    """All integer vectors of dimension n with sup norm exactly s.

    Materialized only for n <= 2 (8s vectors for n = 2, two for n = 1);
    higher dimensions rely on closed formulas elsewhere.
    """
    if s < 1:
        raise ValueError("sup norm must be >= 1")
    if n == 1:
        return [(-s,), (s,)]
    if n == 2:
        out: list[tuple[int, ...]] = []
        for t in range(-s, s + 1):
            out.append((s, t))
            out.append((-s, t))
        for t in range(-s + 1, s):
            out.append((t, s))
            out.append((t, -s))
        return out
    raise ValueError(f"exact enumeration is only supported for n <= 2, got n={n}")


def count_vectors_with_gcd(s: int, d: int, n: int = 2) -> int:
    """Number of q in Z^2 with |q| = s and gcd(q) = d: 8*phi(s/d) when d | s.

    Dividing by d bijects these vectors with the primitive vectors of norm
    s/d, of which there are 8*phi(s/d).
    """
    if n != 2:
        raise ValueError("count_vectors_with_gcd is defined for n = 2")
    if s < 1 or d < 1:
        raise ValueError("s and d must be positive")
    if s % d:
        return 0
    return 8 * totient(s // d)


def mobius_divisor_sum(n: int, m: int = 1, b: int = 1) -> Fraction:
    """Exact sum over l | n with gcd(l, b) = 1 of mu(l) / l^m.

    Equals the Euler product over primes p | n with p not dividing b of
    (1 - p^-m); both sides are used as cross-checks of each other.
    """
    total = Fraction(0)
    for l in divisors(n):
        if math.gcd(l, b) == 1:
            total += Fraction(mobius(l), l**m)
    return total
