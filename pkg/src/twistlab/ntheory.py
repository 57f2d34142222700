"""Elementary number theory: primality, Legendre symbols, valuations,
squarefree parts and prime generation by a segmented sieve."""

from __future__ import annotations

from math import isqrt
from typing import Iterator

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SEGMENT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact far beyond 64-bit inputs)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1}; p must be an odd prime."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def unit_part(n: int, p: int) -> int:
    """n with all factors of p removed (sign kept)."""
    return n // p ** valuation(n, p)


def squarefree_part(n: int) -> int:
    """The squarefree integer representing n modulo rational squares.

    Computed by trial division; exact for all inputs, intended for the
    moderately sized twist parameters this package works with.
    """
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e & 1:
                result *= d
        d += 1 if d == 2 else 2
    return sign * result * n


def _small_primes(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> Iterator[int]:
    """Primes p with lo <= p < hi, in increasing order (segmented sieve)."""
    lo = max(lo, 2)
    if lo >= hi:
        return
    base = _small_primes(isqrt(hi - 1))
    for p in base:
        if p >= hi:
            return
        if p >= lo:
            yield p
    start = max(lo, base[-1] + 1 if base else 2)
    while start < hi:
        end = min(start + _SEGMENT, hi)
        flags = bytearray([1]) * (end - start)
        for p in base:
            first = max(p * p, (start + p - 1) // p * p)
            for m in range(first, end, p):
                flags[m - start] = 0
        for i, f in enumerate(flags):
            if f:
                yield start + i
        start = end


def primes_up_to(limit: int) -> Iterator[int]:
    """Primes p <= limit in increasing order."""
    return primes_in_range(2, limit + 1)
