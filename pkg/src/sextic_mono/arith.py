"""Exact integer arithmetic: factorization, valuations, square tests."""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

SIEVE_LIMIT = 1 << 16
# trial division stops here; any composite cofactor goes to rho
_TRIAL_CUTOFF = 4096
# Miller-Rabin with these bases is deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class ArithmeticDomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES: list[int] | None = None


def small_primes() -> list[int]:
    """All primes below ``SIEVE_LIMIT`` (computed once per process)."""
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = _sieve(SIEVE_LIMIT)
    return _SMALL_PRIMES


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test; deterministic below ~3.3e24, strong-PRP battery above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + _EXTRA_BASES
    return all(_strong_probable_prime(n, a) for a in bases)


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def reassemble(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out


def _factor_positive(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    primes = small_primes()
    for p in primes[: bisect_right(primes, _TRIAL_CUTOFF)]:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n == 1:
        return out
    # seeded from the input so results are reproducible
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent(m, rng)
        stack += [d, m // d]
    return out


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    if n == 0:
        raise ArithmeticDomainError("cannot factor 0")
    parts = _factor_positive(abs(n))
    return Factorization(n, 1 if n > 0 else -1, tuple(sorted(parts.items())))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes()


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise ArithmeticDomainError("squarefree test undefined for 0")
    return all(e == 1 for _, e in factorize(n).factors)


def radical(n: int) -> int:
    if n == 0:
        raise ArithmeticDomainError("radical undefined for 0")
    return math.prod(factorize(n).primes())


def valuation(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    if n == 0:
        raise ArithmeticDomainError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ArithmeticDomainError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def strip_primes(n: int, primes) -> int:
    """Divide out every power of each listed prime from ``n``."""
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def mmod(n: int, m: int) -> int:
    if m < 2:
        raise ArithmeticDomainError("modulus must be at least 2")
    return n % m


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0`` in increasing order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
