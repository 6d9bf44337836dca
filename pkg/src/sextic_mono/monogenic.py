"""Monogenicity of x^6 + A x^(2k) + B, decided prime by prime.

Two independent engines are provided: the criteria specialised to the even
sextic (``theorem_general_prime_check``) and the general trinomial criteria
of Jakhar, Khanduja and Sangwan (``jks_prime_check``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import ArithmeticDomainError, is_prime, mmod, prime_divisors, valuation
from .galois import f_is_irreducible
from .poly import IntPoly, gcd_mod_p
from .trinomial import Trinomial, delta, disc_f, swan_general


def _residue_set(k: int) -> frozenset[tuple[int, int]]:
    return frozenset(
        {
            (0, 2), (0, 4), (0, 5), (0, 7),
            (3, 1), (3, 2), (3, 8), (3, 10 - 3 * k),
            (6, 1), (6, 5), (6, 8), (6, 3 * k + 1),
        }
    )


# (A mod 9, B mod 9) classes for which 3 passes when 3 | A and 3 does not divide B
R = {1: _residue_set(1), 2: _residue_set(2)}
assert R[1] - R[2] == {(3, 7), (6, 4)} and R[2] - R[1] == {(3, 4), (6, 7)}

MOD4_PASS_2_DIVIDES_A = frozenset({(0, 1), (2, 3)})


@dataclass(frozen=True)
class MonogenicVerdict:
    monogenic: bool
    checked_primes: tuple[tuple[int, int, bool], ...] = ()
    failing_prime: int | None = None
    reason: str | None = None
    # "per-prime" verdicts list every prime of disc(f); "explicit-conditions" ones list none
    basis: str = "per-prime"

    @property
    def applicable(self) -> bool:
        return self.reason is None


NOT_APPLICABLE_REDUCIBLE = MonogenicVerdict(False, reason="reducible")


def delta_f_primes(T: Trinomial) -> tuple[int, ...]:
    """Distinct primes of disc(f) = -64 B^(2k-1) delta^2, from 2, B and delta separately."""
    ps = {2} | set(prime_divisors(T.B))
    d = delta(T)
    if d:
        ps |= set(prime_divisors(d))
    return tuple(sorted(ps))


def theorem_general_prime_check(T: Trinomial, p: int) -> tuple[int, bool]:
    """Return (condition number, passed) for a prime p dividing disc(f)."""
    if disc_f(T) % p:
        raise ArithmeticDomainError(f"{p} does not divide disc(f)")
    A, B, k = T.A, T.B, T.k
    pA, pB = A % p == 0, B % p == 0
    if pA and pB:
        return 1, B % (p * p) != 0
    if pA:
        if p == 2:
            return 2, (mmod(A, 4), mmod(B, 4)) in MOD4_PASS_2_DIVIDES_A
        if p == 3:
            return 2, (mmod(A, 9), mmod(B, 9)) in R[k]
        return 2, False
    if pB:
        if p == 2:
            return 3, (mmod(A, 4), mmod(B, 4)) == (3, 2)
        # odd p: p must exactly divide B (see decisions ledger)
        return 3, B % (p * p) != 0
    if p == 2:
        return 4, True
    return 5, delta(T) % (p * p) != 0


def is_monogenic(T: Trinomial) -> MonogenicVerdict:
    if not f_is_irreducible(T):
        return NOT_APPLICABLE_REDUCIBLE
    checks = []
    failing = None
    for p in delta_f_primes(T):
        cond, ok = theorem_general_prime_check(T, p)
        checks.append((p, cond, ok))
        if not ok and failing is None:
            failing = p
    return MonogenicVerdict(failing is None, tuple(checks), failing)


def jks_prime_check(n: int, m: int, A: int, B: int, p: int) -> bool:
    """Whether p does not divide the index for x^n + A x^m + B (general trinomial criteria)."""
    if not 0 < m < n:
        raise ArithmeticDomainError("need 0 < m < n")
    if not is_prime(p):
        raise ArithmeticDomainError(f"{p} is not prime")
    if swan_general(n, m, A, B) % p:
        raise ArithmeticDomainError(f"{p} does not divide the discriminant")
    d0 = math.gcd(n, m)
    n1, m1 = n // d0, m // d0
    pA, pB = A % p == 0, B % p == 0
    if pA and pB:
        return B % (p * p) != 0
    if pA:
        j = valuation(p, n)
        a2 = A // p
        b1 = (B + (-B) ** (p**j)) // p
        if a2 % p == 0 and b1 % p:
            return True
        # the sign between the two terms is "-": checked against Dedekind's criterion
        return (a2 * ((-B) ** m1 * a2**n1 - (-b1) ** n1)) % p != 0
    if pB:
        l = valuation(p, n - m)
        a1 = (A + (-A) ** (p**l)) // p
        b2 = B // p
        if a1 % p == 0 and b2 % p:
            return True
        return (a1 * b2 ** (m - 1) * ((-A) ** m1 * a1 ** (n1 - m1) - (-b2) ** (n1 - m1))) % p != 0
    if m % p == 0:
        r = min(valuation(p, n), valuation(p, m))
        s_prime, s = n // p**r, m // p**r
        G = IntPoly.from_terms({s_prime: 1, s: A, 0: B})
        inner = IntPoly.from_terms({s: -A, 0: -B}) ** (p**r)
        num = IntPoly.from_terms({s * p**r: A, 0: B}) + inner
        assert all(c % p == 0 for c in num.coeffs)
        H = IntPoly(c // p for c in num.coeffs)
        return gcd_mod_p(G, H, p).degree == 0
    e = B ** (n1 - m1) * n1**n1 - (-1) ** m1 * A**n1 * m1**m1 * (m1 - n1) ** (n1 - m1)
    return e % (p * p) != 0
