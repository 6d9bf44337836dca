"""The even sextic trinomials x^6 + A x^(2k) + B and their derived quantities."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import ArithmeticDomainError
from .poly import IntPoly


class TrinomialError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Trinomial:
    k: int
    A: int
    B: int

    def __post_init__(self):
        if self.k not in (1, 2):
            raise TrinomialError(f"k must be 1 or 2, got {self.k}")
        if self.A == 0 or self.B == 0:
            raise TrinomialError("A and B must be nonzero")

    def __str__(self) -> str:
        return f"x^6 {'+' if self.A > 0 else '-'} {abs(self.A)}*x^{2 * self.k} {'+' if self.B > 0 else '-'} {abs(self.B)}"

    @property
    def f(self) -> IntPoly:
        return IntPoly.from_terms({6: 1, 2 * self.k: self.A, 0: self.B})

    @property
    def g(self) -> IntPoly:
        return IntPoly.from_terms({3: 1, self.k: self.A, 0: self.B})


def make(k: int, A: int, B: int) -> Trinomial:
    return Trinomial(k, A, B)


def delta(T: Trinomial) -> int:
    return 4 * T.A**3 + 27 * T.B ** (3 - T.k)


def swan_general(n: int, m: int, A: int, B: int) -> int:
    """Discriminant of x^n + A x^m + B by the closed trinomial formula."""
    if not 0 < m < n:
        raise ArithmeticDomainError("need 0 < m < n")
    if B == 0:
        raise ArithmeticDomainError("need B != 0")
    d = math.gcd(n, m)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    sign_nd = -1 if (n // d) % 2 else 1
    inner = n ** (n // d) * B ** ((n - m) // d) - sign_nd * (n - m) ** ((n - m) // d) * m ** (m // d) * A ** (n // d)
    # B^(m-1) with m >= 1 is an integer
    return sign * B ** (m - 1) * inner**d


def disc_f(T: Trinomial) -> int:
    return -64 * T.B ** (2 * T.k - 1) * delta(T) ** 2


def disc_g(T: Trinomial) -> int:
    return -(T.B ** (T.k - 1)) * delta(T)


@dataclass(frozen=True)
class AuxPolys:
    g: IntPoly
    h: IntPoly
    h_hat: IntPoly
    M: IntPoly


def build_aux(T: Trinomial) -> AuxPolys:
    k, A, B = T.k, T.A, T.B
    c = (-1) ** k * A * B ** (k - 1)
    h_hat = IntPoly.from_terms({3: 1, 3 - k: c, 0: -B * B})
    # M(x) = x^4 + 2(k-2)A x^2 - 8B x + A^(3-k) (-4B)^(k-1)
    M = IntPoly.from_terms({4: 1, 2: 2 * (k - 2) * A, 1: -8 * B, 0: A ** (3 - k) * (-4 * B) ** (k - 1)})
    return AuxPolys(g=T.g, h=h_hat.compose_square(), h_hat=h_hat, M=M)
