"""Independent reference implementations built on sympy.

Nothing here imports the package's polynomial or arithmetic code, so
agreement with these is genuine cross-checking.
"""

from __future__ import annotations

import sympy as sp
from sympy import Poly

x = sp.symbols("x")


def to_sympy(coeffs_low_first) -> Poly:
    return Poly(list(reversed(list(coeffs_low_first))), x, domain=sp.ZZ)


def sympy_factor_degrees(coeffs_low_first) -> list[tuple[list[int], int]]:
    """Monic irreducible factors (coefficients low first) with multiplicity."""
    _, facs = to_sympy(coeffs_low_first).factor_list()
    out = []
    for f, e in facs:
        out.append(([int(c) for c in reversed(f.all_coeffs())], e))
    return out


def trinomial_coeffs(n: int, m: int, A: int, B: int) -> list[int]:
    c = [0] * (n + 1)
    c[n], c[m], c[0] = 1, A, B
    return c


def dedekind_prime_ok(coeffs_low_first, p: int) -> bool:
    """Dedekind's criterion: True iff p does not divide [Z_K : Z[theta]]."""
    f = to_sympy(coeffs_low_first)
    fp = Poly(f.all_coeffs(), x, modulus=p)
    _, facs = fp.factor_list()
    g = Poly(1, x, modulus=p)
    h = Poly(1, x, modulus=p)
    for q, e in facs:
        g *= q
        h *= q ** (e - 1)
    lift = lambda P: Poly([int(c) % p for c in P.all_coeffs()], x, domain=sp.ZZ)
    diff = f - lift(g) * lift(h)
    if diff.is_zero:
        return True
    F = Poly([int(c) // p for c in diff.all_coeffs()], x, modulus=p)
    return sp.gcd(sp.gcd(F, g), h).degree() == 0


def sympy_disc(coeffs_low_first) -> int:
    return int(sp.discriminant(to_sympy(coeffs_low_first).as_expr(), x))


def sylvester_resultant(p_low_first, q_low_first) -> int:
    """Determinant of the Sylvester matrix (sympy's default ``resultant`` can flip the sign when deg p < deg q)."""
    from sympy.polys.subresultants_qq_zz import res

    return int(res(to_sympy(p_low_first).as_expr(), to_sympy(q_low_first).as_expr(), x))
