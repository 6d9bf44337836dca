"""Dense integer polynomials of small degree.

Coefficients are stored constant term first.  Factorization over Z is exact:
candidate factors come either from the square-root structure of even
polynomials or from certified complex roots, and every candidate is accepted
only after exact trial division.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .arith import ArithmeticDomainError, divisors, is_perfect_square, is_prime, small_primes


class UnsupportedDegreeError(ValueError):
    pass


class NotSquarefreeModPError(ValueError):
    """The polynomial has a repeated factor modulo the chosen prime."""


class PrecisionError(RuntimeError):
    """Root approximations could not be certified within the precision cap."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPoly":
        """Build from a ``{exponent: coefficient}`` map."""
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_square(self) -> "IntPoly":
        """Return p(x^2)."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPoly(out)

    def reflect(self) -> "IntPoly":
        """Return p(-x)."""
        return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def even_part(self) -> "IntPoly | None":
        """The g with p(x) = g(x^2), or None if p has an odd-degree term."""
        if any(c for c in self.coeffs[1::2]):
            return None
        return IntPoly(self.coeffs[::2])

    def divmod_monic(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact division by a monic divisor over Z."""
        if not d.is_monic():
            raise ArithmeticDomainError("divisor must be monic")
        r = list(self.coeffs)
        dn = d.degree
        if len(r) - 1 < dn:
            return IntPoly(()), self
        q = [0] * (len(r) - dn)
        for i in range(len(r) - 1, dn - 1, -1):
            c = r[i]
            if c:
                q[i - dn] = c
                for j, dc in enumerate(d.coeffs):
                    r[i - dn + j] -= c * dc
        return IntPoly(q), IntPoly(r[:dn])

    def exact_quotient(self, d: "IntPoly") -> "IntPoly | None":
        q, r = self.divmod_monic(d)
        return q if r.is_zero() else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly(*coeffs_high_first: int) -> IntPoly:
    """Convenience constructor taking coefficients leading term first."""
    return IntPoly(reversed(coeffs_high_first))


# --------------------------------------------------------------- resultants


def _content(c: Sequence[int]) -> int:
    return math.gcd(*c)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, coefficients constant first."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [x * lb for x in r]
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return list(_trim(r[:db]))


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant over Z via the subresultant pseudo-remainder sequence."""
    if p.is_zero() or q.is_zero():
        return 0
    a, b = list(p.coeffs), list(q.coeffs)
    s = 1
    if len(a) < len(b):
        if (len(a) - 1) * (len(b) - 1) % 2:
            s = -1
        a, b = b, a
    if len(b) == 1:
        return s * b[0] ** (len(a) - 1)
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h**delta
        b = [x // div for x in r]
        g = a[-1]
        # h <- h^(1-delta) * g^delta, exact
        h = g**delta // h ** (delta - 1) if delta >= 1 else h * g**delta
        if len(b) == 1:
            da = len(a) - 1
            return s * t * (b[0] ** da // h ** (da - 1))


def discriminant_resultant(p: IntPoly) -> int:
    """Discriminant of a monic polynomial as (-1)^(d(d-1)/2) Res(p, p')."""
    d = p.degree
    if d < 2 or not p.is_monic():
        raise ArithmeticDomainError("need a monic polynomial of degree >= 2")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative())


# --------------------------------------------------------------- integer roots


def integer_roots(p: IntPoly) -> list[int]:
    """Distinct integer roots, ascending."""
    if p.is_zero():
        raise ArithmeticDomainError("zero polynomial has every integer as a root")
    c = list(p.coeffs)
    roots = []
    while c and c[0] == 0:
        c.pop(0)
        if not roots:
            roots.append(0)
    q = IntPoly(c)
    if q.degree >= 1:
        for d in divisors(q.coeffs[0]):
            for r in (d, -d):
                if q(r) == 0:
                    roots.append(r)
    return sorted(set(roots))


# --------------------------------------------------------------- arithmetic mod q


def _mod(c: Sequence[int], q: int) -> list[int]:
    out = [x % q for x in c]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pmod_monic(a: list[int], b: list[int], q: int) -> list[int]:
    """a mod b over F_q; b monic."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % q
            a[i] = 0
    a = a[:db]
    while a and a[-1] == 0:
        a.pop()
    return a


def _make_monic(a: list[int], q: int) -> list[int]:
    inv = pow(a[-1], -1, q)
    return [x * inv % q for x in a]


def _pmod(a: list[int], b: list[int], q: int) -> list[int]:
    inv = pow(b[-1], -1, q)
    bm = [x * inv % q for x in b]
    return _pmod_monic(a, bm, q)


def _gcd_mod(a: list[int], b: list[int], q: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, q)
    return _make_monic(a, q) if a else a


def _mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod_monic([v % q for v in out], f, q)


def _powmod_x(e: int, f: list[int], q: int) -> list[int]:
    """x^e mod f over F_q."""
    result = [1]
    base = _pmod_monic([0, 1], f, q)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, q)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, q)
    return result


def _divexact_mod(a: list[int], b: list[int], q: int) -> list[int]:
    b = _make_monic(b, q)
    a = list(a)
    db = len(b) - 1
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % q
        if c:
            quo[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % q
    return quo


def gcd_mod_p(a: IntPoly, b: IntPoly, q: int) -> IntPoly:
    """Monic gcd of a and b in F_q[x], coefficients reported in [0, q)."""
    am, bm = _mod(a.coeffs, q), _mod(b.coeffs, q)
    if not am and not bm:
        raise ArithmeticDomainError("both polynomials vanish modulo q")
    return IntPoly(_gcd_mod(am, bm, q))


def factor_degrees_mod_p(p: IntPoly, q: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of p over F_q (distinct-degree factorization)."""
    if p.lead % q == 0:
        raise ArithmeticDomainError("prime divides the leading coefficient")
    f = _make_monic(_mod(p.coeffs, q), q)
    df = _mod(IntPoly(f).derivative().coeffs, q)
    if len(_gcd_mod(f, df, q)) > 1 or not df:
        raise NotSquarefreeModPError(f"polynomial is not squarefree modulo {q}")
    degrees: list[int] = []
    h = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = _powmod_x_from(h, q, f, q)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % q
        while diff and diff[-1] == 0:
            diff.pop()
        g = _gcd_mod(f, diff, q) if diff else list(f)
        dg = len(g) - 1
        if dg > 0:
            degrees += [i] * (dg // i)
            f = _divexact_mod(f, g, q)
            h = _pmod_monic(h, f, q) if len(f) > 1 else []
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return tuple(sorted(degrees))


def _powmod_x_from(h: list[int], e: int, f: list[int], q: int) -> list[int]:
    """h^e mod f over F_q."""
    result = [1]
    base = _pmod_monic(h, f, q) if len(h) >= len(f) else list(h)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, q)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, q)
    return result


# --------------------------------------------------------------- factorization over Z

MAX_FACTOR_DEGREE = 6
PREFILTER_PRIMES = 12
START_PRECISION = 128
MAX_PRECISION = 2048


def _subset_sums(parts: Sequence[int]) -> set[int]:
    sums = {0}
    for d in parts:
        sums |= {s + d for s in sums}
    return sums


def irreducible_by_prefilter(p: IntPoly, max_primes: int = PREFILTER_PRIMES) -> bool:
    """True when degree patterns modulo small primes rule out every proper factor degree.

    A ``False`` answer is inconclusive.
    """
    n = p.degree
    possible = set(range(1, n))
    used = 0
    for q in small_primes()[:60]:
        if used >= max_primes:
            break
        try:
            pattern = factor_degrees_mod_p(p, q)
        except (NotSquarefreeModPError, ArithmeticDomainError):
            continue
        used += 1
        possible &= _subset_sums(pattern)
        if not possible:
            return True
    return False


def _gcd_q(a: IntPoly, b: IntPoly) -> list[Fraction]:
    """Monic gcd over Q."""
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]
    while y:
        r = list(x)
        while len(r) >= len(y):
            c = r[-1] / y[-1]
            off = len(r) - len(y)
            for j in range(len(y)):
                r[off + j] -= c * y[j]
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        x, y = y, r
    return [c / x[-1] for c in x]


def _certified_roots(p: IntPoly, prec: int):
    """Root approximations with radii of disjoint disks each holding exactly one root."""
    n = p.degree
    with mpmath.workprec(prec + 32):
        roots = mpmath.polyroots(list(reversed(p.coeffs)), maxsteps=200 + prec, extraprec=prec)
        radii = []
        for i, z in enumerate(roots):
            denom = mpmath.mpf(1)
            for j, w in enumerate(roots):
                if j != i:
                    denom *= z - w
            if denom == 0:
                return None
            radii.append(n * abs(p(z) / denom) + mpmath.mpf(2) ** (-prec) * (1 + abs(z)))
        for i in range(n):
            for j in range(i + 1, n):
                if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                    return None
        return roots, radii


def _elementary(values) -> list:
    """Coefficients of prod(x + v) as [e0, e1, ...], highest degree last."""
    c = [mpmath.mpf(1)]
    for v in values:
        nxt = [mpmath.mpf(0)] * (len(c) + 1)
        for i, x in enumerate(c):
            nxt[i] += x * v
            nxt[i + 1] += x
        c = nxt
    return c


def _factor_from_roots(p: IntPoly) -> IntPoly | None:
    """Smallest-degree proper monic factor of a squarefree p, found from certified roots."""
    n = p.degree
    prec = START_PRECISION
    while prec <= MAX_PRECISION:
        try:
            cert = _certified_roots(p, prec)
        except mpmath.libmp.NoConvergence:
            cert = None
        if cert is None:
            prec *= 2
            continue
        roots, radii = cert
        ambiguous = False
        with mpmath.workprec(prec + 32):
            for size in range(1, n // 2 + 1):
                for subset in itertools.combinations(range(n), size):
                    approx = _elementary([-roots[i] for i in subset])
                    exact_mod = _elementary([abs(roots[i]) for i in subset])
                    padded = _elementary([abs(roots[i]) + radii[i] for i in subset])
                    coeffs = []
                    ok = True
                    for a, lo, hi in zip(approx, exact_mod, padded):
                        err = hi - lo + mpmath.mpf(2) ** (-prec) * (1 + hi)
                        if err >= 0.25:
                            ambiguous = True
                            ok = False
                            break
                        nearest = int(mpmath.nint(a.real if isinstance(a, mpmath.mpc) else a))
                        if abs(a - nearest) > err:
                            ok = False
                            break
                        coeffs.append(nearest)
                    if not ok:
                        continue
                    cand = IntPoly(coeffs)
                    if p.exact_quotient(cand) is not None:
                        return cand
        if not ambiguous:
            return None
        prec *= 2
    raise PrecisionError(f"could not separate factors of {p} within {MAX_PRECISION} bits")


def _factor_even(p: IntPoly, g: IntPoly) -> list[IntPoly] | None:
    """Split p(x) = g(x^2) using the square-root criterion for g(x^2).

    For irreducible g of degree n, g(x^2) is reducible exactly when
    g(x^2) = (-1)^n r(x) r(-x) for a monic r of degree n.  Returns None when
    no split exists (p irreducible) given that g is irreducible.
    """
    n = g.degree
    sign = -1 if n % 2 else 1
    # (-1)^n g(0) = r(0)^2
    c0sq = sign * g.coeffs[0]
    if not is_perfect_square(c0sq):
        return None
    c = math.isqrt(c0sq)
    candidates: list[IntPoly] = []
    if n == 1:
        candidates = [poly(1, c)]
    elif n == 2:
        # r = x^2 + a x + b, r(x) r(-x) = x^4 + (2b - a^2) x^2 + b^2
        g1 = g.coeffs[1]
        for b in {c, -c}:
            t = 2 * b - g1
            if is_perfect_square(t):
                a = math.isqrt(t)
                candidates.append(poly(1, a, b))
    elif n == 3:
        # r = x^3 + a x^2 + b x + c', -r(x) r(-x) = x^6 + (2b - a^2) x^4 + (b^2 - 2ac') x^2 - c'^2
        g2, g1 = g.coeffs[2], g.coeffs[1]
        for cc in {c, -c}:
            # a^4 + 2 g2 a^2 - 8 c' a + g2^2 - 4 g1 = 0
            quartic = poly(1, 0, 2 * g2, -8 * cc, g2 * g2 - 4 * g1)
            for a in integer_roots(quartic):
                if (g2 + a * a) % 2 == 0:
                    candidates.append(poly(1, a, (g2 + a * a) // 2, cc))
    else:
        raise UnsupportedDegreeError("even split supports degree <= 6")
    for r in candidates:
        other = p.exact_quotient(r)
        if other is not None:
            return [r, other]
    return None


def _factor(p: IntPoly, use_even: bool) -> list[IntPoly]:
    n = p.degree
    if n <= 1:
        return [p]
    if p.coeffs[0] == 0:
        return [IntPoly.x()] + _factor(p.divmod_monic(IntPoly.x())[0], use_even)
    g = p.even_part() if use_even else None
    if g is not None:
        if g.degree == 1:
            # x^2 + c
            if is_perfect_square(-g.coeffs[0]):
                s = math.isqrt(-g.coeffs[0])
                return sorted_factors([poly(1, -s), poly(1, s)])
            return [p]
        roots = integer_roots(g)
        if roots:
            r = roots[0]
            lin2 = poly(1, 0, -r)
            rest = p.exact_quotient(lin2)
            return _factor(lin2, use_even) + _factor(rest, use_even)
        if g.degree <= 3:
            split = _factor_even(p, g)
            if split is None:
                return [p]
            return split
    # squarefree reduction
    d = p.derivative()
    common = _gcd_q(p, d)
    if len(common) > 1:
        assert all(x.denominator == 1 for x in common)
        c = IntPoly(int(x) for x in common)
        return _factor(c, use_even) + _factor(p.exact_quotient(c), use_even)
    if n >= 3 and irreducible_by_prefilter(p):
        return [p]
    for r in integer_roots(p):
        lin = poly(1, -r)
        return [lin] + _factor(p.exact_quotient(lin), use_even)
    if n <= 3:
        return [p]
    found = _factor_from_roots(p)
    if found is None:
        return [p]
    return _factor(found, use_even) + _factor(p.exact_quotient(found), use_even)


def sorted_factors(fs: Iterable[IntPoly]) -> list[IntPoly]:
    return sorted(fs, key=lambda f: (f.degree, f.coeffs))


def factor_over_Z(p: IntPoly, *, use_even: bool = True) -> list[IntPoly]:
    """Monic irreducible factors (with multiplicity) of a monic p with 1 <= deg p <= 6.

    ``use_even=False`` forces the root-reconstruction route for even inputs,
    which tests use as an independent check of the square-root split.
    """
    if not p.is_monic():
        raise ArithmeticDomainError("factor_over_Z needs a monic polynomial")
    if not 1 <= p.degree <= MAX_FACTOR_DEGREE:
        raise UnsupportedDegreeError(f"degree {p.degree} outside 1..{MAX_FACTOR_DEGREE}")
    factors = sorted_factors(_factor(p, use_even))
    check = IntPoly((1,))
    for f in factors:
        check = check * f
    assert check == p, f"factorization of {p} does not multiply back"
    return factors


def is_irreducible_Q(p: IntPoly) -> bool:
    return len(factor_over_Z(p)) == 1


def product(fs: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly((1,))
    for f in fs:
        out = out * f
    return out


__all__ = [
    "IntPoly",
    "poly",
    "resultant",
    "discriminant_resultant",
    "integer_roots",
    "factor_over_Z",
    "is_irreducible_Q",
    "factor_degrees_mod_p",
    "gcd_mod_p",
    "irreducible_by_prefilter",
    "product",
    "is_prime",
    "UnsupportedDegreeError",
    "NotSquarefreeModPError",
    "PrecisionError",
]
