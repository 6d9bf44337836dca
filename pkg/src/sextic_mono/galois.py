"""Galois groups of irreducible even sextic trinomials."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_perfect_square, small_primes
from .poly import (
    IntPoly,
    NotSquarefreeModPError,
    factor_degrees_mod_p,
    factor_over_Z,
    integer_roots,
    is_irreducible_Q,
    poly,
)
from .trinomial import Trinomial, build_aux, disc_f, disc_g


class ReducibleInputError(ValueError):
    """The operation is only defined for irreducible f."""


class InconsistentGaloisDataError(RuntimeError):
    """The square/reducibility data matches no admissible Galois group."""


class GaloisGroup(enum.Enum):
    C6 = ("C6", "6T1")
    S3 = ("S3", "6T2")
    C2xS3 = ("C2xS3", "6T3")
    A4 = ("A4", "6T4")
    C2xA4 = ("C2xA4", "6T6")
    S4plus = ("S4plus", "6T7")
    S4minus = ("S4minus", "6T8")
    C2xS4 = ("C2xS4", "6T11")

    @property
    def familiar_name(self) -> str:
        return self.value[0]

    @property
    def t_notation(self) -> str:
        return self.value[1]

    @classmethod
    def from_name(cls, name: str) -> "GaloisGroup":
        for g in cls:
            if name in (g.familiar_name, g.t_notation):
                return g
        raise KeyError(name)


# Generators of the standard transitive embeddings in S6, points 1..6.
_GENERATORS: dict[GaloisGroup, list[list[tuple[int, ...]]]] = {
    GaloisGroup.C6: [[(1, 2, 3, 4, 5, 6)]],
    GaloisGroup.S3: [[(1, 3, 5), (2, 4, 6)], [(1, 4), (2, 3), (5, 6)]],
    GaloisGroup.C2xS3: [[(1, 2, 3, 4, 5, 6)], [(1, 4), (2, 3), (5, 6)]],
    GaloisGroup.A4: [[(1, 4), (2, 5)], [(1, 3, 5), (2, 4, 6)]],
    GaloisGroup.C2xA4: [[(3, 6)], [(1, 3, 5), (2, 4, 6)]],
    GaloisGroup.S4plus: [[(1, 4), (2, 5)], [(1, 3, 5), (2, 4, 6)], [(1, 5), (2, 4)]],
    GaloisGroup.S4minus: [[(1, 4), (2, 5)], [(1, 3, 5), (2, 4, 6)], [(1, 5), (2, 4), (3, 6)]],
    GaloisGroup.C2xS4: [[(3, 6)], [(1, 3, 5), (2, 4, 6)], [(1, 5), (2, 4)]],
}


def _perm_from_cycles(cycles: list[tuple[int, ...]]) -> tuple[int, ...]:
    image = list(range(6))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            image[a - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(image)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(6))


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * 6
    lengths = []
    for i in range(6):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths))


@lru_cache(maxsize=None)
def group_elements(group: GaloisGroup) -> frozenset[tuple[int, ...]]:
    """Closure of the generators under composition."""
    gens = [_perm_from_cycles(c) for c in _GENERATORS[group]]
    identity = tuple(range(6))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                x = _compose(g, e)
                if x not in elements:
                    elements.add(x)
                    nxt.append(x)
        frontier = nxt
    return frozenset(elements)


@lru_cache(maxsize=None)
def cycle_types(group: GaloisGroup) -> frozenset[tuple[int, ...]]:
    return frozenset(cycle_type(e) for e in group_elements(group))


# (sq(-B), sq(disc g), sq(-B disc g), h reducible) -> group
_DECISION_TABLE: dict[tuple[bool, bool, bool, bool], GaloisGroup] = {
    (False, True, False, True): GaloisGroup.C6,
    (False, False, True, True): GaloisGroup.S3,
    (False, False, False, True): GaloisGroup.C2xS3,
    (True, True, True, False): GaloisGroup.A4,
    (False, True, False, False): GaloisGroup.C2xA4,
    (True, False, False, False): GaloisGroup.S4plus,
    (False, False, True, False): GaloisGroup.S4minus,
    (False, False, False, False): GaloisGroup.C2xS4,
}


@dataclass(frozen=True)
class HReducibilityCertificate:
    reducible: bool
    mu: int | None = None
    cubic_factors: tuple[IntPoly, IntPoly] | None = None


@lru_cache(maxsize=4096)
def f_is_irreducible(T: Trinomial) -> bool:
    return is_irreducible_Q(T.f)


def _require_irreducible(T: Trinomial) -> None:
    if not f_is_irreducible(T):
        raise ReducibleInputError(f"{T} is reducible over Q")


def h_is_reducible(T: Trinomial, paranoid: bool = False) -> HReducibilityCertificate:
    """Decide reducibility of h through the integer roots of the quartic M."""
    _require_irreducible(T)
    aux = build_aux(T)
    k, A, B = T.k, T.A, T.B
    cert = HReducibilityCertificate(False)
    for mu in integer_roots(aux.M):
        mid = mu * mu + (k - 2) * A
        if mid % 2:
            continue
        c1 = poly(1, mu, mid // 2, B)
        c2 = poly(1, -mu, mid // 2, -B)
        if c1 * c2 == aux.h:
            cert = HReducibilityCertificate(True, mu, (c1, c2))
            break
    if paranoid:
        assert cert.reducible == (len(factor_over_Z(aux.h)) > 1), f"h-reducibility routes disagree on {T}"
    return cert


def square_data(T: Trinomial) -> tuple[bool, bool, bool]:
    dg = disc_g(T)
    return is_perfect_square(-T.B), is_perfect_square(dg), is_perfect_square(-T.B * dg)


def galois_group(T: Trinomial, paranoid: bool = False) -> GaloisGroup:
    _require_irreducible(T)
    key = square_data(T) + (h_is_reducible(T, paranoid).reducible,)
    try:
        return _DECISION_TABLE[key]
    except KeyError:
        raise InconsistentGaloisDataError(f"no Galois group matches {key} for {T}") from None


def fingerprint_primes(T: Trinomial, prime_count: int) -> list[int]:
    """The first ``prime_count`` odd primes not dividing disc(f)."""
    d = disc_f(T)
    out = []
    for q in small_primes()[1:]:
        if d % q:
            out.append(q)
            if len(out) == prime_count:
                break
    return out


def cycle_fingerprint(T: Trinomial, prime_count: int) -> Counter:
    """Tally of factorization patterns of f modulo good primes."""
    if prime_count < 1:
        raise ValueError("prime_count must be positive")
    _require_irreducible(T)
    tally: Counter = Counter()
    for q in fingerprint_primes(T, prime_count):
        try:
            tally[factor_degrees_mod_p(T.f, q)] += 1
        except NotSquarefreeModPError:  # pragma: no cover - q does not divide disc(f)
            raise AssertionError(f"f not squarefree mod good prime {q}")
    return tally


def match_group(fingerprint: Counter, group: GaloisGroup) -> list[tuple[int, ...]]:
    """Observed patterns that are not cycle types of ``group`` (empty when consistent)."""
    allowed = cycle_types(group)
    return sorted(pattern for pattern in fingerprint if pattern not in allowed)
