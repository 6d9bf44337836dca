import random

import pytest
from hypothesis import given, strategies as st

from oracles import sympy_disc, trinomial_coeffs
from sextic_mono.arith import ArithmeticDomainError
from sextic_mono.poly import IntPoly, discriminant_resultant, poly
from sextic_mono.trinomial import (
    Trinomial,
    TrinomialError,
    build_aux,
    delta,
    disc_f,
    disc_g,
    make,
    swan_general,
)

nz = st.integers(min_value=-300, max_value=300).filter(bool)
trinomials = st.builds(Trinomial, st.sampled_from([1, 2]), nz, nz)


def test_make_validates():
    assert make(1, -3, -1) == Trinomial(1, -3, -1)
    for bad in [(3, 1, 1), (1, 0, 5), (2, 4, 0), (0, 1, 1)]:
        with pytest.raises(TrinomialError):
            make(*bad)


@pytest.mark.parametrize("T, want", [((1, -3, -1), -81), ((2, 3, -1), 81), ((2, -2, 2), 22)])
def test_delta(T, want):
    assert delta(Trinomial(*T)) == want


@pytest.mark.parametrize("args, want", [((6, 2, -3, -1), 419904), ((3, 1, -3, -1), 81), ((2, 1, 1, 1), -3)])
def test_swan_examples(args, want):
    assert swan_general(*args) == want


@pytest.mark.parametrize("args", [(3, 3, 1, 1), (3, 0, 1, 1), (3, 4, 1, 1), (3, 1, 1, 0)])
def test_swan_domain(args):
    with pytest.raises(ArithmeticDomainError):
        swan_general(*args)


def test_closed_discriminants():
    assert disc_f(Trinomial(1, -3, -1)) == 419904
    assert disc_g(Trinomial(2, -2, 2)) == -44
    assert disc_g(Trinomial(1, -3, -1)) == 81


def test_swan_1000_seeded_random_trinomials():
    rng = random.Random(1729)
    for _ in range(1000):
        n = rng.randint(2, 6)
        m = rng.randint(1, n - 1)
        A, B = rng.randint(-10**4, 10**4), rng.choice([-1, 1]) * rng.randint(1, 10**4)
        assert swan_general(n, m, A, B) == discriminant_resultant(IntPoly(trinomial_coeffs(n, m, A, B)))


@given(st.integers(min_value=2, max_value=9), st.data())
def test_swan_matches_sympy(n, data):
    m = data.draw(st.integers(min_value=1, max_value=n - 1))
    A = data.draw(st.integers(min_value=-50, max_value=50))
    B = data.draw(nz)
    assert swan_general(n, m, A, B) == sympy_disc(trinomial_coeffs(n, m, A, B))


@given(trinomials)
def test_closed_forms_match_oracles(T):
    assert disc_f(T) == swan_general(6, 2 * T.k, T.A, T.B) == discriminant_resultant(T.f)
    assert disc_g(T) == swan_general(3, T.k, T.A, T.B) == discriminant_resultant(T.g)


@given(trinomials)
def test_aux_compositions(T):
    aux = build_aux(T)
    assert aux.h == aux.h_hat.compose_square()
    assert T.f == aux.g.compose_square()
    assert aux.h.degree == 6 and aux.M.degree == 4


@given(trinomials)
def test_disc_g_zero_iff_delta_zero(T):
    assert (disc_g(T) == 0) == (delta(T) == 0)


def test_aux_examples():
    aux = build_aux(Trinomial(2, -2, 2))
    assert aux.h == poly(1, 0, 0, 0, -4, 0, -4)
    assert aux.M == poly(1, 0, 0, -16, 16)
    assert build_aux(Trinomial(1, -9, -6)).M == poly(1, 0, 18, 48, 81)
    assert build_aux(Trinomial(1, -3, -1)).h == poly(1, 0, 3, 0, 0, 0, -1)


def test_delta_zero_is_reducible():
    from sextic_mono.galois import f_is_irreducible

    # 4 A^3 = -27 B^2 at (A, B) = (-3, 2)
    T = Trinomial(1, -3, 2)
    assert delta(T) == 0 and not f_is_irreducible(T)
