import itertools

import pytest
from hypothesis import given, strategies as st

from sextic_mono.galois import (
    GaloisGroup,
    InconsistentGaloisDataError,
    ReducibleInputError,
    _DECISION_TABLE,
    cycle_fingerprint,
    cycle_type,
    cycle_types,
    f_is_irreducible,
    galois_group,
    group_elements,
    h_is_reducible,
    match_group,
    square_data,
)
from sextic_mono.poly import factor_over_Z, integer_roots, poly
from sextic_mono.trinomial import Trinomial, build_aux

ORDERS = {
    GaloisGroup.C6: 6,
    GaloisGroup.S3: 6,
    GaloisGroup.C2xS3: 12,
    GaloisGroup.A4: 12,
    GaloisGroup.C2xA4: 24,
    GaloisGroup.S4plus: 24,
    GaloisGroup.S4minus: 24,
    GaloisGroup.C2xS4: 48,
}


def _is_even(perm):
    return sum(n - 1 for n in cycle_type(perm)) % 2 == 0


def test_t_notation_pairing():
    assert [g.t_notation for g in GaloisGroup] == ["6T1", "6T2", "6T3", "6T4", "6T6", "6T7", "6T8", "6T11"]
    assert GaloisGroup.from_name("6T8") is GaloisGroup.S4minus
    assert GaloisGroup.from_name("C2xA4") is GaloisGroup.C2xA4
    with pytest.raises(KeyError):
        GaloisGroup.from_name("S6")


@pytest.mark.parametrize("group", list(GaloisGroup))
def test_group_orders_and_transitivity(group):
    els = group_elements(group)
    assert len(els) == ORDERS[group]
    assert {e[0] for e in els} == set(range(6))


@pytest.mark.parametrize("group", list(GaloisGroup))
def test_groups_preserve_pairing_blocks(group):
    # roots come in pairs +-alpha; the blocks {1,4}, {2,5}, {3,6} must be permuted
    blocks = [frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})]
    for e in group_elements(group):
        assert {frozenset(e[i] for i in b) for b in blocks} == set(blocks)


def test_sign_character():
    even = {g: all(_is_even(e) for e in group_elements(g)) for g in GaloisGroup}
    assert even[GaloisGroup.A4] and even[GaloisGroup.S4plus]
    assert not even[GaloisGroup.S4minus] and not even[GaloisGroup.C2xS4]


def test_groups_pairwise_distinct():
    sets = [group_elements(g) for g in GaloisGroup]
    assert len({frozenset(s) for s in sets}) == len(sets)


def test_decision_table_shape():
    assert len(_DECISION_TABLE) == 8 and set(_DECISION_TABLE.values()) == set(GaloisGroup)
    for key in itertools.product([False, True], repeat=4):
        sq_b, sq_g, sq_bg, _ = key
        if sq_b and sq_g:
            # -B and disc g squares force -B disc g square
            assert key not in _DECISION_TABLE or sq_bg


@pytest.mark.parametrize(
    "T, want",
    [((1, -3, -1), GaloisGroup.A4), ((1, -9, -6), GaloisGroup.S4minus), ((2, -2, 2), GaloisGroup.C2xS3), ((1, -3, 6), GaloisGroup.S3)],
)
def test_galois_examples(T, want):
    assert galois_group(Trinomial(*T), paranoid=True) is want


def test_h_certificate_examples():
    c = h_is_reducible(Trinomial(2, -2, 2))
    assert c.reducible and c.mu == 2
    assert set(c.cubic_factors) == {poly(1, 2, 2, 2), poly(1, -2, 2, -2)}
    assert not h_is_reducible(Trinomial(1, -9, -6)).reducible
    assert h_is_reducible(Trinomial(1, -3, 6)).reducible


def test_reducible_input_rejected():
    T = Trinomial(1, -5, -2)
    for fn in (galois_group, h_is_reducible, lambda t: cycle_fingerprint(t, 5)):
        with pytest.raises(ReducibleInputError):
            fn(T)


def test_inconsistent_tuple_raises(monkeypatch):
    import sextic_mono.galois as gal

    monkeypatch.setattr(gal, "square_data", lambda T: (True, True, False))
    with pytest.raises(InconsistentGaloisDataError):
        gal.galois_group(Trinomial(1, -3, -1))


small = st.integers(min_value=-60, max_value=60).filter(bool)


@given(st.sampled_from([1, 2]), small, small)
def test_h_routes_agree(k, A, B):
    T = Trinomial(k, A, B)
    if not f_is_irreducible(T):
        return
    aux = build_aux(T)
    cert = h_is_reducible(T)
    assert cert.reducible == (len(factor_over_Z(aux.h)) > 1)
    assert len(factor_over_Z(aux.h_hat)) == 1
    if cert.reducible:
        assert integer_roots(aux.M) == [cert.mu]
        assert cert.cubic_factors[0] * cert.cubic_factors[1] == aux.h
    sq_b, sq_g, sq_bg = square_data(T)
    assert not (sq_b and sq_g) or sq_bg


def test_fingerprint_a4_only_even_patterns():
    fp = cycle_fingerprint(Trinomial(1, -3, -1), 500)
    assert sum(fp.values()) == 500
    assert match_group(fp, GaloisGroup.A4) == []
    assert all(sum(n - 1 for n in pattern) % 2 == 0 for pattern in fp)


def test_fingerprint_s3():
    fp = cycle_fingerprint(Trinomial(1, -3, 6), 100)
    assert match_group(fp, GaloisGroup.S3) == []
    assert set(fp) <= cycle_types(GaloisGroup.S3)


def test_fingerprint_detects_wrong_group():
    fp = cycle_fingerprint(Trinomial(1, -9, -6), 200)
    assert match_group(fp, GaloisGroup.S4minus) == []
    assert match_group(fp, GaloisGroup.A4) != []


def test_fingerprint_prime_count_positive():
    with pytest.raises(ValueError):
        cycle_fingerprint(Trinomial(1, -3, -1), 0)
