import pytest
from hypothesis import given, strategies as st

from sextic_mono.arith import is_perfect_square, is_squarefree
from sextic_mono.classify import (
    A4_NOTE,
    A4_PAIRS,
    DIRECT,
    THEOREM_MAIN,
    classify_direct,
    classify_theorem_main,
    cross_validate,
    grid,
    in_family,
    theorem_main_match,
)
from sextic_mono.galois import GaloisGroup
from sextic_mono.trinomial import Trinomial, delta, disc_f, disc_g

G = GaloisGroup


@pytest.mark.parametrize(
    "T, irreducible, group, mono",
    [
        ((1, -3, -1), True, G.A4, True),
        ((1, -5, -2), False, None, None),
        ((2, 3, -1), True, G.A4, True),
        ((1, -3, 6), True, G.S3, False),
        ((1, -9, -6), True, G.S4minus, True),
    ],
)
def test_direct_examples(T, irreducible, group, mono):
    c = classify_direct(Trinomial(*T))
    assert (c.irreducible, c.galois, c.monogenic) == (irreducible, group, mono)
    assert c.method == DIRECT
    assert (c.delta, c.disc_f, c.disc_g) == (delta(c.trinomial), disc_f(c.trinomial), disc_g(c.trinomial))
    assert (c.monogenic_verdict is None) == (not irreducible)


@pytest.mark.parametrize(
    "T, group",
    [((2, -3, 1), G.C2xA4), ((1, 1, -1), G.S4plus), ((2, 9, -105), G.S4minus), ((2, -2, 2), G.C2xS3), ((1, -3, -1), G.A4)],
)
def test_theorem_main_examples(T, group):
    t = Trinomial(*T)
    fast = classify_theorem_main(t)
    assert fast.monogenic and fast.galois is group and fast.method == THEOREM_MAIN
    assert classify_direct(t).outcome() == fast.outcome()


@pytest.mark.parametrize("T, fam", [((1, -7, -7), "F1"), ((1, 1, -1), "F2"), ((2, 9, -105), "F3")])
def test_family_membership(T, fam):
    assert in_family(Trinomial(*T), fam)
    others = {"F1", "F2", "F3"} - {fam}
    assert not any(in_family(Trinomial(*T), o) for o in others)


def test_unknown_family():
    with pytest.raises(ValueError):
        in_family(Trinomial(1, 1, 1), "F4")


def test_a4_discrepancy_note():
    stated, derived = Trinomial(2, -3, -1), Trinomial(2, 3, -1)
    assert (2, 3, -1) in A4_PAIRS and (2, -3, -1) not in A4_PAIRS
    for T in (stated, derived):
        assert A4_NOTE in classify_direct(T).notes
        assert A4_NOTE in classify_theorem_main(T).notes
    # the stated pair is not even an A4 trinomial
    assert classify_direct(stated).galois is G.S4plus
    assert A4_NOTE not in classify_direct(Trinomial(1, -3, -1)).notes


def test_non_monogenic_group_deferred():
    fast = classify_theorem_main(Trinomial(1, -3, 6))
    assert fast.monogenic is False and fast.galois is G.S3
    assert "group taken from the direct Galois stage" in fast.notes


def test_first_match_order_matters():
    # (1, -9, -6) also meets the C2xS4 condition list but is S4minus
    T = Trinomial(1, -9, -6)
    assert theorem_main_match(T) is G.S4minus


small = st.integers(min_value=-80, max_value=80).filter(bool)


@given(st.sampled_from([1, 2]), small, small)
def test_fast_equals_direct(k, A, B):
    T = Trinomial(k, A, B)
    d, fast = classify_direct(T), classify_theorem_main(T)
    assert d.outcome() == fast.outcome()
    assert not (d.monogenic and d.galois in (G.C6, G.S3))
    if fast.monogenic and fast.galois is G.C2xS4:
        assert is_squarefree(B) and not is_perfect_square(-(B ** (k - 1)) * delta(T))


def test_cross_validate_small_box():
    rep = cross_validate([1, 2], range(-30, 31), range(-30, 31), jobs=1)
    assert rep.ok and rep.checked == 2 * 60 * 60
    assert rep.monogenic_counts["A4"] == 2
    assert "C6" not in rep.group_counts
    assert {(T.k, T.A, T.B) for T, _ in rep.notes} == {(2, -3, -1), (2, 3, -1)}


def test_cross_validate_parallel_identical():
    a = cross_validate([1, 2], range(-6, 7), range(-6, 7), jobs=1, chunk_size=7)
    b = cross_validate([1, 2], range(-6, 7), range(-6, 7), jobs=2, chunk_size=7)
    assert (a.checked, a.irreducible, a.monogenic_counts, a.group_counts, a.notes) == (
        b.checked,
        b.irreducible,
        b.monogenic_counts,
        b.group_counts,
        b.notes,
    )


def test_empty_range():
    rep = cross_validate([1], range(0), range(1, 4))
    assert rep.checked == 0 and rep.ok


def test_grid_order_and_skips():
    cells = list(grid([2, 1], range(-1, 2), range(-1, 2)))
    assert cells == [(1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1), (2, -1, -1), (2, -1, 1), (2, 1, -1), (2, 1, 1)]
