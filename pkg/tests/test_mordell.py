import pytest
from hypothesis import given, strategies as st

from sextic_mono.arith import ArithmeticDomainError
from sextic_mono.mordell import (
    icbrt_ceil,
    icbrt_floor,
    c2xa4_k2_solutions,
    integral_points_bounded,
    verify_tables,
)


def test_a4_curve():
    assert integral_points_bounded(-432, 10**4).points == ((12, 36),)


def test_listed_curves():
    assert integral_points_bounded(-216, 10**4).xs == (6, 10, 33)
    assert integral_points_bounded(-(2**3) * 3**8, 10**4).xs == (54, 1942)
    assert integral_points_bounded(2**4 * 3**3, 10**4).points == ()


def test_known_small_curves():
    # y^2 = x^3 - 2 has only (3, 5); y^2 = x^3 + 1 has x in {-1, 0, 2}
    assert integral_points_bounded(-2, 1000).points == ((3, 5),)
    assert integral_points_bounded(1, 1000).points == ((-1, 0), (0, 1), (2, 3))


def test_domain():
    with pytest.raises(ArithmeticDomainError):
        integral_points_bounded(0, 10)
    with pytest.raises(ArithmeticDomainError):
        integral_points_bounded(5, 0)
    with pytest.raises(ArithmeticDomainError):
        verify_tables(1000)


@given(st.integers(min_value=-5000, max_value=5000).filter(bool), st.integers(min_value=1, max_value=300))
def test_points_exact_and_monotone(N, bound):
    small = integral_points_bounded(N, bound)
    big = integral_points_bounded(N, 2 * bound)
    assert all(y * y == x**3 + N and y >= 0 and abs(x) <= bound for x, y in small.points)
    assert set(small.points) <= set(big.points)
    brute = [(x, y) for x in range(-bound, bound + 1) for y in [int(round(max(x**3 + N, 0) ** 0.5))] if y * y == x**3 + N]
    assert small.points == tuple(brute)


@given(st.integers(min_value=-(10**30), max_value=10**30))
def test_integer_cube_roots(n):
    f, c = icbrt_floor(n), icbrt_ceil(n)
    assert f**3 <= n < (f + 1) ** 3
    assert (c - 1) ** 3 < n <= c**3


def test_c2xa4_k2_pairs():
    assert c2xa4_k2_solutions(0) == (frozenset(), [])
    assert c2xa4_k2_solutions(1) == (frozenset({(-3, 3), (3, -3)}), [])
    assert c2xa4_k2_solutions(2) == (frozenset({(-3, 1)}), [(3, -1)])


def test_verify_tables():
    rep = verify_tables(10**5)
    assert rep.ok, [c for c in rep.checks if not c.ok]
    assert rep.tables == ["s3-curves", "c2xa4-k2-pairs", "s4minus-curves", "a4-curve"]
    rows = {(c.table, c.row): c for c in rep.checks}
    assert rows["s3-curves", "B=-6"].found == {-9}
    for B in (1, 2, 3, -3):
        assert rows["s3-curves", f"B={B}"].found == frozenset()
    assert rows["c2xa4-k2-pairs", "n=1"].found == {(-3, 3), (3, -3)}
    assert rows["s4minus-curves", "E3- (A,B)"].non_viable == [(33, 189)]
    assert rows["s4minus-curves", "E4- (A,B)"].non_viable == [(1942, 85580)]
    assert rows["s4minus-curves", "E2+ (A,B)"].filtered == [(0, 324)]
    assert rows["s4minus-curves", "E1+ X"].found == rows["s4minus-curves", "E2- X"].found == frozenset()
