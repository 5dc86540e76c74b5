from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from hodgediv.exactq import (
    InconsistentSystem,
    QMatrix,
    UnderdeterminedSystem,
    format_rational,
    matrix_rank,
    parse_rational,
    solve_exact,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_solve_identity():
    a = QMatrix.identity(2)
    assert solve_exact(a, [Q(3), Q(-5, 2)]) == (Q(3), Q(-5, 2))


def test_solve_2x2():
    # hand Gaussian elimination: x + y = 2, 2x + y = 3 -> x = y = 1
    a = QMatrix.from_rows([[2, 1], [1, 1]])
    assert solve_exact(a, [Q(3), Q(2)]) == (Q(1), Q(1))


def test_solve_inconsistent():
    a = QMatrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(InconsistentSystem) as exc:
        solve_exact(a, [Q(1), Q(3)])
    assert exc.value.rank == 1


def test_solve_underdetermined():
    a = QMatrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(UnderdeterminedSystem) as exc:
        solve_exact(a, [Q(1), Q(2)])
    assert exc.value.rank == 1


def test_rank_examples():
    assert matrix_rank(QMatrix.identity(3)) == 3
    assert matrix_rank(QMatrix(2, 5, (Q(0),) * 10)) == 0
    assert matrix_rank(QMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        QMatrix(2, 2, (Q(1),) * 3)
    with pytest.raises(ValueError):
        solve_exact(QMatrix.identity(2), [Q(1)])


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_solve_round_trip(rows, x):
    """For any solvable instance, A * solve(A, A x) = A x exactly."""
    a = QMatrix.from_rows(rows)
    b = a.mul_vector(x)
    try:
        sol = solve_exact(a, b)
    except UnderdeterminedSystem:
        return
    assert a.mul_vector(sol) == b


@given(st.lists(st.lists(rationals, min_size=2, max_size=2), min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_solve_deterministic(rows, b):
    a = QMatrix.from_rows(rows)
    results = []
    for _ in range(2):
        try:
            results.append(solve_exact(a, b))
        except (InconsistentSystem, UnderdeterminedSystem) as exc:
            results.append((type(exc), exc.rank))
    assert results[0] == results[1]


@given(rationals, rationals, rationals)
def test_canonical_form_preserved(x, y, z):
    """Fraction arithmetic stays in lowest terms with positive denominator."""
    for value in (x + y * z, x - y, x * z, (x + y) * (y + z)):
        from math import gcd
        assert value.denominator > 0
        assert gcd(abs(value.numerator), value.denominator) == 1


def test_zero_denominator_is_an_error():
    with pytest.raises(ZeroDivisionError):
        Q(1, 0)


@given(rationals)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_integers_without_denominator():
    assert format_rational(Q(3)) == "3"
    assert format_rational(Q(-5, 2)) == "-5/2"
