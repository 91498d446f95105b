from fractions import Fraction

import pytest
import sympy
from oracles import to_sympy

from nodal_prolong.kernel import (
    NonConstantCoefficient,
    NotLinear,
    Polynomial,
    const,
    derivative,
    primitive_part,
    solve_linear_and_eliminate,
    substitute,
    total_derivative,
    var,
    var_key,
)
from nodal_prolong.parsing import parse_polynomial as P

x1, x2, x1_2, x2_1 = var("x1"), var("x2"), var("x1(2)"), var("x2(1)")
N, R, D, t = var("N"), var("R"), var("D"), var("t")


def test_additive_identity():
    assert x1 * x2 + 0 == x1 * x2
    assert x1 * x2 + Polynomial() == x1 * x2


def test_difference_of_squares():
    p = (x1 + x2) * (x1 - x2)
    assert p == x1**2 - x2**2
    assert str(p) == "x1^2 - x2^2"


def test_sum_matches_term_map_oracle():
    p = 2 * (x1_2 * x2) + x1
    oracle = {(("x2", 1), ("x1(2)", 1)): Fraction(2), (("x1", 1),): Fraction(1)}
    assert {tuple(sorted(m, key=lambda ve: var_key(ve[0]))): c for m, c in p.items()} == {
        tuple(sorted(m, key=lambda ve: var_key(ve[0]))): c for m, c in oracle.items()
    }


def test_coefficients_are_reduced_and_zero_is_dropped():
    p = const(Fraction(6, 4)) * x1 + x2 - x2
    assert p.coefficient((("x1", 1),)) == Fraction(3, 2)
    assert p.variables == {"x1"}
    assert (x1 - x1).is_zero()


def test_variable_order_is_level_then_index():
    names = ["x2(1)", "x1", "s", "x1(12)", "t", "x2", "x1(2)"]
    assert sorted(names, key=var_key) == ["t", "s", "x1", "x2", "x1(2)", "x2(1)", "x1(12)"]


@pytest.mark.parametrize(
    "p, v, expected",
    [
        (x1 * x2, "x1", x2),
        (x2**3, "x2", 3 * x2**2),
        (x1 * x2_1 + x2, "x2(1)", x1),
    ],
)
def test_derivative(p, v, expected):
    assert derivative(p, v) == expected


def test_derivative_against_sympy():
    p = P("3/2*x1^3*x2(1)^2 - x1*x2 + 7*x2(1) - 4")
    for v in ("x1", "x2", "x2(1)"):
        assert to_sympy(derivative(p, v)) == sympy.diff(to_sympy(p), sympy.Symbol(v))


def test_substitute_identity():
    assert substitute(x1 * x2, "x1", x1) == x1 * x2


def test_substitute_monomial():
    assert substitute(D * R**2, "D", -N * R) == -N * R**3


def test_substitute_flat_limit_shape():
    alpha, beta = 1, 1
    p = D**alpha * R ** (alpha + beta) - t
    q = substitute(p, "D", const(Fraction(-alpha, alpha + beta)) * N * R)
    assert q == const(Fraction(-1, 2)) * N * R**3 - t


@pytest.mark.parametrize(
    "relation, p, expected",
    [
        (N * R + D, D, -N * R),
        (2 * N * R + D, D * R, -2 * N * R**2),
        (3 * N * R + 2 * D, D**2, const(Fraction(9, 4)) * N**2 * R**2),
    ],
)
def test_solve_linear_and_eliminate(relation, p, expected):
    assert solve_linear_and_eliminate(relation, "D", p) == expected


def test_eliminate_rejects_nonlinear_and_nonconstant():
    with pytest.raises(NotLinear):
        solve_linear_and_eliminate(D**2 + N, "D", D)
    with pytest.raises(NotLinear):
        solve_linear_and_eliminate(N + R, "D", D)
    with pytest.raises(NonConstantCoefficient):
        solve_linear_and_eliminate(N * D + R, "D", D)


def test_primitive_part():
    assert primitive_part(4 * x1 * x2 + 6 * x2) == 2 * x1 * x2 + 3 * x2
    assert primitive_part(-2 * x1) == -x1
    assert primitive_part(const(Fraction(-3, 4)) * x1 + const(Fraction(3, 2))) == -x1 + 2


def test_total_derivative_chain_rule():
    # d/dx1 of x1*x2 - t with x2 a function of x1
    assert total_derivative(x1 * x2 - t, {"x1": const(1), "x2": x2_1}) == x1 * x2_1 + x2
    with pytest.raises(KeyError):
        total_derivative(x1 * x2, {"x1": const(1)})


def test_division_by_constant_only():
    assert (2 * x1) / 2 == x1
    with pytest.raises((TypeError, ZeroDivisionError, ValueError)):
        x1 / x2
