from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from antimagic import (
    ContractError,
    Polynomial,
    certify_reduction_monomial,
    reduction_polynomial,
    reduction_target_exponents,
    vandermonde_coefficient_formula,
    vandermonde_power,
    vandermonde_target_exponents,
)
from antimagic.poly import nonzero_top_monomial

X1 = Polynomial.variable(2, 0)
X2 = Polynomial.variable(2, 1)

# extension-coefficient values for n = 4..14, frozen from an independent
# computer-algebra expansion of the defining products
UNDIRECTED_COEFFS = {
    4: -1, 5: 1, 6: 1, 7: -2, 8: 4, 9: 9, 10: -29, 11: 13, 12: 85, 13: -408, 14: -78,
}
ORIENTED_COEFFS = {
    4: 30, 5: -42, 6: 18, 7: -252, 8: 396, 9: -312, 10: 2574, 11: -4602,
    12: 4862, 13: -31824, 14: 62016,
}


def test_difference_of_squares():
    assert (X1 - X2) * (X1 + X2) == X1**2 - X2**2


def test_cube_expansion():
    p = (X1 - X2) ** 3
    assert p.coefficient((3, 0)) == 1
    assert p.coefficient((2, 1)) == -3
    assert p.coefficient((1, 2)) == 3
    assert p.coefficient((0, 3)) == -1


def test_zeroth_power_is_one():
    p = (X1 - X2) ** 0
    assert p == Polynomial.one(2)


def test_coefficient_queries():
    p = (X1 - X2) ** 3
    assert p.coefficient((1, 2)) == 3
    assert p.coefficient((0, 0)) == 0
    assert (X1**2 - X2**2).coefficient((2, 0)) == 1


def test_arity_mismatch_rejected():
    with pytest.raises(ContractError):
        X1 + Polynomial.variable(3, 0)
    with pytest.raises(ContractError):
        X1.coefficient((1, 0, 0))


def test_vandermonde_formula_small():
    assert vandermonde_coefficient_formula(2, 0) == 1
    assert vandermonde_coefficient_formula(2, 1) == 3
    assert vandermonde_coefficient_formula(3, 1) == 15


def test_vandermonde_formula_matches_extraction():
    for n_vars in (2, 3):
        for s in (0, 1, 2):
            p = vandermonde_power(n_vars, 2 * s + 1)
            c = p.coefficient(vandermonde_target_exponents(n_vars, s))
            assert abs(c) == vandermonde_coefficient_formula(n_vars, s)


def test_reduction_polynomial_undirected_n4():
    h = reduction_polynomial(4, "undirected")
    x1, x2, x3 = (Polynomial.variable(3, i) for i in range(3))
    expected = Polynomial.one(3)
    for a, b in ((x1, x2), (x1, x3), (x2, x3)):
        expected = expected * (a - b) ** 2 * (a + b)
    assert h == expected
    assert h.degree() == 9


def test_reduction_polynomial_degrees():
    assert reduction_polynomial(7, "undirected").degree() == 21  # 4n - 7
    assert reduction_polynomial(4, "oriented").degree() == 12  # 4n - 4
    for n in (4, 6, 9):
        for mode in ("undirected", "oriented"):
            assert reduction_polynomial(n, mode).is_homogeneous()


def _defining_product_value(n, mode, point):
    """Evaluate the reduction product directly from its factored form."""
    x1, x2, x3 = (Fraction(p) for p in point)
    total = (x1 * x2 * x3) ** (n - 4) * (x1 + x2 + x3) ** (n - 4)
    if mode == "undirected":
        for a, b in ((x1, x2), (x1, x3), (x2, x3)):
            total *= (a - b) ** 2 * (a + b)
        return total
    total *= (-1) ** (3 * (n - 4))
    for a, b in ((x1, x2), (x1, x3), (x2, x3)):
        total *= (a * a - b * b) * (b - a)
    total *= (2 * x1 + x2 + x3) * (x1 + 2 * x2 + x3) * (x1 + x2 + 2 * x3)
    return total


@pytest.mark.parametrize("mode", ["undirected", "oriented"])
@pytest.mark.parametrize("n", [4, 5, 8])
def test_reduction_polynomial_matches_factored_form(mode, n):
    h = reduction_polynomial(n, mode)
    for point in ((1, 2, 4), (-3, 1, 2), (Fraction(1, 2), 3, -1)):
        assert h.evaluate(point) == _defining_product_value(n, mode, point)


def test_target_exponents_sum_to_degree():
    for n in range(4, 20):
        a, b, c = reduction_target_exponents(n, "undirected")
        assert a + b + c == 4 * n - 7
        a, b, c = reduction_target_exponents(n, "oriented")
        assert a + b + c == 4 * n - 4


def test_certificates_match_frozen_values():
    for n, expected in UNDIRECTED_COEFFS.items():
        cert = certify_reduction_monomial(n, "undirected")
        assert cert.coefficient == expected
        assert cert.nonzero
    for n, expected in ORIENTED_COEFFS.items():
        cert = certify_reduction_monomial(n, "oriented")
        assert cert.coefficient == expected
        assert cert.nonzero


def test_certificate_examples():
    cert = certify_reduction_monomial(4, "undirected")
    assert cert.exponents == (4, 3, 2)
    cert = certify_reduction_monomial(4, "oriented")
    assert cert.exponents == (4, 4, 4)


def test_homogeneous_off_degree_coefficients_vanish():
    h = reduction_polynomial(5, "undirected")
    assert h.coefficient((1, 1, 1)) == 0


def test_nonzero_top_monomial_minimizes_peak():
    p = (X1 + X2) ** 4
    assert nonzero_top_monomial(p) == (2, 2)


@st.composite
def small_polys(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 5))):
        exps = (draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        terms[exps] = draw(st.integers(-9, 9))
    return Polynomial(2, terms)


@settings(max_examples=60)
@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=30)
@given(small_polys(), st.integers(0, 5))
def test_pow_matches_repeated_product(p, e):
    expected = Polynomial.one(2)
    for _ in range(e):
        expected = expected * p
    assert p**e == expected
