from fractions import Fraction

from hypothesis import given, strategies as st

from lensobstruct.contfrac import ContinuedFraction, LensSpace, coprime_pairs, expand
from lensobstruct.tridiag import (apq_closed_form, apq_oracle, determinant, exact_inverse,
                                  is_positive_definite, linking_matrix, quadratic_form)


def cf_of(*coeffs):
    return ContinuedFraction.from_coeffs(coeffs)


def test_linking_matrix_examples():
    assert linking_matrix(cf_of(-4, -2)) == ((-4, 1), (1, -2))
    assert linking_matrix(cf_of(-5)) == ((-5,),)
    assert determinant(linking_matrix(cf_of(-3, -3, -3, -3))) == 55


def test_apq_examples():
    assert apq_closed_form(cf_of(-4, -2)) == ((2, 1), (1, 4))
    assert apq_closed_form(cf_of(-5, -3)) == ((3, 1), (1, 5))
    assert apq_closed_form(cf_of(-3, -2, -2)) == ((3, 2, 1), (2, 6, 3), (1, 3, 5))
    assert apq_oracle(cf_of(-4, -2)) == ((2, 1), (1, 4))
    assert apq_oracle(cf_of(-7)) == ((1,),)
    big = cf_of(-3, -3, -3, -3)
    assert apq_oracle(big) == apq_closed_form(big)


def test_exact_inverse_is_inverse():
    m = linking_matrix(cf_of(-3, -5, -2, -4))
    inv = exact_inverse(m)
    n = len(m)
    for i in range(n):
        for j in range(n):
            assert sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) == (i == j)


def test_linking_determinant_sign():
    for p, q in coprime_pairs(40):
        cf = expand(LensSpace(p, q))
        assert determinant(linking_matrix(cf)) == (-1) ** cf.n * p


def test_apq_positive_definite_and_positive():
    for p, q in coprime_pairs(60):
        a = apq_closed_form(expand(LensSpace(p, q)))
        assert all(x > 0 for row in a for x in row)
        assert all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(len(a)))
        assert is_positive_definite(a)


def test_det_product_bound():
    for p, q in coprime_pairs(200):
        cf = expand(LensSpace(p, q))
        if cf.n < 2 or any(x > -3 for x in cf.coeffs):
            continue
        a = apq_closed_form(cf)
        for i in range(cf.n):
            prod = 1
            for j in range(i, cf.n):
                prod *= -cf.coeffs[j] - 1
                assert a[i][j] * prod < p


@given(st.lists(st.integers(-8, -2), min_size=1, max_size=7),
       st.lists(st.integers(-5, 5), min_size=7, max_size=7))
def test_oracle_matches_closed_form(coeffs, v):
    cf = ContinuedFraction.from_coeffs(coeffs)
    a = apq_closed_form(cf)
    assert a == apq_oracle(cf)
    assert quadratic_form(a, v[:cf.n]) >= 0
