import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cptgroups.exact_arith import (
    I_UNIT, ONE, ZERO, CMatrix, Cyclotomic, block_diag, cyclotomic_polynomial, mat_kron, mat_mul,
    mat_trace, nullspace, render, root_of_unity, totient,
)
from oracles import Gauss, complex_matrix, complex_value, cyclotomic_poly_oracle, totient_oracle

CONDUCTORS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15]

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyclotomics(draw, conductors=CONDUCTORS):
    n = draw(st.sampled_from(conductors))
    k = draw(st.integers(0, 3))
    powers = {draw(st.integers(0, n - 1)): draw(fractions) for _ in range(k)}
    return Cyclotomic.from_powers(n, powers)


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9


# --- number theory --------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_matches_root_product(n):
    assert cyclotomic_polynomial(n) == cyclotomic_poly_oracle(n)


@pytest.mark.parametrize("n", range(1, 60))
def test_totient_matches_gcd_count(n):
    assert totient(n) == totient_oracle(n)


# --- canonical form -------------------------------------------------------------

def test_same_number_from_different_conductors_is_equal():
    assert root_of_unity(8, 2) == I_UNIT
    assert root_of_unity(12, 3) == I_UNIT
    assert root_of_unity(6, 3) == -ONE
    assert root_of_unity(2, 1) == -1
    assert hash(root_of_unity(8, 2)) == hash(I_UNIT)


def test_sum_of_all_roots_of_unity_vanishes():
    for n in (2, 3, 5, 6, 12):
        total = ZERO
        for k in range(n):
            total = total + root_of_unity(n, k)
        assert total == 0
        assert total.is_zero()


def test_rational_values_drop_to_conductor_one():
    x = root_of_unity(3, 1) + root_of_unity(3, 2)
    assert x.order == 1 and x == -1


def test_root_of_unity_rejects_bad_order():
    with pytest.raises(ValueError):
        root_of_unity(0)


def test_coefficient_vector_length_equals_order():
    for n in CONDUCTORS:
        x = root_of_unity(n, 1)
        assert len(x.coeffs) == x.order


# --- field axioms and agreement with complex numbers ----------------------------

@settings(max_examples=150, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_add_mul_agree_with_complex_evaluation(a, b):
    assert close(complex_value(a + b), complex_value(a) + complex_value(b))
    assert close(complex_value(a * b), complex_value(a) * complex_value(b))
    assert close(complex_value(a - b), complex_value(a) - complex_value(b))


@settings(max_examples=100, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_laws_hold_exactly(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=120, deadline=None)
@given(cyclotomics())
def test_inverse_and_division(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == 1
    assert close(complex_value(ONE / a), 1 / complex_value(a))


@settings(max_examples=120, deadline=None)
@given(cyclotomics())
def test_conjugate_and_norm(a):
    assert close(complex_value(a.conj()), complex_value(a).conjugate())
    assert a.conj().conj() == a
    # the norm is the product of all Galois conjugates over the conductor's field
    n = a.order
    prod = complex(1)
    for k in range(1, n + 1):
        if np.gcd(k, n) == 1:
            prod *= complex_value(a.galois(k))
    norm = a.norm()
    assert abs(complex(float(norm)) - prod) <= 1e-9 * max(1.0, abs(prod))


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), st.integers(-4, 6))
def test_integer_powers(a, k):
    if a.is_zero() and k < 0:
        return
    want = complex_value(a) ** k
    assert abs(complex_value(a ** k) - want) <= 1e-9 * max(1.0, abs(want))


@settings(max_examples=100, deadline=None)
@given(fractions, fractions, fractions, fractions)
def test_gaussian_rationals_match_exact_oracle(a, b, c, d):
    x = Cyclotomic.rational(a) + I_UNIT * b
    y = Cyclotomic.rational(c) + I_UNIT * d
    prod = Gauss(a, b) * Gauss(c, d)
    assert (x * y).real_imag() == (prod.re, prod.im)
    total = Gauss(a, b) + Gauss(c, d)
    assert (x + y).real_imag() == (total.re, total.im)


def test_mixed_int_and_fraction_equality():
    assert Cyclotomic.rational(Fraction(4, 2)) == 2
    assert Cyclotomic.rational(Fraction(1, 2)) == Fraction(1, 2)
    assert I_UNIT != 1


# --- rendering and serialisation ------------------------------------------------

@pytest.mark.parametrize("value, text", [
    (I_UNIT * 2, "2i"),
    (-ONE, "-1"),
    (ONE + I_UNIT, "1+i"),
    (Cyclotomic.rational(Fraction(1, 2)) - I_UNIT * Fraction(1, 2), "1/2-(1/2)i"),
    (-I_UNIT, "-i"),
    (ZERO, "0"),
    (root_of_unity(8, 3), "z8^3"),
])
def test_render(value, text):
    assert render(value) == text


@settings(max_examples=80, deadline=None)
@given(cyclotomics())
def test_json_round_trip(a):
    data = json.loads(json.dumps(a.to_json()))
    assert len(data["coeffs"]) == data["order"]
    assert Cyclotomic.from_json(data) == a


def test_json_rejects_wrong_length():
    with pytest.raises(ValueError):
        Cyclotomic.from_json({"order": 4, "coeffs": [[1, 1]]})


# --- matrices -------------------------------------------------------------------

@st.composite
def gaussian_matrices(draw, rows, cols):
    vals = st.integers(-3, 3)
    return CMatrix.from_rows([[Cyclotomic.rational(draw(vals)) + I_UNIT * draw(vals) for _ in range(cols)]
                              for _ in range(rows)])


@settings(max_examples=60, deadline=None)
@given(gaussian_matrices(2, 3), gaussian_matrices(3, 2))
def test_matrix_product_matches_numpy(a, b):
    assert np.allclose(complex_matrix(a @ b), complex_matrix(a) @ complex_matrix(b))
    assert np.allclose(complex_matrix(mat_kron(a, b)), np.kron(complex_matrix(a), complex_matrix(b)))


@settings(max_examples=60, deadline=None)
@given(gaussian_matrices(3, 3))
def test_inverse_trace_transpose(a):
    m = complex_matrix(a)
    assert close(complex_value(mat_trace(a)), np.trace(m))
    assert np.allclose(complex_matrix(a.conj_transpose()), m.conj().T)
    if abs(np.linalg.det(m)) > 1e-9:
        assert a @ a.inverse() == CMatrix.identity(3)
    else:
        with pytest.raises((ValueError, ZeroDivisionError)):
            a.inverse()


def test_dimension_errors():
    a = CMatrix.identity(2)
    b = CMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(ValueError):
        mat_mul(a, b)
    with pytest.raises(ValueError):
        mat_trace(b)


def test_block_diag():
    d = block_diag(CMatrix.scalar(2), CMatrix.identity(2))
    assert d.row_lists() == [[2, 0, 0], [0, 1, 0], [0, 0, 1]]


@settings(max_examples=50, deadline=None)
@given(gaussian_matrices(2, 4))
def test_nullspace_vectors_are_annihilated_and_complete(a):
    basis = nullspace(a.row_lists(), 4)
    m = complex_matrix(a)
    for v in basis:
        assert all(x == 0 for x in (a @ CMatrix.from_rows([[x] for x in v])).entries)
    assert len(basis) == 4 - np.linalg.matrix_rank(m, tol=1e-9)
