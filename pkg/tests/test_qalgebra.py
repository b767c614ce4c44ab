import pytest
from hypothesis import given, strategies as st

from fibostirling.qalgebra import (
    ONE, Q, ZERO, PQPoly, QPoly, TSeries, eval_at_one, from_json, from_text,
    geometric, one_minus, poly_product, qbracket, series_mul, to_json, to_text,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=7)
polys = coeff_lists.map(QPoly)


def test_trailing_zeros_are_trimmed():
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPoly((0, 0)) == ZERO
    assert ZERO.degree == -1 and ZERO.is_zero


def test_qbracket_values():
    assert qbracket(0) == ZERO
    assert qbracket(1) == ONE
    assert qbracket(5).coeffs == (1, 1, 1, 1, 1)


@given(st.integers(0, 40))
def test_qbracket_at_one(n):
    assert eval_at_one(qbracket(n)) == n


def test_qbracket_negative_rejected():
    with pytest.raises(ValueError):
        qbracket(-1)


def test_products_expand():
    assert qbracket(2) * qbracket(3) == QPoly((1, 2, 2, 1))
    assert (ONE + Q) ** 3 == QPoly((1, 3, 3, 1))
    assert poly_product([]) == ONE


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_eval_at_one_is_a_homomorphism(a, b):
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a + b).at_one() == a.at_one() + b.at_one()


@given(polys, st.integers(0, 5))
def test_shift_and_unshift(a, m):
    assert a.shift(m).unshift(m) == a
    assert a.shift(m) == a * QPoly.monomial(m)


def test_unshift_requires_divisibility():
    with pytest.raises(ArithmeticError):
        QPoly((1, 1)).unshift(1)


def test_text_rendering():
    assert to_text(QPoly((1, 2, 1))) == "1 + 2*q + q^2"
    assert to_text(QPoly((0, -1, 3))) == "-q + 3*q^2"
    assert to_text(ZERO) == "0"


@given(polys)
def test_text_and_json_round_trip(a):
    assert from_text(to_text(a)) == a
    assert from_json(to_json(a)) == a


def test_palindrome():
    assert QPoly((1, 2, 2, 1)).is_palindromic()
    assert not QPoly((1, 2)).is_palindromic()


def test_pq_polynomials():
    f = PQPoly.monomial(1, 0) + PQPoly.monomial(0, 1)
    assert (f * f).evaluate(2, 3) == 25


def test_series_geometric_inverse():
    c = qbracket(3)
    s = series_mul(geometric(c, 6), one_minus(c, 6))
    assert s == TSeries(6, [ONE])


def test_series_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(TSeries(3, [ONE]), TSeries(4, [ONE]))


def test_series_shift_truncates():
    s = TSeries(3, [ONE, ONE, ONE, ONE]).shift_t(2)
    assert [s[i] for i in range(4)] == [ZERO, ZERO, ONE, ONE]
