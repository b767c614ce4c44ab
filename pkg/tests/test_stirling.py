import pytest

from fibostirling import stirling
from fibostirling.fibtiles import fib
from fibostirling.qalgebra import ONE, QPoly, qbracket


def test_small_rows():
    assert stirling.triangle("SF", 2).row(2)[1:] == [ONE, QPoly((0, 1))]
    assert stirling.triangle("cF", 3).row(3)[1:] == [ONE, QPoly((0, 2)), QPoly((0, 0, 1))]
    assert stirling.cell("SFbar", 5, 3) == QPoly((6, 4, 1))


def test_unknown_family():
    with pytest.raises(ValueError):
        stirling.triangle("XF", 3)


def test_out_of_range_cells_are_zero():
    t = stirling.triangle("cFbar", 4)
    assert t(4, 5).is_zero and t(4, -1).is_zero


@pytest.mark.parametrize("family", stirling.FAMILIES)
@pytest.mark.parametrize("n", range(1, 7))
def test_board_interpretation(family, n):
    assert stirling.interp_check(family, n)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("x", range(1, 6))
def test_connection(n, x):
    assert stirling.connection_check(n, x)


def test_sfdef_inapplicable_when_falling_factorial_undefined():
    items = {r.item: r.status for r in stirling.connection_report(5, 1)}
    assert items["SFdef"] == stirling.INAPPLICABLE


def test_lagged_exponent_fails():
    bad, good = stirling.lagged_cf_diagnostic(2, 1)
    assert bad.actual == stirling.FAIL and good.actual == stirling.PASS
    assert stirling.lagged_cf_triangle(2)(2, 2) != stirling.cell("cF", 2, 2)


def test_falling_guard():
    with pytest.raises(ValueError):
        stirling.falling(1, 4)


@pytest.mark.parametrize("n", range(0, 10))
def test_identities(n):
    assert stirling.i1_check(n)
    assert stirling.closed_forms_check(n)


def test_sixth_closed_form_at_five():
    # (1+q)^4 - (4q + 1) has no linear term
    assert stirling.cell("SF", 5, 3) == QPoly((0, 0, 6, 4, 1))


def test_generating_function():
    for k in range(1, 5):
        assert stirling.gf_check(k, 8)


def test_coefficient_formulas():
    for n in range(1, 10):
        for k in range(1, n + 1):
            assert stirling.coeff_formulas_check(n, k)


def test_barred_matrices_are_inverse():
    assert stirling.matrix_inverse_check(6)


def test_shape_verdicts():
    assert stirling.unimodality(qbracket(5)).ok
    assert stirling.log_concavity(qbracket(5)).ok
    v = stirling.unimodality(QPoly((1, 3, 2, 4)))
    assert not v.ok and v.index == 3
    assert not stirling.log_concavity(QPoly((1, 0, 1))).ok


def test_chain_product():
    assert stirling.chain_product(3) == ONE
    assert stirling.chain_product(5) == QPoly((1, 2, 2, 1))
    p = stirling.chain_product(9)
    assert p.degree == sum(fib(i) - 1 for i in range(1, 9)) == 46
    assert p.is_palindromic()
    with pytest.raises(ValueError):
        stirling.chain_product(0)


@pytest.mark.parametrize("family,kind", [("SF", "S"), ("SFbar", "S"), ("cF", "c"), ("cFbar", "c")])
def test_q_equals_one(family, kind):
    t, ints = stirling.triangle(family, 9), stirling.bpr_triangle(kind, 9)
    assert all(t(n, k).at_one() == ints[(n, k)] for n in range(10) for k in range(n + 1))
