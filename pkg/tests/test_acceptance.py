"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]`` or ``[FAIL]`` line with its measured
runtime, so ``pytest -v`` output (or ``python tests/test_acceptance.py``)
doubles as the acceptance report.
"""
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from fibostirling import boards, export, stirling, verify
from fibostirling.boards import TEST_BOARDS
from fibostirling.fibtiles import Tiling, enumerate_tilings, fib, rank, rank_gf, unrank, zeckendorf
from fibostirling.qalgebra import QPoly, qbracket

_capture = None


@pytest.fixture(autouse=True)
def _grab_capture(pytestconfig):
    global _capture
    _capture = pytestconfig.pluginmanager.getplugin("capturemanager")
    yield
    _capture = None


def _emit(line: str):
    if _capture is not None:
        with _capture.global_and_fixture_disabled():
            print("\n" + line, flush=True)
    else:
        print(line, flush=True)


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    """Time the body, print the verdict line, then re-raise any failure."""
    start = time.perf_counter()
    err = None
    try:
        yield
    except AssertionError as exc:
        err = exc
    elapsed = time.perf_counter() - start
    slow = limit is not None and elapsed >= limit
    ok = err is None and not slow
    budget = f" (limit {limit:.0f}s)" if limit else ""
    note = "" if ok else (" : over time budget" if err is None else f" : {err}")
    _emit(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2} {title} {elapsed:.2f}s{budget}{note}")
    if err is not None:
        raise err
    assert not slow, f"criterion {number} took {elapsed:.1f}s"


def test_c01_rank_unrank_bijection():
    with criterion(1, "rank/unrank bijection n<=20", 5):
        for n in range(1, 21):
            tilings = enumerate_tilings(n)
            assert len(tilings) == fib(n)
            for m, t in enumerate(tilings):
                assert rank(n, t) == m
                assert unrank(n, m) == t
            assert rank_gf(n) == qbracket(fib(n))


def test_c02_worked_examples():
    with criterion(2, "unrank(13,100), zeckendorf(100), nine-level rank"):
        seq = (1, 1, 1, 0, 2, 0, 2, 1, 1, 1, 0, 2, 1)
        assert unrank(13, 100).level_seq() == seq
        assert zeckendorf(100) == (11, 6, 4)
        # the rank sums F_{i-1} over the levels i where a height-2 tile ends;
        # for this sequence those are levels 3 and 8, so F_2 + F_7 = 14
        assert rank(9, Tiling.from_level_seq((1, 0, 2, 1, 1, 1, 0, 2, 1))) == 14


def test_c03_file_triple_agreement():
    with criterion(3, f"file enumeration = recursion = z-product on {len(TEST_BOARDS)} boards", 30):
        assert len(TEST_BOARDS) >= 30
        for board in TEST_BOARDS:
            for k in range(board.n + 1):
                for barred in (False, True):
                    enum = boards.file_poly(board, k, barred)
                    assert enum == boards.file_poly_rec(board, k, barred), (board, k, barred)
                    assert enum == boards.file_poly_z(board, k, barred), (board, k, barred)


def test_c04_rooks_and_cancellation():
    with criterion(4, "rook recursion, rel, cancellation simulator"):
        for board in TEST_BOARDS:
            for k in range(board.n + 1):
                for barred in (False, True):
                    assert boards.rook_poly(board, k, barred) == boards.rook_poly_rec(board, k, barred)
                assert boards.rel_check(board, k), (board, k)
            if board.n > 5:
                continue
            for k in range(board.n + 1):
                for cols in combinations(range(1, board.n + 1), k):
                    trace = boards.simulate_cancellation(board, cols)
                    assert trace.effective == tuple(board.b(c - s) for s, c in enumerate(cols))


def test_c05_product_theorems():
    with criterion(5, "mixed sums and product theorems, x in 1..3", 60):
        for board in TEST_BOARDS:
            for x in (1, 2, 3):
                for barred in (False, True):
                    prod = boards.file_product(board, x, barred)
                    assert boards.mixed_file_sum(board, x, barred) == prod
                    assert boards.file_product_expansion(board, x, barred) == prod
                assert boards.mixed_aug_sum(board, x) == qbracket(x) ** board.n
                assert boards.rook_product_check(board, x), (board, x)
        for col in (4, 5):
            p = verify.sample_aug_placement(col)
            assert boards.mixed_weight(p, False) == QPoly.monomial(19, -1)
            assert boards.mixed_weight(p, True) == QPoly.monomial(13, -1)


def test_c06_interpretations():
    with criterion(6, "all four families equal placement polynomials on B_n, n<=9", 30):
        for family in stirling.FAMILIES:
            for n in range(1, 10):
                assert stirling.interp_check(family, n), (family, n)


def test_c07_connection_identities():
    x_max = fib(6) + 3
    with criterion(7, f"four defining expansions, n<=7, x<={x_max}"):
        inapplicable = 0
        for n in range(1, 8):
            for x in range(1, x_max + 1):
                report = stirling.connection_report(n, x)
                assert stirling.all_passed(report), (n, x)
                inapplicable += sum(r.status == stirling.INAPPLICABLE for r in report)
        assert inapplicable < 7 * x_max


def test_c08_identity_ledger():
    with criterion(8, "I1, closed forms, coefficient formulas, gf, inverse", 30):
        for n in range(0, 13):
            assert stirling.i1_check(n), n
            assert stirling.closed_forms_check(n), n
        items = set()
        for n in range(1, 13):
            for k in range(1, n + 1):
                report = stirling.coeff_formulas_report(n, k)
                assert stirling.all_passed(report), (n, k)
                items |= {r.item for r in report if r.status == stirling.PASS}
        assert items == {f"id5({i})" for i in range(1, 7)}
        for k in range(1, 7):
            assert stirling.gf_check(k, 12), k
        assert stirling.matrix_inverse_check(10)


def test_c09_pinned_counterexamples():
    with criterion(9, "non-unimodal pins and palindromic chain products"):
        sfb = stirling.cell("SFbar", 8, 6)
        assert sfb.coeffs == (21, 28, 31, 29, 30, 25, 23, 22, 15, 10, 7, 5, 3, 2, 1)
        assert not stirling.unimodality(sfb).ok
        cfb = stirling.cell("cFbar", 9, 7)
        assert cfb.coeffs[:8] == (28, 42, 50, 53, 58, 57, 58, 60)
        assert not stirling.unimodality(cfb).ok
        for n in range(1, 11):
            p = stirling.cell("cFbar", n, 1)
            assert p == stirling.chain_product(n)
            assert p.is_palindromic() and stirling.unimodality(p).ok


def test_c10_exponent_diagnostic():
    with criterion(10, "q^F(n-1) exponent breaks the cF expansion at (2,1)"):
        bad, good = stirling.lagged_cf_diagnostic(2, 1)
        assert bad.actual == stirling.FAIL
        assert good.actual == stirling.PASS
        results = verify.run("connection", verify.Bounds(max_n=2, max_x=1))["connection"]
        assert bad in results


def test_c11_end_to_end():
    with criterion(11, "verify all (default bounds) exits 0, exports round-trip", 120):
        proc = subprocess.run([sys.executable, "-m", "fibostirling", "verify", "all"],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
        for family in stirling.FAMILIES:
            tri = stirling.triangle(family, 10)
            js = export.to_json(tri)
            assert export.to_json(export.from_json(js)) == js
            cs = export.to_csv(tri)
            assert export.to_csv(export.from_csv(cs)) == cs


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
