"""Verification suites: each returns a list of CheckResult rows."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import boards, stirling
from .boards import TEST_BOARDS
from .fibtiles import Tiling, fib, rank, rank_gf, unrank, enumerate_tilings, zeckendorf
from .qalgebra import QPoly, qbracket
from .stirling import CheckResult, _result

SUITES = ("files", "rooks", "mixed", "connection", "identities", "gf", "coeffs", "inverse")

# brute-force listing of mixed placements is only done below this size
MIXED_BRUTE_LIMIT = 100_000

SFBAR_8_6 = (21, 28, 31, 29, 30, 25, 23, 22, 15, 10, 7, 5, 3, 2, 1)
CFBAR_9_7_PREFIX = (28, 42, 50, 53, 58, 57, 58, 60)


@dataclass(frozen=True)
class Bounds:
    max_n: int = 10
    max_x: int = 5
    series_order: int = 12

    def __post_init__(self):
        if min(self.max_n, self.max_x, self.series_order) < 1:
            raise ValueError("bounds must be positive")


def suite_files(b: Bounds) -> list[CheckResult]:
    out = []
    for board in TEST_BOARDS:
        for k in range(board.n + 1):
            for barred in (False, True):
                tag = "bar" if barred else "plain"
                enum = boards.file_poly(board, k, barred)
                key = (str(board), k)
                out.append(_result(f"file rec={tag}", key, enum, boards.file_poly_rec(board, k, barred)))
                out.append(_result(f"file z={tag}", key, enum, boards.file_poly_z(board, k, barred)))
            # q = 1 gives the plain count: coefficient of z^k in prod(1 + F_b z)
            count = _zcoeff([fib(h) for h in board.heights], k)
            out.append(_result("file count at q=1", (str(board), k), count,
                               boards.file_poly(board, k, True).at_one()))
    for n in range(1, min(b.max_n, 9) + 1):
        for fam in ("cF", "cFbar"):
            out += stirling.interp_report(fam, n)
    return out


def suite_rooks(b: Bounds) -> list[CheckResult]:
    out = []
    for board in TEST_BOARDS:
        for k in range(board.n + 1):
            key = (str(board), k)
            for barred in (False, True):
                tag = "bar" if barred else "plain"
                out.append(_result(f"rook rec={tag}", key, boards.rook_poly(board, k, barred),
                                   boards.rook_poly_rec(board, k, barred)))
            out.append(_result("rel", key, True, boards.rel_check(board, k)))
        if board.n <= 5:
            for k in range(board.n + 1):
                bad = 0
                for cols in combinations(range(1, board.n + 1), k):
                    eff = tuple(board.b(c - s) for s, c in enumerate(cols))
                    try:
                        trace = boards.simulate_cancellation(board, cols)
                    except AssertionError:
                        bad += 1
                        continue
                    if trace.effective != eff or trace.untiled != board.heights[: board.n - k]:
                        bad += 1
                out.append(_result("cancellation simulator", (str(board), k), 0, bad))
    for n in range(1, min(b.max_n, 9) + 1):
        for fam in ("SF", "SFbar"):
            out += stirling.interp_report(fam, n)
    return out


def sample_aug_placement(flipped_col: int = 5) -> boards.MixedPlacement:
    """AugB_7 on F(2,3,4,4,5,5): tilings in columns 1, 4, 5 (one flipped), rooks in 2, 3, 6."""
    board = boards.FerrersBoard((2, 3, 4, 4, 5, 5))
    choices = [None] * 6
    choices[0] = boards.AboveTiling(unrank(2, 0))
    choices[1] = boards.BarRook(5)
    choices[2] = boards.BarRook(3)
    for col, r in ((4, 1), (5, 2)):
        t = unrank(4, r)
        choices[col - 1] = boards.FlippedTiling(t) if col == flipped_col else boards.AboveTiling(t)
    choices[5] = boards.BarRook(5)
    return boards.MixedPlacement(board, 7, tuple(choices), augmented=True)


def suite_mixed(b: Bounds) -> list[CheckResult]:
    out = []
    xs = range(1, b.max_x + 1)
    for board in TEST_BOARDS:
        for x in xs:
            key = (str(board), x)
            bx = qbracket(x)
            for barred in (False, True):
                tag = "bar" if barred else "plain"
                prod = boards.file_product(board, x, barred)
                out.append(_result(f"mixed file sum={tag}", key, prod, boards.mixed_file_sum(board, x, barred)))
                out.append(_result(f"file product={tag}", key, prod,
                                   boards.file_product_expansion(board, x, barred)))
            out.append(_result("mixed aug sum", key, bx**board.n, boards.mixed_aug_sum(board, x)))
            out.append(_result("rook product", key, True, boards.rook_product_check(board, x)))
            if not boards.rook_product_applicable(board, x):
                # only the barred form was checked; flag the missing unbarred one
                out.append(stirling._skip("rook product unbarred form", key))
            size = math.prod(2 * fib(h) + x for h in board.heights)
            if size <= MIXED_BRUTE_LIMIT:
                for aug in (False, True):
                    fast = boards.mixed_aug_sum(board, x) if aug else boards.mixed_file_sum(board, x, True)
                    out.append(_result(f"mixed brute force aug={aug}", key, fast,
                                       boards.mixed_sum_bruteforce(board, x, aug, True)))
                out.append(_result("mixed brute force plain unbarred", key,
                                   boards.mixed_file_sum(board, x, False),
                                   boards.mixed_sum_bruteforce(board, x, False, False)))
    for col in (4, 5):
        p = sample_aug_placement(col)
        out.append(_result("sample aug weight", ("plain", col), QPoly.monomial(19, -1),
                           boards.mixed_weight(p, False)))
        out.append(_result("sample aug weight", ("bar", col), QPoly.monomial(13, -1),
                           boards.mixed_weight(p, True)))
    return out


def suite_connection(b: Bounds) -> list[CheckResult]:
    out = []
    for n in range(1, b.max_n + 1):
        for x in range(1, b.max_x + 1):
            out += stirling.connection_report(n, x)
    out += stirling.lagged_cf_diagnostic(2, 1)
    return out


def suite_identities(b: Bounds) -> list[CheckResult]:
    out = []
    for n in range(0, b.max_n + 1):
        out += stirling.i1_report(n)
        out += stirling.closed_forms_report(n)
    # q = 1 shadows and row sums
    big = b.max_n
    shadows = {"SF": "S", "SFbar": "S", "cF": "c", "cFbar": "c"}
    for fam, kind in shadows.items():
        t, ints = stirling.triangle(fam, big), stirling.bpr_triangle(kind, big)
        bad = [(n, k) for n in range(big + 1) for k in range(n + 1) if t(n, k).at_one() != ints[(n, k)]]
        out.append(_result(f"q=1 shadow {fam}", (big,), [], bad))
    cfb = stirling.triangle("cFbar", big)
    for n in range(1, big + 1):
        out.append(_result("row sum cFbar(1)", (n,), math.prod(1 + fib(i) for i in range(1, n)),
                           sum(p.at_one() for p in cfb.row(n))))
        if n >= 2:
            p = cfb(n, n - 1)
            out.append(_result("cFbar[n,n-1] = sum [F_i]", (n,),
                               sum((qbracket(fib(i)) for i in range(1, n)), QPoly()), p))
            out.append(_result("cFbar[n,n-1] weakly decreasing", (n,), True,
                               all(a >= c for a, c in zip(p.coeffs, p.coeffs[1:]))))
        chain = stirling.chain_product(n)
        out.append(_result("chain product = cFbar[n,1]", (n,), chain, cfb(n, 1)))
        out.append(_result("chain product palindromic", (n,), True, chain.is_palindromic()))
        out.append(_result("chain product unimodal", (n,), True, stirling.unimodality(chain).ok))
    sfb86 = stirling.cell("SFbar", 8, 6)
    out.append(_result("SFbar[8,6] coefficients", (8, 6), SFBAR_8_6, sfb86.coeffs))
    out.append(_result("SFbar[8,6] not unimodal", (8, 6), False, stirling.unimodality(sfb86).ok))
    cfb97 = stirling.cell("cFbar", 9, 7)
    out.append(_result("cFbar[9,7] prefix", (9, 7), CFBAR_9_7_PREFIX, cfb97.coeffs[:8]))
    out.append(_result("cFbar[9,7] not unimodal", (9, 7), False, stirling.unimodality(cfb97).ok))
    out += _tiling_checks(min(b.max_n, 20))
    return out


def _tiling_checks(max_n: int) -> list[CheckResult]:
    out = []
    for n in range(1, max_n + 1):
        tilings = enumerate_tilings(n)
        out.append(_result("tiling count", (n,), fib(n), len(tilings)))
        out.append(_result("rank = position", (n,), list(range(fib(n))), [rank(n, t) for t in tilings]))
        out.append(_result("unrank inverts rank", (n,), tilings, [unrank(n, m) for m in range(fib(n))]))
        out.append(_result("rank gf", (n,), qbracket(fib(n)), rank_gf(n)))
    pic = Tiling.from_level_seq((1, 1, 1, 0, 2, 0, 2, 1, 1, 1, 0, 2, 1))
    out.append(_result("unrank(13,100)", (13, 100), pic, unrank(13, 100)))
    out.append(_result("zeckendorf(100)", (100,), (11, 6, 4), zeckendorf(100)))
    return out


def suite_gf(b: Bounds) -> list[CheckResult]:
    out = []
    for k in range(1, min(6, b.series_order) + 1):
        out += stirling.gf_report(k, b.series_order)
    return out


def suite_coeffs(b: Bounds) -> list[CheckResult]:
    out = []
    for n in range(1, b.max_n + 1):
        for k in range(1, n + 1):
            out += stirling.coeff_formulas_report(n, k)
    return out


def suite_inverse(b: Bounds) -> list[CheckResult]:
    return [_result("barred matrix inverse", (b.max_n,), True, stirling.matrix_inverse_check(b.max_n))]


_RUNNERS = {
    "files": suite_files,
    "rooks": suite_rooks,
    "mixed": suite_mixed,
    "connection": suite_connection,
    "identities": suite_identities,
    "gf": suite_gf,
    "coeffs": suite_coeffs,
    "inverse": suite_inverse,
}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("FIBO_ROOK_THREADS", "1")))
    except ValueError:
        return 1


def run(suite: str, bounds: Bounds) -> dict[str, list[CheckResult]]:
    """Run one suite or "all"; results keyed by suite name in canonical order."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        results = dict(zip(names, pool.map(lambda s: _RUNNERS[s](bounds), names)))
    return {name: results[name] for name in names}


def _zcoeff(values: list[int], k: int) -> int:
    poly = [1]
    for v in values:
        poly = [a + v * b for a, b in zip(poly + [0], [0] + poly)]
    return poly[k] if k < len(poly) else 0
