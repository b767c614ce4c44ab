"""q-analogues of the Fibonacci-Stirling numbers and the identities they satisfy.

Four families are built by recursion:

    SF    SF[n+1,k]  = q^F(k-1) SF[n,k-1]  + [F(k)] SF[n,k]
    SFbar S̄F[n+1,k] =            S̄F[n,k-1] + [F(k)] S̄F[n,k]
    cF    cF[n+1,k]  = q^F(n)   cF[n,k-1]  + [F(n)] cF[n,k]
    cFbar c̄F[n+1,k] =            c̄F[n,k-1] + [F(n)] c̄F[n,k]

with cell (0,0) equal to 1 and zero outside 0 <= k <= n. The check functions
compare these triangles against board enumerations, basis expansions at
integer x, closed forms, generating functions and coefficient formulas.
Checks return lists of :class:`CheckResult` rows; the ``*_check`` wrappers
reduce them to a bool.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Any, Callable, Mapping, Optional

from . import boards
from .fibtiles import fib
from .qalgebra import ONE, ZERO, QPoly, TSeries, geometric, poly_product, qbracket

FAMILIES = ("SF", "SFbar", "cF", "cFbar")

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


@dataclass(frozen=True)
class CheckResult:
    item: str
    key: tuple
    expected: Any
    actual: Any
    status: str

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _result(item: str, key: tuple, expected, actual) -> CheckResult:
    return CheckResult(item, key, expected, actual, PASS if expected == actual else FAIL)


def _skip(item: str, key: tuple) -> CheckResult:
    return CheckResult(item, key, None, None, INAPPLICABLE)


def all_passed(report) -> bool:
    return not any(r.failed for r in report)


# ---------------------------------------------------------------------------
# triangles

@dataclass(frozen=True)
class Triangle:
    family: str
    max_n: int
    cells: Mapping[tuple[int, int], QPoly]

    def __call__(self, n: int, k: int) -> QPoly:
        if k < 0 or k > n:
            return ZERO
        if n > self.max_n:
            raise IndexError(f"row {n} beyond max_n={self.max_n}")
        return self.cells[(n, k)]

    def row(self, n: int) -> list[QPoly]:
        return [self(n, k) for k in range(n + 1)]


def _step(family: str, n: int, k: int, cf_exponent: Callable[[int], int]):
    """(weight on cell (n,k-1), weight on cell (n,k)) producing cell (n+1,k)."""
    if family == "SF":
        return (QPoly.monomial(fib(k - 1)) if k >= 1 else ZERO), qbracket(fib(k))
    if family == "SFbar":
        return ONE, qbracket(fib(k))
    if family == "cF":
        return QPoly.monomial(cf_exponent(n)), qbracket(fib(n))
    if family == "cFbar":
        return ONE, qbracket(fib(n))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _build(family: str, max_n: int, cf_exponent: Callable[[int], int]) -> Triangle:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    cells = {(0, 0): ONE}
    for n in range(max_n):
        for k in range(n + 2):
            left = cells.get((n, k - 1), ZERO)
            here = cells.get((n, k), ZERO)
            a, b = _step(family, n, k, cf_exponent)
            cells[(n + 1, k)] = a * left + b * here
    return Triangle(family, max_n, MappingProxyType(cells))


@lru_cache(maxsize=None)
def triangle(family: str, max_n: int) -> Triangle:
    return _build(family, max_n, lambda n: fib(n))


@lru_cache(maxsize=None)
def lagged_cf_triangle(max_n: int) -> Triangle:
    """cF built with the exponent q^F(n-1) instead of q^F(n).

    Kept only to show that this variant violates the defining expansion.
    F(n-1) is clamped to F(0) at n = 0.
    """
    return _build("cF", max_n, lambda n: fib(max(n - 1, 0)))


def cell(family: str, n: int, k: int) -> QPoly:
    return triangle(family, max(n, 0))(n, k)


@lru_cache(maxsize=None)
def bpr_triangle(kind: str, max_n: int) -> dict[tuple[int, int], int]:
    """q = 1 shadows over plain integers: kind "S" or "c"."""
    t = {(0, 0): 1}
    for n in range(max_n):
        for k in range(n + 2):
            left, here = t.get((n, k - 1), 0), t.get((n, k), 0)
            mult = fib(k) if kind == "S" else fib(n)
            t[(n + 1, k)] = left + mult * here
    return t


# ---------------------------------------------------------------------------
# board interpretations

_BOARD_POLY = {
    "cF": (boards.file_poly, False),
    "cFbar": (boards.file_poly, True),
    "SF": (boards.rook_poly, False),
    "SFbar": (boards.rook_poly, True),
}


def interp_report(family: str, n: int) -> list[CheckResult]:
    """Triangle row n against placement polynomials on B_n with n-k tilings."""
    poly, barred = _BOARD_POLY[family]
    board = boards.staircase(n)
    tri = triangle(family, n)
    return [
        _result(f"interp[{family}]", (n, k), poly(board, n - k, barred), tri(n, k))
        for k in range(n + 1)
    ]


def interp_check(family: str, n: int) -> bool:
    return all_passed(interp_report(family, n))


# ---------------------------------------------------------------------------
# basis expansions at integer x

def rising(x: int, n: int) -> QPoly:
    """[x][x+F1]...[x+F(n-1)]."""
    return poly_product(qbracket(x + fib(i)) for i in range(n))


def rising_bar(x: int, n: int) -> QPoly:
    bx = qbracket(x)
    return poly_product(bx + qbracket(fib(i)) for i in range(n))


def falling(x: int, k: int) -> QPoly:
    """[x][x-F1]...[x-F(k-1)]; needs x >= F(k-1)."""
    if k and x < fib(k - 1):
        raise ValueError(f"[x - F_{k - 1}] undefined for x={x}")
    return poly_product(qbracket(x - fib(i)) for i in range(k))


def falling_bar(x: int, k: int) -> QPoly:
    bx = qbracket(x)
    return poly_product(bx - qbracket(fib(i)) for i in range(k))


def connection_report(n: int, x: int, cf: Optional[Triangle] = None) -> list[CheckResult]:
    """The four defining expansions at one (n, x).

    ``cf`` substitutes a different cF triangle (used by the misprint
    diagnostic).
    """
    cf = cf or triangle("cF", n)
    cfb, sf, sfb = (triangle(f, n) for f in ("cFbar", "SF", "SFbar"))
    bx = qbracket(x)
    key = (n, x)
    out = [
        _result("cFdef", key, rising(x, n), sum((cf(n, k) * bx**k for k in range(n + 1)), ZERO)),
        _result("cFbardef", key, rising_bar(x, n),
                sum((cfb(n, k) * bx**k for k in range(n + 1)), ZERO)),
    ]
    if n >= 1 and x < fib(n - 1):
        out.append(_skip("SFdef", key))
    else:
        out.append(_result("SFdef", key, bx**n,
                           sum((sf(n, k) * falling(x, k) for k in range(n + 1)), ZERO)))
    out.append(_result("SFbardef", key, bx**n,
                       sum((sfb(n, k) * falling_bar(x, k) for k in range(n + 1)), ZERO)))
    return out


def connection_check(n: int, x: int) -> bool:
    return all_passed(connection_report(n, x))


def lagged_cf_diagnostic(n: int = 2, x: int = 1) -> list[CheckResult]:
    """cFdef at (n, x) for the q^F(n-1) recursion versus the implemented one."""
    bad = [r for r in connection_report(n, x, lagged_cf_triangle(n)) if r.item == "cFdef"][0]
    good = [r for r in connection_report(n, x) if r.item == "cFdef"][0]
    return [
        CheckResult("cFrec with q^F(n-1) breaks cFdef", (n, x), FAIL, bad.status,
                    PASS if bad.status == FAIL else FAIL),
        CheckResult("cFrec with q^F(n) satisfies cFdef", (n, x), PASS, good.status, good.status),
    ]


# ---------------------------------------------------------------------------
# identities

def _fsum(a: int, b: int) -> int:
    return sum(fib(i) for i in range(a, b + 1))


def i1_report(n: int) -> list[CheckResult]:
    sf, sfb = triangle("SF", n), triangle("SFbar", n)
    return [_result("I1", (n, k), sfb(n, k).shift(_fsum(1, k - 1)), sf(n, k)) for k in range(1, n + 1)]


def i1_check(n: int) -> bool:
    return all_passed(i1_report(n))


def closed_forms_report(n: int) -> list[CheckResult]:
    """Closed forms for the extreme columns of SF and SFbar at row n."""
    sf, sfb = triangle("SF", n), triangle("SFbar", n)
    out: list[CheckResult] = []
    if n < 1:
        return out
    br = [qbracket(fib(i)) for i in range(n + 1)]

    out.append(_result("id1(1) bar", (n, n), ONE, sfb(n, n)))
    out.append(_result("id1(1)", (n, n), QPoly.monomial(_fsum(1, n - 1)), sf(n, n)))

    if n >= 3:
        s2 = sum(br[1:n], ZERO)
        out.append(_result("id1(2) bar", (n, n - 1), s2, sfb(n, n - 1)))
        out.append(_result("id1(2)", (n, n - 1), s2.shift(_fsum(1, n - 2)), sf(n, n - 1)))
        s3 = sum((br[i] * sum(br[i:n - 1], ZERO) for i in range(1, n - 1)), ZERO)
        out.append(_result("id1(3) bar", (n, n - 2), s3, sfb(n, n - 2)))
        out.append(_result("id1(3)", (n, n - 2), s3.shift(_fsum(1, n - 3)), sf(n, n - 2)))
    else:
        for item, k in (("id1(2)", n - 1), ("id1(3)", n - 2)):
            out += [_skip(item + " bar", (n, k)), _skip(item, (n, k))]

    out.append(_result("id1(4) bar", (n, 1), ONE, sfb(n, 1)))
    out.append(_result("id1(4)", (n, 1), ONE, sf(n, 1)))

    if n >= 2:
        out.append(_result("id1(5) bar", (n, 2), QPoly.const(n - 1), sfb(n, 2)))
        out.append(_result("id1(5)", (n, 2), QPoly.monomial(1, n - 1), sf(n, 2)))
    else:
        out += [_skip("id1(5) bar", (n, 2)), _skip("id1(5)", (n, 2))]

    if n >= 3:
        top = (ONE + QPoly((0, 1))) ** (n - 1) - QPoly((1, n - 1))
        out.append(_result("id1(6)", (n, 3), top, sf(n, 3)))
        out.append(_result("id1(6) bar", (n, 3), top.unshift(2), sfb(n, 3)))
    else:
        out += [_skip("id1(6) bar", (n, 3)), _skip("id1(6)", (n, 3))]
    return out


def closed_forms_check(n: int) -> bool:
    return all_passed(closed_forms_report(n))


def sfbar_series(k: int, order: int) -> TSeries:
    """t^k / prod_{i<=k} (1 - [F_i] t), truncated."""
    s = TSeries(order, [ONE])
    for i in range(1, k + 1):
        s = s * geometric(qbracket(fib(i)), order)
    return s.shift_t(k)


def gf_report(k: int, order: int) -> list[CheckResult]:
    sfb, sf = triangle("SFbar", order), triangle("SF", order)
    bar = sfbar_series(k, order)
    plain = bar * QPoly.monomial(_fsum(1, k - 1))
    out = []
    for n in range(order + 1):
        out.append(_result("id4 bar", (n, k), bar[n], sfb(n, k)))
        out.append(_result("id4", (n, k), plain[n], sf(n, k)))
    return out


def gf_check(k: int, order: int) -> bool:
    return all_passed(gf_report(k, order))


def _c(a: int, b: int) -> int:
    return comb(a, b) if a >= 0 and b >= 0 else 0


def coeff_formula(item: int, n: int, k: int, s: int) -> Optional[int]:
    """Predicted coefficient of q^s in SFbar[n,k], or None outside the item's range."""
    if item == 1 and s == 0 and n >= k >= 1:
        return _c(n - 1, k - 1)
    if item == 2 and s == 1 and n > k >= 2:
        return (k - 2) * _c(n - 1, k)
    if item == 3 and k == 3 and n >= s and n >= 3:
        return _c(n - 1, s + 2)
    if item == 4 and s == 2 and n >= k >= 3:
        return (k - 3) * _c(n - 1, k) + _c(k - 1, 2) * _c(n - 1, k + 1)
    if item == 5 and s == 3 and n >= k >= 4:
        return ((k - 4) * _c(n - 1, k)
                + (_c(k - 1, 2) + _c(k - 2, 2) - 1) * _c(n - 1, k + 1)
                + _c(k, 3) * _c(n - 1, k + 2))
    if item == 6 and s == 4 and n >= k >= 4:
        return ((k - 4) * _c(n - 1, k)
                + (_c(k - 1, 2) + _c(k - 2, 2) + _c(k - 3, 2) - 3) * _c(n - 1, k + 1)
                + (2 * _c(k, 3) + _c(k - 1, 3) - k + 1) * _c(n - 1, k + 2)
                + _c(k + 1, 4) * _c(n - 1, k + 3))
    return None


def coeff_formulas_report(n: int, k: int) -> list[CheckResult]:
    """Low-order coefficients of SFbar[n,k] (s = 0..4) against the binomial formulas."""
    p = cell("SFbar", n, k)
    out = []
    for item in range(1, 7):
        for s in range(5):
            want = coeff_formula(item, n, k, s)
            if want is None:
                continue
            out.append(_result(f"id5({item})", (n, k, s), want, p.coeff(s)))
    if not out:
        out.append(_skip("id5", (n, k)))
    return out


def coeff_formulas_check(n: int, k: int) -> bool:
    return all_passed(coeff_formulas_report(n, k))


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class QMatrix:
    entries: tuple[tuple[QPoly, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, dim: int) -> "QMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        d = self.dim
        if other.dim != d:
            raise ValueError("dimension mismatch")
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = ZERO
                for m in range(d):
                    a, b = self.entries[i][m], other.entries[m][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return QMatrix(tuple(rows))


def stirling_matrix(family: str, dim: int, signed: bool = False) -> QMatrix:
    """Rows/columns indexed 1..dim; ``signed`` multiplies cell (n,k) by (-1)^(n-k)."""
    t = triangle(family, dim)
    return QMatrix(tuple(
        tuple((-t(n, k) if signed and (n - k) % 2 else t(n, k)) for k in range(1, dim + 1))
        for n in range(1, dim + 1)
    ))


def matrix_inverse_check(dim: int, barred: bool = True) -> bool:
    """Is ||(-1)^(n-k) cF|| · ||SF|| the identity (barred pair by default)?"""
    c, s = ("cFbar", "SFbar") if barred else ("cF", "SF")
    return stirling_matrix(c, dim, signed=True) @ stirling_matrix(s, dim) == QMatrix.identity(dim)


# ---------------------------------------------------------------------------
# shape of coefficient sequences

@dataclass(frozen=True)
class Verdict:
    ok: bool
    index: Optional[int] = None   # first violating index

    def __bool__(self):
        return self.ok


def unimodality(p: QPoly) -> Verdict:
    a = p.coeffs
    falling_seen = False
    for i in range(1, len(a)):
        if a[i] < a[i - 1]:
            falling_seen = True
        elif a[i] > a[i - 1] and falling_seen:
            return Verdict(False, i)
    return Verdict(True)


def log_concavity(p: QPoly) -> Verdict:
    a = p.coeffs
    n = len(a)
    for i in range(n):
        left = a[i - 1] if i >= 1 else 0
        right = a[i + 1] if i + 1 < n else 0
        if a[i] * a[i] - left * right < 0:
            return Verdict(False, i)
    return Verdict(True)


def chain_product(n: int) -> QPoly:
    """prod_{i=1}^{n-1} [F_i]_q."""
    if n < 1:
        raise ValueError("n must be positive")
    return poly_product(qbracket(fib(i)) for i in range(1, n))
