"""Ferrers boards and Fibonacci file, rook and mixed placements on them.

Columns are 1-indexed throughout, matching the usual pictures. Every weight
is a power of q (times a sign for flipped tilings), so the placement
polynomials are built by counting exponents.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence, Union

from .fibtiles import Tiling, fib, rank, ranked_tilings
from .qalgebra import ONE, ZERO, QPoly, poly_product, qbracket


@dataclass(frozen=True)
class FerrersBoard:
    heights: tuple[int, ...]

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", hs)
        if any(h < 0 for h in hs):
            raise ValueError(f"negative column height in {hs}")
        if any(a > b for a, b in zip(hs, hs[1:])):
            raise ValueError(f"column heights must be weakly increasing: {hs}")

    @property
    def n(self) -> int:
        return len(self.heights)

    def b(self, i: int) -> int:
        """Height of column i (1-indexed); b(0) is 0 by convention."""
        return self.heights[i - 1] if i >= 1 else 0

    def minus(self) -> "FerrersBoard":
        return FerrersBoard(self.heights[:-1])

    def __str__(self):
        return "F(" + ",".join(map(str, self.heights)) + ")"


def staircase(n: int) -> FerrersBoard:
    """B_n = F(0, 1, ..., n-1)."""
    return FerrersBoard(tuple(range(n)))


_BOARD_RE = re.compile(r"^\s*([FB])\(\s*([0-9,\s]*)\)\s*$")


def parse_board(text: str) -> FerrersBoard:
    """Parse ``"F(2,3,4)"`` or the staircase shorthand ``"B(4)"``."""
    m = _BOARD_RE.match(text)
    if not m:
        raise ValueError(f"bad board literal {text!r}; use F(b1,...,bn) or B(n)")
    kind, body = m.groups()
    vals = [int(v) for v in body.split(",") if v.strip()]
    if kind == "B":
        if len(vals) != 1:
            raise ValueError(f"B(n) takes one argument: {text!r}")
        return staircase(vals[0])
    return FerrersBoard(tuple(vals))


TEST_BOARDS: tuple[FerrersBoard, ...] = tuple(
    FerrersBoard(h)
    for h in [
        (0,), (1,), (2,), (5,), (6,),
        (0, 1), (0, 3), (1, 1), (1, 2), (2, 2), (3, 6),
        (0, 1, 2), (1, 1, 1), (1, 2, 3), (2, 2, 2), (0, 0, 4), (1, 3, 5), (2, 4, 6),
        (0, 1, 2, 3), (2, 2, 3, 5), (1, 1, 2, 2), (0, 2, 4, 6), (3, 3, 3, 3), (1, 2, 4, 6),
        (0, 1, 2, 3, 4), (2, 3, 4, 4, 5), (1, 1, 1, 1, 1), (0, 0, 1, 1, 2), (1, 3, 3, 5, 6),
        (0, 1, 2, 3, 4, 5), (2, 3, 4, 4, 5, 5), (1, 1, 2, 3, 5, 6), (0, 1, 1, 2, 2, 3),
        (2, 2, 2, 3, 3, 3), (1, 2, 3, 4, 5, 6), (6, 6, 6, 6, 6, 6),
    ]
)


# ---------------------------------------------------------------------------
# placements

@dataclass(frozen=True)
class FilePlacement:
    board: FerrersBoard
    entries: tuple[tuple[int, Tiling], ...]

    def __post_init__(self):
        cols = [c for c, _ in self.entries]
        if any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError("columns must be strictly increasing")
        for c, t in self.entries:
            if t.height != self.board.b(c) or t.height == 0:
                raise ValueError(f"column {c} needs a tiling of height {self.board.b(c)}")

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.entries)


@dataclass(frozen=True)
class RookPlacement:
    board: FerrersBoard
    entries: tuple[tuple[int, Tiling], ...]

    def __post_init__(self):
        cols = [c for c, _ in self.entries]
        if any(a >= b for a, b in zip(cols, cols[1:])):
            raise ValueError("columns must be strictly increasing")
        for (c, t), e in zip(self.entries, self.effective_heights):
            if e == 0 or t.height != e:
                raise ValueError(f"column {c} needs a tiling of height {e}")

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.entries)

    @property
    def effective_heights(self) -> tuple[int, ...]:
        return tuple(self.board.b(c - s) for s, (c, _) in enumerate(self.entries))


@dataclass(frozen=True)
class AboveTiling:
    tiling: Tiling


@dataclass(frozen=True)
class BarRook:
    row: int


@dataclass(frozen=True)
class FlippedTiling:
    tiling: Tiling


Choice = Union[AboveTiling, BarRook, FlippedTiling]


@dataclass(frozen=True)
class MixedPlacement:
    """One choice per column on B_x (plain) or AugB_x (augmented)."""

    board: FerrersBoard
    x: int
    choices: tuple[Choice, ...]
    augmented: bool = False

    def __post_init__(self):
        if len(self.choices) != self.board.n:
            raise ValueError("need one choice per column")
        for c, h in zip(self.choices, self.available_heights()):
            if isinstance(c, BarRook) and not 1 <= c.row <= self.x:
                raise ValueError(f"rook row {c.row} outside 1..{self.x}")
            if isinstance(c, FlippedTiling) and not self.augmented:
                raise ValueError("flipped tilings only exist on augmented boards")
            if isinstance(c, (AboveTiling, FlippedTiling)) and c.tiling.height != h:
                raise ValueError(f"tiling height {c.tiling.height} != available {h}")

    def available_heights(self) -> tuple[int, ...]:
        """Uncanceled cells per column when the column is reached."""
        if not self.augmented:
            return self.board.heights
        out, above = [], 0
        for j, c in enumerate(self.choices, start=1):
            out.append(self.board.b(j - above))
            if isinstance(c, AboveTiling):
                above += 1
        return tuple(out)


# ---------------------------------------------------------------------------
# file placements

def _file_configs(board: FerrersBoard, k: int):
    cols = [i for i in range(1, board.n + 1) if board.b(i) > 0]
    for chosen in combinations(cols, k):
        for picks in product(*(ranked_tilings(board.b(c)) for c in chosen)):
            yield chosen, picks


def file_placements(board: FerrersBoard, k: int) -> list[FilePlacement]:
    """All file placements with k tiled columns, ordered by (columns, ranks)."""
    return [
        FilePlacement(board, tuple((c, t) for c, (t, _) in zip(chosen, picks)))
        for chosen, picks in _file_configs(board, k)
    ]


def file_weight(p: FilePlacement, barred: bool) -> int:
    """Exponent of q in the placement weight."""
    e = sum(rank(t.height, t) for _, t in p.entries)
    if not barred:
        tiled = set(p.columns)
        e += sum(fib(h) for i, h in enumerate(p.board.heights, 1) if i not in tiled)
    return e


@lru_cache(maxsize=4096)
def file_poly(board: FerrersBoard, k: int, barred: bool) -> QPoly:
    """FT_k(B, q) (or the barred version) by summing over every placement."""
    if not 0 <= k <= board.n:
        return ZERO
    counts: Counter[int] = Counter()
    fibs = [fib(h) for h in board.heights]
    total_f = sum(fibs)
    for chosen, picks in _file_configs(board, k):
        e = sum(r for _, r in picks)
        if not barred:
            e += total_f - sum(fibs[c - 1] for c in chosen)
        counts[e] += 1
    return _from_counts(counts)


def file_poly_rec(board: FerrersBoard, k: int, barred: bool) -> QPoly:
    """Same polynomial by peeling off the last column."""
    return _file_rec(board.heights, k, barred)


@lru_cache(maxsize=None)
def _file_rec(heights: tuple[int, ...], k: int, barred: bool) -> QPoly:
    n = len(heights)
    if k < 0 or k > n:
        return ZERO
    if k == 0:
        return ONE if barred else QPoly.monomial(sum(fib(h) for h in heights))
    f = fib(heights[-1])
    rest = heights[:-1]
    keep = _file_rec(rest, k, barred)
    if not barred:
        keep = keep.shift(f)
    return keep + qbracket(f) * _file_rec(rest, k - 1, barred)


def file_poly_z(heights: Union[FerrersBoard, Sequence[int]], k: int, barred: bool) -> QPoly:
    """Coefficient of z^k in prod(1 + [F_b]z) (barred) or prod(q^F_b + [F_b]z).

    Accepts any height vector (skyline boards), not only Ferrers ones.
    """
    hs = heights.heights if isinstance(heights, FerrersBoard) else tuple(heights)
    zpoly = [ONE]  # index = power of z
    for h in hs:
        f = fib(h)
        const = ONE if barred else QPoly.monomial(f)
        lin = qbracket(f)
        nxt = [ZERO] * (len(zpoly) + 1)
        for i, c in enumerate(zpoly):
            nxt[i] = nxt[i] + c * const
            nxt[i + 1] = nxt[i + 1] + c * lin
        zpoly = nxt
    return zpoly[k] if 0 <= k < len(zpoly) else ZERO


# ---------------------------------------------------------------------------
# rook placements

def _rook_configs(board: FerrersBoard, k: int):
    for chosen in combinations(range(1, board.n + 1), k):
        eff = [board.b(c - s) for s, c in enumerate(chosen)]
        if 0 in eff:
            continue
        for picks in product(*(ranked_tilings(e) for e in eff)):
            yield chosen, picks


def rook_placements(board: FerrersBoard, k: int) -> list[RookPlacement]:
    """All rook placements with k tilings, ordered by (columns, ranks)."""
    return [
        RookPlacement(board, tuple((c, t) for c, (t, _) in zip(chosen, picks)))
        for chosen, picks in _rook_configs(board, k)
    ]


def rook_weight(p: RookPlacement, barred: bool) -> int:
    e = sum(rank(h, t) for h, (_, t) in zip(p.effective_heights, p.entries))
    if not barred:
        e += sum(fib(p.board.b(t)) for t in range(1, p.board.n - len(p.entries) + 1))
    return e


@lru_cache(maxsize=4096)
def rook_poly(board: FerrersBoard, k: int, barred: bool) -> QPoly:
    """RT_k(B, q) (or the barred version) by summing over every placement."""
    if not 0 <= k <= board.n:
        return ZERO
    counts: Counter[int] = Counter()
    base = 0 if barred else sum(fib(board.b(t)) for t in range(1, board.n - k + 1))
    for _, picks in _rook_configs(board, k):
        counts[base + sum(r for _, r in picks)] += 1
    return _from_counts(counts)


def rook_poly_rec(board: FerrersBoard, k: int, barred: bool) -> QPoly:
    """Same polynomial by peeling off the last column.

    If the last column is tiled it is the k-th tiling and sees b_{n-k+1}
    cells; if it is untiled the untiled heights end with b_{n-k}.
    """
    return _rook_rec(board.heights, k, barred)


@lru_cache(maxsize=None)
def _rook_rec(heights: tuple[int, ...], k: int, barred: bool) -> QPoly:
    n = len(heights)
    if k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    rest = heights[:-1]
    keep = _rook_rec(rest, k, barred)
    if not barred and k < n:
        keep = keep.shift(fib(heights[n - k - 1]))
    tiled = ZERO
    if k >= 1:
        tiled = qbracket(fib(heights[n - k])) * _rook_rec(rest, k - 1, barred)
    return keep + tiled


def rel_check(board: FerrersBoard, k: int) -> bool:
    shift = sum(fib(board.b(i)) for i in range(1, board.n - k + 1))
    return rook_poly(board, k, False) == rook_poly(board, k, True).shift(shift)


@dataclass(frozen=True)
class CancellationTrace:
    effective: tuple[int, ...]      # cells available to each tiling, left to right
    untiled: tuple[int, ...]        # final uncanceled cells of untiled columns
    grid: tuple[tuple[str, ...], ...]  # per column, bottom to top: "." free, "T" tiled, or canceller column


def simulate_cancellation(board: FerrersBoard, columns: Sequence[int]) -> CancellationTrace:
    """Cancel cells one tiling at a time so untiled columns read b_1, b_2, ...

    Each tiling cancels cells only from the top of columns to its right. The
    amount cancelled in column j by the s-th tiling is asserted to equal
    b_{j-s+1} - b_{j-s}.
    """
    n = board.n
    cols = sorted(columns)
    grid = [["."] * board.b(j) for j in range(1, n + 1)]
    avail = [board.b(j) for j in range(1, n + 1)]
    tiled: set[int] = set()
    effective = []
    for s, c in enumerate(cols, start=1):
        if c in tiled or not 1 <= c <= n:
            raise ValueError(f"bad column {c}")
        h = avail[c - 1]
        effective.append(h)
        for r in range(h):
            grid[c - 1][r] = "T"
        tiled.add(c)
        untiled = [j for j in range(1, n + 1) if j not in tiled]
        for pos, j in enumerate(untiled, start=1):
            target = board.b(pos)
            cut = avail[j - 1] - target
            if cut < 0:
                raise AssertionError(f"column {j} would need cells restored")
            if cut and j < c:
                raise AssertionError(f"tiling in column {c} cancels to its left")
            if j > c and cut != board.b(j - s + 1) - board.b(j - s):
                raise AssertionError(f"unexpected cancellation in column {j}")
            for r in range(target, avail[j - 1]):
                grid[j - 1][r] = str(c)
            avail[j - 1] = target
    untiled_final = tuple(avail[j - 1] for j in range(1, n + 1) if j not in tiled)
    return CancellationTrace(tuple(effective), untiled_final, tuple(tuple(g) for g in grid))


# ---------------------------------------------------------------------------
# mixed placements

def _column_choices(board: FerrersBoard, x: int, height: int, augmented: bool):
    for t, _ in ranked_tilings(height):
        yield AboveTiling(t)
    for row in range(1, x + 1):
        yield BarRook(row)
    if augmented:
        for t, _ in ranked_tilings(height):
            yield FlippedTiling(t)


def mixed_placements(board: FerrersBoard, x: int, augmented: bool = False) -> Iterator[MixedPlacement]:
    """Every mixed placement on B_x, or on AugB_x when ``augmented``."""
    if x < 1:
        raise ValueError("x must be a positive integer")

    def rec(j: int, above: int, acc: list):
        if j > board.n:
            yield MixedPlacement(board, x, tuple(acc), augmented)
            return
        h = board.b(j - above) if augmented else board.b(j)
        for ch in _column_choices(board, x, h, augmented):
            acc.append(ch)
            yield from rec(j + 1, above + (augmented and isinstance(ch, AboveTiling)), acc)
            acc.pop()

    yield from rec(1, 0, [])


def mixed_weight(p: MixedPlacement, barred: bool) -> QPoly:
    """Signed weight of a mixed placement (a single signed power of q)."""
    e, sign = 0, 1
    for ch, h in zip(p.choices, p.available_heights()):
        if isinstance(ch, BarRook):
            e += ch.row - 1 + (0 if barred else fib(h))
        else:
            e += rank(h, ch.tiling)
            if isinstance(ch, FlippedTiling):
                sign = -sign
    return QPoly.monomial(e, sign)


def mixed_sum_bruteforce(board: FerrersBoard, x: int, augmented: bool, barred: bool) -> QPoly:
    """Sum of weights by listing every placement; exponential, for small boards."""
    counts: Counter[int] = Counter()
    for p in mixed_placements(board, x, augmented):
        w = mixed_weight(p, barred)
        counts[w.degree] += w.coeff(w.degree)
    return _from_counts(counts)


def _tiling_sum(height: int) -> QPoly:
    counts = Counter(r for _, r in ranked_tilings(height))
    return _from_counts(counts)


def _rook_sum(x: int, offset: int) -> QPoly:
    return _from_counts(Counter(offset + row - 1 for row in range(1, x + 1)))


def mixed_file_sum(board: FerrersBoard, x: int, barred: bool) -> QPoly:
    """Total weight over all mixed placements on B_x.

    Choices in different columns are independent, so the sum over all
    placements is the product of the per-column sums over choices.
    """
    if x < 1:
        raise ValueError("x must be a positive integer")
    total = ONE
    for h in board.heights:
        total = total * (_tiling_sum(h) + _rook_sum(x, 0 if barred else fib(h)))
    return total


def mixed_aug_sum(board: FerrersBoard, x: int, barred: bool = True) -> QPoly:
    """Total signed weight over all mixed placements on AugB_x.

    Placements are grouped by how many tilings sit above the bar so far,
    which fixes the cells available in the next column.
    """
    if x < 1:
        raise ValueError("x must be a positive integer")
    states = {0: ONE}
    for j in range(1, board.n + 1):
        nxt: dict[int, QPoly] = {}
        for above, w in states.items():
            h = board.b(j - above)
            tiles = _tiling_sum(h)
            rooks = _rook_sum(x, 0 if barred else fib(h))
            stay = w * (rooks - tiles)
            nxt[above] = nxt.get(above, ZERO) + stay
            if tiles:
                nxt[above + 1] = nxt.get(above + 1, ZERO) + w * tiles
        states = nxt
    return sum(states.values(), ZERO)


def file_product(board: FerrersBoard, x: int, barred: bool) -> QPoly:
    """prod [x + F_b]_q, or prod ([x]_q + [F_b]_q) when barred."""
    if barred:
        return poly_product(qbracket(x) + qbracket(fib(h)) for h in board.heights)
    return poly_product(qbracket(x + fib(h)) for h in board.heights)


def file_product_expansion(board: FerrersBoard, x: int, barred: bool) -> QPoly:
    """sum_k FT_k(B) [x]^(n-k) with the enumerated file polynomials."""
    n, bx = board.n, qbracket(x)
    return sum((file_poly(board, k, barred) * bx ** (n - k) for k in range(n + 1)), ZERO)


def file_product_check(board: FerrersBoard, x: int) -> bool:
    return all(
        mixed_file_sum(board, x, barred) == file_product(board, x, barred)
        == file_product_expansion(board, x, barred)
        for barred in (False, True)
    )


def rook_product_applicable(board: FerrersBoard, x: int) -> bool:
    """The unbarred rook product needs every [x - F_b]_q to be a polynomial."""
    return board.n == 0 or x >= fib(board.heights[-1])


def rook_product_check(board: FerrersBoard, x: int) -> bool:
    n, bx = board.n, qbracket(x)
    target = bx**n
    barred = ZERO
    for k in range(n + 1):
        falling = poly_product(bx - qbracket(fib(board.b(i))) for i in range(1, k + 1))
        barred = barred + rook_poly(board, n - k, True) * falling
    if barred != target:
        return False
    if not rook_product_applicable(board, x):
        return True
    plain = ZERO
    for k in range(n + 1):
        falling = poly_product(qbracket(x - fib(board.b(i))) for i in range(1, k + 1))
        plain = plain + rook_poly(board, n - k, False) * falling
    return plain == target


# ---------------------------------------------------------------------------
# rendering

def dump_placement(p) -> list[str]:
    """One line per occupied column, for --trace output."""
    lines = []
    if isinstance(p, MixedPlacement):
        for i, (ch, h) in enumerate(zip(p.choices, p.available_heights()), start=1):
            if isinstance(ch, BarRook):
                lines.append(f"col={i} rook_row={ch.row}")
            elif isinstance(ch, FlippedTiling):
                lines.append(f"col={i} flipped rank={rank(h, ch.tiling)}")
            else:
                lines.append(f"col={i} height={h} rank={rank(h, ch.tiling)}")
        return lines
    for c, t in p.entries:
        lines.append(f"col={c} height={t.height} rank={rank(t.height, t)}")
    return lines


def _from_counts(counts: Counter) -> QPoly:
    if not counts:
        return ZERO
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] += c
    return QPoly(coeffs)
