"""Fibonacci numbers and Fibonacci tilings of a column.

A tiling of height n stacks tiles of height 1 and 2, bottom tile of height 1;
there are ``fib(n)`` of them. Tilings are ranked by their left-to-right
position in the tree that reads tiles from the top (height 1 branches left),
and the rank has a closed form: sum of ``fib(i - 1)`` over the levels i where
a height-2 tile ends.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qalgebra import PQPoly, QPoly


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    if n < 0:
        raise ValueError("fib needs a natural number")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class Tiling:
    """Tiles listed bottom to top, each 1 or 2."""

    tiles: tuple[int, ...]

    def __post_init__(self):
        tiles = tuple(self.tiles)
        object.__setattr__(self, "tiles", tiles)
        if any(t not in (1, 2) for t in tiles):
            raise ValueError(f"tiles must be 1 or 2: {tiles}")
        if tiles and tiles[0] != 1:
            raise ValueError("bottom tile must have height 1")

    @property
    def height(self) -> int:
        return sum(self.tiles)

    def level_seq(self) -> tuple[int, ...]:
        """Per level: 1 or 2 if a tile of that height ends there, else 0."""
        seq: list[int] = []
        for t in self.tiles:
            if t == 2:
                seq.append(0)
            seq.append(t)
        return tuple(seq)

    @classmethod
    def from_level_seq(cls, seq) -> "Tiling":
        seq = tuple(seq)
        tiles = []
        i = 0
        while i < len(seq):
            t = seq[i]
            if t == 1:
                tiles.append(1)
                i += 1
            elif t == 0:
                if i + 1 >= len(seq) or seq[i + 1] != 2:
                    raise ValueError(f"a 0 must be followed by a 2: {seq}")
                tiles.append(2)
                i += 2
            else:
                raise ValueError(f"unexpected {t} at level {i + 1}: {seq}")
        return cls(tuple(tiles))

    def __str__(self):
        return format_level_seq(self.level_seq())


def format_level_seq(seq) -> str:
    return "(" + ",".join(str(t) for t in seq) + ")"


def parse_level_seq(text: str) -> Tiling:
    """Parse ``"(1,0,2,1)"`` into a Tiling."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"level sequence must be parenthesised: {text!r}")
    inner = body[1:-1].strip()
    try:
        seq = [int(x) for x in inner.split(",")] if inner else []
    except ValueError:
        raise ValueError(f"bad level sequence: {text!r}") from None
    if any(t not in (0, 1, 2) for t in seq):
        raise ValueError(f"level entries must be 0, 1 or 2: {text!r}")
    return Tiling.from_level_seq(seq)


@lru_cache(maxsize=None)
def _tilings(n: int) -> tuple[Tiling, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return (Tiling((1,)),)
    if n == 2:
        return (Tiling((1, 1)),)
    # top tile of height 1 sorts first
    return tuple(Tiling(t.tiles + (1,)) for t in _tilings(n - 1)) + tuple(
        Tiling(t.tiles + (2,)) for t in _tilings(n - 2)
    )


def enumerate_tilings(n: int) -> list[Tiling]:
    """All tilings of height n in rank order (empty for n = 0)."""
    return list(_tilings(n))


def tiling_stats(t: Tiling) -> tuple[int, int]:
    """(number of height-1 tiles, number of height-2 tiles)."""
    ones = t.tiles.count(1)
    return ones, len(t.tiles) - ones


@lru_cache(maxsize=None)
def fib_pq(n: int) -> PQPoly:
    """Sum over tilings of height n of q^one(T) p^two(T)."""
    total = PQPoly()
    for t in _tilings(n):
        one, two = tiling_stats(t)
        total = total + PQPoly.monomial(one, two)
    return total


def rank(n: int, t: Tiling) -> int:
    if t.height != n:
        raise ValueError(f"tiling has height {t.height}, expected {n}")
    return sum(fib(i - 1) for i, x in enumerate(t.level_seq(), start=1) if x == 2)


def rank_recursive(n: int, t: Tiling) -> int:
    """Rank by peeling the top tile: +fib(n-1) for a top tile of height 2."""
    if t.height != n:
        raise ValueError(f"tiling has height {t.height}, expected {n}")
    r, tiles = 0, list(t.tiles)
    while tiles:
        top = tiles.pop()
        if top == 2:
            r += fib(n - 1)
        n -= top
    return r


def zeckendorf(m: int) -> tuple[int, ...]:
    """Greedy Fibonacci indices (decreasing, each >= 2, never adjacent)."""
    if m < 0:
        raise ValueError("zeckendorf needs a natural number")
    out = []
    while m:
        k = 2
        while fib(k + 1) <= m:
            k += 1
        out.append(k)
        m -= fib(k)
    return tuple(out)


def unrank(n: int, m: int) -> Tiling:
    if not 0 <= m < fib(n):
        raise ValueError(f"rank {m} out of range for height {n} (F_{n} = {fib(n)})")
    seq = [1] * n
    for c in zeckendorf(m):
        # fib(c) is contributed by a height-2 tile ending at level c + 1
        seq[c] = 2
        seq[c - 1] = 0
    return Tiling.from_level_seq(seq)


def rank_gf(n: int) -> QPoly:
    counts = [0] * fib(n)
    for t in _tilings(n):
        counts[rank(n, t)] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def ranked_tilings(n: int) -> tuple[tuple[Tiling, int], ...]:
    """(tiling, rank) pairs for height n, memoized for the enumerators."""
    return tuple((t, rank(n, t)) for t in _tilings(n))
