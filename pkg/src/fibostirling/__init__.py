"""q-analogues of the Fibonacci-Stirling numbers, computed exactly by
recursion, by weighted placements on Ferrers boards, and by expanding
products, with checks that the three agree."""

from .qalgebra import QPoly, PQPoly, TSeries, qbracket
from .fibtiles import Tiling, fib, enumerate_tilings, rank, unrank, zeckendorf
from .boards import FerrersBoard, staircase, parse_board
from .stirling import triangle, cell, FAMILIES

__version__ = "0.1.0"
