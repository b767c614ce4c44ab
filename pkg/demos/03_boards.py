"""File and rook placements on a Ferrers board, three ways.

The same polynomial comes out of brute-force enumeration, the column
recursion, and (for files) a product over columns.

Run:  python3 demos/03_boards.py
"""
from fibostirling import boards
from fibostirling.boards import FerrersBoard
from fibostirling.qalgebra import to_text

board = FerrersBoard((1, 2, 3, 3))
print("board", board)
for k in range(board.n + 1):
    enum = boards.file_poly(board, k, barred=True)
    same = enum == boards.file_poly_rec(board, k, True) == boards.file_poly_z(board, k, True)
    print(f"  FTbar_{k} = {to_text(enum):<30} agree={same}")

for k in range(board.n + 1):
    r = boards.rook_poly(board, k, barred=True)
    print(f"  RTbar_{k} = {to_text(r):<30} rel={boards.rel_check(board, k)}")

# A rook-style placement: each tiling trims columns to its right.
trace = boards.simulate_cancellation(board, (2, 4))
print("cancellation for columns 2 and 4: effective heights", trace.effective)
for j, col in enumerate(trace.grid, 1):
    print(f"  column {j}: {''.join(col)}")
