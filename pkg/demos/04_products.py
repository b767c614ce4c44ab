"""Mixed placements and the product theorems they prove.

Run:  python3 demos/04_products.py
"""
from fibostirling import boards, verify
from fibostirling.boards import FerrersBoard
from fibostirling.qalgebra import qbracket, to_text

board = FerrersBoard((1, 2, 3))
x = 2
brute = boards.mixed_sum_bruteforce(board, x, augmented=False, barred=True)
print("sum over mixed placements on B_x:", to_text(brute))
print("product of ([x] + [F_b]):       ", to_text(boards.file_product(board, x, True)))

aug = boards.mixed_aug_sum(board, x)
print("augmented board sum:", to_text(aug), " equals [x]^n:", aug == qbracket(x) ** board.n)

# The flipped tilings carry a minus sign; here is one such placement.
p = verify.sample_aug_placement(5)
for line in boards.dump_placement(p):
    print(" ", line)
print("weight (unbarred):", to_text(boards.mixed_weight(p, False)))
print("weight (barred):  ", to_text(boards.mixed_weight(p, True)))
