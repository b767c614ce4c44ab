"""Fibonacci tilings, their ranks, and Zeckendorf unranking.

Run:  python3 demos/01_tilings_and_ranks.py
"""
from fibostirling.fibtiles import enumerate_tilings, fib, rank, rank_gf, unrank, zeckendorf
from fibostirling.qalgebra import to_text

# A column of height n has F_n tilings. List them for n = 5 in rank order.
for t in enumerate_tilings(5):
    print(f"rank {rank(5, t)}: tiles {t.tiles}, levels {t}")

# Summing q^rank over all tilings gives the q-bracket [F_n].
print("rank gf for n=6:", to_text(rank_gf(6)), "  F_6 =", fib(6))

# Unranking goes through the Zeckendorf representation of m.
m = 100
print(f"zeckendorf({m}) =", zeckendorf(m))
print(f"unrank(13, {m}) =", unrank(13, m))
