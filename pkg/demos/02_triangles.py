"""The four q-triangles and their q = 1 shadows.

Run:  python3 demos/02_triangles.py
"""
from fibostirling import stirling
from fibostirling.qalgebra import to_text

for family in stirling.FAMILIES:
    tri = stirling.triangle(family, 5)
    print(f"-- {family}")
    for n in range(1, 6):
        print(f"  n={n}:", " | ".join(to_text(p) for p in tri.row(n)[1:]))

# Setting q = 1 recovers plain integer Fibonacci-Stirling numbers.
ints = stirling.bpr_triangle("S", 6)
print("S(6,k) at q=1:", [ints[(6, k)] for k in range(1, 7)])
print("SFbar(6,k) at q=1:", [p.at_one() for p in stirling.triangle("SFbar", 6).row(6)[1:]])
