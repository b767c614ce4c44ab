"""Connection identities, closed forms, and the shape of coefficient sequences.

Run:  python3 demos/05_identities.py
"""
from fibostirling import stirling
from fibostirling.qalgebra import to_text

print("connection identities at n=4, x=3:")
for r in stirling.connection_report(4, 3):
    print(f"  {r.item:<9} {r.status}")

print("\nusing q^F(n-1) instead of q^F(n) in the cF recursion:")
for r in stirling.lagged_cf_diagnostic(2, 1):
    print(f"  {r.item}: {r.actual}")

p = stirling.cell("SFbar", 8, 6)
v = stirling.unimodality(p)
print("\nSFbar[8,6] =", to_text(p))
print("unimodal:", v.ok, "first violation at index", v.index)

chain = stirling.chain_product(7)
print("\nchain product n=7:", chain.coeffs, "palindromic:", chain.is_palindromic())
print("barred matrices inverse at dim 8:", stirling.matrix_inverse_check(8))
