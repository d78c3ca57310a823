"""Compute the y-genus of PGL_n Higgs moduli three independent ways.

Run:  python demos/ygenus_three_ways.py
"""

from higgsy import PglInput, euler_pgl, noncompact_ygenus, pgl_hy

# Rank 2, degree 1, genus 2 is the smallest interesting case.
inp = PglInput(n=2, d=1, g=2)
for method in ("direct", "rootsum", "closed"):
    print(f"{method:>8}: {pgl_hy(inp, method)}")

# The top exponent is the complex dimension 2N, with coefficient 1.
P = pgl_hy(inp)
print(f"dimension 2N = {2 * inp.N}, top term degree = {P.degree()}")

# The version without compact supports comes from Poincare duality.
print("without compact supports:", noncompact_ygenus(P, inp.N))

# At y = 1 the y-genus is the Euler characteristic mu(n) * n^(2g-3).
print("Euler characteristics for g=2:", [euler_pgl(n, 2) for n in range(1, 9)])

# For composite n and non-coprime d only the direct and rootsum methods apply;
# they still agree.
odd = PglInput(4, 2, 2)
print("n=4, d=2 agree:", pgl_hy(odd, "direct") == pgl_hy(odd, "rootsum"))
