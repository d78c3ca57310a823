"""Necessary conditions for semistable chains and their degree polytopes.

Run:  python demos/chain_conditions.py
"""

from higgsy import ChainDatum, enumerate_admissible_degrees, higgs_index_set, necessary_conditions

# A two-step chain E_1 -> E_0 with line bundles at parameter (0, 2).
for degrees in [(1, 0), (0, 1), (3, -3)]:
    report = necessary_conditions(ChainDatum((1, 1), degrees, (0, 2)))
    verdict = "passes" if report.passed else ", ".join(f"{f.condition}@{f.witness}" for f in report.failures)
    print(f"degrees {degrees}: {verdict}")

# With the total degree fixed, the admissible degree vectors form a finite set.
print("ranks (2,1), total 1:", enumerate_admissible_degrees((2, 1), (0, 2), 1))
print("ranks (1,2,1), total 0:", enumerate_admissible_degrees((1, 2, 1), (0, 2, 4), 0))

# Dualizing a chain reverses it and negates degrees and parameters;
# failures of C3 turn into failures of C4.
datum = ChainDatum((2, 1), (-3, 0), (0, 2))
print("datum failures:", [(f.condition, f.witness) for f in necessary_conditions(datum).failures])
print("dual failures: ", [(f.condition, f.witness) for f in necessary_conditions(datum.dual()).failures])

# The fixed loci of the scaling action on Higgs moduli are indexed by chain types.
for ranks, degrees in higgs_index_set(3, 1, 2):
    print(f"  ranks={ranks} degrees={degrees}")
