"""Walls along a ray of stability parameters, and where chains disappear.

Run:  python demos/walls_and_rays.py
"""

from higgsy import enumerate_admissible_degrees, find_walls, goodalpha_family

# Moving alpha_1 upward from 2, the rank-one pieces of a (1,1) chain of
# degrees (1,0) hit the total slope at odd t.
report = find_walls((1, 1), (1, 0), (0, 2), (0, 1), 10)
for wall in report.walls:
    print(f"t = {wall.t}: {len(wall.witnesses)} destabilizing sub-data, e.g. {wall.witnesses[0]}")

# Along the ray chosen by goodalpha_family, a non-constant-rank chain
# stops being admissible once t passes t0.
ranks, degrees, alpha = (2, 1), (1, 0), (0, 2)
fam = goodalpha_family(ranks, degrees, alpha, g=2)
print(f"direction {fam.delta}, threshold t0 = {fam.t0} ({fam.case})")
for t in (0, fam.t0 + 1):
    at = fam.alpha_at(alpha, t)
    present = degrees in enumerate_admissible_degrees(ranks, at, sum(degrees))
    print(f"  t = {t}: admissible = {present}")
