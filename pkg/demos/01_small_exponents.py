"""
Small exponents and the four cases
==================================

Squares (p = 2) come in an infinite family, cubes (p = 3) reduce to an
elliptic curve, and from p = 5 on every solution falls into one of four
ternary equations a*w2^p - b*w1^(2p) = c.
"""

from sumcubes.casesplit import CaseLabel, build_case_equation, case_coefficients, sum_of_cubes
from sumcubes.smallexp import MORDELL_WEIL_BASIS, family_p2, on_curve, p3_map

# every pair (a, b) gives a square
for a, b in [(1, 1), (2, 1), (3, -2)]:
    pt = family_p2(a, b)
    print(f"family_p2({a}, {b}): x={pt.x} r={pt.r} y={pt.y}, sum of cubes = y^2: {sum_of_cubes(pt.x, pt.r) == pt.y**2}")

# (x, r, y) = (1, 2, 3): (-1)^3 + 1^3 + 3^3 = 3^3
img = p3_map(1, 2, 3)
print("p = 3 point maps to", (int(img.X), int(img.Y)), "on Y^2 = X^3 - 648:", on_curve(img.X, img.Y))
print("Mordell-Weil basis:", MORDELL_WEIL_BASIS)

# the four case equations at p = 5
for case in CaseLabel:
    a, b, _ = case_coefficients(case, 5)
    print(f"{case.name}: a={a} b={b}")

eq = build_case_equation(CaseLabel.CASE4, 7, 5)
print("Case 4, r = 7, p = 5:", eq)
