"""
Bounding the exponent
=====================

A lower bound for linear forms in two logarithms caps the exponent p
for every r up to 10^6.  The maxima are evaluated in interval arithmetic.
"""

from sumcubes.casesplit import CaseLabel
from sumcubes.mignotte import MignotteInput, exponent_cap, mignotte_raw

r3 = 155 * 10**1695
r4 = 299 * 10**846

first, second = mignotte_raw(MignotteInput(9, 1, 18 * r3 * r3))
print(f"Case 3 branches: {float(first):.4f} and {float(second):.4f}")
first, second = mignotte_raw(MignotteInput(3, 1, 6 * r4 * r4))
print(f"Case 4 branches: {float(first):.4f} and {float(second):.4f}")

print("exponent caps for r <= 10^6:")
for case in (CaseLabel.CASE3, CaseLabel.CASE4):
    print(f"  {case.name}: p < {exponent_cap(case, 10**6)}")
