"""
Descent over an imaginary quadratic field
=========================================

Factoring the equation in Q(sqrt(-m)) turns it into finitely many
candidates eps, each killed by valuations or by a p-th power character.
"""

from sumcubes.casesplit import CaseLabel, build_case_equation
from sumcubes.descent import descent_data, descent_sieve, epsilon_candidates
from sumcubes.localsolve import ReducedEquation, reduce_to_coprime
from sumcubes.quadfield import class_group, reduced_forms

for D in (-8, -20, -23, -71):
    forms = [(f.a, f.b, f.c) for f in reduced_forms(D)]
    print(f"h({D}) = {class_group(D).h}: {forms}")

red = ReducedEquation(81, 1, 2, 5)
data = descent_data(red)
print(f"Case 4, r = 1: m = {data.m}, S above {[P.q for P in data.S]}")
E = epsilon_candidates(data, 5)
print(f"{len(E)} candidates:", [e.exponents for e in E])
print("descent verdict:", descent_sieve(red, 5))

# a stage-2 survivor settled only by the extended tests
red = reduce_to_coprime(build_case_equation(CaseLabel.CASE4, 551422, 7))
print("r = 551422, p = 7, plain:", descent_sieve(red, 7, extended=False))
print("r = 551422, p = 7, extended:", descent_sieve(red, 7))
