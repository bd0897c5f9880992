"""
Trusted rules and the final Thue equations
==========================================

Some equations are settled by theorems rather than sieves.  What is left
is exported as Thue equations a*sigma^p - b*tau^p = c for an external
solver, after a bounded search for small solutions.
"""

from sumcubes.casesplit import CaseLabel, build_case_equation
from sumcubes.localsolve import reduce_to_coprime
from sumcubes.outcomes import NotApplicable
from sumcubes.rules import chabauty_fixture, modularity_even_x, modularity_power_of_two
from sumcubes.thue import bounded_search, pullback, to_thue

print(modularity_even_x(CaseLabel.CASE1, 7).rule)
print(modularity_power_of_two(CaseLabel.CASE3, 2**10, 7).rule)
try:
    modularity_power_of_two(CaseLabel.CASE3, 625000, 7)
except NotApplicable as exc:
    print("r = 625000:", exc)

fx = chabauty_fixture(CaseLabel.CASE3, 5)
print(f"{fx.curve}: points {fx.points}, pulled back to {fx.candidates()}")

prob = to_thue(reduce_to_coprime(build_case_equation(CaseLabel.CASE3, 625000, 7)), CaseLabel.CASE3, 625000)
print(prob.id, "small solutions:", bounded_search(prob, 10**4))

# tau = 0 solves it, but tau = w1^2 = 0 is the trivial solution
for sol in bounded_search(prob, 10**4):
    print(sol, "pulls back to", pullback(prob, sol))
