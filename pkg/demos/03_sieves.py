"""
Sieving with witness primes and local solubility
================================================

A prime q = 2kp + 1 makes 2p-th powers rare in F_q, so most equations
have no solution mod q.  Survivors are then tested for solutions in Z_q.
"""

import numpy as np

from sumcubes.casesplit import CaseLabel, admissible, build_case_equation
from sumcubes.localsolve import local_sieve, locally_soluble_at, qr_obstruction, reduce_to_coprime
from sumcubes.outcomes import Eliminated
from sumcubes.sieve import b_set, mu_set, sieve_batch, sieve_pp2, witness_primes

p = 7
eq = build_case_equation(CaseLabel.CASE3, 1, p)
for w in list(witness_primes(p, eq.a, 3)):
    print(f"q={w.q}: |mu|={len(mu_set(p, w.q))}, |B|={len(b_set(eq, w.q))}")
print("sieve_pp2 on Case 3, r = 1, p = 7:", sieve_pp2(eq))

# the same sieve over many r at once
rs = np.array([r for r in range(1, 5000) if admissible(CaseLabel.CASE4, r)], dtype=np.int64)
first = build_case_equation(CaseLabel.CASE4, 1, 5)
witness = sieve_batch(5, first.a, first.b, 2 * rs * rs)
print(f"Case 4, p = 5, r < 5000: {np.count_nonzero(witness == 0)} of {len(rs)} survive the primary sieve")

# local solubility on the survivors
killed = {}
for r in rs[witness == 0][:200]:
    red = reduce_to_coprime(build_case_equation(CaseLabel.CASE4, int(r), 5))
    out = qr_obstruction(red)
    if not isinstance(out, Eliminated):
        out = local_sieve(red)
    if isinstance(out, Eliminated):
        killed[out.witness] = killed.get(out.witness, 0) + 1
print("first 200 survivors, local kills by prime:", dict(sorted(killed.items())))

red = reduce_to_coprime(build_case_equation(CaseLabel.CASE3, 1, 5))
print("(1, 3^8, 2) at q = 5:", locally_soluble_at(red, 5))
