"""Specht modules, their simple heads, and the W = D_lambda comparison."""

from homrep.braid_hecke import Partition, partitions
from homrep.harness import ConjectureCase, conjecture_check
from homrep.specht import d_lambda, hook_dim, nonzero_classification

# dimensions of D_lambda for n = 5 at each root of unity
for lam in partitions(5):
    row = [d_lambda(lam, e).dim for e in (2, 3, 4, 5)]
    print(f"{str(lam):12} S dim {hook_dim(lam):2}  D dims at e=2..5 {row}")

print("(2,2,1) nonzero at e=2?", nonzero_classification(Partition((2, 2, 1)), 2))

for shape, q in [((3, 2), None), ((3, 2), 3), ((3, 2), 4), ((3, 1, 1), None), ((2, 2, 1), None)]:
    rpt = conjecture_check(ConjectureCase(Partition(shape), q))
    print(shape, q, rpt.params["status"])
