"""The 2-point model: W0 inside Lawrence-Krammer at t = q^-1 and what survives at roots of unity."""

from homrep import lk_rep, burau_reduced, specialize_rep
from homrep.braid_hecke import Partition, minimal_polynomial_degree, quadratic_check
from homrep.harness import ConjectureCase, build_W_parts
from homrep.linalg import find_invertible, intertwiners

lk = lk_rep(5)
print("LK dim", lk.dim, " minimal polynomial degree of s1:", minimal_polynomial_degree(lk.gens[0]))

parts = build_W_parts(ConjectureCase(Partition((3, 2))))
W0 = parts.W0
print("W0 dim", W0.dim, " quadratic relation:", quadratic_check(W0, 1, -W0.domain.q()).passed)

for k in (3, 4):
    p = build_W_parts(ConjectureCase(Partition((3, 2)), k))
    print(f"q = zeta_{k}: radical {p.info['radical_dim']}, W dim {p.W.dim}")

# the 4-dimensional radical at zeta_3 is the Burau module
p = build_W_parts(ConjectureCase(Partition((3, 2)), 3))
X = intertwiners(p.radical, specialize_rep(burau_reduced(5), q=3))
print("radical ~ Burau:", find_invertible(X) is not None)
