"""Reduced Burau: the invariant form and where it degenerates."""

from homrep import burau_reduced, hermitian_normalize, invariant_form_space
from homrep.forms import Specialization, radical
from homrep.harness import ConjectureCase, build_W_parts
from homrep.braid_hecke import Partition

for n in range(3, 7):
    rep = burau_reduced(n)
    form = hermitian_normalize(invariant_form_space(rep)[0])
    # the form is nondegenerate over Q(q)
    print(f"n={n}  generic radical:", radical(form).dim)
    for k in range(2, n + 1):
        r = radical(form, Specialization(q=k)).dim
        if r:
            print(f"      q = zeta_{k}: radical {r}")

# at q = zeta_n the quotient by the radical is (n-2)-dimensional
parts = build_W_parts(ConjectureCase(Partition((4, 1)), 5))
print("n=5, q=zeta_5:", parts.W0.dim, "->", parts.W.dim)
