"""
Invariant sesquilinear forms, found by solving the invariance equations

    bar(M_i)^T G M_i = G        for every generator M_i,

their Hermitian normalisation, and radicals after specialising q to a root of
unity.  The pairing is conjugate-linear in the first slot:
<u, v> = bar(u)^T G v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .linalg import Matrix, MatrixRep, Subspace, nullspace, restrict_quotient, solve_linear
from .scalars import evaluate_complex, phi_power, phi_valuation, primitive_part


class NotNormalizable(ValueError):
    pass


class FormVanishesAtSpecialization(ValueError):
    pass


@dataclass(frozen=True)
class Specialization:
    """Target of a specialisation: ``q`` = k means q = zeta_k; ``t`` a rule."""

    q: Optional[int] = None
    t: Optional[str] = None

    @property
    def label(self) -> str:
        qs = "generic" if self.q is None else f"root:{self.q}"
        return f"q={qs}" + (f",t={self.t}" if self.t else "")


GENERIC = Specialization()


@dataclass
class SesquiForm:
    gram: Matrix
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def pairing(self, u, v):
        dom = self.gram.domain
        acc = dom.zero()
        Gv = self.gram.apply(list(v))
        for x, y in zip(u, Gv):
            acc = acc + x.bar() * y
        return acc

    def is_hermitian(self) -> bool:
        return self.gram.conj_transpose() == self.gram

    def is_invariant(self, rep: MatrixRep) -> bool:
        return all(M.conj_transpose() @ self.gram @ M == self.gram for M in rep.gens)


def invariant_form_space(rep: MatrixRep) -> List[Matrix]:
    """Basis of all G with bar(M)^T G M = G, solved as bar(M)^T G = G M^{-1}."""
    d = rep.dim
    dom = rep.domain
    if d == 0:
        return []
    rows = []
    for M, Minv in zip(rep.gens, rep.inverses):
        Mbar = M.bar()
        for a in range(d):
            for b in range(d):
                eq = {}
                for c in range(d):
                    x = Mbar.rows[c][a]
                    if not x.is_zero():
                        key = c * d + b
                        eq[key] = eq[key] + x if key in eq else x
                for e in range(d):
                    x = Minv.rows[e][b]
                    if not x.is_zero():
                        key = a * d + e
                        eq[key] = eq[key] - x if key in eq else -x
                eq = {k: v for k, v in eq.items() if not v.is_zero()}
                if eq:
                    rows.append(eq)
    if not rep.gens:
        return [Matrix.identity(d, dom)] if d == 1 else _all_matrices(d, dom)
    vecs = solve_linear(rows, d * d, dom)
    out = []
    for v in vecs:
        if dom.generic:
            v, _ = primitive_part(v)
        G = Matrix([v[r * d:(r + 1) * d] for r in range(d)], dom)
        for M in rep.gens:
            if M.conj_transpose() @ G @ M != G:
                raise AssertionError("invariant form failed re-check")
        out.append(G)
    return out


def _all_matrices(d, dom):
    out = []
    for r in range(d):
        for c in range(d):
            out.append(Matrix([[dom.one() if (i, j) == (r, c) else dom.zero() for j in range(d)] for i in range(d)], dom))
    return out


def _hermitian_ratio(G: Matrix):
    H = G.conj_transpose()
    for i in range(G.nrows):
        for j in range(G.ncols):
            if not G.rows[i][j].is_zero():
                c = H.rows[i][j] / G.rows[i][j]
                if H != G.scale(c):
                    raise NotNormalizable("bar-transpose(G) is not a multiple of G")
                return c
    raise NotNormalizable("zero form")


def hermitian_normalize(G: Matrix) -> SesquiForm:
    """Rescale G so that bar-transpose(G) = G, entries in the Laurent ring."""
    dom = G.domain
    c = _hermitian_ratio(G)
    if c * c.bar() != 1:
        raise NotNormalizable(f"bar-transpose(G) = c G with c*bar(c) = {c * c.bar()} != 1")
    q = dom.q()
    candidates = [1 + c] + [q ** k * (1 + c) for k in (-2, -1, 1, 2)] + [q ** k for k in (-2, -1, 0, 1, 2)]
    s = next((s for s in candidates if not s.is_zero() and s.bar() * c == s), None)
    if s is None:
        raise NotNormalizable(f"no Hermitian rescaling found (c = {c})")
    H = G.scale(s)
    if dom.generic:
        flat = [x for r in H.rows for x in r]
        _, scale = primitive_part(flat)
        den = scale.denominator
        H = H.scale(den * den.bar())
        prim = H.clear_denominators()
        if prim.conj_transpose() == prim:
            H = prim
    if H.conj_transpose() != H:
        raise AssertionError("normalisation did not produce a Hermitian matrix")
    return SesquiForm(H, {"scale": str(s)})


def specialize_gram(G: Matrix, at: Specialization, rescale: bool = True) -> Tuple[Matrix, int]:
    """Specialise a generic Gram matrix, dividing out the largest power of
    Phi_k(q) common to all entries first.  Returns (matrix, exponent used)."""
    if at.t is not None and G.domain.kind == "qt":
        G = G.specialize(t=at.t)
    if at.q is None:
        return G, 0
    if not G.domain.generic:
        return G, 0
    flat = [x for r in G.rows for x in r if not x.is_zero()]
    if not flat:
        raise FormVanishesAtSpecialization("zero form")
    v = min(phi_valuation(x, at.q) for x in flat)
    if v != 0:
        if not rescale:
            raise FormVanishesAtSpecialization(f"Phi_{at.q} divides the form to order {v}")
        G = G.scale(phi_power(at.q, -v))
    return G.specialize(q=at.q), v


def radical(form: SesquiForm, at: Specialization = GENERIC, rescale: bool = True) -> Subspace:
    """Radical {v : G v = 0} of the (specialised) form."""
    G, v = specialize_gram(form.gram, at, rescale)
    if G.is_zero():
        raise FormVanishesAtSpecialization("specialised form is zero")
    form.meta["phi_rescale"] = v
    return nullspace(G)


def restrict_form(G: Matrix, basis: List[list]) -> Matrix:
    B = Matrix.from_columns(basis, G.domain)
    return B.conj_transpose() @ G @ B


def radical_filtration(rep: MatrixRep, form: SesquiForm) -> List[Tuple[MatrixRep, int]]:
    """rep > rad > rad(rad) > ..., each radical carrying a freshly solved invariant form.

    Returns the successive quotients with their dimensions (top first).
    """
    layers = []
    cur, G = rep, form.gram
    while cur.dim:
        rad = nullspace(G)
        sub, quo = restrict_quotient(cur, rad)
        layers.append((quo, quo.dim))
        if rad.dim == 0:
            break
        forms = [F for F in invariant_form_space(sub) if not F.is_zero()]
        if not forms:
            layers.append((sub, sub.dim))
            break
        cur, G = sub, forms[0]
    return layers


def definiteness_probe(form: SesquiForm, q_angle: float, t_angle: float = 0.0, tol: float = 1e-9):
    """Inertia (pos, neg, zero) of the form at q = e^{i a}, t = e^{i b}."""
    qv, tv = np.exp(1j * q_angle), np.exp(1j * t_angle)
    A = np.array([[evaluate_complex(x, qv, tv) for x in r] for r in form.gram.rows], dtype=complex)
    A = (A + A.conj().T) / 2
    ev = np.linalg.eigvalsh(A)
    return int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum())
