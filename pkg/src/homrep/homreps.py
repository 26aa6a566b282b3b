"""
Explicit matrix models of the homological representations for m <= 2:
the trivial representation (m = 0), Burau (m = 1) and Lawrence-Krammer
(m = 2), plus the bookkeeping for the Borel-Moore decomposition.

Matrices act on column vectors.  Conventions:

* Burau: sigma_i is the identity except for the block [[1-q, q], [1, 0]] on
  coordinates (i, i+1).  Eigenvalues are {1, -q}.  The reduced representation
  is the restriction to the kernel of the covector (1, q, ..., q^{n-1}) in the
  basis b_i = q e_i - e_{i+1}.
* Lawrence-Krammer: Krammer's matrices in the edge basis v_{j,k}, 1 <= j < k
  <= n, in the widely used form with parameter t' = -t, where t is the
  monodromy parameter (a swap of the two points has monodromy -t).  Then
  sigma_i acts on v_{i,i+1} by q^2 t and satisfies (s - 1)(s + q)(s - q^2 t) = 0.
  The identification is pinned by the Specht embeddings: at t = 1/q the
  module S^(n-2,2) maps in, at t = -1 the module S^(n-2,1,1) does.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .braid_hecke import braid_relations_check, composition_count, compositions
from .linalg import Matrix, MatrixRep
from .scalars import GENERIC_Q, GENERIC_QT, ScalarDomain


@dataclass(frozen=True)
class LocalSystemSpec:
    """Descriptive record of the coefficient bundle over C_m(D_n)."""

    n: int
    m: int
    puncture_monodromy: str = "q"
    swap_monodromy: str = "-t"

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")


def trivial_rep(n: int, domain: ScalarDomain = GENERIC_Q) -> MatrixRep:
    if n < 1:
        raise ValueError("n >= 1")
    one = Matrix.identity(1, domain)
    return MatrixRep(n, [one] * (n - 1), domain, "trivial", meta={"m": 0}, dim=1)


def _burau_block(n: int, i: int, domain: ScalarDomain) -> Matrix:
    q = domain.q()
    zero, one = domain.zero(), domain.one()
    rows = [[one if r == c else zero for c in range(n)] for r in range(n)]
    a = i - 1
    rows[a][a], rows[a][a + 1] = 1 - q, q
    rows[a + 1][a], rows[a + 1][a + 1] = one, zero
    return Matrix(rows, domain)


def burau_unreduced(n: int, domain: ScalarDomain = GENERIC_Q) -> MatrixRep:
    if n < 2:
        raise ValueError("n >= 2")
    return MatrixRep(n, [_burau_block(n, i, domain) for i in range(1, n)], domain, "burau-unreduced", meta={"m": 1})


def reduced_burau_basis(n: int, domain: ScalarDomain = GENERIC_Q) -> List[list]:
    """b_i = q e_i - e_{i+1}, i = 1..n-1, spanning ker(1, q, ..., q^{n-1})."""
    q = domain.q()
    zero = domain.zero()
    basis = []
    for i in range(n - 1):
        v = [zero] * n
        v[i], v[i + 1] = q, -domain.one()
        basis.append(v)
    return basis


def _reduced_coords(x: list, domain: ScalarDomain) -> list:
    # x = sum c_i b_i  =>  x_1 = q c_1,  x_j = q c_j - c_{j-1}
    qinv = domain.q(-1)
    c = []
    prev = domain.zero()
    for xj in x[:-1]:
        prev = (xj + prev) * qinv
        c.append(prev)
    if x[-1] != -c[-1]:
        raise ValueError("vector is not in the reduced subspace")
    return c


def burau_reduced(n: int, domain: ScalarDomain = GENERIC_Q) -> MatrixRep:
    full = burau_unreduced(n, domain)
    basis = reduced_burau_basis(n, domain)
    gens = []
    for M in full.gens:
        cols = [_reduced_coords(M.apply(b), domain) for b in basis]
        gens.append(Matrix.from_columns(cols, domain))
    return MatrixRep(n, gens, domain, "burau-reduced",
                     meta={"m": 1, "basis": "b_i = q*e_i - e_(i+1)"})


def lk_pairs(n: int) -> List[Tuple[int, int]]:
    """v-basis labels (j, k), 1 <= j < k <= n, lexicographic."""
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def u_pairs(n: int) -> List[Tuple[int, int]]:
    """u-basis labels (k, l), 1 <= k <= l <= n-1, lexicographic."""
    return [(k, l) for k in range(1, n) for l in range(k, n)]


def lk_rep(n: int, domain: ScalarDomain = GENERIC_QT) -> MatrixRep:
    """Lawrence-Krammer representation in the v basis, over Q(q, t)."""
    if n < 2:
        raise ValueError("n >= 2")
    if domain.kind != "qt":
        raise ValueError("construct over Q(q,t), then specialise")
    q, t = domain.q(), domain.t()
    pairs = lk_pairs(n)
    idx = {p: r for r, p in enumerate(pairs)}
    N = len(pairs)
    gens = []
    for i in range(1, n):
        cols = []
        for (j, k) in pairs:
            col = [domain.zero()] * N

            def add(p, c):
                col[idx[p]] = col[idx[p]] + c

            if i not in (j - 1, j, k - 1, k):
                add((j, k), 1)
            elif i == j - 1:
                add((i, k), q)
                add((i, j), q * q - q)
                add((j, k), 1 - q)
            elif i == j and i != k - 1:
                add((j + 1, k), 1)
            elif i == k - 1 and i != j:
                add((j, i), q)
                add((j, k), 1 - q)
                add((i, k), (q * q - q) * t)
            elif i == k:
                add((j, k + 1), 1)
            else:  # i == j == k - 1
                add((j, k), q * q * t)
            cols.append(col)
        gens.append(Matrix.from_columns(cols, domain))
    labels = [f"v_{{{j},{k}}}" for j, k in pairs]
    return MatrixRep(n, gens, domain, "lk", meta={"m": 2, "basis": "v", "labels": labels})


def basis_change_u_to_v(n: int, domain: ScalarDomain = GENERIC_Q) -> Matrix:
    """Row (i,j) holds the u-coordinates of v_{i,j} = sum_{i<=k<=l<j} u_{k,l}."""
    vs, us = lk_pairs(n), u_pairs(n)
    rows = []
    for (i, j) in vs:
        rows.append([1 if (i <= k and l < j) else 0 for (k, l) in us])
    return Matrix(rows, domain)


def lk_rep_u_basis(n: int) -> MatrixRep:
    """The same representation written in the u basis."""
    rep = lk_rep(n)
    C = basis_change_u_to_v(n, rep.domain).transpose()  # columns: v in u-coordinates
    Cinv = C.inverse()
    gens = [C @ g @ Cinv for g in rep.gens]
    labels = [f"u_{{{k},{l}}}" for k, l in u_pairs(n)]
    return MatrixRep(n, gens, rep.domain, "lk", meta={"m": 2, "basis": "u", "labels": labels})


def specialize_rep(rep: MatrixRep, q: Optional[int] = None, t=None) -> MatrixRep:
    """Entrywise specialisation; braid relations are re-verified."""
    out = rep.specialize(q=q, t=t)
    chk = braid_relations_check(out)
    if not chk.passed:
        raise AssertionError(f"braid relations fail after specialising {rep.label}")
    return out


def hmbm_dimension(n: int, m: int, dim_v: int = 1) -> int:
    """Rank of the Borel-Moore module: |compositions(n, m)| * dim V."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return composition_count(n, m) * dim_v


def printed_binomial(n: int, m: int) -> int:
    """The printed multiplicity C(n+m-1, m); reported next to the true count, never used."""
    return comb(n + m - 1, m)


def enumerate_summands(n: int, m: int):
    return compositions(n, m)
