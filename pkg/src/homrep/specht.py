"""
Dipper-James Specht modules of the Hecke algebra H_n, built inside the
regular module.

Conventions (fixed by calibration, see the tests):

* x_lam = sum of T_w over the row stabiliser S_lam of the row-reading
  tableau; y_lam' = sum of (-q)^{-l(w)} T_w over the column stabiliser of the
  column-reading tableau.
* z_lam = x_lam T_d y_lam', d the permutation taking the row-reading tableau
  to the column-reading one.  S^lam = z_lam H (right ideal), spun by right
  multiplication by T_1, ..., T_{n-1}.
* With these choices S^(n) is T_i -> q and S^(n-1,1) is isomorphic to the
  reduced Burau representation converted by T_i = q sigma_i^{-1}.
* The bilinear form is the restriction of the form on x_lam H with
  <x_lam T_d, x_lam T_e> = delta_{de} q^{l(d)}, d, e minimal right coset
  representatives; on vectors it reads sum_d q^{l(d)} a_d b_d where a_d is the
  coefficient of T_d.

Independence during spinning is decided modulo a prime at a random point
(q -> random residue, or zeta_k -> a residue of order k).  A nonzero minor
mod p proves independence; coordinates of every image are then solved and
checked exactly, so a bad evaluation point can only cause a retry.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import flint

from .braid_hecke import (
    HeckeElement,
    Partition,
    Perm,
    all_perms,
    hecke_relations_check,
    identity_perm,
    perm_inverse,
    perm_length,
    reduced_word,
)
from .linalg import Matrix, MatrixRep, nullspace, restrict_quotient
from .scalars import GENERIC_Q, CyclotomicNumber, ScalarDomain, cyclotomic, specialize


class DimensionMismatch(RuntimeError):
    pass


class NotAPartition(ValueError):
    pass


MAX_N = 7


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape.parts):
            raise ValueError("filling does not match shape")
        n = self.shape.size
        if sorted(x for r in self.rows for x in r) != list(range(1, n + 1)):
            raise ValueError("filling must use 1..n once each")
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must increase")

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def standard_tableaux(shape: Partition) -> List[StandardTableau]:
    """All standard tableaux, found by removing the largest entry from a corner."""
    parts = list(shape.parts)
    n = sum(parts)

    def rec(parts, m):
        if m == 0:
            return [[[] for _ in parts]]
        out = []
        for i, p in enumerate(parts):
            if p and (i + 1 == len(parts) or parts[i + 1] < p):
                smaller = parts[:i] + [p - 1] + parts[i + 1:]
                for tab in rec(smaller, m - 1):
                    tab = [list(r) for r in tab]
                    tab[i].append(m)
                    out.append(tab)
        return out

    return sorted(
        (StandardTableau(shape, tuple(tuple(r) for r in tab)) for tab in rec(parts, n)),
        key=lambda t: t.rows,
    )


def hook_dim(shape: Partition) -> int:
    lam, conj = shape.parts, shape.conjugate().parts
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.size) // prod


# ---------------------------------------------------------------------------
# the generating element


def _row_blocks(parts: Sequence[int]) -> List[List[int]]:
    blocks, start = [], 1
    for p in parts:
        blocks.append(list(range(start, start + p)))
        start += p
    return blocks


def _row_reading(shape: Partition) -> Dict[Tuple[int, int], int]:
    cells, k = {}, 1
    for i, row in enumerate(shape.parts):
        for j in range(row):
            cells[(i, j)] = k
            k += 1
    return cells


def _column_reading(shape: Partition) -> Dict[Tuple[int, int], int]:
    cells, k = {}, 1
    for j, col in enumerate(shape.conjugate().parts):
        for i in range(col):
            cells[(i, j)] = k
            k += 1
    return cells


def young_subgroup(n: int, blocks: Sequence[Sequence[int]]) -> List[Perm]:
    """Permutations (one-line) preserving each block of values."""
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        w = list(range(1, n + 1))
        for b, img in zip(blocks, images):
            for src, dst in zip(b, img):
                w[src - 1] = dst
        out.append(tuple(w))
    return out


def _column_blocks(shape: Partition) -> List[List[int]]:
    col = _column_reading(shape)
    blocks: Dict[int, List[int]] = {}
    for (i, j), v in col.items():
        blocks.setdefault(j, []).append(v)
    return [sorted(blocks[j]) for j in sorted(blocks)]


def connecting_permutation(shape: Partition) -> Perm:
    """d with d(column-reading entry of a cell) = row-reading entry of that cell.

    Equivalently S_lam and d S_lam' d^{-1} meet trivially; the other
    orientation makes z vanish for non-self-conjugate shapes.
    """
    row, col = _row_reading(shape), _column_reading(shape)
    n = shape.size
    d = [0] * n
    for cell, r in row.items():
        d[col[cell] - 1] = r
    return tuple(d)


def generating_element(shape: Partition, domain: ScalarDomain = GENERIC_Q) -> HeckeElement:
    """z = x_lam T_d y_lam' in the T_w basis."""
    n = shape.size
    one = domain.one()
    x = HeckeElement(n, domain, {w: one for w in young_subgroup(n, _row_blocks(shape.parts))})
    minus_qinv = -domain.q(-1)
    y = HeckeElement(n, domain, {w: minus_qinv ** perm_length(w) for w in young_subgroup(n, _column_blocks(shape))})
    z = x
    for i in reduced_word(connecting_permutation(shape)):
        z = z.times_generator(i)
    return z * y


def minimal_coset_reps(shape: Partition) -> List[Perm]:
    """Minimal length d in their right cosets S_lam d (d^{-1} increasing on each row block)."""
    n = shape.size
    blocks = _row_blocks(shape.parts)
    out = []
    for d in all_perms(n):
        di = perm_inverse(d)
        if all(di[b[k] - 1] < di[b[k + 1] - 1] for b in blocks for k in range(len(b) - 1)):
            out.append(d)
    return out


# ---------------------------------------------------------------------------
# modular evaluation


_PRIME_BASE = (1 << 31) - 1


def _is_prime(p: int) -> bool:
    return p > 1 and bool(flint.fmpz(p).is_prime())


def _prime_for(k: Optional[int]) -> int:
    step = k or 1
    p = _PRIME_BASE - (_PRIME_BASE - 1) % step
    while not _is_prime(p):
        p -= step
    return p


class _ModEvaluator:
    """Ring map from the domain to GF(p)."""

    def __init__(self, domain: ScalarDomain, rng: random.Random):
        self.domain = domain
        k = domain.k if domain.kind == "cyclotomic" else None
        self.p = p = _prime_for(k)
        if k is None:
            self.point = rng.randrange(2, p - 1)
        else:
            while True:
                g = pow(rng.randrange(2, p - 1), (p - 1) // k, p)
                if all(pow(g, k // f, p) != 1 for f in range(2, k + 1) if k % f == 0 and _is_prime(f)):
                    self.point = g
                    break

    def _frac(self, c) -> int:
        p = self.p
        return int(c.numerator if isinstance(c, Fraction) else c.p) % p * pow(
            int(c.denominator if isinstance(c, Fraction) else c.q), -1, p) % p

    def __call__(self, x) -> int:
        p, z = self.p, self.point
        if isinstance(x, CyclotomicNumber):
            return sum(self._frac(c) * pow(z, i, p) for i, c in enumerate(x.coeffs)) % p
        num = sum(self._frac(c) * pow(z, a, p) for (a, _), c in x._laurent_terms("n")) % p
        den = sum(self._frac(c) * pow(z, a, p) for (a, _), c in x._laurent_terms("d")) % p
        return num * pow(den, -1, p) % p


class _ModEchelon:
    def __init__(self, p: int):
        self.p = p
        self.rows: List[Tuple[int, Dict[int, int]]] = []

    def add(self, v: Dict[int, int]) -> Optional[int]:
        p = self.p
        v = {k: x for k, x in v.items() if x}
        for piv, r in self.rows:
            a = v.get(piv)
            if a:
                for k, x in r.items():
                    y = (v.get(k, 0) - a * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        if not v:
            return None
        piv = min(v)
        inv = pow(v[piv], -1, p)
        self.rows.append((piv, {k: x * inv % p for k, x in v.items()}))
        return piv


# ---------------------------------------------------------------------------
# the module


@dataclass
class SpechtModule:
    shape: Partition
    domain: ScalarDomain
    basis: List[HeckeElement]
    words: List[Tuple[int, ...]]
    rep: MatrixRep

    @property
    def n(self) -> int:
        return self.shape.size

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def tableaux(self) -> List[StandardTableau]:
        return standard_tableaux(self.shape)

    @property
    def gens(self):
        return self.rep.gens


def _spin_regular(z: HeckeElement, target: int, domain: ScalarDomain, seed: int):
    n = z.n
    perms = all_perms(n)
    index = {w: i for i, w in enumerate(perms)}
    ev = _ModEvaluator(domain, random.Random(seed))
    ech = _ModEchelon(ev.p)

    def modvec(h):
        return {index[w]: ev(c) for w, c in h.coeffs.items()}

    basis, words, pivots = [], [], []
    piv = ech.add(modvec(z))
    if piv is None:
        raise DimensionMismatch("generating element is zero")
    basis.append(z), words.append(()), pivots.append(piv)
    images: Dict[Tuple[int, int], HeckeElement] = {}
    j = 0
    while j < len(basis):
        for i in range(1, n):
            h = basis[j].times_generator(i)
            images[(j, i)] = h
            piv = ech.add(modvec(h))
            if piv is not None:
                basis.append(h), words.append(words[j] + (i,)), pivots.append(piv)
        j += 1
    if len(basis) != target:
        raise DimensionMismatch(f"spun dimension {len(basis)} != {target}")
    return basis, words, [perms[p] for p in pivots], images


def _coordinates(basis, pivot_perms, images, domain, n):
    d = len(basis)
    zero = domain.zero()
    B = Matrix([[b.coeffs.get(w, zero) for b in basis] for w in pivot_perms], domain)
    Binv = B.inverse()
    position = {id(b): k for k, b in enumerate(basis)}
    gens = []
    for i in range(1, n):
        cols = []
        for j in range(d):
            h = images[(j, i)]
            k = position.get(id(h))
            if k is not None:
                cols.append([domain.one() if r == k else zero for r in range(d)])
                continue
            c = Binv.apply([h.coeffs.get(w, zero) for w in pivot_perms])
            check = HeckeElement(n, domain)
            for ck, b in zip(c, basis):
                if not ck.is_zero():
                    check = check + b.scale(ck)
            if check != h:
                return None
            cols.append(c)
        gens.append(Matrix.from_columns(cols, domain, nrows=d))
    return gens


def specht_rep(shape: Partition, n: Optional[int] = None, domain: ScalarDomain = GENERIC_Q) -> SpechtModule:
    """S^lam over the generic field Q(q) or a cyclotomic field."""
    if n is not None and n != shape.size:
        raise ValueError(f"|lambda| = {shape.size} != n = {n}")
    n = shape.size
    if n > MAX_N:
        raise ValueError(f"n <= {MAX_N} supported")
    if domain.kind == "qt":
        raise ValueError("Specht modules live over Q(q) or Q(zeta_k)")
    target = hook_dim(shape)
    z = generating_element(shape, GENERIC_Q)
    if domain.kind == "cyclotomic":
        z = HeckeElement(n, domain, {w: specialize(c, q=domain.k) for w, c in z.coeffs.items()})
    for attempt in range(4):
        basis, words, pivots, images = _spin_regular(z, target, domain, seed=1000 + attempt)
        gens = _coordinates(basis, pivots, images, domain, n)
        if gens is not None:
            break
    else:
        raise DimensionMismatch("exact coordinate check kept failing")
    rep = MatrixRep(n, gens, domain, "specht", "hecke", {"lambda": str(shape), "words": [list(w) for w in words]},
                    dim=len(basis))
    if not hecke_relations_check(rep).passed:
        raise DimensionMismatch("Hecke relations fail on the spun module")
    return SpechtModule(shape, domain, basis, words, rep)


# ---------------------------------------------------------------------------
# the form and its quotient


def dj_form(S: SpechtModule) -> Matrix:
    dom = S.domain
    reps = minimal_coset_reps(S.shape)
    weight = {d: dom.q(perm_length(d)) for d in reps}
    zero = dom.zero()
    rows = []
    for a in S.basis:
        row = []
        for b in S.basis:
            acc = zero
            for d, wt in weight.items():
                x, y = a.coeffs.get(d), b.coeffs.get(d)
                if x is not None and y is not None:
                    acc = acc + wt * x * y
            row.append(acc)
        rows.append(row)
    return Matrix(rows, dom)


def quantum_characteristic(domain: ScalarDomain) -> Optional[int]:
    """e(zeta_k) = k; None stands for infinity (generic q)."""
    return domain.k if domain.kind == "cyclotomic" else None


def _domain_for(q_spec: Optional[int]) -> ScalarDomain:
    return GENERIC_Q if q_spec is None else cyclotomic(q_spec)


def d_lambda(shape: Partition, q_spec: Optional[int] = None) -> MatrixRep:
    """S^lam / rad, as Hecke matrices (possibly 0-dimensional)."""
    S = specht_rep(shape, domain=_domain_for(q_spec))
    G = dj_form(S)
    rad = nullspace(G)
    _, quo = restrict_quotient(S.rep, rad)
    quo.label = "specht"
    quo.meta = {"lambda": str(shape), "q": "generic" if q_spec is None else f"root:{q_spec}",
                "radical_dim": rad.dim, "specht_dim": S.dim}
    return quo


def is_e_regular(shape: Partition, e: Optional[int]) -> bool:
    """No part repeated e or more times."""
    if e is None:
        return True
    parts = shape.parts
    return all(parts.count(p) < e for p in set(parts))


def nonzero_classification(shape: Partition, e: Optional[int]) -> bool:
    """Whether D_lam is nonzero: lam must be e-regular (calibrated by brute force)."""
    return is_e_regular(shape, e)


def lambda_from_mu(mu: Partition, n: int) -> Partition:
    first = n - mu.size
    if mu.parts and first < mu.parts[0]:
        raise NotAPartition(f"({first},{','.join(map(str, mu.parts))}) is not a partition")
    if first < 0:
        raise NotAPartition("mu larger than n")
    return Partition((first,) + tuple(mu.parts))


def semisimple_count(n: int) -> int:
    """Sum of (dim S^lam)^2 over lam |- n; equals n! (consistency of the oracle)."""
    from .braid_hecke import partitions

    return sum(hook_dim(p) ** 2 for p in partitions(n))
