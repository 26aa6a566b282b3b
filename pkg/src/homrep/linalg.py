"""
Exact dense linear algebra over a :class:`~homrep.scalars.ScalarDomain`.

Elimination over the generic domains is fraction free: rows are scaled into
the Laurent ring and kept primitive (content divided out after every update),
which keeps polynomial growth in check on the 10-40 column systems that come
up here.  Over cyclotomic fields plain Gauss-Jordan with exact division is
used.  Both routes end in the unique reduced row-echelon form.
"""

from __future__ import annotations

import itertools
import json
from typing import Dict, Iterable, List, Optional, Sequence

from .scalars import (
    CyclotomicNumber,
    RationalFunction,
    ScalarDomain,
    primitive_part,
    specialize,
)

__all__ = [
    "Matrix",
    "Subspace",
    "MatrixRep",
    "NotInvariant",
    "rref",
    "nullspace",
    "spin",
    "intertwiners",
    "find_invertible",
    "restrict_quotient",
    "solve_linear",
]


class NotInvariant(ValueError):
    """A subspace is not stable under the generators."""


class Matrix:
    """Rectangular matrix with entries in one scalar domain.  Immutable."""

    __slots__ = ("rows", "nrows", "ncols", "domain")

    def __init__(self, rows: Sequence[Sequence], domain: ScalarDomain, ncols: Optional[int] = None):
        self.domain = domain
        self.rows = tuple(tuple(domain.coerce(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _trusted(cls, rows, domain, ncols):
        m = object.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows, m.ncols, m.domain = len(m.rows), ncols, domain
        return m

    @classmethod
    def identity(cls, n: int, domain: ScalarDomain) -> "Matrix":
        z, o = domain.zero(), domain.one()
        return cls._trusted([[o if i == j else z for j in range(n)] for i in range(n)], domain, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, domain: ScalarDomain) -> "Matrix":
        z = domain.zero()
        return cls._trusted([[z] * ncols for _ in range(nrows)], domain, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], domain: ScalarDomain, nrows: Optional[int] = None) -> "Matrix":
        if not cols:
            return cls.zeros(nrows or 0, 0, domain)
        return cls([list(r) for r in zip(*cols)], domain)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> List[list]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix._trusted(list(zip(*self.rows)) if self.nrows else [], self.domain, self.nrows)

    def map(self, f, domain: Optional[ScalarDomain] = None) -> "Matrix":
        return Matrix._trusted([[f(x) for x in r] for r in self.rows], domain or self.domain, self.ncols)

    def bar(self) -> "Matrix":
        return self.map(lambda x: x.bar())

    def conj_transpose(self) -> "Matrix":
        """bar-transpose."""
        return self.bar().transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.domain.zero()
        cols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if not x.is_zero()]
            row = []
            for c in cols:
                acc = zero
                for k, x in nz:
                    y = c[k]
                    if not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._trusted(out, self.domain, other.ncols)

    def apply(self, v: Sequence) -> list:
        zero = self.domain.zero()
        nz = [(k, x) for k, x in enumerate(map(self.domain.coerce, v)) if not x.is_zero()]
        out = []
        for r in self.rows:
            acc = zero
            for k, x in nz:
                y = r[k]
                if not y.is_zero():
                    acc = acc + y * x
            out.append(acc)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.domain, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.domain, self.ncols)

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        c = self.domain.coerce(c)
        return self.map(lambda x: c * x)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            (x == 1) if i == j else x.is_zero() for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        cols = list(cols)
        return Matrix._trusted([[self.rows[i][j] for j in cols] for i in rows], self.domain, len(cols))

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = Matrix._trusted(
            [list(r) + list(e) for r, e in zip(self.rows, Matrix.identity(n, self.domain).rows)], self.domain, 2 * n
        )
        red, rank = rref(aug)
        if rank < n or any(red.rows[i][i] != 1 for i in range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._trusted([r[n:] for r in red.rows], self.domain, n)

    def det(self):
        """Determinant by elimination."""
        if self.nrows != self.ncols:
            raise ValueError("not square")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.domain.one()
        for c in range(n):
            piv = min((i for i in range(c, n) if not rows[i][c].is_zero()), key=lambda i: rows[i][c].size(), default=None)
            if piv is None:
                return self.domain.zero()
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            p = rows[c][c]
            det = det * p
            inv = p.inverse()
            for i in range(c + 1, n):
                f = rows[i][c]
                if f.is_zero():
                    continue
                f = f * inv
                rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], rows[c])]
        return det

    def specialize(self, q: Optional[int] = None, t=None) -> "Matrix":
        dom = self.domain
        if t is not None:
            dom = ScalarDomain("q", None, t if isinstance(t, str) else "custom")
        if q is not None:
            dom = ScalarDomain("cyclotomic", q, dom.t_rule)
        return Matrix._trusted([[specialize(x, q=q, t=t) for x in r] for r in self.rows], dom, self.ncols)

    def clear_denominators(self) -> "Matrix":
        """Scale to a primitive Laurent matrix (generic domains only)."""
        if not self.domain.generic:
            return self
        flat = [x for r in self.rows for x in r]
        out, _ = primitive_part(flat)
        it = iter(out)
        return Matrix._trusted([[next(it) for _ in range(self.ncols)] for _ in range(self.nrows)], self.domain, self.ncols)

    def to_text(self) -> List[List[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_text())

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.domain.label})"

    def pretty(self) -> str:
        txt = self.to_text()
        w = max((len(s) for r in txt for s in r), default=1)
        return "\n".join("[" + "  ".join(s.rjust(w) for s in r) + "]" for r in txt)


# ---------------------------------------------------------------------------
# elimination


def _primitive_row(row: Dict[int, object]) -> Dict[int, object]:
    keys = list(row)
    vals, _ = primitive_part([row[k] for k in keys])
    return dict(zip(keys, vals))


def _normalise_row(row: Dict[int, object], col: int) -> Dict[int, object]:
    inv = row[col].inverse()
    return {k: v * inv for k, v in row.items()}


def _eliminate(rows: List[Dict[int, object]], ncols: int, generic: bool, full: bool = True):
    """Gauss-Jordan on sparse rows in place.  Returns list of (pivot_col, row)."""
    pivots = []
    active = [r for r in rows if r]
    if generic:
        active = [_primitive_row(r) for r in active]
    for col in range(ncols):
        cands = [i for i, r in enumerate(active) if col in r]
        if not cands:
            continue
        # sparsest pivot entry, then sparsest row
        best = min(cands, key=lambda i: (active[i][col].size(), len(active[i])))
        prow = active.pop(best)
        if not generic:
            prow = _normalise_row(prow, col)
        p = prow[col]
        targets = [r for r in active if col in r]
        if full:
            targets += [r for _, r in pivots if col in r]
        for r in targets:
            a = r[col]
            if generic:
                new = {k: p * v for k, v in r.items()}
                for k, v in prow.items():
                    x = new.get(k)
                    x = -(a * v) if x is None else x - a * v
                    if x.is_zero():
                        new.pop(k, None)
                    else:
                        new[k] = x
                new = _primitive_row(new) if new else new
            else:
                new = dict(r)
                for k, v in prow.items():
                    x = new.get(k)
                    x = -(a * v) if x is None else x - a * v
                    if x.is_zero():
                        new.pop(k, None)
                    else:
                        new[k] = x
            r.clear()
            r.update(new)
        active = [r for r in active if r]
        pivots.append((col, prow))
    return pivots


def _dense_rows(M: Matrix) -> List[Dict[int, object]]:
    return [{j: x for j, x in enumerate(r) if not x.is_zero()} for r in M.rows]


def _sparse_rref(rows: List[Dict[int, object]], ncols: int, domain: ScalarDomain):
    pivots = _eliminate(rows, ncols, domain.generic)
    out = []
    for col, r in pivots:
        if domain.generic:
            inv = r[col].inverse()
            r = {k: (v * inv) for k, v in r.items()}
        out.append((col, r))
    return out


def rref(M: Matrix):
    """Reduced row-echelon form and rank."""
    pivots = _sparse_rref(_dense_rows(M), M.ncols, M.domain)
    zero = M.domain.zero()
    rows = [[r.get(j, zero) for j in range(M.ncols)] for _, r in pivots]
    rows += [[zero] * M.ncols for _ in range(M.nrows - len(rows))]
    return Matrix._trusted(rows, M.domain, M.ncols), len(pivots)


def _nullspace_sparse(rows, ncols, domain) -> List[list]:
    pivots = _sparse_rref(rows, ncols, domain)
    pivcols = {c for c, _ in pivots}
    zero, one = domain.zero(), domain.one()
    basis = []
    for f in range(ncols):
        if f in pivcols:
            continue
        v = [zero] * ncols
        v[f] = one
        for c, r in pivots:
            x = r.get(f)
            if x is not None:
                v[c] = -x
        basis.append(v)
    return basis


def nullspace(M: Matrix) -> "Subspace":
    """Right kernel {x : M x = 0}."""
    vecs = _nullspace_sparse(_dense_rows(M), M.ncols, M.domain)
    return Subspace.span(vecs, M.ncols, M.domain)


def solve_linear(rows: List[Dict[int, object]], ncols: int, domain: ScalarDomain) -> List[list]:
    """Kernel basis of a sparse homogeneous system given as row dicts."""
    return _nullspace_sparse(rows, ncols, domain)


class Subspace:
    """Subspace of domain^ambient; basis rows in reduced row-echelon form."""

    __slots__ = ("ambient", "basis", "domain", "pivots")

    def __init__(self, basis: Matrix, pivots: Sequence[int]):
        self.basis = basis
        self.ambient = basis.ncols
        self.domain = basis.domain
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int, domain: ScalarDomain) -> "Subspace":
        rows = [{j: x for j, x in enumerate(map(domain.coerce, v)) if not x.is_zero()} for v in vectors]
        pivots = _sparse_rref(rows, ambient, domain)
        zero = domain.zero()
        basis = Matrix._trusted([[r.get(j, zero) for j in range(ambient)] for _, r in pivots], domain, ambient)
        return cls(basis, [c for c, _ in pivots])

    @classmethod
    def full(cls, n: int, domain: ScalarDomain) -> "Subspace":
        return cls(Matrix.identity(n, domain), range(n))

    @classmethod
    def zero(cls, n: int, domain: ScalarDomain) -> "Subspace":
        return cls(Matrix.zeros(0, n, domain), ())

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> List[list]:
        return [list(r) for r in self.basis.rows]

    def lattice_vectors(self) -> List[list]:
        """Basis vectors with denominators cleared (generic domains)."""
        if not self.domain.generic:
            return self.vectors()
        return [primitive_part(list(r))[0] for r in self.basis.rows]

    def contains(self, v: Sequence) -> bool:
        return Subspace.span(self.vectors() + [list(v)], self.ambient, self.domain).dim == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} in {self.ambient} over {self.domain.label})"


# ---------------------------------------------------------------------------
# representations


class MatrixRep:
    """Generator matrices for B_n (``algebra="braid"``) or H_n (``"hecke"``)."""

    def __init__(self, n: int, gens: Sequence[Matrix], domain: ScalarDomain, label: str = "derived",
                 algebra: str = "braid", meta: Optional[dict] = None, dim: Optional[int] = None):
        if len(gens) != max(n - 1, 0):
            raise ValueError(f"expected {n - 1} generators, got {len(gens)}")
        self.n = n
        self.gens = tuple(gens)
        self.domain = domain
        self.label = label
        self.algebra = algebra
        self.meta = dict(meta or {})
        self._dim = gens[0].nrows if gens else (dim if dim is not None else 1)
        self._inverses = None

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def inverses(self) -> tuple:
        if self._inverses is None:
            self._inverses = tuple(g.inverse() for g in self.gens)
        return self._inverses

    def generator(self, i: int) -> Matrix:
        """Matrix of generator i (1-based); negative i gives the inverse."""
        return self.gens[i - 1] if i > 0 else self.inverses[-i - 1]

    def specialize(self, q: Optional[int] = None, t=None, label: Optional[str] = None) -> "MatrixRep":
        gens = [g.specialize(q=q, t=t) for g in self.gens]
        dom = gens[0].domain if gens else self.domain
        if not gens:
            dom = self.domain
            if t is not None:
                dom = ScalarDomain("q", None, t if isinstance(t, str) else "custom")
            if q is not None:
                dom = ScalarDomain("cyclotomic", q, dom.t_rule)
        meta = dict(self.meta, specialized={"q": q, "t": t})
        return MatrixRep(self.n, gens, dom, label or self.label, self.algebra, meta, dim=self.dim)

    def __repr__(self):
        return f"MatrixRep({self.label}, n={self.n}, dim={self.dim}, {self.algebra}, {self.domain.label})"


class _Echelon:
    """Incremental echelon basis used by spinning."""

    def __init__(self, ambient: int, domain: ScalarDomain):
        self.ambient = ambient
        self.domain = domain
        self.rows: List[tuple] = []  # (pivot, dict) with dict[pivot] == 1

    def reduce(self, v: Dict[int, object]) -> Dict[int, object]:
        v = dict(v)
        for piv, r in self.rows:
            a = v.get(piv)
            if a is None:
                continue
            for k, x in r.items():
                y = v.get(k)
                y = -(a * x) if y is None else y - a * x
                if y.is_zero():
                    v.pop(k, None)
                else:
                    v[k] = y
        return v

    def add(self, vec: Sequence) -> bool:
        v = self.reduce({j: x for j, x in enumerate(vec) if not x.is_zero()})
        if not v:
            return False
        piv = min(v, key=lambda k: (v[k].size(), k))
        inv = v[piv].inverse()
        v = {k: x * inv for k, x in v.items()}
        for _, r in self.rows:
            a = r.get(piv)
            if a is not None:
                for k, x in v.items():
                    y = r.get(k)
                    y = -(a * x) if y is None else y - a * x
                    if y.is_zero():
                        r.pop(k, None)
                    else:
                        r[k] = y
        self.rows.append((piv, v))
        return True


def spin(seed: Subspace, generators: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing ``seed`` and stable under every generator."""
    ech = _Echelon(seed.ambient, seed.domain)
    queue = []
    for v in seed.vectors():
        if ech.add(v):
            queue.append(v)
    while queue:
        v = queue.pop(0)
        for g in generators:
            w = g.apply(v)
            if ech.add(w):
                queue.append(w)
    vecs = [list(v) for v in (list(r.get(j, seed.domain.zero()) for j in range(seed.ambient)) for _, r in ech.rows)]
    return Subspace.span(vecs, seed.ambient, seed.domain)


def spin_vectors(seeds: Sequence[Sequence], generators: Sequence[Matrix], ambient: int,
                 domain: ScalarDomain) -> List[list]:
    """Spin and return the spanning vectors actually produced (not echelonised).

    Keeps the seeds' lattice: returned vectors are images of seeds under words
    in the generators.
    """
    ech = _Echelon(ambient, domain)
    out = []
    for v in seeds:
        if ech.add(v):
            out.append(list(v))
    i = 0
    while i < len(out):
        v = out[i]
        for g in generators:
            w = g.apply(v)
            if ech.add(w):
                out.append(w)
        i += 1
    return out


def intertwiners(repA: MatrixRep, repB: MatrixRep) -> List[Matrix]:
    """Basis of {X : X A_i = B_i X for all i}; X has shape dim B x dim A."""
    if repA.n != repB.n:
        raise ValueError("strand counts differ")
    if repA.domain != repB.domain and (repA.domain.kind, repA.domain.k) != (repB.domain.kind, repB.domain.k):
        raise ValueError(f"domains differ: {repA.domain.label} vs {repB.domain.label}")
    da, db = repA.dim, repB.dim
    dom = repA.domain
    if da == 0 or db == 0:
        return []
    rows = []
    for A, B in zip(repA.gens, repB.gens):
        for r in range(db):
            for c in range(da):
                eq: Dict[int, object] = {}
                for k in range(da):
                    a = A.rows[k][c]
                    if not a.is_zero():
                        key = r * da + k
                        eq[key] = eq[key] + a if key in eq else a
                for k in range(db):
                    b = B.rows[r][k]
                    if not b.is_zero():
                        key = k * da + c
                        eq[key] = eq[key] - b if key in eq else -b
                eq = {k: v for k, v in eq.items() if not v.is_zero()}
                if eq:
                    rows.append(eq)
    vecs = solve_linear(rows, da * db, dom)
    out = []
    for v in vecs:
        if dom.generic:
            v, _ = primitive_part(v)
        X = Matrix._trusted([v[r * da:(r + 1) * da] for r in range(db)], dom, da)
        for A, B in zip(repA.gens, repB.gens):
            if X @ A != B @ X:
                raise AssertionError("intertwiner failed re-check")
        out.append(X)
    return out


def find_invertible(basis: Sequence[Matrix], tries: int = 20) -> Optional[Matrix]:
    """An invertible element of span(basis), searching small integer combinations."""
    if not basis or basis[0].nrows != basis[0].ncols:
        return None
    n = basis[0].nrows
    combos = [tuple(1 if i == j else 0 for i in range(len(basis))) for j in range(len(basis))]
    combos += list(itertools.islice(itertools.product(range(1, 4), repeat=len(basis)), tries))
    for coeffs in combos:
        X = None
        for c, B in zip(coeffs, basis):
            if c:
                X = B.scale(c) if X is None else X + B.scale(c)
        if X is not None and X.rank() == n:
            return X
    return None


def _complement(U: Subspace) -> List[int]:
    piv = set(U.pivots)
    return [j for j in range(U.ambient) if j not in piv]


def restrict_quotient(rep: MatrixRep, U: Subspace, basis: Optional[Sequence[Sequence]] = None):
    """Induced actions on U and on ambient/U.

    The ambient basis is (basis of U, standard vectors at the non-pivot
    columns of U).  ``basis`` may supply a different basis of U (for example
    lattice vectors); it must span U.
    """
    dom = rep.domain
    n = U.ambient
    ub = [list(v) for v in (basis if basis is not None else U.vectors())]
    if len(ub) != U.dim:
        raise ValueError("basis size does not match subspace dimension")
    comp = _complement(U)
    zero, one = dom.zero(), dom.one()
    cols = ub + [[one if i == j else zero for i in range(n)] for j in comp]
    P = Matrix.from_columns(cols, dom) if cols else Matrix.zeros(n, 0, dom)
    Pinv = P.inverse() if n else P
    d = U.dim
    subs, quots = [], []
    for g in rep.gens:
        C = Pinv @ g @ P
        for i in range(d, n):
            for j in range(d):
                if not C.rows[i][j].is_zero():
                    raise NotInvariant("subspace is not invariant under the generators")
        subs.append(C.submatrix(range(d), range(d)))
        quots.append(C.submatrix(range(d, n), range(d, n)))
    sub = MatrixRep(rep.n, subs, dom, "derived", rep.algebra, {"parent": rep.label, "part": "sub"}, dim=d)
    quo = MatrixRep(rep.n, quots, dom, "derived", rep.algebra, {"parent": rep.label, "part": "quotient"}, dim=n - d)
    return sub, quo
