"""
Braid words, partitions and compositions, the Iwahori-Hecke algebra H_n in its
T_w basis, relation checks, and the braid <-> Hecke conversions

    T_i = q * sigma_i^{-1}      (sigma_i -> q T_i^{-1})
    tau_i = -T_i^{-1}

Permutations are tuples in one-line notation, ``w[j-1] = w(j)``, composed as
functions: ``(u*v)(j) = u(v(j))``.  Right multiplication by s_i swaps
positions i and i+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from .linalg import Matrix, MatrixRep
from .report import VerificationReport
from .scalars import ScalarDomain

Perm = Tuple[int, ...]


class QuadraticRelationFails(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def right_mul_s(w: Perm, i: int) -> Perm:
    """w * s_i."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_mul_s(w: Perm, i: int) -> Perm:
    """s_i * w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[x - 1] for x in v)


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for j, x in enumerate(w, 1):
        out[x - 1] = j
    return tuple(out)


def reduced_word(w: Perm) -> List[int]:
    """Indices i_1..i_k with w = s_{i_1} ... s_{i_k}, k = length(w)."""
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            return word[::-1]


def all_perms(n: int) -> List[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# words, partitions, compositions


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"generator {x} out of range for B_{self.n}")

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        text = text.strip()
        return cls(n, tuple(int(x) for x in text.split(",")) if text else ())

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        return cls(tuple(int(x) for x in text.split(",")) if text else ())

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> List[Partition]:
    """All partitions of n, in decreasing lexicographic order."""
    out = []

    def rec(rem, maxp, acc):
        if rem == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(rem, maxp), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(n, n, [])
    return out


def compositions(n: int, m: int) -> List[Tuple[int, ...]]:
    """Length n-1 non-negative sequences of weight m, lexicographically decreasing."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    k = n - 1
    if k == 0:
        return [()] if m == 0 else []
    out = []

    def rec(i, rem, acc):
        if i == k - 1:
            out.append(tuple(acc + [rem]))
            return
        for x in range(rem, -1, -1):
            rec(i + 1, rem - x, acc + [x])

    rec(0, m, [])
    return out


def composition_count(n: int, m: int) -> int:
    """Stars and bars: C(n+m-2, m)."""
    return comb(n + m - 2, m) if n >= 2 else int(m == 0)


# ---------------------------------------------------------------------------
# Hecke algebra


class HeckeElement:
    """Finite combination of basis elements T_w of H_n."""

    __slots__ = ("n", "domain", "coeffs")

    def __init__(self, n: int, domain: ScalarDomain, coeffs: Dict[Perm, object] = None):
        self.n = n
        self.domain = domain
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def T(cls, n: int, w: Perm, domain: ScalarDomain, coeff=1) -> "HeckeElement":
        return cls(n, domain, {tuple(w): domain.coerce(coeff)})

    @classmethod
    def generator(cls, n: int, i: int, domain: ScalarDomain) -> "HeckeElement":
        return cls.T(n, right_mul_s(identity_perm(n), i), domain)

    @classmethod
    def one(cls, n: int, domain: ScalarDomain) -> "HeckeElement":
        return cls.T(n, identity_perm(n), domain)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"mixed n: H_{self.n} vs H_{other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.one(self.n, self.domain).scale(other)
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, self.domain, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.n, self.domain, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.one(self.n, self.domain).scale(other)
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = self.domain.coerce(c)
        return HeckeElement(self.n, self.domain, {w: c * x for w, x in self.coeffs.items()})

    def times_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by T_i."""
        q = self.domain.q()
        out: Dict[Perm, object] = {}

        def acc(w, c):
            out[w] = out[w] + c if w in out else c

        for w, c in self.coeffs.items():
            ws = right_mul_s(w, i)
            if w[i - 1] < w[i]:
                acc(ws, c)
            else:
                acc(ws, q * c)
                acc(w, (q - 1) * c)
        return HeckeElement(self.n, self.domain, out)

    def generator_times(self, i: int) -> "HeckeElement":
        """Left multiplication by T_i."""
        q = self.domain.q()
        out: Dict[Perm, object] = {}

        def acc(w, c):
            out[w] = out[w] + c if w in out else c

        for w, c in self.coeffs.items():
            sw = left_mul_s(w, i)
            if perm_length(sw) > perm_length(w):
                acc(sw, c)
            else:
                acc(sw, q * c)
                acc(w, (q - 1) * c)
        return HeckeElement(self.n, self.domain, out)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        return hecke_multiply(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0])))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for w in sorted(self.coeffs, key=lambda w: (perm_length(w), w)):
            word = reduced_word(w)
            name = "T_e" if not word else "T_" + "".join(map(str, word))
            terms.append(f"({self.coeffs[w]})*{name}")
        return " + ".join(terms)

    __repr__ = __str__


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in H_n, expanding b's basis elements as reduced words."""
    a._check(b)
    result = HeckeElement(a.n, a.domain)
    for w, c in b.coeffs.items():
        part = a
        for i in reduced_word(w):
            part = part.times_generator(i)
        result = result + part.scale(c)
    return result


# ---------------------------------------------------------------------------
# relation checks and conversions


def braid_relations_check(rep: MatrixRep) -> VerificationReport:
    """Far commutation, braid relation and invertibility, exactly."""
    rpt = VerificationReport("braid_relations_check", {"rep": rep.label, "n": rep.n, "dim": rep.dim})
    g = rep.gens
    for i in range(len(g)):
        try:
            inv = rep.inverses[i]
            ok = (g[i] @ inv).is_identity()
        except ZeroDivisionError:
            ok = False
        rpt.add(f"invertible s{i + 1}", ok, anchor="generated by $\\sigma_1,\\dots,\\sigma_{n-1}$")
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            if j - i == 1:
                ok = g[i] @ g[j] @ g[i] == g[j] @ g[i] @ g[j]
                rpt.add(f"braid s{i + 1}s{j + 1}s{i + 1}=s{j + 1}s{i + 1}s{j + 1}", ok,
                        anchor="\\sigma_i \\sigma_j \\sigma_i = \\sigma_j \\sigma_i \\sigma_j")
            else:
                ok = g[i] @ g[j] == g[j] @ g[i]
                rpt.add(f"commute s{i + 1}s{j + 1}=s{j + 1}s{i + 1}", ok,
                        anchor="\\sigma_i \\sigma_j = \\sigma_j \\sigma_i")
    return rpt


def quadratic_check(rep: MatrixRep, root_a, root_b) -> VerificationReport:
    """(M_i - a)(M_i - b) = 0 for every generator matrix."""
    rpt = VerificationReport("quadratic_check", {"rep": rep.label, "roots": [str(root_a), str(root_b)]})
    dom = rep.domain
    a, b = dom.coerce(root_a), dom.coerce(root_b)
    I = Matrix.identity(rep.dim, dom)
    for i, M in enumerate(rep.gens, 1):
        ok = ((M - I.scale(a)) @ (M - I.scale(b))).is_zero()
        rpt.add(f"quadratic s{i}", ok, expected=0, actual=0 if ok else "nonzero",
                anchor="(\\sigma_i - 1)(\\sigma_i + q) = 0")
    return rpt


def braid_to_hecke(rep: MatrixRep) -> MatrixRep:
    """T_i = q sigma_i^{-1}; requires (sigma_i - 1)(sigma_i + q) = 0."""
    dom = rep.domain
    if not quadratic_check(rep, 1, -dom.q()).passed:
        raise QuadraticRelationFails(f"{rep.label}: (s-1)(s+q) != 0")
    q = dom.q()
    gens = [inv.scale(q) for inv in rep.inverses]
    return MatrixRep(rep.n, gens, dom, rep.label, "hecke", dict(rep.meta, converted="T=q*s^-1"), dim=rep.dim)


def hecke_to_braid(hrep: MatrixRep) -> MatrixRep:
    """sigma_i = q T_i^{-1}, inverse of :func:`braid_to_hecke`."""
    q = hrep.domain.q()
    gens = [inv.scale(q) for inv in hrep.inverses]
    return MatrixRep(hrep.n, gens, hrep.domain, hrep.label, "braid", dict(hrep.meta, converted="s=q*T^-1"), dim=hrep.dim)


def hecke_to_braid_input(hrep: MatrixRep) -> MatrixRep:
    """tau_i = -T_i^{-1}: the B_m action fed into the construction."""
    try:
        gens = [-inv for inv in hrep.inverses]
    except ZeroDivisionError as exc:
        raise ValueError("singular T_i") from exc
    return MatrixRep(hrep.n, gens, hrep.domain, hrep.label, "braid", dict(hrep.meta, converted="tau=-T^-1"), dim=hrep.dim)


def hecke_relations_check(hrep: MatrixRep) -> VerificationReport:
    """(T_i + 1)(T_i - q) = 0 plus the braid relations."""
    rpt = braid_relations_check(hrep)
    rpt.command = "hecke_relations_check"
    q = hrep.domain.q()
    quad = quadratic_check(hrep, -1, q)
    for c in quad.checks:
        c.anchor = "(T_i + 1)(T_i - q) = 0"
    rpt.extend(quad, "hecke ")
    return rpt


def evaluate_braid_word(rep: MatrixRep, w: BraidWord) -> Matrix:
    if w.n != rep.n:
        raise ValueError("strand count mismatch")
    M = Matrix.identity(rep.dim, rep.domain)
    for x in w.letters:
        M = M @ rep.generator(x)
    return M


def minimal_polynomial_degree(M: Matrix) -> int:
    """Degree of the minimal polynomial: first k with I, M, ..., M^k dependent."""
    from .linalg import Subspace

    n = M.nrows
    powers = [Matrix.identity(n, M.domain)]
    flat = lambda A: [x for r in A.rows for x in r]
    while True:
        powers.append(powers[-1] @ M)
        if Subspace.span([flat(P) for P in powers], n * n, M.domain).dim < len(powers):
            return len(powers) - 1
