"""
Exact scalars: Laurent polynomials and rational functions in q, t over Q,
and cyclotomic fields Q(zeta_k).

Every scalar carries the bar involution (q -> 1/q, t -> 1/t on the generic
side, zeta -> zeta^-1 on the cyclotomic side).  Polynomial arithmetic and gcds
are delegated to FLINT through python-flint; canonical forms are ours.

A generic scalar is stored as ``q^a t^b * num / den`` where ``num`` and ``den``
are honest polynomials in Q[q, t], neither divisible by q or t, coprime, and
``den`` has leading coefficient 1.  That representation is unique, so equality
is component comparison.  Values whose denominator is 1 are instances of
:class:`LaurentPoly`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

import flint

__all__ = [
    "ScalarError",
    "DenominatorVanishes",
    "MixedDomains",
    "LaurentPoly",
    "RationalFunction",
    "CyclotomicNumber",
    "ScalarDomain",
    "GENERIC_QT",
    "GENERIC_Q",
    "cyclotomic",
    "cyclotomic_polynomial",
    "bar",
    "specialize",
    "complex_embed",
    "evaluate_complex",
    "scalar_text",
    "primitive_part",
    "phi_valuation",
    "phi_power",
]

_CTX = flint.fmpq_mpoly_ctx.get(("q", "t"), "lex")
_Q, _T = _CTX.gens()
_ONE = _CTX.from_dict({(0, 0): 1})
_ZERO = _CTX.from_dict({})


class ScalarError(ArithmeticError):
    pass


class DenominatorVanishes(ScalarError):
    """The value has a pole at the requested specialization."""


class MixedDomains(ScalarError):
    pass


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


def _monomial(a: int, b: int):
    return _CTX.from_dict({(a, b): 1})


def _strip_monomial(p):
    """Split p = q^i t^j * p' with p' not divisible by q or t."""
    monoms = p.monoms()
    i = min(m[0] for m in monoms)
    j = min(m[1] for m in monoms)
    if i == 0 and j == 0:
        return p, 0, 0
    return _CTX.from_dict({(m[0] - i, m[1] - j): c for m, c in zip(monoms, p.coeffs())}), i, j


def _poly_key(p):
    return tuple(zip(p.monoms(), (str(c) for c in p.coeffs())))


# ---------------------------------------------------------------------------
# generic scalars


class RationalFunction:
    """Element of Q(q, t).  Immutable."""

    __slots__ = ("_n", "_d", "_a", "_b", "_hash")

    def __init__(self, value=0):
        if isinstance(value, RationalFunction):
            self._n, self._d, self._a, self._b = value._n, value._d, value._a, value._b
        else:
            c = _fmpq(value)
            self._n = _CTX.from_dict({(0, 0): c}) if c != 0 else _ZERO
            self._d, self._a, self._b = _ONE, 0, 0
        self._hash = None

    # construction -------------------------------------------------------

    @staticmethod
    def _raw(n, d, a, b) -> "RationalFunction":
        cls = LaurentPoly if d.is_one() else RationalFunction
        obj = object.__new__(cls)
        obj._n, obj._d, obj._a, obj._b, obj._hash = n, d, a, b, None
        return obj

    @staticmethod
    def _make(n, d, a=0, b=0, reduced=False) -> "RationalFunction":
        """Canonicalise q^a t^b n/d for arbitrary polynomials n, d != 0."""
        if n.is_zero():
            return RationalFunction._raw(_ZERO, _ONE, 0, 0)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        n, i, j = _strip_monomial(n)
        a += i
        b += j
        if not d.is_constant():
            d, i, j = _strip_monomial(d)
            a -= i
            b -= j
            if not reduced:
                g = n.gcd(d)
                if not g.is_one():
                    n = n / g
                    d = d / g
        lc = d.leading_coefficient()
        if lc != 1:
            n = n / lc
            d = d / lc
        return RationalFunction._raw(n, d, a, b)

    @classmethod
    def from_terms(cls, terms: dict) -> "RationalFunction":
        """Build a Laurent polynomial from ``{(a, b): coeff}``."""
        terms = {k: _fmpq(c) for k, c in terms.items() if c != 0}
        if not terms:
            return cls._raw(_ZERO, _ONE, 0, 0)
        a = min(k[0] for k in terms)
        b = min(k[1] for k in terms)
        n = _CTX.from_dict({(k[0] - a, k[1] - b): c for k, c in terms.items()})
        return cls._raw(n, _ONE, a, b)

    @classmethod
    def q(cls, power: int = 1) -> "RationalFunction":
        return cls.from_terms({(power, 0): 1})

    @classmethod
    def t(cls, power: int = 1) -> "RationalFunction":
        return cls.from_terms({(0, power): 1})

    # structure ----------------------------------------------------------

    @property
    def numerator(self) -> "LaurentPoly":
        return RationalFunction._raw(self._n, _ONE, self._a, self._b)

    @property
    def denominator(self) -> "LaurentPoly":
        return RationalFunction._raw(self._d, _ONE, 0, 0)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_laurent(self) -> bool:
        return self._d.is_one()

    def involves_t(self) -> bool:
        return self._b != 0 or self._n.degrees()[1] > 0 or self._d.degrees()[1] > 0

    def size(self) -> int:
        """Term count of numerator plus denominator: the pivot heuristic."""
        return len(self._n) + len(self._d)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return RationalFunction(other)
        return None

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = min(self._a, other._a), min(self._b, other._b)
        n1 = self._n if (self._a, self._b) == (a, b) else self._n * _monomial(self._a - a, self._b - b)
        n2 = other._n if (other._a, other._b) == (a, b) else other._n * _monomial(other._a - a, other._b - b)
        if self._d == other._d:
            n = n1 + n2
            if n.is_zero():
                return RationalFunction._raw(_ZERO, _ONE, 0, 0)
            if self._d.is_one():
                n, i, j = _strip_monomial(n)
                return RationalFunction._raw(n, _ONE, a + i, b + j)
            return RationalFunction._make(n, self._d, a, b)
        g = self._d.gcd(other._d)
        if g.is_one():
            n = n1 * other._d + n2 * self._d
            if n.is_zero():
                return RationalFunction._raw(_ZERO, _ONE, 0, 0)
            return RationalFunction._make(n, self._d * other._d, a, b)
        d1 = self._d / g
        d2 = other._d / g
        n = n1 * d2 + n2 * d1
        if n.is_zero():
            return RationalFunction._raw(_ZERO, _ONE, 0, 0)
        return RationalFunction._make(n, d1 * other._d, a, b)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self._n, self._d, self._a, self._b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction._raw(_ZERO, _ONE, 0, 0)
        a, b = self._a + other._a, self._b + other._b
        if self._d.is_one() and other._d.is_one():
            return RationalFunction._raw(self._n * other._n, _ONE, a, b)
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        g = n1.gcd(d2)
        if not g.is_one():
            n1, d2 = n1 / g, d2 / g
        g = n2.gcd(d1)
        if not g.is_one():
            n2, d1 = n2 / g, d1 / g
        return RationalFunction._make(n1 * n2, d1 * d2, a, b, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction._make(self._d, self._n, -self._a, -self._b, reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._raw(self._n ** e, self._d ** e, self._a * e, self._b * e) if e else RationalFunction(1)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self._a, self._b) == (other._a, other._b) and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._a, self._b, _poly_key(self._n), _poly_key(self._d)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def bar(self) -> "RationalFunction":
        # p(1/q, 1/t) = q^-dq t^-dt * reversed(p)
        def flip(p):
            dq, dt = p.degrees()
            return _CTX.from_dict({(dq - m[0], dt - m[1]): c for m, c in zip(p.monoms(), p.coeffs())}), dq, dt

        if self.is_zero():
            return self
        n, nq, nt = flip(self._n)
        d, dq, dt = flip(self._d)
        return RationalFunction._make(n, d, -self._a - nq + dq, -self._b - nt + dt, reduced=True)

    # helpers ------------------------------------------------------------

    def terms(self) -> dict:
        """Coefficient map ``{(a, b): Fraction}`` of a Laurent polynomial."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return {
            (m[0] + self._a, m[1] + self._b): Fraction(int(c.p), int(c.q))
            for m, c in zip(self._n.monoms(), self._n.coeffs())
        }

    def _laurent_terms(self, which):
        p, a, b = (self._n, self._a, self._b) if which == "n" else (self._d, 0, 0)
        return [((m[0] + a, m[1] + b), c) for m, c in zip(p.monoms(), p.coeffs())]

    def __str__(self):
        num = _format_terms(self._laurent_terms("n"), ("q", "t"))
        if self._d.is_one():
            return num
        den = _format_terms(self._laurent_terms("d"), ("q", "t"))
        return f"({num})/({den})"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class LaurentPoly(RationalFunction):
    """Element of Q[q^+-1, t^+-1]; a :class:`RationalFunction` with denominator 1."""

    __slots__ = ()

    def __init__(self, value=0):
        if isinstance(value, dict):
            src = RationalFunction.from_terms(value)
        else:
            src = RationalFunction(value)
        if not src.is_laurent():
            raise ValueError("not a Laurent polynomial")
        super().__init__(src)

    def degree_bounds(self):
        """((min_q, max_q), (min_t, max_t))."""
        dq, dt = self._n.degrees()
        return (self._a, self._a + dq), (self._b, self._b + dt)

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        res = self / other
        if not res.is_laurent():
            raise ArithmeticError("division is not exact in the Laurent ring")
        return res


def _fmt_coeff_monomial(c: Fraction, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _format_terms(terms, names) -> str:
    """Terms sorted by exponent tuple, highest first; ``c*q^a*t^b`` style."""
    if not terms:
        return "0"
    out = []
    for exps, c in sorted(terms, key=lambda x: x[0], reverse=True):
        c = Fraction(int(c.p), int(c.q)) if isinstance(c, flint.fmpq) else Fraction(c)
        parts = []
        for name, e in zip(names, exps):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        text = _fmt_coeff_monomial(c, "*".join(parts))
        if out:
            out.append(f" - {text[1:]}" if text.startswith("-") else f" + {text}")
        else:
            out.append(text)
    return "".join(out)


# ---------------------------------------------------------------------------
# cyclotomic fields


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> flint.fmpq_poly:
    """Phi_k by dividing x^k - 1 by Phi_d for every proper divisor d of k."""
    if k < 1:
        raise ValueError("k must be positive")
    p = flint.fmpq_poly([-1] + [0] * (k - 1) + [1])
    for d in range(1, k):
        if k % d == 0:
            quo, rem = divmod(p, cyclotomic_polynomial(d))
            assert rem == 0
            p = quo
    return p


def _x_power_mod(e: int, k: int) -> flint.fmpq_poly:
    return flint.fmpq_poly([0] * (e % k) + [1]) % cyclotomic_polynomial(k)


class CyclotomicNumber:
    """Element of Q(zeta_k), stored as a residue modulo Phi_k."""

    __slots__ = ("k", "_p")

    def __init__(self, k: int, coeffs: Union[Iterable, flint.fmpq_poly] = ()):
        self.k = k
        p = coeffs if isinstance(coeffs, flint.fmpq_poly) else flint.fmpq_poly([_fmpq(c) for c in coeffs])
        self._p = p % cyclotomic_polynomial(k)

    @classmethod
    def zeta(cls, k: int, power: int = 1) -> "CyclotomicNumber":
        return cls(k, _x_power_mod(power, k))

    @classmethod
    def _raw(cls, k, p):
        obj = object.__new__(cls)
        obj.k, obj._p = k, p
        return obj

    @property
    def coeffs(self) -> list:
        """Coefficient sequence of length deg Phi_k, as Fractions."""
        deg = cyclotomic_polynomial(self.k).degree()
        cs = [Fraction(int(c.p), int(c.q)) for c in self._p.coeffs()]
        return cs + [Fraction(0)] * (deg - len(cs))

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def size(self) -> int:
        return sum(1 for c in self._p.coeffs() if c != 0)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.k != self.k:
                raise MixedDomains(f"cyclotomic({self.k}) vs cyclotomic({other.k})")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return CyclotomicNumber._raw(self.k, flint.fmpq_poly([_fmpq(other)]))
        if isinstance(other, RationalFunction):
            raise MixedDomains("generic scalar mixed with a cyclotomic one")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.k, self._p + other._p)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.k, -self._p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.k, self._p - other._p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.k, other._p - self._p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._p.degree() <= 0 or other._p.degree() <= 0:
            return CyclotomicNumber._raw(self.k, self._p * other._p)
        return CyclotomicNumber._raw(self.k, (self._p * other._p) % cyclotomic_polynomial(self.k))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self._p.degree() == 0:
            return CyclotomicNumber._raw(self.k, flint.fmpq_poly([1 / self._p.coeffs()[0]]))
        g, s, _ = self._p.xgcd(cyclotomic_polynomial(self.k))
        return CyclotomicNumber._raw(self.k, (s / g.coeffs()[0]) % cyclotomic_polynomial(self.k))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber._raw(self.k, flint.fmpq_poly([1]))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except MixedDomains:
            return False
        if other is None:
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        return hash((self.k, tuple(str(c) for c in self._p.coeffs())))

    def __bool__(self):
        return not self.is_zero()

    def bar(self) -> "CyclotomicNumber":
        if self._p.degree() <= 0:
            return self
        return CyclotomicNumber._raw(self.k, self._p(_x_power_mod(self.k - 1, self.k)) % cyclotomic_polynomial(self.k))

    def __str__(self):
        terms = [((i,), c) for i, c in enumerate(self._p.coeffs()) if c != 0]
        return _format_terms(terms, ("z",))

    def __repr__(self):
        return f"CyclotomicNumber({self.k}, {str(self)!r})"


Scalar = Union[RationalFunction, CyclotomicNumber]


# ---------------------------------------------------------------------------
# domains


@dataclass(frozen=True)
class ScalarDomain:
    """Where a matrix lives.

    ``kind`` is ``"qt"`` (Q(q,t)), ``"q"`` (Q(q), t eliminated) or
    ``"cyclotomic"`` (Q(zeta_k), with q = zeta_k).  ``t_rule`` records how t
    was eliminated (``"qinv"``, ``"minus1"``) when it was.
    """

    kind: str
    k: Optional[int] = None
    t_rule: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("qt", "q", "cyclotomic"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "cyclotomic" and (self.k is None or self.k < 1):
            raise ValueError("cyclotomic domain needs k >= 1")

    @property
    def generic(self) -> bool:
        return self.kind != "cyclotomic"

    @property
    def label(self) -> str:
        base = {"qt": "Q(q,t)", "q": "Q(q)"}.get(self.kind, f"Q(zeta_{self.k})")
        return base + (f"[t={self.t_rule}]" if self.t_rule else "")

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, x) -> Scalar:
        if self.kind == "cyclotomic":
            if isinstance(x, CyclotomicNumber):
                if x.k != self.k:
                    raise MixedDomains(f"value in cyclotomic({x.k}), domain cyclotomic({self.k})")
                return x
            if isinstance(x, RationalFunction):
                return specialize(x, q=self.k)
            return CyclotomicNumber(self.k, [x])
        if isinstance(x, CyclotomicNumber):
            raise MixedDomains("cyclotomic value in a generic domain")
        return x if isinstance(x, RationalFunction) else RationalFunction(x)

    def q(self, power: int = 1) -> Scalar:
        if self.kind == "cyclotomic":
            return CyclotomicNumber.zeta(self.k, power)
        return RationalFunction.q(power)

    def t(self, power: int = 1) -> Scalar:
        if self.kind == "qt":
            return RationalFunction.t(power)
        if self.t_rule == "qinv":
            return self.q(-power)
        if self.t_rule == "minus1":
            return self.coerce((-1) ** (power % 2))
        raise ValueError(f"t is not available in {self.label}")

    def bar(self, x: Scalar) -> Scalar:
        return x.bar()


GENERIC_QT = ScalarDomain("qt")
GENERIC_Q = ScalarDomain("q")


def cyclotomic(k: int, t_rule: Optional[str] = None) -> ScalarDomain:
    return ScalarDomain("cyclotomic", k, t_rule)


# ---------------------------------------------------------------------------
# operations


def bar(x):
    """The involution q -> 1/q, t -> 1/t (zeta -> 1/zeta)."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.bar()


def _subs_t(x: RationalFunction, t_target: RationalFunction) -> RationalFunction:
    """Substitute t -> t_target (a function of q) in x."""
    if not x.involves_t():
        return x

    def subs_poly(p, b):
        # p(q, t) * t^b with t = f: Horner over the t-degree
        by_t = {}
        for m, c in zip(p.monoms(), p.coeffs()):
            by_t.setdefault(m[1], {})[(m[0], 0)] = c
        acc = RationalFunction(0)
        for j in range(max(by_t), -1, -1):
            acc = acc * t_target
            if j in by_t:
                acc = acc + RationalFunction.from_terms(by_t[j])
        return acc * t_target ** b if b else acc

    num = subs_poly(x._n, x._b) * RationalFunction.q(x._a)
    den = subs_poly(x._d, 0)
    if den.is_zero():
        raise DenominatorVanishes(f"denominator of {x} vanishes at t = {t_target}")
    return num / den


_T_RULES = {"qinv": lambda: RationalFunction.q(-1), "minus1": lambda: RationalFunction(-1)}


def _eval_at_root(p, a: int, k: int) -> CyclotomicNumber:
    # p is a polynomial in q alone, times q^a
    phi = cyclotomic_polynomial(k)
    coeffs = [flint.fmpq(0)] * k
    for m, c in zip(p.monoms(), p.coeffs()):
        e = (m[0] + a) % k
        coeffs[e] += c
    return CyclotomicNumber._raw(k, flint.fmpq_poly(coeffs) % phi)


def specialize(x, q: Optional[int] = None, t=None):
    """Ring-homomorphic evaluation of a generic scalar.

    ``t`` may be ``None`` (keep), ``"qinv"``, ``"minus1"`` or a scalar in q.
    ``q`` may be ``None`` (keep) or an integer k meaning q = zeta_k.
    Raises :class:`DenominatorVanishes` at a pole.
    """
    if isinstance(x, CyclotomicNumber):
        if q is not None and q != x.k:
            raise MixedDomains("already specialised to a different root")
        return x
    if not isinstance(x, RationalFunction):
        x = RationalFunction(x)
    if t is not None:
        target = _T_RULES[t]() if isinstance(t, str) else t
        if isinstance(target, RationalFunction) and target.involves_t():
            raise ValueError("t target must not involve t")
        x = _subs_t(x, target)
    if q is None:
        return x
    if x.involves_t():
        raise ValueError("eliminate t before specialising q to a root of unity")
    den = _eval_at_root(x._d, 0, q)
    if den.is_zero():
        raise DenominatorVanishes(f"denominator of {x} vanishes at q = zeta_{q}")
    num = _eval_at_root(x._n, x._a, q)
    return num if x._d.is_one() else num / den


def complex_embed(x: CyclotomicNumber, root_choice: int = 1) -> tuple:
    """Evaluate at zeta_k = exp(2 pi i root_choice / k); returns (re, im)."""
    if math.gcd(root_choice, x.k) != 1:
        raise ValueError("root_choice must be coprime to k")
    z = cmath.exp(2j * math.pi * root_choice / x.k)
    val = sum(float(c) * z ** i for i, c in enumerate(x.coeffs))
    return (val.real, val.imag)


def evaluate_complex(x, q: complex, t: complex = 1.0) -> complex:
    """Floating evaluation of a generic scalar; only the definiteness probe uses this."""
    if isinstance(x, CyclotomicNumber):
        return complex(*complex_embed(x))
    if not isinstance(x, RationalFunction):
        return complex(x)

    def ev(p, a, b):
        return sum(float(c) * q ** int(m[0] + a) * t ** int(m[1] + b) for m, c in zip(p.monoms(), p.coeffs()))

    return ev(x._n, x._a, x._b) / ev(x._d, 0, 0)


def scalar_text(x) -> str:
    return str(x)


def primitive_part(values):
    """Split a vector of generic scalars as ``scale * out``.

    ``out`` has Laurent polynomial entries with no common non-unit factor and
    the leading coefficient of its first nonzero entry equal to 1.
    """
    nz = [v for v in values if not v.is_zero()]
    if not nz:
        return list(values), RationalFunction(1)
    lcm = _ONE
    for v in nz:
        if not v._d.is_one():
            g = lcm.gcd(v._d)
            lcm = lcm * (v._d / g)
    nums = []
    for v in values:
        if v.is_zero():
            nums.append(None)
        else:
            nums.append(v._n if v._d == lcm else v._n * (lcm / v._d))
    g = None
    for n in nums:
        if n is None:
            continue
        g = n if g is None else g.gcd(n)
        if g.is_one():
            break
    amin = min(v._a for v in nz)
    bmin = min(v._b for v in nz)
    first = next(n for n in nums if n is not None)
    lead = (first / g).leading_coefficient() if not g.is_one() else first.leading_coefficient()
    g = g * lead
    out = []
    for v, n in zip(values, nums):
        if n is None:
            out.append(v)
        else:
            out.append(RationalFunction._raw(n / g, _ONE, v._a - amin, v._b - bmin))
    scale = RationalFunction._make(g, lcm, amin, bmin)
    return out, scale


def phi_valuation(x: RationalFunction, k: int) -> int:
    """Multiplicity of the cyclotomic polynomial Phi_k(q) in x (q only)."""
    if x.is_zero():
        raise ValueError("valuation of zero")
    phi = _CTX.from_dict({(i, 0): c for i, c in enumerate(cyclotomic_polynomial(k).coeffs())})

    def val(p):
        v = 0
        while True:
            quo, rem = divmod(p, phi)
            if not rem.is_zero():
                return v
            p, v = quo, v + 1

    return val(x._n) - val(x._d)


def phi_power(k: int, e: int) -> RationalFunction:
    phi = RationalFunction.from_terms({(i, 0): c for i, c in enumerate(cyclotomic_polynomial(k).coeffs())})
    return phi ** e
