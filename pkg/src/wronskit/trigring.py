"""Exact arithmetic in the quotient ring Q[x, s, c] / (s^2 + c^2 - 1).

Reading s = sin x and c = cos x, the ring contains x^n sin x, x^n cos x and
everything differentiation generates from them.  The defining relation kills
every power of s above the first, so each element has a unique canonical form

    p(x, c) + s * q(x, c)

and equality is coefficient comparison.  The ring is an integral domain
(the relation is irreducible), hence a product is zero only if a factor is.
Elements are immutable; all operations return fresh values, which keeps
them safe to share across threads and caches.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

Coeff = int | Fraction
# (x degree, c degree) -> coefficient; zero coefficients are never stored
Terms = dict[tuple[int, int], Coeff]


class Trig(Enum):
    SIN = "sin"
    COS = "cos"


def _clean(t: Terms) -> Terms:
    return {m: v for m, v in t.items() if v}


def _add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    for m, v in b.items():
        w = out.get(m, 0) + v
        if w:
            out[m] = w
        elif m in out:
            del out[m]
    return out


def _neg(a: Terms) -> Terms:
    return {m: -v for m, v in a.items()}


def _scale(a: Terms, k: Coeff) -> Terms:
    if not k:
        return {}
    return {m: v * k for m, v in a.items()}


def _mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for (xa, ca), va in a.items():
        for (xb, cb), vb in b.items():
            m = (xa + xb, ca + cb)
            w = out.get(m, 0) + va * vb
            if w:
                out[m] = w
            elif m in out:
                del out[m]
    return out


def _diff_x(a: Terms) -> Terms:
    return {(xd - 1, cd): v * xd for (xd, cd), v in a.items() if xd}


def _diff_c(a: Terms) -> Terms:
    return {(xd, cd - 1): v * cd for (xd, cd), v in a.items() if cd}


def _times_c(a: Terms, power: int = 1) -> Terms:
    return {(xd, cd + power): v for (xd, cd), v in a.items()}


class TrigPoly:
    """One canonical-form element p(x, c) + s * q(x, c)."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: Terms | None = None, q: Terms | None = None):
        self._p = _clean(p) if p else {}
        self._q = _clean(q) if q else {}

    # Read-only views; printing and the numeric test oracle iterate these.
    @property
    def p(self):
        return MappingProxyType(self._p)

    @property
    def q(self):
        return MappingProxyType(self._q)

    @staticmethod
    def constant(v: Coeff) -> "TrigPoly":
        return TrigPoly({(0, 0): v} if v else None)

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly()

    @staticmethod
    def _coerce(v) -> "TrigPoly | None":
        if isinstance(v, TrigPoly):
            return v
        if isinstance(v, (int, Fraction)):
            return TrigPoly.constant(v)
        return None

    def __bool__(self) -> bool:
        return bool(self._p or self._q)

    def __eq__(self, other) -> bool:
        o = TrigPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o._p and self._q == o._q

    def __hash__(self) -> int:
        # well defined because the canonical form is unique
        return hash((frozenset(self._p.items()), frozenset(self._q.items())))

    def __add__(self, other):
        o = TrigPoly._coerce(other)
        if o is None:
            return NotImplemented
        return TrigPoly(_add(self._p, o._p), _add(self._q, o._q))

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly(_neg(self._p), _neg(self._q))

    def __sub__(self, other):
        o = TrigPoly._coerce(other)
        if o is None:
            return NotImplemented
        return TrigPoly(_add(self._p, _neg(o._p)), _add(self._q, _neg(o._q)))

    def __rsub__(self, other):
        o = TrigPoly._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TrigPoly(_scale(self._p, other), _scale(self._q, other))
        if not isinstance(other, TrigPoly):
            return NotImplemented
        # (p1 + s q1)(p2 + s q2) = p1 p2 + (1 - c^2) q1 q2 + s (p1 q2 + q1 p2)
        qq = _mul(self._q, other._q)
        p = _add(_mul(self._p, other._p), _add(qq, _neg(_times_c(qq, 2))))
        q = _add(_mul(self._p, other._q), _mul(self._q, other._p))
        return TrigPoly(p, q)

    __rmul__ = __mul__

    def __str__(self) -> str:
        # term order: (s degree, x degree, c degree) descending
        terms: list[tuple[Coeff, str]] = []
        for (xd, cd), v in sorted(self._q.items(), reverse=True):
            terms.append((v, _monomial(xd, cd, with_s=True)))
        for (xd, cd), v in sorted(self._p.items(), reverse=True):
            terms.append((v, _monomial(xd, cd, with_s=False)))
        return _render(terms)

    def __repr__(self) -> str:
        return f"TrigPoly({self})"


def _monomial(xd: int, cd: int, with_s: bool) -> str:
    parts = []
    if xd:
        parts.append("x" if xd == 1 else f"x^{xd}")
    if cd:
        parts.append("c" if cd == 1 else f"c^{cd}")
    if with_s:
        parts.append("s")
    return "*".join(parts)


def _render(terms: list[tuple[Coeff, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (v, mono) in enumerate(terms):
        negative = v < 0
        mag = -v if negative else v
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out)


def basis_element(power: int, kind: Trig) -> TrigPoly:
    """x^power * sin x  or  x^power * cos x."""
    if power < 0:
        raise ValueError("power must be >= 0")
    if kind is Trig.SIN:
        return TrigPoly(None, {(power, 0): 1})
    return TrigPoly({(power, 1): 1}, None)


def differentiate(u: TrigPoly) -> TrigPoly:
    """d/dx under s' = c, c' = -s, x' = 1.

    Closed form on the canonical pair, already free of s^2:
        D(p + s q) = (p_x + c q + (c^2 - 1) q_c) + s (q_x - p_c).
    """
    qc = _diff_c(u._q)
    p = _add(_diff_x(u._p), _add(_times_c(u._q), _add(_times_c(qc, 2), _neg(qc))))
    q = _add(_diff_x(u._q), _neg(_diff_c(u._p)))
    return TrigPoly(p, q)


def harmonic_step(u: TrigPoly) -> TrigPoly:
    """Apply D^2 + 1, the operator whose powers annihilate x^n sin x, x^n cos x."""
    return differentiate(differentiate(u)) + u


class OperatorBase(Enum):
    DERIVATIVE = "D"
    HARMONIC = "D^2+1"


@dataclass(frozen=True)
class OperatorPower:
    """base^exponent acting on the ring, exponent >= 0 (power 0 is identity)."""

    base: OperatorBase
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("operator exponent must be >= 0")


def apply_operator(op: OperatorPower, u: TrigPoly) -> TrigPoly:
    step = differentiate if op.base is OperatorBase.DERIVATIVE else harmonic_step
    for _ in range(op.exponent):
        u = step(u)
    return u


def eval_at_zero(u: TrigPoly) -> Coeff:
    """Exact value at x = 0, i.e. substitute x = 0, s = 0, c = 1."""
    return sum(v for (xd, _cd), v in u._p.items() if xd == 0)


def is_constant(u: TrigPoly) -> Coeff | None:
    """The constant value if u lies in Q, else None."""
    if u._q:
        return None
    if not u._p:
        return 0
    if set(u._p) == {(0, 0)}:
        return u._p[(0, 0)]
    return None


@lru_cache(maxsize=None)
def monomial_derivative(power: int, kind: Trig, order: int) -> TrigPoly:
    """order-th derivative of x^power * sin x (or cos x), cached.

    The whole derivative family lives in span{x^i sin x, x^i cos x : i <= power},
    so results stay small and are shared by every verifier.
    """
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    if order == 0:
        return basis_element(power, kind)
    return differentiate(monomial_derivative(power, kind, order - 1))
