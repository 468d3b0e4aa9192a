"""Sparse multivariate polynomials over the rationals.

A polynomial in the statistic variables q, v, w, p is stored as a dict
mapping exponent tuples ``(e_q, e_v, e_w, e_p)`` to nonzero coefficients
(``int`` or ``Fraction``).  For example ``4*q^2*v + 2*q^3*v`` is

    {(2, 1, 0, 0): 4, (3, 1, 0, 0): 2}

Zero coefficients are never stored, so equality of dicts is equality of
polynomials.  Instances are treated as immutable; all operations return
new objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

VARS = ("q", "v", "w", "p")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP = (0, 0, 0, 0)

Coeff = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division was requested but no exact quotient exists."""


def _normalize(c: Coeff) -> Coeff:
    # keep integer-valued coefficients as plain ints: cheaper arithmetic
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int, int], Coeff] | None = None):
        clean: dict[tuple[int, int, int, int], Coeff] = {}
        if terms:
            for exp, c in terms.items():
                c = _normalize(c)
                if c:
                    clean[tuple(exp)] = c  # type: ignore[index]
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def const(cls, c: Coeff) -> "MPoly":
        c = _normalize(c)
        return cls({_ZERO_EXP: c} if c else None)

    @classmethod
    def var(cls, name: str) -> "MPoly":
        exp = [0, 0, 0, 0]
        exp[_VAR_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, coeff: Coeff = 1, q: int = 0, v: int = 0, w: int = 0, p: int = 0) -> "MPoly":
        return cls({(q, v, w, p): coeff})

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "MPoly | Coeff") -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = _normalize(s)
            else:
                out.pop(exp, None)
        res = MPoly.__new__(MPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        res = MPoly.__new__(MPoly)
        res.terms = {exp: -c for exp, c in self.terms.items()}
        return res

    def __sub__(self, other: "MPoly | Coeff") -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "MPoly":
        return MPoly.const(other) + (-self)

    def __mul__(self, other: "MPoly | Coeff") -> "MPoly":
        if not isinstance(other, MPoly):
            c = _normalize(other)
            if not c:
                return MPoly.zero()
            res = MPoly.__new__(MPoly)
            res.terms = {exp: _normalize(t * c) for exp, t in self.terms.items()}
            return res
        out: dict[tuple[int, int, int, int], Coeff] = {}
        get = out.get
        for (a0, a1, a2, a3), ca in self.terms.items():
            for (b0, b1, b2, b3), cb in other.terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                s = get(key)
                if s is None:
                    out[key] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        res = MPoly.__new__(MPoly)
        res.terms = {k: _normalize(c) for k, c in out.items()}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Coeff:
        return self.terms.get(_ZERO_EXP, 0)

    def is_rational_constant(self) -> bool:
        """True when the only (possible) term is the constant one."""
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        i = _VAR_INDEX[name]
        return max((exp[i] for exp in self.terms), default=-1)

    def coefficient(self, q: int = 0, v: int = 0, w: int = 0, p: int = 0) -> Coeff:
        return self.terms.get((q, v, w, p), 0)

    def iter_terms(self) -> Iterator[tuple[tuple[int, int, int, int], Coeff]]:
        return iter(sorted(self.terms.items()))

    # -- substitution ------------------------------------------------

    def subst(self, name: str, value: Coeff) -> "MPoly":
        """Substitute a rational value for one variable."""
        i = _VAR_INDEX[name]
        value = Fraction(value)
        out = MPoly.zero()
        acc: dict[tuple[int, int, int, int], Coeff] = {}
        for exp, c in self.terms.items():
            k = exp[i]
            new = list(exp)
            new[i] = 0
            key = tuple(new)
            s = acc.get(key, 0) + c * value**k
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        out.terms = {k: _normalize(c) for k, c in acc.items() if c}
        return out

    def subst_monomial(self, name: str, mono: "MPoly") -> "MPoly":
        """Substitute a monomial (coefficient 1) for one variable.

        Covers variable renames (v -> p) and products (v -> v*w).
        """
        if len(mono.terms) != 1:
            raise ValueError("substitution target must be a single monomial")
        ((mexp, mc),) = mono.terms.items()
        if mc != 1:
            raise ValueError("substitution target must have coefficient 1")
        i = _VAR_INDEX[name]
        acc: dict[tuple[int, int, int, int], Coeff] = {}
        for exp, c in self.terms.items():
            k = exp[i]
            new = list(exp)
            new[i] = 0
            for j in range(4):
                new[j] += k * mexp[j]
            key = tuple(new)
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        res = MPoly.__new__(MPoly)
        res.terms = {k: _normalize(c) for k, c in acc.items() if c}
        return res

    def evaluate(self, **values: Coeff) -> "MPoly":
        out = self
        for name, val in values.items():
            out = out.subst(name, val)
        return out

    # -- rendering ---------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms ascending by exponent tuple.

        Example: ``4*q^2*v + 2*q^3*v``.  The zero polynomial renders as "0".
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp, c in sorted(self.terms.items()):
            factors: list[str] = []
            for name, e in zip(VARS, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MPoly({self.render()!r})"


ZERO = MPoly.zero()
ONE = MPoly.const(1)
Q = MPoly.var("q")
V = MPoly.var("v")
W = MPoly.var("w")
P = MPoly.var("p")


def divexact(num: MPoly, den: MPoly) -> MPoly:
    """Exact multivariate division: return q with num == q*den.

    Works by cancelling the lexicographically largest remaining term of the
    running remainder against the largest term of ``den``; for an exact
    quotient this terminates with remainder zero, otherwise
    :class:`NotDivisibleError` is raised.
    """
    if not den.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if not num.terms:
        return MPoly.zero()
    lead_d = max(den.terms)
    cd = den.terms[lead_d]
    rem = dict(num.terms)
    quot: dict[tuple[int, int, int, int], Coeff] = {}
    den_items = list(den.terms.items())
    while rem:
        lead_r = max(rem)
        exp = tuple(lead_r[i] - lead_d[i] for i in range(4))
        if any(e < 0 for e in exp):
            raise NotDivisibleError("no exact polynomial quotient")
        c = rem[lead_r]
        if isinstance(c, int) and isinstance(cd, int) and c % cd == 0:
            qc: Coeff = c // cd
        else:
            qc = Fraction(c) / Fraction(cd)
        quot[exp] = _normalize(qc)
        for dexp, dc in den_items:
            key = (exp[0] + dexp[0], exp[1] + dexp[1], exp[2] + dexp[2], exp[3] + dexp[3])
            s = rem.get(key, 0) - qc * dc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    res = MPoly.__new__(MPoly)
    res.terms = quot
    return res


def poly_sum(polys: Iterable[MPoly]) -> MPoly:
    acc: dict[tuple[int, int, int, int], Coeff] = {}
    for poly in polys:
        for exp, c in poly.terms.items():
            s = acc.get(exp, 0) + c
            if s:
                acc[exp] = s
            else:
                acc.pop(exp, None)
    res = MPoly.__new__(MPoly)
    res.terms = {k: _normalize(c) for k, c in acc.items()}
    return res


def first_difference(a: MPoly, b: MPoly) -> tuple[tuple[int, int, int, int], Coeff, Coeff] | None:
    """Smallest exponent where two polynomials differ, or None if equal."""
    if a.terms == b.terms:
        return None
    keys = sorted(set(a.terms) | set(b.terms))
    for exp in keys:
        ca = a.terms.get(exp, 0)
        cb = b.terms.get(exp, 0)
        if ca != cb:
            return exp, ca, cb
    return None
