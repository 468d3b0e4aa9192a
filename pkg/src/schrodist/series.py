"""Truncated power series in x with multivariate polynomial coefficients.

An :class:`XSeries` of order N stores the coefficients of x^0 .. x^N
(N + 1 polynomials).  All operations are exact; binary operations truncate
to the smaller order of the two operands.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .mpoly import Coeff, MPoly, divexact

DEFAULT_ORDER = 16


class NonInvertibleConstantTermError(ArithmeticError):
    """Series division needs a denominator with a nonzero rational constant term."""


class BadConstantTermError(ArithmeticError):
    """Series square root needs constant term exactly 1."""


class NotAMonomialError(ValueError):
    """x-rescaling needs a single monomial with coefficient 1."""


class XSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[MPoly | Coeff] | None = None):
        if order < 0:
            raise ValueError("series order must be non-negative")
        self.order = order
        filled: list[MPoly] = []
        if coeffs is not None:
            for c in coeffs[: order + 1]:
                filled.append(c if isinstance(c, MPoly) else MPoly.const(c))
        while len(filled) < order + 1:
            filled.append(MPoly.zero())
        self.coeffs = filled

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "XSeries":
        return cls(order)

    @classmethod
    def const(cls, value: MPoly | Coeff, order: int) -> "XSeries":
        return cls(order, [value])

    @classmethod
    def x(cls, order: int) -> "XSeries":
        return cls(order, [MPoly.zero(), MPoly.const(1)])

    @classmethod
    def from_coeff_map(cls, order: int, coeff_of_xk: dict[int, MPoly]) -> "XSeries":
        coeffs = [coeff_of_xk.get(k, MPoly.zero()) for k in range(order + 1)]
        return cls(order, coeffs)

    # -- basics ------------------------------------------------------

    def coeff(self, k: int) -> MPoly:
        """Coefficient of x^k; zero beyond the stored order."""
        if k < 0:
            raise ValueError("negative exponent")
        if k > self.order:
            return MPoly.zero()
        return self.coeffs[k]

    def truncate(self, order: int) -> "XSeries":
        if order >= self.order:
            return self
        return XSeries(order, self.coeffs[: order + 1])

    def map_coeffs(self, fn: Callable[[MPoly], MPoly]) -> "XSeries":
        return XSeries(self.order, [fn(c) for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        parts = [f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return "XSeries(order={}, {})".format(self.order, " + ".join(parts) or "0")

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        return XSeries(order, [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)])

    def __sub__(self, other: "XSeries") -> "XSeries":
        order = min(self.order, other.order)
        return XSeries(order, [self.coeffs[k] - other.coeffs[k] for k in range(order + 1)])

    def __neg__(self) -> "XSeries":
        return XSeries(self.order, [-c for c in self.coeffs])

    def __mul__(self, other: "XSeries | MPoly | Coeff") -> "XSeries":
        if not isinstance(other, XSeries):
            if not isinstance(other, MPoly):
                other = MPoly.const(other)
            return XSeries(self.order, [c * other for c in self.coeffs])
        order = min(self.order, other.order)
        a = self.coeffs
        b = other.coeffs
        out: list[MPoly] = []
        for k in range(order + 1):
            acc = MPoly.zero()
            for i in range(k + 1):
                ci = a[i]
                cj = b[k - i]
                if ci.terms and cj.terms:
                    acc = acc + ci * cj
            out.append(acc)
        return XSeries(order, out)

    __rmul__ = __mul__


def series_add(a: XSeries, b: XSeries) -> XSeries:
    return a + b


def series_neg(a: XSeries) -> XSeries:
    return -a


def series_mul(a: XSeries, b: XSeries) -> XSeries:
    return a * b


def series_div(num: XSeries, den: XSeries) -> XSeries:
    """Exact quotient of series; the denominator's constant term must be a
    nonzero rational constant."""
    d0 = den.coeffs[0]
    if not d0.is_rational_constant() or d0.is_zero():
        raise NonInvertibleConstantTermError(
            f"denominator constant term {d0.render()!r} is not a nonzero rational"
        )
    inv0 = Fraction(1, 1) / Fraction(d0.constant_term())
    order = min(num.order, den.order)
    out: list[MPoly] = []
    for k in range(order + 1):
        acc = num.coeffs[k]
        for i in range(1, k + 1):
            di = den.coeffs[i]
            if di.terms and out[k - i].terms:
                acc = acc - di * out[k - i]
        out.append(acc * inv0)
    return XSeries(order, out)


def series_sqrt(s: XSeries) -> XSeries:
    """Coefficient-wise square root R of S (R^2 = S); needs S(0) = 1."""
    if s.coeffs[0] != MPoly.const(1):
        raise BadConstantTermError(
            f"sqrt argument has constant term {s.coeffs[0].render()!r}, expected 1"
        )
    out: list[MPoly] = [MPoly.const(1)]
    half = Fraction(1, 2)
    for k in range(1, s.order + 1):
        acc = s.coeffs[k]
        for i in range(1, k):
            if out[i].terms and out[k - i].terms:
                acc = acc - out[i] * out[k - i]
        out.append(acc * half)
    return XSeries(s.order, out)


def series_scale_x(s: XSeries, mono: MPoly) -> XSeries:
    """Substitute x -> m*x for a coefficient-1 monomial m (e.g. v, v*w)."""
    if len(mono.terms) != 1 or next(iter(mono.terms.values())) != 1:
        raise NotAMonomialError(f"{mono.render()!r} is not a coefficient-1 monomial")
    power = MPoly.const(1)
    out: list[MPoly] = []
    for k in range(s.order + 1):
        out.append(s.coeffs[k] * power)
        power = power * mono
    return XSeries(s.order, out)


def integrality_check(s: XSeries) -> tuple[bool, tuple[int, tuple[int, int, int, int], Coeff] | None]:
    """Check that every stored coefficient is an integer polynomial.

    Returns ``(True, None)`` or ``(False, (k, exponent, coefficient))`` for the
    first offender in (x-degree, exponent) order.
    """
    for k, c in enumerate(s.coeffs):
        for exp, val in sorted(c.terms.items()):
            if not isinstance(val, int):
                return False, (k, exp, val)
    return True, None


def geometric(mono: MPoly, order: int) -> XSeries:
    """The series 1/(1 - m*x) = sum_k m^k x^k for a polynomial m."""
    out: list[MPoly] = [MPoly.const(1)]
    for _ in range(order):
        out.append(out[-1] * mono)
    return XSeries(order, out)


def from_polynomial_in_x(pairs: Iterable[tuple[int, MPoly]], order: int) -> XSeries:
    coeffs = [MPoly.zero() for _ in range(order + 1)]
    for k, poly in pairs:
        if 0 <= k <= order:
            coeffs[k] = coeffs[k] + poly
    return XSeries(order, coeffs)


def divexact_coeffwise(num: XSeries, den: XSeries) -> XSeries:
    """Series quotient where the denominator's x^0 coefficient may be any
    nonzero polynomial, provided every quotient coefficient is a polynomial.

    Used for closed forms whose denominators only become invertible over the
    rational-function field; exactness is certified by the multivariate
    exact-division step, which raises if a coefficient fails to divide.
    """
    d0 = den.coeffs[0]
    if d0.is_zero():
        raise NonInvertibleConstantTermError("denominator vanishes at x=0")
    order = min(num.order, den.order)
    out: list[MPoly] = []
    for k in range(order + 1):
        acc = num.coeffs[k]
        for i in range(1, k + 1):
            di = den.coeffs[i]
            if di.terms and out[k - i].terms:
                acc = acc - di * out[k - i]
        out.append(divexact(acc, d0))
    return XSeries(order, out)
