"""Series evaluation of generating-function expressions.

Expressions evaluate bottom-up to truncated power series in x with exact
polynomial coefficients.  Quotients stay formal fractions (num, den) until
a concrete series is demanded: at the root and under sqrt.  This matters
because several shipped formulas are sums of fractions whose individual
terms have non-polynomial series coefficients; only the assembled sum
divides out.  Division at materialization time uses ordinary series
division when the denominator's constant term is a nonzero rational, and
exact coefficient-wise polynomial division otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gfexpr import Lit, Neg, Node, Pow, Prod, Quot, Sqrt, Sum, Diff, Var
from .mpoly import MPoly, NotDivisibleError
from .series import (
    BadConstantTermError,
    NonInvertibleConstantTermError,
    XSeries,
    divexact_coeffwise,
    series_div,
    series_sqrt,
)


class EvalError(ArithmeticError):
    """Evaluation failure, tagged with the offending subtree's span."""

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        self.span = span
        if span is not None:
            message = f"{message} [chars {span[0]}..{span[1]}]"
        super().__init__(message)


class NonPolynomialCoefficientError(EvalError):
    """A quotient's series coefficients are not polynomials."""


@dataclass(frozen=True)
class _Frac:
    num: XSeries
    den: XSeries | None  # None stands for 1

    def __add__(self, other: "_Frac") -> "_Frac":
        if self.den is None and other.den is None:
            return _Frac(self.num + other.num, None)
        if self.den is None:
            return _Frac(self.num * other.den + other.num, other.den)
        if other.den is None:
            return _Frac(self.num + other.num * self.den, self.den)
        if self.den == other.den:
            return _Frac(self.num + other.num, self.den)
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "_Frac":
        return _Frac(-self.num, self.den)

    def __sub__(self, other: "_Frac") -> "_Frac":
        return self + (-other)

    def __mul__(self, other: "_Frac") -> "_Frac":
        den: XSeries | None
        if self.den is None:
            den = other.den
        elif other.den is None:
            den = self.den
        else:
            den = self.den * other.den
        return _Frac(self.num * other.num, den)

    def reciprocal(self) -> "_Frac":
        one = XSeries.const(MPoly.const(1), self.num.order)
        return _Frac(one if self.den is None else self.den, self.num)


def _materialize(frac: _Frac, span: tuple[int, int] | None) -> XSeries:
    if frac.den is None:
        return frac.num
    d0 = frac.den.coeff(0)
    if d0.is_zero():
        raise EvalError("denominator vanishes at x=0", span)
    if d0.is_rational_constant():
        return series_div(frac.num, frac.den)
    try:
        return divexact_coeffwise(frac.num, frac.den)
    except NotDivisibleError as exc:
        raise NonPolynomialCoefficientError(str(exc), span) from exc


def _eval(node: Node, order: int) -> _Frac:
    if isinstance(node, Lit):
        value = node.value
        c = MPoly.const(value if isinstance(value, (int, Fraction)) else int(value))
        return _Frac(XSeries.const(c, order), None)
    if isinstance(node, Var):
        if node.name == "x":
            return _Frac(XSeries.x(order), None)
        return _Frac(XSeries.const(MPoly.var(node.name), order), None)
    if isinstance(node, Neg):
        return -_eval(node.child, order)
    if isinstance(node, Sum):
        return _eval(node.left, order) + _eval(node.right, order)
    if isinstance(node, Diff):
        return _eval(node.left, order) - _eval(node.right, order)
    if isinstance(node, Prod):
        return _eval(node.left, order) * _eval(node.right, order)
    if isinstance(node, Quot):
        return _eval(node.num, order) * _eval(node.den, order).reciprocal()
    if isinstance(node, Pow):
        base = _eval(node.base, order)
        out = _Frac(XSeries.const(MPoly.const(1), order), None)
        for _ in range(node.exponent):
            out = out * base
        return out
    if isinstance(node, Sqrt):
        child = _materialize(_eval(node.child, order), node.child.span)
        try:
            return _Frac(series_sqrt(child), None)
        except BadConstantTermError as exc:
            raise EvalError(str(exc), node.span) from exc
    raise TypeError(f"unknown node type {type(node).__name__}")


def eval_series(expr: Node, order: int) -> XSeries:
    """Expand expr as a power series in x through x^order inclusive."""
    if order < 1:
        raise ValueError("order must be at least 1")
    try:
        return _materialize(_eval(expr, order), expr.span)
    except NonInvertibleConstantTermError as exc:
        raise EvalError(str(exc), expr.span) from exc
