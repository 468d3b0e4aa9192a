"""Shipped generating-function assets and their series expansions.

Each closed form lives as a plain-text file under ``formulas/``, written in
the small expression grammar of :mod:`schrodist.gfexpr`.  ``manifest.json``
maps asset names to files, a one-line description of the formula's role,
the variables appearing in it, and a status flag.  Assets with status
``out_of_scope`` are reference material only (their notation exceeds the
grammar) and are never parsed or evaluated.

Two series are assembled from several assets rather than shipped as a
single file: the joint (last, hght) refinement ``U_vw`` and the joint
(first, second, descents) refinement ``A_1324_1342_vw``.  Both are exposed
through :func:`get_series` under those names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .gfexpr import Node, parse
from .gfeval import eval_series
from .mpoly import MPoly, ONE, Q, V, W
from .series import XSeries, divexact_coeffwise, from_polynomial_in_x, series_scale_x

DEFAULT_ORDER = 12

_FORMULA_DIR = Path(__file__).resolve().parent / "formulas"


class UnknownAssetError(KeyError):
    pass


class OutOfScopeAssetError(ValueError):
    """Raised when asked to parse or expand a reference-only asset."""


class OrderTooSmallError(ValueError):
    pass


class NonIntegralCoefficientError(ArithmeticError):
    """A coefficient came out non-integral: a transcription bug somewhere."""


@dataclass(frozen=True)
class FormulaAsset:
    name: str
    source: str
    paper_anchor: str
    variables_used: tuple[str, ...]
    status: str = "validated"

    @property
    def in_scope(self) -> bool:
        return self.status != "out_of_scope"


def strip_comment_lines(text: str) -> str:
    return "\n".join(
        line for line in text.splitlines() if not line.lstrip().startswith("#")
    )


_assets: dict[str, FormulaAsset] | None = None
_expr_cache: dict[str, Node] = {}
_series_cache: dict[tuple[str, int], XSeries] = {}


def load_assets() -> dict[str, FormulaAsset]:
    global _assets
    if _assets is None:
        manifest = json.loads((_FORMULA_DIR / "manifest.json").read_text("utf-8"))
        loaded = {}
        for name, entry in manifest.items():
            raw = (_FORMULA_DIR / entry["file"]).read_text("utf-8")
            loaded[name] = FormulaAsset(
                name=name,
                source=strip_comment_lines(raw),
                paper_anchor=entry["anchor"],
                variables_used=tuple(entry["variables"]),
                status=entry["status"],
            )
        _assets = loaded
    return _assets


def asset_names(include_out_of_scope: bool = False) -> list[str]:
    return sorted(
        name
        for name, asset in load_assets().items()
        if include_out_of_scope or asset.in_scope
    )


def get_asset(name: str) -> FormulaAsset:
    try:
        return load_assets()[name]
    except KeyError:
        raise UnknownAssetError(name) from None


def get_expr(name: str) -> Node:
    if name not in _expr_cache:
        asset = get_asset(name)
        if not asset.in_scope:
            raise OutOfScopeAssetError(
                f"asset {name!r} is reference-only and cannot be parsed"
            )
        _expr_cache[name] = parse(asset.source)
    return _expr_cache[name]


# Names resolved by get_series that are assembled from several file assets
# instead of being evaluated from a single expression.
ASSEMBLED = {
    "U_vw": "joint (last, hght) refinement: Uplus + Uminus + U0 with v -> v*w",
    "A_1324_1342_vw": (
        "joint (first, second, descents) refinement for the class avoiding "
        "1324 and 1342, assembled from A_x_v_1 and A_x_1_1"
    ),
}


def get_series(name: str, order: int = DEFAULT_ORDER) -> XSeries:
    key = (name, order)
    if key not in _series_cache:
        if name == "U_vw":
            s = _assemble_u_vw(order)
        elif name == "A_1324_1342_vw":
            s = _assemble_a_1324_1342_vw(order)
        else:
            s = eval_series(get_expr(name), order)
        _series_cache[key] = s
    return _series_cache[key]


def _assemble_u_vw(order: int) -> XSeries:
    vw = V * W
    u0 = get_series("U0", order).map_coeffs(lambda c: c.subst_monomial("v", vw))
    return get_series("Uplus", order) + get_series("Uminus", order) + u0


def _assemble_a_1324_1342_vw(order: int) -> XSeries:
    # A(x,v,w) satisfies
    #   A(x,v,w) = (wx + vqx/(1-v)) A(x,vw,1) - (v^2qx/(1-v)) A(vx,w,1)
    #            + (vw^2qx^2/((1-v)(wqx-1))) A(vwx,1,1)
    #            - (w^2qx^2/((1-v)(wqx-1))) A(wx,v,1)
    #            + (vwq^2x - vq - w) vwx^2 / (wqx-1).
    # Everything is put over the common denominator (1-v)(wqx-1) and the
    # quotient is taken coefficientwise (it divides exactly).
    vw = V * W
    s_v = get_series("A_x_v_1", order)
    s_1 = get_series("A_x_1_1", order)

    a_x_vw_1 = s_v.map_coeffs(lambda c: c.subst_monomial("v", vw))
    a_vx_w_1 = series_scale_x(s_v.map_coeffs(lambda c: c.subst_monomial("v", W)), V)
    a_vwx_1_1 = series_scale_x(s_1, vw)
    a_wx_v_1 = series_scale_x(s_v, W)

    one_minus_v = ONE - V
    kernel = from_polynomial_in_x([(0, -ONE), (1, W * Q)], order)  # wqx - 1

    t1 = from_polynomial_in_x([(1, W * one_minus_v + V * Q)], order) * a_x_vw_1 * kernel
    t2 = from_polynomial_in_x([(1, V * V * Q)], order) * a_vx_w_1 * kernel
    t3 = from_polynomial_in_x([(2, V * W * W * Q)], order) * a_vwx_1_1
    t4 = from_polynomial_in_x([(2, W * W * Q)], order) * a_wx_v_1
    t5 = from_polynomial_in_x(
        [
            (2, V * W * one_minus_v * (-(V * Q) - W)),
            (3, V * V * W * W * Q * Q * one_minus_v),
        ],
        order,
    )
    num = t1 - t2 + t3 - t4 + t5
    den = from_polynomial_in_x([(0, V - ONE), (1, one_minus_v * W * Q)], order)
    return divexact_coeffwise(num, den)


def coeff_distribution(
    asset: FormulaAsset | str, n: int, order: int | None = None
) -> MPoly:
    """Coefficient of x^n of an asset's series, integrality-checked."""
    name = asset.name if isinstance(asset, FormulaAsset) else asset
    if order is None:
        order = DEFAULT_ORDER
    if n > order:
        raise OrderTooSmallError(
            f"coefficient of x^{n} requested but series order is {order}"
        )
    c = get_series(name, order).coeff(n)
    if not c.is_integral():
        raise NonIntegralCoefficientError(
            f"coefficient of x^{n} of asset {name!r} is not integral: {c.render()}"
        )
    return c
