"""Expression grammar: tokenizer, parser, renderer."""

import pytest

from schrodist import assets
from schrodist.gfexpr import (
    ParseError,
    UnknownVariableError,
    parse,
    render,
    variables_used,
)


def test_parse_render_roundtrip_simple():
    for src in (
        "1+q*x",
        "(1-x)/(1-q*x)",
        "sqrt(1-4*x)",
        "v*w*x^2/(2*(1-x))",
        "-(q-1)*x+1",
    ):
        tree = parse(src)
        again = parse(render(tree))
        assert again == tree


def test_roundtrip_all_shipped_assets():
    # criterion: parse(render(tree)) is structurally identical, every asset
    for name in assets.asset_names():
        tree = assets.get_expr(name)
        assert parse(render(tree)) == tree


def test_variables_used():
    assert variables_used(parse("q*v*x + w")) == {"q", "v", "w", "x"}
    assert variables_used(parse("1+2")) == set()


def test_unknown_variable_rejected():
    with pytest.raises(UnknownVariableError):
        parse("1 + z*x")


@pytest.mark.parametrize("bad", ["", "1+", "(1", "sqrt", "sqrt(", "2^q", "1//2"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_power_binds_tighter_than_product():
    assert parse("2*x^3") == parse("2*(x^3)")
    assert parse("2*x^3") != parse("(2*x)^3")
