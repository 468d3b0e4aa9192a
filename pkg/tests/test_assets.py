"""Closed-form series assets against the recurrence tables.

Every check is exact: series coefficients are multivariate polynomials
over the rationals and are compared term by term with the table sums.
"""

import pytest

from schrodist.assets import (
    ASSEMBLED,
    FormulaAsset,
    NonIntegralCoefficientError,
    OrderTooSmallError,
    OutOfScopeAssetError,
    UnknownAssetError,
    asset_names,
    coeff_distribution,
    get_asset,
    get_expr,
    get_series,
)
from schrodist.mpoly import MPoly, P, V, ZERO
from schrodist.tables import (
    A_CASES,
    assemble_A,
    assemble_D123,
    assemble_E,
    assemble_R_pieces,
    assemble_U,
    a_distribution,
    d_distribution,
)

ORDER = 12

SCHROEDER = [
    1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
]


def case_tag(case):
    return "%s_%s" % ("".join(map(str, case[0])), "".join(map(str, case[1])))


# ----------------------------------------------------------------------
# registry behaviour
# ----------------------------------------------------------------------

def test_asset_registry():
    names = asset_names()
    assert "master" in names
    assert "theorem32_1324_1423" not in names
    assert "theorem32_1324_1423" in asset_names(include_out_of_scope=True)
    assert isinstance(get_asset("master"), FormulaAsset)
    assert not get_asset("theorem32_1324_1423").in_scope


def test_unknown_asset():
    with pytest.raises(UnknownAssetError):
        get_asset("no_such_formula")


def test_out_of_scope_asset_cannot_be_evaluated():
    with pytest.raises(OutOfScopeAssetError):
        get_expr("theorem32_1324_1423")
    with pytest.raises(OutOfScopeAssetError):
        get_series("theorem32_1324_1423", 6)


def test_order_too_small():
    with pytest.raises(OrderTooSmallError):
        coeff_distribution("master", 9, order=8)


def test_coeff_distribution_matches_series():
    s = get_series("t", 8)
    for n in range(9):
        assert coeff_distribution("t", n, order=8) == s.coeff(n)


# ----------------------------------------------------------------------
# sequence family: master series and refinements
# ----------------------------------------------------------------------

def test_master_equals_dp_distribution(utab):
    master = get_series("master", ORDER)
    for n in range(1, ORDER + 1):
        _, dist = assemble_U(n, utab)
        assert master.coeff(n) == dist, n


def test_u_vw_assembly_equals_dp(utab):
    uvw = get_series("U_vw", ORDER)
    for n in range(1, ORDER + 1):
        u_dp, _ = assemble_U(n, utab)
        assert uvw.coeff(n) == u_dp, n


def test_u_x_1_1_schroeder_counts():
    s = get_series("U_x_1_1", ORDER)
    for n in range(1, ORDER + 1):
        assert s.coeff(n).subst("q", 1) == MPoly.const(SCHROEDER[n]), n


def test_u_x_1_1_equals_master_at_v_1(utab):
    s = get_series("U_x_1_1", ORDER)
    master = get_series("master", ORDER)
    for n in range(1, ORDER + 1):
        assert s.coeff(n) == master.coeff(n).subst("v", 1), n


# ----------------------------------------------------------------------
# active-site family (1324, 1423)
# ----------------------------------------------------------------------

def test_e_c_assets_equal_dp_slices(rtab):
    e_asset = get_series("E_1324_1423", ORDER)
    c_asset = get_series("C_1324_1423", ORDER)
    # the closed forms carry the n=1 term separately, so compare n >= 2
    for n in range(2, 11):
        e_dp, c_dp = assemble_R_pieces(n, rtab)
        assert e_asset.coeff(n) == e_dp, n
        assert c_asset.coeff(n) == c_dp, n


def test_r_total_identity(rtab):
    # px + R(x,1,1;p,q) == px/(1-pqx) + U(x,p,1;q): the act/dact class
    # carries the same joint distribution as the sequence family
    u_v1 = get_series("U_x_v_1", ORDER)
    for n in range(2, ORDER + 1):
        left = rtab[n].total()
        right = u_v1.coeff(n).subst_monomial("v", P) + MPoly.monomial(1, q=n - 1, p=n)
        assert left == right, n


# ----------------------------------------------------------------------
# decomposition family (1342, 1423)
# ----------------------------------------------------------------------

def test_d_slices_equal_dp(detab):
    names = ("D1_1342_1423", "D2_1342_1423", "D3_1342_1423")
    series = [get_series(nm, ORDER) for nm in names]
    for n in range(1, 11):
        for s, dp in zip(series, assemble_D123(detab, n)):
            assert s.coeff(n) == dp, (s, n)


def test_e_series_equals_dp(detab):
    s = get_series("E_1342_1423", ORDER)
    for n in range(1, 11):
        assert s.coeff(n) == assemble_E(detab, n), n


def test_r_first_equals_dp(detab):
    s = get_series("R_first_1342_1423", ORDER)
    for n in range(1, 11):
        want = d_distribution(n, detab)
        got = s.coeff(n) + (V if n == 1 else ZERO)
        assert got == want, n


# ----------------------------------------------------------------------
# first-two-letters family (four remaining pairs)
# ----------------------------------------------------------------------

def test_a_x_v_1_identity():
    # A(x,v,1) + vx == U(x,v,1) + vx/(1-vqx)
    a_v1 = get_series("A_x_v_1", ORDER)
    u_v1 = get_series("U_x_v_1", ORDER)
    for n in range(1, ORDER + 1):
        lhs = a_v1.coeff(n) + (V if n == 1 else ZERO)
        rhs = u_v1.coeff(n) + MPoly.monomial(1, q=n - 1, v=n)
        assert lhs == rhs, n


def test_a_x_1_1_against_dp(atabs):
    a_11 = get_series("A_x_1_1", ORDER)
    for n in range(2, ORDER + 1):
        assert a_11.coeff(n).subst("q", 1) == MPoly.const(SCHROEDER[n]), n
    for n in range(2, 11):
        dp = a_distribution(n, atabs[A_CASES[0]]).subst("v", 1)
        assert a_11.coeff(n) == dp, n


@pytest.mark.parametrize("case", A_CASES[1:], ids=case_tag)
def test_a_split_assets_equal_dp_slices(atabs, case):
    tag = case_tag(case)
    plus = get_series("Aplus_" + tag, 10)
    minus = get_series("Aminus_" + tag, 10)
    for n in range(2, 11):
        plus_dp, minus_dp = assemble_A(atabs[case], n)
        assert plus.coeff(n) == plus_dp, ("plus", n)
        assert minus.coeff(n) == minus_dp, ("minus", n)


def test_a_1324_1342_assembly_equals_dp(atabs):
    assert "A_1324_1342_vw" in ASSEMBLED
    s = get_series("A_1324_1342_vw", 10)
    for n in range(2, 11):
        plus_dp, minus_dp = assemble_A(atabs[A_CASES[0]], n)
        assert s.coeff(n) == plus_dp + minus_dp, n


# ----------------------------------------------------------------------
# integrality of everything shipped
# ----------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(set(asset_names()) | set(ASSEMBLED)))
def test_all_series_integral(name):
    s = get_series(name, 10)
    for n in range(11):
        assert s.coeff(n).is_integral(), (name, n)
