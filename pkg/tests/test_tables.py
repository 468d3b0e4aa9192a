"""Recurrence tables against frozen values and brute-force oracles.

The frozen cell values were derived by direct enumeration of the
relevant classes and double-checked by hand for the small cases.
"""

import pytest

from schrodist.mpoly import MPoly, ONE, P, Q, ZERO
from schrodist.perms import (
    decreasing_top_distribution,
    enumerate_avoiders,
    first_two_distribution,
    indecomposable_top_distribution,
    perm_stats,
)
from schrodist.invseq import u_oracle
from schrodist.tables import A_CASES, schroeder_triangle


# ----------------------------------------------------------------------
# u-tables
# ----------------------------------------------------------------------

U3 = {
    (1, 1): ONE,
    (1, 2): Q,
    (2, 1): Q,
    (2, 2): Q,
    (3, 1): Q,
    (3, 2): ZERO,
}

U4 = {
    (1, 1): ONE,
    (1, 2): Q,
    (1, 3): Q + Q**2,
    (2, 1): Q,
    (2, 2): 3 * Q,
    (2, 3): 2 * Q**2,
    (3, 1): Q + Q**2,
    (3, 2): 2 * Q**2,
    (3, 3): Q + Q**2,
    (4, 1): Q + 2 * Q**2,
    (4, 2): 2 * Q**2,
    (4, 3): ZERO,
}


def test_u3_golden(utab):
    for (i, j), want in U3.items():
        assert utab[3].at(i, j) == want, (i, j)


def test_u4_golden(utab):
    for (i, j), want in U4.items():
        assert utab[4].at(i, j) == want, (i, j)


def test_u5_cell_golden(utab):
    assert utab[5].at(2, 4) == 4 * Q**2 + 2 * Q**3


def test_u_matches_oracle(utab):
    for n in range(2, 8):
        oracle = u_oracle(n)
        for i in range(1, n + 1):
            for j in range(1, n):
                assert utab[n].at(i, j) == oracle.at(i, j), (n, i, j)


# ----------------------------------------------------------------------
# r-tables
# ----------------------------------------------------------------------

R_SMALL = {
    1: {(2, 0): P},
    2: {(3, 0): P, (3, 1): P**2 * Q},
    3: {
        (4, 0): P,
        (4, 1): P * Q * (1 + P),
        (4, 2): P**3 * Q**2,
        (3, 0): P**2 * Q * (1 + P),
    },
    4: {
        (3, 0): (2 * P**2 + P**3) * Q + (P**3 + 2 * P**4) * Q**2,
        (4, 0): (P**2 + P**3 + P**4) * Q,
        (5, 0): P,
        (4, 1): (P**2 + 2 * P**3 + 2 * P**4) * Q**2,
        (5, 1): (2 * P + P**2) * Q,
        (5, 2): (P + P**2 + P**3) * Q**2,
        (5, 3): P**4 * Q**3,
    },
}


def test_r_small_golden(rtab):
    for n, cells in R_SMALL.items():
        for (i, j), want in cells.items():
            assert rtab[n].at(i, j) == want, (n, i, j)
        # every other in-range cell vanishes
        for i in range(3, n + 2):
            for j in range(i - 1):
                if (i, j) not in cells and n > 1:
                    assert rtab[n].at(i, j) == ZERO, (n, i, j)


def test_r5_cell_golden(rtab):
    want = P**2 * Q * (1 + P) ** 2 + P**3 * Q**2 * (1 + 2 * P + 3 * P**2)
    assert rtab[5].at(4, 0) == want


def test_r_matches_insertion_stats(rtab):
    # group the class by (act, dact), weighting p^first q^desc
    from schrodist.perms import ACT_PAIR, act_dact

    for n in range(2, 8):
        grouped: dict[tuple[int, int], MPoly] = {}
        for perm in enumerate_avoiders(n, ACT_PAIR):
            first, _, desc, _ = perm_stats(perm)
            key = act_dact(perm)
            mono = MPoly.monomial(1, q=desc, p=first)
            grouped[key] = grouped.get(key, ZERO) + mono
        for i in range(3, n + 2):
            for j in range(i - 1):
                assert rtab[n].at(i, j) == grouped.get((i, j), ZERO), (n, i, j)


# ----------------------------------------------------------------------
# d- and e-tables
# ----------------------------------------------------------------------

D3 = {
    (1, 1): Q + 1,
    (1, 2): Q,
    (1, 3): ZERO,
    (2, 1): 2 * Q,
    (2, 2): ZERO,
    (2, 3): ZERO,
    (3, 1): Q + Q**2,
    (3, 2): Q + Q**2,
    (3, 3): Q**2,
}

E3 = {1: 1 + 2 * Q, 2: 2 * Q, 3: Q**2}


def test_d3_e3_golden(detab):
    for (i, m), want in D3.items():
        assert detab.d_at(3, i, m) == want, (i, m)
    for m, want in E3.items():
        assert detab.e_at(3, m) == want, m


@pytest.mark.parametrize("n", range(4, 11))
def test_de_closed_forms(detab, n):
    assert detab.d_at(n, 1, n - 1) == MPoly.monomial(1, q=n - 2)
    assert detab.d_at(n, n, n - 1) == (n - 2) * Q ** (n - 2) + Q ** (n - 1)
    assert detab.e_at(n, n - 1) == (n - 1) * Q ** (n - 2)
    assert detab.d_at(n, n, n) == Q ** (n - 1)
    assert detab.e_at(n, n) == Q ** (n - 1)


def test_d_matches_oracle(detab):
    for n in range(1, 8):
        oracle = decreasing_top_distribution(n)
        for i in range(1, n + 1):
            for m in range(1, n + 1):
                assert detab.d_at(n, i, m) == oracle.get((i, m), ZERO), (n, i, m)


def test_e_matches_oracle(detab):
    for n in range(1, 8):
        oracle = indecomposable_top_distribution(n)
        for m in range(1, n + 1):
            assert detab.e_at(n, m) == oracle.get(m, ZERO), (n, m)


# ----------------------------------------------------------------------
# a-tables
# ----------------------------------------------------------------------

A_SHARED_INITIAL = {
    2: {(1, 2): ONE, (2, 1): Q},
    3: {
        (1, 2): ONE,
        (1, 3): Q,
        (2, 1): Q,
        (2, 3): Q,
        (3, 1): Q,
        (3, 2): Q**2,
    },
}

A4_1324_1342 = {
    (1, 2): 1 + Q,
    (1, 3): ZERO,
    (1, 4): Q + Q**2,
    (2, 1): Q + Q**2,
    (2, 3): 2 * Q,
    (2, 4): Q + Q**2,
    (3, 1): Q + Q**2,
    (3, 2): 2 * Q**2,
    (3, 4): Q + Q**2,
    (4, 1): Q + Q**2,
    (4, 2): 2 * Q**2,
    (4, 3): Q**2 + Q**3,
}


def test_a_initial_values_all_cases(atabs):
    for case, tab in atabs.items():
        for n, cells in A_SHARED_INITIAL.items():
            for (i, j), want in cells.items():
                assert tab.at(n, i, j) == want, (case, n, i, j)


def test_a4_golden_1324_1342(atabs):
    tab = atabs[((1, 3, 2, 4), (1, 3, 4, 2))]
    for (i, j), want in A4_1324_1342.items():
        assert tab.at(4, i, j) == want, (i, j)


@pytest.mark.parametrize("case", A_CASES, ids=lambda c: "%s,%s" % c)
def test_a_matches_oracle(atabs, case):
    tab = atabs[case]
    for n in range(2, 8):
        oracle = first_two_distribution(n, case)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                assert tab.at(n, i, j) == oracle.get((i, j), ZERO), (n, i, j)


# ----------------------------------------------------------------------
# Schroeder triangle
# ----------------------------------------------------------------------

def test_triangle_row_five(triangle):
    assert triangle.row(5) == (8, 16, 22, 22, 22)
    assert sum(triangle.row(5)) == 90


def test_triangle_row_sums(triangle):
    want = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]
    for n in range(1, 11):
        assert sum(triangle.row(n)) == want[n - 1]


def test_triangle_out_of_range_is_zero(triangle):
    assert triangle.at(3, 4) == 0
    assert triangle.at(3, 0) == 0
