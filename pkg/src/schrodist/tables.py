"""Recurrence systems for the joint distributions, as exact DP tables.

Four families are built here, each indexed by the class it enumerates:

* u_n(i,j): inversion sequences by (last letter, height), weight q^(dist-1);
* r_n(i,j): the (1324,1423) class by (active sites, active descents),
  weight p^first q^desc;
* d_n(i,m)/e_n(m): the (1342,1423) class refined by the requirement that
  the top m letters decrease, plus its indecomposable members;
* a_n(i,j): the remaining classes by (first letter, second letter),
  weight q^desc, one table per pattern pair.

Lookups outside a table's support return zero, which is what the
recurrences expect of out-of-range references.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .invseq import UTable
from .mpoly import MPoly, poly_sum

Q = MPoly.var("q")
V = MPoly.var("v")
W = MPoly.var("w")
P = MPoly.var("p")
ONE = MPoly.const(1)
ZERO = MPoly.zero()


class UnknownCaseError(KeyError):
    """The pattern pair has no second-letter recurrence system."""


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# ----------------------------------------------------------------------
# u-tables: last letter x height on the inversion-sequence class.
# ----------------------------------------------------------------------


def build_u_table(n_max: int) -> list[UTable]:
    """Tables for n=2..n_max; entries [0] and [1] are empty placeholders."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    tables = [UTable(0, {}), UTable(1, {}), UTable(2, {(1, 1): ONE})]
    for n in range(3, n_max + 1):
        prev, prev2 = tables[n - 1], tables[n - 2]
        vals: dict[tuple[int, int], MPoly] = {}

        def put(i: int, j: int, p: MPoly) -> None:
            if not p.is_zero():
                vals[(i, j)] = p

        # i < j <= n-1: remove the terminal letter, which is smaller than
        # the height and occurs once or twice
        for j in range(2, n):
            inner = ZERO  # sum over k < i of u_{n-2}(j-1,k) + u_{n-1}(j-1,k)
            for i in range(1, j):
                p = prev.at(j, i) + Q * inner
                if j == n - 1:
                    p = p + Q ** (n - 2)
                put(i, j, p)
                inner = inner + prev2.at(j - 1, i) + prev.at(j - 1, i)
        # j < i <= n: strip the terminal letter, unique of its kind
        for j in range(1, n):
            col = ZERO  # sum over ell < i of u_{n-1}(ell, j)
            for i in range(1, n + 1):
                if j < i:
                    put(i, j, Q * col)
                col = col + prev.at(i, j)
        # diagonal below n-1
        for i in range(1, n - 1):
            p = poly_sum([prev.at(i, k) for k in range(1, i)])
            p = p + poly_sum([prev.at(l, i) for l in range(1, i + 1)])
            put(i, i, p)
        # diagonal at n-1: both terminal letters equal the height
        if n == 3:
            put(2, 2, Q)
        else:
            tail = poly_sum(
                [prev2.at(i, j) for i in range(1, n - 1) for j in range(1, n - 2)]
            )
            put(n - 1, n - 1, Q ** (n - 2) + Q * tail)
        tables.append(UTable(n, vals))
    return tables


def assemble_U(n: int, tables: list[UTable]) -> tuple[MPoly, MPoly]:
    """(U_n(v,w), distribution), the latter being U_n(v,1) plus the
    v^n q^(n-1) term for the strictly increasing sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    increasing = V**n * Q ** (n - 1)
    if n == 1:
        return ZERO, increasing
    table = tables[n]
    parts = []
    for (i, j), p in table.values.items():
        parts.append(p * V**i * W**j)
    u_vw = poly_sum(parts)
    dist = u_vw.subst("w", 1) + increasing
    return u_vw, dist


# ----------------------------------------------------------------------
# r-tables: active sites x active descents on S_n(1324, 1423).
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RTable:
    """r_n(i,j) in p (first letter) and q (descents); support
    3 <= i <= n+1, 0 <= j <= i-2 for n >= 2, plus r_1(2,0)=p."""

    n: int
    values: dict[tuple[int, int], MPoly]

    def at(self, i: int, j: int) -> MPoly:
        return self.values.get((i, j), ZERO)

    def total(self) -> MPoly:
        return poly_sum(list(self.values.values()))


def build_r_table(n_max: int) -> list[RTable]:
    """Tables for n=1..n_max; entry [0] is an empty placeholder."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    tables = [RTable(0, {}), RTable(1, {(2, 0): P})]
    for n in range(2, n_max + 1):
        prev = tables[n - 1]
        vals: dict[tuple[int, int], MPoly] = {}

        def put(i: int, j: int, p: MPoly) -> None:
            if not p.is_zero():
                vals[(i, j)] = p

        # column suffix sums over the previous table:
        # suffix[j][i] = sum of r_{n-1}(l, j) for l >= i
        suffix: dict[int, list[MPoly]] = {}
        for j in range(0, n):
            col = [ZERO] * (n + 2)
            for i in range(n, 2, -1):
                col[i] = col[i + 1] + prev.at(i, j)
            suffix[j] = col
        # tail[k] = sum over k' >= k up to n-2 of suffix[k'][k'+2]
        tail = [ZERO] * (n + 1)
        for k in range(n - 2, -1, -1):
            tail[k] = tail[k + 1] + suffix[k][k + 2]

        # the all-descending permutation is the only one with two sites
        put(n + 1, n - 1, P**n * Q ** (n - 1))
        # one more site than active descents plus two: insert 1 next to
        # the rightmost pattern starter of the precursor
        for j in range(0, n - 2):
            p = P * Q * prev.at(j + 2, j - 1)
            p = p + P * Q * suffix[j][j + 3]
            p = p + P * tail[j + 1]
            put(j + 3, j, p)
        # generic interior entries
        for j in range(0, n - 3):
            for i in range(j + 4, n + 1):
                p = P * Q * prev.at(i - 1, j - 1) + P * prev.at(i - 1, j)
                p = p + P * Q * suffix[j][i]
                put(i, j, p)
        # maximal site count: increasing prefix, peak, decreasing tail
        for j in range(0, n - 1):
            p = poly_sum(
                [
                    P**l * Q**j * binom(n - l - 1, n - j - 2)
                    for l in range(1, n)
                    if binom(n - l - 1, n - j - 2)
                ]
            )
            put(n + 1, j, p)
        tables.append(RTable(n, vals))
    return tables


def r_distribution(n: int, tables: list[RTable]) -> MPoly:
    """Sum over the table with p renamed to v; the class distribution."""
    if n < 1:
        raise ValueError("n must be positive")
    return tables[n].total().subst_monomial("p", V)


def assemble_R_pieces(n: int, tables: list[RTable]) -> tuple[MPoly, MPoly]:
    """(E_n(v), C_n(v)): boundary slices r_n(n+1,j) for j <= n-2 and
    r_n(j+2,j) of the table as polynomials in v (the j index) with p left
    in place.  The corner cell r_n(n+1,n-1) sits on both the top row and
    the j+2 diagonal; it belongs to the C slice."""
    t = tables[n]
    e = poly_sum([t.at(n + 1, j) * V**j for j in range(0, n - 1)])
    c = poly_sum([t.at(j + 2, j) * V**j for j in range(0, n)])
    return e, c


# ----------------------------------------------------------------------
# d/e-tables: the (1342,1423) class with a forced decreasing top block.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DETables:
    n_max: int
    d: dict[tuple[int, int, int], MPoly]
    e: dict[tuple[int, int], MPoly]
    Dm: dict[tuple[int, int], MPoly]

    def d_at(self, n: int, i: int, m: int) -> MPoly:
        return self.d.get((n, i, m), ZERO)

    def e_at(self, n: int, m: int) -> MPoly:
        return self.e.get((n, m), ZERO)

    def D_at(self, n: int, m: int) -> MPoly:
        return self.Dm.get((n, m), ZERO)


def build_de_tables(n_max: int) -> DETables:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d: dict[tuple[int, int, int], MPoly] = {(1, 1, 1): ONE}
    Dm: dict[tuple[int, int], MPoly] = {(1, 1): ONE}
    e: dict[tuple[int, int], MPoly] = {(1, 1): ONE}

    def d_at(n: int, i: int, m: int) -> MPoly:
        return d.get((n, i, m), ZERO)

    def D_at(n: int, m: int) -> MPoly:
        return Dm.get((n, m), ZERO)

    for n in range(2, n_max + 1):
        if n == 2:
            d[(2, 1, 1)] = ONE
            d[(2, 2, 1)] = Q
            d[(2, 2, 2)] = Q
        else:
            for m in range(1, n + 1):
                # top letter first: strip it, one descent created
                d[(n, n, m)] = Q * D_at(n - 1, max(m - 1, 1))
                # first letter n-m: second is small or n, strip accordingly
                if 1 <= n - m <= n - 1:
                    p = Q * D_at(n - 2, max(m - 1, 1))
                    p = p + Q * poly_sum(
                        [d_at(n - 1, j, m) for j in range(1, n - m)]
                    )
                    if not p.is_zero():
                        d[(n, n - m, m)] = p
                # interior first letters
                for i in range(1, n - m):
                    p = d_at(n - 1, i, m) + Q * D_at(n - 2, n - i - 1)
                    p = p + Q * poly_sum([d_at(n - 1, j, m) for j in range(1, i)])
                    cross = []
                    for j in range(i + 2, n - m + 1):
                        for a in range(0, i):
                            ej = e.get((j - a - 2, j - i - 1), ZERO)
                            if ej.is_zero():
                                continue
                            dj = d_at(n - j + a + 1, a + 1, m)
                            if dj.is_zero():
                                continue
                            cross.append(ej * dj)
                    p = p + Q * poly_sum(cross)
                    if not p.is_zero():
                        d[(n, i, m)] = p
        for m in range(1, n + 1):
            total = poly_sum([d_at(n, i, m) for i in range(1, n + 1)])
            if not total.is_zero():
                Dm[(n, m)] = total
        # peel maximal sorted suffixes to isolate indecomposables
        for m in range(1, n + 1):
            p = D_at(n, m)
            for a in range(1, n - m + 1):
                ea = e.get((n - a, m), ZERO)
                if ea.is_zero():
                    continue
                p = p - Q * ea * D_at(a, 1)
            if not p.is_zero():
                e[(n, m)] = p
    return DETables(n_max, d, e, Dm)


def d_distribution(n: int, tables: DETables) -> MPoly:
    """First-letter by descents distribution of S_n(1342,1423), read off
    the m=1 slice (which imposes no constraint)."""
    if n < 1:
        raise ValueError("n must be positive")
    return poly_sum([tables.d_at(n, i, 1) * V**i for i in range(1, n + 1)])


def assemble_D123(tables: DETables, n: int) -> tuple[MPoly, MPoly, MPoly]:
    """Coefficients of x^n in the three slices of the d-table generating
    function: interior, first letter n-m, and first letter n."""
    d1 = poly_sum(
        [
            tables.d_at(n, i, m) * V**i * W ** (m - 1)
            for m in range(1, n - 1)
            for i in range(1, n - m)
        ]
    )
    d2 = poly_sum(
        [
            tables.d_at(n, n - m, m) * V ** (n - m) * W ** (m - 1)
            for m in range(1, n)
        ]
    )
    d3 = poly_sum(
        [tables.d_at(n, n, m) * V**n * W ** (m - 1) for m in range(1, n + 1)]
    )
    return d1, d2, d3


def assemble_E(tables: DETables, n: int) -> MPoly:
    return poly_sum([tables.e_at(n, m) * V ** (m - 1) for m in range(1, n + 1)])


# ----------------------------------------------------------------------
# a-tables: first two letters on the four remaining classes.
# ----------------------------------------------------------------------

A_CASES = (
    ((1, 3, 2, 4), (1, 3, 4, 2)),
    ((1, 2, 4, 3), (1, 4, 2, 3)),
    ((1, 2, 4, 3), (1, 3, 4, 2)),
    ((1, 2, 4, 3), (1, 3, 2, 4)),
)


@dataclass(frozen=True)
class ATable:
    case: tuple[tuple[int, ...], tuple[int, ...]]
    n_max: int
    values: dict[tuple[int, int, int], MPoly]

    def at(self, n: int, i: int, j: int) -> MPoly:
        return self.values.get((n, i, j), ZERO)

    def row(self, n: int, i: int) -> MPoly:
        """a_n(i) = sum over j != i; the first-letter slice."""
        if n == 1:
            return ONE if i == 1 else ZERO
        return poly_sum(
            [p for (m, a, b), p in self.values.items() if m == n and a == i]
        )

    def total(self, n: int) -> MPoly:
        if n == 0:
            return ONE
        return poly_sum([self.row(n, i) for i in range(1, n + 1)])


def build_a_table(n_max: int, case) -> ATable:
    case = tuple(sorted(tuple(p) for p in case))
    if case not in A_CASES:
        raise UnknownCaseError(case)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    vals: dict[tuple[int, int, int], MPoly] = {}
    if n_max >= 2:
        vals[(2, 1, 2)] = ONE
        vals[(2, 2, 1)] = Q
    if n_max >= 3:
        vals[(3, 1, 2)] = ONE
        for i, j in ((1, 3), (2, 1), (2, 3), (3, 1)):
            vals[(3, i, j)] = Q
        vals[(3, 3, 2)] = Q * Q

    table = ATable(case, n_max, vals)  # rows/totals read vals as it grows

    def at(n: int, i: int, j: int) -> MPoly:
        return vals.get((n, i, j), ZERO)

    def put(n: int, i: int, j: int, p: MPoly) -> None:
        if not p.is_zero():
            vals[(n, i, j)] = p

    for n in range(4, n_max + 1):
        rows_prev = [ZERO] + [table.row(n - 1, i) for i in range(1, n)]
        rows_prev2 = [ZERO] + [table.row(n - 2, i) for i in range(1, n - 1)]
        # every case: a second letter below the first forces an immediate
        # descent and an unconstrained remainder
        for i in range(2, n + 1):
            for j in range(1, i):
                if j <= n - 1:
                    put(n, i, j, Q * rows_prev[j])
        if case == ((1, 3, 2, 4), (1, 3, 4, 2)):
            for i in range(1, n):
                put(n, i, i + 1, rows_prev[i])
            for i in range(1, n - 2):
                p = Q * at(n - 1, i, n - 1)
                p = p + Q * poly_sum([rows_prev2[j] for j in range(1, i + 1)])
                put(n, i, n, p)
            p = Q * Q * table.total(n - 3)
            p = p + Q * poly_sum([rows_prev2[j] for j in range(1, n - 2)])
            put(n, n - 2, n, p)
            # entries with i+1 < j < n stay zero
        elif case == ((1, 2, 4, 3), (1, 4, 2, 3)):
            for i in range(1, n - 1):
                p = at(n - 1, i, i + 1)
                terms = []
                for a in range(1, i):
                    for c in range(0, i - a):
                        coef = Q ** (c + 1) * binom(i - a - 1, c)
                        for b in range(a + 1, i - c + 1):
                            terms.append(coef * at(n - c - 2, a, b))
                put(n, i, i + 1, p + poly_sum(terms))
            put(n, n - 1, n, Q * table.total(n - 2))
            for i in range(1, n - 2):
                p = Q * at(n - 1, i, i + 1) + at(n - 1, i, i + 2)
                terms = []
                for a in range(1, i):
                    for c in range(0, i - a):
                        coef = Q ** (c + 1) * binom(i - a - 1, c)
                        for b in range(a + 1, i - c + 2):
                            terms.append(coef * at(n - c - 2, a, b))
                put(n, i, i + 2, p + poly_sum(terms))
            put(n, n - 2, n, Q * table.total(n - 2))
            for i in range(1, n - 2):
                for j in range(i + 3, n + 1):
                    p = Q * at(n - 1, i, j - 1)
                    terms = []
                    for a in range(1, i):
                        for c in range(0, i - a):
                            coef = Q ** (c + 1) * binom(i - a - 1, c)
                            terms.append(coef * at(n - c - 2, a, j - c - 2))
                    p = p + poly_sum(terms)
                    if j < n:
                        p = p + at(n - 1, i, j)
                        terms = []
                        for a in range(1, i):
                            for c in range(0, i - a):
                                coef = Q ** (c + 1) * binom(i - a - 1, c)
                                terms.append(coef * at(n - c - 2, a, j - c - 1))
                        p = p + poly_sum(terms)
                    put(n, i, j, p)
        elif case == ((1, 2, 4, 3), (1, 3, 4, 2)):
            for i in range(1, n):
                for j in range(i + 1, n):
                    p = Q * poly_sum([at(n - 1, i, k) for k in range(i + 1, j)])
                    terms = []
                    for a in range(1, i):
                        for c in range(0, i - a):
                            coef = Q ** (c + 1) * binom(i - a - 1, c)
                            for b in range(a + 1, j - c - 1):
                                terms.append(coef * at(n - c - 2, a, b))
                    p = p + poly_sum(terms)
                    if j == i + 1:
                        p = p + at(n - 1, i, i + 1)
                        terms = []
                        for a in range(1, i):
                            for c in range(0, i - a):
                                coef = Q ** (c + 1) * binom(i - a - 1, c)
                                terms.append(coef * at(n - c - 2, a, i - c))
                        p = p + poly_sum(terms)
                    put(n, i, j, p)
            for i in range(1, n):
                p = poly_sum([at(n - 1, i, j) for j in range(1, i)])
                p = p + Q * poly_sum([at(n - 1, i, j) for j in range(i + 1, n)])
                put(n, i, n, p)
        else:  # ((1, 2, 4, 3), (1, 3, 2, 4))
            for i in range(1, n - 1):
                p = at(n - 1, i, i + 1)
                terms = []
                for a in range(1, i):
                    for b in range(a + 1, i + 1):
                        for c in range(0, i - b + 1):
                            coef = Q ** (c + 1) * binom(i - a - 1, c)
                            terms.append(coef * at(n - c - 2, a, b))
                put(n, i, i + 1, p + poly_sum(terms))
            for i in range(1, n - 2):
                for j in range(i + 2, n):
                    p = at(n - 1, i, j)
                    terms = []
                    for a in range(1, i):
                        for c in range(0, i - a):
                            coef = Q ** (c + 1) * binom(i - a - 1, c)
                            terms.append(coef * at(n - c - 2, a, j - c - 1))
                    put(n, i, j, p + poly_sum(terms))
            for i in range(1, n):
                p = poly_sum([at(n - 1, i, j) for j in range(1, i)])
                p = p + Q * poly_sum([at(n - 1, i, j) for j in range(i + 1, n)])
                put(n, i, n, p)
    return table


def a_distribution(n: int, atable: ATable) -> MPoly:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return V
    return poly_sum([atable.row(n, i) * V**i for i in range(1, n + 1)])


def assemble_A(atable: ATable, n: int) -> tuple[MPoly, MPoly]:
    """(A+_n, A-_n): the above- and below-diagonal slices in v, w."""
    plus, minus = [], []
    for (m, i, j), p in atable.values.items():
        if m != n:
            continue
        term = p * V**i * W**j
        if i < j:
            plus.append(term)
        else:
            minus.append(term)
    return poly_sum(plus), poly_sum(minus)


# ----------------------------------------------------------------------
# the refined Schroeder triangle
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SchroederTriangle:
    n_max: int
    values: dict[tuple[int, int], int]

    def at(self, n: int, k: int) -> int:
        return self.values.get((n, k), 0)

    def row(self, n: int) -> tuple[int, ...]:
        return tuple(self.at(n, k) for k in range(1, n + 1))


def schroeder_triangle(n_max: int) -> SchroederTriangle:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    s: dict[tuple[int, int], int] = {(1, 1): 1}
    if n_max >= 2:
        s[(2, 1)] = s[(2, 2)] = 1
    for n in range(3, n_max + 1):
        for k in range(1, n - 1):
            s[(n, k)] = s.get((n, k - 1), 0) + 2 * s[(n - 1, k)] - s.get((n - 1, k - 1), 0)
        s[(n, n)] = s[(n, n - 1)] = s[(n, n - 2)]
    return SchroederTriangle(n_max, s)
