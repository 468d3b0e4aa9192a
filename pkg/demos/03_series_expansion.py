"""Closed forms: algebraic generating functions, expanded exactly.

Each distribution in this package also has a closed form: an algebraic
generating function built from polynomials, division, and square roots.
The formulas ship as plain-text assets; a small parser turns them into
expression trees and an evaluator expands them as truncated power series
in x whose coefficients are exact polynomials in q, v, w, p.

No floating point is involved anywhere.  The square root is the formal
series square root (Newton iteration on polynomials over the rationals),
and divisions are performed coefficient-wise with exact polynomial
division.  If a formula were transcribed wrongly, the expansion would
almost surely leave polynomial land and the evaluator would raise.
"""

from schrodist.assets import asset_names, get_asset, get_series
from schrodist.mpoly import MPoly
from schrodist.tables import assemble_U, build_u_table

print("Shipped formula assets:")
for name in asset_names():
    print(f"  {name:22s} in {', '.join(get_asset(name).variables_used)}")
print()

# The simplest asset: the square-root term shared by several formulas.
t = get_asset("t")
print("The asset 't' is the algebraic kernel")
print(f"  {t.source.strip()}")
print("and expands to")
series = get_series("t", 6)
for n in range(5):
    print(f"  x^{n}:  {series.coeff(n).render()}")
print()

# The master asset: the full joint distribution of the sequence family.
master = get_series("master", 12)
print("Coefficients of the master series (joint distribution in q, v):")
for n in range(1, 5):
    print(f"  x^{n}:  {master.coeff(n).render()}")
print()

utab = build_u_table(12)
print("Those are exactly the recurrence-table distributions:")
for n in range(1, 13):
    _, dist = assemble_U(n, utab)
    assert master.coeff(n) == dist
print("  checked n = 1..12, all equal.")
print()

# At q = v = 1 the counting sequence drops out.
counting = get_series("U_x_1_1", 12)
values = [counting.coeff(n).subst("q", 1).constant_term() for n in range(1, 13)]
print("Counting series at q = 1 (large Schroeder numbers):")
print("  " + ", ".join(str(v) for v in values))
