"""The recurrence tables behind the fast pipeline.

Brute-force enumeration stops being fun around n=10 (the classes grow
like 6^n).  Each family instead gets a small table of polynomials built
by recurrence, refined enough that the recursion closes:

  u_n(i,j)  inversion sequences by (last letter, height)
  r_n(i,j)  the 1324/1423 class by (active sites, active descents)
  d_n(i,m)  the 1342/1423 class by (first letter, decreasing top run)
  e_n(m)    its indecomposable members
  a_n(i,j)  the other four classes by (first letter, second letter)

This script prints the small tables and shows how the marginal sums
recover the joint distribution that demo 01 computed by enumeration.
"""

from schrodist.invseq import last_dist_distribution
from schrodist.perms import first_desc_distribution
from schrodist.tables import (
    A_CASES,
    assemble_U,
    a_distribution,
    build_a_table,
    build_de_tables,
    build_r_table,
    build_u_table,
    d_distribution,
    r_distribution,
    schroeder_triangle,
)

N = 4

utab = build_u_table(8)
print(f"u_{N}(i,j), rows i = last letter, columns j = height:")
for i in range(1, N + 1):
    cells = [utab[N].at(i, j).render() for j in range(1, N)]
    print(f"  i={i}:  " + "   ".join(f"{c:12s}" for c in cells))
print()

_, dist = assemble_U(N, utab)
print("Marginalizing (and adding the strictly increasing sequence):")
print("  ", dist.render())
assert dist == last_dist_distribution(N)
print("  matches brute force.")
print()

rtab = build_r_table(8)
print(f"r_{N}(i,j), i = active sites, j = active descents,")
print("p marking the first letter and q the descents:")
for i in range(3, N + 2):
    for j in range(i - 1):
        val = rtab[N].at(i, j)
        if not val.is_zero():
            print(f"  r_{N}({i},{j}) = {val.render()}")
print()
got = r_distribution(N, rtab)
assert got == first_desc_distribution(N, ((1, 3, 2, 4), (1, 4, 2, 3)))
print("Summing the table gives the (first, desc) distribution again.")
print()

detab = build_de_tables(8)
print(f"d_{N}(i,m) for the 1342/1423 class (m = decreasing top run)")
print("and the indecomposable slice e_{N}(m):".format(N=N))
for i in range(1, N + 1):
    cells = [detab.d_at(N, i, m).render() for m in range(1, N + 1)]
    print(f"  i={i}:  " + "   ".join(f"{c:14s}" for c in cells))
print("  e:    " + "   ".join(
    f"{detab.e_at(N, m).render():14s}" for m in range(1, N + 1)
))
assert d_distribution(N, detab) == first_desc_distribution(
    N, ((1, 3, 4, 2), (1, 4, 2, 3))
)
print()

case = A_CASES[0]
atab = build_a_table(8, case)
names = ["".join(map(str, pat)) for pat in case]
print(f"a_{N}(i,j) for the class avoiding {names[0]} and {names[1]},")
print("rows i = first letter, columns j = second letter:")
for i in range(1, N + 1):
    cells = [
        ("." if i == j else atab.at(N, i, j).render()) for j in range(1, N + 1)
    ]
    print(f"  i={i}:  " + "   ".join(f"{c:10s}" for c in cells))
assert a_distribution(N, atab) == first_desc_distribution(N, case)
print()

tri = schroeder_triangle(8)
print("Setting q = 1 and reading off the v-exponents refines the class")
print("counts by first letter; the refinement satisfies the triangle")
print("recurrence S(n,k) = S(n,k-1) + 2 S(n-1,k) - S(n-1,k-1):")
for n in range(1, 8):
    print(f"  n={n}:  " + " ".join(f"{tri.at(n, k):5d}" for k in range(1, n + 1)))
print()
print("Row sums: " + ", ".join(str(sum(tri.row(n))) for n in range(1, 8)))
print("which are the large Schroeder numbers, as they must be.")
