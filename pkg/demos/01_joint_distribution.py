"""Three roads to the same polynomial.

The packages's central claim: on each of six permutation classes cut out
by a pair of length-4 patterns, the joint distribution of (first letter,
number of descents) coincides with the joint distribution of (last
letter, number of distinct letters) on a family of inversion sequences.
This script computes one such distribution three independent ways and
shows the results agree coefficient for coefficient.
"""

from schrodist.cli import pair_distribution, sequence_distribution
from schrodist.perms import (
    EQUIDISTRIBUTED_PAIRS,
    enumerate_avoiders,
    pair_id,
    perm_stats,
)
from schrodist.invseq import enumerate_members, seq_stats

N = 5
PAIR = EQUIDISTRIBUTED_PAIRS[4]  # avoid 1324 and 1423

print(f"Class: permutations of length {N} avoiding both {pair_id(PAIR)}")
print()

members = sorted(enumerate_avoiders(N, PAIR))
print(f"The class has {len(members)} members (a large Schroeder number).")
print("A few of them, with (first letter, descents):")
for perm in members[:6]:
    first, _, desc, _ = perm_stats(perm)
    print(f"  {''.join(map(str, perm))}   first={first}  desc={desc}")
print("  ...")
print()

seqs = list(enumerate_members(N))
print(f"The inversion-sequence family at n={N} also has {len(seqs)} members.")
print("A few of them, with (last letter, distinct letters):")
for e in seqs[:6]:
    last, dist, _ = seq_stats(e)
    print(f"  {' '.join(map(str, e))}   last={last}  dist={dist}")
print("  ...")
print()

# Weighting is v^first q^desc on the permutation side and
# v^last q^(dist-1) on the sequence side.
brute = pair_distribution("brute", PAIR, N, order=N)
dp = pair_distribution("dp", PAIR, N, order=N)
series = pair_distribution("series", PAIR, N, order=12)
seq_side = sequence_distribution("brute", N, order=N)

print("Permutation side, brute force:      ", brute.render())
print("Permutation side, recurrence tables:", dp.render())
print("Permutation side, closed form:      ", series.render())
print("Sequence side, brute force:         ", seq_side.render())
print()
assert brute == dp == series == seq_side
print("All four agree exactly.")
print()

print(f"And the same happens for every pair at every size; at n={N}:")
want = sequence_distribution("brute", N, order=N)
for pair in EQUIDISTRIBUTED_PAIRS:
    got = pair_distribution("brute", pair, N, order=N)
    mark = "==" if got == want else "!="
    print(f"  {pair_id(pair)}  {mark}  sequence family")
