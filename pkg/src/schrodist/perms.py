"""Pattern-avoiding permutations and their joint statistics.

Permutations are tuples of the letters 1..n.  The six pattern pairs in
``EQUIDISTRIBUTED_PAIRS`` all carve out classes counted by the large
Schroder numbers and sharing the joint (first letter, descents)
distribution; their reverses share (last letter, ascents).
"""

from __future__ import annotations

from itertools import permutations as _itperms
from typing import Iterable, Iterator, Sequence

from .mpoly import MPoly

Perm = tuple[int, ...]


class InputNotInClassError(ValueError):
    """The permutation is outside the avoidance class required by the statistic."""


EQUIDISTRIBUTED_PAIRS: tuple[tuple[Perm, Perm], ...] = (
    ((1, 2, 4, 3), (1, 3, 2, 4)),
    ((1, 2, 4, 3), (1, 3, 4, 2)),
    ((1, 2, 4, 3), (1, 4, 2, 3)),
    ((1, 3, 2, 4), (1, 3, 4, 2)),
    ((1, 3, 2, 4), (1, 4, 2, 3)),
    ((1, 3, 4, 2), (1, 4, 2, 3)),
)

ALL_LENGTH4_PATTERNS: tuple[Perm, ...] = tuple(sorted(_itperms(range(1, 5))))


def pattern_from_string(text: str) -> Perm:
    digits = tuple(int(ch) for ch in text.strip())
    if sorted(digits) != list(range(1, len(digits) + 1)):
        raise ValueError(f"not a pattern: {text!r}")
    return digits


def pair_from_string(text: str) -> tuple[Perm, Perm]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated patterns, got {text!r}")
    a, b = (pattern_from_string(p) for p in parts)
    return (a, b) if a <= b else (b, a)


def pair_id(pair: Sequence[Perm]) -> str:
    return ",".join("".join(str(d) for d in p) for p in sorted(pair))


def perm_from_string(text: str) -> Perm:
    return tuple(int(tok) for tok in text.split())


def perm_to_string(perm: Perm) -> str:
    return " ".join(str(x) for x in perm)


def reverse_pattern(p: Perm) -> Perm:
    return tuple(reversed(p))


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def perm_stats(perm: Perm) -> tuple[int, int, int, int]:
    """(first, last, desc, asc) of a nonempty permutation."""
    if not is_permutation(perm):
        raise ValueError(f"not a permutation: {perm}")
    desc = sum(1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])
    return perm[0], perm[-1], desc, len(perm) - 1 - desc


def contains_pattern(perm: Sequence[int], pattern: Perm) -> bool:
    """Classical containment test: depth-first occurrence search with
    remaining-length pruning and incremental order consistency."""
    n, m = len(perm), len(pattern)
    if m > n:
        return False
    chosen: list[int] = []

    def extend(slot: int, start: int) -> bool:
        if slot == m:
            return True
        for pos in range(start, n - (m - slot) + 1):
            val = perm[pos]
            ok = True
            for j, prev in enumerate(chosen):
                if (val > prev) != (pattern[slot] > pattern[j]):
                    ok = False
                    break
            if ok:
                chosen.append(val)
                if extend(slot + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids_all(perm: Sequence[int], patterns: Iterable[Perm]) -> bool:
    return not any(contains_pattern(perm, p) for p in patterns)


# ----------------------------------------------------------------------
# Lexicographic enumeration of avoiders.
#
# The search inserts letters left to right and prunes a prefix as soon as
# the newest letter completes an occurrence.  For the length-4 patterns
# whose smallest entry sits first or last (the six pairs and their
# reverses), the "does letter v complete an occurrence" predicate is an
# interval condition on v determined by pairs of prefix positions, so each
# node maintains a bitmask of forbidden next letters in O(prefix) time.
# ----------------------------------------------------------------------


def _range_bits(lo: int, hi: int) -> int:
    # bits for values strictly between lo and hi
    if hi <= lo + 1:
        return 0
    return ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)


def _delta_1243(prefix, pre_min, mask_before, w, n):
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb < w and pre_min[b] < pb:
            bits |= _range_bits(pb, w)
    return bits


def _delta_1324(prefix, pre_min, mask_before, w, n):
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb > w and pre_min[b] < w:
            bits |= _range_bits(pb, n + 1)
    return bits


def _delta_1342(prefix, pre_min, mask_before, w, n):
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb < w:
            bits |= _range_bits(pre_min[b], pb)
    return bits


def _delta_1423(prefix, pre_min, mask_before, w, n):
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb > w and pre_min[b] < w:
            bits |= _range_bits(w, pb)
    return bits


def _delta_4231(prefix, pre_min, mask_before, w, n):
    # triple (a, b, new) with prefix[b] < w < prefix[a]; forbids v < prefix[b]
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb < w and mask_before[b] >> (w + 1):
            bits |= _range_bits(0, pb)
    return bits


def _delta_3241(prefix, pre_min, mask_before, w, n):
    # triple with prefix[b] < prefix[a] < w; forbids v < prefix[b]
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb < w and mask_before[b] & _range_bits(pb, w):
            bits |= _range_bits(0, pb)
    return bits


def _delta_2431(prefix, pre_min, mask_before, w, n):
    # triple with prefix[a] < w < prefix[b]; forbids v < prefix[a] (largest such a)
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb > w:
            below = mask_before[b] & ((1 << w) - 1)
            if below:
                bits |= _range_bits(0, below.bit_length() - 1)
    return bits


def _delta_3421(prefix, pre_min, mask_before, w, n):
    # triple with w < prefix[a] < prefix[b]; forbids v < w
    bits = 0
    for b in range(1, len(prefix)):
        pb = prefix[b]
        if pb > w and mask_before[b] & _range_bits(w, pb):
            bits |= _range_bits(0, w)
    return bits


_FAST_DELTAS = {
    (1, 2, 4, 3): _delta_1243,
    (1, 3, 2, 4): _delta_1324,
    (1, 3, 4, 2): _delta_1342,
    (1, 4, 2, 3): _delta_1423,
    (4, 2, 3, 1): _delta_4231,
    (3, 2, 4, 1): _delta_3241,
    (2, 4, 3, 1): _delta_2431,
    (3, 4, 2, 1): _delta_3421,
}


def _completes_generic(prefix: list[int], v: int, pattern: Perm) -> bool:
    # does placing v after prefix complete an occurrence ending at v?
    m = len(pattern)
    k = len(prefix)
    if m - 1 > k:
        return False
    chosen: list[int] = []

    def extend(slot: int, start: int) -> bool:
        if slot == m - 1:
            for j, prev in enumerate(chosen):
                if (v > prev) != (pattern[m - 1] > pattern[j]):
                    return False
            return True
        for pos in range(start, k - (m - 1 - slot) + 1):
            val = prefix[pos]
            ok = True
            for j, prev in enumerate(chosen):
                if (val > prev) != (pattern[slot] > pattern[j]):
                    ok = False
                    break
            if ok:
                chosen.append(val)
                if extend(slot + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def enumerate_avoiders(n: int, patterns: Iterable[Perm]) -> Iterator[Perm]:
    """Yield the members of S_n avoiding every pattern, in lexicographic order."""
    pats = tuple(dict.fromkeys(tuple(p) for p in patterns))
    for p in pats:
        if not is_permutation(p):
            raise ValueError(f"not a pattern: {p}")
    if n <= 0:
        if n == 0:
            yield ()
        return
    fast = [p for p in pats if p in _FAST_DELTAS]
    slow = [p for p in pats if p not in _FAST_DELTAS]
    deltas = [_FAST_DELTAS[p] for p in fast]

    prefix: list[int] = []
    pre_min: list[int] = []
    mask_before: list[int] = []
    big = n + 1

    def walk(used: int, forbidden: int) -> Iterator[Perm]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            bit = 1 << v
            if used & bit or forbidden & bit:
                continue
            if slow and any(_completes_generic(prefix, v, p) for p in slow):
                continue
            new_forbidden = forbidden
            for fn in deltas:
                new_forbidden |= fn(prefix, pre_min, mask_before, v, n)
            pre_min.append(min(pre_min[-1], prefix[-1]) if prefix else big)
            mask_before.append((mask_before[-1] | (1 << prefix[-1])) if prefix else 0)
            prefix.append(v)
            yield from walk(used | bit, new_forbidden)
            prefix.pop()
            pre_min.pop()
            mask_before.pop()

    yield from walk(0, 0)


def count_avoiders(n: int, patterns: Iterable[Perm]) -> int:
    return sum(1 for _ in enumerate_avoiders(n, patterns))


def first_desc_distribution(n: int, pair: Sequence[Perm]) -> MPoly:
    """Sum of v^first * q^desc over the avoiders of the pair."""
    counts: dict[tuple[int, int], int] = {}
    for perm in enumerate_avoiders(n, pair):
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        key = (desc, perm[0])
        counts[key] = counts.get(key, 0) + 1
    return MPoly({(d, f, 0, 0): c for (d, f), c in counts.items()})


def asc_last_distribution(n: int, pair: Sequence[Perm]) -> MPoly:
    """Sum of v^last * q^asc over the avoiders of the pair."""
    counts: dict[tuple[int, int], int] = {}
    for perm in enumerate_avoiders(n, pair):
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        key = (n - 1 - desc, perm[-1])
        counts[key] = counts.get(key, 0) + 1
    return MPoly({(a, l, 0, 0): c for (a, l), c in counts.items()})


# ----------------------------------------------------------------------
# Insertion statistics on S_n(1324, 1423).
# ----------------------------------------------------------------------

ACT_PAIR: tuple[Perm, Perm] = ((1, 3, 2, 4), (1, 4, 2, 3))


def act_dact(perm: Perm) -> tuple[int, int]:
    """Active sites and active descents of a member of S_n(1324, 1423).

    A site is a gap of the permutation (written on 2..n+1) where the new
    minimum 1 can be inserted without creating 1324 or 1423; the active
    sites are the act rightmost gaps.  When act <= n the leftmost active
    site always follows the rightmost letter starting a 213 or 312 and is
    not counted as an active descent; the remaining active descents are the
    sites sitting at descents of the permutation.
    """
    n = len(perm)
    if not is_permutation(perm):
        raise ValueError(f"not a permutation: {perm}")
    if contains_pattern(perm, (1, 3, 2, 4)) or contains_pattern(perm, (1, 4, 2, 3)):
        raise InputNotInClassError(f"{perm} contains 1324 or 1423")
    # b (1-based) starts a 213 or 312 iff some later c has a value below
    # perm[b] and is itself followed by something larger.
    suffix_max = 0
    ok_min = n + 1  # min over c > current of perm[c] with a larger element after c
    rightmost = 0
    for b in range(n - 1, 0, -1):
        val_c = perm[b]  # position b+1 in 1-based terms when used as c
        if suffix_max > val_c and val_c < ok_min:
            ok_min = val_c
        suffix_max = max(suffix_max, val_c)
        if ok_min < perm[b - 1]:
            rightmost = b  # 1-based position of the starter
            break
    act = n + 1 if rightmost == 0 else n - rightmost + 1
    lo = max(1, n - act + 2)
    dact = sum(1 for p in range(lo, n) if perm[p - 1] > perm[p])
    return act, dact


def act_dact_by_insertion(perm: Perm) -> tuple[int, int]:
    """Reference implementation of :func:`act_dact` by literally inserting a
    new minimum into every gap; quadratic in n times the containment cost."""
    n = len(perm)
    if contains_pattern(perm, (1, 3, 2, 4)) or contains_pattern(perm, (1, 4, 2, 3)):
        raise InputNotInClassError(f"{perm} contains 1324 or 1423")
    shifted = [x + 1 for x in perm]
    active = []
    for gap in range(n + 1):
        cand = shifted[:gap] + [1] + shifted[gap:]
        if avoids_all(cand, ACT_PAIR):
            active.append(gap)
    act = len(active)
    assert active == list(range(n + 1 - act, n + 1)), "active sites must be a suffix"
    descents = {p for p in range(1, n) if perm[p - 1] > perm[p]}
    active_desc = [g for g in active if g in descents]
    if act <= n and active:
        # the leftmost active site follows the rightmost 213/312 starter
        if active[0] in descents:
            active_desc = [g for g in active_desc if g != active[0]]
    return act, len(active_desc)


def act_dact_distribution(n: int) -> dict[tuple[int, int], MPoly]:
    """Group S_n(1324,1423) by (act, dact); values are sums of p^first q^desc."""
    out: dict[tuple[int, int], dict[tuple[int, int, int, int], int]] = {}
    for perm in enumerate_avoiders(n, ACT_PAIR):
        a, d = act_dact(perm)
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        exp = (desc, 0, 0, perm[0])
        bucket = out.setdefault((a, d), {})
        bucket[exp] = bucket.get(exp, 0) + 1
    return {key: MPoly(terms) for key, terms in out.items()}


def first_two_distribution(n: int, pair: Sequence[Perm]) -> dict[tuple[int, int], MPoly]:
    """Group the avoiders of the pair by their first two letters; values
    are sums of q^desc.  Requires n >= 2."""
    if n < 2:
        raise ValueError("need at least two letters")
    out: dict[tuple[int, int], dict[tuple[int, int, int, int], int]] = {}
    for perm in enumerate_avoiders(n, pair):
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        exp = (desc, 0, 0, 0)
        bucket = out.setdefault((perm[0], perm[1]), {})
        bucket[exp] = bucket.get(exp, 0) + 1
    return {key: MPoly(terms) for key, terms in out.items()}


DE_PAIR: tuple[Perm, Perm] = ((1, 3, 4, 2), (1, 4, 2, 3))


def _sorted_top_extent(perm: Perm) -> int:
    """Largest m such that the m biggest values appear in decreasing order."""
    n = len(perm)
    pos = {v: i for i, v in enumerate(perm)}
    m = 1
    while m < n and pos[n - m] > pos[n - m + 1]:
        m += 1
    return m


def _has_sorted_suffix(perm: Perm, a: int) -> bool:
    return set(perm[len(perm) - a :]) == set(range(1, a + 1))


def decreasing_top_distribution(n: int) -> dict[tuple[int, int], MPoly]:
    """Group S_n(1342,1423) members whose top m values decrease left to
    right by (first letter, m); values are sums of q^desc."""
    out: dict[tuple[int, int], dict[tuple[int, int, int, int], int]] = {}
    for perm in enumerate_avoiders(n, DE_PAIR):
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        exp = (desc, 0, 0, 0)
        for m in range(1, _sorted_top_extent(perm) + 1):
            bucket = out.setdefault((perm[0], m), {})
            bucket[exp] = bucket.get(exp, 0) + 1
    return {key: MPoly(terms) for key, terms in out.items()}


def indecomposable_top_distribution(n: int) -> dict[int, MPoly]:
    """Like decreasing_top_distribution summed over first letters, but
    restricted to members with no proper suffix equal to {1..a}."""
    out: dict[int, dict[tuple[int, int, int, int], int]] = {}
    for perm in enumerate_avoiders(n, DE_PAIR):
        desc = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        exp = (desc, 0, 0, 0)
        for m in range(1, _sorted_top_extent(perm) + 1):
            if any(_has_sorted_suffix(perm, a) for a in range(1, n - m + 1)):
                continue
            bucket = out.setdefault(m, {})
            bucket[exp] = bucket.get(exp, 0) + 1
    return {key: MPoly(terms) for key, terms in out.items()}
