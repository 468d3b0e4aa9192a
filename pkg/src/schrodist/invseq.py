"""Inversion sequences in the positive convention and the (>=, -, >) class.

A sequence e_1..e_n with 1 <= e_i <= i belongs to the class when no three
indices i < j < k satisfy e_i >= e_j and e_i > e_k (nothing is required of
e_j versus e_k).  The joint statistic of interest is (last letter, number
of distinct letters), weighted q^(dist-1) v^last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .mpoly import MPoly

InvSeq = tuple[int, ...]


def seq_from_string(text: str) -> InvSeq:
    return tuple(int(tok) for tok in text.split())


def seq_to_string(e: InvSeq) -> str:
    return " ".join(str(x) for x in e)


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return all(1 <= v <= i + 1 for i, v in enumerate(e))


def from_permutation(perm: Sequence[int]) -> InvSeq:
    """e_i = 1 + #(entries to the right of the letter i that are smaller
    than i); a bijection onto the sequences with 1 <= e_i <= i."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation: {perm}")
    pos = {v: p for p, v in enumerate(perm)}
    out = []
    for i in range(1, n + 1):
        p = pos[i]
        out.append(1 + sum(1 for j in range(p + 1, n) if perm[j] < i))
    return tuple(out)


def avoids(e: Sequence[int]) -> bool:
    """Membership test via the running prefix height.

    A later pair (j, k) with e_j >= e_k exists below some earlier letter
    iff that letter exceeds the incoming entry while already witnessed by
    a weak descent, so it suffices to track the largest witnessed letter
    (the height of the prefix read so far) and the prefix maximum.
    """
    height = 0
    biggest = 0
    for v in e:
        if v < height:
            return False
        if biggest >= v:
            height = biggest
        else:
            biggest = v
    return True


def avoids_naive(e: Sequence[int]) -> bool:
    """Literal triple scan; kept as the reference for the fast test."""
    n = len(e)
    for i in range(n):
        for j in range(i + 1, n):
            if e[i] >= e[j]:
                for k in range(j + 1, n):
                    if e[i] > e[k]:
                        return False
    return True


def seq_stats(e: Sequence[int]) -> tuple[int, int, int]:
    """(last, dist, hght) of a nonempty sequence.

    hght is the greatest letter sitting at an adjacent weak descent
    e_i >= e_{i+1}, with sentinel 0 for strictly increasing sequences.
    """
    if not e:
        raise ValueError("empty sequence has no statistics")
    hght = 0
    for i in range(len(e) - 1):
        if e[i] >= e[i + 1]:
            hght = max(hght, e[i])
    return e[-1], len(set(e)), hght


def enumerate_members(n: int) -> Iterator[InvSeq]:
    """All of I_n(>=,-,>) in lexicographic order.

    Appending v to a member keeps membership iff v is at least the prefix
    height, and the height afterwards is the prefix maximum whenever that
    maximum weakly exceeds v.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    entries: list[int] = []

    def walk(k: int, height: int, biggest: int) -> Iterator[InvSeq]:
        if k > n:
            yield tuple(entries)
            return
        for v in range(max(1, height), k + 1):
            entries.append(v)
            yield from walk(k + 1, biggest if biggest >= v else height, max(biggest, v))
            entries.pop()

    yield from walk(1, 0, 0)


def last_dist_distribution(n: int) -> MPoly:
    """Sum of v^last * q^(dist-1) over I_n(>=,-,>)."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[tuple[int, int], int] = {}
    for e in enumerate_members(n):
        last, dist, _ = seq_stats(e)
        key = (dist - 1, last)
        counts[key] = counts.get(key, 0) + 1
    return MPoly({(d, l, 0, 0): c for (d, l), c in counts.items()})


@dataclass(frozen=True)
class UTable:
    """Polynomials u_n(i, j) = sum of q^(dist-1) over members with
    last = i and hght = j; absent keys are zero, and the strictly
    increasing sequence (height 0) is never stored."""

    n: int
    values: dict[tuple[int, int], MPoly]

    def at(self, i: int, j: int) -> MPoly:
        return self.values.get((i, j), MPoly.zero())

    def json_rows(self) -> list[dict]:
        rows = []
        for (i, j) in sorted(self.values):
            rows.append({"n": self.n, "i": i, "j": j, "poly": self.values[(i, j)].render()})
        return rows


def u_oracle(n: int) -> UTable:
    """Brute-force UTable by full enumeration; for cross-checking."""
    if n < 2:
        raise ValueError("n must be at least 2")
    values: dict[tuple[int, int], MPoly] = {}
    grouped: dict[tuple[int, int], dict[tuple[int, int, int, int], int]] = {}
    for e in enumerate_members(n):
        last, dist, hght = seq_stats(e)
        if hght == 0:
            continue
        bucket = grouped.setdefault((last, hght), {})
        exp = (dist - 1, 0, 0, 0)
        bucket[exp] = bucket.get(exp, 0) + 1
    for key, terms in grouped.items():
        values[key] = MPoly(terms)
    return UTable(n, values)
