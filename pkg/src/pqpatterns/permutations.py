"""Permutations in one-line notation and the pattern containment order.

A permutation of length n is a tuple of the integers 1..n, e.g. (3, 1, 5, 2, 4),
matching the usual one-line notation 31524.  All functions here also accept any
sequence of ints where a permutation is expected.  Sequences of *distinct* ints
that are not necessarily 1..n ("point sequences", e.g. a subsequence of a
permutation) are flattened to their order-isomorphic permutation by
``pattern_of``.

The empty permutation () is a valid object and is contained in everything.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

Permutation = tuple[int, ...]


def is_permutation(values: Sequence[int]) -> bool:
    """Check that values is a rearrangement of 1..n.

    >>> [is_permutation(v) for v in [(), (1,), (2, 1), (1, 3), (1, 1, 2)]]
    [True, True, True, False, False]
    """
    return sorted(values) == list(range(1, len(values) + 1))


def pattern_of(entries: Sequence[int]) -> Permutation:
    """The unique permutation of 1..n order-isomorphic to a distinct-int sequence.

    >>> pattern_of((10, 12, 7, 11, 9))
    (3, 5, 1, 4, 2)
    >>> pattern_of(())
    ()
    """
    if len(set(entries)) != len(entries):
        raise ValueError(f"entries contain duplicates: {entries!r}")
    rank = {v: i for i, v in enumerate(sorted(entries), start=1)}
    return tuple(rank[v] for v in entries)


def contains(haystack: Sequence[int], needle: Sequence[int]) -> bool:
    """Pattern containment: does some subsequence of haystack have needle's pattern?

    Both arguments are permutations.  Backtracks over candidate positions with a
    value-consistency check against everything already matched; pure, so callers
    may memoize it freely.

    >>> contains((3, 1, 5, 2, 4), (3, 1, 4, 2))
    True
    >>> contains((1, 2, 3), (2, 1))
    False
    """
    n, k = len(haystack), len(needle)
    if k == 0:
        return True
    if k > n:
        return False
    if k == n:
        return tuple(haystack) == tuple(needle)
    return _embed(haystack, needle, 0, 0, [])


def _embed(hay: Sequence[int], nee: Sequence[int], j: int, start: int,
           chosen: list[int]) -> bool:
    # chosen[i] = haystack value matched to nee[i]; positions strictly increase.
    if j == len(nee):
        return True
    for pos in range(start, len(hay) - (len(nee) - j) + 1):
        v = hay[pos]
        if all((nee[i] < nee[j]) == (chosen[i] < v) for i in range(j)):
            chosen.append(v)
            if _embed(hay, nee, j + 1, pos + 1, chosen):
                return True
            chosen.pop()
    return False


def contains_ending_at_last(seq: Sequence[int], needle: Sequence[int]) -> bool:
    """Containment with the occurrence forced to use the final entry of seq.

    Supports incremental avoidance checks: a sequence built one entry at a time
    contains needle iff some occurrence ends at the entry just appended.
    """
    k = len(needle)
    if k == 0 or k > len(seq):
        return k == 0
    last = seq[-1]
    return _embed_fixed_last(seq, needle, last, 0, 0, [])


def _embed_fixed_last(seq, nee, last, j, start, chosen):
    k = len(nee)
    if j == k - 1:
        return True
    for pos in range(start, len(seq) - 1 - (k - 1 - j) + 1):
        v = seq[pos]
        if (nee[j] < nee[k - 1]) != (v < last):
            continue
        if all((nee[i] < nee[j]) == (chosen[i] < v) for i in range(j)):
            chosen.append(v)
            if _embed_fixed_last(seq, nee, last, j + 1, pos + 1, chosen):
                return True
            chosen.pop()
    return False


def avoids_all(p: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    """True iff p contains no member of basis."""
    return not any(contains(p, b) for b in basis)


def delete_point(p: Sequence[int], position: int) -> Permutation:
    """Remove the entry at a 1-based position and renormalize to a permutation.

    >>> delete_point((2, 4, 3, 1), 2)
    (2, 3, 1)
    >>> delete_point((3, 1, 5, 2, 4), 3)
    (3, 1, 2, 4)
    """
    if not 1 <= position <= len(p):
        raise ValueError(f"position {position} out of range for length {len(p)}")
    return pattern_of(p[:position - 1] + tuple(p[position:]))


def restrict_to_values(p: Sequence[int], value_set: Iterable[int]) -> tuple[int, ...]:
    """The subsequence of p whose entries are exactly value_set, in position order.

    >>> restrict_to_values((3, 1, 5, 2, 4), {1, 2, 3})
    (3, 1, 2)
    """
    values = set(value_set)
    if not values <= set(range(1, len(p) + 1)):
        bad = sorted(values - set(range(1, len(p) + 1)))
        raise ValueError(f"values {bad} outside 1..{len(p)}")
    return tuple(v for v in p if v in values)


def inversions(p: Sequence[int]) -> int:
    """Number of inverted pairs (larger value before smaller)."""
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def weak_covers_up(p: Sequence[int]) -> set[Permutation]:
    """All permutations one step above p in the weak order.

    Each cover interchanges a pair of values sitting next to each other in p
    and currently in increasing order, creating exactly one new inversion.
    The transitive closure of these covers is the order whose converse the
    allowable-pair relation generates: an output sits weakly below its input.

    >>> sorted(weak_covers_up((2, 3, 1)))
    [(3, 2, 1)]
    >>> weak_covers_up((3, 2, 1))
    set()
    """
    covers = set()
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            covers.add(tuple(q))
    return covers


def direct_sum(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Concatenation with b's values shifted above a's.

    >>> direct_sum((1, 2), (2, 1))
    (1, 2, 4, 3)
    """
    return tuple(a) + tuple(v + len(a) for v in b)


def skew_sum(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Concatenation with a's values shifted above b's.

    >>> skew_sum((2, 1), (1,))
    (3, 2, 1)
    """
    return tuple(v + len(b) for v in a) + tuple(b)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of 1..n exactly once, in lexicographic order.

    >>> list(all_permutations(0))
    [()]
    >>> sum(1 for _ in all_permutations(4))
    24
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    return iter(itertools.permutations(range(1, n + 1)))


# Cell tags for inflations: a monotone run (possibly empty) or exactly one point.
INCREASING = "I"
DECREASING = "D"
SINGLETON = "1"


@dataclass(frozen=True)
class InflationSkeleton:
    """A skeleton permutation with one cell tag ('I', 'D' or '1') per entry.

    Describes the set of permutations obtained by replacing entry i of the
    skeleton with a block of consecutive values: an increasing run for 'I', a
    decreasing run for 'D' (runs may be empty), or exactly one point for '1'.
    Blocks are ordered by the skeleton's values.
    """
    skeleton: Permutation
    cells: tuple[str, ...]

    def __post_init__(self):
        if not is_permutation(self.skeleton):
            raise ValueError(f"skeleton {self.skeleton!r} is not a permutation")
        if len(self.cells) != len(self.skeleton):
            raise ValueError("one cell tag required per skeleton entry")
        bad = set(self.cells) - {INCREASING, DECREASING, SINGLETON}
        if bad:
            raise ValueError(f"unknown cell tags: {sorted(bad)}")


def inflation_members(skel: InflationSkeleton, n: int) -> set[Permutation]:
    """All length-n permutations the skeleton inflates to.

    >>> sorted(inflation_members(InflationSkeleton((2, 1, 3), ("I", "I", "I")), 3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    """
    k = len(skel.skeleton)
    members: set[Permutation] = set()
    for sizes in _cell_sizes(skel.cells, n):
        # Allocate value blocks bottom-up in skeleton-value order.
        starts = [0] * k
        taken = 0
        for v in range(1, k + 1):
            i = skel.skeleton.index(v)
            starts[i] = taken + 1
            taken += sizes[i]
        word: list[int] = []
        for i in range(k):
            block = range(starts[i], starts[i] + sizes[i])
            word.extend(block if skel.cells[i] != DECREASING else reversed(block))
        members.add(tuple(word))
    return members


def _cell_sizes(cells: Sequence[str], total: int) -> Iterator[tuple[int, ...]]:
    if not cells:
        if total == 0:
            yield ()
        return
    low, high = (1, 1) if cells[0] == SINGLETON else (0, total)
    for size in range(low, min(high, total) + 1):
        for rest in _cell_sizes(cells[1:], total - size):
            yield (size,) + rest
