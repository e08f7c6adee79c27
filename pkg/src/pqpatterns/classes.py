"""Pattern classes and their images under priority-queue transduction.

A pattern class C = Av(B) is the set of permutations avoiding every element of
the basis B.  Feeding all of C through a priority queue yields another pattern
class, written C*A here (A being the allowable-pair relation); the reverse
image A*C is the set of inputs the machine can turn into some member of C.

Membership of tau in C*A reduces to a pruned search for a linear extension of
P(tau) avoiding C's basis; ``in_ca_oracle`` is the intentionally naive
cross-check that scans all inputs.  ``basis_of_ca`` finds the minimal
permutations outside C*A up to a length bound, which is exactly the basis of
C*A truncated at that bound.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .machine import all_outputs, is_allowable_sim
from .permutations import (
    Permutation,
    all_permutations,
    avoids_all,
    contains,
    delete_point,
    is_permutation,
    pattern_of,
    weak_covers_up,
)
from .poset import build_poset, exists_extension_avoiding, has_alpha_chain


class VerificationError(Exception):
    """A verification run found a result contradicting what it asserts."""


@dataclass(frozen=True)
class PatternClass:
    """Av(basis): all permutations avoiding every basis element.

    The constructor normalizes the basis to a minimal antichain, discarding any
    element that contains another (it would be redundant).
    """
    basis: frozenset[Permutation]

    def __init__(self, basis: Iterable[Sequence[int]]):
        elements = {tuple(b) for b in basis}
        for b in elements:
            if not is_permutation(b):
                raise ValueError(f"basis element {b!r} is not a permutation")
        minimal = frozenset(
            b for b in elements
            if not any(other != b and contains(b, other) for other in elements))
        object.__setattr__(self, "basis", minimal)

    def __repr__(self):
        shown = ", ".join("".join(map(str, b)) if b else "()"
                          for b in sorted(self.basis, key=lambda b: (len(b), b)))
        return f"Av({shown})"


def avoidance_class(*elements: Sequence[int]) -> PatternClass:
    """Convenience constructor: avoidance_class((3,2,1), (1,3,2))."""
    return PatternClass(elements)


def class_member(p: Sequence[int], c: PatternClass) -> bool:
    """Is p in the class, i.e. does p avoid the whole basis?"""
    return avoids_all(p, c.basis)


def in_ca(tau: Sequence[int], c: PatternClass) -> bool:
    """Is tau an output the machine can produce from some input in c?

    Equivalent to P(tau) having a linear extension that avoids c's basis.  A
    member of c is always such an output (it can pass through unchanged), which
    settles most positive queries without a search.
    """
    if class_member(tau, c):
        return True
    return exists_extension_avoiding(build_poset(tau), c.basis)


def in_ca_oracle(tau: Sequence[int], c: PatternClass) -> bool:
    """Naive reference decider for membership in C*A.

    Scans every permutation of the same length and simulates the machine on
    each; kept deliberately independent of the poset route so the two can be
    played against each other.
    """
    tau = tuple(tau)
    return any(avoids_all(sigma, c.basis) and is_allowable_sim(sigma, tau)
               for sigma in all_permutations(len(tau)))


def witness_patterns(alpha: Sequence[int]) -> frozenset[Permutation]:
    """The minimal patterns whose containment in tau marks an alpha-chain in P(tau).

    A chain a1 < a2 < ... < ak in P(tau) with values forming pattern alpha is
    witnessed inside tau by the ai themselves plus, for every ascent ai < ai+1,
    one separating value bi > ai+1 between them.  Enumerating every relative
    placement of the separators gives the witness set.

    >>> sorted("".join(map(str, w)) for w in witness_patterns((1, 2, 3)))
    ['13254', '14253', '15243']
    >>> sorted(witness_patterns((2, 3, 1)))
    [(2, 4, 3, 1)]
    """
    alpha = tuple(alpha)
    k = len(alpha)
    if k == 0:
        raise ValueError("chain pattern must be nonempty")
    # Slot layout: value a_i, then a separator slot after each ascent of alpha.
    slots: list[tuple[str, int]] = []
    for i in range(k):
        slots.append(("a", i))
        if i + 1 < k and alpha[i] < alpha[i + 1]:
            slots.append(("b", i))
    total = len(slots)

    witnesses = set()
    for word in itertools.permutations(range(1, total + 1)):
        a_values = [word[j] for j, (kind, _) in enumerate(slots) if kind == "a"]
        if pattern_of(a_values) != alpha:
            continue
        ok = True
        for j, (kind, i) in enumerate(slots):
            if kind == "b" and word[j] < a_values[i + 1]:
                ok = False
                break
        if ok:
            witnesses.add(word)
    minimal = frozenset(w for w in witnesses
                        if not any(v != w and contains(w, v) for v in witnesses))
    return minimal


def chain_test_member(tau: Sequence[int], alpha: Sequence[int]) -> bool:
    """Membership of tau in Av(alpha)*A by the chain criterion.

    No alpha-chain in P(tau) is always necessary for membership, and for
    len(alpha) = 3 it is also sufficient.
    """
    return not has_alpha_chain(build_poset(tau), alpha)


@dataclass(frozen=True)
class BasisReport:
    """Result of a bounded minimal-basis search for C*A.

    Every listed element is outside C*A while all its one-point deletions sit
    inside, which makes the list automatically an antichain; the search is
    exhaustive for lengths up to ``complete_up_to`` and says nothing beyond.
    """
    basis: tuple[Permutation, ...]
    complete_up_to: int
    examined: int = 0
    pruned: int = 0


def ca_members_by_length(c: PatternClass, max_len: int,
                         jobs: int = 1) -> tuple[list[dict[Permutation, bool]],
                                                 tuple[int, int]]:
    """Membership tables for C*A at every length 0..max_len, built bottom-up.

    A candidate with a deletion already outside C*A is outside as well (the
    class is closed downwards), so only candidates whose deletions all lie
    inside ever reach the extension search.  Returns the per-length tables and
    (examined, pruned) counts, where pruned counts candidates settled by the
    deletion shortcut alone.

    With jobs > 1, each length is partitioned across worker processes; workers
    return their chunk's table and the chunks are merged before the next length
    starts.
    """
    empty_in = class_member((), c)
    tables: list[dict[Permutation, bool]] = [{(): empty_in}]
    examined = pruned = 0
    for length in range(1, max_len + 1):
        prev = tables[-1]
        perms = list(all_permutations(length))
        examined += len(perms)
        if jobs > 1 and len(perms) >= 2000:
            table: dict[Permutation, bool] = {}
            n_pruned = 0
            chunks = [perms[i::jobs * 4] for i in range(jobs * 4)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                args = ((chunk, sorted(c.basis), prev) for chunk in chunks)
                for part, part_pruned in pool.map(_membership_chunk, args):
                    table.update(part)
                    n_pruned += part_pruned
        else:
            table, n_pruned = _membership_chunk((perms, sorted(c.basis), prev))
        pruned += n_pruned
        tables.append(table)
    return tables, (examined, pruned)


def _membership_chunk(work: tuple[list[Permutation], list[Permutation],
                                  dict[Permutation, bool]]
                      ) -> tuple[dict[Permutation, bool], int]:
    perms, basis, prev = work
    c = PatternClass(basis)
    table: dict[Permutation, bool] = {}
    pruned = 0
    for tau in perms:
        if not all(prev[delete_point(tau, i)] for i in range(1, len(tau) + 1)):
            table[tau] = False
            pruned += 1
        else:
            table[tau] = in_ca(tau, c)
    return table, pruned


def basis_of_ca(c: PatternClass, max_len: int, jobs: int = 1) -> BasisReport:
    """All minimal permutations outside C*A with length at most max_len.

    >>> basis_of_ca(PatternClass([(1, 3, 2)]), 5).basis
    ((1, 4, 3, 2),)
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    tables, (examined, pruned) = ca_members_by_length(c, max_len, jobs=jobs)
    found = []
    for length in range(1, max_len + 1):
        for tau, member in tables[length].items():
            if not member and all(tables[length - 1][delete_point(tau, i)]
                                  for i in range(1, length + 1)):
                found.append(tau)
    found.sort(key=lambda t: (len(t), t))
    return BasisReport(tuple(found), max_len, examined, pruned)


def is_weak_closed(c: PatternClass, max_len: int) -> bool:
    """Does every permutation weakly above a basis element contain one?

    Exactly when this holds is the class unchanged by the machine (C = C*A).
    Covers preserve length, so the upward closure of an element is searched
    entirely within its own symmetric group; basis elements longer than
    max_len are outside the bounded check.

    >>> is_weak_closed(PatternClass([(3, 2, 1)]), 7)
    True
    >>> is_weak_closed(PatternClass([(1, 2)]), 2)
    False
    """
    for b in c.basis:
        if len(b) > max_len:
            continue
        frontier = [b]
        seen = {b}
        while frontier:
            q = frontier.pop()
            if avoids_all(q, c.basis):
                return False
            for cover in weak_covers_up(q):
                if cover not in seen:
                    seen.add(cover)
                    frontier.append(cover)
    return True


#: in_ac materializes the full output set, which is only sensible up to here.
IN_AC_MAX_LEN = 10


def in_ac(sigma: Sequence[int], c: PatternClass) -> bool:
    """Can the machine turn sigma into some member of c?

    Materializes every output of sigma, so lengths beyond IN_AC_MAX_LEN are
    rejected.
    """
    sigma = tuple(sigma)
    if len(sigma) > IN_AC_MAX_LEN:
        raise ValueError(f"input length {len(sigma)} exceeds supported "
                         f"maximum {IN_AC_MAX_LEN}")
    return any(class_member(tau, c) for tau in all_outputs(sigma))


def family_2431(m: int) -> Permutation:
    """The length-(m+1) member of the infinite basis family of Av(2431)*A.

    Defined for even m >= 8; the written-out template degenerates below that.

    >>> family_2431(12)
    (2, 13, 4, 1, 6, 3, 8, 5, 10, 12, 7, 11, 9)
    """
    if m % 2 != 0:
        raise ValueError(f"m must be even, got {m}")
    if m < 8:
        raise ValueError(f"m must be at least 8, got {m}")
    values = [2, m + 1]
    for e in range(4, m - 3, 2):
        values += [e, e - 3]
    values += [m - 2, m, m - 5, m - 1, m - 3]
    return tuple(values)


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of checking one family member against Av(2431)*A minimality."""
    m: int
    member: Permutation
    excluded: bool
    deletions_inside: tuple[bool, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.excluded and all(self.deletions_inside)


def verify_family_member(m: int) -> FamilyReport:
    """Check that the family member for m is a minimal non-member of Av(2431)*A.

    Verifies that the member itself lies outside Av(2431)*A while every
    one-point deletion lies inside; raises VerificationError otherwise.
    """
    member = family_2431(m)
    c = PatternClass([(2, 4, 3, 1)])
    excluded = not in_ca(member, c)
    deletions = tuple(in_ca(delete_point(member, i), c)
                      for i in range(1, len(member) + 1))
    report = FamilyReport(m, member, excluded, deletions)
    if not report.passed:
        raise VerificationError(
            f"family member for m={m} failed: excluded={excluded}, "
            f"deletions inside={deletions}")
    return report
