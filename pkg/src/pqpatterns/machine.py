"""Priority-queue runs and the allowable-pair relation.

The machine holds a set of values; at any time it may insert the next input
value, or remove (and emit) the smallest value currently held.  A pair of
equal-length permutations (sigma, tau) is *allowable* when some schedule of
inserts and removes fed sigma emits exactly tau.

Two independent deciders for allowability live here: direct simulation
(``is_allowable_sim``) and the forbidden-pair criterion
(``is_allowable_forbidden``): a pair is allowable iff it contains neither
(12, 21) nor (321, 132) in the pair order.  A third decider, via linear
extensions of the output's constraint poset, lives in :mod:`pqpatterns.poset`.
"""
from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .permutations import Permutation, is_permutation, pattern_of

# The two minimal non-allowable pairs; everything above either of them in the
# pair order is non-allowable, and nothing else is.
FORBIDDEN_PAIRS = (((1, 2), (2, 1)), ((3, 2, 1), (1, 3, 2)))


@dataclass(frozen=True)
class PQState:
    """A machine configuration: held values, unread input, emitted output."""
    contents: frozenset[int]
    remaining_input: tuple[int, ...]
    output_so_far: tuple[int, ...]

    def __post_init__(self):
        fields = (self.contents, set(self.remaining_input), set(self.output_so_far))
        total = sum(len(f) for f in fields)
        if len(frozenset.union(frozenset(), *fields)) != total:
            raise ValueError("contents, remaining input and output must be disjoint")


def initial_state(input_perm: Sequence[int]) -> PQState:
    """The machine before any step: everything still unread."""
    return PQState(frozenset(), tuple(input_perm), ())


def step_insert(s: PQState) -> PQState:
    """Move the next input value into the queue."""
    if not s.remaining_input:
        raise ValueError("invalid transition: no input left to insert")
    return PQState(s.contents | {s.remaining_input[0]},
                   s.remaining_input[1:], s.output_so_far)


def step_remove_min(s: PQState) -> PQState:
    """Emit the smallest value currently held."""
    if not s.contents:
        raise ValueError("invalid transition: queue is empty")
    m = min(s.contents)
    return PQState(s.contents - {m}, s.remaining_input, s.output_so_far + (m,))


def all_outputs(input_perm: Sequence[int]) -> set[Permutation]:
    """Every output the machine can emit when fed input_perm.

    Explores all insert/remove interleavings, sharing work between schedules
    that reach the same configuration (read position + queue contents determine
    all possible continuations).

    >>> sorted(all_outputs((2, 1)))
    [(1, 2), (2, 1)]
    """
    sigma = tuple(input_perm)
    n = len(sigma)
    memo: dict[tuple[int, int], frozenset[tuple[int, ...]]] = {}

    def suffixes(i: int, held: int) -> frozenset[tuple[int, ...]]:
        # held is a bitmask of queue contents (bit v-1 for value v).
        key = (i, held)
        if key in memo:
            return memo[key]
        out: set[tuple[int, ...]] = set()
        if i == n and held == 0:
            out.add(())
        if i < n:
            out |= suffixes(i + 1, held | (1 << (sigma[i] - 1)))
        if held:
            low = held & -held
            m = low.bit_length()
            out |= {(m,) + rest for rest in suffixes(i, held ^ low)}
        result = frozenset(out)
        memo[key] = result
        return result

    return set(suffixes(0, 0))


def is_allowable_sim(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """Decide allowability by simulating the machine toward the target output.

    Walks the grid of states (values inserted, values emitted); a remove is only
    taken when the queue minimum equals the next needed output value, so the
    reachable state space is at most quadratic in the length.

    >>> is_allowable_sim((2, 1), (1, 2))
    True
    >>> is_allowable_sim((1, 2), (2, 1))
    False
    """
    sigma, tau = tuple(sigma), tuple(tau)
    n = len(sigma)
    if len(tau) != n:
        raise ValueError(f"length mismatch: {len(sigma)} vs {len(tau)}")
    ins_mask = [0] * (n + 1)
    out_mask = [0] * (n + 1)
    for i in range(n):
        ins_mask[i + 1] = ins_mask[i] | (1 << (sigma[i] - 1))
        out_mask[i + 1] = out_mask[i] | (1 << (tau[i] - 1))

    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        i, k = stack.pop()
        if i == n and k == n:
            return True
        if i < n and (i + 1, k) not in seen:
            seen.add((i + 1, k))
            stack.append((i + 1, k))
        held = ins_mask[i] & ~out_mask[k]
        if held and (held & -held) == 1 << (tau[k] - 1) and (i, k + 1) not in seen:
            seen.add((i, k + 1))
            stack.append((i, k + 1))
    return False


def pair_contains(big: tuple[Sequence[int], Sequence[int]],
                  small: tuple[Sequence[int], Sequence[int]]) -> bool:
    """The pair order: restrict both coordinates of big to one common value set.

    True iff some value set S gives pattern_of(big[0]|_S) = small[0] and
    pattern_of(big[1]|_S) = small[1].

    >>> pair_contains(((1, 3, 2), (2, 3, 1)), ((1, 2), (2, 1)))
    True
    >>> pair_contains(((2, 3, 1), (2, 1, 3)), ((1, 2), (2, 1)))
    False
    """
    sigma, tau = (tuple(p) for p in big)
    alpha, beta = (tuple(p) for p in small)
    n, k = len(sigma), len(alpha)
    if len(tau) != n or len(beta) != k:
        raise ValueError("coordinates of a pair must have equal length")
    if k > n:
        return False
    for values in itertools.combinations(range(1, n + 1), k):
        chosen = set(values)
        if pattern_of([v for v in sigma if v in chosen]) == alpha \
                and pattern_of([v for v in tau if v in chosen]) == beta:
            return True
    return False


def is_allowable_forbidden(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """Decide allowability via the two minimal forbidden pairs.

    >>> is_allowable_forbidden((3, 2, 1), (1, 3, 2))
    False
    """
    if len(sigma) != len(tau):
        raise ValueError(f"length mismatch: {len(sigma)} vs {len(tau)}")
    pair = (tuple(sigma), tuple(tau))
    return not any(pair_contains(pair, f) for f in FORBIDDEN_PAIRS)
