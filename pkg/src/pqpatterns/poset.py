"""The constraint poset of an output permutation and its linear extensions.

For an output sequence tau, the poset P(tau) is defined on the values of tau:
x < y in P(tau) when x precedes y in tau and either the pair xy forms a 21
pattern, or some value z between them makes xzy a 132 pattern.  A pair
(sigma, tau) is allowable exactly when sigma is a linear extension of P(tau),
read off as the value sequence from least to greatest — so the extensions of
P(tau) are precisely the inputs a priority queue can turn into tau.

Relations are stored as per-value successor bitmasks; the transitive closure is
computed lazily for chain detection, while extension enumeration works directly
on indegree counts of the stored relation.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .permutations import Permutation, contains_ending_at_last, is_permutation


class TauPoset:
    """Strict partial order on the values 1..n of a ground permutation.

    ``succ[v]`` is the bitmask of stored (not transitively closed) successors of
    value v, with bit y-1 standing for value y.  All constraints point forward
    positionally in the ground sequence, so the ground itself is always one of
    the linear extensions.
    """

    __slots__ = ("ground", "n", "succ", "_closure")

    def __init__(self, ground: Sequence[int], succ: Sequence[int]):
        if not is_permutation(ground):
            raise ValueError(f"ground {ground!r} is not a permutation")
        self.ground: Permutation = tuple(ground)
        self.n = len(self.ground)
        self.succ = tuple(succ)
        self._closure: tuple[int, ...] | None = None
        position = {v: i for i, v in enumerate(self.ground)}
        for x in range(1, self.n + 1):
            m = self.succ[x]
            while m:
                low = m & -m
                y = low.bit_length()
                m ^= low
                if x == y or position[x] > position[y]:
                    raise ValueError(f"constraint {x} < {y} does not point "
                                     "forward in the ground sequence")

    def less(self, x: int, y: int) -> bool:
        """Stored relation: x < y as a recorded constraint."""
        return bool(self.succ[x] >> (y - 1) & 1)

    def constraints(self) -> list[tuple[int, int]]:
        """Stored constraints as (x, y) pairs, sorted numerically."""
        return sorted((x, y) for x in range(1, self.n + 1)
                      for y in range(1, self.n + 1) if self.less(x, y))

    @property
    def closure(self) -> tuple[int, ...]:
        """Successor bitmasks of the transitive closure."""
        if self._closure is None:
            masks = list(self.succ)
            # Constraints point forward in the ground sequence: sweeping its
            # positions right to left closes everything in one pass.
            for v in reversed(self.ground):
                m = masks[v]
                acc = m
                while m:
                    low = m & -m
                    acc |= masks[low.bit_length()]
                    m ^= low
                masks[v] = acc
            self._closure = tuple(masks)
        return self._closure

    def __eq__(self, other):
        if not isinstance(other, TauPoset):
            return NotImplemented
        return self.ground == other.ground and self.succ == other.succ

    def __hash__(self):
        return hash((self.ground, self.succ))

    def __repr__(self):
        return f"TauPoset(ground={self.ground!r}, constraints={self.constraints()!r})"


def build_poset(tau: Sequence[int]) -> TauPoset:
    """Constraint poset of tau by the direct two-rule definition.

    >>> build_poset((1, 3, 2)).constraints()
    [(1, 2), (3, 2)]
    """
    tau = tuple(tau)
    n = len(tau)
    succ = [0] * (n + 1)
    for i in range(n):
        x = tau[i]
        between = 0
        for j in range(i + 1, n):
            y = tau[j]
            if x > y or between > y:
                succ[x] |= 1 << (y - 1)
            between = max(between, y)
    return TauPoset(tau, succ)


def build_poset_recursive(tau: Sequence[int]) -> TauPoset:
    """Constraint poset of tau built by splitting at the maximum value.

    Writing tau = alpha m beta with m the maximum, the constraints are m before
    everything in beta, everything in alpha before everything in beta, plus the
    constraints of alpha and beta recursively.  Independent of ``build_poset``;
    the two agree up to transitive closure.
    """
    tau = tuple(tau)
    succ = [0] * (len(tau) + 1)

    def descend(seq: tuple[int, ...]) -> None:
        if len(seq) <= 1:
            return
        top = max(seq)
        cut = seq.index(top)
        alpha, beta = seq[:cut], seq[cut + 1:]
        beta_mask = 0
        for b in beta:
            beta_mask |= 1 << (b - 1)
        succ[top] |= beta_mask
        for a in alpha:
            succ[a] |= beta_mask
        descend(alpha)
        descend(beta)

    descend(tau)
    return TauPoset(tau, succ)


def is_linear_extension(p: TauPoset, seq: Sequence[int]) -> bool:
    """Does seq (a permutation of the ground values) respect every constraint?

    This is the third allowability decider: (sigma, tau) is allowable iff
    sigma is a linear extension of P(tau).
    """
    if sorted(seq) != sorted(p.ground):
        raise ValueError("sequence must rearrange the ground values")
    placed = 0
    for v in seq:
        if p.succ[v] & placed:
            return False
        placed |= 1 << (v - 1)
    return True


def linear_extensions(p: TauPoset) -> Iterator[Permutation]:
    """All linear extensions as value sequences, smallest-available-value first.

    >>> list(linear_extensions(build_poset((1, 3, 2))))
    [(1, 3, 2), (3, 1, 2)]
    """
    n = p.n
    indeg = _indegrees(p)
    prefix: list[int] = []

    def extend() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if indeg[v] == 0:
                indeg[v] = -1
                _drop_indegrees(p, v, indeg)
                prefix.append(v)
                yield from extend()
                prefix.pop()
                _restore_indegrees(p, v, indeg)
                indeg[v] = 0

    return extend()


def has_alpha_chain(p: TauPoset, alpha: Sequence[int]) -> bool:
    """Is there a chain x1 < x2 < ... in P(tau) whose values form pattern alpha?

    Runs on the transitive closure.

    >>> has_alpha_chain(build_poset((3, 1, 5, 2, 4)), (3, 1, 2))
    True
    """
    alpha = tuple(alpha)
    k = len(alpha)
    if k == 0:
        return True
    if k > p.n:
        return False
    closure = p.closure
    chosen: list[int] = []

    def grow(j: int, candidates: int) -> bool:
        if j == k:
            return True
        m = candidates
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length()
            if all((alpha[i] < alpha[j]) == (chosen[i] < v) for i in range(j)):
                chosen.append(v)
                if grow(j + 1, closure[v]):
                    return True
                chosen.pop()
        return False

    return grow(0, (1 << p.n) - 1)


def exists_extension_avoiding(p: TauPoset, basis: Iterable[Sequence[int]]) -> bool:
    """Does some linear extension of p avoid every pattern in basis?

    Backtracks over partial extensions, abandoning any prefix that already
    contains a basis element — sound because containment only grows as the
    prefix does.  Each placement is checked incrementally, looking only for
    occurrences that end at the value just placed.

    >>> exists_extension_avoiding(build_poset((1, 4, 3, 2)), [(1, 3, 2)])
    False
    >>> exists_extension_avoiding(build_poset((2, 4, 1, 3)), [(2, 3, 1)])
    True
    """
    patterns = sorted({tuple(b) for b in basis}, key=lambda b: (len(b), b))
    if patterns and len(patterns[0]) == 0:
        return False
    n = p.n
    indeg = _indegrees(p)
    prefix: list[int] = []

    def extend() -> bool:
        if len(prefix) == n:
            return True
        for v in range(1, n + 1):
            if indeg[v] != 0:
                continue
            prefix.append(v)
            if any(len(b) <= len(prefix) and contains_ending_at_last(prefix, b)
                   for b in patterns):
                prefix.pop()
                continue
            indeg[v] = -1
            _drop_indegrees(p, v, indeg)
            if extend():
                return True
            prefix.pop()
            _restore_indegrees(p, v, indeg)
            indeg[v] = 0
        return False

    return extend()


def _indegrees(p: TauPoset) -> list[int]:
    indeg = [0] * (p.n + 1)
    for x in range(1, p.n + 1):
        m = p.succ[x]
        while m:
            low = m & -m
            indeg[low.bit_length()] += 1
            m ^= low
    return indeg


def _drop_indegrees(p: TauPoset, v: int, indeg: list[int]) -> None:
    m = p.succ[v]
    while m:
        low = m & -m
        indeg[low.bit_length()] -= 1
        m ^= low


def _restore_indegrees(p: TauPoset, v: int, indeg: list[int]) -> None:
    m = p.succ[v]
    while m:
        low = m & -m
        indeg[low.bit_length()] += 1
        m ^= low
