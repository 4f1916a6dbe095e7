"""Exact optimum strategies by dynamic programming over candidate sets.

The recursion follows the query semantics directly: the best strategy for
a connected candidate set picks the query minimising its own cost plus
the worst component left behind.  Candidate sets are memoised as
bitmasks, and costs are rescaled to integers over a common denominator so
the inner loop stays in machine arithmetic.  Connected-subtree counts
grow exponentially on branchy trees, so every solve carries an explicit
state budget and fails fast once it is exhausted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import DecisionTree, TreeInstance
from .errors import NotConnected, StateLimitExceeded


@dataclass(frozen=True)
class SolveLimits:
    """Resource budget for one exact solve (number of memoised sets)."""

    max_states: int = 5_000_000

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")


def _components(mask: int, adj: list[int]) -> list[int]:
    """Connected components of a bitmask, in increasing lowest-bit order."""
    comps = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                grow |= adj[bit.bit_length() - 1]
            frontier = grow & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def opt_exact(
    inst: TreeInstance, limits: SolveLimits | None = None, within=None
) -> tuple[Fraction, DecisionTree]:
    """Exact minimum worst-case cost plus one witness strategy.

    ``within`` restricts the search to a connected vertex subset (the
    witness then spans only that subset).  Ties between equally good root
    queries break towards the smallest vertex id, and children are
    ordered by their smallest vertex, so the witness is deterministic.

    Raises :class:`StateLimitExceeded` when the number of distinct
    candidate sets explored exceeds ``limits.max_states``.
    """
    if limits is None:
        limits = SolveLimits()
    verts = sorted(within) if within is not None else list(range(1, inst.n + 1))
    m = len(verts)
    if m == 0:
        raise NotConnected("empty vertex set")
    pos = {v: i for i, v in enumerate(verts)}

    adj = [0] * m
    for v in verts:
        i = pos[v]
        for u in inst.adjacency[v]:
            j = pos.get(u)
            if j is not None:
                adj[i] |= 1 << j

    full = (1 << m) - 1
    if m > 1 and _components(full, adj)[0] != full:
        raise NotConnected(f"vertex set of size {m} is not connected")

    denom = math.lcm(*(inst.cost(v).denominator for v in verts))
    weight = [inst.cost(v).numerator * (denom // inst.cost(v).denominator) for v in verts]

    memo: dict[int, int] = {}
    choice: dict[int, int] = {}
    max_states = limits.max_states

    def solve(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        if len(memo) >= max_states:
            raise StateLimitExceeded(f"exact solve exceeded {max_states} memo states")
        if mask & (mask - 1) == 0:
            i = mask.bit_length() - 1
            memo[mask] = weight[i]
            choice[mask] = i
            return weight[i]
        best = -1
        scan = mask
        while scan:
            bit = scan & -scan
            scan ^= bit
            i = bit.bit_length() - 1
            wi = weight[i]
            if best >= 0 and wi >= best:
                continue  # components cost at least one more query
            comps = _components(mask ^ bit, adj)
            comps.sort(key=lambda c: -c.bit_count())
            worst = 0
            viable = True
            for comp in comps:
                sub = solve(comp)
                if sub > worst:
                    worst = sub
                    if best >= 0 and wi + worst >= best:
                        viable = False
                        break
            if viable:
                total = wi + worst
                if best < 0 or total < best:
                    best = total
                    choice[mask] = i
        memo[mask] = best
        return best

    value = solve(full)

    children: dict[int, tuple[int, ...]] = {}

    def rebuild(mask: int) -> int:
        i = choice[mask]
        v = verts[i]
        kids = tuple(rebuild(comp) for comp in _components(mask ^ (1 << i), adj))
        if kids:
            children[v] = kids
        return v

    root = rebuild(full)
    return Fraction(value, denom), DecisionTree(root, children)
