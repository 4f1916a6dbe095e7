"""Tree-search instances, strategy trees, and exact cost evaluation.

An instance pairs an undirected tree with a strictly positive rational
cost per vertex.  Querying a vertex either confirms it as the hidden
target or reveals which component of the tree minus that vertex contains
the target, so a search strategy is a rooted decision tree on the same
vertex set whose branches mirror those components.  Locating a target
costs the sum of the query costs along the root-to-target path; a
strategy is scored by its worst-case target.

All cost arithmetic is exact (`fractions.Fraction`).  Every value here is
immutable after construction and every operation is a pure function, so
everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    ComponentMismatch,
    DuplicateVertex,
    MissingVertex,
    NonPositiveCost,
    NotATree,
    QueryOutsideCandidate,
    UnknownVertex,
    VertexNotInCandidate,
)

VertexSet = frozenset


@dataclass(frozen=True)
class TreeInstance:
    """Undirected tree on vertices ``1..n`` with positive query costs.

    ``costs[i]`` is the cost of vertex ``i + 1``.  Build instances through
    :func:`tree_instance` (or :func:`validate_instance`), which enforce the
    structural invariants and canonicalize the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    costs: tuple[Fraction, ...]

    def cost(self, v: int) -> Fraction:
        return self.costs[v - 1]

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples indexed by vertex id (index 0 unused)."""
        nbrs: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def max_cost(self) -> Fraction:
        return max(self.costs)


@dataclass(frozen=True)
class DecisionTree:
    """Rooted strategy tree: ``children[q]`` are the response branches of ``q``.

    Vertices with no children are omitted from the mapping; the mapping is
    canonicalized on construction so structural equality is well defined.
    """

    root: int
    children: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for q, kids in dict(self.children).items():
            kids = tuple(kids)
            if kids:
                cleaned[q] = kids
        object.__setattr__(self, "children", cleaned)

    def child_list(self, v: int) -> tuple[int, ...]:
        return self.children.get(v, ())

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        verts = {self.root}
        for kids in self.children.values():
            verts.update(kids)
        return frozenset(verts)

    @cached_property
    def parent_map(self) -> dict[int, int]:
        parents = {}
        for q, kids in self.children.items():
            for child in kids:
                parents[child] = q
        return parents

    @cached_property
    def depth(self) -> int:
        """Worst-case number of queries (vertices on the longest root path)."""
        best = 0
        stack = [(self.root, 1)]
        while stack:
            v, d = stack.pop()
            best = max(best, d)
            for child in self.child_list(v):
                stack.append((child, d + 1))
        return best


@dataclass(frozen=True)
class QuerySequence:
    """The queries issued to locate one target, with their total cost."""

    vertices: tuple[int, ...]
    total_cost: Fraction


def tree_instance(n: int, edges: Iterable, costs: Iterable) -> TreeInstance:
    """Build and validate a :class:`TreeInstance` from raw parts."""
    raw = TreeInstance(
        int(n),
        tuple((int(u), int(v)) for u, v in edges),
        tuple(Fraction(c) for c in costs),
    )
    return validate_instance(raw)


def validate_instance(raw: TreeInstance) -> TreeInstance:
    """Check tree structure and costs; return the canonicalized instance.

    Raises :class:`NotATree` if the edges are not exactly the ``n - 1``
    edges of a connected acyclic graph on vertices ``1..n``, and
    :class:`NonPositiveCost` (with the offending vertex) otherwise.
    """
    n = raw.n
    if n < 1:
        raise NotATree(f"vertex count must be at least 1, got {n}")
    if len(raw.costs) != n:
        raise NotATree(f"expected {n} costs, got {len(raw.costs)}")
    if len(raw.edges) != n - 1:
        raise NotATree(f"expected {n - 1} edges, got {len(raw.edges)}")

    edges = []
    for u, v in raw.edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise NotATree(f"edge ({u}, {v}) references a vertex outside 1..{n}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        edges.append((min(u, v), max(u, v)))
    edges.sort()

    nbrs: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * (n + 1)
    seen[1] = True
    stack = [1]
    reached = 1
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                stack.append(y)
    if reached != n:
        raise NotATree(f"graph is disconnected ({reached} of {n} vertices reachable)")

    costs = []
    for i, c in enumerate(raw.costs):
        c = Fraction(c)
        if c <= 0:
            raise NonPositiveCost(i + 1, c)
        costs.append(c)

    return TreeInstance(n, tuple(edges), tuple(costs))


def normalize(inst: TreeInstance) -> tuple[TreeInstance, Fraction]:
    """Scale costs so the maximum is exactly 1; return (instance, scale).

    The scale is the former maximum cost.  Relative cost order is
    preserved; an already-normalized instance is returned unchanged.
    """
    scale = inst.max_cost
    if scale == 1:
        return inst, Fraction(1)
    scaled = tuple(c / scale for c in inst.costs)
    return TreeInstance(inst.n, inst.edges, scaled), scale


def split_components(inst: TreeInstance, candidate, v: int) -> list[frozenset[int]]:
    """Connected components of the candidate set with ``v`` removed.

    The candidate set must induce a connected subtree containing ``v``.
    Components are returned in increasing order of their smallest vertex;
    together they partition ``candidate - {v}``.
    """
    cand = frozenset(candidate)
    if v not in cand:
        raise VertexNotInCandidate(f"vertex {v} is not in the candidate set")
    adjacency = inst.adjacency
    unvisited = set(cand)
    unvisited.discard(v)
    comps = []
    for start in sorted(cand):
        if start not in unvisited:
            continue
        comp = {start}
        unvisited.discard(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if y in unvisited:
                    unvisited.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def _appearance_check(d: DecisionTree, universe: frozenset[int]) -> None:
    seen: dict[int, int] = {d.root: 1}
    for kids in d.children.values():
        for child in kids:
            seen[child] = seen.get(child, 0) + 1
    dups = sorted(v for v, cnt in seen.items() if cnt > 1)
    if dups:
        raise DuplicateVertex(f"vertices appear more than once: {dups}")
    extra = sorted(set(seen) - universe)
    if extra:
        raise QueryOutsideCandidate(extra[0], f"vertices outside the instance: {extra}")
    missing = sorted(universe - set(seen))
    if missing:
        raise MissingVertex(f"vertices never queried: {missing}")


def validate_decision_tree(
    inst: TreeInstance, d: DecisionTree, within=None
) -> DecisionTree:
    """Check that ``d`` is a valid strategy for the instance.

    Starting from the full candidate set, every query must lie inside its
    own candidate set and its children must correspond one-to-one to the
    components left after removing the queried vertex, with each child's
    subtree covering exactly its component.  ``within`` restricts the
    universe to a connected vertex subset (defaults to all vertices).
    """
    universe = frozenset(within) if within is not None else inst.vertex_set
    _appearance_check(d, universe)

    # Subtree vertex sets, computed bottom-up over the (acyclic) child map.
    order = []
    stack = [d.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(d.child_list(v))
    subtree: dict[int, frozenset[int]] = {}
    for v in reversed(order):
        acc = {v}
        for child in d.child_list(v):
            acc.update(subtree[child])
        subtree[v] = frozenset(acc)
    if subtree[d.root] != universe:
        unreachable = sorted(universe - subtree[d.root])
        raise MissingVertex(f"vertices not reachable from the root: {unreachable}")

    work = [(d.root, universe)]
    while work:
        q, cand = work.pop()
        if q not in cand:
            raise QueryOutsideCandidate(q)
        comps = split_components(inst, cand, q)
        kids = d.child_list(q)
        if len(kids) != len(comps):
            raise ComponentMismatch(
                q, f"query {q} has {len(kids)} children but {len(comps)} response components"
            )
        remaining = {comp: comp for comp in comps}
        for child in kids:
            match = remaining.pop(subtree[child], None)
            if match is None:
                raise ComponentMismatch(
                    q, f"subtree of child {child} does not equal a response component of {q}"
                )
            work.append((child, match))
    return d


def evaluate_cost(inst: TreeInstance, d: DecisionTree, within=None) -> Fraction:
    """Worst-case total query cost of a valid strategy, as an exact rational."""
    validate_decision_tree(inst, d, within=within)
    best = Fraction(0)
    stack = [(d.root, Fraction(0))]
    while stack:
        v, acc = stack.pop()
        acc = acc + inst.cost(v)
        if acc > best:
            best = acc
        for child in d.child_list(v):
            stack.append((child, acc))
    return best


def query_sequence(inst: TreeInstance, d: DecisionTree, x: int) -> QuerySequence:
    """Queries issued when the target is ``x``: the root-to-``x`` path in ``d``."""
    if x not in d.vertex_set:
        raise UnknownVertex(f"vertex {x} does not appear in the strategy")
    parents = d.parent_map
    path = [x]
    while path[-1] != d.root:
        path.append(parents[path[-1]])
    path.reverse()
    total = sum((inst.cost(v) for v in path), Fraction(0))
    return QuerySequence(tuple(path), total)
