"""Recursive strategy construction by doubling cost levels.

Costs are normalized to ``(0, 1]`` and partitioned into half-open
intervals: ``(0, b0]`` with ``b0`` just below ``1/log2(n)``, then each
interval doubling its upper end until 1 is reached.  Working from the top
interval down, a call on a connected region with interval ``(a, b]``
schedules all queries to vertices costing more than ``a``:

* If the region is entirely above ``a`` (or the bottom interval is
  reached) the uniform-cost ranking strategy is good enough.
* Otherwise a small separator is built: one representative per heavy
  module, the branch vertices of their spanning subtree, and the cheapest
  interior vertex of each corridor between those anchors.  Contracting
  the tree onto the separator gives an auxiliary instance small enough to
  solve exactly; its strategy queries the whole separator.
* Every remaining component holds at most one heavy module, whose ranking
  strategy is grafted below the deepest queried neighbour of the
  component; the all-light leftovers recurse one interval lower and are
  grafted the same way.

The number of intervals is ``O(log log n)``, and each level of the
recursion adds only a constant multiple of the optimum to the cost, which
is what makes the final strategy competitive.

Interval endpoints are binary64 floats; comparing an exact rational cost
against them is exact, because floats are dyadic rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .core import (
    DecisionTree,
    TreeInstance,
    normalize,
    split_components,
    tree_instance,
    validate_decision_tree,
)
from .errors import (
    BranchOccupied,
    InvalidSize,
    NoHeavyVertex,
    NoNeighborQueried,
    NotAPath,
)
from .exact import SolveLimits, opt_exact
from .modularity import heavy_modules, k_up_modularity
from .ranking import ranking_based_dt


@dataclass(frozen=True)
class CostLevelSchedule:
    """Half-open cost intervals ``(a, b]`` partitioning ``(0, 1]``."""

    levels: tuple[tuple[float, float], ...]

    @property
    def count(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class SeparatorSets:
    """The three nested vertex sets that isolate heavy modules.

    ``reps`` holds one representative per heavy module; ``anchors`` adds
    every branch vertex (degree three or more) of the subtree spanning the
    representatives; ``separators`` adds the cheapest interior vertex of
    each corridor between consecutive anchors.  Removing ``separators``
    leaves components with at most one heavy module each.
    """

    reps: frozenset[int]
    anchors: frozenset[int]
    separators: frozenset[int]


@dataclass(frozen=True)
class AuxiliaryTree:
    """Contraction of the tree onto a separator set.

    ``vertices`` and ``edges`` use original ids; two separator vertices
    are adjacent exactly when no other separator vertex lies on the path
    between them.  ``instance`` is the same tree relabelled to contiguous
    ids ``1..m`` (costs carried over) and ``back_map[i]`` is the original
    id of relabelled vertex ``i + 1``.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    instance: TreeInstance
    back_map: tuple[int, ...]


@dataclass(frozen=True)
class LevelRecord:
    """Instrumentation for one separator construction during a run."""

    level: int
    lower: float
    upper: float
    region_size: int
    module_count: int
    k_region: int
    separator_size: int
    aux_size: int
    max_modules_per_component: int


@dataclass(frozen=True)
class ApproxStats:
    """Per-run statistics: recursion depth and one record per separator."""

    depth_d: int
    schedule: CostLevelSchedule | None
    records: tuple[LevelRecord, ...]

    @property
    def max_aux_size(self) -> int:
        return max((r.aux_size for r in self.records), default=0)


def _inv_log2_lower_bound(n: int) -> float:
    """Largest binary64 value that does not exceed ``1 / log2(n)``."""
    j = n.bit_length() - 1
    if n == 1 << j:
        target = Fraction(1, j)
    else:
        # 1/log2(n) is irrational here; a 50-digit approximation with a
        # certified safety margin decides the nearest-double question.
        with localcontext() as ctx:
            ctx.prec = 50
            approx = 1 / (Decimal(n).ln() / Decimal(2).ln())
        target = Fraction(approx) - Fraction(1, 10**45)
    value = float(target)
    if Fraction(value) > target:
        value = math.nextafter(value, 0.0)
    return value


def cost_levels(n: int) -> CostLevelSchedule:
    """The doubling interval schedule for an instance of ``n`` vertices."""
    if n < 2:
        raise InvalidSize(f"cost levels require at least 2 vertices, got {n}")
    b = _inv_log2_lower_bound(n)
    levels = [(0.0, b)]
    while b < 1.0:
        a, b = b, min(2.0 * b, 1.0)
        levels.append((a, b))
    return CostLevelSchedule(tuple(levels))


def _induced_components(inst: TreeInstance, verts) -> list[frozenset[int]]:
    """Connected components of an induced vertex set, smallest vertex first."""
    pool = set(verts)
    comps = []
    for start in sorted(verts):
        if start not in pool:
            continue
        comp = {start}
        pool.discard(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in inst.adjacency[x]:
                if y in pool:
                    pool.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def _rooted_arrays(inst: TreeInstance, root: int) -> tuple[dict[int, int], dict[int, int]]:
    parent = {root: 0}
    depth = {root: 0}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in inst.adjacency[x]:
            if y not in parent:
                parent[y] = x
                depth[y] = depth[x] + 1
                stack.append(y)
    return parent, depth


def _path_interior(parent, depth, u: int, v: int) -> list[int]:
    """Vertices strictly between ``u`` and ``v``."""
    ups, vps = [], []
    while u != v:
        if depth[u] >= depth[v]:
            ups.append(u)
            u = parent[u]
        else:
            vps.append(v)
            v = parent[v]
    full = ups + [u] + vps[::-1]
    return full[1:-1]


def separator_sets(inst: TreeInstance, region, threshold) -> SeparatorSets:
    """Build the nested separator sets for one region and threshold.

    Module representatives are the maximum-cost vertex of each module
    (ties to the smallest id); corridor picks take the cheapest interior
    vertex (ties to the smallest id).  Requires at least one vertex of the
    region to cost more than the threshold.
    """
    region = frozenset(region)
    decomposition = heavy_modules(inst, threshold, within=region)
    if not decomposition.modules:
        raise NoHeavyVertex(f"no vertex in the region costs more than {threshold}")
    reps = frozenset(
        max(module, key=lambda v: (inst.cost(v), -v)) for module in decomposition.modules
    )

    # Spanning subtree of the representatives, rooted at one of them: a
    # vertex belongs iff its rooted subtree contains a representative.
    root = min(reps)
    vset = region
    parent = {root: 0}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in inst.adjacency[x]:
            if y in vset and y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    count = {v: 1 if v in reps else 0 for v in order}
    for v in reversed(order[1:]):
        count[parent[v]] += count[v]
    span = {v for v in order if count[v] >= 1}
    span_adj = {v: [u for u in inst.adjacency[v] if u in span] for v in span}

    anchors = set(reps) | {v for v in span if len(span_adj[v]) >= 3}

    separators = set(anchors)
    walked: set[tuple[int, int]] = set()
    for y in sorted(anchors):
        for nb in span_adj[y]:
            if (y, nb) in walked:
                continue
            walked.add((y, nb))
            prev, cur = y, nb
            interior = []
            while cur not in anchors:
                interior.append(cur)
                nxt = [u for u in span_adj[cur] if u != prev]
                assert len(nxt) == 1, "non-anchor spine vertex must have degree 2"
                prev, cur = cur, nxt[0]
            walked.add((cur, prev))
            if interior:
                separators.add(min(interior, key=lambda v: (inst.cost(v), v)))

    return SeparatorSets(reps, frozenset(anchors), frozenset(separators))


def auxiliary_tree(inst: TreeInstance, separators) -> AuxiliaryTree:
    """Contract the tree onto a separator set.

    Two separator vertices are joined exactly when the path between them
    contains no other separator vertex.  For separator sets produced by
    :func:`separator_sets` (which include every branch vertex of their
    spanning subtree) the result is a tree.
    """
    zs = sorted(separators)
    assert zs, "separator set must be non-empty"
    if len(zs) == 1:
        v = zs[0]
        instance = tree_instance(1, (), (inst.cost(v),))
        return AuxiliaryTree((v,), (), instance, (v,))

    zset = frozenset(zs)
    parent, depth = _rooted_arrays(inst, zs[0])
    edges = []
    for i, u in enumerate(zs):
        for v in zs[i + 1 :]:
            if zset.isdisjoint(_path_interior(parent, depth, u, v)):
                edges.append((u, v))

    index = {v: i + 1 for i, v in enumerate(zs)}
    instance = tree_instance(
        len(zs),
        [(index[u], index[v]) for u, v in edges],
        [inst.cost(v) for v in zs],
    )
    return AuxiliaryTree(tuple(zs), tuple(edges), instance, tuple(zs))


def attach_subtree(
    d: DecisionTree, inst: TreeInstance, region, sub_dt: DecisionTree
) -> DecisionTree:
    """Graft a strategy for an unqueried region below the right query.

    All queried neighbours of the region must lie on a single root-to-leaf
    path of ``d`` (a structural guarantee of the construction, verified
    here rather than assumed); the subtree is attached under the deepest
    of them, on the response branch holding the region.
    """
    region = frozenset(region)
    assert sub_dt.vertex_set <= region, "grafted strategy must stay inside its region"
    queried = d.vertex_set
    assert not (region & queried), "region must not contain queried vertices"

    nbrs = set()
    for w in region:
        nbrs.update(inst.adjacency[w])
    nbrs -= region
    hooks = sorted(nbrs & queried)
    if not hooks:
        raise NoNeighborQueried(f"no neighbour of the region {sorted(region)} is queried yet")

    depth = {d.root: 0}
    stack = [d.root]
    while stack:
        v = stack.pop()
        for child in d.child_list(v):
            depth[child] = depth[v] + 1
            stack.append(child)
    deepest = max(hooks, key=lambda v: depth[v])

    chain = {deepest}
    parents = d.parent_map
    v = deepest
    while v != d.root:
        v = parents[v]
        chain.add(v)
    stray = [q for q in hooks if q not in chain]
    if stray:
        raise NotAPath(
            f"queried neighbours {stray} of the region are not ancestors of {deepest}"
        )

    branch = None
    for comp in split_components(inst, inst.vertex_set, deepest):
        if region <= comp:
            branch = comp
            break
    assert branch is not None, "region must sit inside one response component"
    for child in d.child_list(deepest):
        if child in branch:
            raise BranchOccupied(
                f"query {deepest} already has a child on the branch holding the region"
            )

    merged = dict(d.children)
    merged[deepest] = d.child_list(deepest) + (sub_dt.root,)
    for q, kids in sub_dt.children.items():
        merged[q] = kids
    return DecisionTree(d.root, merged)


def create_decision_tree(
    inst: TreeInstance, limits: SolveLimits | None = None
) -> tuple[DecisionTree, ApproxStats]:
    """Build a full strategy via the doubling-level recursion.

    Returns the validated strategy together with run statistics: the
    recursion depth ``depth_d`` (number of level descents on the deepest
    branch that did real work) and one :class:`LevelRecord` per separator
    construction.  Exact auxiliary solves share the given ``limits``.
    """
    norm, _scale = normalize(inst)
    n = norm.n
    if n == 1:
        return DecisionTree(1, {}), ApproxStats(0, None, ())

    schedule = cost_levels(n)
    records: list[LevelRecord] = []

    def recurse(region: frozenset[int], level: int) -> tuple[DecisionTree, int]:
        a, _b = schedule.levels[level]
        heavy = {v for v in region if norm.cost(v) > a}
        if level == 0 or len(heavy) == len(region):
            return ranking_based_dt(norm, within=region), 0
        if not heavy:
            return recurse(region, level - 1)

        seps = separator_sets(norm, region, a)
        aux = auxiliary_tree(norm, seps.separators)
        _cost_z, aux_dt = opt_exact(aux.instance, limits=limits)
        back = aux.back_map
        d = DecisionTree(
            back[aux_dt.root - 1],
            {back[q - 1]: tuple(back[c - 1] for c in kids) for q, kids in aux_dt.children.items()},
        )

        comps = _induced_components(norm, region - seps.separators)
        comp_modules = [heavy_modules(norm, a, within=comp).modules for comp in comps]
        k_region, _witness = k_up_modularity(norm, within=region)
        records.append(
            LevelRecord(
                level=level,
                lower=a,
                upper=_b,
                region_size=len(region),
                module_count=len(seps.reps),
                k_region=k_region,
                separator_size=len(seps.separators),
                aux_size=len(aux.vertices),
                max_modules_per_component=max((len(ms) for ms in comp_modules), default=0),
            )
        )

        depth = 0
        for comp, modules in zip(comps, comp_modules):
            assert len(modules) <= 1, "separator left a component with two heavy modules"
            if modules:
                module = modules[0]
                d = attach_subtree(d, norm, comp, ranking_based_dt(norm, within=module))
                light_parts = _induced_components(norm, comp - module)
            else:
                light_parts = [comp]
            for part in light_parts:
                part_dt, part_depth = recurse(part, level - 1)
                d = attach_subtree(d, norm, part, part_dt)
                depth = max(depth, part_depth)
        return d, depth + 1

    dtree, depth_d = recurse(norm.vertex_set, schedule.count - 1)
    validate_decision_tree(norm, dtree)
    return dtree, ApproxStats(depth_d, schedule, tuple(records))
