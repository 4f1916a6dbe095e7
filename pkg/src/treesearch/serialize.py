"""JSON serialization for instances and strategies, plus Graphviz export.

Instance document: ``{"n": int, "edges": [[u, v], ...], "costs": [...]}``
with 1-based vertex ids and ``costs[i]`` belonging to vertex ``i + 1``.
Costs are written as exact rational strings ("2/5", "1"); integers are
accepted on input.  Strategy document: ``{"root": int, "children":
{"<id>": [ids...]}}``.  Serialization is canonical, so equal values
produce byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import DecisionTree, TreeInstance, tree_instance
from .errors import ParseError


def _parse_cost(token, position: int) -> Fraction:
    if isinstance(token, bool):
        raise ParseError(f"cost #{position} must be a rational string or integer")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, str):
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cost #{position} is not a rational: {token!r}") from exc
    raise ParseError(f"cost #{position} must be a rational string or integer")


def parse_instance(text: str) -> TreeInstance:
    """Parse and validate an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    try:
        n = doc["n"]
        edges = doc["edges"]
        costs = doc["costs"]
    except KeyError as exc:
        raise ParseError(f"instance document is missing key {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError('"n" must be an integer')
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise ParseError('"edges" must be a list of [u, v] integer pairs')
    if not isinstance(costs, list):
        raise ParseError('"costs" must be a list')
    parsed_costs = [_parse_cost(c, i + 1) for i, c in enumerate(costs)]
    return tree_instance(n, edges, parsed_costs)


def load_instance(path) -> TreeInstance:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_instance(handle.read())


def serialize_instance(inst: TreeInstance) -> str:
    doc = {
        "n": inst.n,
        "edges": [[u, v] for u, v in inst.edges],
        "costs": [str(c) for c in inst.costs],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_decision_tree(text: str) -> DecisionTree:
    """Parse a strategy document (no instance-level validation)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("strategy document must be a JSON object")
    try:
        root = doc["root"]
        children = doc["children"]
    except KeyError as exc:
        raise ParseError(f"strategy document is missing key {exc}") from exc
    if not isinstance(root, int) or isinstance(root, bool):
        raise ParseError('"root" must be an integer')
    if not isinstance(children, dict):
        raise ParseError('"children" must be an object')
    parsed: dict[int, tuple[int, ...]] = {}
    for key, kids in children.items():
        try:
            q = int(key)
        except ValueError as exc:
            raise ParseError(f"child key {key!r} is not an integer") from exc
        if not isinstance(kids, list) or not all(
            isinstance(k, int) and not isinstance(k, bool) for k in kids
        ):
            raise ParseError(f"children of {key} must be a list of integers")
        parsed[q] = tuple(kids)
    return DecisionTree(root, parsed)


def serialize_decision_tree(d: DecisionTree) -> str:
    doc = {
        "root": d.root,
        "children": {str(q): list(d.children[q]) for q in sorted(d.children)},
    }
    return json.dumps(doc, indent=2) + "\n"


def export_dot(inst: TreeInstance | None = None, strategy: DecisionTree | None = None) -> str:
    """Graphviz text for an instance, a strategy, or a strategy with costs.

    With only an instance, emits the undirected tree; with a strategy,
    emits the rooted strategy as a digraph.  Node labels carry the vertex
    id and, when the instance is available, its cost.
    """
    if inst is None and strategy is None:
        raise ValueError("need an instance or a strategy to export")

    def label(v: int) -> str:
        if inst is None:
            return f"v{v}"
        return f"v{v} (c={inst.cost(v)})"

    lines = []
    if strategy is None:
        lines.append("graph instance {")
        for v in range(1, inst.n + 1):
            lines.append(f'  v{v} [label="{label(v)}"];')
        for u, v in inst.edges:
            lines.append(f"  v{u} -- v{v};")
    else:
        lines.append("digraph strategy {")
        for v in sorted(strategy.vertex_set):
            lines.append(f'  v{v} [label="{label(v)}"];')
        for q in sorted(strategy.children):
            for child in strategy.children[q]:
                lines.append(f"  v{q} -> v{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
