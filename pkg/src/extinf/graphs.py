"""Directed graph model and its JSON file format.

A graph is a plain adjacency map: node id (string) -> {neighbor id -> weight}.
Weights are non-negative finite numbers.  Every edge target must itself be a
key of the map; nodes without outgoing edges map to an empty object.

The on-disk format is the JSON transliteration of that structure.  Emission is
canonical (keys sorted, integral weights written as integers) so equal graphs
always serialize to identical bytes.
"""

import json
import math
import warnings

from .weights import canonical_number

__all__ = [
    "DanglingTargetWarning",
    "GraphParseError",
    "InvalidGraphError",
    "count_edges",
    "emit_graph",
    "parse_graph",
    "validate",
]


class GraphParseError(ValueError):
    """A graph document that cannot be turned into a valid graph."""


class InvalidGraphError(ValueError):
    """An in-memory graph violating the adjacency-map invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DanglingTargetWarning(UserWarning):
    """An edge target that was missing from the key set and got auto-added."""


def _check_weight(node, neighbor, weight):
    if isinstance(weight, bool) or not isinstance(weight, (int, float)):
        return f"edge {node!r} -> {neighbor!r}: weight must be a number, got {weight!r}"
    if not math.isfinite(weight):
        return f"edge {node!r} -> {neighbor!r}: weight must be finite, got {weight!r}"
    if weight < 0:
        return f"edge {node!r} -> {neighbor!r}: negative weight {weight!r}"
    return None


def parse_graph(text: str) -> dict:
    """Parse a JSON graph document.

    Edge targets missing from the key set are auto-added with empty adjacency
    and reported via DanglingTargetWarning.  Malformed documents raise
    GraphParseError naming the offending node or edge.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphParseError(
            f"graph document must be a JSON object, got {type(doc).__name__}"
        )
    graph = {}
    for node, neighbors in doc.items():
        if not isinstance(neighbors, dict):
            raise GraphParseError(
                f"adjacency of node {node!r} must be an object, got {type(neighbors).__name__}"
            )
        for neighbor, weight in neighbors.items():
            problem = _check_weight(node, neighbor, weight)
            if problem is not None:
                raise GraphParseError(problem)
        graph[node] = dict(neighbors)
    dangling = sorted(
        {target for neighbors in graph.values() for target in neighbors} - graph.keys()
    )
    if dangling:
        for target in dangling:
            graph[target] = {}
        warnings.warn(
            f"auto-added {len(dangling)} node(s) that only appeared as edge targets: "
            + ", ".join(repr(t) for t in dangling),
            DanglingTargetWarning,
            stacklevel=2,
        )
    return graph


def emit_graph(graph: dict) -> str:
    """Canonical JSON for a graph; parse_graph(emit_graph(g)) == g."""
    doc = {
        node: {neighbor: canonical_number(w) for neighbor, w in neighbors.items()}
        for node, neighbors in graph.items()
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def validate(graph: dict) -> list:
    """All invariant violations, one entry per problem; empty means valid."""
    violations = []
    if not isinstance(graph, dict):
        return [f"graph must be a dict, got {type(graph).__name__}"]
    for node, neighbors in graph.items():
        if not isinstance(node, str):
            violations.append(f"node id must be a string, got {node!r}")
        if not isinstance(neighbors, dict):
            violations.append(
                f"adjacency of node {node!r} must be a dict, got {type(neighbors).__name__}"
            )
            continue
        for neighbor, weight in neighbors.items():
            if not isinstance(neighbor, str):
                violations.append(
                    f"edge target of node {node!r} must be a string, got {neighbor!r}"
                )
            elif neighbor not in graph:
                violations.append(
                    f"edge {node!r} -> {neighbor!r}: target is not a node of the graph"
                )
            problem = _check_weight(node, neighbor, weight)
            if problem is not None:
                violations.append(problem)
    return violations


def count_edges(graph: dict) -> int:
    return sum(len(neighbors) for neighbors in graph.values())
