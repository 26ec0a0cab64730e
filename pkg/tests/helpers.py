"""Shared test oracles and structural predicates, independent of the library.

Everything here recomputes results from first principles (path enumeration,
breadth-first reachability, direct quadrature, stdlib statistics) so the
implementations under test never check themselves.
"""

import math
import statistics
from collections import deque

from scipy import integrate


# ---------------------------------------------------------------------------
# Shortest-path oracles


def enumerate_shortest(graph, source):
    """Minimum path cost per node by exhaustive simple-path enumeration."""
    best = {node: math.inf for node in graph}
    best[source] = 0.0

    def walk(node, cost, seen):
        for neighbor, weight in graph[node].items():
            if neighbor in seen:
                continue
            reached = cost + weight
            if reached < best[neighbor]:
                best[neighbor] = reached
            walk(neighbor, reached, seen | {neighbor})

    walk(source, 0.0, {source})
    return best


def reachable(graph, source):
    """Nodes reachable from source by directed breadth-first search."""
    seen = {source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for neighbor in graph[node]:
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return seen


def all_path_costs(graph, source, target):
    """Costs of every simple path from source to target."""
    costs = []

    def walk(node, cost, seen):
        if node == target:
            costs.append(cost)
            return
        for neighbor, weight in graph[node].items():
            if neighbor not in seen:
                walk(neighbor, cost + weight, seen | {neighbor})

    walk(source, 0, {source})
    return costs


# ---------------------------------------------------------------------------
# Student-t / Welch oracles


def t_density(x, df):
    scale = math.exp(math.lgamma((df + 1) / 2) - math.lgamma(df / 2)) / math.sqrt(
        df * math.pi
    )
    return scale * (1 + x * x / df) ** (-(df + 1) / 2)


def quadrature_t_cdf(t, df):
    """P(T_df <= t) by adaptive quadrature of the density."""
    if t <= 0:
        value, _ = integrate.quad(
            t_density, -math.inf, t, args=(df,), epsabs=1e-14, limit=400
        )
        return value
    value, _ = integrate.quad(
        t_density, t, math.inf, args=(df,), epsabs=1e-14, limit=400
    )
    return 1.0 - value


def oracle_welch_p(values_a, values_b):
    """One-tailed Welch p-value recomputed from scratch (stdlib statistics)."""
    na, nb = len(values_a), len(values_b)
    va, vb = statistics.variance(values_a), statistics.variance(values_b)
    sq_a, sq_b = va / na, vb / nb
    t = (statistics.fmean(values_a) - statistics.fmean(values_b)) / math.sqrt(sq_a + sq_b)
    df = (sq_a + sq_b) ** 2 / (sq_a**2 / (na - 1) + sq_b**2 / (nb - 1))
    return quadrature_t_cdf(t, df)


# ---------------------------------------------------------------------------
# Structural predicates for generated graphs.  Generated node ids sort in
# construction order, so `sorted(graph)` recovers the builder's layout.


def _in_degrees(graph):
    degrees = {node: 0 for node in graph}
    for neighbors in graph.values():
        for target in neighbors:
            degrees[target] += 1
    return degrees


def _undirected_components(graph):
    neighbors = {node: set() for node in graph}
    for node, out in graph.items():
        for target in out:
            neighbors[node].add(target)
            neighbors[target].add(node)
    remaining = set(graph)
    count = 0
    while remaining:
        count += 1
        queue = deque([remaining.pop()])
        while queue:
            node = queue.popleft()
            for other in neighbors[node]:
                if other in remaining:
                    remaining.remove(other)
                    queue.append(other)
    return count


def _is_acyclic(graph):
    state = {}

    def visit(node):
        if state.get(node) == "done":
            return True
        if state.get(node) == "active":
            return False
        state[node] = "active"
        if not all(visit(t) for t in graph[node]):
            return False
        state[node] = "done"
        return True

    return all(visit(node) for node in graph)


def is_linear_chain(graph):
    names = sorted(graph)
    expected = {a: {b} for a, b in zip(names, names[1:])}
    expected[names[-1]] = set()
    return {n: set(out) for n, out in graph.items()} == expected


def is_cycle(graph):
    names = sorted(graph)
    out_ok = all(set(graph[a]) == {b} for a, b in zip(names, names[1:]))
    return out_ok and set(graph[names[-1]]) == {names[0]}


def is_star(graph):
    names = sorted(graph)
    center, leaves = names[0], names[1:]
    return set(graph[center]) == set(leaves) and all(not graph[leaf] for leaf in leaves)


def is_sparse_tree(graph):
    if sum(len(out) for out in graph.values()) != len(graph) - 1:
        return False
    degrees = _in_degrees(graph)
    root = sorted(graph)[0]
    if degrees[root] != 0 or any(d != 1 for n, d in degrees.items() if n != root):
        return False
    return reachable(graph, root) == set(graph)


def is_dense(graph):
    for node, out in graph.items():
        others = set(graph) - {node}
        if set(out) != others:
            return False
        if any(graph[other][node] != out[other] for other in others):
            return False
    return True


def is_disconnected(graph):
    return _undirected_components(graph) >= 2


def is_equal_weights(graph):
    weights = {w for out in graph.values() for w in out.values()}
    return len(weights) == 1


def is_grid(graph):
    names = sorted(graph)
    side = math.isqrt(len(names))
    if side * side != len(names):
        return False
    position = {name: divmod(i, side) for i, name in enumerate(names)}
    for name, (r, c) in position.items():
        expected = set()
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            rr, cc = r + dr, c + dc
            if 0 <= rr < side and 0 <= cc < side:
                expected.add(names[rr * side + cc])
        if set(graph[name]) != expected:
            return False
        if any(graph[t][name] != w for t, w in graph[name].items()):
            return False
    return True


def is_worst_case_tie(graph):
    names = sorted(graph)
    costs = all_path_costs(graph, names[0], names[-1])
    return len(costs) >= 2 and len(set(costs)) == 1


def is_real_world_like(graph):
    root = sorted(graph)[0]
    return _is_acyclic(graph) and reachable(graph, root) == set(graph)


CATEGORY_PREDICATES = {
    "linear_chain": is_linear_chain,
    "sparse_tree": is_sparse_tree,
    "dense": is_dense,
    "star": is_star,
    "disconnected": is_disconnected,
    "cycle": is_cycle,
    "equal_weights": is_equal_weights,
    "grid": is_grid,
    "worst_case_tie": is_worst_case_tie,
    "real_world_like": is_real_world_like,
}
