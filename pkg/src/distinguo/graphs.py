"""Finite simple graphs and their automorphism groups."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import MalformedGraph, OrderExceedsCap, SearchBudgetExceeded
from .perm import DEFAULT_CAP, FiniteAction, Permutation

MAX_AUT_VERTICES = 64
DEFAULT_SEARCH_BUDGET = 10**6


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree_sequence(self) -> list[int]:
        return [len(s) for s in self.adjacency()]


def make_graph(n: int, edges) -> Graph:
    seen = set()
    for u, v in edges:
        if u == v:
            raise MalformedGraph(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedGraph(f"edge {u} {v} outside 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MalformedGraph(f"duplicate edge {u} {v}")
        seen.add(key)
    return Graph(n, frozenset(seen))


def parse_graph(text: str) -> Graph:
    """Read ``graph <n>`` followed by ``e <u> <v>`` lines.

    A `` / `` may stand in for a newline, so one-line descriptions such as
    ``"graph 3 / e 0 1 / e 1 2"`` are accepted.
    """
    n = None
    edges = []
    for raw in re.split(r"\n|\s/\s", text):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2:
                raise MalformedGraph(f"expected 'graph <n>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise MalformedGraph(f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise MalformedGraph("negative vertex count")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise MalformedGraph(f"expected 'e <u> <v>', got {line!r}")
        try:
            edges.append((int(parts[1]), int(parts[2])))
        except ValueError:
            raise MalformedGraph(f"non-integer vertex in {line!r}") from None
    if n is None:
        raise MalformedGraph("missing 'graph' header")
    return make_graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"] + [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def _refined_colors(adj: list[set]) -> list[int]:
    # Colour refinement starting from degrees; automorphisms preserve the result.
    colors = [len(s) for s in adj]
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        relabel = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.n = g.vertex_count
        self.adj = g.adjacency()
        self.colors = _refined_colors(self.adj)
        self.budget = budget
        self.nodes = 0

    def _order_from(self, start: list[int]) -> list[int]:
        # Breadth-first from the prescribed vertices so each new vertex has mapped neighbours.
        order = list(start)
        placed = set(start)
        queue = list(start)
        while len(order) < self.n:
            while queue:
                v = queue.pop(0)
                for u in sorted(self.adj[v]):
                    if u not in placed:
                        placed.add(u)
                        order.append(u)
                        queue.append(u)
            rest = [v for v in range(self.n) if v not in placed]
            if rest:
                placed.add(rest[0])
                order.append(rest[0])
                queue.append(rest[0])
        return order

    def extend(self, prescribed: dict) -> Permutation | None:
        """Find an automorphism agreeing with ``prescribed`` (vertex -> image), or None."""
        for v, w in prescribed.items():
            if self.colors[v] != self.colors[w]:
                return None
        for (v1, w1), (v2, w2) in combinations(prescribed.items(), 2):
            if (v2 in self.adj[v1]) != (w2 in self.adj[w1]):
                return None
        order = self._order_from(list(prescribed))
        k0 = len(prescribed)
        f = dict(prescribed)
        used = set(prescribed.values())
        adj = self.adj
        colors = self.colors

        def rec(k: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(f"automorphism search exceeded {self.budget} nodes")
            if k == self.n:
                return True
            v = order[k]
            nv = adj[v]
            for w in range(self.n):
                if w in used or colors[w] != colors[v]:
                    continue
                nw = adj[w]
                ok = True
                for u in order[:k]:
                    if (u in nv) != (f[u] in nw):
                        ok = False
                        break
                if not ok:
                    continue
                f[v] = w
                used.add(w)
                if rec(k + 1):
                    return True
                del f[v]
                used.discard(w)
            return False

        if rec(k0):
            return Permutation(tuple(f[v] for v in range(self.n)))
        return None


def _orbit_under(gens: list[Permutation], point: int) -> set[int]:
    found = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g.images[x]
            if y not in found:
                found.add(y)
                frontier.append(y)
    return found


def automorphism_search(g: Graph, cap: int = DEFAULT_CAP, budget: int = DEFAULT_SEARCH_BUDGET):
    """Return ``(action, order)`` for Aut(g).

    Builds a stabilizer chain along the base 0, 1, ..., n-1: at each level it
    looks for one automorphism per orbit point, fixing the earlier base points.
    The order is the product of the basic orbit lengths.
    """
    n = g.vertex_count
    if n > MAX_AUT_VERTICES:
        raise SearchBudgetExceeded(f"automorphism search supports at most {MAX_AUT_VERTICES} vertices")
    if n == 0:
        raise MalformedGraph("empty graph has no ground set")
    search = _Search(g, budget)
    gens: list[Permutation] = []
    order = 1
    for i in reversed(range(n)):
        fixed = {v: v for v in range(i)}
        orb = _orbit_under(gens, i)
        for j in range(i + 1, n):
            if j in orb or search.colors[j] != search.colors[i]:
                continue
            a = search.extend({**fixed, i: j})
            if a is not None:
                gens.append(a)
                orb = _orbit_under(gens, i)
        order *= len(orb)
        if order > cap:
            raise OrderExceedsCap(f"automorphism group order exceeds cap {cap}")
    action = FiniteAction(n, tuple(gens)) if gens else FiniteAction.trivial(n)
    return action, order


def automorphism_group(g: Graph, cap: int = DEFAULT_CAP, budget: int = DEFAULT_SEARCH_BUDGET) -> FiniteAction:
    return automorphism_search(g, cap, budget)[0]
