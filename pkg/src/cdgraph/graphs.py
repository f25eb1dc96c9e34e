"""Common divisor graphs on class sizes and the associated prime graphs.

``gamma`` joins distinct class sizes > 1 that share a prime; ``gamma_p`` is its
induced subgraph on the sizes of p-regular classes; ``delta_p`` joins primes
``r != s`` whose product divides some p-regular class size; the bipartite
divisor graph joins a prime to each p-regular size it divides.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable

from .classes import ClassProfile, prime_divisors

__all__ = [
    "DivisorGraph",
    "BipartiteDivisorGraph",
    "GraphMetrics",
    "p_regular_sizes",
    "gamma",
    "gamma_p",
    "delta_p",
    "bipartite_divisor",
    "metrics",
    "match_components",
    "equal_size_caveat",
    "to_dot",
]


@dataclass
class DivisorGraph:
    kind: str  # "gamma", "gamma_p" or "delta_p"
    p: int | None
    vertices: list[int]
    edges: set[tuple[int, int]] = field(default_factory=set)  # index pairs i < j

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def labelled_adjacency(self) -> dict[Hashable, set]:
        adj = self.adjacency()
        return {self.vertices[i]: {self.vertices[j] for j in adj[i]} for i in range(len(self.vertices))}

    def has_edge(self, u: int, v: int) -> bool:
        i, j = self.vertices.index(u), self.vertices.index(v)
        return (min(i, j), max(i, j)) in self.edges


@dataclass
class BipartiteDivisorGraph:
    p: int | None
    prime_side: list[int]
    size_side: list[int]
    edges: list[tuple[int, int]]  # (prime, size)

    def labelled_adjacency(self) -> dict[Hashable, set]:
        adj: dict[Hashable, set] = {("prime", r): set() for r in self.prime_side}
        adj.update({("size", s): set() for s in self.size_side})
        for r, s in self.edges:
            adj[("prime", r)].add(("size", s))
            adj[("size", s)].add(("prime", r))
        return adj


@dataclass
class GraphMetrics:
    component_count: int
    components: list[list]  # vertex labels per component, in vertex order
    diameters: list[int]
    component_complete: list[bool]
    is_complete: bool
    regular_degree: int | None


def p_regular_sizes(profile: ClassProfile, p: int | None) -> list[int]:
    """Distinct sizes of p-regular classes (all classes when ``p`` is None)."""
    return sorted({c.size for c in profile.classes
                   if p is None or c.order_of_elements % p})


def _size_graph(sizes: list[int], kind: str, p: int | None) -> DivisorGraph:
    verts = sorted(s for s in set(sizes) if s > 1)
    edges = {(i, j) for i in range(len(verts)) for j in range(i + 1, len(verts))
             if math.gcd(verts[i], verts[j]) > 1}
    return DivisorGraph(kind, p, verts, edges)


def gamma(profile: ClassProfile) -> DivisorGraph:
    return _size_graph(profile.cs, "gamma", None)


def gamma_p(profile: ClassProfile, p: int) -> DivisorGraph:
    return _size_graph(p_regular_sizes(profile, p), "gamma_p", p)


def delta_p(profile: ClassProfile, p: int) -> DivisorGraph:
    sizes = [s for s in p_regular_sizes(profile, p) if s > 1]
    primes = sorted({r for s in sizes for r in prime_divisors(s)})
    edges = {(i, j) for i in range(len(primes)) for j in range(i + 1, len(primes))
             if any(s % (primes[i] * primes[j]) == 0 for s in sizes)}
    return DivisorGraph("delta_p", p, primes, edges)


def bipartite_divisor(profile: ClassProfile, p: int) -> BipartiteDivisorGraph:
    sizes = [s for s in p_regular_sizes(profile, p) if s > 1]
    primes = sorted({r for s in sizes for r in prime_divisors(s)})
    edges = [(r, s) for r in primes for s in sizes if s % r == 0]
    return BipartiteDivisorGraph(p, primes, sizes, edges)


def _bfs(adj: dict, src) -> dict:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def metrics(g: DivisorGraph | BipartiteDivisorGraph) -> GraphMetrics:
    """Components, exact diameters, completeness and regularity.

    A singleton component has diameter 0; the empty graph has no components
    and counts as complete.
    """
    adj = g.labelled_adjacency()
    order = list(adj)
    seen: set = set()
    components, diameters, complete = [], [], []
    for v in order:
        if v in seen:
            continue
        dist = _bfs(adj, v)
        comp = [u for u in order if u in dist]
        seen.update(comp)
        diam = max(max(_bfs(adj, u).values()) for u in comp)
        components.append(comp)
        diameters.append(diam)
        complete.append(all(len(adj[u]) == len(comp) - 1 for u in comp))
    degrees = {len(adj[u]) for u in order}
    return GraphMetrics(
        component_count=len(components),
        components=components,
        diameters=diameters,
        component_complete=complete,
        is_complete=len(components) <= 1 and all(complete),
        regular_degree=degrees.pop() if len(degrees) == 1 else None,
    )


def match_components(gp: DivisorGraph, dp: DivisorGraph) -> list[tuple[int, int]]:
    """Pair components of ``gamma_p`` and ``delta_p`` through divisibility.

    A prime belongs to the component of the sizes it divides.  Returns pairs
    of component indices (gamma_p, delta_p).
    """
    mg, md = metrics(gp), metrics(dp)
    where = {r: k for k, comp in enumerate(md.components) for r in comp}
    pairs = []
    for k, comp in enumerate(mg.components):
        ks = {where[r] for s in comp for r in prime_divisors(s)}
        if len(ks) != 1:
            raise AssertionError(f"gamma_p component {comp} meets {len(ks)} delta_p components")
        pairs.append((k, ks.pop()))
    return pairs


def equal_size_caveat(profile: ClassProfile, p: int | None = None) -> list[int]:
    """Sizes shared by two non-central p-regular classes and coprime to all others.

    For such groups the class-indexed graph and the size graph can have
    different diameters, so diameter comparisons are reported, not asserted.
    """
    classes = [c for c in profile.classes if c.size > 1 and (p is None or c.order_of_elements % p)]
    counts: dict[int, int] = {}
    for c in classes:
        counts[c.size] = counts.get(c.size, 0) + 1
    sizes = set(counts)
    return sorted(s for s, k in counts.items()
                  if k >= 2 and all(math.gcd(s, t) == 1 for t in sizes if t != s))


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"]


def to_dot(g: DivisorGraph | BipartiteDivisorGraph, name: str = "G") -> str:
    """Graphviz text; vertex label is the size or prime, colour the component."""
    m = metrics(g)
    comp_of = {v: k for k, comp in enumerate(m.components) for v in comp}
    adj = g.labelled_adjacency()

    def node_id(v) -> str:
        if isinstance(v, tuple):
            return f"{v[0][0]}{v[1]}"
        return f"v{v}"

    def label(v) -> str:
        return str(v[1]) if isinstance(v, tuple) else str(v)

    kind = g.kind if isinstance(g, DivisorGraph) else "bipartite"
    lines = [f'graph "{name}" {{', f'  label="{kind}{"" if g.p is None else f" p={g.p}"}";']
    for v in adj:
        k = comp_of[v]
        lines.append(f'  {node_id(v)} [label="{label(v)}", component={k}, '
                     f'color="{_PALETTE[k % len(_PALETTE)]}"];')
    done = set()
    for u in adj:
        for v in sorted(adj[u], key=lambda w: list(adj).index(w)):
            if (v, u) in done:
                continue
            done.add((u, v))
            lines.append(f"  {node_id(u)} -- {node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
