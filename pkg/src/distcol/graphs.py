"""Core graph substrate: immutable simple graphs, powers, line graphs, BFS layers.

Vertices are always the dense integers 0..n-1; this fixed ordering is what
makes BFS trees, edge indices, and file outputs reproducible across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs, vertices, or edges."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction.  Edges are stored as sorted pairs in
    lexicographic order, which defines the canonical edge indexing shared by
    line graphs, colour serialization, and file output.  Adjacency is kept
    both as sorted neighbour tuples (O(deg) iteration) and as hash sets
    (O(1) expected membership).
    """

    __slots__ = ("n", "edges", "adj", "_adj_sets", "_edge_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            edge_set.add(_norm_edge(u, v))
        self.n = n
        self.edges = tuple(sorted(edge_set))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        self.adj = tuple(tuple(sorted(nb)) for nb in lists)
        self._adj_sets = tuple(frozenset(nb) for nb in self.adj)
        self._edge_ids: dict[tuple[int, int], int] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adj)

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def has_edge(self, u: int, v: int) -> bool:
        return self.adjacent(u, v)

    def edge_index(self) -> dict[tuple[int, int], int]:
        """Canonical edge id: position of the sorted pair in lexicographic order."""
        if self._edge_ids is None:
            self._edge_ids = {e: i for i, e in enumerate(self.edges)}
        return self._edge_ids

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """A canonical 2-colouring (per component, the side of the least vertex
        goes left), or None if some component has an odd cycle."""
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        part_a = tuple(v for v in range(self.n) if side[v] == 0)
        part_b = tuple(v for v in range(self.n) if side[v] == 1)
        return part_a, part_b

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(g: Graph, sources: Sequence[int], max_depth: int | None = None) -> list[int]:
    """Distances from a set of source vertices; -1 marks unreached vertices."""
    dist = [-1] * g.n
    frontier = []
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            frontier.append(s)
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = depth
                    nxt.append(w)
        frontier = nxt
    return dist


def power(g: Graph, t: int) -> Graph:
    """t-th power: same vertices, u ~ v iff 1 <= dist_G(u, v) <= t."""
    if t < 1:
        raise GraphError("power exponent t must be at least 1")
    if t == 1:
        return g
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, [u], max_depth=t)
        for w in range(u + 1, g.n):
            if dist[w] > 0:
                edges.append((u, w))
    return Graph(g.n, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph on the canonical edge indexing; ids adjacent iff the edges
    share an endpoint."""
    ids = g.edge_index()
    ledges = []
    for v in range(g.n):
        incident = [ids[_norm_edge(v, w)] for w in g.adj[v]]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                ledges.append(_norm_edge(incident[i], incident[j]))
    return Graph(g.m, ledges)


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers from a root vertex or root edge.

    layers[i] holds the vertices at distance exactly i from the root set;
    only the root's component is covered.  parent[v] is the least-index
    neighbour of v in the previous layer (None for roots and unreached
    vertices); layer_index[v] is -1 for unreached vertices.
    """

    root: int | tuple[int, int]
    layers: tuple[tuple[int, ...], ...]
    parent: tuple[int | None, ...]
    layer_index: tuple[int, ...]

    def layer_of(self, v: int) -> int | None:
        i = self.layer_index[v]
        return None if i < 0 else i

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


def bfs_layers(g: Graph, root: int | tuple[int, int]) -> LayerDecomposition:
    """Layer decomposition rooted at a vertex or at an edge of g."""
    if isinstance(root, tuple):
        u, v = root
        e = _norm_edge(u, v)
        if e not in g.edge_index():
            raise GraphError(f"root edge {e} is not in the graph")
        root = e
        sources = list(e)
    else:
        if not (0 <= root < g.n):
            raise GraphError(f"root vertex {root} out of range")
        sources = [root]

    dist = bfs_distances(g, sources)
    reached_depth = max((d for d in dist if d >= 0), default=0)
    layers: list[list[int]] = [[] for _ in range(reached_depth + 1)]
    for v in range(g.n):
        if dist[v] >= 0:
            layers[dist[v]].append(v)

    parent: list[int | None] = [None] * g.n
    for v in range(g.n):
        if dist[v] > 0:
            parent[v] = min(w for w in g.adj[v] if dist[w] == dist[v] - 1)

    return LayerDecomposition(
        root=root,
        layers=tuple(tuple(layer) for layer in layers),
        parent=tuple(parent),
        layer_index=tuple(dist),
    )


@dataclass(frozen=True)
class LayerBipartite:
    """Bipartite subgraph between two consecutive BFS layers, relabelled to
    0..k-1 (part A first).  original[new_id] recovers the source vertex."""

    graph: Graph
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    original: tuple[int, ...]


def layer_bipartite(g: Graph, decomposition: LayerDecomposition, i: int) -> LayerBipartite:
    """The bipartite graph G[A_i, A_{i+1}]: exactly the g-edges with one
    endpoint in each layer."""
    if not (0 <= i and i + 1 < len(decomposition.layers)):
        raise GraphError(f"layer index {i} out of range")
    side_a = decomposition.layers[i]
    side_b = decomposition.layers[i + 1]
    relabel = {v: k for k, v in enumerate(side_a)}
    offset = len(side_a)
    relabel.update({v: offset + k for k, v in enumerate(side_b)})
    edges = []
    b_set = set(side_b)
    for v in side_a:
        for w in g.adj[v]:
            if w in b_set:
                edges.append((relabel[v], relabel[w]))
    return LayerBipartite(
        graph=Graph(len(side_a) + len(side_b), edges),
        part_a=tuple(range(len(side_a))),
        part_b=tuple(range(offset, offset + len(side_b))),
        original=side_a + side_b,
    )
