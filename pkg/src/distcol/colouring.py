"""Distance colouring: greedy bounds at all scales, an exact DSATUR-ordered
branch-and-bound solver at desk scale, and clique certification on power
graphs via truncated BFS (the power graph is never materialized for that)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, _norm_edge, line_graph, power


class TooLarge(Exception):
    """Instance exceeds the configured exact-solver or derived-graph cap."""


@dataclass(frozen=True)
class Colouring:
    """A proper colouring of a derived graph.

    mode/t describe the target: "vertex" colours power(G, t), "edge" colours
    power(line_graph(G), t).  Colours are 0-based and contiguous.
    """

    mode: str
    t: int
    colours: tuple[int, ...]
    num_colours: int

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "t": self.t,
            "numColours": self.num_colours,
            "colours": list(self.colours),
        }


def _check_proper(h: Graph, colours: Sequence[int]) -> None:
    for u, v in h.edges:
        if colours[u] == colours[v]:
            raise AssertionError(f"improper colouring at edge ({u}, {v})")


def degeneracy_order(h: Graph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex (ties by
    index); colouring in this order uses at most degeneracy+1 colours."""
    deg = list(h.degrees())
    removed = [False] * h.n
    removal: list[int] = []
    for _ in range(h.n):
        v = min(
            (u for u in range(h.n) if not removed[u]),
            key=lambda u: (deg[u], u),
        )
        removed[v] = True
        removal.append(v)
        for w in h.adj[v]:
            if not removed[w]:
                deg[w] -= 1
    removal.reverse()
    return removal


def greedy_colour(h: Graph, order: Sequence[int] | str = "degeneracy") -> Colouring:
    """First-fit colouring along the given order ("degeneracy", "natural", or
    an explicit permutation).  Deterministic given the order."""
    if isinstance(order, str):
        if order == "degeneracy":
            seq = degeneracy_order(h)
        elif order == "natural":
            seq = list(range(h.n))
        else:
            raise GraphError(f"unknown order heuristic {order!r}")
    else:
        seq = list(order)
        if sorted(seq) != list(range(h.n)):
            raise GraphError("order must be a permutation of the vertices")

    colours = [-1] * h.n
    for v in seq:
        used = {colours[w] for w in h.adj[v] if colours[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colours[v] = c
    num = max(colours, default=-1) + 1 if h.n else 0
    return Colouring("vertex", 1, tuple(colours), num)


def greedy_clique(h: Graph) -> tuple[int, ...]:
    """Deterministic greedy clique: seed with a max-degree vertex, then extend
    by the candidate keeping the most candidates alive (ties by index)."""
    if h.n == 0:
        return ()
    start = max(range(h.n), key=lambda v: (h.degree(v), -v))
    clique = [start]
    candidates = set(h.adj[start])
    while candidates:
        best = min(
            candidates,
            key=lambda c: (-len(candidates & h._adj_sets[c]), c),
        )
        clique.append(best)
        candidates &= h._adj_sets[best]
    return tuple(sorted(clique))


def _exact_colouring(h: Graph, limit: int) -> tuple[int, tuple[int, ...]]:
    """DSATUR-ordered branch and bound, seeded with a greedy clique lower
    bound and a greedy upper bound; symmetry broken by pre-colouring the
    clique.  Returns (chromatic number, witness)."""
    n = h.n
    if n > limit:
        raise TooLarge(f"{n} vertices exceed the exact-solver cap {limit}")
    if n == 0:
        return 0, ()
    if h.m == 0:
        return 1, tuple([0] * n)

    ub_col = greedy_colour(h)
    best_count = ub_col.num_colours
    best_assign = list(ub_col.colours)
    clique = greedy_clique(h)
    lb = len(clique)
    if lb >= best_count:
        return best_count, tuple(best_assign)

    colour = [-1] * n
    for i, v in enumerate(clique):
        colour[v] = i
    adj_sets = h._adj_sets
    degs = h.degrees()
    uncoloured = [v for v in range(n) if colour[v] < 0]

    def select() -> int:
        best_v, best_key = -1, None
        for v in uncoloured:
            if colour[v] >= 0:
                continue
            sat = len({colour[w] for w in adj_sets[v] if colour[w] >= 0})
            key = (sat, degs[v], -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(num_used: int, remaining: int) -> None:
        nonlocal best_count, best_assign
        if num_used >= best_count:
            return
        if remaining == 0:
            best_count = num_used
            best_assign = colour.copy()
            return
        v = select()
        forbidden = {colour[w] for w in adj_sets[v] if colour[w] >= 0}
        cap = min(num_used + 1, best_count - 1)
        for c in range(cap):
            if c in forbidden:
                continue
            colour[v] = c
            search(max(num_used, c + 1), remaining - 1)
            colour[v] = -1
            if best_count <= lb:
                return

    search(lb, len(uncoloured))
    return best_count, tuple(best_assign)


def exact_chromatic(h: Graph, limit: int = 64) -> int:
    """Exact chromatic number; raises TooLarge above the vertex cap."""
    return _exact_colouring(h, limit)[0]


def exact_colouring(h: Graph, limit: int = 64) -> Colouring:
    k, assign = _exact_colouring(h, limit)
    return Colouring("vertex", 1, assign, k)


def _derived_graph(g: Graph, t: int, mode: str) -> Graph:
    if mode == "vertex":
        return power(g, t)
    if mode == "edge":
        return power(line_graph(g), t)
    raise GraphError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def distance_chromatic(
    g: Graph,
    t: int,
    mode: str = "vertex",
    method: str = "exact",
    limit: int = 64,
) -> tuple[int, Colouring]:
    """Distance-t chromatic number (vertex mode) or index (edge mode).

    Builds the derived graph and dispatches to the exact solver (subject to
    the vertex cap) or the degeneracy greedy.  Returns the colour count and
    the witness colouring."""
    derived = _derived_graph(g, t, mode)
    if method == "exact":
        if derived.n > limit:
            raise TooLarge(f"derived graph has {derived.n} vertices, cap is {limit}")
        col = exact_colouring(derived, limit)
    elif method == "greedy":
        col = greedy_colour(derived)
    else:
        raise GraphError(f"method must be 'exact' or 'greedy', got {method!r}")
    _check_proper(derived, col.colours)
    col = Colouring(mode, t, col.colours, col.num_colours)
    return col.num_colours, col


def _vertex_ball(g: Graph, source: int, t: int) -> bytearray:
    seen = bytearray(g.n)
    seen[source] = 1
    frontier = [source]
    for _ in range(t):
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        frontier = nxt
    return seen

def _edge_ball(
    g: Graph, source_id: int, t: int, incident: list[list[int]]
) -> bytearray:
    edges = g.edges
    seen = bytearray(g.m)
    seen[source_id] = 1
    frontier = [source_id]
    for _ in range(t):
        nxt = []
        for e in frontier:
            u, v = edges[e]
            for f in incident[u]:
                if not seen[f]:
                    seen[f] = 1
                    nxt.append(f)
            for f in incident[v]:
                if not seen[f]:
                    seen[f] = 1
                    nxt.append(f)
        frontier = nxt
    return seen


def verify_power_clique(
    g: Graph,
    t: int,
    mode: str,
    members: Iterable[int] | Iterable[tuple[int, int]],
) -> tuple[bool, tuple | None]:
    """Check that the members are pairwise adjacent in the t-th power of g
    (vertex mode) or of its line graph (edge mode), by truncated BFS from
    each member; the power graph is never materialized.

    Edge-mode members may be vertex pairs or canonical edge ids.  Returns
    (True, None) or (False, violating_pair) with the pair in the member
    representation."""
    if t < 1:
        raise GraphError("t must be at least 1")
    members = list(members)
    if not members:
        raise GraphError("member set must be non-empty")

    if mode == "vertex":
        ids = []
        for v in members:
            if not (0 <= v < g.n):
                raise GraphError(f"vertex {v} out of range")
            ids.append(v)
        ordered = sorted(set(ids))
        for idx, u in enumerate(ordered):
            ball = _vertex_ball(g, u, t)
            for v in ordered[idx + 1 :]:
                if not ball[v]:
                    return False, (u, v)
        return True, None

    if mode == "edge":
        index = g.edge_index()
        ids = []
        for e in members:
            if isinstance(e, tuple):
                key = _norm_edge(*e)
                if key not in index:
                    raise GraphError(f"edge {key} is not in the graph")
                ids.append(index[key])
            else:
                if not (0 <= e < g.m):
                    raise GraphError(f"edge id {e} out of range")
                ids.append(e)
        ordered = sorted(set(ids))
        incident: list[list[int]] = [[] for _ in range(g.n)]
        for eid, (u, v) in enumerate(g.edges):
            incident[u].append(eid)
            incident[v].append(eid)
        for idx, a in enumerate(ordered):
            ball = _edge_ball(g, a, t, incident)
            for b in ordered[idx + 1 :]:
                if not ball[b]:
                    return False, (g.edges[a], g.edges[b])
        return True, None

    raise GraphError(f"mode must be 'vertex' or 'edge', got {mode!r}")
