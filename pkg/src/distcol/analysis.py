"""Structural measurements: girth and fixed-length cycle detection, bunched
edge counts, Turan-type edge bound predicates, neighbourhood density profiles
of power graphs, and the layer path-pair statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .colouring import TooLarge
from .graphs import (
    Graph,
    GraphError,
    _norm_edge,
    bfs_layers,
    line_graph,
    power,
)

INFINITY = math.inf

DEFAULT_CYCLE_CAP = 16


class NotCycleFree(Exception):
    """A bound that presumes C_l-freeness was asked about a graph containing
    C_l; carries the witness cycle."""

    def __init__(self, length: int, witness: tuple[int, ...]):
        super().__init__(f"graph contains a {length}-cycle: {witness}")
        self.length = length
        self.witness = witness


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle (math.inf for forests): per-root BFS, a
    non-tree edge closing at depths a and b witnesses a cycle of a+b+1."""
    best = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        depth = 0
        while frontier:
            if 2 * depth >= best:
                break
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if dist[w] < 0:
                        dist[w] = depth + 1
                        parent[w] = v
                        nxt.append(w)
                    elif parent[v] != w and dist[w] >= dist[v]:
                        best = min(best, dist[v] + dist[w] + 1)
            frontier = nxt
            depth += 1
    return best


def odd_girth(g: Graph) -> int | float:
    """Length of the shortest odd cycle (math.inf iff bipartite): an edge
    inside one BFS layer witnesses an odd closed walk of 2*depth+1."""
    best = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        depth = 0
        while frontier:
            if 2 * depth + 1 >= best:
                break
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if dist[w] < 0:
                        dist[w] = depth + 1
                        nxt.append(w)
                    elif dist[w] == dist[v]:
                        best = min(best, 2 * dist[v] + 1)
            frontier = nxt
            depth += 1
    return best


def contains_cycle(
    g: Graph, length: int, cap: int = DEFAULT_CYCLE_CAP
) -> tuple[bool, tuple[int, ...] | None]:
    """Exact-length cycle detection: is there a cycle of exactly `length`
    vertices as a subgraph (chords allowed)?

    Pruned DFS anchored at the minimum-index cycle vertex; a partial path is
    abandoned when the BFS distance back to the anchor (within the allowed
    vertex set) exceeds the remaining budget.  Deterministic: anchors and
    neighbours ascending, so the witness is reproducible.
    """
    if not 3 <= length <= cap:
        raise GraphError(f"cycle length must be in 3..{cap}, got {length}")
    if length > g.n:
        return False, None

    for anchor in range(g.n):
        # distances within the induced subgraph on vertices >= anchor
        dist = [-1] * g.n
        dist[anchor] = 0
        frontier = [anchor]
        depth = 0
        while frontier and depth < length:
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if w >= anchor and dist[w] < 0:
                        dist[w] = depth + 1
                        nxt.append(w)
            frontier = nxt
            depth += 1

        path = [anchor]
        on_path = bytearray(g.n)
        on_path[anchor] = 1

        def dfs(v: int, remaining: int) -> tuple[int, ...] | None:
            for w in g.adj[v]:
                if remaining == 1:
                    if w == anchor:
                        return tuple(path)
                    continue
                if w <= anchor or on_path[w]:
                    continue
                if dist[w] < 0 or dist[w] > remaining - 1:
                    continue
                path.append(w)
                on_path[w] = 1
                found = dfs(w, remaining - 1)
                if found is not None:
                    return found
                path.pop()
                on_path[w] = 0
            return None

        witness = dfs(anchor, length)
        if witness is not None:
            return True, witness
    return False, None


def _check_bipartition(g: Graph, part_a: Sequence[int], part_b: Sequence[int]) -> None:
    seen = set(part_a) | set(part_b)
    if len(seen) != len(part_a) + len(part_b) or seen != set(range(g.n)):
        raise GraphError("parts must partition the vertex set")
    a_set = set(part_a)
    for u, v in g.edges:
        if (u in a_set) == (v in a_set):
            raise GraphError(f"edge ({u}, {v}) lies inside one part: input not bipartite")


def bunched_edge_count(
    g: Graph, part_a: Sequence[int], part_b: Sequence[int], delta: float
) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Edges incident to a B-side vertex of degree at least delta.

    Degrees are integers and delta is generically irrational; exact equality
    counts as bunched ("degree at least delta"), with no tolerance applied.
    """
    _check_bipartition(g, part_a, part_b)
    heavy = {v for v in part_b if g.degree(v) >= delta}
    bunched = tuple(e for e in g.edges if e[0] in heavy or e[1] in heavy)
    return len(bunched), bunched


def bunched_edge_bound_holds(
    g: Graph,
    part_a: Sequence[int],
    part_b: Sequence[int],
    k: int,
    cap: int = DEFAULT_CYCLE_CAP,
) -> bool:
    """For a C_2k-free bipartite graph, at most delta*|A| edges are bunched
    with respect to A, where delta = 2(k-1)|A|^(1/k) + 16(k-1).

    C_2k-freeness is verified first; NotCycleFree is raised otherwise since
    the bound is not claimed in that case.
    """
    if k < 2:
        raise GraphError("k must be at least 2")
    found, cyc = contains_cycle(g, 2 * k, cap=cap)
    if found:
        raise NotCycleFree(2 * k, cyc)
    n_a = len(part_a)
    if n_a < 1:
        raise GraphError("part A must be non-empty")
    delta = 2 * (k - 1) * n_a ** (1 / k) + 16 * (k - 1)
    count, _ = bunched_edge_count(g, part_a, part_b, delta)
    return count <= delta * n_a


def even_cycle_edge_bound_check(g: Graph, k: int, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    """For a C_2k-free graph: |E| <= (k-1) n^(1+1/k) + 16(k-1) n.

    Raises NotCycleFree when a C_2k is found (the bound is then not claimed).
    """
    if k < 2:
        raise GraphError("k must be at least 2")
    found, cyc = contains_cycle(g, 2 * k, cap=cap)
    if found:
        raise NotCycleFree(2 * k, cyc)
    n = g.n
    return g.m <= (k - 1) * n ** (1 + 1 / k) + 16 * (k - 1) * n


@dataclass(frozen=True)
class DensityReport:
    """Neighbourhood density of a derived power graph.

    implied_f is the exact rational max_degree^2 / max_span_edges (math.inf
    when no neighbourhood spans an edge): the sparsity parameter that governs
    whether a logarithmic colouring saving is available.
    """

    t: int
    mode: str
    max_degree: int
    max_span_edges: int
    implied_f: Fraction | float
    per_root: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        if isinstance(self.implied_f, Fraction):
            f_str = f"{self.implied_f.numerator}/{self.implied_f.denominator}"
            f_float = float(self.implied_f)
        else:
            f_str, f_float = "inf", self.implied_f
        out = {
            "t": self.t,
            "mode": self.mode,
            "maxDegreePower": self.max_degree,
            "maxSpanEdges": self.max_span_edges,
            "impliedF": f_str,
            "impliedFFloat": f_float,
        }
        if self.per_root is not None:
            out["perRoot"] = [list(row) for row in self.per_root]
        return out


def density_profile(
    g: Graph,
    t: int,
    mode: str = "vertex",
    max_derived_vertices: int = 20000,
    keep_per_root: bool = False,
) -> DensityReport:
    """Build the derived power graph and measure, over all of its vertices,
    the maximum number of edges spanning a neighbourhood."""
    if mode == "vertex":
        base = g
    elif mode == "edge":
        base = line_graph(g)
    else:
        raise GraphError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    if base.n > max_derived_vertices:
        raise TooLarge(f"derived graph has {base.n} vertices, cap is {max_derived_vertices}")
    derived = power(base, t)

    max_span = 0
    per_root = [] if keep_per_root else None
    adj_sets = derived._adj_sets
    for v in range(derived.n):
        nb = adj_sets[v]
        span = sum(len(adj_sets[u] & nb) for u in nb) // 2
        if per_root is not None:
            per_root.append((v, span))
        if span > max_span:
            max_span = span

    max_deg = derived.max_degree
    implied: Fraction | float
    implied = Fraction(max_deg * max_deg, max_span) if max_span else INFINITY
    return DensityReport(
        t=t,
        mode=mode,
        max_degree=max_deg,
        max_span_edges=max_span,
        implied_f=implied,
        per_root=tuple(per_root) if per_root is not None else None,
    )


@dataclass(frozen=True)
class PathPairReport:
    """Counts of layer-anchored paths: path_count enumerates distinct paths,
    pair_count the distinct endpoint (or endpoint-edge) pairs they connect."""

    root: int | tuple[int, int]
    t: int
    variant: str
    path_count: int
    pair_count: int

    def to_json(self) -> dict:
        return {
            "root": list(self.root) if isinstance(self.root, tuple) else self.root,
            "t": self.t,
            "variant": self.variant,
            "pathCount": self.path_count,
            "pairCount": self.pair_count,
        }


def path_pair_statistic(
    g: Graph, root: int, t: int, variant: str = "plain"
) -> PathPairReport:
    """Simple paths of length exactly t between distinct vertices of layer
    A_t(root); the peripheral variant additionally requires every interior
    vertex to lie in a layer of index >= t.

    Each path is counted once (enumeration starts from the smaller endpoint);
    pair_count is the number of unordered endpoint pairs with at least one
    qualifying path.
    """
    if t < 1:
        raise GraphError("t must be at least 1")
    if variant not in ("plain", "peripheral"):
        raise GraphError(f"variant must be 'plain' or 'peripheral', got {variant!r}")
    decomposition = bfs_layers(g, root)
    if decomposition.depth < t:
        return PathPairReport(root, t, variant, 0, 0)
    target = set(decomposition.layers[t])

    layer = decomposition.layer_index
    peripheral = variant == "peripheral"
    paths = 0
    pairs: set[tuple[int, int]] = set()
    on_path = bytearray(g.n)

    def dfs(start: int, v: int, remaining: int) -> None:
        nonlocal paths
        for w in g.adj[v]:
            if on_path[w]:
                continue
            lw = layer[w]
            if remaining == 1:
                if w in target and w > start:
                    paths += 1
                    pairs.add((start, w))
                continue
            # endpoint must sit in layer t; layers change by at most 1 per step
            if lw < 0 or lw + (remaining - 1) < t or lw - (remaining - 1) > t:
                continue
            if peripheral and lw < t:
                continue
            on_path[w] = 1
            dfs(start, w, remaining - 1)
            on_path[w] = 0

    for s in sorted(target):
        on_path[s] = 1
        dfs(s, s, t)
        on_path[s] = 0
    return PathPairReport(root, t, variant, paths, len(pairs))


def edge_path_pair_statistic(g: Graph, root: tuple[int, int], t: int) -> PathPairReport:
    """Simple paths x_0..x_{t+1} whose interior x_1..x_t has length t-1 and
    whose end edges x_0x_1 and x_tx_{t+1} both meet layer A_{t-1} of the root
    edge.  path_count counts each undirected path once; pair_count counts
    unordered pairs of distinct end edges."""
    if t < 2:
        raise GraphError("t must be at least 2")
    decomposition = bfs_layers(g, _norm_edge(*root))
    layer = decomposition.layer_index
    if decomposition.depth < t - 1:
        return PathPairReport(_norm_edge(*root), t, "edge", 0, 0)
    marker = set(decomposition.layers[t - 1])

    total_len = t + 1
    paths = 0
    pairs: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    on_path = bytearray(g.n)
    seq: list[int] = []

    def feasible(w: int, remaining: int) -> bool:
        lw = layer[w]
        if lw < 0:
            return False  # path vertices are always in the root component
        return abs(lw - (t - 1)) <= remaining + 1

    def dfs(v: int, remaining: int) -> None:
        nonlocal paths
        for w in g.adj[v]:
            if on_path[w]:
                continue
            if remaining == 1:
                if w not in marker and seq[-1] not in marker:
                    continue
                # count each undirected path once, by the orientation of its
                # first edge versus its reversed last edge
                first = (seq[0], seq[1])
                last = (w, seq[-1])
                if first < last:
                    paths += 1
                    e1 = _norm_edge(seq[0], seq[1])
                    e2 = _norm_edge(seq[-1], w)
                    pairs.add((e1, e2) if e1 < e2 else (e2, e1))
                continue
            if not feasible(w, remaining - 1):
                continue
            seq.append(w)
            on_path[w] = 1
            dfs(w, remaining - 1)
            on_path[w] = 0
            seq.pop()

    for x0 in range(g.n):
        for x1 in g.adj[x0]:
            if x0 not in marker and x1 not in marker:
                continue
            seq.clear()
            seq.extend((x0, x1))
            on_path[x0] = on_path[x1] = 1
            dfs(x1, total_len - 1)
            on_path[x0] = on_path[x1] = 0
    return PathPairReport(_norm_edge(*root), t, "edge", paths, len(pairs))


@dataclass(frozen=True)
class PathBoundReport:
    """Worst-case per-root path count against the explicit C_l-free bound."""

    mode: str
    t: int
    ell: int
    epsilon: float
    bound: float
    worst_count: int
    worst_root: int | tuple[int, int] | None
    ok: bool

    @property
    def margin(self) -> float:
        return self.bound - self.worst_count


def path_count_bound_check(
    g: Graph, t: int, ell: int, mode: str = "vertex", cap: int = DEFAULT_CYCLE_CAP
) -> PathBoundReport:
    """Check the per-root path counts against the explicit even-cycle bounds:
    26.5 l d^(2t-eps) with eps = (l-2t)/l in vertex mode, and
    (112 + 12*2^(2/l)) l d^(2t-eps) with eps = (l-2t+2)/l in edge mode.

    Requires l even, l >= 2t+2 (vertex) or l >= 2t (edge), max degree >= 2,
    and verified C_l-freeness (NotCycleFree otherwise).
    """
    if ell % 2:
        raise GraphError("l must be even")
    if mode == "vertex":
        if ell < 2 * t + 2:
            raise GraphError("vertex mode requires l >= 2t+2")
    elif mode == "edge":
        if ell < 2 * t:
            raise GraphError("edge mode requires l >= 2t")
    else:
        raise GraphError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    d = g.max_degree
    if d < 2:
        raise GraphError("max degree must be at least 2")
    found, cyc = contains_cycle(g, ell, cap=cap)
    if found:
        raise NotCycleFree(ell, cyc)

    if mode == "vertex":
        eps = (ell - 2 * t) / ell
        bound = 26.5 * ell * d ** (2 * t - eps)
        roots = list(range(g.n))
        counts = (path_pair_statistic(g, r, t, "plain").path_count for r in roots)
    else:
        eps = (ell - 2 * t + 2) / ell
        bound = (112 + 12 * 2 ** (2 / ell)) * ell * d ** (2 * t - eps)
        roots = list(g.edges)
        counts = (edge_path_pair_statistic(g, r, t).path_count for r in roots)

    worst_count = -1
    worst_root = None
    for root, count in zip(roots, counts):
        if count > worst_count:
            worst_count, worst_root = count, root
    return PathBoundReport(
        mode=mode,
        t=t,
        ell=ell,
        epsilon=eps,
        bound=bound,
        worst_count=max(worst_count, 0),
        worst_root=worst_root,
        ok=worst_count <= bound,
    )


def peripheral_path_bound_check(
    g: Graph, t: int, ell: int, cap: int = DEFAULT_CYCLE_CAP
) -> PathBoundReport:
    """Experimental odd-l vertex check: peripheral pair counts per root
    against the displayed constant (1 + 2kt + k0^2 + 2*sum (2k0+it)t) d^(2t-1)
    with k = (l-3t)/2 and k0 = t if k = 0 mod t else k mod t.

    The statistic measured is the peripheral pair count; the constant is
    evaluated verbatim, so treat results as indicative rather than sharp.
    """
    if t < 1 or t % 2 == 0:
        raise GraphError("t must be odd and positive")
    if ell % 2 == 0 or ell < 3 * t:
        raise GraphError("l must be odd and at least 3t")
    d = g.max_degree
    if d < 2:
        raise GraphError("max degree must be at least 2")
    found, cyc = contains_cycle(g, ell, cap=cap)
    if found:
        raise NotCycleFree(ell, cyc)

    k = (ell - 3 * t) // 2
    if k == 0:
        coeff = 1.0
    else:
        k0 = t if k % t == 0 else k % t
        total = sum((2 * k0 + i * t) * t for i in range((2 * k - 2 * k0) // t + 1))
        coeff = 1 + 2 * k * t + k0 * k0 + 2 * total
    bound = coeff * d ** (2 * t - 1)

    worst_count = -1
    worst_root = None
    for root in range(g.n):
        count = path_pair_statistic(g, root, t, "peripheral").pair_count
        if count > worst_count:
            worst_count, worst_root = count, root
    return PathBoundReport(
        mode="vertex-peripheral",
        t=t,
        ell=ell,
        epsilon=1 / (2 * t),
        bound=bound,
        worst_count=max(worst_count, 0),
        worst_root=worst_root,
        ok=worst_count <= bound,
    )
