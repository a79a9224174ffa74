"""Generators for the extremal constructions: tuple-cycle graphs, projective
plane incidence graphs, and the balanced bipartite product with its derived
families.

All generators are deterministic: blocks are numbered in increasing block
index, tuples in lexicographic order, and product parts in lexicographic
(factor-1 index, factor-2 index) order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Sequence

from .graphs import Graph, _norm_edge


class ConstructionError(ValueError):
    """Invalid construction parameters (parity, divisibility, range)."""


class SizeCapExceeded(ConstructionError):
    """The requested construction exceeds the configured vertex/edge caps."""


class NoMatching(ConstructionError):
    """No perfect matching exists, so no matching ordering can be built."""


class NoComatching(ConstructionError):
    """No perfect matching avoids the edges; the graph is complete bipartite."""


@dataclass(frozen=True)
class SizeCaps:
    """Hard limits applied before a generator allocates anything."""

    max_vertices: int = 10**6
    max_edges: int = 10**7

    def check(self, vertices: int, edges: int) -> None:
        if vertices > self.max_vertices:
            raise SizeCapExceeded(
                f"construction needs {vertices} vertices, cap is {self.max_vertices}"
            )
        if edges > self.max_edges:
            raise SizeCapExceeded(
                f"construction needs {edges} edges, cap is {self.max_edges}"
            )


DEFAULT_CAPS = SizeCaps()


@dataclass(frozen=True)
class BipartiteOrdering:
    """A balanced bipartite graph with index-aligned part orderings.

    kind records that a_i b_i is always an edge ("matching"), never an edge
    ("comatching"), or unconstrained ("unordered").  The invariants are
    validated on construction.
    """

    graph: Graph
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    kind: str = "unordered"

    def __post_init__(self) -> None:
        if self.kind not in ("matching", "comatching", "unordered"):
            raise ConstructionError(f"unknown ordering kind {self.kind!r}")
        if len(self.part_a) != len(self.part_b):
            raise ConstructionError("parts must have equal size")
        seen = set(self.part_a) | set(self.part_b)
        if len(seen) != len(self.part_a) + len(self.part_b) or seen != set(range(self.graph.n)):
            raise ConstructionError("parts must partition the vertex set")
        a_set = set(self.part_a)
        for u, v in self.graph.edges:
            if (u in a_set) == (v in a_set):
                raise ConstructionError(f"edge ({u}, {v}) lies inside one part")
        for a, b in zip(self.part_a, self.part_b):
            if self.kind == "matching" and not self.graph.adjacent(a, b):
                raise ConstructionError(f"matching ordering violated at pair ({a}, {b})")
            if self.kind == "comatching" and self.graph.adjacent(a, b):
                raise ConstructionError(f"comatching ordering violated at pair ({a}, {b})")

    @property
    def size(self) -> int:
        return len(self.part_a)

    def to_label_json(self) -> dict:
        labels = {}
        for i, v in enumerate(self.part_a):
            labels[str(v)] = {"part": "A", "index": i}
        for i, v in enumerate(self.part_b):
            labels[str(v)] = {"part": "B", "index": i}
        return {"kind": "parts", "ordering": self.kind, "labels": labels}


@dataclass(frozen=True)
class BlockLabelling:
    """Vertex labels for the tuple-cycle constructions: vertex -> (block, tuple).

    Block i occupies the contiguous id range [i*block_size, (i+1)*block_size);
    within a block, tuples are in lexicographic order.
    """

    num_blocks: int
    symbols: int
    tuple_length: int
    tuples: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def block_size(self) -> int:
        return len(self.tuples)

    def block(self, i: int) -> tuple[int, ...]:
        if not (0 <= i < self.num_blocks):
            raise ConstructionError(f"block index {i} out of range")
        base = i * self.block_size
        return tuple(range(base, base + self.block_size))

    def block_of(self, v: int) -> int:
        return v // self.block_size

    def tuple_of(self, v: int) -> tuple[int, ...]:
        return self.tuples[v % self.block_size]

    def vertex(self, block: int, tup: tuple[int, ...]) -> int:
        return block * self.block_size + self._tuple_rank(tup)

    def _tuple_rank(self, tup: tuple[int, ...]) -> int:
        rank = 0
        for x in tup:
            rank = rank * self.symbols + (x - 1)
        return rank

    def to_label_json(self) -> dict:
        labels = {}
        n = self.num_blocks * self.block_size
        for v in range(n):
            labels[str(v)] = {"block": self.block_of(v), "tuple": list(self.tuple_of(v))}
        return {"kind": "blocks", "labels": labels}


def write_label_sidecar(labels: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(labels, fh, indent=None, sort_keys=True)
        fh.write("\n")


def _symbol_tuples(symbols: int, length: int) -> tuple[tuple[int, ...], ...]:
    return tuple(iproduct(range(1, symbols + 1), repeat=length))


def cycle_product(
    d: int,
    t: int,
    caps: SizeCaps = DEFAULT_CAPS,
    allow_t2: bool = False,
) -> tuple[Graph, BlockLabelling]:
    """Tuple-cycle construction: t blocks of symbol t-tuples around a cycle.

    Blocks U^(0)..U^(t-1) are copies of the (d/2)^t tuples over {1..d/2};
    u in U^(i) and v in U^(i+1 mod t) are joined iff their tuples agree on
    every coordinate except possibly coordinate i.  The result is d-regular
    with t*(d/2)^t vertices; block U^(0) is a clique in the t-th power;
    the graph is bipartite iff t is even, and for odd t the odd girth is t.

    t=2 is rejected unless allow_t2 is set: with two blocks both coordinate
    rules connect the same block pair, so the permissive variant merges them
    into one simple bipartite graph (which is then (d-1)-regular, not
    d-regular).  No structural guarantees are assumed for it.
    """
    if d < 2 or d % 2:
        raise ConstructionError("d must be even")
    if t < 2 or (t == 2 and not allow_t2):
        raise ConstructionError("t must be at least 3")
    half = d // 2
    num_blocks = t
    block_size = half**t
    n = num_blocks * block_size
    caps.check(n, n * d // 2)

    labels = BlockLabelling(num_blocks, half, t, _symbol_tuples(half, t))
    edges = _tuple_cycle_edges(labels, coord_of_block=lambda i: i % t)
    return Graph(n, edges), labels


def cycle_3t_product(
    d: int, t: int, caps: SizeCaps = DEFAULT_CAPS
) -> tuple[Graph, BlockLabelling]:
    """Tripled tuple-cycle construction: 3t blocks, coordinate rule i mod t.

    For odd t >= 3 this is d-regular with no odd cycle shorter than 3t, yet
    its t-th power has densely spanned neighbourhoods (the point of the
    construction).
    """
    if d < 2 or d % 2:
        raise ConstructionError("d must be even")
    if t < 3 or t % 2 == 0:
        raise ConstructionError("t must be odd and at least 3")
    half = d // 2
    num_blocks = 3 * t
    block_size = half**t
    n = num_blocks * block_size
    caps.check(n, n * d // 2)

    labels = BlockLabelling(num_blocks, half, t, _symbol_tuples(half, t))
    edges = _tuple_cycle_edges(labels, coord_of_block=lambda i: i % t)
    return Graph(n, edges), labels


def _tuple_cycle_edges(labels: BlockLabelling, coord_of_block):
    """Edges between consecutive blocks: vary one coordinate, keep the rest.

    For two blocks the forward and wrap-around rules target the same block
    pair; the duplicate specifications collapse when the Graph is built.
    """
    half = labels.symbols
    nb = labels.num_blocks
    bs = labels.block_size
    edges = []
    for i in range(nb):
        j = (i + 1) % nb
        coord = coord_of_block(i)
        for r, tup in enumerate(labels.tuples):
            u = i * bs + r
            for s in range(1, half + 1):
                mate = tup[:coord] + (s,) + tup[coord + 1 :]
                edges.append(_norm_edge(u, labels.vertex(j, mate)))
    return edges


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def projective_plane_incidence(q: int, max_q: int = 97) -> BipartiteOrdering:
    """Point-line incidence graph of the order-q projective plane, q prime.

    Points are the nonzero triples over the q-element field up to scalar
    (canonical representative: first nonzero coordinate 1); by duality, lines
    use the same representation, and point p lies on line l iff p.l == 0
    (mod q).  Each part has q^2+q+1 vertices; the graph is (q+1)-regular
    with girth 6.  Prime powers are rejected: plain modular arithmetic only
    covers prime fields.
    """
    if not _is_prime(q):
        raise ConstructionError("q must be a prime")
    if q > max_q:
        raise ConstructionError(f"q={q} exceeds the cap {max_q}")

    reps = []
    for a, b, c in iproduct(range(q), repeat=3):
        if (a, b, c) == (0, 0, 0):
            continue
        lead = a if a else (b if b else c)
        if lead == 1:
            reps.append((a, b, c))
    reps.sort()
    count = q * q + q + 1
    assert len(reps) == count

    edges = []
    for i, p in enumerate(reps):
        for j, l in enumerate(reps):
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0:
                edges.append((i, count + j))
    g = Graph(2 * count, edges)
    return BipartiteOrdering(
        g, tuple(range(count)), tuple(range(count, 2 * count)), kind="unordered"
    )


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m} with part A = 0..n-1 and part B = n..n+m-1."""
    if n < 1 or m < 1:
        raise ConstructionError("both part sizes must be at least 1")
    return Graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def complete_bipartite_ordering(n: int) -> BipartiteOrdering:
    """Matching-ordered K_{n,n}; any identity labelling is a matching ordering."""
    g = complete_bipartite(n, n)
    return BipartiteOrdering(
        g, tuple(range(n)), tuple(range(n, 2 * n)), kind="matching"
    )


def _perfect_matching(
    part_a: Sequence[int], part_b: Sequence[int], neighbours: dict[int, tuple[int, ...]]
) -> dict[int, int] | None:
    """Deterministic augmenting-path perfect matching (A-vertices in order,
    neighbours ascending); returns a -> b or None."""
    match_of_b: dict[int, int] = {}

    def augment(a: int, seen: set[int]) -> bool:
        for b in neighbours[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_of_b or augment(match_of_b[b], seen):
                match_of_b[b] = a
                return True
        return False

    for a in part_a:
        if not augment(a, set()):
            return None
    return {a: b for b, a in match_of_b.items()}


def _check_balanced_bipartite(g: Graph, part_a: Sequence[int], part_b: Sequence[int]) -> None:
    if len(part_a) != len(part_b):
        raise ConstructionError("parts must have equal size")
    seen = set(part_a) | set(part_b)
    if len(seen) != len(part_a) + len(part_b) or seen != set(range(g.n)):
        raise ConstructionError("parts must partition the vertex set")
    a_set = set(part_a)
    for u, v in g.edges:
        if (u in a_set) == (v in a_set):
            raise ConstructionError(f"edge ({u}, {v}) lies inside one part")


def matching_ordering(g: Graph, part_a: Sequence[int], part_b: Sequence[int]) -> BipartiteOrdering:
    """Order the parts so that a_i b_i is always an edge, via a deterministic
    perfect matching; raises NoMatching when none exists."""
    _check_balanced_bipartite(g, part_a, part_b)
    part_a = tuple(part_a)
    b_set = set(part_b)
    nbrs = {a: tuple(w for w in g.adj[a] if w in b_set) for a in part_a}
    match = _perfect_matching(part_a, part_b, nbrs)
    if match is None:
        raise NoMatching("graph has no perfect matching")
    return BipartiteOrdering(g, part_a, tuple(match[a] for a in part_a), kind="matching")


def comatching_ordering(g: Graph, part_a: Sequence[int], part_b: Sequence[int]) -> BipartiteOrdering:
    """Order the parts so that a_i b_i is never an edge, via a perfect matching
    in the bipartite complement; raises NoComatching when impossible (in
    particular for complete bipartite graphs)."""
    _check_balanced_bipartite(g, part_a, part_b)
    part_a = tuple(part_a)
    sorted_b = tuple(sorted(part_b))
    nbrs = {a: tuple(w for w in sorted_b if not g.adjacent(a, w)) for a in part_a}
    match = _perfect_matching(part_a, part_b, nbrs)
    if match is None:
        raise NoComatching("no ordering avoids all pairs (complete bipartite input?)")
    return BipartiteOrdering(g, part_a, tuple(match[a] for a in part_a), kind="comatching")


def _classify_kind(g: Graph, part_a: Sequence[int], part_b: Sequence[int]) -> str:
    aligned = [g.adjacent(a, b) for a, b in zip(part_a, part_b)]
    if all(aligned):
        return "matching"
    if not any(aligned):
        return "comatching"
    return "unordered"


def bbp_product(h1: BipartiteOrdering, h2: BipartiteOrdering, caps: SizeCaps = DEFAULT_CAPS) -> BipartiteOrdering:
    """Balanced bipartite product of two ordered balanced bipartite graphs.

    Vertices are A1 x A2 and B1 x B2.  Edges: for every aligned index i of
    the first factor and every edge a2-b2 of the second, (a1_i, a2)(b1_i, b2);
    and for every edge a1-b1 of the first factor and every aligned index j of
    the second, (a1, a2_j)(b1, b2_j).  An index pair generated by both rules
    collapses to one simple edge.  Parts inherit lexicographic ordering by
    (factor-1 index, factor-2 index); the result kind is classified from the
    aligned pairs of the result.
    """
    n1, n2 = h1.size, h2.size
    part_size = n1 * n2
    caps.check(2 * part_size, h2.graph.m * n1 + h1.graph.m * n2)

    pos_a1 = {v: i for i, v in enumerate(h1.part_a)}
    pos_b1 = {v: i for i, v in enumerate(h1.part_b)}
    pos_a2 = {v: j for j, v in enumerate(h2.part_a)}
    pos_b2 = {v: j for j, v in enumerate(h2.part_b)}

    def a_id(i: int, j: int) -> int:
        return i * n2 + j

    def b_id(i: int, j: int) -> int:
        return part_size + i * n2 + j

    edges = set()
    for u, v in h2.graph.edges:
        ja, jb = (pos_a2[u], pos_b2[v]) if u in pos_a2 else (pos_a2[v], pos_b2[u])
        for i in range(n1):
            edges.add((a_id(i, ja), b_id(i, jb)))
    for u, v in h1.graph.edges:
        ia, ib = (pos_a1[u], pos_b1[v]) if u in pos_a1 else (pos_a1[v], pos_b1[u])
        for j in range(n2):
            edges.add((a_id(ia, j), b_id(ib, j)))

    g = Graph(2 * part_size, edges)
    part_a = tuple(range(part_size))
    part_b = tuple(range(part_size, 2 * part_size))
    return BipartiteOrdering(g, part_a, part_b, kind=_classify_kind(g, part_a, part_b))


def iterated_product(d: int, t: int, caps: SizeCaps = DEFAULT_CAPS) -> BipartiteOrdering:
    """(t-1)-fold balanced bipartite product of K_{d',d'}, left-associated,
    all factors in matching ordering, where d' = (d-1)/(t-1)+1.

    The result is d-regular bipartite with d*d'^(t-1) edges, and the t-th
    power of its line graph is complete.
    """
    if t < 2:
        raise ConstructionError("t must be at least 2")
    if d < 2:
        raise ConstructionError("d must be at least 2")
    if (d - 1) % (t - 1):
        raise ConstructionError("d - 1 must be divisible by t - 1")
    dp = (d - 1) // (t - 1) + 1
    caps.check(2 * dp ** (t - 1), d * dp ** (t - 1))
    acc = complete_bipartite_ordering(dp)
    for _ in range(t - 2):
        acc = bbp_product(acc, complete_bipartite_ordering(dp), caps=caps)
    return acc


@dataclass(frozen=True)
class EvenEdgeConstruction:
    """Product construction witnessing large distance-t chromatic index for
    even t.  x_vertices and y_vertices are the distinguished product sets;
    every edge between them lies in a single clique of the t-th line-graph
    power."""

    ordering: BipartiteOrdering
    x_vertices: tuple[int, ...]
    y_vertices: tuple[int, ...]
    d: int
    t: int

    @property
    def graph(self) -> Graph:
        return self.ordering.graph

    def xy_edges(self) -> tuple[tuple[int, int], ...]:
        xs = set(self.x_vertices)
        ys = set(self.y_vertices)
        return tuple(
            e for e in self.graph.edges if (e[0] in xs and e[1] in ys) or (e[0] in ys and e[1] in xs)
        )


def _block_aligned_comatching(g1: Graph, labels: BlockLabelling) -> BipartiteOrdering:
    """Comatching ordering of an even tuple-cycle graph that pairs each even
    block with the next block, index-aligned up to a fixed tuple shift.

    Pairing tuple x in U^(i) with the same x in U^(i+1) would be an edge, so
    the partner tuple is x with one coordinate (both, in the merged two-block
    variant) incremented mod the symbol count; the changed coordinate differs
    from the connecting coordinate i, which forces a non-edge.
    """
    t1 = labels.num_blocks
    if t1 % 2:
        raise ConstructionError("block-aligned comatching needs an even block count")
    if labels.symbols < 2:
        raise ConstructionError("comatching pairing needs at least 2 symbols")
    part_a: list[int] = []
    part_b: list[int] = []
    for i in range(0, t1, 2):
        if t1 == 2:
            shift_coords = (0, 1)
        else:
            shift_coords = ((i + 1) % t1,)
        for tup in labels.tuples:
            mate = list(tup)
            for c in shift_coords:
                mate[c] = mate[c] % labels.symbols + 1
            part_a.append(labels.vertex(i, tup))
            part_b.append(labels.vertex(i + 1, tuple(mate)))
    return BipartiteOrdering(g1, tuple(part_a), tuple(part_b), kind="comatching")


def even_edge_construction(
    d: int,
    t: int,
    caps: SizeCaps = DEFAULT_CAPS,
    allow_t4: bool = False,
) -> EvenEdgeConstruction:
    """Bipartite product certifying chi'_t >= d^t/(e*t*2^(t-1)) for even t.

    Builds the tuple-cycle graph for t1 = t-2 and d1 = (t1-1)d/t1 in a
    block-aligned comatching ordering, takes its product with the
    matching-ordered K_{d2,d2} where d2 = d/t1, and returns the product with
    X = U^(0) x A2 and Y = U^(1) x B2 distinguished.  Requires
    d divisible by 2(t-2); t=4 only with allow_t4 (the merged two-block base
    graph is then (d1-1)-regular and the guarantees are empirical only).
    """
    if t % 2 or t < 4 or (t == 4 and not allow_t4):
        raise ConstructionError("t must be even and at least 6 (t=4 needs allow_t4)")
    t1 = t - 2
    if d % (2 * t1):
        raise ConstructionError("d must be divisible by 2(t-2)")
    d1 = (t1 - 1) * d // t1
    d2 = d // t1

    g1, labels = cycle_product(d1, t1, caps=caps, allow_t2=(t1 == 2))
    h1 = _block_aligned_comatching(g1, labels)
    h2 = complete_bipartite_ordering(d2)
    prod = bbp_product(h1, h2, caps=caps)

    bs = labels.block_size
    n2 = d2
    x = tuple(i * n2 + j for i in range(bs) for j in range(n2))
    offset = h1.size * n2
    y = tuple(offset + i * n2 + j for i in range(bs) for j in range(n2))
    return EvenEdgeConstruction(ordering=prod, x_vertices=x, y_vertices=y, d=d, t=t)
