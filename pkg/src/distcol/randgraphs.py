"""Seeded graph samplers for the randomized property suites.

Everything here is deterministic given an explicit seed or Random instance;
no ambient entropy is ever used.
"""

from __future__ import annotations

import random
from itertools import combinations

from .analysis import contains_cycle
from .constructions import ConstructionError
from .graphs import Graph


def _rng(seed_or_rng: int | random.Random) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_graph(n: int, m: int, seed: int | random.Random) -> Graph:
    """Uniform random simple graph with exactly min(m, C(n,2)) edges."""
    rng = _rng(seed)
    pool = list(combinations(range(n), 2))
    m = min(m, len(pool))
    return Graph(n, rng.sample(pool, m))


def random_bipartite(
    n_a: int, n_b: int, m: int, seed: int | random.Random
) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """Random bipartite graph on parts 0..n_a-1 and n_a..n_a+n_b-1 with
    exactly min(m, n_a*n_b) cross edges."""
    rng = _rng(seed)
    pool = [(a, n_a + b) for a in range(n_a) for b in range(n_b)]
    m = min(m, len(pool))
    g = Graph(n_a + n_b, rng.sample(pool, m))
    return g, tuple(range(n_a)), tuple(range(n_a, n_a + n_b))


def random_max_degree_graph(
    n: int, m: int, max_degree: int, seed: int | random.Random
) -> Graph:
    """Random graph with at most m edges, never exceeding the degree bound.

    Candidate pairs are tried in shuffled order; pairs that would overflow a
    degree are skipped, so the realized edge count may fall short of m.
    """
    rng = _rng(seed)
    pool = list(combinations(range(n), 2))
    rng.shuffle(pool)
    deg = [0] * n
    edges = []
    for u, v in pool:
        if len(edges) == m:
            break
        if deg[u] < max_degree and deg[v] < max_degree:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return Graph(n, edges)


def random_regular_bipartite(
    n: int, d: int, seed: int | random.Random, max_attempts: int = 200
) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    """d-regular balanced bipartite graph, deterministic given the seed.

    Primary sampler: union of d random perfect matchings, rejecting
    collisions.  For d near n the rejection probability approaches 1 (the
    permutations must form a Latin rectangle), so after max_attempts the
    sampler falls back to d rounds of randomized matchings on the remaining
    allowed pairs, which always succeed by Hall's theorem.
    """
    if not (1 <= d <= n):
        raise ConstructionError("need 1 <= d <= n")
    rng = _rng(seed)
    part_a = tuple(range(n))
    part_b = tuple(range(n, 2 * n))
    if d == n:
        # the unique n-regular balanced bipartite graph
        edges = [(a, n + b) for a in range(n) for b in range(n)]
        return Graph(2 * n, edges), part_a, part_b
    for _ in range(max_attempts):
        edges: set[tuple[int, int]] = set()
        ok = True
        for _ in range(d):
            perm = list(range(n))
            rng.shuffle(perm)
            for a in range(n):
                e = (a, n + perm[a])
                if e in edges:
                    ok = False
                    break
                edges.add(e)
            if not ok:
                break
        if ok:
            return Graph(2 * n, edges), part_a, part_b
    return _regular_bipartite_by_rounds(n, d, rng), part_a, part_b


def _regular_bipartite_by_rounds(n: int, d: int, rng: random.Random) -> Graph:
    """d randomized perfect matchings drawn without replacement from the
    remaining allowed pairs; the remaining graph stays regular, so a perfect
    matching always exists."""
    allowed = [set(range(n)) for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for _ in range(d):
        match_of_b: dict[int, int] = {}

        def augment(a: int, seen: set[int]) -> bool:
            nbrs = sorted(allowed[a])
            rng.shuffle(nbrs)
            for b in nbrs:
                if b in seen:
                    continue
                seen.add(b)
                if b not in match_of_b or augment(match_of_b[b], seen):
                    match_of_b[b] = a
                    return True
            return False

        order = list(range(n))
        rng.shuffle(order)
        for a in order:
            if not augment(a, set()):
                raise ConstructionError("matching round failed unexpectedly")
        for b, a in match_of_b.items():
            allowed[a].discard(b)
            edges.append((a, n + b))
    return Graph(2 * n, edges)


def thin_to_cycle_free(g: Graph, length: int, cap: int = 16) -> Graph:
    """Remove one edge of each found cycle of the given length until none
    remains: deterministic because the cycle search is, and the first edge
    of the witness is always the one removed."""
    while True:
        found, cyc = contains_cycle(g, length, cap=cap)
        if not found:
            return g
        drop = tuple(sorted((cyc[0], cyc[1])))
        g = Graph(g.n, [e for e in g.edges if e != drop])
