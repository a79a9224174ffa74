"""DIMACS-like .col file format.

Header line ``p edge <n> <m>``, then m lines ``e <u> <v>`` with 1-based
vertex indices.  Comment lines start with ``c``.  Edges are written in
lexicographic order so that write -> read -> write is byte-identical.
"""

from __future__ import annotations

import os

from .graphs import Graph, GraphError


def format_col(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_col(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, declared_m = int(fields[2]), int(fields[3])
        elif fields[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise GraphError("missing problem line")
    g = Graph(n, edges)
    if declared_m != g.m:
        raise GraphError(f"header declares {declared_m} edges, file has {g.m}")
    return g


def write_col(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(format_col(g))


def read_col(path: str | os.PathLike) -> Graph:
    with open(path) as fh:
        return parse_col(fh.read())
