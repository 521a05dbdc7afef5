"""Simple undirected graphs with bitset adjacency, DIMACS I/O and generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import GraphParseError

# Counterexample graph on a 3x3 grid [c1 t c2 / l z r / c4 b c3].
# Indices: 0=c1 1=c2 2=c3 3=c4 (corners, clockwise) 4=t 5=r 6=b 7=l 8=z.
C1, C2, C3, C4, TOP, RIGHT, BOTTOM, LEFT, CENTER = range(9)

G9_EDGES = (
    # corner clique
    (0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3),
    # each side midpoint sees its two corners
    (0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (0, 7),
    # midpoints form a 4-cycle
    (4, 5), (5, 6), (6, 7), (4, 7),
    # center sees every midpoint
    (4, 8), (5, 8), (6, 8), (7, 8),
)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; ``adj[u]`` is
    an int bitset of the neighbours of ``u``.  Both views are built together
    by :meth:`from_edges` and always agree.
    """

    n: int
    edges: frozenset
    adj: tuple = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        pairs = set()
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            pairs.add(_norm(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, frozenset(pairs), tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        a = self.adj[u]
        return [v for v in range(self.n) if a >> v & 1]

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..k-1`` in the given vertex order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs),
            ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def relabel(self, perm: list[int]) -> "Graph":
        """Isomorphic copy where vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def without_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        if e not in self.edges:
            raise ValueError(f"no edge {e}")
        return Graph.from_edges(self.n, self.edges - {e})


def parse_graph(text: str) -> Graph:
    """Parse DIMACS edge format (1-indexed); duplicate edge lines collapse."""
    n = declared_m = None
    edge_lines = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(f"malformed problem line {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(f"non-integer counts in {line!r}", lineno) from None
            if n < 1 or declared_m < 0:
                raise GraphParseError(f"invalid counts in {line!r}", lineno)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if u == v:
                raise GraphParseError(f"loop edge at vertex {u}", lineno)
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphParseError(f"vertex {x} outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
            edge_lines += 1
        else:
            raise GraphParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line 'p edge <n> <m>'")
    if edge_lines != declared_m:
        raise GraphParseError(
            f"declared {declared_m} edges but found {edge_lines} edge lines"
        )
    return Graph.from_edges(n, edges)


def serialize(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def kneser(n: int, k: int) -> Graph:
    """Kneser graph KG(n, k): k-subsets of range(n) in lex order, disjoint ones adjacent."""
    if not n > k >= 1:
        raise ValueError("kneser needs n > k >= 1")
    subsets = [sum(1 << i for i in s) for s in combinations(range(n), k)]
    assert len(subsets) == comb(n, k)
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def counterexample_g9() -> Graph:
    return Graph.from_edges(9, G9_EDGES)


FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "kneser": (kneser, 2),
    "counterexample_g9": (counterexample_g9, 0),
}


def generate(family: str, *params: int) -> Graph:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}") from None
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
