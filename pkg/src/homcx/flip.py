"""The flip graph: colourings adjacent iff they differ at exactly one vertex."""

from __future__ import annotations

from collections import defaultdict, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .homs import Coloring, HomSet, format_coloring


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.count -= 1
        return True


@dataclass(frozen=True)
class ComponentReport:
    component_count: int
    component_sizes: tuple[int, ...]
    representatives: tuple[Coloring, ...]

    def to_json(self) -> dict:
        return {"components": self.component_count, "sizes": list(self.component_sizes)}


def _buckets_at(colorings: Sequence[Coloring], v: int) -> list[tuple[int, int]]:
    """Flip edges changing position ``v``: group by the assignment with ``v`` wildcarded."""
    groups: dict[tuple, list[int]] = defaultdict(list)
    for i, c in enumerate(colorings):
        groups[c[:v] + c[v + 1:]].append(i)
    edges = []
    for members in groups.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
    return edges


class FlipGraph:
    def __init__(self, homset: HomSet, threads: int = 1):
        self.homset = homset
        cols = homset.colorings
        n = homset.g.n if cols else 0
        if threads > 1 and n > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_pos = list(pool.map(lambda v: _buckets_at(cols, v), range(n)))
        else:
            per_pos = [_buckets_at(cols, v) for v in range(n)]
        nbrs: list[list[int]] = [[] for _ in cols]
        uf = UnionFind(len(cols))
        for edges in per_pos:
            for a, b in edges:
                nbrs[a].append(b)
                nbrs[b].append(a)
                uf.union(a, b)
        self.adjacency = tuple(tuple(sorted(x)) for x in nbrs)
        self._uf = uf

    def __len__(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        for i, nb in enumerate(self.adjacency):
            for j in nb:
                if i < j:
                    yield i, j

    def component_of(self, i: int) -> int:
        return self._uf.find(i)

    def is_edge(self, a: Sequence[int], b: Sequence[int]) -> bool:
        i, j = self.homset.position(a), self.homset.position(b)
        return j in self.adjacency[i]

    def to_dot(self) -> str:
        cols = self.homset.colorings
        lines = ["graph flip {"]
        lines += [f'  {i} [label="{format_coloring(c)}"];' for i, c in enumerate(cols)]
        lines += [f"  {i} -- {j};" for i, j in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_flip_graph(homset: HomSet, threads: int = 1) -> FlipGraph:
    return FlipGraph(homset, threads)


def components(fg: FlipGraph) -> ComponentReport:
    members: dict[int, list[int]] = defaultdict(list)
    for i in range(len(fg)):
        members[fg.component_of(i)].append(i)
    groups = sorted(members.values(), key=lambda m: (-len(m), m[0]))
    cols = fg.homset.colorings
    return ComponentReport(
        len(groups),
        tuple(len(m) for m in groups),
        tuple(cols[m[0]] for m in groups),
    )


def is_edge(fg: FlipGraph, a: Sequence[int], b: Sequence[int]) -> bool:
    return fg.is_edge(a, b)


def shortest_path(fg: FlipGraph, start: Sequence[int], goal: Sequence[int]) -> list[Coloring] | None:
    """BFS path; neighbours are visited in index order so ties go to the lowest index."""
    s, t = fg.homset.position(start), fg.homset.position(goal)
    if fg.component_of(s) != fg.component_of(t):
        return None
    parent = {s: -1}
    queue = deque([s])
    while queue:
        i = queue.popleft()
        if i == t:
            break
        for j in fg.adjacency[i]:
            if j not in parent:
                parent[j] = i
                queue.append(j)
    out = []
    i = t
    while i != -1:
        out.append(fg.homset.colorings[i])
        i = parent[i]
    return out[::-1]
