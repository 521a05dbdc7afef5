"""Exact chromatic number for small graphs (n <= 64).

Lower bound from a greedy clique, upper bound from DSATUR, then a fail-first
backtracking k-colourability test closes the gap one k at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded
from .graph import Graph

MAX_VERTICES = 64


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: tuple[int, ...]
    lower_bound_clique: tuple[int, ...]
    dsatur_bound: int


def is_proper(g: Graph, coloring: Sequence[int], k: int) -> bool:
    if len(coloring) != g.n:
        raise ValueError(f"coloring has length {len(coloring)}, graph has {g.n} vertices")
    for c in coloring:
        if not 0 <= c < k:
            raise ValueError(f"color {c} outside 0..{k - 1}")
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def greedy_clique(g: Graph) -> list[int]:
    """Best clique found by greedy growth from every start vertex.

    Each run repeatedly adds the candidate with the most neighbours among the
    remaining candidates (ties to lowest index).
    """
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            pick, pick_deg = -1, -1
            c = cand
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                d = (g.adj[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            clique.append(pick)
            cand &= g.adj[pick]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def dsatur(g: Graph) -> list[int]:
    colors = [-1] * g.n
    sat = [0] * g.n  # bitset of neighbour colours
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            sat[u] |= 1 << c
    return colors


def find_coloring(g: Graph, k: int, pinned: Sequence[int] = ()) -> list[int] | None:
    """Proper k-colouring or None.

    ``pinned`` vertices (a clique) are fixed to colours 0, 1, ... in order,
    which removes colour-permutation symmetry without losing solutions.
    """
    if len(pinned) > k:
        return None
    full = (1 << k) - 1
    colors = [-1] * g.n
    avail = [full] * g.n
    for c, v in enumerate(pinned):
        if not avail[v] >> c & 1:
            return None
        colors[v] = c
        for u in g.neighbors(v):
            avail[u] &= ~(1 << c)

    def search(remaining: int) -> bool:
        if remaining == 0:
            return True
        # fail-first: fewest remaining colours, ties to lowest index
        v, best = -1, k + 1
        for u in range(g.n):
            if colors[u] < 0:
                cnt = avail[u].bit_count()
                if cnt < best:
                    v, best = u, cnt
                    if cnt == 0:
                        return False
        opts = avail[v]
        nbrs = [u for u in g.neighbors(v) if colors[u] < 0]
        while opts:
            c = (opts & -opts).bit_length() - 1
            opts &= opts - 1
            bit = 1 << c
            colors[v] = c
            saved = [avail[u] for u in nbrs]
            for u in nbrs:
                avail[u] &= ~bit
            if search(remaining - 1):
                return True
            for u, a in zip(nbrs, saved):
                avail[u] = a
        colors[v] = -1
        return False

    if search(sum(1 for c in colors if c < 0)):
        return colors
    return None


def chromatic_number(g: Graph) -> ChromaticResult:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > MAX_VERTICES:
        raise CapExceeded(f"exact chromatic number limited to {MAX_VERTICES} vertices, got {g.n}")
    clique = greedy_clique(g)
    upper = dsatur(g)
    ub = max(upper) + 1
    witness = upper
    # walk down from the DSATUR bound until k-1 colours is impossible
    k = ub
    while k > len(clique):
        found = find_coloring(g, k - 1, clique)
        if found is None:
            break
        witness, k = found, k - 1
    return ChromaticResult(k, tuple(witness), tuple(clique), ub)
