"""Enumeration of graph homomorphisms G -> H (the 0-cells of Hom(G, H))."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CapExceeded
from .graph import Graph

DEFAULT_MAX_COLORINGS = 10**7

Coloring = tuple  # tuple[int, ...], entry v is the H-vertex assigned to G-vertex v


def elimination_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def is_homomorphism(g: Graph, h: Graph, assignment: Sequence[int]) -> bool:
    return len(assignment) == g.n and all(
        0 <= c < h.n for c in assignment
    ) and all(h.has_edge(assignment[x], assignment[y]) for x, y in g.edges)


def format_coloring(c: Sequence[int]) -> str:
    return " ".join(str(x + 1) for x in c)


def parse_coloring(text: str) -> Coloring:
    return tuple(int(tok) - 1 for tok in text.replace(",", " ").split())


@dataclass(frozen=True)
class HomSet:
    g: Graph
    h: Graph
    colorings: tuple
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self) -> Iterator[Coloring]:
        return iter(self.colorings)

    def __contains__(self, c) -> bool:
        return tuple(c) in self.index

    def position(self, c: Sequence[int]) -> int:
        try:
            return self.index[tuple(c)]
        except KeyError:
            raise KeyError(f"{format_coloring(c)} is not a homomorphism in this set") from None


class _Search:
    """Backtracking state shared by enumeration and counting."""

    def __init__(self, g: Graph, h: Graph):
        self.g, self.h = g, h
        self.order = elimination_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        # for each step, the G-neighbours already assigned at that point
        self.back = [
            [u for u in g.neighbors(v) if pos[u] < pos[v]] for v in self.order
        ]
        self.full = (1 << h.n) - 1

    def candidates(self, step: int, assign: list[int]) -> int:
        cand = self.full
        hadj = self.h.adj
        for u in self.back[step]:
            cand &= hadj[assign[u]]
        return cand

    def walk(self, step: int, assign: list[int], emit) -> None:
        if step == len(self.order):
            emit(assign)
            return
        v = self.order[step]
        cand = self.candidates(step, assign)
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            assign[v] = c
            self.walk(step + 1, assign, emit)
        assign[v] = -1

    def branch(self, first_color: int, cap: int) -> list[Coloring]:
        """All homomorphisms with the first eliminated vertex fixed to ``first_color``."""
        out: list[Coloring] = []
        if not self.order:
            return out
        assign = [-1] * self.g.n
        assign[self.order[0]] = first_color

        def emit(a):
            out.append(tuple(a))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} colorings")

        self.walk(1, assign, emit)
        return out


def enumerate_homs(
    g: Graph, h: Graph, max_colorings: int = DEFAULT_MAX_COLORINGS, threads: int = 1
) -> HomSet:
    """All homomorphisms g -> h, sorted lexicographically.

    With ``threads > 1`` the search tree is split on the colour of the first
    eliminated vertex; the merged result is identical to the serial one.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("both graphs need at least one vertex")
    s = _Search(g, h)
    colors = range(h.n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: s.branch(c, max_colorings), colors))
    else:
        parts = [s.branch(c, max_colorings) for c in colors]
    total = sum(len(p) for p in parts)
    if total > max_colorings:
        raise CapExceeded(f"more than {max_colorings} colorings")
    colorings = sorted(c for p in parts for c in p)
    return HomSet(g, h, tuple(colorings), {c: i for i, c in enumerate(colorings)})


def count_homs(g: Graph, h: Graph) -> int:
    if g.n < 1 or h.n < 1:
        raise ValueError("both graphs need at least one vertex")
    s = _Search(g, h)
    n = len(s.order)

    def count(step: int, assign: list[int]) -> int:
        if step == n:
            return 1
        v = s.order[step]
        cand = s.candidates(step, assign)
        total = 0
        while cand:
            c = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            assign[v] = c
            total += count(step + 1, assign)
        assign[v] = -1
        return total

    return count(0, [-1] * g.n)
