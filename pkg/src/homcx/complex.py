"""Cells of Hom(G, H), its face poset, and GF(2) homology of the order complex.

A cell assigns each vertex of G a nonempty set of H-vertices (an int bitset)
such that every pair across an edge of G is an edge of H.  Homology is taken
on the barycentric subdivision: simplices are chains of strictly nested
cells, which keeps the boundary map uniform and orientation free over GF(2).
Homology can only refute connectivity, never certify homotopy connectivity.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import gf2
from .errors import CapExceeded
from .graph import Graph
from .homs import elimination_order

DEFAULT_MAX_CELLS = 10**6
DEFAULT_MAX_CHAINS = 2 * 10**6

Cell = tuple  # tuple of per-vertex bitsets


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _submasks(mask: int):
    """Nonempty submasks of ``mask`` in decreasing numeric order."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def cell_dim(cell: Cell) -> int:
    return sum(m.bit_count() - 1 for m in cell)


def cell_key(cell: Cell):
    return (cell_dim(cell), tuple(_members(m) for m in cell))


def is_cell(g: Graph, h: Graph, cell: Cell) -> bool:
    if len(cell) != g.n or any(m <= 0 or m >> h.n for m in cell):
        return False
    return all(
        h.has_edge(a, b)
        for x, y in g.edges
        for a in _members(cell[x])
        for b in _members(cell[y])
    )


def format_cell(cell: Cell) -> str:
    parts = []
    for m in cell:
        ms = _members(m)
        parts.append(str(ms[0] + 1) if len(ms) == 1 else "{" + ",".join(str(x + 1) for x in ms) + "}")
    return " ".join(parts)


@dataclass
class FacePoset:
    g: Graph
    h: Graph
    cells: list
    max_dim: int | None
    index: dict = field(repr=False)
    dims: list = field(repr=False)
    covers: list = field(repr=False)  # covers[i]: facets of cell i (dimension one lower)

    @property
    def complete(self) -> bool:
        return self.max_dim is None

    def cell_counts(self) -> list[int]:
        if not self.cells:
            return []
        counts = [0] * (max(self.dims) + 1)
        for d in self.dims:
            counts[d] += 1
        return counts

    def is_below(self, i: int, j: int) -> bool:
        """Strict containment: cell i is a proper face of cell j."""
        a, b = self.cells[i], self.cells[j]
        return i != j and all(x & ~y == 0 for x, y in zip(a, b))

    def faces_below(self, i: int) -> list[int]:
        """All proper faces of cell ``i``, as sorted indices."""
        cell = self.cells[i]
        out = []
        for sub in product(*(list(_submasks(m)) for m in cell)):
            if sub != cell:
                j = self.index.get(sub)
                if j is not None:
                    out.append(j)
        return sorted(out)


def _assign(g, h, order, back, step, cell, budget, emit):
    if step == len(order):
        emit(tuple(cell))
        return
    v = order[step]
    allowed = (1 << h.n) - 1
    for u in back[step]:
        m = cell[u]
        while m:
            low = m & -m
            allowed &= h.adj[low.bit_length() - 1]
            m ^= low
    for sub in _submasks(allowed):
        extra = sub.bit_count() - 1
        if budget is not None and extra > budget:
            continue
        cell[v] = sub
        _assign(g, h, order, back, step + 1, cell, None if budget is None else budget - extra, emit)
    cell[v] = 0


def enumerate_cells(
    g: Graph,
    h: Graph,
    max_dim: int | None = None,
    max_cells: int = DEFAULT_MAX_CELLS,
    threads: int = 1,
) -> FacePoset:
    """All cells of dimension <= ``max_dim`` (unbounded when None)."""
    if g.n < 1 or h.n < 1:
        raise ValueError("both graphs need at least one vertex")
    order = elimination_order(g)
    pos = {v: i for i, v in enumerate(order)}
    back = [[u for u in g.neighbors(v) if pos[u] < pos[v]] for v in order]

    def branch(first: int) -> list[Cell]:
        out = []
        extra = first.bit_count() - 1
        if max_dim is not None and extra > max_dim:
            return out
        cell = [0] * g.n
        cell[order[0]] = first

        def emit(c):
            out.append(c)
            if len(out) > max_cells:
                raise CapExceeded(f"more than {max_cells} cells")

        _assign(g, h, order, back, 1, cell, None if max_dim is None else max_dim - extra, emit)
        return out

    firsts = list(_submasks((1 << h.n) - 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(branch, firsts))
    else:
        parts = [branch(f) for f in firsts]
    if sum(len(p) for p in parts) > max_cells:
        raise CapExceeded(f"more than {max_cells} cells")
    cells = sorted((c for p in parts for c in p), key=cell_key)
    index = {c: i for i, c in enumerate(cells)}
    dims = [cell_dim(c) for c in cells]
    covers = []
    for c in cells:
        facets = []
        for v, m in enumerate(c):
            if m & (m - 1):
                for b in _members(m):
                    facets.append(index[c[:v] + (m & ~(1 << b),) + c[v + 1:]])
        covers.append(sorted(facets))
    return FacePoset(g, h, cells, max_dim, index, dims, covers)


def euler_characteristic(fp: FacePoset) -> int:
    return sum((-1) ** d * n for d, n in enumerate(fp.cell_counts()))


def order_complex(fp: FacePoset, max_chains: int = DEFAULT_MAX_CHAINS) -> list[list[tuple[int, ...]]]:
    """Chains of the face poset grouped by simplex dimension.

    Each chain is a tuple of cell indices, increasing along the order.
    """
    # chains_top[i]: chains whose largest element is cell i
    chains_top: list[list[tuple[int, ...]]] = []
    total = 0
    for i in range(len(fp.cells)):  # cells sorted by dimension, faces come first
        mine = [(i,)]
        for j in fp.faces_below(i):
            mine.extend(ch + (i,) for ch in chains_top[j])
        total += len(mine)
        if total > max_chains:
            raise CapExceeded(f"more than {max_chains} order-complex simplices")
        chains_top.append(mine)
    by_dim: list[list[tuple[int, ...]]] = []
    for mine in chains_top:
        for ch in mine:
            d = len(ch) - 1
            while len(by_dim) <= d:
                by_dim.append([])
            by_dim[d].append(ch)
    for simplices in by_dim:
        simplices.sort()
    return by_dim


def boundary_matrices(simplices: list[list[tuple[int, ...]]]) -> list[list[int]]:
    """``result[d]`` is the boundary map from d-simplices to (d-1)-simplices.

    Rows are indexed by d-simplex; each row is a bitset over (d-1)-simplex
    indices.  ``result[0]`` is the zero map.
    """
    mats = [[0] * len(simplices[0])] if simplices else []
    for d in range(1, len(simplices)):
        lower = {s: i for i, s in enumerate(simplices[d - 1])}
        rows = []
        for s in simplices[d]:
            row = 0
            for k in range(len(s)):
                row ^= 1 << lower[s[:k] + s[k + 1:]]
            rows.append(row)
        mats.append(rows)
    return mats


def boundary_squares_to_zero(mats: list[list[int]]) -> bool:
    return all(
        not any(gf2.compose(mats[d - 1], mats[d])) for d in range(2, len(mats))
    )


@dataclass(frozen=True)
class HomologyReport:
    cell_counts: tuple[int, ...]
    euler_characteristic: int
    betti_gf2: tuple[int, ...]
    simplex_counts: tuple[int, ...]

    @property
    def euler_from_simplices(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.simplex_counts))

    @property
    def euler_from_betti(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.betti_gf2))

    def to_json(self) -> dict:
        return {
            "cells": list(self.cell_counts),
            "euler": self.euler_characteristic,
            "betti_gf2": list(self.betti_gf2),
        }


def betti_gf2(fp: FacePoset, max_chains: int = DEFAULT_MAX_CHAINS) -> HomologyReport:
    if not fp.complete:
        raise ValueError("homology needs the full complex (max_dim=None)")
    simplices = order_complex(fp, max_chains)
    mats = boundary_matrices(simplices)
    ranks = [gf2.rank(m) for m in mats] + [0]
    betti = tuple(
        len(simplices[d]) - ranks[d] - ranks[d + 1] for d in range(len(simplices))
    )
    return HomologyReport(
        tuple(fp.cell_counts()),
        euler_characteristic(fp),
        betti,
        tuple(len(s) for s in simplices),
    )
