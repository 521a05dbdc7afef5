"""Linear algebra over GF(2) with rows packed into Python ints."""

from __future__ import annotations

from typing import Iterable


def rank(rows: Iterable[int]) -> int:
    """Rank of the row space; each row is an int whose set bits are the nonzero columns."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                r += 1
                break
            row ^= p
    return r


def compose(outer: list[int], inner: list[int]) -> list[int]:
    """Rows of ``inner`` mapped through ``outer``.

    ``inner[i]`` is a set of column indices into ``outer``; the result row is
    the XOR of the selected ``outer`` rows.  Used to check that boundary maps
    square to zero.
    """
    out = []
    for row in inner:
        acc = 0
        while row:
            low = row & -row
            acc ^= outer[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return out
