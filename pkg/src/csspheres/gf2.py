"""GF(2) rank of sparse 0/1 matrices.

Rows are Python integers used as bit vectors; reduction keeps one pivot row
per leading bit.  Boundary matrices of desk-scale complexes start out sparse
(each row has `card` bits), which keeps fill-in manageable, and big-int XOR
runs at C speed.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of the matrix whose rows are the given bit masks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                rank += 1
                break
            row ^= pivot
    return rank


def pack_rows(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Bit-pack a dense 0/1 row-major matrix for gf2_rank."""
    rows = []
    for r in matrix:
        mask = 0
        for j, v in enumerate(r):
            if v:
                mask |= 1 << j
        rows.append(mask)
    return rows
