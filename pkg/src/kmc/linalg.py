"""Exact rank computations over GF(2) and over the rationals.

GF(2) vectors are Python ints used as bitsets.  Rational ranks run on
sparse integer rows with cross-multiplied eliminations and gcd
normalization, so everything stays integral and exact; floating point
is never involved.
"""

from __future__ import annotations

from math import gcd

__all__ = ["gf2_rank", "sparse_integer_rank"]


def gf2_rank(rows: list[int]) -> int:
    """Rank of the span of the given bit-vectors over GF(2)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            h = row.bit_length() - 1
            if h in pivots:
                row ^= pivots[h]
            else:
                pivots[h] = row
                rank += 1
                break
    return rank


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def sparse_integer_rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of sparse integer rows (maps column -> entry).

    Elimination uses integer cross-multiplication (never divides except
    by a row gcd), which preserves the row space over Q exactly.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = _normalize(row)
                rank += 1
                break
            a, b = row[col], pivot[col]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            new = {k: ma * v for k, v in row.items()}
            for k, v in pivot.items():
                w = new.get(k, 0) - mb * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _normalize(new)
    return rank
