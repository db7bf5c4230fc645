"""GF(2) linear algebra on int bitsets (bit i is column i)."""

from __future__ import annotations

from typing import Sequence


def popcount(x: int) -> int:
    return bin(x).count("1")


def dot(a: int, b: int) -> int:
    return popcount(a & b) & 1


def low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def rref(rows: Sequence[int]) -> list[int]:
    """Reduced row echelon form, nonzero rows sorted by pivot (lowest bit)."""
    pivots: dict[int, int] = {}
    for r in rows:
        for p, row in pivots.items():
            if (r >> p) & 1:
                r ^= row
        if not r:
            continue
        p = low_bit(r)
        for q in list(pivots):
            if (pivots[q] >> p) & 1:
                pivots[q] ^= r
        pivots[p] = r
    return [pivots[p] for p in sorted(pivots)]


def rank(rows: Sequence[int]) -> int:
    return len(rref(rows))


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis (in rref) of ``{c : dot(c, r) == 0 for every row r}``."""
    reduced = rref(rows)
    pivot_of = {low_bit(r): r for r in reduced}
    basis = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        v = 1 << f
        for p, r in pivot_of.items():
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return rref(basis)


class SpanSolver:
    """Row reduction of ``rows`` kept for repeated subset queries."""

    def __init__(self, rows: Sequence[int]):
        self.n = len(rows)
        # pivot -> (reduced row, bitset of the original rows combined in it)
        self.pivots: dict[int, tuple[int, int]] = {}
        for i, r in enumerate(rows):
            combo = 1 << i
            # ascending pivots: a row with pivot p only touches bits >= p
            for p in sorted(self.pivots):
                row, c = self.pivots[p]
                if (r >> p) & 1:
                    r ^= row
                    combo ^= c
            if r:
                self.pivots[low_bit(r)] = (r, combo)

    def solve(self, target: int) -> list[int] | None:
        combo = 0
        t = target
        while t:
            p = low_bit(t)
            if p not in self.pivots:
                return None
            row, c = self.pivots[p]
            t ^= row
            combo ^= c
        return [i for i in range(self.n) if (combo >> i) & 1]


def solve(rows: Sequence[int], target: int) -> list[int] | None:
    """Indices of a subset of ``rows`` summing to ``target``, or None."""
    return SpanSolver(rows).solve(target)


def in_span(rows: Sequence[int], v: int) -> bool:
    return solve(rows, v) is not None
