"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries may be ``int`` or ``Fraction``. Rank uses
fraction-free elimination on sparse integer rows with content removal, which
keeps the big-int sizes small for the structure-constant matrices built here.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Union

Number = Union[int, Q]
SparseRow = Dict[int, int]


class LinAlgError(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(row: Mapping[int, Number]) -> SparseRow:
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for x in row.values():
        if isinstance(x, Q):
            den = _lcm(den, x.denominator)
    out = {}
    g = 0
    for j, x in row.items():
        if x:
            v = int(x * den) if den != 1 or isinstance(x, Q) else x
            out[j] = v
            g = gcd(g, v)
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


def _as_sparse(row: Union[Sequence[Number], Mapping[int, Number]]) -> SparseRow:
    if isinstance(row, Mapping):
        return _primitive(row)
    return _primitive({j: x for j, x in enumerate(row) if x})


class Echelon:
    """Incremental row echelon form; ``add`` returns whether the row was independent."""

    def __init__(self) -> None:
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Union[Sequence[Number], Mapping[int, Number]]) -> SparseRow:
        v = _as_sparse(row)
        pivots = self.pivots
        while v:
            c = min(v)
            p = pivots.get(c)
            if p is None:
                return v
            a, b = p[c], v[c]
            g = gcd(a, b)
            a //= g
            b //= g
            nv = {}
            for j in v.keys() | p.keys():
                y = a * v.get(j, 0) - b * p.get(j, 0)
                if y:
                    nv[j] = y
            g = 0
            for y in nv.values():
                g = gcd(g, y)
                if g == 1:
                    break
            if g > 1:
                nv = {j: y // g for j, y in nv.items()}
            v = nv
        return v

    def add(self, row: Union[Sequence[Number], Mapping[int, Number]]) -> bool:
        v = self.reduce(row)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True


def rank(rows: Sequence[Union[Sequence[Number], Mapping[int, Number]]]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def transpose(m: Sequence[Sequence[Number]]) -> List[List[Number]]:
    return [list(col) for col in zip(*m)] if m else []


def det(m: Sequence[Sequence[Number]]) -> Q:
    """Determinant by Gaussian elimination over Fractions."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise LinAlgError("determinant of a non-square matrix")
    a = [[Q(x) for x in row] for row in m]
    sign = 1
    result = Q(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Q(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result *= piv
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f / piv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * result


def solve(m: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[List[Q]]:
    """Unique solution of m x = b, or None when inconsistent or underdetermined."""
    rows = len(m)
    if rows != len(b):
        raise LinAlgError("right-hand side has the wrong length")
    cols = len(m[0]) if rows else 0
    a = [[Q(x) for x in row] + [Q(y)] for row, y in zip(m, b)]
    piv_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][cols] != 0 for i in range(r, rows)):
        return None
    if r < cols:
        return None
    x = [Q(0)] * cols
    for i, c in enumerate(piv_cols):
        x[c] = a[i][cols]
    return x
