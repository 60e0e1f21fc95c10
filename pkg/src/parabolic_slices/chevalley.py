"""Chevalley basis structure constants and the bracket on g.

The basis is {x_alpha : alpha a root} together with the simple coroots.
Signs are fixed by declaring N positive on extraspecial pairs (or negative
for the alternative convention); everything else follows from the standard
relations between the N_{alpha,beta}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .rootsys import Root, RootSystem, add, is_positive, neg, root_key, sub

Pair = Tuple[Root, Root]


@dataclass
class Element:
    """An element of g: root-vector coefficients plus a Cartan part over simple coroots."""

    roots: Dict[Root, Q] = field(default_factory=dict)
    cartan: Tuple[Q, ...] = ()

    def is_zero(self) -> bool:
        return not any(self.roots.values()) and not any(self.cartan)

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.roots)
        for r, c in other.roots.items():
            v = out.get(r, 0) + c
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return Element(out, _vadd(self.cartan, other.cartan))

    def scale(self, c) -> "Element":
        if not c:
            return Element({}, tuple(Q(0) for _ in self.cartan))
        return Element({r: c * v for r, v in self.roots.items()}, tuple(c * v for v in self.cartan))

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        diff = self - other
        return diff.is_zero()


def _vadd(a: Tuple, b: Tuple) -> Tuple:
    if not a:
        return tuple(b)
    if not b:
        return tuple(a)
    return tuple(x + y for x, y in zip(a, b))


def _string_p(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """Largest p with beta - p*alpha a root."""
    p = 0
    cur = sub(beta, alpha)
    while cur in rs.root_set:
        p += 1
        cur = sub(cur, alpha)
    return p


class LieTable:
    """Structure constants N_{alpha,beta} for all pairs of roots with alpha+beta a root."""

    def __init__(self, rs: RootSystem, sign: int = 1) -> None:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.rs = rs
        self.sign = sign
        self._norm = {r: rs.norm2(r) for r in rs.roots}
        self._pos: Dict[Pair, int] = {}
        self._build_positive()
        self.nconst: Dict[Pair, int] = {}
        roots = rs.roots
        root_set = rs.root_set
        for a in roots:
            for b in roots:
                s = add(a, b)
                if s in root_set:
                    self.nconst[(a, b)] = self._n(a, b)
        self._coroots = {r: tuple(Q(c) for c in rs.coroot_coeffs(r)) for r in roots}

    # -- construction --------------------------------------------------------

    def _build_positive(self) -> None:
        rs = self.rs
        order = {r: k for k, r in enumerate(sorted(rs.positive_roots, key=root_key))}
        by_sum: Dict[Root, list] = {}
        pos = rs.positive_roots
        for a in pos:
            for b in pos:
                if order[a] < order[b]:
                    s = add(a, b)
                    if s in rs.positive_set:
                        by_sum.setdefault(s, []).append((a, b))
        self.extraspecial: Dict[Root, Pair] = {}
        for xi in sorted(by_sum, key=root_key):
            pairs = sorted(by_sum[xi], key=lambda ab: order[ab[0]])
            a0, b0 = pairs[0]
            self.extraspecial[xi] = (a0, b0)
            n0 = self.sign * (_string_p(rs, a0, b0) + 1)
            self._pos[(a0, b0)] = n0
            self._pos[(b0, a0)] = -n0
            for a, b in pairs[1:]:
                # four-root relation with (a, b, -a0, -b0)
                c, d = neg(a0), neg(b0)
                total = Q(0)
                bc = add(b, c)
                if bc in rs.root_set:
                    total += Q(self._n(b, c) * self._n(a, d)) / self._norm[bc]
                ca = add(c, a)
                if ca in rs.root_set:
                    total += Q(self._n(c, a) * self._n(b, d)) / self._norm[ca]
                ncd = self._n(c, d)
                val = -total * self._norm[xi] / ncd
                if val.denominator != 1:
                    raise RuntimeError("non-integral structure constant")
                self._pos[(a, b)] = int(val)
                self._pos[(b, a)] = -int(val)

    def _n(self, a: Root, b: Root) -> int:
        rs = self.rs
        s = add(a, b)
        if s not in rs.root_set:
            return 0
        pa, pb = is_positive(a), is_positive(b)
        if pa and pb:
            return self._pos[(a, b)]
        if not pa and not pb:
            return -self._n(neg(a), neg(b))
        if not pa:
            return -self._n(b, a)
        # a positive, b negative; c = -(a+b) closes the triangle a + b + c = 0
        c = neg(s)
        if is_positive(s):
            # N_{a,b}/(c,c) = N_{b,c}/(a,a) with b, c negative
            val = Q(-self._n(neg(b), neg(c))) * self._norm[c] / self._norm[a]
        else:
            # N_{a,b}/(c,c) = N_{c,a}/(b,b) with c, a positive
            val = Q(self._n(c, a)) * self._norm[c] / self._norm[b]
        if val.denominator != 1:
            raise RuntimeError("non-integral structure constant")
        return int(val)

    # -- queries -------------------------------------------------------------

    def N(self, a: Root, b: Root) -> int:
        return self.nconst.get((a, b), 0)

    def coroot(self, r: Root) -> Tuple[Q, ...]:
        """alpha^vee over the simple coroots."""
        return self._coroots[r]

    def root_value(self, r: Root, h: Tuple) -> Q:
        """r(h) for h given over the simple coroots."""
        rs = self.rs
        total = Q(0)
        for i, c in enumerate(h):
            if c:
                total += c * rs.eval_coroot(i + 1, r)
        return total

    def x(self, r: Root, c=1) -> Element:
        return Element({tuple(r): Q(c)}, self.zero_cartan())

    def h(self, coeffs) -> Element:
        return Element({}, tuple(Q(c) for c in coeffs))

    def zero_cartan(self) -> Tuple[Q, ...]:
        return tuple(Q(0) for _ in range(self.rs.rank))

    def basis(self) -> Iterator[Element]:
        for r in self.rs.roots:
            yield self.x(r)
        for i in range(self.rs.rank):
            yield self.h([int(k == i) for k in range(self.rs.rank)])

    def bracket_roots(self, a: Root, b: Root) -> Tuple[Optional[Root], object]:
        """[x_a, x_b] as (root, coefficient) or (None, coroot coefficients) or (None, None)."""
        s = add(a, b)
        if not any(s):
            return None, self._coroots[a]
        n = self.nconst.get((a, b))
        if n:
            return s, n
        return None, None

    def bracket(self, x: Element, y: Element) -> Element:
        rs = self.rs
        roots: Dict[Root, Q] = {}
        cart = [Q(0)] * rs.rank

        def put(r: Root, c) -> None:
            v = roots.get(r, 0) + c
            if v:
                roots[r] = v
            else:
                roots.pop(r, None)

        for a, ca in x.roots.items():
            if not ca:
                continue
            for b, cb in y.roots.items():
                if not cb:
                    continue
                s = add(a, b)
                if not any(s):
                    for i, k in enumerate(self._coroots[a]):
                        if k:
                            cart[i] += ca * cb * k
                else:
                    n = self.nconst.get((a, b))
                    if n:
                        put(s, ca * cb * n)
        # [h, x_b] = b(h) x_b and [x_a, h] = -a(h) x_a
        if x.cartan and any(x.cartan):
            for b, cb in y.roots.items():
                v = self.root_value(b, x.cartan)
                if v and cb:
                    put(b, v * cb)
        if y.cartan and any(y.cartan):
            for a, ca in x.roots.items():
                v = self.root_value(a, y.cartan)
                if v and ca:
                    put(a, -v * ca)
        return Element(roots, tuple(cart))

    def killing(self, x: Element, y: Element) -> Q:
        """Invariant form on g with (x_a, x_{-a}) = 2/(a,a) and the normalized form on h."""
        total = Q(0)
        for a, ca in x.roots.items():
            cb = y.roots.get(neg(a))
            if cb:
                total += ca * cb * 2 / self._norm[a]
        if x.cartan and y.cartan:
            g = self.rs.coroot_gram
            for i, u in enumerate(x.cartan):
                if u:
                    for j, v in enumerate(y.cartan):
                        if v:
                            total += u * v * g[i][j]
        return total


_TABLES: Dict[Tuple[str, int, int], LieTable] = {}


def build_lie_table(rs: RootSystem, sign: int = 1) -> LieTable:
    key = (rs.kind, rs.rank, sign)
    if key not in _TABLES:
        _TABLES[key] = LieTable(rs, sign)
    return _TABLES[key]


def bracket(table: LieTable, x: Element, y: Element) -> Element:
    return table.bracket(x, y)


def jacobi_defect(table: LieTable, x: Element, y: Element, z: Element) -> Element:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]."""
    b = table.bracket
    return b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y))


def check_jacobi(table: LieTable, triples: Iterable[Tuple[int, int, int]]) -> list:
    """Jacobi identity on basis triples given by positions in ``table.basis()``; returns failures."""
    basis = list(table.basis())
    return [t for t in triples if not jacobi_defect(table, *(basis[k] for k in t)).is_zero()]
