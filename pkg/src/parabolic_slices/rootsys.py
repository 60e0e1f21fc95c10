"""Root systems of the simple Lie algebras in Bourbaki labeling.

Roots are integer tuples over the simple roots; weights are tuples of
``Fraction``. Indices of simple roots are 1-based in the public API (as in
the tables) and 0-based in tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple, Union

Root = Tuple[int, ...]
Weight = Tuple[Q, ...]
Vector = Union[Root, Weight]

KINDS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


class RootSystemError(ValueError):
    """Invalid parameters for a root-system operation."""


def normalize_kind(kind: str, rank: int) -> str:
    kind = kind.strip().upper()
    if kind in ("E", "F", "G"):
        kind = f"{kind}{rank}"
    if kind not in KINDS:
        raise RootSystemError(f"unknown simple type {kind!r}")
    if kind in _FIXED_RANK:
        if rank != _FIXED_RANK[kind]:
            raise RootSystemError(f"{kind} has rank {_FIXED_RANK[kind]}, got {rank}")
    elif rank < _MIN_RANK[kind]:
        raise RootSystemError(f"{kind}{rank} is not a valid simple type")
    return kind


def _form_data(kind: str, n: int) -> Tuple[List[Q], Dict[Tuple[int, int], Q]]:
    """Squared lengths and off-diagonal inner products (0-based, i < j)."""
    two, one = Q(2), Q(1)
    if kind == "A":
        lengths = [two] * n
        edges = {(i, i + 1): Q(-1) for i in range(n - 1)}
    elif kind == "B":
        lengths = [two] * (n - 1) + [one]
        edges = {(i, i + 1): Q(-1) for i in range(n - 1)}
    elif kind == "C":
        lengths = [one] * (n - 1) + [two]
        edges = {(i, i + 1): Q(-1, 2) for i in range(n - 2)}
        edges[(n - 2, n - 1)] = Q(-1)
    elif kind == "D":
        lengths = [two] * n
        edges = {(i, i + 1): Q(-1) for i in range(n - 2)}
        edges[(n - 3, n - 1)] = Q(-1)
    elif kind in ("E6", "E7", "E8"):
        lengths = [two] * n
        # 1-3-4-5-6-7-8 with 2 attached to 4
        edges = {(0, 2): Q(-1), (1, 3): Q(-1)}
        for i in range(2, n - 1):
            edges[(i, i + 1)] = Q(-1)
    elif kind == "F4":
        lengths = [two, two, one, one]
        edges = {(0, 1): Q(-1), (1, 2): Q(-1), (2, 3): Q(-1, 2)}
    elif kind == "G2":
        lengths = [Q(2, 3), two]
        edges = {(0, 1): Q(-1)}
    else:  # pragma: no cover - guarded by normalize_kind
        raise RootSystemError(kind)
    return lengths, edges


def form_matrix(kind: str, rank: int) -> List[List[Q]]:
    lengths, edges = _form_data(kind, rank)
    form = [[Q(0)] * rank for _ in range(rank)]
    for i in range(rank):
        form[i][i] = lengths[i]
    for (i, j), v in edges.items():
        form[i][j] = form[j][i] = v
    return form


def cartan_from_form(form: Sequence[Sequence[Q]]) -> List[List[int]]:
    """cartan[i][j] = <alpha_j, alpha_i^vee>."""
    n = len(form)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * form[i][j] / form[i][i]
            if v.denominator != 1:
                raise RootSystemError("form does not define a Cartan matrix")
            row.append(int(v))
        out.append(row)
    return out


def _close_positive_roots(cartan: Sequence[Sequence[int]]) -> List[Root]:
    """Positive roots by root strings, built up height by height."""
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = how far we can go down the alpha_i string from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        out.extend(nxt)
        layer = nxt
    return out


def root_key(r: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Total order on roots: height, then lexicographic."""
    return (sum(r), tuple(r))


def neg(r: Root) -> Root:
    return tuple(-c for c in r)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def height(r: Root) -> int:
    return sum(r)


def is_positive(r: Root) -> bool:
    return any(c > 0 for c in r)


def support(r: Root) -> frozenset:
    """1-based indices of the simple roots occurring in r."""
    return frozenset(i + 1 for i, c in enumerate(r) if c)


def _invert(m: Sequence[Sequence[Q]]) -> List[List[Q]]:
    n = len(m)
    a = [[Q(x) for x in row] + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    form: Tuple[Tuple[Q, ...], ...]
    positive_roots: Tuple[Root, ...]

    @cached_property
    def roots(self) -> Tuple[Root, ...]:
        allr = list(self.positive_roots) + [neg(r) for r in self.positive_roots]
        return tuple(sorted(allr, key=root_key))

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(self.simple(i) for i in range(1, self.rank + 1))

    def simple(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple root index {i} out of range")
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.root_set

    def pairing(self, x: Vector, y: Vector) -> Q:
        return pairing(self, x, y)

    def coroot_apply(self, alpha: Vector, lam: Vector) -> Q:
        return coroot_apply(self, alpha, lam)

    def coroot_row(self, i: int) -> Tuple[int, ...]:
        """Values <alpha_j, alpha_i^vee> for all j, i.e. the functional alpha_i^vee."""
        return self.cartan[i - 1]

    def eval_coroot(self, i: int, r: Sequence[int]) -> int:
        row = self.cartan[i - 1]
        return sum(c * row[j] for j, c in enumerate(r))

    @cached_property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        return tuple(fundamental_weights(self))

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=root_key)

    def highest_root_of(self, subset: Iterable[int]) -> Root:
        sub = frozenset(subset)
        rs = [r for r in self.positive_roots if support(r) <= sub]
        if not rs:
            raise RootSystemError("empty subsystem has no highest root")
        return max(rs, key=root_key)

    def positive_roots_of(self, subset: Iterable[int]) -> Tuple[Root, ...]:
        sub = frozenset(subset)
        return tuple(r for r in self.positive_roots if support(r) <= sub)

    @cached_property
    def coroot_gram(self) -> Tuple[Tuple[Q, ...], ...]:
        """(alpha_i^vee, alpha_j^vee) under the normalized form."""
        n = self.rank
        f = self.form
        return tuple(
            tuple(4 * f[i][j] / (f[i][i] * f[j][j]) for j in range(n)) for i in range(n)
        )

    def norm2(self, r: Vector) -> Q:
        return pairing(self, r, r)

    def coroot_coeffs(self, r: Root) -> Tuple[int, ...]:
        """alpha^vee over the simple coroots."""
        n2 = self.norm2(r)
        out = []
        for i, c in enumerate(r):
            v = c * self.form[i][i] / n2
            if v.denominator != 1:
                raise RootSystemError(f"{r} is not a root")
            out.append(int(v))
        return tuple(out)

    def label(self, r: Sequence[int]) -> str:
        return format_root(r)

    def __hash__(self) -> int:
        return hash((self.kind, self.rank))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and (self.kind, self.rank) == (other.kind, other.rank)


_CACHE: Dict[Tuple[str, int], RootSystem] = {}


def build_root_system(kind: str, rank: int) -> RootSystem:
    """Return the root system of the simple type (kind, rank), cached."""
    kind = normalize_kind(kind, rank)
    key = (kind, rank)
    if key not in _CACHE:
        form = form_matrix(kind, rank)
        cartan = cartan_from_form(form)
        pos = sorted(_close_positive_roots(cartan), key=root_key)
        _CACHE[key] = RootSystem(
            kind=kind,
            rank=rank,
            cartan=tuple(tuple(r) for r in cartan),
            form=tuple(tuple(r) for r in form),
            positive_roots=tuple(pos),
        )
    return _CACHE[key]


def pairing(rs: RootSystem, x: Vector, y: Vector) -> Q:
    """Invariant form on the span of the simple roots (long roots have length 2)."""
    if len(x) != rs.rank or len(y) != rs.rank:
        raise RootSystemError("dimension mismatch")
    f = rs.form
    total = Q(0)
    for i, a in enumerate(x):
        if a:
            row = f[i]
            for j, b in enumerate(y):
                if b:
                    total += a * b * row[j]
    return total


def coroot_apply(rs: RootSystem, alpha: Vector, lam: Vector) -> Q:
    """alpha^vee(lam) = 2 (alpha, lam) / (alpha, alpha)."""
    n2 = pairing(rs, alpha, alpha)
    if n2 == 0:
        raise RootSystemError("coroot of the zero vector")
    return 2 * pairing(rs, alpha, lam) / n2


def fundamental_weights(rs: RootSystem) -> List[Weight]:
    """Fundamental weights over the simple roots: rows of the inverse transposed Cartan matrix."""
    inv = _invert(rs.cartan)
    n = rs.rank
    # omega_i = sum_k c_k alpha_k with sum_k c_k cartan[j][k] = delta_ij
    return [tuple(inv[k][i] for k in range(n)) for i in range(n)]


def format_root(r: Sequence) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"


def parse_root(text: str, rank: int) -> Root:
    """Parse '1,2,2' / '-1,-1,0' / '-(1,2,2)' / '122' / '-0010' style root notation."""
    s = text.strip().replace(" ", "")
    sign = 1
    # a leading minus negates the whole root for compact or bracketed forms
    if s.startswith("-") and (s[1:2] == "(" or "," not in s):
        sign, s = -1, s[1:]
    s = s.strip("()[]")
    parts = s.split(",") if ("," in s or rank == 1) else list(s)
    if len(parts) != rank:
        raise RootSystemError(f"root {text!r} does not have {rank} coordinates")
    return tuple(sign * int(p) for p in parts)


# --- subsystems -----------------------------------------------------------


@dataclass(frozen=True)
class SubsystemComponent:
    """Connected piece of a subdiagram, classified with its Bourbaki labeling.

    ``simple_roots`` lists the 1-based ambient indices in Bourbaki order of
    ``kind``, so ``simple_roots[k]`` plays the role of alpha_{k+1}.
    """

    kind: str
    rank: int
    simple_roots: Tuple[int, ...]

    @property
    def relabel(self) -> Dict[int, int]:
        """Ambient index -> Bourbaki index inside the component."""
        return {a: k + 1 for k, a in enumerate(self.simple_roots)}

    @property
    def name(self) -> str:
        return self.kind if self.kind[-1].isdigit() else f"{self.kind}{self.rank}"


def _adjacency(rs: RootSystem, subset: Iterable[int]) -> Dict[int, List[int]]:
    sub = sorted(set(subset))
    return {a: [b for b in sub if b != a and rs.cartan[a - 1][b - 1] != 0] for a in sub}


def _path_from(adj: Dict[int, List[int]], start: int) -> List[int]:
    path, prev = [start], None
    while True:
        nxt = [b for b in adj[path[-1]] if b != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _classify(rs: RootSystem, nodes: List[int]) -> SubsystemComponent:
    adj = _adjacency(rs, nodes)
    n = len(nodes)
    length = {a: rs.form[a - 1][a - 1] for a in nodes}
    if n == 1:
        return SubsystemComponent("A", 1, (nodes[0],))
    mult = {
        (a, b): rs.cartan[a - 1][b - 1] * rs.cartan[b - 1][a - 1]
        for a in nodes for b in adj[a]
    }
    ends = sorted(a for a in nodes if len(adj[a]) == 1)
    branch = [a for a in nodes if len(adj[a]) == 3]
    if any(m == 3 for m in mult.values()):
        a, b = nodes
        order = (a, b) if length[a] < length[b] else (b, a)
        return SubsystemComponent("G2", 2, order)
    if any(m == 2 for m in mult.values()):
        path = _path_from(adj, ends[0])
        # orient so the long roots come first
        if length[path[0]] < length[path[-1]]:
            path.reverse()
        (a, b), = {tuple(sorted(k)) for k, m in mult.items() if m == 2}
        if n == 4 and {path.index(a), path.index(b)} == {1, 2}:
            return SubsystemComponent("F4", 4, tuple(path))
        if n == 2:
            return SubsystemComponent("B", 2, tuple(path))
        if {path.index(a), path.index(b)} != {n - 2, n - 1}:
            path.reverse()
        if length[path[-1]] < length[path[-2]]:
            return SubsystemComponent("B", n, tuple(path))
        return SubsystemComponent("C", n, tuple(path))
    if not branch:
        path = _path_from(adj, ends[0])
        return SubsystemComponent("A", n, tuple(path))
    (c,) = branch
    arms = []
    for nb in sorted(adj[c]):
        arm, prev = [nb], c
        while True:
            nxt = [x for x in adj[arm[-1]] if x != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda arm: (len(arm), min(arm)))
    lens = [len(a) for a in arms]
    if lens[0] == lens[1] == 1:
        # D_n: alpha_1..alpha_{n-3} on the long arm, then branch, then the two leaves
        long_arm = min(arms, key=lambda arm: (-len(arm), min(arm)))
        leaves = sorted(x for arm in arms if arm is not long_arm for x in arm)
        return SubsystemComponent("D", n, tuple(reversed(long_arm)) + (c,) + tuple(leaves))
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        kind = f"E{n}"
        a2 = arms[0][0]
        a31 = list(reversed(arms[1]))  # alpha_1, alpha_3
        tail = arms[2]
        order = (a31[0], a2, a31[1], c) + tuple(tail)
        return SubsystemComponent(kind, n, order)
    raise RuntimeError(f"unclassifiable subdiagram {nodes}")  # pragma: no cover


def irreducible_components(rs: RootSystem, subset: Iterable[int]) -> List[SubsystemComponent]:
    """Connected components of a set of simple roots, classified and relabeled."""
    sub = set(subset)
    for a in sub:
        if not 1 <= a <= rs.rank:
            raise RootSystemError(f"simple root index {a} out of range")
    adj = _adjacency(rs, sub)
    seen, comps = set(), []
    for a in sorted(sub):
        if a in seen:
            continue
        stack, comp = [a], []
        seen.add(a)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(_classify(rs, sorted(comp)))
    return comps


def component_cartan(rs: RootSystem, comp: SubsystemComponent) -> List[List[int]]:
    idx = comp.simple_roots
    return [[rs.cartan[a - 1][b - 1] for b in idx] for a in idx]


def reference_cartan(kind: str, rank: int) -> List[List[int]]:
    return cartan_from_form(form_matrix(kind, rank))


def highest_root(rs: RootSystem, comp: SubsystemComponent) -> Root:
    """Highest root of an irreducible set of simple roots."""
    if len(irreducible_components(rs, comp.simple_roots)) != 1:
        raise RootSystemError("highest root requires an irreducible component")
    return rs.highest_root_of(comp.simple_roots)


def diagram_involution_j(comp: SubsystemComponent) -> Dict[int, int]:
    """-w_0 on the simple roots of an irreducible component (ambient indices)."""
    idx = comp.simple_roots
    n = len(idx)
    if comp.kind == "A":
        perm = list(reversed(range(n)))
    elif comp.kind == "D" and n % 2 == 1:
        perm = list(range(n - 2)) + [n - 1, n - 2]
    elif comp.kind == "E6":
        perm = [5, 1, 4, 3, 2, 0]
    else:
        perm = list(range(n))
    return {idx[k]: idx[perm[k]] for k in range(n)}


def whole_component(rs: RootSystem) -> SubsystemComponent:
    return SubsystemComponent(rs.kind, rs.rank, tuple(range(1, rs.rank + 1)))


def diagram_automorphism(rs: RootSystem, perm: Dict[int, int]) -> Dict[int, int]:
    """Validate a permutation of simple-root indices as a Dynkin diagram automorphism."""
    if sorted(perm) != list(range(1, rs.rank + 1)) or sorted(perm.values()) != list(range(1, rs.rank + 1)):
        raise RootSystemError("not a permutation of the simple roots")
    for a in perm:
        for b in perm:
            if rs.cartan[a - 1][b - 1] != rs.cartan[perm[a] - 1][perm[b] - 1]:
                raise RootSystemError("permutation does not preserve the Cartan matrix")
    return dict(perm)


def apply_perm(perm: Dict[int, int], r: Root) -> Root:
    out = [0] * len(r)
    for i, c in enumerate(r):
        out[perm[i + 1] - 1] = c
    return tuple(out)
