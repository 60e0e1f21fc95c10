"""Kostant cascade of strongly orthogonal roots and the sets H_beta."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .rootsys import (
    Root,
    RootSystem,
    RootSystemError,
    add,
    build_root_system,
    irreducible_components,
    neg,
    root_key,
    sub,
)

Node = Tuple[int, ...]


@dataclass(frozen=True)
class CascadeNode:
    key: Node
    beta: Root
    kind: str  # classified type of the subsystem Delta_K, e.g. "A3"
    simple_roots: FrozenSet[int]  # generators of Delta_K
    delta_plus: FrozenSet[Root]
    hset: FrozenSet[Root]
    label: str = ""


@dataclass(frozen=True)
class Cascade:
    rs: RootSystem
    subset: FrozenSet[int]
    nodes: Tuple[CascadeNode, ...]

    @property
    def betas(self) -> List[Root]:
        return [n.beta for n in self.nodes]

    def node(self, key: Node) -> CascadeNode:
        for n in self.nodes:
            if n.key == key:
                return n
        raise RootSystemError(f"unknown cascade node {key}")

    def node_of(self, beta: Root) -> CascadeNode:
        for n in self.nodes:
            if n.beta == beta:
                return n
        raise RootSystemError(f"{beta} is not a cascade root")

    def heisenberg(self, beta: Root) -> FrozenSet[Root]:
        """H_beta for a cascade root, or -H_{-beta} for the negative of one."""
        if beta in self.betas:
            return self.node_of(beta).hset
        if neg(beta) in self.betas:
            return frozenset(neg(r) for r in self.node_of(neg(beta)).hset)
        raise RootSystemError(f"{beta} is not (minus) a cascade root")

    def simple_part(self) -> List[Root]:
        """beta_pi intersected with pi."""
        return [b for b in self.betas if sum(b) == 1]

    def nonsimple_part(self) -> List[Root]:
        """beta_pi^0: cascade roots that are not simple."""
        return [b for b in self.betas if sum(b) != 1]


def precedes(k: Node, l: Node) -> bool:
    """K <= L iff L = K or L extends K."""
    return len(l) >= len(k) and l[: len(k)] == k


def kostant_cascade(rs: RootSystem, subset: Iterable[int] | None = None) -> Cascade:
    """Cascade of the subsystem generated by ``subset`` (default: all of pi)."""
    sub = frozenset(range(1, rs.rank + 1)) if subset is None else frozenset(subset)
    nodes: List[CascadeNode] = []

    def recurse(prefix: Node, simple: FrozenSet[int]) -> None:
        for k, comp in enumerate(irreducible_components(rs, simple), start=1):
            key = prefix + (k,)
            idx = frozenset(comp.simple_roots)
            plus = frozenset(rs.positive_roots_of(idx))
            beta = max(plus, key=root_key)
            hset = frozenset(g for g in plus if rs.pairing(g, beta) > 0)
            nodes.append(CascadeNode(key, beta, comp.name, idx, plus, hset))
            recurse(key, frozenset(a for a in idx if rs.pairing(rs.simple(a), beta) == 0))

    recurse((), sub)
    nodes.sort(key=lambda n: n.key)
    return Cascade(rs, sub, tuple(_with_labels(nodes)))


def _with_labels(nodes: List[CascadeNode]) -> List[CascadeNode]:
    """Main chain K = (1, ..., 1) is beta_i; other nodes are named by their key."""
    out = []
    for n in nodes:
        if all(k == 1 for k in n.key):
            name = f"beta_{len(n.key)}"
        else:
            name = "beta_[" + ".".join(map(str, n.key)) + "]"
        out.append(CascadeNode(n.key, n.beta, n.kind, n.simple_roots, n.delta_plus, n.hset, name))
    return out


def heisenberg_H(cascade: Cascade, key: Node) -> FrozenSet[Root]:
    return cascade.node(key).hset


def _vec(n: int, coeffs: Dict[int, int]) -> Root:
    v = [0] * n
    for i, c in coeffs.items():
        v[i - 1] = c
    return tuple(v)


def _span(n: int, lo: int, hi: int, c: int = 1) -> Dict[int, int]:
    return {i: c for i in range(lo, hi + 1)}


def table1_reference(kind: str, rank: int) -> List[Root]:
    """Closed-form cascade roots per simple type, in the displayed order."""
    rs = build_root_system(kind, rank)
    kind, n = rs.kind, rs.rank
    out: List[Root] = []
    if kind == "A":
        for i in range(1, (n + 1) // 2 + 1):
            out.append(_vec(n, _span(n, i, n + 1 - i)))
    elif kind == "B":
        for i in range(1, (n + 1) // 2 + 1):
            if n % 2 == 1 and i == (n + 1) // 2:
                out.append(_vec(n, {n: 1}))
            else:
                out.append(_vec(n, {2 * i - 1: 1, **_span(n, 2 * i, n, 2)}))
        for i in range(1, n // 2 + 1):
            out.append(_vec(n, {2 * i - 1: 1}))
    elif kind == "C":
        for i in range(1, n + 1):
            out.append(_vec(n, {**_span(n, i, n - 1, 2), n: 1}))
    elif kind == "D":
        for i in range(1, n // 2):
            out.append(_vec(n, {2 * i - 1: 1, **_span(n, 2 * i, n - 2, 2), n - 1: 1, n: 1}))
        if n % 2 == 1:
            out.append(_vec(n, {n - 2: 1, n - 1: 1, n: 1}))
            primed = (n - 1) // 2
        else:
            out.append(_vec(n, {n: 1}))
            primed = n // 2 - 1
        for i in range(1, primed + 1):
            out.append(_vec(n, {2 * i - 1: 1}))
        if n % 2 == 0:
            out.append(_vec(n, {n - 1: 1}))
    elif kind == "E6":
        out = [(1, 2, 2, 3, 2, 1), (1, 0, 1, 1, 1, 1), (0, 0, 1, 1, 1, 0), (0, 0, 0, 1, 0, 0)]
    elif kind == "E7":
        out = [
            (2, 2, 3, 4, 3, 2, 1),
            (0, 1, 1, 2, 2, 2, 1),
            (0, 1, 1, 2, 1, 0, 0),
            (0, 0, 1, 0, 0, 0, 0),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 1, 0, 0, 0, 0, 0),
        ]
    elif kind == "E8":
        out = [
            (2, 3, 4, 6, 5, 4, 3, 2),
            (2, 2, 3, 4, 3, 2, 1, 0),
            (0, 1, 1, 2, 2, 2, 1, 0),
            (0, 1, 1, 2, 1, 0, 0, 0),
            (0, 0, 1, 0, 0, 0, 0, 0),
            (0, 0, 0, 0, 0, 0, 1, 0),
            (0, 0, 0, 0, 1, 0, 0, 0),
            (0, 1, 0, 0, 0, 0, 0, 0),
        ]
    elif kind == "F4":
        out = [(2, 3, 4, 2), (0, 1, 2, 2), (0, 1, 2, 0), (0, 1, 0, 0)]
    elif kind == "G2":
        out = [(3, 2), (1, 0)]
    return out


def check_properties(cascade: Cascade) -> List[str]:
    """Exhaustively test the structural properties of the sets H_beta; returns violations."""
    rs = cascade.rs
    out: List[str] = []
    nodes = cascade.nodes
    roots = rs.root_set
    plus = frozenset(rs.positive_roots_of(cascade.subset))
    simple = {rs.simple(a) for a in cascade.subset}
    for i, k in enumerate(nodes):
        for l in nodes[i + 1:]:
            if rs.pairing(k.beta, l.beta) != 0 or add(k.beta, l.beta) in roots or sub(k.beta, l.beta) in roots:
                out.append(f"{k.label}, {l.label} not strongly orthogonal")
    # (1) H = Delta_K^+ minus the roots orthogonal to beta_K
    for k in nodes:
        expect = frozenset(g for g in k.delta_plus if rs.pairing(g, k.beta) != 0)
        if k.hset != expect:
            out.append(f"(1) fails at {k.label}")
    # (2) disjoint decomposition of Delta^+ and Delta^-
    seen: set = set()
    for k in nodes:
        if seen & k.hset:
            out.append(f"(2) overlap at {k.label}")
        seen |= k.hset
    if seen != plus:
        out.append("(2) H sets do not exhaust Delta^+")
    neg_seen = {neg(g) for k in nodes for g in cascade.heisenberg(neg(k.beta))}
    if neg_seen != plus:
        out.append("(2) -H sets do not exhaust Delta^-")
    owner = {g: k for k in nodes for g in k.hset}
    for k in nodes:
        h0 = k.hset - {k.beta}
        # (3) beta - alpha stays in H^0
        for a in h0:
            if sub(k.beta, a) not in h0:
                out.append(f"(3) fails at {k.label}, {a}")
        # (4) sums inside H are beta or not roots
        hs = sorted(k.hset)
        for i, a in enumerate(hs):
            for b in hs[i:]:
                c = add(a, b)
                if c in roots and c != k.beta:
                    out.append(f"(4) fails at {k.label}: {a} + {b}")
        # (6) simple roots in H
        want = 2 if k.kind[0] == "A" and k.kind != "A1" else 1
        if len(k.hset & simple) != want:
            out.append(f"(6) fails at {k.label}: {len(k.hset & simple)} simple roots")
    # (5) mixed sums land in the H of the smaller node
    pl = sorted(plus)
    for i, a in enumerate(pl):
        for b in pl[i:]:
            c = add(a, b)
            if c not in roots:
                continue
            ka, kb = owner[a], owner[b]
            if precedes(ka.key, kb.key):
                small = ka
            elif precedes(kb.key, ka.key):
                small = kb
            else:
                out.append(f"(5) incomparable nodes for {a} + {b}")
                continue
            if c not in small.hset:
                out.append(f"(5) fails for {a} + {b}")
            if c == small.beta and not (ka is kb and a != c and b != c):
                out.append(f"(5) beta split across nodes: {a} + {b}")
    return out
