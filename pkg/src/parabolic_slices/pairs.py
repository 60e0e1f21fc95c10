"""Candidate sets S, T and Heisenberg covers for each covered (type, s)."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction as Q
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .parabolic import ParabolicContext, build_parabolic
from .rootsys import (
    Root,
    RootSystem,
    RootSystemError,
    add,
    apply_perm,
    build_root_system,
    diagram_automorphism,
    neg,
    sub,
)

Cover = Dict[Root, FrozenSet[Root]]


class ConstructionError(RuntimeError):
    """A cover that does not partition; points at a transcription bug."""


@dataclass(frozen=True)
class PairCandidate:
    name: str
    S_plus: Tuple[Root, ...]
    S_minus: Tuple[Root, ...]
    T_plus: Tuple[Root, ...]
    T_minus: Tuple[Root, ...]
    cover: Optional[Cover]
    provenance: str
    coefficients: Mapping[Root, Q] = field(default_factory=dict)

    @property
    def S(self) -> Tuple[Root, ...]:
        return self.S_plus + self.S_minus

    @property
    def T(self) -> Tuple[Root, ...]:
        return self.T_plus + self.T_minus

    @property
    def hardcoded(self) -> bool:
        return self.cover is None

    def coeff(self, r: Root) -> Q:
        return Q(self.coefficients.get(r, 1))

    def with_coefficients(self, coeffs: Mapping[Root, Q]) -> "PairCandidate":
        bad = [r for r in coeffs if r not in self.S]
        if bad:
            raise RootSystemError(f"coefficients given for roots outside S: {bad}")
        if any(Q(c) == 0 for c in coeffs.values()):
            raise RootSystemError("coefficients must be nonzero")
        merged = dict(self.coefficients)
        merged.update({r: Q(c) for r, c in coeffs.items()})
        return replace(self, coefficients=merged)

    def without(self, r: Root) -> "PairCandidate":
        """Drop one root from S (used to exhibit non-regular y)."""
        return replace(
            self,
            S_plus=tuple(x for x in self.S_plus if x != r),
            S_minus=tuple(x for x in self.S_minus if x != r),
            cover=None if self.cover is None else {k: v for k, v in self.cover.items() if k != r},
        )


@dataclass(frozen=True)
class NotCovered:
    name: str
    reason: str


Candidate = Union[PairCandidate, NotCovered]


# --- helpers -----------------------------------------------------------------


def _v(n: int, coeffs: Mapping[int, int]) -> Root:
    out = [0] * n
    for i, c in coeffs.items():
        out[i - 1] = c
    return tuple(out)


def _run(n: int, lo: int, hi: int) -> Root:
    return _v(n, {i: 1 for i in range(lo, hi + 1)})


def _simple(n: int, i: int) -> Root:
    return _v(n, {i: 1})


def _is_simple(r: Root) -> bool:
    return sum(abs(c) for c in r) == 1


def _negs(roots: Iterable[Root]) -> Tuple[Root, ...]:
    return tuple(neg(r) for r in roots)


def _hset(ctx: ParabolicContext, gamma: Root) -> FrozenSet[Root]:
    """H_gamma from the ambient cascade (gamma > 0) or the Levi cascade (gamma < 0)."""
    if sum(gamma) > 0:
        return ctx.cascade.heisenberg(gamma)
    return ctx.levi_cascade.heisenberg(gamma)


def _hzero(ctx: ParabolicContext, beta: Root) -> FrozenSet[Root]:
    return _hset(ctx, beta) - {beta}


def _check_cover(ctx: ParabolicContext, cand: PairCandidate) -> None:
    cover = cand.cover or {}
    for sign, S, T, target in (
        (1, cand.S_plus, cand.T_plus, set(ctx.rs.positive_roots)),
        (-1, cand.S_minus, cand.T_minus, set(_negs(ctx.levi_positive))),
    ):
        seen = set(T)
        for g in S:
            block = cover[g]
            overlap = seen & block
            if overlap:
                raise ConstructionError(f"{cand.name}: cover blocks overlap at {sorted(overlap)}")
            seen |= block
        if seen != target:
            raise ConstructionError(
                f"{cand.name}: cover misses {sorted(target - seen)} / adds {sorted(seen - target)}"
            )


def heisenberg_cover(ctx: ParabolicContext, cand: PairCandidate) -> Cover:
    if cand.cover is None:
        raise RootSystemError(f"{cand.name} is a hardcoded case without a cover")
    _check_cover(ctx, cand)
    return dict(cand.cover)


# --- the cascade pattern (B, D, E, G2 s=1) -----------------------------------


def _cascade_pattern(
    ctx: ParabolicContext,
    provenance: str,
    to_S_plus: Sequence[Root] = (),
    to_S_minus: Sequence[Root] = (),
) -> PairCandidate:
    """S+ = nonsimple cascade roots, T+ = simple ones; minus the same for the Levi.

    Roots listed in ``to_S_plus``/``to_S_minus`` move from T to S.
    """
    casc, lev = ctx.cascade, ctx.levi_cascade
    S_plus = [b for b in casc.betas if not _is_simple(b)] + list(to_S_plus)
    T_plus = [b for b in casc.betas if _is_simple(b) and b not in to_S_plus]
    lneg = _negs(lev.betas)
    S_minus = [b for b in lneg if not _is_simple(b)] + list(to_S_minus)
    T_minus = [b for b in lneg if _is_simple(b) and b not in to_S_minus]
    cover = {g: _hset(ctx, g) for g in S_plus + S_minus}
    return PairCandidate(ctx.name, tuple(S_plus), tuple(S_minus), tuple(T_plus), tuple(T_minus), cover, provenance)


# --- type C ------------------------------------------------------------------


@dataclass(frozen=True)
class TableauC:
    n: int
    cells: Dict[Tuple[int, int], Root]

    def row(self, i: int) -> List[Root]:
        return [self.cells[(i, j)] for j in range(i, 2 * self.n - i + 1)]


def tableau_C(n: int) -> TableauC:
    if n < 2:
        raise RootSystemError("the type C tableau needs n >= 2")
    cells = {}
    for i in range(1, n + 1):
        for j in range(i, 2 * n - i + 1):
            if j <= n - 1:
                c = {k: 1 for k in range(i, j)}
                c.update({k: 2 for k in range(j, n)})
                c[n] = 1
                cells[(i, j)] = _v(n, c)
            else:
                cells[(i, j)] = _run(n, i, 2 * n - j)
    return TableauC(n, cells)


def _type_C(ctx: ParabolicContext) -> PairCandidate:
    n, s = ctx.rs.rank, ctx.s
    beta = {i: b for i, b in enumerate(ctx.cascade.betas, start=1)}
    gamma = {i: sub(beta[i], _simple(n, i)) for i in range(1, n)}
    # cascade of the A_{s-1} component
    bprime = {i: _run(n, i, s - i) for i in range(1, s // 2 + 1)}
    cover: Cover = {}

    def gcover(i: int, sign: int) -> None:
        block = _hzero(ctx, beta[i]) | ctx.cascade.heisenberg(beta[i + 1])
        key = gamma[i] if sign > 0 else neg(gamma[i])
        cover[key] = block if sign > 0 else frozenset(_negs(block))

    if s % 2 == 1:
        S_plus = [gamma[2 * i - 1] for i in range(1, n // 2 + 1)]
        for i in range(1, n // 2 + 1):
            gcover(2 * i - 1, 1)
        js = range((s + 1) // 2, (n - 1) // 2 + 1)
        S_minus = [neg(gamma[2 * j]) for j in js] + [neg(b) for b in bprime.values()]
        for j in js:
            gcover(2 * j, -1)
        T_plus = [beta[2 * i - 1] for i in range(1, (n + 1) // 2 + 1)]
        T_minus = [neg(beta[2 * j]) for j in range((s + 1) // 2, n // 2 + 1)]
    else:
        t = s // 4
        S_plus = [gamma[2 * i - 1] for i in range(1, t + 1)] + [beta[2 * t + 1]]
        for i in range(1, t + 1):
            gcover(2 * i - 1, 1)
        S_plus += [gamma[2 * j] for j in range(t + 1, (n - 1) // 2 + 1)]
        for j in range(t + 1, (n - 1) // 2 + 1):
            gcover(2 * j, 1)
        js = range(s // 2 + 1, n // 2 + 1)
        S_minus = [neg(gamma[2 * j - 1]) for j in js]
        for j in js:
            gcover(2 * j - 1, -1)
        S_minus += [neg(b) for i, b in bprime.items() if i < s // 2]
        T_plus = [beta[2 * i - 1] for i in range(1, t + 1)] + [beta[2 * j] for j in range(t + 1, n // 2 + 1)]
        T_minus = [neg(beta[2 * j - 1]) for j in range(s // 2 + 1, (n + 1) // 2 + 1)] + [neg(bprime[s // 2])]
    for g in S_plus + S_minus:
        if g not in cover:
            cover[g] = _hset(ctx, g)
    prov = "type C tableau, s odd" if s % 2 else "type C tableau, s even"
    return PairCandidate(ctx.name, tuple(S_plus), tuple(S_minus), tuple(T_plus), tuple(T_minus), cover, prov)


# --- hardcoded centralizer cases ---------------------------------------------


def _hardcoded(ctx: ParabolicContext, S: Sequence[Root], T: Sequence[Root]) -> PairCandidate:
    S_plus = tuple(r for r in S if sum(r) > 0)
    S_minus = tuple(r for r in S if sum(r) < 0)
    T_plus = tuple(r for r in T if sum(r) > 0)
    T_minus = tuple(r for r in T if sum(r) < 0)
    return PairCandidate(ctx.name, S_plus, S_minus, T_plus, T_minus, None, "centralizer of a highest root vector")


def _centralizer_B(n: int) -> Tuple[List[Root], List[Root]]:
    S = [_simple(n, i) for i in range(2, n)] + [_run(n, 1, n)]
    T = [_v(n, {i: 1, **{k: 2 for k in range(i + 1, n + 1)}}) for i in range(1, n)] + [neg(_simple(n, 1))]
    return S, T


def _centralizer_D(n: int) -> Tuple[List[Root], List[Root]]:
    S = [_simple(n, i) for i in range(2, n - 1)]
    S += [_run(n, 1, n - 1), _v(n, {**{k: 1 for k in range(1, n - 1)}, n: 1})]
    T = [
        _v(n, {i: 1, **{k: 2 for k in range(i + 1, n - 1)}, n - 1: 1, n: 1})
        for i in range(1, n - 1)
    ]
    T += [_simple(n, n), neg(_simple(n, 1))]
    return S, T


_E6_S2 = (
    [(0, 0, -1, 0, 0, 0), (0, 0, 0, 0, -1, 0), (0, 1, 1, 2, 1, 0), (1, 1, 1, 1, 1, 0), (0, 1, 1, 1, 1, 1)],
    [(1, 0, 1, 1, 1, 1), (1, 0, 1, 1, 1, 0), (0, 0, 1, 1, 0, 0), (1, 1, 2, 2, 2, 1), (1, 1, 1, 2, 1, 1),
     (1, 2, 2, 3, 2, 1)],
)
_E7_S1 = (
    [(0, -1, 0, 0, 0, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, -1, 0), (1, 1, 1, 2, 1, 1, 1),
     (1, 1, 1, 2, 2, 1, 0), (1, 1, 2, 2, 1, 1, 0)],
    [(0, 1, 1, 2, 2, 2, 1), (0, 1, 1, 2, 2, 1, 0), (1, 2, 2, 3, 3, 2, 1), (0, 1, 1, 2, 1, 0, 0),
     (1, 1, 2, 3, 2, 2, 1), (1, 1, 2, 2, 2, 1, 1), (2, 2, 3, 4, 3, 2, 1)],
)
_F4_S1 = (
    [(0, 0, -1, 0), (1, 1, 2, 1), (1, 2, 2, 0)],
    [(2, 3, 4, 2), (1, 2, 2, 2), (0, 1, 2, 2), (0, 1, 1, 1)],
)
_G2_S2 = ([(1, 1)], [(3, 2), (3, 1)])


# --- exceptional cases with explicit covers ----------------------------------


def _E6_s4(ctx: ParabolicContext) -> PairCandidate:
    b = ctx.cascade.betas
    g2, g3 = (1, 0, 1, 1, 1, 0), (0, 0, 1, 1, 1, 1)
    S_plus = (b[0], g2, g3)
    S_minus = ((-1, 0, -1, 0, 0, 0), (0, 0, 0, 0, -1, -1))
    T_plus = (b[1], (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1))
    T_minus = ((0, -1, 0, 0, 0, 0),)
    cover = {g: _hset(ctx, g) for g in (b[0],) + S_minus}
    cover[g2] = frozenset([
        (1, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0), (1, 0, 1, 1, 0, 0), (0, 0, 1, 1, 1, 0),
        (0, 0, 0, 1, 1, 0), (0, 0, 0, 0, 1, 0), g2,
    ])
    cover[g3] = frozenset([(0, 0, 1, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 1, 1, 1), (0, 0, 0, 0, 1, 1), g3])
    return PairCandidate(ctx.name, S_plus, S_minus, T_plus, T_minus, cover, "E6 with an A5 pattern inside")


def _F4(ctx: ParabolicContext) -> PairCandidate:
    b1, b2, b3, b4 = ctx.cascade.betas
    a1, a3, a4 = (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    g = sub(b2, a4)
    if ctx.s == 2:
        S_minus = (neg(add(a3, a4)),)
        T_minus = (neg(a1),)
    else:
        S_minus = (neg((1, 2, 2, 0)),)
        T_minus = (neg(a1), neg(a3))
    cover = {b1: _hset(ctx, b1), g: _hzero(ctx, b2) | _hset(ctx, b3)}
    for r in S_minus:
        cover[r] = _hset(ctx, r)
    return PairCandidate(ctx.name, (b1, g), S_minus, (b2, b4), T_minus, cover, "F4 with a C3 pattern inside")


# --- symmetry ----------------------------------------------------------------


def apply_symmetry(cand: PairCandidate, rs: RootSystem, perm: Mapping[int, int], name: str | None = None) -> PairCandidate:
    """Image of a candidate under a diagram automorphism (roots mapped coefficientwise)."""
    perm = diagram_automorphism(rs, dict(perm))

    def m(rs_: Iterable[Root]) -> Tuple[Root, ...]:
        return tuple(apply_perm(perm, r) for r in rs_)

    cover = None
    if cand.cover is not None:
        cover = {apply_perm(perm, k): frozenset(m(v)) for k, v in cand.cover.items()}
    coeffs = {apply_perm(perm, k): v for k, v in cand.coefficients.items()}
    prov = cand.provenance if all(perm[a] == a for a in perm) else f"image of {cand.name} under a diagram symmetry"
    return PairCandidate(
        name or cand.name, m(cand.S_plus), m(cand.S_minus), m(cand.T_plus), m(cand.T_minus), cover, prov, coeffs
    )


def _swap(n: int, *pairs: Tuple[int, int]) -> Dict[int, int]:
    perm = {a: a for a in range(1, n + 1)}
    for a, b in pairs:
        perm[a], perm[b] = b, a
    return perm


# --- dispatch ----------------------------------------------------------------


def construct_candidate(ctx: ParabolicContext) -> Candidate:
    rs, s, n = ctx.rs, ctx.s, ctx.rs.rank
    kind = rs.kind
    if kind == "B":
        if s % 2 == 1:
            return _cascade_pattern(ctx, "cascade roots, type B with s odd")
        if s == 2:
            return _hardcoded(ctx, *_centralizer_B(n))
        return NotCovered(ctx.name, "type B with s even and s >= 4")
    if kind == "C":
        return _type_C(ctx)
    if kind == "D":
        alpha_n = _simple(n, n)
        if s == 2:
            return _hardcoded(ctx, *_centralizer_D(n))
        if s % 2 == 1 and s <= n - 2:
            if n % 2 == 0:
                return _cascade_pattern(ctx, "cascade roots, type D with s odd, n even", to_S_plus=[alpha_n])
            return _cascade_pattern(ctx, "cascade roots, type D with s odd, n odd", to_S_minus=[neg(alpha_n)])
        if n % 2 == 1 and s == n:
            return _cascade_pattern(ctx, "cascade roots, type D with s = n odd")
        if n % 2 == 1 and s == n - 1:
            src = construct_candidate(build_parabolic(rs, n))
            return apply_symmetry(src, rs, _swap(n, (n - 1, n)), ctx.name)
        if n == 4 and s in (3, 4):
            # triality carries s = 1 to s = 3, 4
            src = construct_candidate(build_parabolic(rs, 1))
            return apply_symmetry(src, rs, _swap(4, (1, s)), ctx.name)
        return NotCovered(ctx.name, "type D case without a construction")
    if kind == "E6":
        if s == 2:
            return _hardcoded(ctx, *_E6_S2)
        if s == 3:
            return _cascade_pattern(ctx, "cascade roots, E6")
        if s == 4:
            return _E6_s4(ctx)
        if s == 5:
            src = construct_candidate(build_parabolic(rs, 3))
            return apply_symmetry(src, rs, _swap(6, (1, 6), (3, 5)), ctx.name)
        return NotCovered(ctx.name, "E6 with s in {1, 6}")
    if kind == "E7":
        if s == 1:
            return _hardcoded(ctx, *_E7_S1)
        if s in (2, 5):
            return _cascade_pattern(ctx, "cascade roots, E7")
        return NotCovered(ctx.name, "E7 with s in {3, 4, 6, 7}")
    if kind == "E8":
        if s == 3:
            return _cascade_pattern(ctx, "cascade roots, E8")
        return NotCovered(ctx.name, "E8 with s != 3")
    if kind == "F4":
        if s == 1:
            return _hardcoded(ctx, *_F4_S1)
        if s in (2, 4):
            return _F4(ctx)
        return NotCovered(ctx.name, "F4 with s = 3 admits no adapted pair (see the search)")
    if kind == "G2":
        if s == 1:
            return _cascade_pattern(ctx, "cascade roots, G2")
        return _hardcoded(ctx, *_G2_S2)
    return NotCovered(ctx.name, f"type {kind} is not treated")


def candidate_for(kind: str, rank: int, s: int) -> Candidate:
    return construct_candidate(build_parabolic(build_root_system(kind, rank), s))


def covered_cases(max_rank: int = 8) -> List[Tuple[str, int, int]]:
    """All (kind, rank, s) with a construction, in canonical order."""
    out = []
    ranges = [("B", 2, 8), ("C", 3, 8), ("D", 4, 8)]
    for kind, lo, hi in ranges:
        for n in range(lo, min(hi, max_rank) + 1):
            for s in range(1, n + 1):
                out.append((kind, n, s))
    for kind, n in (("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)):
        if n <= max_rank:
            out += [(kind, n, s) for s in range(1, n + 1)]
    return [c for c in out if isinstance(candidate_for(*c), PairCandidate)]
