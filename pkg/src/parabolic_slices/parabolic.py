"""Combinatorics of the truncated maximal parabolic p_{pi',E}, pi' = pi minus {alpha_s}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .cascade import Cascade, kostant_cascade
from .rootsys import (
    Root,
    RootSystem,
    RootSystemError,
    SubsystemComponent,
    Weight,
    diagram_involution_j,
    irreducible_components,
    neg,
    root_key,
    whole_component,
)


@dataclass(frozen=True)
class ParabolicContext:
    rs: RootSystem
    s: int
    components: Tuple[SubsystemComponent, ...]
    i_perm: Dict[int, int]
    j_perm: Dict[int, int]
    orbits: Tuple[FrozenSet[int], ...]

    @property
    def levi(self) -> Tuple[int, ...]:
        """Indices of pi', which also index the coroot basis of h_E."""
        return tuple(a for a in range(1, self.rs.rank + 1) if a != self.s)

    hE_basis = levi

    @property
    def index(self) -> int:
        return len(self.orbits)

    @property
    def E1(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(o for o in self.orbits if frozenset(self.j_perm[a] for a in o) != o)

    @property
    def E2(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(o for o in self.orbits if frozenset(self.j_perm[a] for a in o) == o)

    @cached_property
    def levi_positive(self) -> Tuple[Root, ...]:
        return self.rs.positive_roots_of(self.levi)

    @cached_property
    def p_plus_roots(self) -> Tuple[Root, ...]:
        """Roots whose root spaces make up p: Delta^+ and Delta^-_{pi'}."""
        roots = list(self.rs.positive_roots) + [neg(r) for r in self.levi_positive]
        return tuple(sorted(roots, key=root_key))

    @cached_property
    def p_minus_roots(self) -> Tuple[Root, ...]:
        """Roots of the opposed algebra p^-: Delta^- and Delta^+_{pi'}."""
        return tuple(sorted((neg(r) for r in self.p_plus_roots), key=root_key))

    @cached_property
    def m_minus_roots(self) -> Tuple[Root, ...]:
        levi = set(self.levi_positive)
        return tuple(sorted((neg(r) for r in self.rs.positive_roots if r not in levi), key=root_key))

    @property
    def dim(self) -> int:
        return len(self.p_plus_roots) + len(self.levi)

    @cached_property
    def cascade(self) -> Cascade:
        return kostant_cascade(self.rs)

    @cached_property
    def levi_cascade(self) -> Cascade:
        return kostant_cascade(self.rs, self.levi)

    def component_of(self, a: int) -> SubsystemComponent:
        for c in self.components:
            if a in c.simple_roots:
                return c
        raise RootSystemError(f"alpha_{a} is not in pi'")

    @property
    def name(self) -> str:
        return f"{self.rs.kind if self.rs.kind[-1].isdigit() else self.rs.kind + str(self.rs.rank)} s={self.s}"


def _extend_i(j: Dict[int, int], i_levi: Dict[int, int], levi: set, a: int) -> int:
    if j[a] not in levi:
        return j[a]
    cur = j[a]
    for _ in range(2 * len(j) + 2):
        cur = j[i_levi[cur]]
        if cur not in levi:
            return cur
    raise RuntimeError("involution i does not close up")  # pragma: no cover


def build_parabolic(rs: RootSystem, s: int) -> ParabolicContext:
    if not 1 <= s <= rs.rank:
        raise RootSystemError(f"s={s} out of range for rank {rs.rank}")
    levi = [a for a in range(1, rs.rank + 1) if a != s]
    comps = tuple(irreducible_components(rs, levi))
    j = diagram_involution_j(whole_component(rs))
    i_levi: Dict[int, int] = {}
    for c in comps:
        i_levi.update(diagram_involution_j(c))
    i = dict(i_levi)
    i[s] = _extend_i(j, i_levi, set(levi), s)
    ij = {a: i[j[a]] for a in j}
    seen, orbits = set(), []
    for a in range(1, rs.rank + 1):
        if a in seen:
            continue
        orb, cur = set(), a
        while cur not in orb:
            orb.add(cur)
            cur = ij[cur]
        seen |= orb
        orbits.append(frozenset(orb))
    return ParabolicContext(rs, s, comps, i, j, tuple(orbits))


# --- the epsilon criterion ----------------------------------------------------


def semigroup_membership(cascade_roots: Sequence[Root], lam: Weight) -> Optional[Tuple[int, ...]]:
    """Coefficients of lam in N beta when they are nonnegative integers, else None."""
    if not cascade_roots:
        return () if not any(lam) else None
    m = [[b[k] for b in cascade_roots] for k in range(len(lam))]
    if linalg.rank(linalg.transpose(m)) != len(cascade_roots):
        raise RootSystemError("cascade roots are linearly dependent")
    sol = linalg.solve(m, list(lam))
    if sol is None:
        return None
    if all(c.denominator == 1 and c >= 0 for c in sol):
        return tuple(int(c) for c in sol)
    return None


def levi_fundamental_weights(ctx: ParabolicContext) -> Dict[int, Weight]:
    """Fundamental weights of pi' (per component), written over pi."""
    rs = ctx.rs
    out = {}
    for comp in ctx.components:
        idx = comp.simple_roots
        sub = [[rs.cartan[a - 1][b - 1] for b in idx] for a in idx]
        for k, a in enumerate(idx):
            rhs = [int(t == k) for t in range(len(idx))]
            c = linalg.solve(sub, rhs)
            w = [Q(0)] * rs.rank
            for t, b in enumerate(idx):
                w[b - 1] = c[t]
            out[a] = tuple(w)
    return out


@dataclass(frozen=True)
class OrbitEpsilon:
    orbit: Tuple[int, ...]
    j_stable: bool
    in_B_pi: bool
    in_B_levi: bool
    epsilon: Q


# (kind, s) with polynomial Poisson centre by the centralizer results,
# outside the epsilon criterion
_CITED_POLYNOMIAL = {("B", 2), ("D", 2), ("E6", 2), ("E7", 1), ("F4", 1), ("G2", 2)}
_KNOWN_NOT_POLYNOMIAL = {("E8", 8)}


@dataclass(frozen=True)
class EpsilonReport:
    name: str
    orbits: Tuple[OrbitEpsilon, ...]

    @property
    def holds(self) -> bool:
        return all(o.epsilon == 1 for o in self.orbits)

    verdict_values = ("criterion-true", "known-polynomial-by-citation", "known-not-polynomial", "unknown")


def epsilon_criterion(ctx: ParabolicContext) -> EpsilonReport:
    rs = ctx.rs
    betas = ctx.cascade.betas
    levi_betas = ctx.levi_cascade.betas
    omega = rs.fundamental_weights
    omega_levi = levi_fundamental_weights(ctx)
    rows = []
    for orb in ctx.orbits:
        stable = frozenset(ctx.j_perm[a] for a in orb) == orb
        lam = tuple(sum((omega[a - 1][k] for a in orb), Q(0)) for k in range(rs.rank))
        in_b = semigroup_membership(betas, lam) is not None
        lev = [a for a in orb if a != ctx.s]
        mu = tuple(sum((omega_levi[a][k] for a in lev), Q(0)) for k in range(rs.rank))
        in_bl = semigroup_membership(levi_betas, mu) is not None
        eps = Q(1, 2) if (stable and in_b and in_bl) else Q(1)
        rows.append(OrbitEpsilon(tuple(sorted(orb)), stable, in_b, in_bl, eps))
    return EpsilonReport(ctx.name, tuple(rows))


def polynomiality_verdict(ctx: ParabolicContext, report: EpsilonReport | None = None) -> str:
    report = report or epsilon_criterion(ctx)
    if report.holds:
        return "criterion-true"
    key = (ctx.rs.kind, ctx.s)
    if key in _KNOWN_NOT_POLYNOMIAL:
        return "known-not-polynomial"
    if key in _CITED_POLYNOMIAL and not (ctx.rs.kind == "B" and ctx.rs.rank < 3):
        return "known-polynomial-by-citation"
    return "unknown"
