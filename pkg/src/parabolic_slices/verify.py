"""Certificates for candidate adapted pairs.

p = n + h_E + n^-_{pi'} is identified with the dual of p^- = n^- + h_E + n_{pi'}
through the invariant form, so the coadjoint action of p^- on p is the
bracket in g followed by dropping the m^- root spaces and the h_E^perp part
of the Cartan component. The latter is done by recording a Cartan element c
through its pairings (c, alpha_i^vee), i in pi', which has kernel h_E^perp.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .chevalley import LieTable, build_lie_table
from .pairs import PairCandidate, heisenberg_cover
from .parabolic import ParabolicContext
from .rootsys import Root, RootSystemError, add, neg

SparseRow = Dict[int, Q]


# --- conditions (1), (2), (4) ------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    cond1: bool
    cond2: bool
    cond4: bool
    witnesses: Tuple[str, ...] = ()


def is_heisenberg(gamma: Root, block) -> Optional[Root]:
    """None if ``block`` is a Heisenberg set of centre gamma, else an offending root."""
    if gamma not in block:
        return gamma
    rest = set(block) - {gamma}
    for a in rest:
        partners = [b for b in rest if add(a, b) == gamma]
        if len(partners) != 1:
            return a
    return None


def check_conditions(ctx: ParabolicContext, cand: PairCandidate) -> ConditionReport:
    if cand.cover is None:
        raise RootSystemError(f"{cand.name} has no cover; only the direct certificate applies")
    cover = cand.cover
    wit: List[str] = []
    ok1 = True
    for sign, S, T, target in (
        ("+", cand.S_plus, cand.T_plus, set(ctx.rs.positive_roots)),
        ("-", cand.S_minus, cand.T_minus, {neg(r) for r in ctx.levi_positive}),
    ):
        seen = set(T)
        if len(seen) != len(T):
            ok1 = False
            wit.append(f"T{sign} has repeated roots")
        for g in S:
            block = cover.get(g)
            if block is None:
                ok1 = False
                wit.append(f"no cover block for {g}")
                continue
            bad = is_heisenberg(g, block)
            if bad is not None:
                ok1 = False
                wit.append(f"Gamma_{g} is not Heisenberg at {bad}")
            clash = seen & set(block)
            if clash:
                ok1 = False
                wit.append(f"Gamma_{g} meets earlier blocks at {sorted(clash)}")
            seen |= set(block)
        if seen != target:
            ok1 = False
            wit.append(f"side {sign}: missing {sorted(target - seen)}, extra {sorted(seen - target)}")
    ok2 = True
    for S in (cand.S_plus, cand.S_minus):
        Sset = set(S)
        owner = {a: g for g in S for a in cover.get(g, ()) if a != g}
        O = list(owner)
        for i, a in enumerate(O):
            for b in O[i:]:
                g = add(a, b)
                if g in Sset and not (owner[a] == g and owner[b] == g):
                    ok2 = False
                    wit.append(f"{a} + {b} = {g} with summands outside Gamma_{g}^0")
    ok4 = len(cand.T) == ctx.index
    if not ok4:
        wit.append(f"|T| = {len(cand.T)} but the index is {ctx.index}")
    return ConditionReport(ok1, ok2, ok4, tuple(wit))


# --- condition (3) -----------------------------------------------------------


def basis_matrix(ctx: ParabolicContext, S: Sequence[Root]) -> List[List[int]]:
    """Rows alpha_i^vee (i in pi', increasing), columns s_j in the given order."""
    if len(S) != len(ctx.levi):
        raise RootSystemError(f"|S| = {len(S)} but dim h_E = {len(ctx.levi)}")
    return [[ctx.rs.eval_coroot(i, s) for s in S] for i in ctx.levi]


def basis_certificate(ctx: ParabolicContext, S: Sequence[Root]) -> Q:
    return linalg.det(basis_matrix(ctx, S))


def solve_h(ctx: ParabolicContext, S: Sequence[Root]) -> Optional[Tuple[Q, ...]]:
    """h over {alpha_i^vee : i in pi'} with s(h) = -1 on S, when unique."""
    m = linalg.transpose(basis_matrix(ctx, S))
    sol = linalg.solve(m, [-1] * len(S))
    return None if sol is None else tuple(sol)


def eval_h(ctx: ParabolicContext, h: Sequence[Q], r: Root) -> Q:
    return sum((c * ctx.rs.eval_coroot(i, r) for i, c in zip(ctx.levi, h)), Q(0))


# --- the coadjoint map -------------------------------------------------------


@dataclass
class CoadjointMatrix:
    rows: List[SparseRow]
    row_labels: List[object]
    col_labels: List[object]

    def dense(self) -> List[List[Q]]:
        n = len(self.col_labels)
        return [[r.get(j, Q(0)) for j in range(n)] for r in self.rows]

    def rank(self) -> int:
        return linalg.rank(self.rows)


def _p_index(ctx: ParabolicContext) -> Tuple[Dict[Root, int], Dict[int, int], List[object]]:
    roots = {r: k for k, r in enumerate(ctx.p_plus_roots)}
    m = len(roots)
    cart = {i: m + k for k, i in enumerate(ctx.levi)}
    labels: List[object] = list(ctx.p_plus_roots) + [f"h{i}" for i in ctx.levi]
    return roots, cart, labels


def _put(row: SparseRow, j: int, v) -> None:
    if v:
        x = row.get(j, 0) + v
        if x:
            row[j] = x
        else:
            row.pop(j, None)


def _coadjoint_rows(
    L: LieTable,
    ctx: ParabolicContext,
    xi_roots: Mapping[Root, Q],
    xi_cartan: Mapping[int, Q],
) -> CoadjointMatrix:
    """Rows x -> proj [x, xi] for x over the basis of p^-; xi_cartan over alpha_i^vee, i in pi'."""
    rs = ctx.rs
    ridx, cidx, labels = _p_index(ctx)
    gram = rs.coroot_gram
    levi = ctx.levi
    rows: List[SparseRow] = []
    row_labels: List[object] = []

    def cartan_into(row: SparseRow, coroot: Sequence, c) -> None:
        for i in levi:
            v = sum((k * gram[t][i - 1] for t, k in enumerate(coroot) if k), Q(0))
            _put(row, cidx[i], c * v)

    for a in ctx.p_minus_roots:
        row: SparseRow = {}
        for r, c in xi_roots.items():
            if not c:
                continue
            s = add(a, r)
            if not any(s):
                cartan_into(row, L.coroot(a), c)
            else:
                j = ridx.get(s)
                if j is not None:
                    n = L.N(a, r)
                    if n:
                        _put(row, j, c * n)
        # [x_a, h] = -a(h) x_a
        j = ridx.get(a)
        if j is not None:
            v = sum((c * rs.eval_coroot(i, a) for i, c in xi_cartan.items()), Q(0))
            _put(row, j, -v)
        rows.append(row)
        row_labels.append(a)
    for i in levi:
        row = {}
        for r, c in xi_roots.items():
            if c:
                _put(row, ridx[r], c * rs.eval_coroot(i, r))
        rows.append(row)
        row_labels.append(f"h{i}")
    return CoadjointMatrix(rows, row_labels, labels)


def y_coefficients(cand: PairCandidate) -> Dict[Root, Q]:
    return {s: cand.coeff(s) for s in cand.S}


def coadjoint_map(L: LieTable, ctx: ParabolicContext, y_coeffs: Mapping[Root, Q]) -> CoadjointMatrix:
    pset = set(ctx.p_plus_roots)
    for r, c in y_coeffs.items():
        if r not in pset:
            raise RootSystemError(f"{r} is not a root of p")
        if not c:
            raise RootSystemError(f"zero coefficient on {r}")
    return _coadjoint_rows(L, ctx, dict(y_coeffs), {})


def coadjoint_codim(L: LieTable, ctx: ParabolicContext, y_coeffs: Mapping[Root, Q]) -> int:
    return ctx.dim - coadjoint_map(L, ctx, y_coeffs).rank()


def complement_ok(L: LieTable, ctx: ParabolicContext, y_coeffs: Mapping[Root, Q], T: Sequence[Root]) -> bool:
    """(ad p^-) y + g_T = p with the sum direct."""
    mat = coadjoint_map(L, ctx, y_coeffs)
    ridx, _, _ = _p_index(ctx)
    if any(t not in ridx for t in T) or len(set(T)) != len(T):
        return False
    ech = linalg.Echelon()
    for row in mat.rows:
        ech.add(row)
    image = ech.rank
    for t in T:
        ech.add({ridx[t]: 1})
    return ech.rank == ctx.dim and image + len(T) == ctx.dim


# --- Phi_y on o x o ----------------------------------------------------------


def phi_matrix(L: LieTable, cand: PairCandidate) -> Tuple[List[Root], List[List[Q]]]:
    """Matrix of (x, x') -> K(y, [x, x']) on o = g_{-O}, indexed by O."""
    if cand.cover is None:
        raise RootSystemError(f"{cand.name} has no cover")
    O = [a for g in cand.S for a in sorted(cand.cover[g]) if a != g]
    y = {s: cand.coeff(s) for s in cand.S}
    norm = {s: L.rs.norm2(s) for s in cand.S}
    mat = []
    for a in O:
        row = []
        for b in O:
            g = add(a, b)
            v = Q(0)
            if g in y:
                n = L.N(neg(a), neg(b))
                v = y[g] * n * 2 / norm[g]
            row.append(v)
        mat.append(row)
    return O, mat


def phi_rank(L: LieTable, cand: PairCandidate) -> Tuple[int, int]:
    """(rank, dim o)."""
    O, mat = phi_matrix(L, cand)
    if not any(cand.coeff(s) for s in cand.S):
        return 0, len(O)
    return linalg.rank(mat), len(O)


# --- the certificate ---------------------------------------------------------


@dataclass
class PairCertificate:
    name: str
    index: int
    dim_p: int
    cond1: Optional[bool]
    cond2: Optional[bool]
    cond4: bool
    witnesses: Tuple[str, ...]
    basis_det: Q
    phi_rank: Optional[int]
    phi_dim: Optional[int]
    codim: int
    complement_ok: bool
    h: Optional[Tuple[Q, ...]]
    s_h_ok: bool
    eigenvalues: Tuple[Q, ...]
    degrees: Tuple[Q, ...] = field(default=())

    @property
    def cond3(self) -> bool:
        return self.basis_det != 0

    @property
    def phi_full(self) -> Optional[bool]:
        return None if self.phi_rank is None else self.phi_rank == self.phi_dim

    @property
    def verdict(self) -> bool:
        covered_ok = self.cond1 is not False and self.cond2 is not False and self.phi_full is not False
        return (
            covered_ok
            and self.cond4
            and self.cond3
            and self.codim == self.index
            and self.complement_ok
            and self.s_h_ok
            and all(m >= 0 for m in self.eigenvalues)
        )


def regularity_certificate(
    L: LieTable, ctx: ParabolicContext, cand: PairCandidate, check_cover: bool = True
) -> PairCertificate:
    witnesses: Tuple[str, ...] = ()
    c1 = c2 = None
    prank = pdim = None
    if cand.cover is not None and check_cover:
        rep = check_conditions(ctx, cand)
        c1, c2, witnesses = rep.cond1, rep.cond2, rep.witnesses
        prank, pdim = phi_rank(L, cand)
    cond4 = len(cand.T) == ctx.index
    S = list(cand.S)
    det = basis_certificate(ctx, S) if len(S) == len(ctx.levi) else Q(0)
    y = y_coefficients(cand)
    mat = coadjoint_map(L, ctx, y)
    codim = ctx.dim - mat.rank()
    comp = complement_ok(L, ctx, y, cand.T)
    h = solve_h(ctx, S) if det != 0 else None
    eig: Tuple[Q, ...] = ()
    s_ok = False
    if h is not None:
        s_ok = all(eval_h(ctx, h, s) == -1 for s in S)
        eig = tuple(eval_h(ctx, h, t) for t in cand.T)
    return PairCertificate(
        cand.name, ctx.index, ctx.dim, c1, c2, cond4, witnesses, det, prank, pdim, codim, comp, h, s_ok, eig,
        tuple(m + 1 for m in eig),
    )


def certify(ctx: ParabolicContext, cand: PairCandidate, sign: int = 1) -> PairCertificate:
    return regularity_certificate(build_lie_table(ctx.rs, sign), ctx, cand)


# --- generic index -----------------------------------------------------------


def random_point(ctx: ParabolicContext, rng: random.Random, bound: int = 9) -> Tuple[Dict[Root, Q], Dict[int, Q]]:
    def val() -> Q:
        v = 0
        while v == 0:
            v = rng.randint(-bound, bound)
        return Q(v)

    return {r: val() for r in ctx.p_plus_roots}, {i: val() for i in ctx.levi}


def generic_index(L: LieTable, ctx: ParabolicContext, seed: int = 0, trials: int = 5) -> int:
    """Minimum codimension of (ad p^-) xi over seeded random xi in p."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = None
    for _ in range(trials):
        roots, cart = random_point(ctx, rng)
        codim = ctx.dim - _coadjoint_rows(L, ctx, roots, cart).rank()
        best = codim if best is None else min(best, codim)
    return best
