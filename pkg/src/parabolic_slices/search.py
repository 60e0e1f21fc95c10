"""Exhaustive search for adapted pairs of the truncated parabolic of F4 with s = 3.

Any adapted pair (h, y) here needs h in h_E = span(alpha_1^vee, alpha_2^vee,
alpha_4^vee) whose eigenvalues on the 28 root vectors of p contain
{-1, -1, -1, 2, 3, 9}, with y in the (-1)-eigenspace and of codimension 3.

Six prescribed eigenvalues pin h down by three independent equations among
them, so h ranges over the solutions of all 3x3 systems drawn from triples of
roots with values in {-1, 2, 3, 9}. When the six roots only span a rank 1 or 2
space of linear forms, h is not unique; those degenerate families are
enumerated separately from 1- and 2-subsets.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q
from multiprocessing import Pool
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .chevalley import build_lie_table
from .parabolic import ParabolicContext, build_parabolic
from .rootsys import Root, build_root_system
from .verify import coadjoint_codim

log = logging.getLogger(__name__)

VALUES = (-1, 2, 3, 9)
TARGET = Counter({-1: 3, 2: 1, 3: 1, 9: 1})
INDEX = 3


@dataclass(frozen=True)
class SearchCandidate:
    h: Tuple[Q, Q, Q]  # over alpha_1^vee, alpha_2^vee, alpha_4^vee
    minus_one_roots: Tuple[Root, ...]
    eigenvalues: Tuple[Q, ...]  # sorted multiset over the 28 root vectors
    codim: int  # smallest codimension found for y on the (-1)-eigenroots


@dataclass(frozen=True)
class DegenerateFamily:
    """A line or plane of h on which the prescribed values are constant."""

    fixed: Tuple[Tuple[Root, Q], ...]  # roots with constant eigenvalue along the family
    minus_one_roots: Tuple[Root, ...]
    codim: int


@dataclass(frozen=True)
class SearchReport:
    enumeration_size: int
    unique_solutions: int
    literal: Tuple[SearchCandidate, ...]  # exactly three (-1)-eigenroots
    relaxed: Tuple[SearchCandidate, ...]  # every survivor, y generic on the whole (-1)-eigenspace
    degenerate: Tuple[DegenerateFamily, ...]
    eigenspace_sizes: Tuple[Tuple[int, int], ...]  # (size of (-1)-eigenspace, count)

    @property
    def exists_adapted_pair_literal(self) -> bool:
        return any(c.codim == INDEX for c in self.literal)

    @property
    def exists_adapted_pair_relaxed(self) -> bool:
        return any(c.codim == INDEX for c in self.relaxed) or any(f.codim == INDEX for f in self.degenerate)

    @property
    def exists_adapted_pair(self) -> bool:
        return self.exists_adapted_pair_literal or self.exists_adapted_pair_relaxed


def f4_context() -> ParabolicContext:
    return build_parabolic(build_root_system("F4", 4), 3)


def _forms(ctx: ParabolicContext) -> Tuple[List[Root], List[Tuple[int, ...]]]:
    roots = list(ctx.p_plus_roots)
    forms = [tuple(ctx.rs.eval_coroot(i, r) for i in ctx.levi) for r in roots]
    return roots, forms


def _det3(m: Sequence[Sequence[int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adj3(m: Sequence[Sequence[int]]) -> List[List[int]]:
    c = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            minor = [[m[r][k] for k in range(3) if k != j] for r in range(3) if r != i]
            c[j][i] = (-1) ** (i + j) * (minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0])
    return c


def _solve_chunk(args: Tuple[List[Tuple[int, int, int]], List[Tuple[int, ...]]]) -> List[Tuple[Q, Q, Q]]:
    triples, forms = args
    out = set()
    for t in triples:
        m = [forms[k] for k in t]
        d = _det3(m)
        if d == 0:
            continue
        adj = _adj3(m)
        for v in itertools.product(VALUES, repeat=3):
            out.add(tuple(Q(sum(adj[i][k] * v[k] for k in range(3)), d) for i in range(3)))
    return sorted(out)


def enumerate_h(jobs: int = 1) -> Tuple[int, List[Tuple[Q, Q, Q]]]:
    """All h solving a uniquely solvable 3x3 system; returns (systems tried, sorted distinct h)."""
    ctx = f4_context()
    _, forms = _forms(ctx)
    triples = list(itertools.combinations(range(len(forms)), 3))
    size = len(triples) * len(VALUES) ** 3
    chunks = [triples[k::max(jobs, 1) * 4] for k in range(max(jobs, 1) * 4)]
    payload = [(c, forms) for c in chunks if c]
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_solve_chunk, payload)
    else:
        parts = [_solve_chunk(p) for p in payload]
    found = set()
    for p in parts:
        found.update(p)
    return size, sorted(found)


def eigenvalues(forms: Sequence[Tuple[int, ...]], h: Sequence[Q]) -> List[Q]:
    return [sum((Q(f[i]) * h[i] for i in range(3)), Q(0)) for f in forms]


def contains_target(vals: Iterable[Q]) -> bool:
    cnt = Counter(vals)
    return all(cnt.get(Q(k), 0) >= m for k, m in TARGET.items())


def min_codim(ctx: ParabolicContext, S: Sequence[Root], seed: int = 0, trials: int = 3) -> int:
    """Smallest codimension over coefficient trials for y supported on S (all-ones first)."""
    L = build_lie_table(ctx.rs)
    rng = random.Random(seed)
    best = coadjoint_codim(L, ctx, {s: Q(1) for s in S})
    for _ in range(trials):
        coeffs = {s: Q(rng.choice([k for k in range(-7, 8) if k])) for s in S}
        best = min(best, coadjoint_codim(L, ctx, coeffs))
    return best


def _degenerate_families(ctx: ParabolicContext, seed: int) -> List[DegenerateFamily]:
    roots, forms = _forms(ctx)
    fams: Dict[FrozenSet[Tuple[Root, Q]], None] = {}
    for k in (1, 2):
        for idx in itertools.combinations(range(len(forms)), k):
            basis = [forms[i] for i in idx]
            if linalg.rank(basis) < k:
                continue
            # roots whose form lies in the span of the basis forms
            inside = []
            for j, f in enumerate(forms):
                if linalg.rank(basis + [f]) == k:
                    coef = linalg.solve(linalg.transpose(basis), list(f))
                    inside.append((j, coef))
            for vals in itertools.product(VALUES, repeat=k):
                fixed = [(roots[j], sum((c * v for c, v in zip(coef, vals)), Q(0))) for j, coef in inside]
                if contains_target(v for _, v in fixed):
                    fams[frozenset(fixed)] = None
    out = []
    for fixed in sorted(fams, key=lambda f: sorted(f)):
        S = tuple(sorted(r for r, v in fixed if v == -1))
        out.append(DegenerateFamily(tuple(sorted(fixed)), S, min_codim(ctx, S, seed)))
    return out


def f4_s3_search(jobs: int = 1, seed: int = 0) -> SearchReport:
    ctx = f4_context()
    roots, forms = _forms(ctx)
    size, hs = enumerate_h(jobs)
    log.info("enumerated %d systems, %d distinct h", size, len(hs))
    literal, relaxed = [], []
    sizes: Counter = Counter()
    codims: Dict[Tuple[Root, ...], int] = {}
    for h in hs:
        vals = eigenvalues(forms, h)
        if not contains_target(vals):
            continue
        S = tuple(sorted(r for r, v in zip(roots, vals) if v == -1))
        sizes[len(S)] += 1
        if S not in codims:
            codims[S] = min_codim(ctx, S, seed)
        cand = SearchCandidate(tuple(h), S, tuple(sorted(vals)), codims[S])
        relaxed.append(cand)
        if len(S) == 3:
            literal.append(cand)
    degenerate = _degenerate_families(ctx, seed)
    return SearchReport(size, len(hs), tuple(literal), tuple(relaxed), tuple(degenerate), tuple(sorted(sizes.items())))
