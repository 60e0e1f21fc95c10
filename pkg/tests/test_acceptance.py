"""Acceptance criteria, one test each, every test printing a PASS/FAIL line."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction as Q

import pytest

from parabolic_slices.cascade import check_properties, kostant_cascade, table1_reference
from parabolic_slices.chevalley import build_lie_table, check_jacobi
from parabolic_slices.pairs import candidate_for, covered_cases
from parabolic_slices.parabolic import build_parabolic
from parabolic_slices.rootsys import build_root_system, neg
from parabolic_slices.search import f4_s3_search
from parabolic_slices.verify import basis_certificate, generic_index, regularity_certificate

from conftest import ALL_TYPES

pytestmark = pytest.mark.acceptance


def report(capsys, label: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, detail


def ctx_of(kind, n, s):
    return build_parabolic(build_root_system(kind, n), s)


def test_criterion_1_cascade_oracle(capsys):
    t0 = time.perf_counter()
    bad = [f"{k}{n}" for k, n in ALL_TYPES
           if set(kostant_cascade(build_root_system(k, n)).betas) != set(table1_reference(k, n))]
    dt = time.perf_counter() - t0
    report(capsys, "1 cascade oracle", not bad and dt < 5,
           f"{len(ALL_TYPES)} types, mismatches {bad}, {dt:.2f}s (limit 5s)")


def test_criterion_2_cascade_properties(capsys):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for k, n in ALL_TYPES:
        rs = build_root_system(k, n)
        subsets = [None] + [[a for a in range(1, n + 1) if a != s] for s in range(1, n + 1)]
        for sub in subsets:
            checked += 1
            bad += check_properties(kostant_cascade(rs, sub))
    dt = time.perf_counter() - t0
    report(capsys, "2 cascade properties", not bad and dt < 30,
           f"{checked} cascades, {len(bad)} violations, {dt:.2f}s (limit 30s)")


CLOSED_FORMS = (
    [(("B", n, s), n - (s - 1) // 2) for n in range(2, 9) for s in range(1, n + 1, 2)]
    + [(("C", n, s), n - s + 1 + s // 2) for n in range(3, 9) for s in range(1, n + 1)]
    + [(("D", n, s), n - (s + 1) // 2) for n in range(4, 9) for s in range(1, n - 1, 2)]
    + [(("D", n, n), (n - 1) // 2) for n in (5, 7)]
    + [(("E6", 6, 3), 2), (("E7", 7, 2), 4), (("E8", 8, 3), 5), (("F4", 4, 2), 3), (("F4", 4, 3), 3),
       (("F4", 4, 4), 4), (("G2", 2, 1), 2), (("G2", 2, 2), 2)]
)


def test_criterion_3_orbit_index(capsys):
    bad = [(c, ctx_of(*c).index, e) for c, e in CLOSED_FORMS if ctx_of(*c).index != e]
    report(capsys, "3 orbit index", not bad, f"{len(CLOSED_FORMS)} closed forms, mismatches {bad}")


def test_criterion_4_determinants(capsys):
    e6 = basis_certificate(ctx_of("E6", 6, 4), list(candidate_for("E6", 6, 4).S))
    f4 = basis_certificate(ctx_of("F4", 4, 2), list(candidate_for("F4", 4, 2).S))
    report(capsys, "4 determinant witnesses", abs(e6) == 3 and abs(f4) == 1, f"E6 s=4: {e6}, F4 s=2: {f4}")


def test_criterion_5_sweep(capsys):
    t0 = time.perf_counter()
    cases = covered_cases(8)
    failed = []
    for c in cases:
        ctx = ctx_of(*c)
        cert = regularity_certificate(build_lie_table(ctx.rs), ctx, candidate_for(*c))
        if not cert.verdict:
            failed.append(cert.name)
    dt = time.perf_counter() - t0
    report(capsys, "5 verification sweep", not failed and dt < 120,
           f"{len(cases) - len(failed)}/{len(cases)} verified, failed {failed}, {dt:.1f}s (limit 120s)")


def test_criterion_6_f4_s3_search(capsys):
    t0 = time.perf_counter()
    first = f4_s3_search(jobs=1, seed=0)
    dt = time.perf_counter() - t0
    again = f4_s3_search(jobs=1, seed=0)
    parallel = f4_s3_search(jobs=2, seed=0)
    deterministic = first == again == parallel
    ok = not first.exists_adapted_pair_literal and not first.exists_adapted_pair_relaxed and deterministic
    report(capsys, "6 F4 s=3 search", ok and dt < 600,
           f"{first.enumeration_size} systems, {len(first.literal)} literal / {len(first.relaxed)} relaxed "
           f"survivors, exists={first.exists_adapted_pair}, deterministic={deterministic}, "
           f"{dt:.1f}s single-threaded (limit 600s)")


def test_criterion_7_chevalley(capsys):
    failures = 0
    triples = 0
    for k, n in ALL_TYPES:
        L = build_lie_table(build_root_system(k, n))
        d = len(list(L.basis()))
        if n <= 4:
            sample = list(itertools.combinations(range(d), 3))
        else:
            rng = random.Random(f"{k}{n}")
            sample = [tuple(rng.sample(range(d), 3)) for _ in range(10_000)]
        triples += len(sample)
        failures += len(check_jacobi(L, sample))
        for r in L.rs.positive_roots:
            z = L.bracket(L.x(r), L.x(neg(r)))
            if z.roots or z.cartan != L.coroot(r):
                failures += 1
    report(capsys, "7 Chevalley soundness", failures == 0, f"{triples} Jacobi triples, {failures} failures")


def test_criterion_8_robustness(capsys):
    diffs = []
    rng = random.Random(8)
    for c in [("C", 5, 3), ("F4", 4, 2), ("E6", 6, 4)]:
        ctx = ctx_of(*c)
        cand = candidate_for(*c)
        base = regularity_certificate(build_lie_table(ctx.rs, 1), ctx, cand)
        alt = regularity_certificate(build_lie_table(ctx.rs, -1), ctx, cand)
        scaled = cand.with_coefficients({r: Q(rng.choice([-5, -3, -1, 2, 7]), rng.choice([1, 2, 3])) for r in cand.S})
        resc = regularity_certificate(build_lie_table(ctx.rs, 1), ctx, scaled)
        for label, other in (("sign -1", alt), ("rescaled", resc)):
            key = lambda x: (x.verdict, x.codim, x.phi_rank, x.phi_dim, x.basis_det, x.complement_ok, x.eigenvalues)
            if key(other) != key(base):
                diffs.append((c, label))
    report(capsys, "8 robustness", not diffs, f"3 cases x (sign -1, rescaling), differences {diffs}")


def test_criterion_9_generic_index(capsys):
    bad = []
    cases = covered_cases(8)
    for c in cases:
        ctx = ctx_of(*c)
        g = generic_index(build_lie_table(ctx.rs), ctx, seed=0, trials=5)
        if g != ctx.index:
            bad.append((ctx.name, g, ctx.index))
    report(capsys, "9 generic index", not bad, f"{len(cases)} covered cases, mismatches {bad}")
