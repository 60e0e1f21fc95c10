from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from parabolic_slices.parabolic import (
    build_parabolic,
    epsilon_criterion,
    levi_fundamental_weights,
    polynomiality_verdict,
    semigroup_membership,
)
from parabolic_slices.rootsys import RootSystemError, fundamental_weights

from conftest import ALL_TYPES, rs_of

CASES = [(k, n, s) for k, n in ALL_TYPES for s in range(1, n + 1)]

# (kind, rank) -> s values where every orbit has epsilon = 1, computed once and
# frozen; every other s has an orbit with epsilon = 1/2
CRITERION_TRUE = {
    ("B", 2): {1, 2}, ("B", 3): {1, 3}, ("B", 4): {1, 3, 4}, ("B", 5): {1, 3, 5},
    ("B", 6): {1, 3, 5}, ("B", 7): {1, 3, 5, 7}, ("B", 8): {1, 3, 5, 7},
    ("D", 4): {1, 3, 4}, ("D", 5): {1, 3, 4, 5}, ("D", 6): {1, 3},
    ("D", 7): {1, 3, 5, 6, 7}, ("D", 8): {1, 3, 5},
    ("E6", 6): {3, 4, 5}, ("E7", 7): {2, 5}, ("E8", 8): {3},
    ("F4", 4): {2, 3, 4}, ("G2", 2): {1},
}


def closed_form_index(kind, n, s):
    if kind == "B" and s % 2 == 1:
        return n - (s - 1) // 2
    if kind == "C":
        return n - s + 1 + s // 2
    if kind == "D" and s % 2 == 1 and s <= n - 2:
        return n - (s + 1) // 2
    if kind == "D" and s == n and n % 2 == 1:
        return (n - 1) // 2
    return {("E6", 3): 2, ("E7", 2): 4, ("E8", 3): 5, ("F4", 2): 3, ("F4", 3): 3, ("F4", 4): 4,
            ("G2", 1): 2, ("G2", 2): 2}.get((kind, s))


@pytest.mark.parametrize("kind,n,s", CASES)
def test_orbit_structure(kind, n, s):
    ctx = build_parabolic(rs_of(kind, n), s)
    i, j = ctx.i_perm, ctx.j_perm
    assert all(i[i[a]] == a for a in i) and all(j[j[a]] == a for a in j)
    seen = [a for o in ctx.orbits for a in o]
    assert sorted(seen) == list(range(1, n + 1))
    assert ctx.index == len(ctx.E1) + len(ctx.E2)
    # orbits are stable under i and j
    for o in ctx.orbits:
        assert {j[a] for a in o} <= o | {j[a] for a in o}
        assert {i[j[a]] for a in o} == set(o)
    expected = closed_form_index(kind, n, s)
    if expected is not None:
        assert ctx.index == expected


@pytest.mark.parametrize("kind,n,s", CASES)
def test_parabolic_dimensions(kind, n, s):
    ctx = build_parabolic(rs_of(kind, n), s)
    rs = ctx.rs
    assert len(ctx.p_plus_roots) == len(rs.positive_roots) + len(ctx.levi_positive)
    assert len(ctx.m_minus_roots) == len(rs.positive_roots) - len(ctx.levi_positive)
    assert ctx.dim == len(ctx.p_plus_roots) + n - 1
    assert set(ctx.p_minus_roots) == {tuple(-c for c in r) for r in ctx.p_plus_roots}


def test_orbit_examples():
    b5 = build_parabolic(rs_of("B", 5), 3)
    assert sorted(map(sorted, b5.orbits)) == [[1, 2], [3], [4], [5]]
    assert b5.index == 4
    e6 = build_parabolic(rs_of("E6", 6), 3)
    assert sorted(map(sorted, e6.orbits)) == [[1, 2, 6], [3, 4, 5]]
    assert build_parabolic(rs_of("C", 5), 3).index == 4
    assert b5.name == "B5 s=3"


def test_bad_s():
    for s in (0, 6):
        with pytest.raises(RootSystemError):
            build_parabolic(rs_of("B", 5), s)


def test_semigroup_examples():
    a3 = rs_of("A", 3)
    w = fundamental_weights(a3)
    lam = tuple(x + y for x, y in zip(w[0], w[2]))
    assert semigroup_membership([(1, 1, 1), (0, 1, 0)], lam) == (1, 0)
    b4 = rs_of("B", 4)
    from parabolic_slices.cascade import kostant_cascade

    assert semigroup_membership(kostant_cascade(b4).betas, fundamental_weights(b4)[0]) is None
    assert semigroup_membership([(1, 1, 1), (0, 1, 0)], (0, 0, 0)) == (0, 0)
    assert semigroup_membership([], (0, 0)) == ()
    assert semigroup_membership([], (1, 0)) is None
    assert semigroup_membership([(1, 1, 1)], (Q(1, 2),) * 3) is None
    assert semigroup_membership([(1, 1, 1)], (-1, -1, -1)) is None
    with pytest.raises(RootSystemError):
        semigroup_membership([(1, 0), (2, 0)], (1, 0))


@given(st.lists(st.integers(0, 5), min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_semigroup_recovers_combinations(coeffs):
    from parabolic_slices.cascade import kostant_cascade

    betas = kostant_cascade(rs_of("F4", 4)).betas
    lam = tuple(sum(c * b[k] for c, b in zip(coeffs, betas)) for k in range(4))
    assert semigroup_membership(betas, lam) == tuple(coeffs)


@pytest.mark.parametrize("kind,n,s", CASES)
def test_levi_weights_are_dual(kind, n, s):
    ctx = build_parabolic(rs_of(kind, n), s)
    w = levi_fundamental_weights(ctx)
    for a, wa in w.items():
        for b in ctx.levi:
            assert ctx.rs.coroot_apply(ctx.rs.simple(b), wa) == (1 if a == b else 0)


@pytest.mark.parametrize("kind,n,s", CASES)
def test_epsilon_table(kind, n, s):
    ctx = build_parabolic(rs_of(kind, n), s)
    report = epsilon_criterion(ctx)
    assert {o.epsilon for o in report.orbits} <= {Q(1), Q(1, 2)}
    if kind in ("A", "C"):
        assert report.holds
    elif (kind, n) in CRITERION_TRUE:
        assert report.holds == (s in CRITERION_TRUE[(kind, n)])


def test_epsilon_witnesses():
    d6 = epsilon_criterion(build_parabolic(rs_of("D", 6), 5))
    bad = [o for o in d6.orbits if o.epsilon != 1]
    assert [o.orbit for o in bad] == [(2, 4)]
    g2 = epsilon_criterion(build_parabolic(rs_of("G2", 2), 2))
    assert [o.orbit for o in g2.orbits if o.epsilon != 1] == [(2,)]
    assert epsilon_criterion(build_parabolic(rs_of("B", 6), 3)).holds
    b6 = epsilon_criterion(build_parabolic(rs_of("B", 6), 4))
    assert not b6.holds
    assert all(o.j_stable and o.in_B_pi and o.in_B_levi for o in b6.orbits if o.epsilon != 1)


def test_verdicts():
    def v(kind, n, s):
        return polynomiality_verdict(build_parabolic(rs_of(kind, n), s))

    assert v("C", 5, 2) == "criterion-true"
    assert v("E8", 8, 8) == "known-not-polynomial"
    assert v("G2", 2, 2) == "known-polynomial-by-citation"
    assert v("F4", 4, 1) == "known-polynomial-by-citation"
    assert v("B", 4, 2) == "known-polynomial-by-citation"
    assert v("B", 6, 4) == "unknown"
    assert v("D", 6, 5) == "unknown"


def test_b4_s4_has_no_half_orbit():
    # omega_4 and omega_1 + omega_3 have half-integral beta_1 coefficients;
    # omega_2 = beta_1 but the A3 Levi weight (1/2, 1, 1/2) is not in N beta'
    rows = {o.orbit: o for o in epsilon_criterion(build_parabolic(rs_of("B", 4), 4)).orbits}
    assert not rows[(4,)].in_B_pi and not rows[(1, 3)].in_B_pi
    assert rows[(2,)].in_B_pi and not rows[(2,)].in_B_levi
