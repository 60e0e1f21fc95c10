from __future__ import annotations

from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from parabolic_slices.rootsys import (
    RootSystemError,
    apply_perm,
    build_root_system,
    component_cartan,
    coroot_apply,
    diagram_automorphism,
    diagram_involution_j,
    format_root,
    fundamental_weights,
    highest_root,
    irreducible_components,
    neg,
    pairing,
    parse_root,
    reference_cartan,
    whole_component,
)

from conftest import ALL_TYPES, rs_of

CLASSICAL_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
}
FIXED_COUNT = {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}


def reflection_closure(cartan):
    """Independent oracle: orbit of the simple roots under the simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                # s_i(r) = r - <r, alpha_i^vee> alpha_i
                c = sum(r[j] * cartan[i][j] for j in range(n))
                img = tuple(r[k] - (c if k == i else 0) for k in range(n))
                if img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return found


def longest_element_j(rs):
    """-w_0 on simple roots, from a reduced walk of rho to its antidominant image."""
    n = rs.rank
    cart = rs.cartan
    # track the images of simple roots under the accumulated w
    images = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    rho = [1] * n  # rho in fundamental-weight coordinates
    while True:
        i = next((k for k in range(n) if rho[k] > 0), None)
        if i is None:
            break
        # s_i on weight coordinates: m_j -> m_j - m_i * cartan[i][j]
        mi = rho[i]
        rho = [rho[j] - mi * cart[i][j] for j in range(n)]
        new = []
        for r in images:
            c = sum(r[j] * cart[i][j] for j in range(n))
            new.append(tuple(r[k] - (c if k == i else 0) for k in range(n)))
        images = new
    perm = {}
    for k, r in enumerate(images):
        m = neg(r)
        perm[k + 1] = m.index(1) + 1
        assert sum(m) == 1
    return perm


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_root_counts_and_closure(kind, rank):
    rs = rs_of(kind, rank)
    count = FIXED_COUNT[kind] if kind in FIXED_COUNT else CLASSICAL_COUNT[kind](rank)
    assert len(rs.roots) == count
    assert set(rs.roots) == set(rs.positive_roots) | {neg(r) for r in rs.positive_roots}
    assert all(all(c >= 0 for c in r) for r in rs.positive_roots)
    assert set(rs.roots) == reflection_closure(rs.cartan)


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_cartan_and_form(kind, rank):
    rs = rs_of(kind, rank)
    form = sympy.Matrix(rs.form)
    assert form == form.T
    assert all(form[:k, :k].det() > 0 for k in range(1, rank + 1))
    for i in range(rank):
        for j in range(rank):
            assert rs.cartan[i][j] == coroot_apply(rs, rs.simple(i + 1), rs.simple(j + 1))
    assert max(rs.norm2(r) for r in rs.roots) == 2


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_fundamental_weights_against_sympy(kind, rank):
    rs = rs_of(kind, rank)
    inv = sympy.Matrix(rs.cartan).inv()
    for i, w in enumerate(fundamental_weights(rs)):
        assert [sympy.Rational(c.numerator, c.denominator) for c in w] == list(inv[:, i].T)
        for j in range(rank):
            assert coroot_apply(rs, rs.simple(j + 1), w) == (1 if i == j else 0)


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_involution_j_matches_longest_element(kind, rank):
    rs = rs_of(kind, rank)
    j = diagram_involution_j(whole_component(rs))
    assert j == longest_element_j(rs)
    assert all(j[j[a]] == a for a in j)
    diagram_automorphism(rs, j)


def test_pairing_examples():
    b3, g2, a2 = rs_of("B", 3), rs_of("G2", 2), rs_of("A", 2)
    assert pairing(b3, (0, 0, 1), (0, 0, 1)) == 1
    assert pairing(g2, (3, 2), (1, 0)) == 0
    assert pairing(a2, (1, 0), (0, 1)) == -1
    with pytest.raises(RootSystemError):
        pairing(a2, (1, 0, 0), (0, 1))


def test_coroot_examples():
    f4, b4 = rs_of("F4", 4), rs_of("B", 4)
    assert coroot_apply(f4, (1, 0, 0, 0), (2, 3, 4, 2)) == 1
    assert coroot_apply(b4, (0, 1, 0, 0), (1, 2, 2, 2)) == 1
    with pytest.raises(RootSystemError):
        coroot_apply(b4, (0, 0, 0, 0), (1, 0, 0, 0))


def test_fundamental_weight_examples():
    assert fundamental_weights(rs_of("A", 2))[0] == (Q(2, 3), Q(1, 3))
    assert fundamental_weights(rs_of("G2", 2))[1] == (3, 2)


def test_component_examples():
    comps = irreducible_components(rs_of("E6", 6), [1, 2, 3, 5, 6])
    assert [(c.name, c.simple_roots) for c in comps] == [("A2", (1, 3)), ("A1", (2,)), ("A2", (5, 6))]
    comps = irreducible_components(rs_of("E7", 7), [1, 2, 3, 4, 6, 7])
    assert [c.name for c in comps] == ["A4", "A2"]
    comps = irreducible_components(rs_of("B", 6), [1, 2, 4, 5, 6])
    assert [c.name for c in comps] == ["A2", "B3"]


@pytest.mark.parametrize("kind,rank", [t for t in ALL_TYPES if t[1] <= 8])
def test_components_relabel_to_reference(kind, rank):
    rs = rs_of(kind, rank)
    for s in range(1, rank + 1):
        for comp in irreducible_components(rs, [a for a in range(1, rank + 1) if a != s]):
            assert component_cartan(rs, comp) == reference_cartan(comp.kind, comp.rank)
            j = diagram_involution_j(comp)
            assert all(j[j[a]] == a for a in j)


def test_highest_roots():
    assert highest_root(rs_of("A", 5), whole_component(rs_of("A", 5))) == (1, 1, 1, 1, 1)
    assert rs_of("G2", 2).highest_root == (3, 2)
    assert rs_of("C", 3).highest_root == (2, 2, 1)


def test_involution_examples():
    assert diagram_involution_j(whole_component(rs_of("B", 5))) == {a: a for a in range(1, 6)}
    assert diagram_involution_j(whole_component(rs_of("E6", 6))) == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert diagram_involution_j(whole_component(rs_of("A", 3))) == {1: 3, 2: 2, 3: 1}


def test_invalid_types():
    for kind, rank in [("Q", 3), ("E6", 7), ("D", 3), ("C", 2), ("B", 1)]:
        with pytest.raises(RootSystemError):
            build_root_system(kind, rank)
    with pytest.raises(RootSystemError):
        diagram_automorphism(rs_of("B", 3), {1: 3, 2: 2, 3: 1})


@given(st.sampled_from(ALL_TYPES), st.data())
@settings(max_examples=60, deadline=None)
def test_parse_format_round_trip(t, data):
    rs = rs_of(*t)
    r = data.draw(st.sampled_from(rs.roots))
    assert parse_root(format_root(r), rs.rank) == r
    assert parse_root(",".join(map(str, r)), rs.rank) == r


@given(st.sampled_from(ALL_TYPES), st.data())
@settings(max_examples=60, deadline=None)
def test_reflections_preserve_roots_and_form(t, data):
    rs = rs_of(*t)
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from(rs.roots))
    c = coroot_apply(rs, a, b)
    assert c.denominator == 1
    img = tuple(x - int(c) * y for x, y in zip(b, a))
    assert img in rs.root_set
    assert pairing(rs, a, b) == pairing(rs, b, a)


def test_automorphism_moves_roots():
    rs = rs_of("E6", 6)
    perm = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert {apply_perm(perm, r) for r in rs.roots} == set(rs.roots)
