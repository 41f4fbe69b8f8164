import random
from itertools import product

import pytest

from gembed import oracles
from gembed.cones import contains, cone_from_inequalities
from gembed.errors import ConfigurationError, DegenerateInputError, ResourceLimitError
from gembed.rootdata import (
    RootDatum,
    all_parabolic_types,
    build_root_datum,
    check_weyl_invariants,
    delta_P_cone,
    dominant_representative,
    equivalent_in_torus,
    gl,
    levi_stabilizer,
    parabolic_type,
    standard_parabolic,
    torus,
    translate_parabolic,
    weyl_group,
)


def test_gl2_tables():
    rd = gl(2)
    assert rd.rank == 2
    assert rd.positive_roots == ((1, -1),)
    assert rd.positive_coroots == ((1, -1),)
    assert rd.central_rank == 1


@pytest.mark.parametrize("family, rank, n_pos, order", [
    ("A", 2, 3, 6),
    ("B", 2, 4, 8),
    ("C", 2, 4, 8),
    ("G2", 2, 6, 12),
    ("A", 3, 6, 24),
    ("B", 3, 9, 48),
    ("D", 4, 12, 192),
])
def test_classical_tables(family, rank, n_pos, order):
    rd = build_root_datum(family, rank)
    assert len(rd.positive_roots) == n_pos
    assert len(weyl_group(rd)) == order
    check_weyl_invariants(rd)


def test_central_factor():
    rd = build_root_datum("A", 2, 1)
    assert rd.rank == 3 and rd.central_rank == 1
    assert all(a[2] == 0 for a in rd.roots)
    assert len(weyl_group(rd)) == 6


@pytest.mark.parametrize("args", [("G2", 3, 0), ("A", 0, 0), ("B", 1, 0), ("E", 6, 0), ("A", 2, -1)])
def test_invalid_families(args):
    with pytest.raises(ConfigurationError):
        build_root_datum(*args)


def test_rejects_non_cartan():
    with pytest.raises(ConfigurationError):
        RootDatum(3, ((2, -1, -1), (-1, 2, -1), (-1, -1, 2)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(ConfigurationError):
        RootDatum(2, ((2, 0), (-1, 2)), ((1, 0), (0, 1)))
    with pytest.raises(ConfigurationError):
        RootDatum(2, ((2, -4), (-1, 2)), ((1, 0), (0, 1)))


def test_weyl_group_basics():
    w = weyl_group(gl(2))
    assert {x.word for x in w} == {(), (0,)}
    assert {x.matrix for x in w} == {((1, 0), (0, 1)), ((0, 1), (1, 0))}
    assert w == tuple(sorted(w))
    for x in weyl_group(build_root_datum("B", 2)):
        assert len(x.word) <= 4


def test_weyl_cap():
    with pytest.raises(ResourceLimitError):
        weyl_group(build_root_datum("A", 3), cap=10)


def test_weyl_group_closed_under_composition():
    group = weyl_group(build_root_datum("B", 2))
    mats = {w.matrix for w in group}
    assert all((a * b).matrix in mats for a in group for b in group)
    assert any(w.is_identity for w in group)


def test_words_are_reduced():
    rd = build_root_datum("A", 3)
    for w in weyl_group(rd):
        # length equals the number of positive roots sent negative
        flipped = sum(1 for a in rd.positive_roots if w.act_on_character(a) not in rd.positive_roots)
        assert len(w.word) == flipped
        assert rd.element(w.word) == w


def test_parabolic_type_examples():
    g3 = gl(3)
    p = parabolic_type(g3, (1, 1, 0))
    assert set(p.root_subset) == {(1, -1, 0), (-1, 1, 0), (1, 0, -1), (0, 1, -1)}
    assert parabolic_type(g3, (0, 0, 0)).root_subset == g3.roots
    b = parabolic_type(gl(2), (2, 1))
    assert b.root_subset == ((1, -1),) and b.standard_flag


def test_delta_P_examples():
    g2 = gl(2)
    borel = parabolic_type(g2, (2, 1))
    assert delta_P_cone(g2, borel) == cone_from_inequalities(2, [(1, -1)])
    whole = parabolic_type(g2, (0, 0))
    line = delta_P_cone(g2, whole)
    assert line.lineality == ((1, 1),) and line.rays == ()
    g3 = gl(3)
    p21 = standard_parabolic(g3, [0])
    assert delta_P_cone(g3, p21) == cone_from_inequalities(3, [(1, -1, 0), (-1, 1, 0), (1, 0, -1), (0, 1, -1)])


def test_delta_P_membership_matches_containment():
    rd = build_root_datum("B", 2)
    types = all_parabolic_types(rd)
    for gamma in product(range(-2, 3), repeat=2):
        pg = set(parabolic_type(rd, gamma).root_subset)
        for p in types:
            assert contains(delta_P_cone(rd, p), gamma) == (pg >= set(p.root_subset))


def test_parabolic_types_cover_and_are_equivariant():
    rng = random.Random(5)
    rd = gl(3)
    group = weyl_group(rd)
    for _ in range(50):
        gamma = tuple(rng.randint(-4, 4) for _ in range(3))
        p = parabolic_type(rd, gamma)
        assert contains(delta_P_cone(rd, p), gamma)
        assert p in all_parabolic_types(rd)
        for w in group:
            assert parabolic_type(rd, w(gamma)) == translate_parabolic(rd, w, p)


def test_parabolic_closed_and_contains_borel():
    rd = build_root_datum("G2", 2)
    roots = set(rd.roots)
    for p in all_parabolic_types(rd):
        s = set(p.root_subset)
        assert all(a in s or tuple(-x for x in a) in s for a in roots)
        for a in s:
            for b in s:
                c = tuple(x + y for x, y in zip(a, b))
                if c in roots:
                    assert c in s


def test_dominant_examples():
    g3 = gl(3)
    dom, w = dominant_representative(g3, (0, 2, 1))
    assert dom == (2, 1, 0) and w((0, 2, 1)) == (2, 1, 0)
    assert dominant_representative(g3, (0, 0, 0))[1].is_identity
    dom, w = dominant_representative(gl(2), (1, 1))
    assert dom == (1, 1) and w.is_identity


@pytest.mark.parametrize("family, rank", [("A", 2), ("B", 2), ("G2", 2), ("A", 3)])
def test_unique_dominant_per_orbit(family, rank):
    rd = build_root_datum(family, rank)
    mats = [rd.reflection(i).matrix for i in range(rank)]
    for gamma in product(range(-2, 3), repeat=rank):
        orb = oracles.orbit(mats, gamma)
        dom = [v for v in orb if rd.is_dominant(v)]
        assert len(dom) == 1
        d, w = dominant_representative(rd, dom[0])
        assert d == dom[0] and w.is_identity
        for v in orb:
            d, w = dominant_representative(rd, v)
            assert d == dom[0] and w(v) == d


def test_levi_stabilizer_examples():
    assert len(levi_stabilizer(gl(3), (1, 1, 0))) == 2
    assert len(levi_stabilizer(gl(3), (0, 0, 0))) == 6
    assert [w.is_identity for w in levi_stabilizer(gl(2), (2, 1))] == [True]


def test_equivalent_in_torus():
    rd = torus(2)
    assert equivalent_in_torus(rd, (2, 4), (1, 2))
    assert not equivalent_in_torus(rd, (1, 2), (2, 1))
    assert not equivalent_in_torus(rd, (1, 0), (-1, 0))
    with pytest.raises(DegenerateInputError):
        equivalent_in_torus(rd, (0, 0), (1, 0))


def test_torus_has_trivial_weyl_group():
    assert len(weyl_group(torus(3))) == 1
    assert all_parabolic_types(torus(2)) == (parabolic_type(torus(2), (0, 0)),)
