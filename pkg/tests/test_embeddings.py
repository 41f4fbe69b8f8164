import pytest

from gembed.cones import apply, cone_from_generators, contains_cone, zero_cone
from gembed.embeddings import (
    STRONG_CONVEXITY_MESSAGE,
    biequivariant_resolution,
    compose_witnesses,
    conjugate_embedding,
    is_biequivariant,
    membership_A,
    morphism_exists,
    one_skeleton_classes,
    toric_slice_complex,
    universal_property_check,
    validate,
    weight_monoid,
)
from gembed.errors import ClassificationError, PreconditionError, ValidationError
from gembed.rootdata import gl, torus, weyl_group
from gembed.states import make_state

G2 = gl(2)
SWAP = G2.reflection(0)


def cone(*gens, rank=2):
    return cone_from_generators(rank, gens)


ORTHANT = cone((1, 0), (0, 1))
CHAMBER = cone((1, 0), (1, 1))


def test_validate_examples():
    assert validate(G2, ORTHANT).biequivariant
    assert not validate(G2, CHAMBER).biequivariant
    with pytest.raises(ClassificationError) as err:
        validate(G2, cone((1, 0), (-1, 0)))
    assert str(err.value) == STRONG_CONVEXITY_MESSAGE


def test_validate_with_state():
    e = validate(G2, ORTHANT, make_state([(1, 0), (0, 1)]))
    assert e.state is not None
    with pytest.raises(ValidationError):
        validate(G2, ORTHANT, make_state([(1, -1)]))


def test_weight_monoid_examples():
    assert weight_monoid(validate(G2, ORTHANT)).elements == ((0, 1), (1, 0))
    toric = weight_monoid(validate(torus(2), cone((0, 1), (2, -1))))
    assert toric.elements == ((1, 0), (1, 1), (1, 2)) and not toric.has_units
    trivial = weight_monoid(validate(G2, zero_cone(2)))
    assert trivial.has_units and len(trivial.units) == 2


def test_membership_A_examples():
    assert not membership_A(validate(G2, ORTHANT), (1, -1))
    assert membership_A(validate(G2, cone((1, 0))), (1, -1))
    assert membership_A(validate(G2, ORTHANT), (0, 0))


def test_conjugate_embedding_examples():
    assert conjugate_embedding(validate(G2, CHAMBER), SWAP).sigma == cone((0, 1), (1, 1))
    e = validate(G2, CHAMBER)
    assert conjugate_embedding(e, G2.identity()) == e
    for w in weyl_group(gl(3)):
        o3 = validate(gl(3), cone((1, 0, 0), (0, 1, 0), (0, 0, 1), rank=3))
        assert conjugate_embedding(o3, w).sigma == o3.sigma


def test_is_biequivariant_examples():
    assert is_biequivariant(validate(gl(3), cone((1, 0, 0), (0, 1, 0), (0, 0, 1), rank=3)))
    assert not is_biequivariant(validate(G2, CHAMBER))
    assert is_biequivariant(validate(G2, zero_cone(2)))


def test_resolution_examples():
    res, witness = biequivariant_resolution(validate(G2, CHAMBER))
    assert res.sigma == cone((1, 1)) and witness.verify()
    assert biequivariant_resolution(validate(G2, ORTHANT))[0].sigma == ORTHANT
    assert biequivariant_resolution(validate(G2, cone((1, 0))))[0].sigma.is_zero


def test_resolution_idempotent():
    res, _ = biequivariant_resolution(validate(G2, CHAMBER))
    again, _ = biequivariant_resolution(res)
    assert again.sigma == res.sigma


def test_morphism_examples():
    w = morphism_exists(validate(G2, cone((1, 1))), validate(G2, ORTHANT))
    assert w is not None and w.w.is_identity
    w = morphism_exists(validate(G2, cone((0, 1), (1, 1))), validate(G2, CHAMBER))
    assert w is not None and w.w == SWAP and w.verify()
    assert morphism_exists(validate(G2, cone((-1, 0))), validate(G2, ORTHANT)) is None


def test_morphism_transitivity():
    a = validate(G2, cone((1, 1)))
    b = validate(G2, cone((0, 1), (1, 1)))
    c = validate(G2, CHAMBER)
    first = morphism_exists(a, b)
    second = morphism_exists(b, c)
    composed = compose_witnesses(first, second)
    assert composed.verify()
    assert composed.source == a.sigma and composed.target == c.sigma
    assert contains_cone(apply(composed.w, c.sigma), a.sigma)


def test_universal_examples():
    r = universal_property_check(validate(G2, cone((1, 1))), validate(G2, CHAMBER))
    assert r.resolution == cone((1, 1)) and r.y_in_resolution and r.resolution_in_x
    r = universal_property_check(validate(G2, zero_cone(2)), validate(G2, CHAMBER))
    assert not r.counterexample
    r = universal_property_check(validate(G2, ORTHANT), validate(G2, ORTHANT))
    assert r.resolution == ORTHANT and not r.counterexample


def test_universal_preconditions():
    with pytest.raises(PreconditionError):
        universal_property_check(validate(G2, CHAMBER), validate(G2, ORTHANT))
    with pytest.raises(PreconditionError):
        universal_property_check(validate(G2, ORTHANT), validate(G2, cone((1, 1))))


def test_one_skeleton_examples():
    m2 = one_skeleton_classes(validate(G2, ORTHANT))
    assert (m2.torus_count, m2.weyl_orbit_count, m2.genericity_flag) == (2, 1, True)
    toric = one_skeleton_classes(validate(torus(2), cone((0, 1), (2, -1))))
    assert (toric.torus_count, toric.weyl_orbit_count) == (2, 2) and not toric.genericity_flag
    diag = one_skeleton_classes(validate(G2, cone((1, 1))))
    assert (diag.torus_count, diag.weyl_orbit_count, diag.genericity_flag) == (1, 1, False)


def _cells(sigma):
    cx = toric_slice_complex(validate(G2, sigma))
    return {c.parabolic.root_subset: c for c in cx.cells}


def test_slice_complex_orthant():
    cells = _cells(ORTHANT)
    assert len(cells) == 3
    assert cells[((1, -1),)].cone == CHAMBER
    assert cells[((-1, 1),)].cone == cone((0, 1), (1, 1))
    whole = cells[((-1, 1), (1, -1))]
    assert whole.cone == cone((1, 1)) and whole.degenerate


def test_slice_complex_chamber_and_zero():
    cells = _cells(CHAMBER)
    assert cells[((1, -1),)].cone == CHAMBER
    assert cells[((-1, 1),)].cone == cone((1, 1))
    assert cells[((-1, 1), (1, -1))].cone == cone((1, 1))
    assert all(c.cone.is_zero for c in _cells(zero_cone(2)).values())
