"""Combinatorial classification data of affine embeddings of reductive groups."""

from .cones import (
    Cone,
    HilbertBasis,
    apply,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dual_cone,
    hilbert_basis,
    intersect,
    is_strongly_convex,
    rays,
)
from .embeddings import (
    GEmbedding,
    MorphismWitness,
    SliceComplex,
    biequivariant_resolution,
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
from .errors import GembedError
from .lattice import pair, primitive
from .rootdata import (
    ParabolicType,
    RootDatum,
    WeylElement,
    build_root_datum,
    delta_P_cone,
    dominant_representative,
    equivalent_in_torus,
    gl,
    levi_stabilizer,
    parabolic_type,
    torus,
    weyl_group,
)
from .states import (
    RepSupport,
    TorusState,
    check_state,
    conjugate_state,
    dual_set,
    dual_set_strict,
    mu,
    rep_state,
    saturate_state,
)

__version__ = "0.1.0"
