"""Combinatorial Borsuk-Ulam checks on triangulations with free involutions."""

from .common import AntipodalError, Check
from .complex import (
    Complex,
    ManifoldCheckReport,
    barycentric_subdivision,
    boundary_complex,
    build_complex,
    euler_characteristic,
    manifold_check,
)
from .symmetry import (
    DoublingResult,
    Involution,
    build_involution,
    crosspolytope_embedding,
    crosspolytope_sphere,
    double,
    is_free,
    lift_involution,
)
from .degree import (
    DegreeReport,
    SimplicialMap,
    build_simplicial_map,
    degree_mod2,
    is_antipodal_map,
    verify_odd_mapping,
)
from .labels import (
    Labelling,
    complementary_edges,
    count_alternating,
    count_signature,
    count_signature_pair,
    double_labelling,
    induced_map,
    is_antipodal_labelling,
    make_labelling,
    shashkin_report,
    subdivide_labelling,
    verify_tucker,
)
from .covers import (
    ClosedSet,
    PairedCover,
    antipodal_pair_free,
    cover_from_labelling,
    fan_transform,
    find_rainbow_simplex,
    ls_corollary_check,
    min_index_labelling,
    verify_cover,
    verify_fan_cover_theorem,
)

__version__ = "0.1.0"
