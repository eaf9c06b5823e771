"""Exact engine for piecewise-linear downsets, upsets and intervals in R^n
under the componentwise order: socles and cogenerators along faces,
associated faces, density of cogenerator families, canonical primary and
irreducible decompositions, Matlis-dual tops, a discrete monomial-ideal
backend, and brute-force oracles for all of it.
"""

from .decompose import (
    FringePresentation,
    IrreducibleFamily,
    MinimalityReport,
    PrimaryDecomposition,
    coprincipal,
    fringe_presentation,
    irreducible_family,
    is_coprimary,
    primary_component,
    primary_decomposition,
    reconstruct,
    verify_minimality,
)
from .discrete import (
    DiscreteDownset,
    DiscreteIdeal,
    closed_cogenerators,
    discrete_irreducible_decomposition,
    discrete_primary_decomposition,
    is_irredundant,
    socle_isomorphism_check,
)
from .errors import (
    CellLimitExceeded,
    DimensionMismatch,
    FaceError,
    InputFormatError,
    InternalCheckFailure,
    OracleMismatch,
    StaircaseError,
    ValidationError,
)
from .geometry import (
    Downset,
    Face,
    Interval,
    Shape,
    Upset,
    all_faces,
    as_interval,
    cone_of_shape,
    face,
    face_interior,
    frontier,
    full_face,
    interval,
    is_downset,
    is_upset,
    localize,
    lower_boundary,
    lower_boundary_direct,
    open_star,
    project_mod,
    quotient_restrict,
    shape_at,
    upper_boundary,
    zero_face,
)
from .oracle import (
    GridSpec,
    correspondence_check,
    default_grid,
    random_downset,
    random_interval,
    random_upset,
    real_staircase,
    sample_check_membership,
    verify_instance,
)
from .qe import (
    Cell,
    HalfSpace,
    PLSet,
    canonicalize,
    cell,
    closure,
    complement,
    difference,
    directional_limit_member,
    eliminate,
    empty,
    equals,
    exists,
    halfspace,
    intersect,
    is_empty,
    is_subset,
    minkowski,
    plset,
    point_set,
    reflect,
    set_cell_limit,
    symmetric_difference,
    union,
    universe,
    witness,
)
from .socle import (
    SocleEntry,
    SocleTable,
    associated_faces,
    attached_faces,
    density_report,
    is_dense_family,
    max_along,
    min_along,
    sigma_closure,
    socle,
    socle_stratum,
    socle_table,
    top,
    top_direct,
    top_table,
)

__version__ = "0.1.0"
