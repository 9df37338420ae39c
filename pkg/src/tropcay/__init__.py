"""Exact tropical geometry: semirings, polynomials, regular and mixed
subdivisions, hyperplane arrangements, tropical convexity, and Ricardian
wage-price systems.  Everything runs on rational arithmetic."""

from .arrangement import (
    Covector,
    coarse_type,
    covector,
    membership,
    project_nearest,
    tconv_bounded_cells,
    tropical_combination,
)
from .cayley import (
    CayleyConfig,
    MixedCell,
    MixedSubdivision,
    cayley_embed,
    cayley_to_mixed,
    minkowski_config,
    mixed_regular,
    mixed_to_cayley,
)
from .core import (
    NEG_INF,
    POS_INF,
    Orientation,
    ProjectivePoint,
    TropMatrix,
    TropNum,
    exact,
    hilbert_dist,
    mat_vec,
    sharp,
    t_add,
    t_mul,
    tropical,
)
from .errors import (
    AdmissibilityError,
    DimensionMismatchError,
    EmptyCellError,
    EmptySupportError,
    InfeasibleSystemError,
    NonTransversalCellError,
    OrientationError,
    SchemaError,
    TropcayError,
    UndefinedProductError,
    UnsupportedCaseError,
)
from .poly import (
    TropPolynomial,
    arrangement_poly,
    identify_variables,
    linear_form,
    make_poly,
    negate_poly,
    poly_mul,
    separate_variables_product,
)
from .polyhedral import (
    PointConfiguration,
    Subdivision,
    cell_of_point,
    dome_facets,
    normal_complex,
    regular_subdivision,
    subdivision_from_poly,
)
from .ricardo import (
    Economy,
    WagePriceSystem,
    classify,
    competitive_pairs,
    covering,
    dual_shapley,
    equilibrate,
    prices_from_wages,
    shapley_T,
    sharing,
    wages_from_prices,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
