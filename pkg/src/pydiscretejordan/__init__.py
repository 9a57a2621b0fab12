"""Python library for discrete curves, surfaces and Jordan separation on graphs."""

from importlib.metadata import version

from .classify import (
    OrientationAtlas,
    build_orientation_atlas,
    is_discrete_curve,
    is_regular_point,
    is_semi_curve,
    is_simple_surface_point,
    neighborhood,
    side_of,
    two_cell_witness,
)
from .complex import CellComplex, SurfaceRegion, default_u2, validate_u2, validate_u3
from .document import ComplexDocument
from .exceptions import (
    ComplexError,
    DiscreteTopologyError,
    DocumentError,
    InputError,
    PreconditionError,
)
from .fixtures import generate
from .graph import Graph
from .homotopy import (
    check_arc_sweepable,
    check_contractible,
    contract_to_point,
    crosscheck_simply_connected,
    crosses_over,
    find_homotopy,
    is_gradual_variation,
    is_side_gradual_variation,
    xor_sum,
)
from .jordan import exhaustive_jordan_suite, oracle_separation, separation_check
from .models import (
    Budget,
    SeparationMode,
    Side,
    Verdict,
    VertexCycle,
    VertexPath,
)

__version__ = version("pydiscretejordan")

__all__ = [
    "Graph",
    "VertexPath",
    "VertexCycle",
    "Budget",
    "Side",
    "Verdict",
    "SeparationMode",
    "CellComplex",
    "SurfaceRegion",
    "ComplexDocument",
    "OrientationAtlas",
    "DiscreteTopologyError",
    "InputError",
    "DocumentError",
    "PreconditionError",
    "ComplexError",
    "validate_u2",
    "default_u2",
    "validate_u3",
    "is_semi_curve",
    "is_discrete_curve",
    "neighborhood",
    "is_regular_point",
    "is_simple_surface_point",
    "two_cell_witness",
    "build_orientation_atlas",
    "side_of",
    "xor_sum",
    "is_gradual_variation",
    "crosses_over",
    "is_side_gradual_variation",
    "contract_to_point",
    "find_homotopy",
    "check_contractible",
    "check_arc_sweepable",
    "crosscheck_simply_connected",
    "separation_check",
    "oracle_separation",
    "exhaustive_jordan_suite",
    "generate",
]
