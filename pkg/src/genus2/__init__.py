"""Genus-2 hyperelliptic Jacobian arithmetic over prime fields.

Reduced divisor classes in Mumford form are added three ways: by solving
a 4x4 base-field linear system for an interpolation cubic (disjoint
supports, doublings, and pairs sharing one place), with a
composition-and-reduction fallback covering everything degenerate.  The
fallback engine doubles as an independent oracle, and the library ships
exhaustive small-prime sweeps comparing the two paths.
"""

from .field import FieldElement, PrimeField, is_probable_prime
from .poly import Poly, gcd as poly_gcd, xgcd as poly_xgcd
from .curve import AffinePoint, Curve, load_curve_file, random_curve, validate_curve
from .mumford import (
    MumfordDivisor,
    SharedPlaceDecomposition,
    from_points,
    from_single,
    identity,
    parse_divisor,
    support_points,
    validate,
)
from .linsolve import System4, determinant, solve
from .cantor import add as cantor_add
from .explicit import (
    AdditionCase,
    AdditionPlan,
    Classification,
    InterpolationCubic,
    add,
    add_classified,
    build_case1_system,
    build_case2_system,
    build_case3_system,
    classify,
    compose_from_cubic,
    detect_shared_place,
    double,
    plan_addition,
    tangent_slope,
)
from .counters import OpCounters
from .group import element_order, enumerate_jacobian, oracle_sweep, scalar_mul

__version__ = "0.1.0"

__all__ = [
    "AdditionCase",
    "AdditionPlan",
    "AffinePoint",
    "Classification",
    "Curve",
    "FieldElement",
    "InterpolationCubic",
    "MumfordDivisor",
    "OpCounters",
    "PrimeField",
    "Poly",
    "SharedPlaceDecomposition",
    "System4",
    "add",
    "add_classified",
    "build_case1_system",
    "build_case2_system",
    "build_case3_system",
    "cantor_add",
    "classify",
    "compose_from_cubic",
    "detect_shared_place",
    "determinant",
    "double",
    "element_order",
    "enumerate_jacobian",
    "from_points",
    "from_single",
    "identity",
    "is_probable_prime",
    "load_curve_file",
    "oracle_sweep",
    "parse_divisor",
    "plan_addition",
    "poly_gcd",
    "poly_xgcd",
    "random_curve",
    "scalar_mul",
    "solve",
    "support_points",
    "tangent_slope",
    "validate",
    "validate_curve",
    "__version__",
]
