"""Exact divisibility-by-2 and point halving on full-2-torsion curves.

The library works with curves y^2 = (x - a1)(x - a2)(x - a3) whose three
roots all lie in the base field (the rationals, or F_p for an odd prime
p). For an affine point P it decides whether P = 2Q has a solution Q
over the same field -- true exactly when every x_P - a_i is a square --
and, when it does, constructs all four such Q in closed form, together
with the tangent-line data that certifies each one.

Quick tour:

    >>> from halve2 import make_curve, rationals, halves
    >>> c = make_curve(rationals(), 0, 3, 4)
    >>> report = halves(c, c.point(4, 0))
    >>> report.halvable
    True
    >>> print(report.halves[0].point)
    (6, -6)

Everything is exact; no floating point is involved anywhere.
"""

from .curves import (
    INFINITY,
    Curve,
    Point,
    curve_from_json,
    curve_to_json,
    make_curve,
    point_from_json,
    point_to_json,
)
from .errors import (
    BoundExceededError,
    DegenerateDenominatorError,
    DivisionByZeroError,
    EvenOrSmallModulusError,
    ExactCurveError,
    FieldNotFiniteError,
    InfinityInputError,
    InvalidTripleError,
    InvariantBreachError,
    ModulusOutOfRangeError,
    NotHalvableError,
    NotOnCurveError,
    NotPrimeError,
    ParseError,
    RepeatedRootError,
    RootsNotSquareError,
    SpecMismatchError,
)
from .fields import (
    FieldElement,
    FieldSpec,
    is_prime,
    make_field,
    parse_field_spec,
    prime_field,
    rationals,
)
from .halving import (
    Half,
    HalvingReport,
    RootTriple,
    SquareWitness,
    TangentLine,
    halve_from_roots,
    halves,
    halves_of_infinity,
    is_halvable,
    moebius_check,
    report_from_json,
    report_to_json,
    root_triples,
    square_witness,
    verify_cubic_identity,
    vieta_check,
)
from .oracle import (
    DEFAULT_PRIME_BOUND,
    PointTable,
    enumerate_points,
    group_order,
    halves_bruteforce,
)
from .tower import (
    HalvingChain,
    Order4Point,
    chain_from_json,
    chain_to_json,
    order4_points,
    two_adic_depth,
)

__all__ = [
    "BoundExceededError",
    "Curve",
    "DEFAULT_PRIME_BOUND",
    "DegenerateDenominatorError",
    "DivisionByZeroError",
    "EvenOrSmallModulusError",
    "ExactCurveError",
    "FieldElement",
    "FieldNotFiniteError",
    "FieldSpec",
    "Half",
    "HalvingChain",
    "HalvingReport",
    "INFINITY",
    "InfinityInputError",
    "InvalidTripleError",
    "InvariantBreachError",
    "ModulusOutOfRangeError",
    "NotHalvableError",
    "NotOnCurveError",
    "NotPrimeError",
    "Order4Point",
    "ParseError",
    "Point",
    "PointTable",
    "RepeatedRootError",
    "RootTriple",
    "RootsNotSquareError",
    "SpecMismatchError",
    "SquareWitness",
    "TangentLine",
    "chain_from_json",
    "chain_to_json",
    "curve_from_json",
    "curve_to_json",
    "enumerate_points",
    "group_order",
    "halve_from_roots",
    "halves",
    "halves_bruteforce",
    "halves_of_infinity",
    "is_halvable",
    "is_prime",
    "make_curve",
    "make_field",
    "moebius_check",
    "order4_points",
    "parse_field_spec",
    "point_from_json",
    "point_to_json",
    "prime_field",
    "rationals",
    "report_from_json",
    "report_to_json",
    "root_triples",
    "square_witness",
    "two_adic_depth",
    "verify_cubic_identity",
    "vieta_check",
]

__version__ = "0.1.0"
