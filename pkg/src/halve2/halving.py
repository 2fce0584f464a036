"""Deciding divisibility by 2 and constructing halves in closed form.

For a curve y^2 = (x - a1)(x - a2)(x - a3) with all three roots in the
base field, an affine point P = (x2, y2) is twice some rational point
exactly when every difference x2 - a_i is a square in the field. When it
is, each consistent choice of square roots

    r_i^2 = x2 - a_i,    r1 * r2 * r3 = -y2

yields one half Q = (x1, y1) directly:

    x1 = x2 + (r1 r2 + r2 r3 + r3 r1)
    y1 = -y2 - (r1 + r2 + r3)(r1 r2 + r2 r3 + r3 r1)

together with the tangent line y = l x + m at Q (which meets the curve
again at -P):

    l = -(r1 + r2 + r3),    m = -y2 + (r1 + r2 + r3) x2

There are exactly four consistent sign choices and hence four halves;
they form a coset of the 2-torsion subgroup. No point multiplication or
root-finding is involved -- everything is evaluated in exact field
arithmetic, and every constructed half is verified against the group
law before it is returned.

The module also exports three standalone algebraic checks (cubic
identity, fractional-linear map, Vieta relations) that tie a claimed
half to its point; the CLI's verify mode runs them on externally
supplied reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .curves import Curve, Point, point_from_json, point_to_json
from .errors import (
    DegenerateDenominatorError,
    InfinityInputError,
    InvalidTripleError,
    InvariantBreachError,
    NotHalvableError,
    ParseError,
)
from .fields import FieldElement, FieldSpec


@dataclass(frozen=True)
class SquareWitness:
    """Verdict for one root: is x2 - a_index a square, and its root.

    ``index`` is 1-based to match the usual labelling a1, a2, a3.
    ``root`` is the canonical square root, or None when ``is_square``
    is False.
    """

    index: int
    difference: FieldElement
    is_square: bool
    root: FieldElement | None


@dataclass(frozen=True)
class RootTriple:
    """One consistent choice (r1, r2, r3) with r_i^2 = x2 - a_i."""

    r1: FieldElement
    r2: FieldElement
    r3: FieldElement

    def as_tuple(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return (self.r1, self.r2, self.r3)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return f"({self.r1}, {self.r2}, {self.r3})"


@dataclass(frozen=True)
class TangentLine:
    """The line y = slope*x + intercept, tangent to the curve at a half Q.

    For a half Q = (x1, y1) of P = (x2, y2) it satisfies
    y1 = slope*x1 + intercept and -y2 = slope*x2 + intercept.
    Serialized under the short keys "l" (slope) and "m" (intercept).
    """

    slope: FieldElement
    intercept: FieldElement

    def at(self, x: FieldElement) -> FieldElement:
        return self.slope * x + self.intercept

    def __str__(self) -> str:
        return f"y = {self.slope}*x + {self.intercept}"


@dataclass(frozen=True)
class Half:
    """One half Q of a point, with the triple and tangent that built it."""

    triple: RootTriple
    point: Point
    tangent: TangentLine


@dataclass(frozen=True)
class HalvingReport:
    """Full outcome of a halving attempt on an affine point.

    ``witness`` always carries all three square verdicts, in index
    order. ``halves`` is empty when ``halvable`` is False, and otherwise
    holds the four halves in enumeration order.
    """

    halvable: bool
    witness: tuple[SquareWitness, SquareWitness, SquareWitness]
    halves: tuple[Half, ...]


def square_witness(curve: Curve, point: Point) -> tuple[SquareWitness, ...]:
    """The three per-root square verdicts for an affine point on ``curve``.

    Args:
        curve: the ambient curve.
        point: an affine point; membership is checked here.

    Returns:
        A triple of :class:`SquareWitness`, ordered by root index.
    """
    x2, _ = curve.require_on_curve(point).affine()
    out = []
    for i, a in enumerate(curve.roots, start=1):
        d = x2 - a
        root = d.sqrt()
        out.append(SquareWitness(i, d, root is not None, root))
    return tuple(out)


def is_halvable(curve: Curve, point: Point) -> bool:
    """True when ``point`` is 2*Q for some Q with coordinates in the field.

    Takes an affine point; the identity's preimages are listed by
    :func:`halves_of_infinity` instead.
    """
    if point.is_infinity:
        raise InfinityInputError(
            "is_halvable takes an affine point; infinity is always 2*infinity"
        )
    return all(w.is_square for w in square_witness(curve, point))


def root_triples(curve: Curve, point: Point) -> tuple[RootTriple, ...]:
    """All four consistent sign choices, in a fixed deterministic order.

    Writing s_i for the canonical square root of x2 - a_i, the triples
    are generated by putting signs (+,+), (+,-), (-,+), (-,-) on the
    two free roots and honouring the product constraint
    r1 r2 r3 = -y2:

    * y2 != 0: the free roots are (r1, r2) and r3 = -y2 / (r1 r2).
    * y2 == 0: the point is 2-torsion, so exactly one s_j is zero;
      that r_j stays 0 and the signs land on the other two roots in
      ascending index order.

    Raises:
        NotHalvableError: some difference is not a square; the witness
            rides along on the exception.
        InfinityInputError: ``point`` is the identity.
    """
    if point.is_infinity:
        raise InfinityInputError("root triples are defined for affine points only")
    witness = square_witness(curve, point)
    if not all(w.is_square for w in witness):
        bad = [w.index for w in witness if not w.is_square]
        raise NotHalvableError(
            f"{point} is not divisible by 2: difference at index "
            f"{', '.join(map(str, bad))} is not a square",
            witness=witness,
        )
    _, y2 = point.affine()
    s = [w.root for w in witness]
    signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))

    if y2:
        triples = []
        for e1, e2 in signs:
            r1 = e1 * s[0]
            r2 = e2 * s[1]
            triples.append(RootTriple(r1, r2, -y2 / (r1 * r2)))
        return tuple(triples)

    # 2-torsion point: one canonical root vanishes; vary the other two.
    zero_at = next(i for i, root in enumerate(s) if not root)
    free = [i for i in range(3) if i != zero_at]
    triples = []
    for e1, e2 in signs:
        r = [None, None, None]
        r[zero_at] = s[zero_at]
        r[free[0]] = e1 * s[free[0]]
        r[free[1]] = e2 * s[free[1]]
        triples.append(RootTriple(*r))
    return tuple(triples)


def halve_from_roots(curve: Curve, point: Point, triple: RootTriple) -> Half:
    """Evaluate the closed-form half for one root triple.

    The triple is re-validated against its definition (each r_i squares
    to x2 - a_i, the product is -y2, entries pairwise distinct) so that
    hand-built triples cannot slip through inconsistent.

    Returns:
        A :class:`Half` carrying Q, the tangent line at Q, and the
        originating triple.

    Raises:
        InvalidTripleError: the triple does not belong to this point.
    """
    x2, y2 = curve.require_on_curve(point).affine()
    r1, r2, r3 = triple
    for r, a in zip(triple, curve.roots):
        if r * r != x2 - a:
            raise InvalidTripleError(
                f"{triple} is not a root triple for {point}: {r}^2 != {x2 - a}"
            )
    if r1 * r2 * r3 != -y2:
        raise InvalidTripleError(
            f"{triple} violates the product constraint r1*r2*r3 = {-y2}"
        )
    if r1 == r2 or r2 == r3 or r1 == r3:
        raise InvalidTripleError(f"{triple} has repeated entries")
    e1 = r1 + r2 + r3
    e2 = r1 * r2 + r2 * r3 + r3 * r1
    q = Point(x2 + e2, -y2 - e1 * e2)
    return Half(triple, q, TangentLine(-e1, -y2 + e1 * x2))


def halves(curve: Curve, point: Point) -> HalvingReport:
    """Decide divisibility by 2 and construct all four halves.

    This is the everything-in-one entry point: it computes the square
    witness, and when the point is halvable, builds the four halves in
    enumeration order and cross-checks each against the group law
    (Q on the curve, 2Q = P, all four distinct). A cross-check failure
    means a bug in the formulas or the arithmetic, never bad input, and
    raises InvariantBreachError.

    A non-halvable point is a normal outcome: the report comes back
    with ``halvable=False``, the witness, and no halves. Infinity is
    rejected; use :func:`halves_of_infinity` for the identity.
    """
    if point.is_infinity:
        raise InfinityInputError(
            "halves() takes an affine point; infinity's halves are the "
            "2-torsion points, see halves_of_infinity()"
        )
    witness = square_witness(curve, point)
    if not all(w.is_square for w in witness):
        return HalvingReport(False, witness, ())

    built = []
    for triple in root_triples(curve, point):
        half = halve_from_roots(curve, point, triple)
        if not curve.contains(half.point):
            raise InvariantBreachError(
                f"constructed half {half.point} of {point} is off the curve"
            )
        if curve.double(half.point) != point:
            raise InvariantBreachError(
                f"doubling {half.point} does not return {point}"
            )
        built.append(half)
    if len({h.point for h in built}) != 4:
        raise InvariantBreachError(
            f"the four halves of {point} are not distinct: "
            f"{[str(h.point) for h in built]}"
        )
    return HalvingReport(True, witness, tuple(built))


def halves_of_infinity(curve: Curve) -> tuple[Point, Point, Point, Point]:
    """The four points T with 2T = infinity: the full 2-torsion subgroup."""
    return curve.two_torsion()


# --- identity checks -----------------------------------------------------
#
# Three independent algebraic identities tie a half to its point. Each
# returns a plain bool so the CLI's verify mode can print one verdict
# per check; none of them trusts the construction path.


def verify_cubic_identity(
    curve: Curve, tangent: TangentLine, x1: FieldElement, x2: FieldElement
) -> bool:
    """Coefficient-wise check of the tangent-line factorization.

    A genuine half Q = (x1, *) of P = (x2, *) with tangent y = l x + m
    satisfies the polynomial identity

        (x - a1)(x - a2)(x - a3) - (l x + m)^2 = (x - x1)^2 (x - x2)

    (the tangent meets the curve twice at Q and once at -P). Both sides
    are expanded and all coefficients compared exactly; the leading
    cubic terms agree trivially.
    """
    ln, m = tangent.slope, tangent.intercept
    c2, c1, c0 = curve.cubic_coefficients()
    return (
        c2 - ln * ln == -(2 * x1 + x2)
        and c1 - 2 * ln * m == x1 * x1 + 2 * x1 * x2
        and c0 - m * m == -(x1 * x1 * x2)
    )


def moebius_check(
    curve: Curve, triple: RootTriple, tangent: TangentLine, x1: FieldElement
) -> bool:
    """Check that z -> (l z + m) / (-z + x1) carries each root a_i to r_i.

    This fractional-linear map ties the tangent line back to the square
    roots of the differences.

    Raises:
        DegenerateDenominatorError: x1 coincides with some a_i, so the
            map is undefined there; for data coming out of halves()
            that signals an invariant breach upstream.
    """
    for a in curve.roots:
        if x1 == a:
            raise DegenerateDenominatorError(
                f"map undefined at root {a}: denominator x1 - {a} vanishes"
            )
    ln, m = tangent.slope, tangent.intercept
    return all(
        (ln * a + m) / (x1 - a) == r for a, r in zip(curve.roots, triple)
    )


def vieta_check(
    point: Point, triple: RootTriple, tangent: TangentLine, x1: FieldElement
) -> bool:
    """Check the triple against the cubic whose roots it should be.

    The r_i are exactly the roots of

        h(t) = t^3 + l t^2 + (x1 - x2) t - (l x2 + m)

    so their elementary symmetric functions must match its coefficients:
    r1+r2+r3 = -l, r1r2+r2r3+r3r1 = x1-x2, r1r2r3 = l x2 + m.
    """
    x2, _ = point.affine()
    ln, m = tangent.slope, tangent.intercept
    r1, r2, r3 = triple
    return (
        r1 + r2 + r3 == -ln
        and r1 * r2 + r2 * r3 + r3 * r1 == x1 - x2
        and r1 * r2 * r3 == ln * x2 + m
    )


# --- JSON boundary -------------------------------------------------------
#
# {"halvable": bool,
#  "witness": [{"index": i, "difference": "...", "is_square": bool,
#               "root": "..."|null}, ...],
#  "halves": [{"triple": ["r1","r2","r3"], "Q": {"x": "...", "y": "..."},
#              "tangent": {"l": "...", "m": "..."}}, ...]}


def witness_to_json(witness) -> list[dict]:
    return [
        {
            "index": w.index,
            "difference": str(w.difference),
            "is_square": w.is_square,
            "root": None if w.root is None else str(w.root),
        }
        for w in witness
    ]


def report_to_json(report: HalvingReport) -> dict:
    """Serialize a report; element values become literal strings."""
    return {
        "halvable": report.halvable,
        "witness": witness_to_json(report.witness),
        "halves": [
            {
                "triple": [str(r) for r in h.triple],
                "Q": point_to_json(h.point),
                "tangent": {"l": str(h.tangent.slope), "m": str(h.tangent.intercept)},
            }
            for h in report.halves
        ],
    }


def report_from_json(doc, field: FieldSpec) -> HalvingReport:
    """Rebuild a report from its JSON form (inverse of report_to_json).

    The JSON carries element literals only, so the field they live in
    must be supplied by the caller.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad report document: {exc}") from None
    try:
        witness = tuple(
            SquareWitness(
                int(w["index"]),
                field.element(str(w["difference"])),
                bool(w["is_square"]),
                None if w["root"] is None else field.element(str(w["root"])),
            )
            for w in doc["witness"]
        )
        halves_out = []
        for h in doc["halves"]:
            q = point_from_json(h["Q"], field)
            if q.is_infinity:
                raise ParseError("a half is an affine point, not 'inf'")
            triple = RootTriple(*(field.element(str(r)) for r in h["triple"]))
            tangent = TangentLine(
                field.element(str(h["tangent"]["l"])),
                field.element(str(h["tangent"]["m"])),
            )
            halves_out.append(Half(triple, q, tangent))
        return HalvingReport(bool(doc["halvable"]), witness, tuple(halves_out))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad report document: {exc}") from None
