"""Curves y^2 = (x - a1)(x - a2)(x - a3) and their group law.

A curve is pinned down by a field and three distinct roots of the cubic,
so the full 2-torsion is rational by construction: the points of order
two are exactly (a1, 0), (a2, 0), (a3, 0). Points are affine pairs or
the point at infinity (the identity). The group law is the standard
chord-and-tangent construction, done in exact arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    InfinityInputError,
    NotOnCurveError,
    ParseError,
    RepeatedRootError,
)
from .fields import FieldElement, FieldSpec, parse_field_spec


@dataclass(frozen=True)
class Point:
    """A point on (some) curve: an affine (x, y) pair or infinity.

    Infinity is the unique point with both coordinates None; affine
    points have both set. The type carries no curve reference -- curve
    membership is checked where it matters.
    """

    x: FieldElement | None
    y: FieldElement | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def affine(self) -> tuple[FieldElement, FieldElement]:
        """The (x, y) pair; rejects infinity rather than returning Nones."""
        if self.is_infinity:
            raise InfinityInputError("the point at infinity has no affine coordinates")
        return self.x, self.y

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"({self.x}, {self.y})"


INFINITY = Point(None, None)


@dataclass(frozen=True)
class Curve:
    """y^2 = (x - roots[0])(x - roots[1])(x - roots[2]) over ``field``.

    Roots are stored in the caller's order (the order is part of the
    curve's identity for labelling purposes, e.g. "the difference at
    index 2"). Construct through :func:`make_curve`, which checks
    distinctness.
    """

    field: FieldSpec
    roots: tuple[FieldElement, FieldElement, FieldElement]

    def cubic_at(self, x: FieldElement) -> FieldElement:
        """Evaluate (x - a1)(x - a2)(x - a3)."""
        a1, a2, a3 = self.roots
        return (x - a1) * (x - a2) * (x - a3)

    def cubic_coefficients(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        """Coefficients (c2, c1, c0) of x^3 + c2 x^2 + c1 x + c0.

        These are signed elementary symmetric functions of the roots:
        c2 = -(a1+a2+a3), c1 = a1 a2 + a2 a3 + a3 a1, c0 = -a1 a2 a3.
        """
        a1, a2, a3 = self.roots
        return (-(a1 + a2 + a3), a1 * a2 + a2 * a3 + a3 * a1, -(a1 * a2 * a3))

    def contains(self, point: Point) -> bool:
        if point.is_infinity:
            return True
        return point.y * point.y == self.cubic_at(point.x)

    def require_on_curve(self, point: Point) -> Point:
        if not self.contains(point):
            raise NotOnCurveError(f"{point} does not satisfy the equation of {self}")
        return point

    def point(self, x, y) -> Point:
        """Build an affine point, coercing coordinates into the field."""
        return Point(self.field.element(x), self.field.element(y))

    def two_torsion(self) -> tuple[Point, Point, Point, Point]:
        """The full 2-torsion subgroup, in the fixed order [inf, (a1,0), (a2,0), (a3,0)]."""
        zero = self.field.zero
        return (INFINITY,) + tuple(Point(a, zero) for a in self.roots)

    def neg(self, point: Point) -> Point:
        self.require_on_curve(point)
        if point.is_infinity:
            return INFINITY
        return Point(point.x, -point.y)

    def add(self, p: Point, q: Point) -> Point:
        self.require_on_curve(p)
        self.require_on_curve(q)
        return self._add(p, q)

    def double(self, p: Point) -> Point:
        self.require_on_curve(p)
        return self._double(p)

    def scalar_mul(self, n: int, p: Point) -> Point:
        """n*P by double-and-add; n may be negative or zero."""
        self.require_on_curve(p)
        if n < 0:
            n, p = -n, self._neg(p)
        acc = INFINITY
        while n:
            if n & 1:
                acc = self._add(acc, p)
            p = self._double(p)
            n >>= 1
        return acc

    # Internal versions skip the membership check; callers guarantee it.

    def _neg(self, p: Point) -> Point:
        if p.is_infinity:
            return INFINITY
        return Point(p.x, -p.y)

    def _add(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.x == q.x:
            if p.y == q.y:
                return self._double(p)
            return INFINITY
        lam = (q.y - p.y) / (q.x - p.x)
        return self._chord(p, q.x, lam)

    def _double(self, p: Point) -> Point:
        if p.is_infinity or not p.y:
            return INFINITY
        c2, c1, _ = self.cubic_coefficients()
        lam = (3 * p.x * p.x + 2 * c2 * p.x + c1) / (2 * p.y)
        return self._chord(p, p.x, lam)

    def _chord(self, p: Point, qx: FieldElement, lam: FieldElement) -> Point:
        c2, _, _ = self.cubic_coefficients()
        x3 = lam * lam - c2 - p.x - qx
        y3 = lam * (p.x - x3) - p.y
        return Point(x3, y3)

    def __str__(self) -> str:
        terms = []
        for a in self.roots:
            if not a:
                terms.append("x")
            elif str(a).startswith("-"):
                terms.append(f"(x + {-a})")
            else:
                terms.append(f"(x - {a})")
        return f"y^2 = {''.join(terms)} over {self.field}"


def make_curve(field: FieldSpec, a1, a2, a3) -> Curve:
    """Validated constructor: coerces the three roots into ``field``, keeps order.

    Raises:
        RepeatedRootError: some pair of roots coincides (the curve would
            be singular and the halving theory breaks down).
    """
    elems = (field.element(a1), field.element(a2), field.element(a3))
    if elems[0] == elems[1] or elems[1] == elems[2] or elems[0] == elems[2]:
        raise RepeatedRootError(
            f"roots must be pairwise distinct; got ({elems[0]}, {elems[1]}, {elems[2]})"
        )
    return Curve(field, elems)


# --- JSON boundary -------------------------------------------------------
#
# curve:  {"field": "<spec>", "roots": ["<lit>", "<lit>", "<lit>"]}
# point:  "inf"  or  {"x": "<lit>", "y": "<lit>"}
#
# All element values are strings in the literal grammar so that large
# numerators and denominators survive round-tripping untouched.


def curve_to_json(curve: Curve) -> dict:
    return {
        "field": str(curve.field),
        "roots": [str(a) for a in curve.roots],
    }


def curve_from_json(doc) -> Curve:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad curve document: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"field", "roots"}:
        raise ParseError("curve document must be an object with 'field' and 'roots'")
    field = parse_field_spec(doc["field"])
    roots = doc["roots"]
    if not isinstance(roots, list) or len(roots) != 3:
        raise ParseError("'roots' must be a list of three element literals")
    return make_curve(field, *(field.element(str(r)) for r in roots))


def point_to_json(point: Point) -> dict | str:
    if point.is_infinity:
        return "inf"
    return {"x": str(point.x), "y": str(point.y)}


def point_from_json(doc, field: FieldSpec) -> Point:
    if isinstance(doc, str):
        body = doc.strip()
        if body == "inf":
            return INFINITY
        try:
            doc = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad point document: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"x", "y"}:
        raise ParseError("point document must be \"inf\" or an object with 'x' and 'y'")
    return Point(field.element(str(doc["x"])), field.element(str(doc["y"])))
