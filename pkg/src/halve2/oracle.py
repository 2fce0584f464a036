"""Brute-force ground truth over small prime fields.

Everything here is deliberately dumb: enumerate every point of E(F_p),
double each one, and tabulate. The closed-form halving code is tested
against these tables, never the other way around. Enumeration is
x-major (test the cubic for squareness at each x and attach the two
y-values), so building a table costs O(p) field operations.

Only finite fields make sense here, and the modulus is capped (default
10_007, see DEFAULT_PRIME_BOUND) to keep exhaustive scans instant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import INFINITY, Curve, Point
from .errors import BoundExceededError, FieldNotFiniteError, InvariantBreachError

DEFAULT_PRIME_BOUND = 10_007


def _check_finite(curve: Curve, bound: int | None) -> int:
    if not curve.field.is_prime_field:
        raise FieldNotFiniteError(
            f"exhaustive enumeration needs a finite field, not {curve.field}"
        )
    p = curve.field.modulus
    cap = DEFAULT_PRIME_BOUND if bound is None else bound
    if p > cap:
        raise BoundExceededError(
            f"modulus {p} exceeds the enumeration bound {cap}"
        )
    return p


def enumerate_points(curve: Curve, bound: int | None = None) -> tuple[Point, ...]:
    """Every point of E(F_p), in a fixed order.

    The order is: infinity first, then x ascending through 0..p-1, and
    for each x with two points the smaller y first. Duplicate-free by
    construction.
    """
    p = _check_finite(curve, bound)
    points = [INFINITY]
    for xv in range(p):
        x = curve.field.element(xv)
        f = curve.cubic_at(x)
        if not f:
            points.append(Point(x, curve.field.zero))
            continue
        r = f.sqrt()
        if r is None:
            continue
        # canonical root is in [0, (p-1)/2], so r < p - r
        points.append(Point(x, r))
        points.append(Point(x, -r))
    return tuple(points)


@dataclass(frozen=True)
class PointTable:
    """The complete doubling structure of one curve over F_p.

    ``points`` is the full point list in enumeration order;
    ``preimages`` maps every point to the tuple of points doubling to
    it (empty or of length exactly 4 -- doubling is 4-to-1 onto its
    image when the whole 2-torsion is rational).
    """

    curve: Curve
    points: tuple[Point, ...]
    preimages: dict[Point, tuple[Point, ...]]

    @classmethod
    def build(cls, curve: Curve, bound: int | None = None) -> "PointTable":
        points = enumerate_points(curve, bound)
        buckets: dict[Point, list[Point]] = {q: [] for q in points}
        for q in points:
            buckets[curve.double(q)].append(q)
        preimages = {q: tuple(pre) for q, pre in buckets.items()}
        for q, pre in preimages.items():
            if len(pre) not in (0, 4):
                raise InvariantBreachError(
                    f"{q} has {len(pre)} doubling preimages; expected 0 or 4"
                )
        return cls(curve, points, preimages)

    @property
    def order(self) -> int:
        return len(self.points)


def halves_bruteforce(curve: Curve, point: Point, bound: int | None = None) -> tuple[Point, ...]:
    """All Q with 2Q = point, found by scanning the whole group."""
    curve.require_on_curve(point)
    return tuple(
        q for q in enumerate_points(curve, bound) if curve.double(q) == point
    )


def group_order(curve: Curve, bound: int | None = None) -> int:
    """|E(F_p)| by exhaustive count, sanity-checked against the Hasse bound."""
    n = len(enumerate_points(curve, bound))
    p = curve.field.modulus
    # |n - (p+1)| <= 2*sqrt(p), compared as isqrt(4p) so no rounding
    # sneaks in (2*isqrt(p) would understate the bound for most p).
    if abs(n - (p + 1)) > math.isqrt(4 * p):
        raise InvariantBreachError(
            f"point count {n} violates the Hasse bound around p + 1 = {p + 1}"
        )
    return n
