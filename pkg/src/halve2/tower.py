"""Iterated halving: 2-adic depth chains and the order-4 construction.

A point divisible by 2 may have halves that are themselves divisible,
and so on; the length of the longest such chain is the point's 2-adic
depth (up to a caller-imposed cap -- over the rationals the search must
be bounded, since a height argument, not this artifact, is what rules
out unbounded divisibility for non-torsion points).

The special case of halving a 2-torsion point (a_j, 0) produces four
points of exact order 4 with a particularly tidy shape: writing r_a,
r_b for square roots of a_j - a_a and a_j - a_b (the other two roots),
they are

    (a_j + r_a r_b, -(r_a + r_b) r_a r_b),   its negative,
    (a_j - r_a r_b,  (r_a - r_b) r_a r_b),   and its negative,

in exactly that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .curves import INFINITY, Curve, Point, point_from_json, point_to_json
from .errors import (
    InfinityInputError,
    InvariantBreachError,
    ParseError,
    RootsNotSquareError,
)
from .fields import FieldSpec
from .halving import RootTriple, TangentLine, halve_from_roots, halves


@dataclass(frozen=True)
class HalvingChain:
    """A witnessed chain base = 2*Q1, Q1 = 2*Q2, ..., up to some depth.

    ``links`` is ordered from the first half downward: doubling
    links[0] gives base, and doubling links[i+1] gives links[i]. An
    empty chain (depth 0) means the base itself is not divisible by 2.
    """

    base: Point
    links: tuple[Point, ...]

    @property
    def depth(self) -> int:
        return len(self.links)

    def replay(self, curve: Curve) -> bool:
        """Re-verify every doubling relation along the chain."""
        target = self.base
        for q in self.links:
            if curve.double(q) != target:
                return False
            target = q
        return True


def two_adic_depth(curve: Curve, point: Point, max_k: int) -> HalvingChain:
    """Search for the deepest halving chain under ``point``, capped at max_k.

    All four halves are explored at every level (depth-first, in the
    deterministic halves order): over the rationals, different halves
    of the same point can admit different further divisibility, so a
    greedy single branch would undercount. Among chains reaching the
    maximal depth, the first found wins, which makes the output
    deterministic.

    Args:
        curve: the ambient curve.
        point: affine starting point, on the curve.
        max_k: hard depth cap, at least 1.

    Returns:
        A :class:`HalvingChain` of depth between 0 and max_k.
    """
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}")
    if point.is_infinity:
        raise InfinityInputError(
            "the identity is divisible by 2 forever; depth search needs an affine point"
        )
    curve.require_on_curve(point)
    return HalvingChain(point, tuple(_descend(curve, point, max_k)))


def _descend(curve: Curve, point: Point, budget: int) -> list[Point]:
    if budget == 0:
        return []
    report = halves(curve, point)
    if not report.halvable:
        return []
    best: list[Point] = []
    for half in report.halves:
        tail = _descend(curve, half.point, budget - 1)
        if 1 + len(tail) > len(best):
            best = [half.point, *tail]
            if len(best) == budget:
                break
    return best


@dataclass(frozen=True)
class Order4Point:
    """One constructed point of exact order 4, with its provenance.

    ``confirmed`` records that 2Q equals the 2-torsion base (so 4Q is
    the identity and 2Q is not) -- checked by the group law, never
    assumed from the formulas.
    """

    point: Point
    triple: RootTriple
    tangent: TangentLine
    confirmed: bool


def order4_points(curve: Curve, j: int) -> tuple[Order4Point, Order4Point, Order4Point, Order4Point]:
    """The four order-4 points above the 2-torsion point (a_j, 0).

    They exist in the base field exactly when both differences
    a_j - a_i (i the other two indices) are squares; otherwise the
    non-square witness is raised. The enumeration order is
    [Q, -Q, Q', -Q'] where Q takes both canonical roots positively and
    Q' flips the sign of the second.

    Args:
        curve: the ambient curve.
        j: 1-based root index in {1, 2, 3}.

    Raises:
        RootsNotSquareError: some difference a_j - a_i is not a square;
            the witness lists the offending indices and differences.
        InvariantBreachError: a constructed point fails the order-4
            group-law confirmation (formula or arithmetic bug).
    """
    if j not in (1, 2, 3):
        raise ValueError(f"root index must be 1, 2, or 3, got {j}")
    aj = curve.roots[j - 1]
    others = [i for i in (0, 1, 2) if i != j - 1]
    diffs = [(i, aj - curve.roots[i]) for i in others]
    roots = {i: d.sqrt() for i, d in diffs}
    missing = [(i + 1, d) for i, d in diffs if roots[i] is None]
    if missing:
        detail = ", ".join(f"a{j} - a{i} = {d}" for i, d in missing)
        raise RootsNotSquareError(
            f"no order-4 points above root {j} of {curve}: "
            f"{detail} not a square",
            witness=tuple(missing),
        )

    base = Point(aj, curve.field.zero)
    a, b = others
    sa, sb = roots[a], roots[b]
    out = []
    for ea, eb in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
        r = [None, None, None]
        r[j - 1] = curve.field.zero
        r[a] = ea * sa
        r[b] = eb * sb
        half = halve_from_roots(curve, base, RootTriple(*r))
        if curve.scalar_mul(2, half.point) != base or curve.scalar_mul(4, half.point) != INFINITY:
            raise InvariantBreachError(
                f"{half.point} does not have order 4 above {base}"
            )
        out.append(Order4Point(half.point, half.triple, half.tangent, True))
    return tuple(out)


# --- JSON boundary -------------------------------------------------------
#
# chain: {"base": <point>, "links": [<point>, ...], "depth": k}


def chain_to_json(chain: HalvingChain) -> dict:
    return {
        "base": point_to_json(chain.base),
        "links": [point_to_json(q) for q in chain.links],
        "depth": chain.depth,
    }


def chain_from_json(doc, field: FieldSpec) -> HalvingChain:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad chain document: {exc}") from None
    try:
        base = point_from_json(doc["base"], field)
        links = tuple(point_from_json(q, field) for q in doc["links"])
        depth = int(doc["depth"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad chain document: {exc}") from None
    if depth != len(links):
        raise ParseError(f"chain depth {depth} does not match {len(links)} links")
    return HalvingChain(base, links)
