"""Shared sweep fixtures: every curve with roots from {0..4} over small primes.

The heavy cross-checks (closed-form halving vs. exhaustive doubling
tables) all run over the same family of curves, so the brute-force
tables are built once per session and shared.
"""

import itertools

import pytest

from halve2 import PointTable, make_curve, prime_field

SWEEP_PRIMES = (5, 7, 11, 13, 31)
SWEEP_ROOTS = tuple(itertools.combinations(range(5), 3))


def sweep_curves(p):
    field = prime_field(p)
    return [make_curve(field, *roots) for roots in SWEEP_ROOTS]


@pytest.fixture(scope="session")
def sweep_tables():
    """{(p, roots): PointTable} for the full sweep family."""
    tables = {}
    for p in SWEEP_PRIMES:
        field = prime_field(p)
        for roots in SWEEP_ROOTS:
            tables[(p, roots)] = PointTable.build(make_curve(field, *roots))
    return tables


def affine_points(table):
    return [q for q in table.points if not q.is_infinity]
