from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from helpers import inverse_adjugate

from nasharc import (
    INF,
    BlowupCluster,
    Comparison,
    ValidationError,
    cluster_fixture,
    cluster_matrix,
    compare,
    curvette_order_rows,
    curvette_orders,
    curvette_polynomial,
    enumerate_proximity_structures,
    enumerate_tangent_assignments,
    multiplicities,
    ord_poly,
    parse_poly,
    strict_transform_profile,
)

CHAIN2 = cluster_fixture("chain2")
SATELLITE = cluster_fixture("satellite3")
TWO_DIRECTIONS = cluster_fixture("twodir")

TANGENT_POOL = (Fraction(0), Fraction(1), Fraction(-1), INF)


def sample_family():
    """Monomials of total degree <= 6 and binomials y^q - c*x^p, p,q <= 4."""
    polys = []
    for a, b in combinations_with_replacement(range(7), 2):
        for ea, eb in {(a, b), (b, a)}:
            if ea + eb == 0 or ea + eb > 6:
                continue
            polys.append(parse_poly(f"x^{ea}*y^{eb}"))
    for p in range(1, 5):
        for q in range(1, 5):
            for lam in (1, 2):
                polys.append(parse_poly(f"y^{q} - {lam}*x^{p}"))
    return polys


def test_curvette_orders_single_point():
    assert curvette_orders(cluster_fixture("chain1"), 0) == (1,)


def test_curvette_orders_chain():
    assert curvette_orders(CHAIN2, 0) == (1, 1)
    assert curvette_orders(CHAIN2, 1) == (1, 2)


def test_curvette_orders_satellite():
    rows = curvette_order_rows(SATELLITE)
    assert rows == ((1, 1, 2), (1, 2, 3), (2, 3, 6))


def test_curvette_rows_match_adjugate_oracle():
    for cluster in (CHAIN2, SATELLITE, TWO_DIRECTIONS, cluster_fixture("chain4")):
        matrix = cluster_matrix(cluster)
        oracle = inverse_adjugate(matrix)
        rows = curvette_order_rows(cluster)
        assert [[-v for v in row] for row in oracle] == [list(map(Fraction, r)) for r in rows]


def test_ord_poly_examples():
    assert ord_poly(cluster_fixture("chain1"), parse_poly("x"), 0) == 1
    assert ord_poly(CHAIN2, parse_poly("y"), 1) == 2
    assert ord_poly(CHAIN2, parse_poly("x"), 1) == 1
    assert ord_poly(CHAIN2, parse_poly("y - x^2"), 1) == 2


def test_ord_poly_cusp():
    assert ord_poly(CHAIN2, parse_poly("y^2 - x^3"), 0) == 2
    assert ord_poly(CHAIN2, parse_poly("y^2 - x^3"), 1) == 3
    assert ord_poly(SATELLITE, parse_poly("y^2 - x^3"), 2) == 6


def test_ord_poly_errors():
    with pytest.raises(ValidationError):
        ord_poly(CHAIN2, parse_poly("x - x"), 0)
    bare = BlowupCluster.from_specs([(None,), (0,)])
    with pytest.raises(ValidationError):
        ord_poly(bare, parse_poly("y"), 1)
    with pytest.raises(ValidationError):
        ord_poly(CHAIN2, parse_poly("x"), 7)


def test_multiplicities_and_profile():
    assert multiplicities(CHAIN2, parse_poly("y")) == (1, 1)
    assert strict_transform_profile(CHAIN2, parse_poly("y")) == (0, 1)
    assert strict_transform_profile(CHAIN2, parse_poly("x")) == (1, 0)
    assert multiplicities(CHAIN2, parse_poly("y^2 - x^3")) == (2, 1)
    assert strict_transform_profile(CHAIN2, parse_poly("y^2 - x^3")) == (1, 1)
    assert multiplicities(SATELLITE, parse_poly("y^2 - x^3")) == (2, 1, 1)
    assert strict_transform_profile(SATELLITE, parse_poly("y^2 - x^3")) == (0, 0, 1)


def test_ord_equals_lattice_route_small():
    # a compact version of the acceptance oracle: clusters of <= 3 points
    polys = sample_family()
    structures = [c for c in enumerate_proximity_structures(3)]
    count = 0
    for structure in structures:
        for cluster in enumerate_tangent_assignments(structure, TANGENT_POOL):
            rows = curvette_order_rows(cluster)
            for g in polys:
                t = strict_transform_profile(cluster, g)
                for e in range(cluster.n):
                    lattice = sum(rows[e][i] * t[i] for i in range(cluster.n))
                    assert ord_poly(cluster, g, e) == lattice
                    count += 1
    assert count > 1000


def test_compare_examples():
    assert compare(CHAIN2, 0, 1) is Comparison.LESS_EQ
    assert compare(CHAIN2, 1, 0) is Comparison.GREATER_EQ
    assert compare(CHAIN2, 1, 1) is Comparison.EQUAL
    assert compare(SATELLITE, 0, 1) is Comparison.LESS_EQ
    assert compare(SATELLITE, 1, 2) is Comparison.LESS_EQ
    assert compare(SATELLITE, 0, 2) is Comparison.LESS_EQ
    assert compare(TWO_DIRECTIONS, 1, 2) is Comparison.INCOMPARABLE


def test_compare_monotone_along_ancestry():
    for cluster in enumerate_proximity_structures(5):
        for f in range(1, cluster.n):
            for e in (0,) + cluster.proximities(f):
                assert compare(cluster, e, f) is Comparison.LESS_EQ


def test_compare_uses_minimal_joint_model():
    # an unrelated extra point must not change the comparison
    cluster = BlowupCluster.from_specs(
        [(None,), (0, None, Fraction(0)), (0, None, Fraction(1)), (1,)]
    )
    assert compare(cluster, 1, 2) is Comparison.INCOMPARABLE
    assert compare(cluster, 0, 3) is Comparison.LESS_EQ


def test_curvette_polynomial_free_point():
    g = curvette_polynomial(TWO_DIRECTIONS, 2)
    assert [ord_poly(TWO_DIRECTIONS, g, k) for k in range(3)] == [1, 1, 2]


def test_curvette_polynomial_satellite_is_a_cusp():
    g = curvette_polynomial(SATELLITE, 2)
    assert [ord_poly(SATELLITE, g, k) for k in range(3)] == [2, 3, 6]
    assert g.multiplicity() == 2


def test_curvette_polynomial_origin():
    g = curvette_polynomial(cluster_fixture("chain1"), 0)
    assert g.multiplicity() == 1


def test_curvette_polynomial_deep_chain():
    chain4 = cluster_fixture("chain4")
    g = curvette_polynomial(chain4, 3)
    assert [ord_poly(chain4, g, k) for k in range(4)] == [1, 2, 3, 4]


def test_curvette_polynomial_needs_tangents():
    bare = BlowupCluster.from_specs([(None,), (0,)])
    with pytest.raises(ValidationError):
        curvette_polynomial(bare, 1)
