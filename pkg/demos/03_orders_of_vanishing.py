#!/usr/bin/env python3
"""Walkthrough: divisorial valuations by two independent routes.

Route one reads orders off the negated inverse intersection matrix: row e
lists the orders, along component e, of germs transverse to each
component.  Route two pushes an explicit polynomial germ through the
blow-up charts and accumulates multiplicities.  They must agree, and the
componentwise comparison of rows decides the order between valuations.
"""

from nasharc import (
    cluster_fixture,
    compare,
    curvette_order_rows,
    curvette_polynomial,
    multiplicities,
    ord_poly,
    parse_poly,
    strict_transform_profile,
)

chain2 = cluster_fixture("chain2")
satellite = cluster_fixture("satellite3")
twodir = cluster_fixture("twodir")

print("== curvette order rows ==")
for name, cluster in (("chain2", chain2), ("satellite3", satellite), ("twodir", twodir)):
    print(f"{name}: rows of -M^-1 = {curvette_order_rows(cluster)}")

print()
print("== orders of explicit germs on the free chain ==")
for text in ("x", "y", "y - x^2", "y^2 - x^3"):
    germ = parse_poly(text)
    orders = [ord_poly(chain2, germ, e) for e in range(2)]
    print(
        f"g = {text:<10} orders {orders}, strict-transform multiplicities "
        f"{multiplicities(chain2, germ)}, crossing profile "
        f"{strict_transform_profile(chain2, germ)}"
    )

print()
print("== the cusp picks out the satellite component ==")
cusp = parse_poly("y^2 - x^3")
print("orders of the cusp on the satellite triple:", [ord_poly(satellite, cusp, e) for e in range(3)])
print("which equals the last row of -M^-1:", curvette_order_rows(satellite)[2])

print()
print("== comparing valuations ==")
print("chain2, components 0 vs 1:", compare(chain2, 0, 1).value)
print("satellite3, components 0 vs 2:", compare(satellite, 0, 2).value)
print("twodir, components 1 vs 2:", compare(twodir, 1, 2).value)

print()
print("== explicit curvette equations, reconstructed and checked ==")
for cluster, name, point in ((satellite, "satellite3", 2), (twodir, "twodir", 1)):
    germ = curvette_polynomial(cluster, point)
    orders = [ord_poly(cluster, germ, e) for e in range(cluster.n)]
    print(f"{name}, component {point}: g = {germ}, orders {orders}")
