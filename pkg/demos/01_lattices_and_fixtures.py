#!/usr/bin/env python3
"""Walkthrough: resolution dual graphs and their exact intersection lattices.

Builds a few decorated graphs, reads off their intersection matrices,
tests negative definiteness with exact leading minors, and inspects the
sign pattern of the inverse matrix, which is the hinge of every
obstruction computed later in this series.
"""

from nasharc import (
    DualGraph,
    check_inverse_nonpositive,
    fixture_names,
    intersection_matrix,
    is_negative_definite,
    standard_fixture,
)

print("== a hand-built graph ==")
# two rational curves of self-intersection -2 and -3 crossing twice
graph = DualGraph.build([(0, -2), (1, -3)], [(0, 1), (0, 1)])
matrix = intersection_matrix(graph)
print("intersection matrix:", matrix)
print("negative definite:", is_negative_definite(matrix))
print("det =", matrix.determinant())

print()
print("== the ADE catalog ==")
print("available fixtures:", ", ".join(fixture_names()))
for name in ("A2", "D4", "E8"):
    graph = standard_fixture(name)
    matrix = intersection_matrix(graph)
    report = check_inverse_nonpositive(matrix)
    print(
        f"{name}: {graph.n} vertices, det = {matrix.determinant()}, "
        f"negative definite = {is_negative_definite(matrix)}, "
        f"inverse strictly negative = {report.strictly_negative}"
    )

print()
print("== why connectivity matters for strictness ==")
split = DualGraph.build([(0, -2), (1, -2)])  # no edge: two components
report = check_inverse_nonpositive(intersection_matrix(split))
print("disconnected pair: all_nonpositive =", report.all_nonpositive)
print("zero entries of the inverse:", report.zero_entries)

print()
print("== E8 inverse, the classical table ==")
inverse = intersection_matrix(standard_fixture("E8")).inverse()
for row in inverse.rows:
    print("  ", [int(v) for v in row])
