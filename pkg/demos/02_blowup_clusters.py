#!/usr/bin/env python3
"""Walkthrough: blow-up clusters over a smooth surface point.

A cluster lists blow-up centers in order: free points sit on one
exceptional component, satellites on a crossing of two.  The dual graph
of the composite blow-up is simulated one center at a time, and the
proximity matrix gives the same lattice through M = -P^t P.
"""

from fractions import Fraction

from nasharc import (
    BlowupCluster,
    canonical_coeffs,
    cluster_fixture,
    germ_touch_count,
    intersection_from_proximity,
    intersection_matrix,
    minimal_joint_model,
    pair_graph,
    proximity_matrix,
    simulate,
)


def show(cluster, title):
    graph = simulate(cluster)
    print(f"== {title} ==")
    print("weights:", [v.self_int for v in graph.vertices], "edges:", list(graph.edges))
    P = proximity_matrix(cluster)
    print("proximity matrix:", P)
    print("-P^t P          :", intersection_from_proximity(P))
    print("simulated M     :", intersection_matrix(graph))
    print("canonical coefficients:", canonical_coeffs(cluster))
    print()


# the origin, then a free point on the first component
show(cluster_fixture("chain2"), "free chain of two")

# satellite: the third center sits on the crossing of components 0 and 1
show(cluster_fixture("satellite3"), "satellite triple")

# two free points in distinct directions on the first component
show(cluster_fixture("twodir"), "two directions")

print("== counting centers on a smooth germ ==")
chain4 = cluster_fixture("chain4")
print(
    "a smooth germ whose lift ends on component 3 touches",
    germ_touch_count(chain4, 3),
    "centers, the canonical coefficient",
    canonical_coeffs(chain4)[3],
)

print()
print("== minimal joint models and pair graphs ==")
cluster = BlowupCluster.from_specs(
    [
        (None,),
        (0, None, Fraction(0)),
        (0, None, Fraction(1)),
        (1, None, Fraction(0)),  # rides on component 1, irrelevant to the pair (1, 2)
    ]
)
sub = minimal_joint_model(cluster, 1, 2)
print("joint model of (1, 2) keeps", sub.n, "of", cluster.n, "points")
labeled = pair_graph(cluster, 1, 2)
for v in labeled.vertices:
    tags = ",".join(sorted(v.labels)) or "-"
    print(f"  vertex {v.id}: weight {v.self_int}, labels {tags}")
