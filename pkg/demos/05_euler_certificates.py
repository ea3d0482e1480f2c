#!/usr/bin/env python3
"""Walkthrough: Euler-characteristic contradiction certificates.

Given a decorated graph, non-negative coefficients for the exceptional
part of a limit divisor, and the component crossed by the strict
transform of the special member, three integer bounds assemble exactly
into one final bound.  Below one, a nearby member of the family cannot
normalize to a disk.
"""

from nasharc import (
    DualGraph,
    EulerInput,
    b0_bound,
    balls_bound,
    contradiction_certificate,
    final_bound,
    standard_fixture,
    tubes_bound,
)


def inspect(data, title):
    print(f"== {title} ==")
    print("  attachment ball bound:", b0_bound(data))
    print("  crossing balls bound: ", balls_bound(data))
    print("  tubes bound:          ", tubes_bound(data))
    print("  final bound:          ", final_bound(data))
    cert = contradiction_certificate(data)
    if cert.minimality_flags:
        print("  withheld: minimality flags on vertices", list(cert.minimality_flags))
    elif cert.contradicts_disk:
        print("  certificate fires: no disk normalization is possible")
    else:
        print("  no contradiction at these coefficients")
    print()


inspect(EulerInput(standard_fixture("A1"), (1,), 0), "A1 with unit coefficient")
inspect(EulerInput(standard_fixture("A2"), (1, 1), 0), "A2 with coefficients (1, 1)")
inspect(
    EulerInput(standard_fixture("E8"), (1, 0, 0, 0, 0, 0, 0, 0), 0),
    "E8 with a unit coefficient at the attachment",
)
inspect(
    EulerInput(standard_fixture("E8"), (3, 2, 3, 1, 2, 3, 2, 1), 0),
    "E8 with a heavier divisor",
)

# a genus-one component of self-intersection -1 contributes -1 on its own
inspect(EulerInput(DualGraph.build([(0, -1, 1)]), (1,), 0), "a genus-one (-1)-curve")

# a rational (-1)-vertex makes the model non-minimal: the certificate is withheld
inspect(
    EulerInput(DualGraph.build([(0, -1), (1, -3)], [(0, 1)]), (1, 1), 0),
    "a rational (-1)-vertex trips the minimality guard",
)
