#!/usr/bin/env python3
"""Homology of braid groups modulo their centers, with sign coefficients.

The quotient of the n-strand braid group by its center has a labelled
configuration-space model: the weight-n slice of the sphere-labelled
algebra, with degrees shifted down by n times the sphere dimension, times
a polynomial circle factor.  The sphere dimension drops out of the shifted
degrees, which is the q-stability on display below.
Run me: python3 demos/03_braid_quotients.py
"""

from confhom import (
    default_degree_bound,
    equivariant_s1,
    sign_rep_homology,
    sphere_labelled_generators,
    trivial_rep_homology_p2,
    verify_q_stability,
)

print("Sphere-labelled generators at p = 3 over a 3-sphere (q = 1):")
for g in sphere_labelled_generators(3, 3, 9):
    shifted = g.degree - 3 * g.weight
    print(f"  {g.name:<5} weight {g.weight}  degree {g.degree:>2}  shifted degree {shifted}")
print("The shifted degrees p^i - 1 and p^i - 2 do not depend on the sphere.")

# Two strands: the quotient is the cyclic group of order two and the sign
# action kills everything at odd p.
print("\nsign coefficients, 2 strands, p = 3:", sign_rep_homology(2, 3, 0, 10).to_pairs())

# Three strands: the quotient is the free product of cyclic groups of
# orders 2 and 3; only the order-3 part survives, one dimension in every
# positive degree.
print("sign coefficients, 3 strands, p = 3:", sign_rep_homology(3, 3, 0, 10).to_pairs())

# q-stability: any odd sphere computes the same answer.
for n in (3, 6):
    report = verify_q_stability(n, 3, [0, 1, 2, 3])
    print(f"q-stability at n = {n}: {'stable' if report.passed else 'BROKEN'}")

# At p = 2 the sign representation is trivial, and the even-sphere route
# must reproduce the circle-equivariant computation.
print("\nmod-2 cross-check (labelled route vs equivariant dispatcher):")
for n in (2, 5, 8):
    bound = default_degree_bound(n)
    labelled = trivial_rep_homology_p2(n, 1, bound)
    equivariant = equivariant_s1(n, 2, bound).dims
    tag = "agree" if labelled == equivariant else "DISAGREE"
    print(f"  n = {n}: {tag}; dims through degree 6: {labelled.truncate(6).to_pairs()}")
