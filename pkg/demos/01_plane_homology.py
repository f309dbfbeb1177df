#!/usr/bin/env python3
"""Tour of the mod-p homology of unordered configuration spaces of the plane.

The homology of the disjoint union of all these spaces is a free
graded-commutative algebra on a short list of generators.  Each generator
carries a weight (how many points it involves) and a homological degree,
and the weight-n slice of the algebra is the homology of the n-point space.
Run me: python3 demos/01_plane_homology.py
"""

from confhom import (
    monomial_basis,
    plane_config_generators,
    poincare,
    punctured_plane_basis,
    series_coefficient,
    total_dim,
)

P = 3

print(f"Generators over F_{P} up to weight 18 (name, weight, degree):")
for g in plane_config_generators(P, 18):
    kind = "exterior" if g.exterior else "polynomial"
    print(f"  {g.name:<4} weight {g.weight:>2}  degree {g.degree:>2}  ({kind})")

# The nine-point space: its basis monomials and their degrees.
print("\nBasis of the weight-9 slice:")
gens = plane_config_generators(P, 9)
for m in monomial_basis(gens, 9, P):
    print(f"  {m.text():<8} degree {m.degree}")

# Poincare polynomial, computed by explicit enumeration...
dims = poincare(gens, 9, P)
poly = " + ".join(f"{v}t^{d}" if v > 1 else f"t^{d}" for d, v in dims.to_pairs())
print(f"\nPoincare polynomial of the weight-9 slice: {poly}")

# ... and re-computed from the two-variable Hilbert series of the algebra.
assert dims == series_coefficient(gens, 9, 64, P)
print("The generating-function route gives the same coefficients.")

# Total dimensions d(n) satisfy d(p*q) = d(q) + d(q-1) + ... + d(0) and
# repeat once more at p*q + 1.
print(f"\nTotal dimensions d(n) over F_{P}:")
row = [total_dim(n, P) for n in range(13)]
print("  n    : " + " ".join(f"{n:>3}" for n in range(13)))
print("  d(n) : " + " ".join(f"{v:>3}" for v in row))
for q in range(4):
    lhs = total_dim(P * q, P)
    rhs = sum(total_dim(i, P) for i in range(q + 1))
    print(f"  d({P}*{q}) = {lhs} = d(0) + ... + d({q}) = {rhs}")

# Configurations in the punctured plane: a symbolic bracket with one white
# leaf times a plane monomial; the total dimension telescopes.
print("\nBasis for 3 points in the punctured plane:")
for m in punctured_plane_basis(3, P):
    print(f"  {m.text():<16} degree {m.degree}")
print(f"  total {len(punctured_plane_basis(3, P))} = d(3)+d(2)+d(1)+d(0)")
