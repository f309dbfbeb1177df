"""Homology of braid-group central quotients with sign (or mod-2 trivial) coefficients.

The computation goes through fiberwise labelled configuration spaces: the
weight-n piece of the sphere-labelled configuration algebra, with every
degree shifted down by n times the sphere dimension, computes the local
homology of the braid quotient, and the line-bundle fibration contributes
a polynomial circle-classifying-space factor.  The shifted generator
degrees are p^i - 1 and p^i - 2, independent of the sphere parameter q;
`verify_q_stability` checks that independence on the computed answers.

Squaring rules in the shifted slice follow the unshifted degrees: the
shift is bookkeeping, not an algebra map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import as_prime
from .bv import default_degree_bound
from .catalog import sphere_labelled_generators
from .enumeration import GradedDims, monomial_basis
from .reports import VerifyReport


@dataclass(frozen=True)
class ShiftedWeightSlice:
    """The weight-n slice of a sphere-labelled algebra in shifted degrees.

    The shift is n times the sphere dimension (2q+1 for sign coefficients,
    2q for the mod-2 trivial route); shifted degrees are always >= 0.
    """

    n: int
    q: int
    dims: GradedDims


def shifted_weight_slice(n: int, p, q: int, sphere_dim: int) -> ShiftedWeightSlice:
    """Weight-n slice of the sphere-labelled algebra, degrees shifted down
    by n * sphere_dim."""
    prime = as_prime(p)
    gens = sphere_labelled_generators(prime, sphere_dim, max(n, 1))
    shift = sphere_dim * n
    degrees = []
    for m in monomial_basis(gens, n, prime):
        d = m.degree - shift
        if d < 0:
            raise AssertionError(f"negative shifted degree for {m.text()}")
        degrees.append(d)
    return ShiftedWeightSlice(n, q, GradedDims.of_degrees(degrees))


def sign_rep_homology(n: int, p, q: int, degree_bound: int | None = None) -> GradedDims:
    """Homology of the weight-n braid central quotient with sign coefficients.

    Computed from odd-dimensional sphere labels (dimension 2q + 1) as the
    shifted weight-n slice tensored with the circle-classifying-space
    series, truncated at degree_bound.  Any q >= 0 gives the same answer;
    at p = 2 the sign representation is the trivial one.
    """
    prime = as_prime(p)
    if n < 0 or q < 0:
        raise ValueError("n and q must be >= 0")
    if degree_bound is None:
        degree_bound = default_degree_bound(n)
    slice_ = shifted_weight_slice(n, prime, q, 2 * q + 1)
    return slice_.dims.convolve_geometric(2, degree_bound)


def trivial_rep_homology_p2(n: int, q: int, degree_bound: int | None = None) -> GradedDims:
    """Mod-2 homology of the weight-n braid central quotient, via
    even-dimensional sphere labels (dimension 2q, q >= 1).

    This is the labelled-configuration route to the same answer as the
    circle-equivariant dispatcher at p = 2; the two are compared in the
    verification suite.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 1:
        raise ValueError(f"q must be >= 1 for even sphere labels, got {q}")
    if degree_bound is None:
        degree_bound = default_degree_bound(n)
    slice_ = shifted_weight_slice(n, 2, q, 2 * q)
    return slice_.dims.convolve_geometric(2, degree_bound)


def verify_q_stability(n: int, p, q_list, degree_bound: int | None = None) -> VerifyReport:
    """Check the sign-coefficient answer is the same for every q in q_list."""
    qs = list(q_list)
    if not qs:
        raise ValueError("q_list must be nonempty")
    prime = as_prime(p)
    if degree_bound is None:
        degree_bound = default_degree_bound(n)
    answers = {q: sign_rep_homology(n, prime, q, degree_bound) for q in qs}
    first = answers[qs[0]]
    stable = all(a == first for a in answers.values())
    return VerifyReport(
        name=f"q-stability n={n} p={prime.p} q={qs}",
        passed=stable,
        details={
            "dims": first.to_pairs(),
            "mismatching_q": [q for q, a in answers.items() if a != first],
        },
    )
