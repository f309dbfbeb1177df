"""Generator sets and bases for the specific spaces the package computes.

Covered: unordered configurations of the plane, plane configurations with
labels in a sphere, configurations of the punctured plane, and the fixed
points of the rotation of order p.  Sphere catalogs are produced twice, by
closed form and through the brackets module, and cross-checked on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    Generator,
    Monomial,
    alpha_gen,
    as_prime,
    beta_gen,
    iota,
    q_iota,
    sphere_bq,
    sphere_q,
    u_class,
)
from .brackets import (
    LabelClass,
    bracket_as_generator,
    bracket_of,
    cohen_generators,
    enumerate_basic_brackets,
    leaf,
)
from .enumeration import monomial_basis


class UnsupportedCaseError(ValueError):
    """A mathematically out-of-scope request (not an invalid argument)."""


SPACE_PLANE = "plane"
SPACE_SPHERE_LABELLED = "sphere_labelled"
SPACE_PUNCTURED_PLANE = "punctured_plane"
SPACE_FIXED_POINTS = "fixed_points"


@dataclass(frozen=True)
class SpaceSpec:
    """One of the supported spaces; `m` is the sphere dimension when labelled."""

    kind: str
    m: Optional[int] = None

    def validate(self, p) -> None:
        prime = as_prime(p)
        if self.kind == SPACE_SPHERE_LABELLED:
            if self.m is None or self.m < 1:
                raise ValueError("sphere dimension m >= 1 required")
            if self.m % 2 == 0 and prime.p != 2:
                raise UnsupportedCaseError(
                    f"even sphere labels (m={self.m}) are only supported at p = 2; "
                    "for odd p the labelled homology does not stabilize injectively"
                )
        elif self.kind not in (SPACE_PLANE, SPACE_PUNCTURED_PLANE, SPACE_FIXED_POINTS):
            raise ValueError(f"unknown space kind: {self.kind}")


def plane_config_generators(p, weight_bound: int) -> list[Generator]:
    """Generators of the plane configuration algebra up to the weight bound.

    Odd p: the point class, the weight-2 odd class, and the weight-2p^i
    pairs (polynomial of degree 2p^i - 2, exterior of degree 2p^i - 1).
    p = 2: the point class and its degree-raising tower.
    """
    prime = as_prime(p)
    if weight_bound < 1:
        raise ValueError(f"weight_bound must be >= 1, got {weight_bound}")
    gens = [iota()]
    if prime.p == 2:
        i = 1
        while 2**i <= weight_bound:
            gens.append(q_iota(i))
            i += 1
    else:
        if 2 <= weight_bound:
            gens.append(u_class(prime))
        i = 1
        while 2 * prime.p**i <= weight_bound:
            gens.append(beta_gen(i, prime))
            gens.append(alpha_gen(i, prime))
            i += 1
    return gens


def sphere_labelled_generators(p, m: int, weight_bound: int) -> list[Generator]:
    """Generators for plane configurations with labels in an m-sphere.

    Odd p (m odd): the tower over the fundamental class, weight p^i and
    degree p^i(m+1) - 1, plus its Bockstein (degree one lower) for i >= 1.
    p = 2 (any m >= 1): the tower alone, weight 2^i and degree 2^i(m+1) - 1.
    Even m with odd p is out of scope.
    """
    prime = as_prime(p)
    SpaceSpec(SPACE_SPHERE_LABELLED, m).validate(prime)
    if weight_bound < 1:
        raise ValueError(f"weight_bound must be >= 1, got {weight_bound}")
    gens: list[Generator] = []
    i = 0
    while prime.p**i <= weight_bound:
        gens.append(sphere_q(i, m, prime))
        if prime.p != 2 and i >= 1:
            gens.append(sphere_bq(i, m, prime))
        i += 1
    gens.sort(key=lambda g: g.rank)

    # Redundant derivation through the brackets module guards the closed forms.
    tower = cohen_generators(
        enumerate_basic_brackets([LabelClass("s", m)], 1, prime), prime, weight_bound
    )
    if sorted((g.weight, g.degree) for g in gens) != sorted((g.weight, g.degree) for g in tower):
        raise AssertionError("sphere generator closed forms disagree with the bracket tower")
    return gens


def _white_bracket(j: int, p) -> Generator:
    """The iterated bracket with j black leaves and one white leaf (weight j + 1, degree j)."""
    black = leaf(LabelClass("a", 0))
    expr = leaf(LabelClass("b", 0))
    for _ in range(j):
        expr = bracket_of(black, expr)
    return bracket_as_generator(expr, p)


def punctured_plane_basis(q: int, p) -> list[Monomial]:
    """Basis of the homology of configurations of q points in the punctured plane.

    The basis is the union over j = 0..q of the iterated one-white-leaf
    bracket of degree j times the weight-(q - j) plane monomials; the
    bracket factor is kept symbolic.  Total dimension is the sum of the
    plane dimensions d(0) + ... + d(q).
    """
    prime = as_prime(p)
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    plane = plane_config_generators(prime, max(q, 1))
    out: list[Monomial] = []
    for j in range(q + 1):
        w = _white_bracket(j, prime)
        for m in monomial_basis(plane, q - j, prime):
            out.append(Monomial(m.factors + ((w, 1),)))
    out.sort(key=Monomial.sort_key)
    return out


def fixed_point_total_dim(n: int, p) -> int:
    """Total homology dimension of the order-p rotation fixed points in
    weight n; defined when n is 0 or 1 mod p, where the fixed-point space
    is a punctured-plane configuration space of floor(n/p) points."""
    prime = as_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % prime.p not in (0, 1):
        raise UnsupportedCaseError(
            f"fixed points computed only for n = 0, 1 mod p (got n={n}, p={prime.p})"
        )
    return len(punctured_plane_basis(n // prime.p, prime))


def generators_for(space: SpaceSpec, p, weight_bound: int) -> list[Generator]:
    """Dispatch to the generator catalog of a space with its own generators."""
    space.validate(p)
    if space.kind == SPACE_PLANE:
        return plane_config_generators(p, weight_bound)
    if space.kind == SPACE_SPHERE_LABELLED:
        return sphere_labelled_generators(p, space.m, weight_bound)
    raise ValueError(f"{space.kind} has a basis catalog, not a generator catalog")
