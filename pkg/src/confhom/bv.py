"""The BV operator on plane configuration homology and the circle-equivariant answers.

The operator acts on a canonical monomial written as (point class)^k *
(odd class)^eps * x, with x a product of the weight-2p^i letters, by

    iota^k x        ->  k(k-1) iota^(k-2) u x
    iota^k u x      ->  0

and is identically zero at p = 2 (k(k-1) is even).  The coefficient is the
closed form taken verbatim; it differs from the normalization fixed by
Delta(iota^2) = u by the invertible scalar 2, so every rank, kernel and
cokernel computed here is normalization-independent.

The equivariant dispatcher returns the tensor answer with the circle
classifying space when n is 0 or 1 mod p, and the cokernel of the operator
otherwise.  An independently computed spectral-sequence page
(`serre_e3`) serves as the oracle for both regimes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Element, Monomial, as_prime, iota, u_class
from .algebra import KIND_ALPHA, KIND_BETA, KIND_IOTA, KIND_Q_IOTA, KIND_U
from .catalog import UnsupportedCaseError, plane_config_generators
from .enumeration import BigradedDims, GradedDims, monomial_basis, poincare
from .linalg import FpMatrix

REGIME_TENSOR_BS1 = "tensor_bs1"
REGIME_COKER_DELTA = "coker_delta"

_PLANE_KINDS_ODD = {KIND_IOTA, KIND_U, KIND_ALPHA, KIND_BETA}
_PLANE_KINDS_TWO = {KIND_IOTA, KIND_Q_IOTA}


def default_degree_bound(n: int) -> int:
    """Truncation for the infinite tensor factors: eight periods past 2n."""
    return 2 * n + 16


@dataclass
class EquivariantAnswer:
    """Circle-equivariant homology of weight-n plane configurations.

    In the tensor regime `basis` holds (monomial, even circle degree)
    pairs up to the truncation; in the cokernel regime it holds the
    u-free monomial coset representatives (a finite, exact answer).
    """

    regime: str
    dims: GradedDims
    basis: list


def _split_plane_monomial(m: Monomial, p) -> tuple[int, int, list]:
    prime = as_prime(p)
    allowed = _PLANE_KINDS_TWO if prime.p == 2 else _PLANE_KINDS_ODD
    k = eps = 0
    rest = []
    for g, e in m.factors:
        if g.kind not in allowed:
            raise ValueError(f"not a plane-configuration monomial: {m.text()}")
        if g.kind == KIND_IOTA:
            k = e
        elif g.kind == KIND_U:
            eps = e
        else:
            rest.append((g, e))
    return k, eps, rest


def delta(m: Monomial, p) -> Element:
    """Apply the BV operator to a canonical plane-configuration monomial."""
    prime = as_prime(p)
    k, eps, rest = _split_plane_monomial(m, prime)
    if prime.p == 2 or eps:
        return Element.zero(prime)
    coeff = k * (k - 1) % prime.p
    if coeff == 0:
        return Element.zero(prime)
    image = Monomial([(iota(), k - 2), (u_class(prime), 1)] + rest)
    return Element.term(coeff, image, prime)


def delta_element(el: Element) -> Element:
    """Linear extension of the operator to F_p combinations."""
    return el.map_monomials(lambda m: delta(m, el.p))


def delta_matrix(n: int, p, degree: int, bases=None) -> FpMatrix:
    """Matrix of the BV operator from the weight-n, degree-`degree` monomial
    basis to the degree+1 basis, columns in monomial_basis order."""
    prime = as_prime(p)
    if bases is None:
        gens = plane_config_generators(prime, max(n, 1))
        all_mons = monomial_basis(gens, n, prime)
        source = [m for m in all_mons if m.degree == degree]
        target = [m for m in all_mons if m.degree == degree + 1]
    else:
        source, target = bases
    index = {m: i for i, m in enumerate(target)}
    mat = FpMatrix.zeros(len(target), len(source), prime)
    for j, m in enumerate(source):
        for image, c in delta(m, prime).terms.items():
            mat.a[index[image], j] = c
    return mat


def _by_degree(monomials) -> dict[int, list[Monomial]]:
    out: dict[int, list[Monomial]] = {}
    for m in monomials:
        out.setdefault(m.degree, []).append(m)
    return out


def equivariant_s1(n: int, p, dmax: int | None = None) -> EquivariantAnswer:
    """Circle-equivariant homology of weight-n plane configurations.

    n = 0, 1 mod p: the plane homology tensored with the homology of the
    circle classifying space, truncated at dmax.  Otherwise: the cokernel
    of the BV operator, whose basis is the u-free monomials.
    """
    prime = as_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if dmax is None:
        dmax = default_degree_bound(n)
    gens = plane_config_generators(prime, max(n, 1))
    mons = monomial_basis(gens, n, prime)
    if n % prime.p in (0, 1):
        dims = poincare(gens, n, prime).convolve_geometric(2, dmax)
        basis = [
            (m, 2 * j)
            for m in mons
            for j in range((dmax - m.degree) // 2 + 1)
            if m.degree <= dmax
        ]
        basis.sort(key=lambda pair: (pair[0].degree + pair[1], pair[0].text()))
        return EquivariantAnswer(REGIME_TENSOR_BS1, dims, basis)
    u_free = [m for m in mons if not m.contains_kind(KIND_U)]
    dims = GradedDims.of_degrees(m.degree for m in u_free)
    return EquivariantAnswer(REGIME_COKER_DELTA, dims, u_free)


def equivariant_zp(n: int, p, dmax: int | None = None) -> GradedDims:
    """Equivariant homology for the order-p rotation subgroup, computed as
    the plane homology tensored with the cyclic-group classifying space.
    Only defined for n = 0, 1 mod p."""
    prime = as_prime(p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % prime.p not in (0, 1):
        raise UnsupportedCaseError(
            f"rotation-equivariant homology is computed only for n = 0, 1 mod p "
            f"(got n={n}, p={prime.p})"
        )
    if dmax is None:
        dmax = default_degree_bound(n)
    gens = plane_config_generators(prime, max(n, 1))
    return poincare(gens, n, prime).convolve_geometric(1, dmax)


def serre_e3(n: int, p, degree_bound: int | None = None) -> BigradedDims:
    """Third page of the circle-fibration spectral sequence, computed from
    the matrix form of its second-page differential.

    Cells are indexed (fiber degree i, base column j) with the generator of
    the base in degree 2j; the differential maps column j >= 1 to column
    j - 1 raising i by one, and is the BV operator on the fiber.  Cells are
    kept while i + 2j <= degree_bound.
    """
    prime = as_prime(p)
    if degree_bound is None:
        degree_bound = default_degree_bound(n)
    gens = plane_config_generators(prime, max(n, 1))
    mons = monomial_basis(gens, n, prime)
    by_deg = _by_degree(mons)
    max_i = max(by_deg, default=0)
    ranks = {
        d: delta_matrix(n, prime, d, bases=(by_deg.get(d, []), by_deg.get(d + 1, []))).rank()
        for d in range(max_i + 1)
    }
    dims: dict[tuple[int, int], int] = {}
    for i in range(0, min(max_i, degree_bound) + 1):
        h_i = len(by_deg.get(i, []))
        if not h_i:
            continue
        rank_in = ranks.get(i - 1, 0)
        rank_out = ranks.get(i, 0)
        for j in range(0, (degree_bound - i) // 2 + 1):
            e3 = h_i - rank_in if j == 0 else h_i - rank_in - rank_out
            if e3:
                dims[(i, j)] = e3
    return BigradedDims(dims)


def collapse_total_degree(page: BigradedDims) -> GradedDims:
    """Total-degree dimensions of a spectral-sequence page, i + 2j."""
    out: dict[int, int] = {}
    for (i, j), v in page.dims.items():
        d = i + 2 * j
        out[d] = out.get(d, 0) + v
    return GradedDims(out)


def gravity_op_degree(op_degree: int, arity: int, input_degree: int, parity: str) -> int:
    """Output degree of an induced n-ary operation: m -> m*n + |Q| + 1.

    `parity` names the coefficient system the operation class lives in:
    "even" (plain coefficients, acts on even-degree classes) or "odd"
    (sign coefficients, acts on odd-degree ones); the input degree must
    match it.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if op_degree < 0 or arity < 1 or input_degree < 0:
        raise ValueError("op_degree, arity, input_degree must be sensible")
    if input_degree % 2 != (0 if parity == "even" else 1):
        raise ValueError(
            f"a {parity}-parity operation acts on {parity}-degree classes "
            f"(got input degree {input_degree})"
        )
    return input_degree * arity + op_degree + 1
