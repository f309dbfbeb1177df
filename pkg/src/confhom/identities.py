"""Combinatorial identities between the weight-graded monomial bases.

The heart is an explicit substitution of variables turning the bases of
weights p*q and q+1 into the basis of weight p(q+1), a vector-space (not
graded) bijection.  With it come the trichotomy classifying every monomial
of a fixed weight, and the resulting dimension identity

    d(p*q) = d(q) + d(q-1) + ... + d(0),    d(p*q + 1) = d(p*q).

All of these are verified by exhaustive enumeration over the stated
ranges rather than trusted.
"""

from __future__ import annotations

from enum import Enum

from .algebra import (
    KIND_ALPHA,
    KIND_BETA,
    KIND_IOTA,
    KIND_Q_IOTA,
    KIND_U,
    Monomial,
    alpha_gen,
    as_prime,
    beta_gen,
    iota,
    q_iota,
    u_class,
)
from .catalog import plane_config_generators
from .enumeration import monomial_basis, total_dim
from .reports import VerifyReport


class MonomialForm(Enum):
    DIVISIBLE_BY_IOTA_P = "divisible_by_iota_p"
    IOTA_POWER_TIMES_ALPHA_BETA = "iota_power_times_alpha_beta"
    IOTA_POWER_U_TIMES_ALPHA_BETA = "iota_power_u_times_alpha_beta"


SOURCE_WEIGHT_PQ = "weight_pq"
SOURCE_WEIGHT_Q_PLUS_1 = "weight_q_plus_1"


class InvariantViolation(RuntimeError):
    """A structural fact the classification proof guarantees failed to hold."""


def bijection_image(m: Monomial, source: str, p, q: int) -> Monomial:
    """Image of a basis monomial under the weight-shifting substitution.

    From weight p*q the monomial is multiplied by the p-th power of the
    point class.  From weight q+1 the substitution raises every tower
    letter by one level, sends the weight-2 odd class to the first
    exterior tower letter, and expands the point-class power k as
    b1^l (k = 2l) or b1^l u i^(p-2) (k = 2l + 1); at p = 2 the point class
    maps to the first tower letter instead.  No signs are tracked: the map
    is a bijection of basis monomials, not a graded algebra map.
    """
    prime = as_prime(p)
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if source == SOURCE_WEIGHT_PQ:
        if m.weight != prime.p * q:
            raise ValueError(f"expected weight {prime.p * q}, got {m.weight}")
        return Monomial(m.factors + ((iota(), prime.p),))
    if source != SOURCE_WEIGHT_Q_PLUS_1:
        raise ValueError(f"unknown source {source!r}")
    if m.weight != q + 1:
        raise ValueError(f"expected weight {q + 1}, got {m.weight}")

    factors: list[tuple] = []
    k = 0
    for g, e in m.factors:
        if g.kind == KIND_IOTA:
            k = e
        elif g.kind == KIND_U:
            factors.append((alpha_gen(1, prime), e))
        elif g.kind == KIND_ALPHA:
            factors.append((alpha_gen(g.index + 1, prime), e))
        elif g.kind == KIND_BETA:
            factors.append((beta_gen(g.index + 1, prime), e))
        elif g.kind == KIND_Q_IOTA:
            factors.append((q_iota(g.index + 1), e))
        else:
            raise ValueError(f"not a plane-configuration monomial: {m.text()}")
    if prime.p == 2:
        if k:
            factors.append((q_iota(1), k))
    else:
        l, r = divmod(k, 2)
        if l:
            factors.append((beta_gen(1, prime), l))
        if r:
            factors.append((u_class(prime), 1))
            factors.append((iota(), prime.p - 2))
    image = Monomial(factors)
    if image.weight != prime.p * (q + 1):
        raise InvariantViolation(
            f"substitution image of {m.text()} has weight {image.weight}, "
            f"expected {prime.p * (q + 1)}"
        )
    return image


def verify_bijection(p, q: int) -> VerifyReport:
    """Apply the substitution to both source bases and check it is a bijection
    onto the weight-p(q+1) basis."""
    prime = as_prime(p)
    target_weight = prime.p * (q + 1)
    gens = plane_config_generators(prime, max(target_weight, 1))
    src_pq = monomial_basis(gens, prime.p * q, prime)
    src_q1 = monomial_basis(gens, q + 1, prime)
    images = [bijection_image(m, SOURCE_WEIGHT_PQ, prime, q) for m in src_pq]
    images += [bijection_image(m, SOURCE_WEIGHT_Q_PLUS_1, prime, q) for m in src_q1]
    weights_ok = all(im.weight == target_weight for im in images)
    injective = len(set(images)) == len(images)
    expected = total_dim(target_weight, prime)
    surjective = injective and weights_ok and len(images) == expected
    return VerifyReport(
        name=f"bijection p={prime.p} q={q}",
        passed=injective and surjective and weights_ok,
        details={
            "injective": injective,
            "surjective": surjective,
            "counts": {
                "weight_pq_source": len(src_pq),
                "weight_q_plus_1_source": len(src_q1),
                "images": len(images),
                "target_dim": expected,
            },
        },
    )


def classify_monomial(m: Monomial, p, n: int) -> MonomialForm:
    """Classify a weight-n basis monomial into the trichotomy.

    Priority: divisible by the p-th power of the point class; else u-free
    with point-class exponent n mod p; else carrying u with point-class
    exponent (n - 2) mod p.  The classification is total; a monomial
    fitting no form raises InvariantViolation (which must never happen).
    """
    prime = as_prime(p)
    if m.weight != n:
        raise ValueError(f"monomial has weight {m.weight}, expected {n}")
    allowed = {KIND_IOTA, KIND_Q_IOTA} if prime.p == 2 else {KIND_IOTA, KIND_U, KIND_ALPHA, KIND_BETA}
    if any(g.kind not in allowed for g, _ in m.factors):
        raise ValueError(f"not a plane-configuration monomial: {m.text()}")
    k = m.exponent_of_kind(KIND_IOTA)
    if k >= prime.p:
        return MonomialForm.DIVISIBLE_BY_IOTA_P
    if m.exponent_of_kind(KIND_U) == 0:
        if k != n % prime.p:
            raise InvariantViolation(
                f"u-free monomial {m.text()} has point-class exponent {k}, expected {n % prime.p}"
            )
        return MonomialForm.IOTA_POWER_TIMES_ALPHA_BETA
    if k != (n - 2) % prime.p:
        raise InvariantViolation(
            f"monomial {m.text()} has point-class exponent {k}, expected {(n - 2) % prime.p}"
        )
    return MonomialForm.IOTA_POWER_U_TIMES_ALPHA_BETA


def verify_dimension_identity(p, q_max: int) -> VerifyReport:
    """Check d(p*q) = d(q) + ... + d(0) and d(p*q + 1) = d(p*q) for q <= q_max."""
    prime = as_prime(p)
    if q_max < 0:
        raise ValueError(f"q_max must be >= 0, got {q_max}")
    rows = []
    ok = True
    partial = 0
    for q in range(q_max + 1):
        partial += total_dim(q, prime)
        d_pq = total_dim(prime.p * q, prime)
        d_pq1 = total_dim(prime.p * q + 1, prime)
        good = d_pq == partial and d_pq1 == d_pq
        ok = ok and good
        rows.append(
            {"q": q, "d_pq": d_pq, "partial_sum": partial, "d_pq_plus_1": d_pq1, "ok": good}
        )
    return VerifyReport(
        name=f"dimension-identity p={prime.p} q<={q_max}",
        passed=ok,
        details={"rows": rows},
    )
