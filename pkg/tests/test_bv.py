"""The BV operator, its matrix, the spectral-sequence page, and the dispatcher."""

import pytest

from confhom import (
    GradedDims,
    Monomial,
    REGIME_COKER_DELTA,
    REGIME_TENSOR_BS1,
    UnsupportedCaseError,
    collapse_total_degree,
    default_degree_bound,
    delta,
    delta_element,
    delta_matrix,
    equivariant_s1,
    equivariant_zp,
    gravity_op_degree,
    monomial_basis,
    plane_config_generators,
    serre_e3,
)
from confhom.algebra import alpha_gen, beta_gen, iota, q_iota, u_class


def mono(*pairs):
    return Monomial(pairs)


def test_delta_closed_form_small_cases():
    i, u = iota(), u_class(3)
    # Delta(i^2) = 2u with the k(k-1) coefficient taken verbatim; the image
    # is a nonzero multiple of u in any normalization
    image = delta(mono((i, 2)), 3)
    assert image.terms == {mono((u, 1)): 2}
    # Delta(i^5) at p = 3: coefficient 5*4 = 20 = 2 mod 3
    assert delta(mono((i, 5)), 3).terms == {mono((i, 3), (u, 1)): 2}
    # u kills everything
    a1 = alpha_gen(1, 3)
    assert delta(mono((i, 4), (u, 1), (a1, 1)), 3).is_zero()
    # k < 2 or k(k-1) = 0 mod p
    assert delta(mono((i, 1)), 3).is_zero()
    assert delta(mono((i, 3), (beta_gen(1, 3), 1)), 3).is_zero()
    assert delta(Monomial(), 3).is_zero()


def test_delta_identically_zero_at_p2():
    gens = plane_config_generators(2, 12)
    for n in range(13):
        for m in monomial_basis(gens, n, 2):
            assert delta(m, 2).is_zero()


def test_delta_rejects_foreign_monomials():
    with pytest.raises(ValueError):
        delta(mono((q_iota(1), 1)), 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_delta_squares_to_zero_and_grades(p):
    for n in range(25):
        gens = plane_config_generators(p, max(n, 1))
        for m in monomial_basis(gens, n, p):
            image = delta(m, p)
            for mm in image.terms:
                assert mm.weight == m.weight
                assert mm.degree == m.degree + 1
            assert delta_element(image).is_zero()


def test_delta_matrix_small_cases():
    m = delta_matrix(2, 3, 0)
    assert m.a.tolist() == [[2]]
    m5 = delta_matrix(5, 3, 0)
    assert m5.a.tolist() == [[2]]
    # n = 0, 1 mod p: zero in every degree
    for n in (3, 6, 7, 9):
        gens = plane_config_generators(3, n)
        top = max(m.degree for m in monomial_basis(gens, n, 3))
        assert all(delta_matrix(n, 3, d).is_zero() for d in range(top + 1))


@pytest.mark.parametrize("p", [3, 5])
def test_regime_dichotomy_and_ufree_counts(p):
    for n in range(25):
        gens = plane_config_generators(p, max(n, 1))
        mons = monomial_basis(gens, n, p)
        top = max((m.degree for m in mons), default=0)
        zero = all(delta_matrix(n, p, d).is_zero() for d in range(top + 1))
        assert zero == (n % p in (0, 1))
        if zero:
            continue
        u_free = [m for m in mons if not m.contains_kind("u")]
        u_carrying = [m for m in mons if m.contains_kind("u")]
        assert len(u_free) == len(u_carrying)
        # rank route: the operator is injective on u-free monomials and its
        # image is the span of the u-carrying ones, degree by degree
        for d in range(top + 1):
            mat = delta_matrix(n, p, d)
            src_ufree = sum(1 for m in mons if m.degree == d and not m.contains_kind("u"))
            tgt_ucarry = sum(1 for m in mons if m.degree == d + 1 and m.contains_kind("u"))
            assert mat.rank() == src_ufree == tgt_ucarry


def test_equivariant_s1_tensor_regime():
    ans = equivariant_s1(2, 2, 8)
    assert ans.regime == REGIME_TENSOR_BS1
    assert ans.dims == GradedDims({d: 1 for d in range(9)})
    # weight-9 series from the frozen degree table {0,1,4,5,5,6}
    table = {0: 1, 1: 1, 4: 1, 5: 2, 6: 1}
    bound = default_degree_bound(9)
    expected = {}
    for d, k in table.items():
        for dd in range(d, bound + 1, 2):
            expected[dd] = expected.get(dd, 0) + k
    ans9 = equivariant_s1(9, 3)
    assert ans9.regime == REGIME_TENSOR_BS1
    assert ans9.dims == GradedDims(expected)


def test_equivariant_s1_coker_regime():
    ans = equivariant_s1(2, 3)
    assert ans.regime == REGIME_COKER_DELTA
    assert ans.dims == GradedDims({0: 1})
    assert [m.text() for m in ans.basis] == ["i^2"]
    # coker basis never contains the weight-2 odd class
    for n in (5, 8, 11):
        for m in equivariant_s1(n, 3).basis:
            assert not m.contains_kind("u")


def test_equivariant_zp():
    assert equivariant_zp(3, 3, 6) == GradedDims({0: 1, 1: 2, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2})
    assert equivariant_zp(0, 5, 5) == GradedDims({d: 1 for d in range(6)})
    assert equivariant_zp(2, 2, 4) == GradedDims({0: 1, 1: 2, 2: 2, 3: 2, 4: 2})
    with pytest.raises(UnsupportedCaseError):
        equivariant_zp(5, 3)
    with pytest.raises(UnsupportedCaseError):
        equivariant_zp(7, 5)


def test_serre_e3_examples():
    # n = 5, p = 3: everything collapses to the base column
    page = serre_e3(5, 3, 12)
    assert all(j == 0 for (_, j) in page.dims)
    gens = plane_config_generators(3, 5)
    u_free = GradedDims.of_degrees(
        m.degree for m in monomial_basis(gens, 5, 3) if not m.contains_kind("u")
    )
    assert GradedDims({i: v for (i, _), v in page.dims.items()}) == u_free
    # n = 6, p = 3: the differential vanishes and the page is the product
    page6 = serre_e3(6, 3, 10)
    dims6 = poincare6 = GradedDims.of_degrees(
        m.degree for m in monomial_basis(plane_config_generators(3, 6), 6, 3)
    )
    for (i, j), v in page6.dims.items():
        assert v == dims6[i] and i + 2 * j <= 10
    # n = 1: a point's homology, nothing to differentiate
    page1 = serre_e3(1, 3, 6)
    assert page1.dims == {(0, j): 1 for j in range(4)}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_serre_agrees_with_dispatcher(p):
    for n in range(17):
        bound = default_degree_bound(n)
        collapsed = collapse_total_degree(serre_e3(n, p, bound))
        assert collapsed == equivariant_s1(n, p, bound).dims


@pytest.mark.parametrize("p", [3, 5])
def test_serre_e3_closed_form_oracle(p):
    # the rank computation must land on the closed form: the full product
    # page when n is 0 or 1 mod p, and otherwise everything pushed into
    # the base column with the u-free counts
    for n in range(13):
        bound = default_degree_bound(n)
        page = serre_e3(n, p, bound)
        gens = plane_config_generators(p, max(n, 1))
        mons = monomial_basis(gens, n, p)
        fiber = GradedDims.of_degrees(m.degree for m in mons)
        if n % p in (0, 1):
            expected = {
                (i, j): v
                for i, v in fiber.dims.items()
                for j in range((bound - i) // 2 + 1)
            }
            assert page.dims == expected
        else:
            u_free = GradedDims.of_degrees(
                m.degree for m in mons if not m.contains_kind("u")
            )
            assert page.dims == {(i, 0): v for i, v in u_free.dims.items()}


def test_gravity_op_degree():
    assert gravity_op_degree(0, 2, 0, "even") == 1
    assert gravity_op_degree(0, 3, 1, "odd") == 4
    assert gravity_op_degree(4, 3, 0, "even") == 5
    with pytest.raises(ValueError):
        gravity_op_degree(0, 2, 1, "even")
    with pytest.raises(ValueError):
        gravity_op_degree(0, 2, 2, "odd")
