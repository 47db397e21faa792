"""Frobenius algebra axioms, Nakayama rotation, face labels, sigma vectors."""

from __future__ import annotations

from fractions import Fraction

import pytest

from stringnet.category import (
    CategoryParams,
    GradedMorphism,
    compose,
    dual_morphism,
    tensor_morphisms,
    unit_object,
)
from stringnet.cyclotomic import CycNum, zeta_power
from stringnet.frobenius import (
    FrobeniusAlgebraData,
    InadmissibleMarkingError,
    UnsupportedComplexError,
    _mu_power,
    chi,
    face_and_edge_labels,
    frobenius_zr,
    nakayama,
    rotate_pair,
    sigma_F,
)
from stringnet.linalg import rank_cyc
from stringnet.rspin import (
    MarkedPLCW,
    enumerate_admissible,
    sphere_decomposition,
    standard_decomposition,
)
from stringnet.spaces import tilde_bp_operator


def test_axioms_hold_up_to_r8():
    # the constructor asserts every axiom, so building is the test
    for r in range(1, 9):
        frobenius_zr(CategoryParams(r))


def test_structure_constants():
    fd = frobenius_zr(CategoryParams(3))
    assert fd.mu.matrix[2][1 * 3 + 1] == CycNum.one(3)
    assert fd.mu.matrix[0][1 * 3 + 1] == CycNum.zero(3)
    assert fd.eta.matrix[0][0] == CycNum.one(3)
    assert fd.delta.matrix[1 * 3 + 1][2] == CycNum.from_rational(3, Fraction(1, 3))
    assert fd.eps.matrix[0][0] == CycNum.from_rational(3, 3)
    assert fd.eps.matrix[0][1] == CycNum.zero(3)


def test_unnormalized_counit_rejected():
    # dropping the factor r from eps breaks the counit axiom
    params = CategoryParams(2)
    good = frobenius_zr(params)
    bad_eps = GradedMorphism.from_entries(
        good.object, unit_object(2), {(0, 0): CycNum.one(2)}
    )
    with pytest.raises(AssertionError):
        FrobeniusAlgebraData(params, good.object, good.mu, good.eta, good.delta, bad_eps)


def test_nakayama_closed_form_and_order():
    for r in range(1, 7):
        params = CategoryParams(r)
        fd = frobenius_zr(params)
        pair = nakayama(fd)
        for a in range(r):
            assert pair.forward.matrix[a][a] == params.zeta(-a)
            assert pair.inverse.matrix[a][a] == params.zeta(a)
        assert compose(pair.inverse, pair.forward) == GradedMorphism.identity(fd.object)
        acc = GradedMorphism.identity(fd.object)
        for _ in range(r):
            acc = compose(pair.forward, acc)
        assert acc == GradedMorphism.identity(fd.object)


def test_nakayama_trivial_at_r1():
    fd = frobenius_zr(CategoryParams(1))
    assert nakayama(fd).forward == GradedMorphism.identity(fd.object)


def test_mu_power_validation_and_base():
    fd = frobenius_zr(CategoryParams(2))
    assert _mu_power(fd, 1) == GradedMorphism.identity(fd.object)
    assert _mu_power(fd, 2) == fd.mu
    with pytest.raises(ValueError):
        _mu_power(fd, 0)


def test_face_label_n1_is_dual_counit():
    for r in (1, 2, 3):
        fd = frobenius_zr(CategoryParams(r))
        m1, _ = face_and_edge_labels(1, 0, fd)
        assert m1 == dual_morphism(fd.eps)


def test_edge_label_u0_is_delta_eta():
    for r in (1, 2, 3, 4):
        fd = frobenius_zr(CategoryParams(r))
        _, e0 = face_and_edge_labels(1, 0, fd)
        assert e0 == compose(fd.delta, fd.eta)


def test_edge_label_closed_form():
    # E_u = (1/r) sum_b zeta^{-ub} 1_b (x) 1_{-b}
    r = 4
    fd = frobenius_zr(CategoryParams(r))
    for u in range(r):
        _, e_u = face_and_edge_labels(1, u, fd)
        for b in range(r):
            for c in range(r):
                got = e_u.matrix[b * r + c][0]
                if c == (-b) % r:
                    assert got == zeta_power(r, -u * b) * Fraction(1, r)
                else:
                    assert got == CycNum.zero(r)


def test_rotation_shifts_edge_label():
    # rotating E_s around the back gives E_{-s-1}
    for r in (1, 2, 3, 4):
        fd = frobenius_zr(CategoryParams(r))
        for s in range(r):
            _, e_s = face_and_edge_labels(1, s, fd)
            _, e_flip = face_and_edge_labels(1, (-s - 1) % r, fd)
            assert rotate_pair(e_s, fd) == e_flip


def test_chi_closed_form():
    for r in (2, 3):
        fd = frobenius_zr(CategoryParams(r))
        for a in range(r):
            for b in range(r):
                mat = chi(a, b, fd).matrix
                for s in range(r):
                    for t in range(r):
                        for c_in in range(r):
                            for c_out in range(r):
                                got = mat[(s * r + t) * r + c_out][c_in]
                                if c_in == c_out:
                                    want = zeta_power(r, s * a + t * b) * Fraction(
                                        1, r * r
                                    )
                                else:
                                    want = CycNum.zero(r)
                                assert got == want


def test_chi_coefficient_vectors_have_full_rank():
    # the r^2 vectors v_{a,b} read off from chi span Hom(1, H)
    r = 3
    fd = frobenius_zr(CategoryParams(r))
    cols = []
    for a in range(r):
        for b in range(r):
            mat = chi(a, b, fd).matrix
            cols.append([mat[i * r][0] for i in range(r * r)])
    assert rank_cyc([[cols[j][i] for j in range(r * r)] for i in range(r * r)]) == r * r


def test_sigma_closed_form_and_rank():
    for r, genus in [(1, 1), (2, 1), (3, 1), (2, 2), (1, 3)]:
        fd = frobenius_zr(CategoryParams(r))
        complex_ = standard_decomposition(genus)
        markings = enumerate_admissible(complex_, r)
        assert len(markings) == r ** (2 * genus)
        dim = r ** (2 * genus)
        vecs = []
        for m in markings:
            v = sigma_F(m, fd)
            assert (v.r, v.genus, v.boundary_data) == (r, genus, ())
            # coord at (s_i, t_i)_i is r^{1-2g} prod_i zeta^{s_i a_i + t_i b_i}
            for flat in range(dim):
                word = []
                rest = flat
                for _ in range(2 * genus):
                    word.append(rest % r)
                    rest //= r
                word.reverse()
                exponent = sum(
                    word[2 * i] * m.edge_index[2 * i]
                    + word[2 * i + 1] * m.edge_index[2 * i + 1]
                    for i in range(genus)
                )
                want = zeta_power(r, exponent) * Fraction(1, r ** (2 * genus - 1))
                assert v.coords[flat] == want
            vecs.append(v.coords)
        assert rank_cyc([[v[i] for v in vecs] for i in range(dim)]) == dim


def test_sigma_zero_marking_is_constant_vector():
    fd = frobenius_zr(CategoryParams(3))
    m = MarkedPLCW(standard_decomposition(1), 3, {0: 0, 1: 0})
    v = sigma_F(m, fd)
    assert set(v.coords) == {CycNum.from_rational(3, Fraction(1, 3))}


def test_sigma_vectors_fixed_by_projector():
    # cross-check against the cylinder-diagram projector route
    for r, genus in [(2, 1), (3, 1), (2, 2)]:
        params = CategoryParams(r)
        fd = frobenius_zr(params)
        report = tilde_bp_operator(params, genus)
        op = report.operator_matrix
        dim = r ** (2 * genus)
        for m in enumerate_admissible(standard_decomposition(genus), r):
            v = sigma_F(m, fd).coords
            image = [
                sum((op[i][j] * 1) * v[j] for j in range(dim)) for i in range(dim)
            ]
            for i in range(dim):
                assert image[i] == v[i]


def test_sigma_no_admissible_markings_when_r_misses_euler():
    assert enumerate_admissible(standard_decomposition(2), 3, cap=10000) == []


def test_sigma_rejects_inadmissible_marking():
    fd = frobenius_zr(CategoryParams(3))
    m = MarkedPLCW(standard_decomposition(2), 3, {i: 0 for i in range(4)})
    with pytest.raises(InadmissibleMarkingError) as exc:
        sigma_F(m, fd)
    assert exc.value.report.residues == {0: 2}


def test_sigma_rejects_nonstandard_complex():
    fd = frobenius_zr(CategoryParams(2))
    m = MarkedPLCW(sphere_decomposition(), 2, {0: 1})
    with pytest.raises(UnsupportedComplexError):
        sigma_F(m, fd)


def test_sigma_rejects_mismatched_r():
    fd = frobenius_zr(CategoryParams(2))
    m = MarkedPLCW(standard_decomposition(1), 3, {0: 0, 1: 0})
    with pytest.raises(ValueError, match="r=3"):
        sigma_F(m, fd)
