"""Products, multiplication operators, (hom-)associators, predicates."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import NIL2, projection_tensor, qalg
from homalg.algebra import (
    Algebra,
    HomAlgebra,
    InvolutiveAlgebra,
    is_idempotent_elem,
    is_idempotent_map,
)
from homalg.constructions import truncated_poly
from homalg.errors import DimensionMismatch, InvariantViolation
from homalg.fields import QQ
from homalg.linalg import Matrix, vec_add, vec_is_zero, vec_scale


def test_zero_algebra_products():
    z = qalg([[[0, 0], [0, 0]], [[0, 0], [0, 0]]])
    x, y = (F(3), F(-1)), (F(2), F(5))
    assert vec_is_zero(z.multiply(x, y))
    assert z.left_op(x).is_zero()


def test_quaternion_products(quaternions):
    h = quaternions
    one, i, j, k = (h.basis(t) for t in range(4))
    neg = lambda v: tuple(-c for c in v)
    assert h.multiply(i, j) == k
    assert h.multiply(h.multiply(i, j), k) == neg(one)


def test_projection_algebra_bilinear_expansion(proj2):
    # (1,1) * e0 = 2 e0 by expanding bilinearity by hand
    assert proj2.multiply((F(1), F(1)), proj2.basis(0)) == (F(2), F(0))


def test_left_op_examples(proj2):
    assert proj2.left_op(proj2.basis(0)) == Matrix.identity(QQ, 2)
    tp = truncated_poly(QQ, 6)  # basis t^1..t^6
    lt = tp.left_op(tp.basis(0))
    # shift-by-one-degree nilpotent: column c maps t^(c+1) -> t^(c+2)
    for c in range(6):
        col = lt.column(c)
        expected = tuple(
            F(1) if (r == c + 1 and c + 2 <= 6) else F(0) for r in range(6)
        )
        assert col == expected


def test_right_op_column_convention(proj2):
    # column j of right_op(x) is e_j * x
    x = (F(2), F(3))
    r = proj2.right_op(x)
    for j in range(2):
        assert r.column(j) == proj2.multiply(proj2.basis(j), x)


def test_associator_vanishes_on_matrix_algebra(mat2):
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert vec_is_zero(
                    mat2.associator(mat2.basis(i), mat2.basis(j), mat2.basis(k))
                )
    assert mat2.is_associative()


def test_octonions_not_associative(octonions):
    assert octonions.associativity_witness() is not None


def test_commutator_self_is_zero(quaternions):
    for i in range(4):
        x = quaternions.basis(i)
        assert vec_is_zero(quaternions.commutator(x, x))


def test_commutator_anticommutator_decompose_product(quaternions):
    # x y = ([x,y] + {x,y}) / 2 over Q
    h = quaternions
    x, y = (F(1), F(2), F(0), F(-1)), (F(0), F(1), F(3), F(1))
    twice = vec_add(QQ, h.commutator(x, y), h.anticommutator(x, y))
    assert vec_scale(QQ, F(1, 2), twice) == h.multiply(x, y)


@st.composite
def vec2(draw):
    return tuple(F(draw(st.integers(-5, 5))) for _ in range(2))


@given(vec2(), vec2(), vec2(), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=40, deadline=None)
def test_multiply_bilinear(x, xp, y, lam, mu):
    a = qalg(projection_tensor(2))
    lhs = a.multiply(
        vec_add(QQ, vec_scale(QQ, F(lam), x), vec_scale(QQ, F(mu), xp)), y
    )
    rhs = vec_add(
        QQ,
        vec_scale(QQ, F(lam), a.multiply(x, y)),
        vec_scale(QQ, F(mu), a.multiply(xp, y)),
    )
    assert lhs == rhs
    lhs2 = a.multiply(y, vec_add(QQ, vec_scale(QQ, F(lam), x), vec_scale(QQ, F(mu), xp)))
    rhs2 = vec_add(
        QQ,
        vec_scale(QQ, F(lam), a.multiply(y, x)),
        vec_scale(QQ, F(mu), a.multiply(y, xp)),
    )
    assert lhs2 == rhs2


@given(vec2(), vec2(), vec2())
@settings(max_examples=40, deadline=None)
def test_associator_operator_identity(x, y, z):
    # associator(x, y, z) = (R_z o L_x - L_x o R_z)(y)
    a = qalg(NIL2)
    rz, lx = a.right_op(z), a.left_op(x)
    assert a.associator(x, y, z) == tuple(
        p - q for p, q in zip(rz.apply(lx.apply(y)), lx.apply(rz.apply(y)))
    )


def test_hom_associator_identity_twist_matches_associator(quaternions):
    h = HomAlgebra(quaternions, Matrix.identity(QQ, 4))
    for i in (0, 1):
        for j in (1, 2):
            for k in (2, 3):
                x, y, z = (quaternions.basis(t) for t in (i, j, k))
                assert h.hom_associator(x, y, z) == quaternions.associator(x, y, z)


def test_hom_associator_truncated_poly_shift():
    tp = truncated_poly(QQ, 6)  # t^1..t^6, truncation at t^7
    h = HomAlgebra(tp, tp.left_op(tp.basis(0)))
    assert h.is_hom_associative()


def test_hom_associator_sedenions_with_left_mult(sedenions):
    h = HomAlgebra(sedenions, sedenions.left_op(sedenions.basis(1)))
    wit = h.hom_associativity_witness()
    assert wit is not None
    i, j, k = wit
    assert not vec_is_zero(
        h.hom_associator(sedenions.basis(i), sedenions.basis(j), sedenions.basis(k))
    )


def test_is_hom_associative_examples(quaternions, nil2):
    assert HomAlgebra(quaternions, Matrix.zero(QQ, 4, 4)).is_hom_associative()
    hq = HomAlgebra(quaternions, quaternions.left_op(quaternions.basis(1)))
    assert hq.hom_associativity_witness() is not None
    # nil2: all products of products vanish, any twist works
    for mat in (Matrix.identity(QQ, 2), Matrix(QQ, [[F(1), F(2)], [F(3), F(4)]])):
        assert HomAlgebra(nil2, mat).is_hom_associative()


@given(vec2(), vec2(), vec2(), vec2(), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=30, deadline=None)
def test_hom_associator_trilinear(x, xp, y, z, lam, mu):
    a = qalg(projection_tensor(2))
    h = HomAlgebra(a, Matrix(QQ, [[F(1), F(1)], [F(0), F(2)]]))
    mix = vec_add(QQ, vec_scale(QQ, F(lam), x), vec_scale(QQ, F(mu), xp))
    lhs = h.hom_associator(mix, y, z)
    rhs = vec_add(
        QQ,
        vec_scale(QQ, F(lam), h.hom_associator(x, y, z)),
        vec_scale(QQ, F(mu), h.hom_associator(xp, y, z)),
    )
    assert lhs == rhs


def test_multiplicativity_and_idempotency(proj2, nil2):
    ident = Matrix.identity(QQ, 2)
    assert HomAlgebra(proj2, ident).is_multiplicative()
    assert is_idempotent_map(ident)
    assert is_idempotent_elem(proj2, proj2.basis(0))
    assert not is_idempotent_elem(nil2, nil2.basis(0))  # e0^2 = e1
    assert HomAlgebra(proj2, proj2.left_op(proj2.basis(0))).is_multiplicative()


def test_involutive_algebra_validates():
    a = qalg(projection_tensor(2))
    with pytest.raises(InvariantViolation):
        InvolutiveAlgebra(a, Matrix(QQ, [[F(1), F(1)], [F(0), F(1)]]))
    InvolutiveAlgebra(a, Matrix.identity(QQ, 2))


def test_dimension_checks(proj2):
    with pytest.raises(DimensionMismatch):
        proj2.multiply((F(1),), (F(1), F(0)))
    with pytest.raises(InvariantViolation):
        Algebra(QQ, [[[F(0)]], [[F(0)]]])


def test_dimension_cap_env(monkeypatch):
    monkeypatch.setenv("HOMALG_MAX_DIM", "2")
    zero3 = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
    with pytest.raises(DimensionMismatch):
        Algebra(QQ, zero3)
    monkeypatch.setenv("HOMALG_MAX_DIM", "3")
    Algebra(QQ, zero3)


def test_skew_symmetry_flag():
    lie = qalg(
        [
            [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
            [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
            [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
        ]
    )
    assert lie.is_skew_symmetric()
    assert not qalg(projection_tensor(2)).is_skew_symmetric()
