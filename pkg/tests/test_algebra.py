"""Algebra construction and the idempotent / local-factor machinery.

Dimensions, radicals, and idempotent coordinates here were worked out by
hand from the defining relations.
"""

import pytest

from homalg import algebra as alg
from homalg.errors import (NotIdempotent, NotZeroDimensional,
                           UnsupportedResidueField, ZeroRing)
from homalg.field import GF, QQ


def test_chain_ring_basics():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    assert A.dim == 2
    assert A.basis_labels == ["1", "x"]
    x = A.gens["x"]
    assert A.is_zero_elem(A.elem_mul(x, x))
    assert A.is_local()
    assert [tuple(v) for v in A.nilradical_basis()] == [(QQ.zero(), QQ.one())]


def test_chain_ring_cubed():
    A = alg.quotient_algebra(QQ, ["x"], ["x^3"])
    assert A.dim == 3
    x = A.gens["x"]
    x2 = A.elem_mul(x, x)
    assert not A.is_zero_elem(x2)
    assert A.is_zero_elem(A.elem_mul(x2, x))
    assert len(A.nilradical_basis()) == 2


def test_fat_point_and_socle():
    A = alg.quotient_algebra(QQ, ["x", "y"], ["x^2", "x*y", "y^2"])
    assert A.dim == 3
    assert A.is_local()
    assert len(A.nilradical_basis()) == 2


def test_complete_intersection_point():
    A = alg.quotient_algebra(QQ, ["x", "y"], ["x^2", "y^2"])
    assert A.dim == 4
    assert A.is_local()
    xy = A.elem_mul(A.gens["x"], A.gens["y"])
    assert not A.is_zero_elem(xy)
    assert A.is_zero_elem(A.elem_mul(xy, A.gens["x"]))


def test_prime_field_chain_ring():
    A = alg.quotient_algebra(GF(5), ["x"], ["x^3"])
    assert A.dim == 3
    assert A.is_local()
    assert A.local_data()[0].residue_field_dim == 1


def test_split_quadric_idempotents():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2 - x"])
    prims = A.primitive_idempotents()
    assert len(prims) == 2
    # x and 1 - x, in coordinate-sorted order
    assert prims[0].coords == (QQ.zero(), QQ.one())
    assert prims[1].coords == (QQ.one(), QQ.parse("-1"))
    for e in prims:
        assert A.elem_mul(e.coords, e.coords) == e.coords


def test_three_split_points():
    A = alg.quotient_algebra(QQ, ["x"], ["x^3 - x"])
    prims = A.primitive_idempotents()
    assert len(prims) == 3
    total = A.zero_elem()
    for e in prims:
        total = A.elem_add(total, e.coords)
    assert total == A.unit


def test_newton_lifting_through_radical():
    # x^3 = x^2: one reduced point and one double point
    A = alg.quotient_algebra(QQ, ["x"], ["x^3 - x^2"])
    prims = A.primitive_idempotents()
    assert len(prims) == 2
    dims = sorted(ld.factor_algebra.dim for ld in A.local_data())
    assert dims == [1, 2]
    rads = sorted(len(ld.radical_basis) for ld in A.local_data())
    assert rads == [0, 1]


def test_residue_extension_rejected_char0():
    with pytest.raises(UnsupportedResidueField):
        alg.quotient_algebra(QQ, ["x"], ["x^2 + 1"])


def test_residue_extension_rejected_charp():
    # t^2 + 2 has no root mod 5
    with pytest.raises(UnsupportedResidueField):
        alg.quotient_algebra(GF(5), ["x"], ["x^2 + 2"])


def test_split_quadric_charp():
    A = alg.quotient_algebra(GF(5), ["x"], ["x^2 - 1"])
    assert len(A.primitive_idempotents()) == 2


def test_zero_ring_rejected():
    with pytest.raises(ZeroRing):
        alg.quotient_algebra(QQ, ["x"], ["x", "x - 1"])


def test_positive_dimensional_rejected():
    with pytest.raises(NotZeroDimensional):
        alg.quotient_algebra(QQ, ["x", "y"], ["x*y"])


def test_product_algebra_components():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    B = alg.quotient_algebra(QQ, ["y"], ["y^3"])
    P = alg.product_algebra([A, B])
    assert P.dim == 5
    assert P.n_components() == 2
    dims = sorted(ld.factor_algebra.dim for ld in P.local_data())
    assert dims == [2, 3]
    e1 = P.gens["e1"]
    assert P.elem_mul(e1, e1) == e1


def test_tensor_square_is_complete_intersection():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    T = alg.tensor_algebra(A, A)
    assert T.dim == 4
    assert T.is_local()
    # multiplication table matches the two-variable presentation
    B = alg.quotient_algebra(QQ, ["x", "y"], ["x^2", "y^2"])
    x = T.gens["l_x"]
    y = T.gens["r_x"]
    assert T.is_zero_elem(T.elem_mul(x, x))
    assert T.is_zero_elem(T.elem_mul(y, y))
    assert not T.is_zero_elem(T.elem_mul(x, y))
    assert B.dim == T.dim and len(B.nilradical_basis()) == len(
        T.nilradical_basis())


def test_component_projection_embedding():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2 - x"])
    ld = A.local_data()[0]
    from homalg import linalg
    F = A.field
    # embedding then projection is the identity on the factor
    comp = linalg.mat_mul(F, ld.projection, ld.embedding)
    assert linalg.mat_eq(F, comp, linalg.identity(F, ld.factor_algebra.dim))
    # projection is an algebra map on a sample product
    x = A.gens["x"]
    px = linalg.mat_vec(F, ld.projection, list(x))
    pxx = linalg.mat_vec(F, ld.projection, list(A.elem_mul(x, x)))
    assert ld.factor_algebra.elem_mul(tuple(px), tuple(px)) == tuple(pxx)


def test_local_factor_unit_detection():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    ld = A.local_data()[0]
    assert ld.is_unit(A.parse_elem("1 + x"))
    assert not ld.is_unit(A.parse_elem("x"))


def test_component_of_nonprimitive_idempotent():
    A = alg.quotient_algebra(QQ, ["x"], ["x^3 - x"])
    e = alg.idempotent_from_components(A, [0, 1])
    sub = alg.component(A, e)
    assert isinstance(sub, alg.SubProduct)
    assert sub.algebra.dim == 2
    assert sub.algebra.n_components() == 2


def test_component_requires_idempotent():
    A = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    with pytest.raises(NotIdempotent):
        alg.component(A, A.gens["x"])


def test_parse_elem_in_quotient():
    A = alg.quotient_algebra(QQ, ["x"], ["x^3"])
    v = A.parse_elem("(1 + x)^2")
    assert v == A.parse_elem("1 + 2*x + x^2")
    assert A.elem_str(v) == "1 + 2*x + x^2"


def test_associativity_check_catches_bad_table():
    F = QQ
    one, zero = F.one(), F.zero()
    # "x*x = 1" with unit (1,0) is not associative together with x*1 = 0
    mt = [[(one, zero), (zero, zero)],
          [(zero, zero), (one, zero)]]
    with pytest.raises(ValueError):
        alg.Algebra(F, ["1", "x"], mt, (one, zero))
