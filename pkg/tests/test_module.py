"""Module layer: presentations, Hom/tensor, duality, localization, and the
isomorphism search."""

import pytest

from homalg import algebra as alg
from homalg import module as mod
from homalg.errors import AlgebraMismatch
from homalg.field import GF, QQ


@pytest.fixture(scope="module")
def chain2():
    return alg.quotient_algebra(QQ, ["x"], ["x^2"])


@pytest.fixture(scope="module")
def fat3():
    return alg.quotient_algebra(QQ, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="module")
def split(request):
    A = alg.quotient_algebra(QQ, ["x"], ["x^2 - x"])
    return A


def k_of(A):
    return mod.residue_module_over_parent(A.local_data()[0])


def test_free_module_action(chain2):
    F2 = mod.free_module(chain2, 2)
    assert F2.dim == 4
    x = chain2.gens["x"]
    X = F2.act_elem(x)
    from homalg import linalg
    assert linalg.rank(chain2.field, X) == 2
    # unit acts as identity
    U = F2.act_elem(chain2.unit)
    assert linalg.mat_eq(chain2.field, U, linalg.identity(chain2.field, 4))


def test_presentation_empty_is_free(chain2):
    M = mod.module_from_presentation(chain2, 1, [])
    assert M.dim == 2


def test_presentation_residue_field(chain2):
    M = mod.module_from_presentation(chain2, 1, [[chain2.gens["x"]]])
    assert M.dim == 1
    v = mod.module_iso_search(M, k_of(chain2))
    assert v.is_true


def test_presentation_fat_point(fat3):
    M = mod.module_from_presentation(fat3, 1, [[fat3.gens["x"]]])
    assert M.dim == 2


def test_matlis_dual_gorenstein_selfdual(chain2):
    A = mod.free_module(chain2, 1)
    Av = mod.matlis_dual_module(A)
    assert Av.dim == 2
    v = mod.module_iso_search(Av, A)
    assert v.is_true
    assert v.witness["kind"] == "iso"


def test_matlis_dual_detects_non_gorenstein(fat3):
    A = mod.free_module(fat3, 1)
    Av = mod.matlis_dual_module(A)
    v = mod.module_iso_search(Av, A)
    assert v.is_false
    assert v.witness["kind"] == "component-invariants"


def test_double_dual_is_identity_dim(fat3):
    M = mod.module_from_presentation(fat3, 1, [[fat3.gens["x"]]])
    Mvv = mod.matlis_dual_module(mod.matlis_dual_module(M))
    v = mod.module_iso_search(Mvv, M)
    assert v.is_true


def test_hom_from_free_is_identity(chain2):
    A = mod.free_module(chain2, 1)
    k = k_of(chain2)
    H = mod.hom_module(A, k)
    assert H.dim == 1
    v = mod.module_iso_search(H, k)
    assert v.is_true


def test_hom_into_free_is_socle(chain2, fat3):
    # Hom(k, A) is the socle: 1-dim for the chain ring, 2-dim at the
    # fat point
    H1 = mod.hom_module(k_of(chain2), mod.free_module(chain2, 1))
    assert H1.dim == 1
    H2 = mod.hom_module(k_of(fat3), mod.free_module(fat3, 1))
    assert H2.dim == 2


def test_tensor_unit_law(chain2):
    A = mod.free_module(chain2, 1)
    k = k_of(chain2)
    T = mod.tensor_module(A, k)
    assert T.dim == 1
    v = mod.module_iso_search(T, k)
    assert v.is_true


def test_tensor_k_k(chain2):
    k = k_of(chain2)
    T = mod.tensor_module(k, k)
    assert T.dim == 1


def test_iso_search_trivial_cases(chain2):
    A = mod.free_module(chain2, 1)
    k = k_of(chain2)
    assert mod.module_iso_search(A, A).is_true
    v = mod.module_iso_search(k, A)
    assert v.is_false
    assert v.witness["kind"] == "dimension"


def test_iso_search_distinguishes_k2_from_A(chain2):
    k = k_of(chain2)
    k2 = mod.direct_sum_modules([k, k])
    A = mod.free_module(chain2, 1)
    v = mod.module_iso_search(k2, A)
    assert v.is_false


def test_iso_search_algebra_mismatch(chain2, fat3):
    with pytest.raises(AlgebraMismatch):
        mod.module_iso_search(mod.free_module(chain2, 1),
                              mod.free_module(fat3, 1))


def test_iso_search_over_prime_field():
    A = alg.quotient_algebra(GF(5), ["x"], ["x^2"])
    free = mod.free_module(A, 1)
    dual = mod.matlis_dual_module(free)
    v = mod.module_iso_search(dual, free)
    assert v.is_true


def test_localize_module_split(split):
    A = split
    M = mod.free_module(A, 1)
    for ld in A.local_data():
        L, incl, proj = mod.localize_module(M, ld)
        assert L.dim == 1
        assert L.algebra is ld.factor_algebra
    # a module supported on one component only
    e0 = A.local_data()[0].idempotent.coords
    sub, _ = mod.submodule(M, [list(e0)])
    L0, _, _ = mod.localize_module(sub, A.local_data()[0])
    L1, _, _ = mod.localize_module(sub, A.local_data()[1])
    assert L0.dim == 1 and L1.dim == 0


def test_residue_module_action(fat3):
    k = k_of(fat3)
    assert k.dim == 1
    x = fat3.gens["x"]
    X = k.act_elem(x)
    assert fat3.field.is_zero(X[0][0])


def test_quotient_and_submodule_roundtrip(fat3):
    A = mod.free_module(fat3, 1)
    x = fat3.gens["x"]
    S, incl = mod.submodule(A, [list(x)])
    assert S.dim == 1          # x*A = span{x}
    Q, proj = mod.quotient_module(A, [list(x)])
    assert Q.dim == 2
