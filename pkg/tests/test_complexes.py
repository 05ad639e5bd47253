"""Complex calculus: homology, shift, cone, Koszul, duality, support."""

import pytest

from homalg import algebra as alg
from homalg import complexes as cx
from homalg import linalg
from homalg import module as mod
from homalg.errors import NotChainMap
from homalg.field import QQ


@pytest.fixture(scope="module")
def chain2():
    return alg.quotient_algebra(QQ, ["x"], ["x^2"])


@pytest.fixture(scope="module")
def fat3():
    return alg.quotient_algebra(QQ, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="module")
def split2():
    point = alg.quotient_algebra(QQ, ["t"], ["t"])
    B = alg.quotient_algebra(QQ, ["x"], ["x^2"])
    return alg.product_algebra([point, B])


def test_module_complex_homology(chain2):
    M = mod.free_module(chain2, 1)
    C = cx.module_complex(M)
    H = cx.homology(C)
    assert H.inf() == 0 and H.sup() == 0
    assert H.dim(0) == 2


def test_exact_identity_complex(chain2):
    A = mod.free_module(chain2, 1)
    ident = linalg.identity(chain2.field, 2)
    C = cx.Complex(chain2, {0: A, 1: A}, {1: ident})
    assert cx.is_exact(C)
    H = cx.homology(C)
    assert H.is_zero()
    assert H.amp() == cx.NEG_INF


def test_d_squared_checked(chain2):
    A = mod.free_module(chain2, 1)
    ident = linalg.identity(chain2.field, 2)
    with pytest.raises(ValueError):
        cx.Complex(chain2, {0: A, 1: A, 2: A}, {1: ident, 2: ident})


def test_koszul_empty(chain2):
    K = cx.koszul(chain2, [])
    assert K.lo == 0 and K.hi == 0
    assert K.dim(0) == 2


def test_koszul_zero_element(chain2):
    K = cx.koszul(chain2, [chain2.zero_elem()])
    H = cx.homology(K)
    assert H.dim(0) == 2 and H.dim(1) == 2


def test_koszul_chain_ring(chain2):
    K = cx.koszul(chain2, [chain2.gens["x"]])
    hr = cx.homology_ranks(K)
    assert hr == {0: 1, 1: 1}


def test_koszul_fat_point(fat3):
    K = cx.koszul(fat3, [fat3.gens["x"], fat3.gens["y"]])
    assert [K.dim(n) for n in (0, 1, 2)] == [3, 6, 3]
    hr = cx.homology_ranks(K)
    assert hr[0] == 1
    assert hr[2] == 2
    # Euler characteristic pins the middle rank
    assert hr[0] - hr[1] + hr[2] == 3 - 6 + 3


def test_shift_moves_homology(chain2):
    K = cx.koszul(chain2, [chain2.gens["x"]])
    S = cx.shift(K, 3)
    hr = cx.homology_ranks(S)
    assert hr == {3: 1, 4: 1}
    assert cx.shift(K, 0) is K
    # double shift composes
    S2 = cx.shift(cx.shift(K, 1), 2)
    assert cx.homology_ranks(S2) == hr


def test_shift_sign_keeps_d_squared(chain2):
    K = cx.koszul(chain2, [chain2.gens["x"]])
    S = cx.shift(K, 1)
    cx.Complex(chain2.field and K.algebra, dict(S.modules), dict(S.diffs))


def test_cone_of_identity_exact(fat3):
    K = cx.koszul(fat3, [fat3.gens["x"], fat3.gens["y"]])
    ident = {n: linalg.identity(fat3.field, K.dim(n))
             for n in range(K.lo, K.hi + 1)}
    f = cx.ChainMap(K, K, ident)
    assert cx.is_exact(cx.cone(f))


def test_cone_of_multiplication(chain2):
    A = cx.module_complex(mod.free_module(chain2, 1))
    x = chain2.gens["x"]
    f = cx.ChainMap(A, A, {0: chain2.mult_matrix(x)})
    C = cx.cone(f)
    hr = cx.homology_ranks(C)
    assert hr == {0: 1, 1: 1}


def test_chain_map_must_commute(chain2):
    A = mod.free_module(chain2, 1)
    ident = linalg.identity(chain2.field, 2)
    X = chain2.mult_matrix(chain2.gens["x"])
    C = cx.Complex(chain2, {0: A, 1: A}, {1: X})
    # d∘id = x but (x·)∘d = x² = 0, so the square fails
    with pytest.raises(NotChainMap):
        cx.ChainMap(C, C, {1: ident, 0: X})
    # the honest square passes
    cx.ChainMap(C, C, {1: ident, 0: ident})


def test_matlis_dual_complex_grading(chain2):
    K = cx.koszul(chain2, [chain2.gens["x"]])
    S = cx.shift(K, 3)
    D = cx.matlis_dual(S)
    assert D.lo == -4 and D.hi == -3
    hr = cx.homology_ranks(D)
    assert hr == {-4: 1, -3: 1}
    # dual twice restores the original window
    DD = cx.matlis_dual(D)
    assert DD.lo == S.lo and DD.hi == S.hi
    assert cx.homology_ranks(DD) == cx.homology_ranks(S)


def test_homology_module_structure(fat3):
    K = cx.koszul(fat3, [fat3.gens["x"], fat3.gens["y"]])
    H = cx.homology(K)
    H0 = H.module(0)
    assert H0.dim == 1
    # H_0 = A/(x,y) = k: generators act by zero
    assert fat3.field.is_zero(H0.act_elem(fat3.gens["x"])[0][0])


def test_support_basics(split2):
    A = split2
    free = cx.module_complex(mod.free_module(A, 1))
    assert cx.support(free) == [0, 1]
    assert cx.support(cx.zero_complex(A)) == []
    lds = A.local_data()
    for i, ld in enumerate(lds):
        k_i = cx.module_complex(mod.residue_module_over_parent(ld))
        assert cx.support(k_i) == [i]


def test_localize_complex(split2):
    A = split2
    K = cx.module_complex(mod.free_module(A, 1))
    for ld in A.local_data():
        L = cx.localize_complex(K, ld)
        assert L.algebra is ld.factor_algebra
        assert L.dim(0) == ld.factor_algebra.dim


def test_truncate_good_below(fat3):
    K = cx.koszul(fat3, [fat3.gens["x"], fat3.gens["y"]])
    T = cx.truncate_good_below(K, 1)
    hrK = cx.homology_ranks(K)
    hrT = cx.homology_ranks(T)
    assert hrT.get(0, 0) == 0
    assert hrT[1] == hrK[1] and hrT[2] == hrK[2]


def test_direct_sum_complexes(chain2):
    K = cx.koszul(chain2, [chain2.gens["x"]])
    S = cx.direct_sum_complexes([K, cx.shift(K, 2)])
    hr = cx.homology_ranks(S)
    assert hr == {0: 1, 1: 1, 2: 1, 3: 1}


def test_graded_module_bounds(chain2):
    H = cx.homology(cx.zero_complex(chain2))
    assert H.inf() == cx.POS_INF and H.sup() == cx.NEG_INF
