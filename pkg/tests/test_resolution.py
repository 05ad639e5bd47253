import pytest

from homalg.algebra import product_algebra, quotient_algebra
from homalg.complexes import (NEG_INF, POS_INF, Complex, cone,
                              direct_sum_complexes, homology_ranks, koszul,
                              module_complex, shift, zero_complex)
from homalg.field import GF, QQ
from homalg.linalg import rank as mat_rank
from homalg.module import (free_map_matrix, free_module, matlis_dual_module,
                           residue_module_over_parent)
from homalg.resolution import (LaurentWindow, LocalResolutionWindow,
                               bass_window, depth, finite_injective_dimension,
                               local_resolution, minimal_free_resolution,
                               poincare_window, rfd)


@pytest.fixture(scope="module")
def gor2():
    return quotient_algebra(QQ, ["x"], ["x^2"])


@pytest.fixture(scope="module")
def gor3():
    return quotient_algebra(QQ, ["x"], ["x^3"])


@pytest.fixture(scope="module")
def ngor3():
    return quotient_algebra(QQ, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="module")
def ci22():
    return quotient_algebra(QQ, ["x", "y"], ["x^2", "y^2"])


@pytest.fixture(scope="module")
def split2():
    return product_algebra([quotient_algebra(QQ, ["t"], ["t"]),
                            quotient_algebra(QQ, ["x"], ["x^2"])])


def own(A):
    return A.local_data()[0]


def k_of(A):
    return residue_module_over_parent(own(A))


def assert_window_sound(w):
    """Minimality of every stored differential plus exactness of the cone
    of the augmentation through the computed range."""
    for rows in w.dmat.values():
        for row in rows:
            for a in row:
                assert not w.ld.is_unit(a)
    R = w.resolution_complex()
    aug = w.augmentation(R)
    hr = homology_ranks(cone(aug))
    for n, r in hr.items():
        if n <= w.computed_to:
            assert r == 0


# ------------------------------------------------------------ Poincaré data


def test_residue_field_over_chain_ring(gor2):
    w = poincare_window(own(gor2), module_complex(k_of(gor2)), 8)
    assert (w.lo, w.hi, w.exact) == (0, 8, False)
    assert w.coeffs == [1] * 9


def test_residue_field_growth_radical_square_zero(ngor3):
    w = poincare_window(own(ngor3), module_complex(k_of(ngor3)), 4)
    assert w.coeffs == [1, 2, 4, 8, 16]
    assert not w.exact


def test_residue_field_complete_intersection(ci22):
    w = poincare_window(own(ci22), module_complex(k_of(ci22)), 5)
    assert w.coeffs == [1, 2, 3, 4, 5, 6]


def test_residue_field_finite_coefficients():
    A = quotient_algebra(GF(5), ["x"], ["x^3"])
    w = poincare_window(own(A), module_complex(k_of(A)), 6)
    assert w.coeffs == [1] * 7


def test_free_module_resolves_to_itself(gor3):
    w = local_resolution(own(gor3), module_complex(free_module(gor3, 1)), 6)
    assert w.terminated
    assert w.betti_map() == {0: 1}
    assert_window_sound(w)


def test_shifted_free_gives_monomial(gor2):
    X = shift(module_complex(free_module(gor2, 1)), 3)
    w = poincare_window(own(gor2), X, 8)
    assert w.to_json() == {"lo": 3, "hi": 3, "coeffs": [1], "exact": True}


def test_zero_complex_gives_zero_window(gor2):
    w = poincare_window(own(gor2), zero_complex(gor2), 5)
    assert w.is_zero()


def test_koszul_complex_is_its_own_resolution(gor2):
    x = gor2.parse_elem("x")
    w = local_resolution(own(gor2), koszul(gor2, [x]), 8)
    assert w.terminated
    assert w.betti_map() == {0: 1, 1: 1}
    assert_window_sound(w)


def test_target_with_unit_differential_is_minimalized(gor2):
    # A^2 -> A^2 with matrix [[1,0],[0,x]]: a contractible summand glued to
    # the Koszul complex; the window must shed it
    A = gor2
    one = A.unit
    zero = tuple(A.field.zero() for _ in range(A.dim))
    x = A.parse_elem("x")
    d1 = free_map_matrix(A, [[one, zero], [zero, x]])
    X = Complex(A, {0: free_module(A, 2), 1: free_module(A, 2)}, {1: d1})
    w = local_resolution(own(A), X, 6)
    assert w.terminated
    assert w.betti_map() == {0: 1, 1: 1}
    assert_window_sound(w)


def test_disconnected_homology_degrees(gor2):
    k = module_complex(k_of(gor2))
    X = direct_sum_complexes([k, shift(k, 2)])
    w = poincare_window(own(gor2), X, 4)
    assert w.lo == 0
    assert w.coeffs == [1, 1, 2, 2, 2]


def test_window_starts_at_lowest_homology(gor2):
    X = shift(module_complex(k_of(gor2)), 2)
    w = poincare_window(own(gor2), X, 5)
    assert w.lo == 2
    assert w.coeffs == [1, 1, 1, 1]


def test_extension_matches_fresh_computation(ngor3):
    w = local_resolution(own(ngor3), module_complex(k_of(ngor3)), 2)
    assert w.betti_map() == {0: 1, 1: 2, 2: 4}
    w.extend(4)
    assert w.betti_map() == {0: 1, 1: 2, 2: 4, 3: 8, 4: 16}
    assert_window_sound(w)


def test_global_window_over_split_ring(split2):
    w = minimal_free_resolution(module_complex(free_module(split2, 1)), 4)
    assert w.terminated
    assert w.betti_map() == {0: 1}
    assert w.component_betti(0) == [1, 1]


def test_global_dual_over_split_ring(split2):
    D = matlis_dual_module(free_module(split2, 1))
    w = minimal_free_resolution(module_complex(D), 4)
    assert w.terminated
    assert w.betti_map() == {0: 1}


def test_component_supported_module_localizes(split2):
    by_dim = {ld.factor_algebra.dim: ld for ld in split2.local_data()}
    point, chain = by_dim[1], by_dim[2]
    k2 = residue_module_over_parent(chain)
    assert poincare_window(point, module_complex(k2), 5).is_zero()
    w = poincare_window(chain, module_complex(k2), 5)
    assert w.coeffs == [1] * 6


# ----------------------------------------------------------------- Bass data


def test_bass_of_gorenstein_ring_is_constant_one(gor2):
    w = bass_window(own(gor2), module_complex(free_module(gor2, 1)), 6)
    assert w.to_json() == {"lo": 0, "hi": 0, "coeffs": [1], "exact": True}


def test_bass_of_fat_point(ngor3):
    w = bass_window(own(ngor3), module_complex(free_module(ngor3, 1)), 3)
    assert w.coeffs == [2, 3, 6, 12]
    assert not w.exact


def test_bass_of_dual_is_one(ngor3):
    D = matlis_dual_module(free_module(ngor3, 1))
    w = bass_window(own(ngor3), module_complex(D), 5)
    assert w.to_json() == {"lo": 0, "hi": 0, "coeffs": [1], "exact": True}


def test_bass_of_shifted_dual_reindexes(gor3):
    D = module_complex(matlis_dual_module(free_module(gor3, 1)))
    w = bass_window(own(gor3), shift(D, 2), 4)
    assert w.to_json() == {"lo": -2, "hi": -2, "coeffs": [1], "exact": True}
    assert w.order() == depth(own(gor3), shift(D, 2)) == -2


def test_bass_order_equals_depth(ngor3, ci22):
    for A in (ngor3, ci22):
        for X in (module_complex(free_module(A, 1)),
                  module_complex(k_of(A)),
                  shift(module_complex(k_of(A)), 1)):
            w = bass_window(own(A), X, 3)
            assert w.order() == depth(own(A), X)


# -------------------------------------------------------- depth / rfd / AB


def test_depth_of_nonzero_module_is_zero(gor2, ngor3):
    assert depth(own(gor2), module_complex(k_of(gor2))) == 0
    assert depth(own(ngor3), module_complex(free_module(ngor3, 2))) == 0


def test_depth_shift_rule(gor2):
    X = shift(module_complex(k_of(gor2)), 3)
    assert depth(own(gor2), X) == -3


def test_depth_of_zero_complex(gor2):
    assert depth(own(gor2), zero_complex(gor2)) == POS_INF


def test_depth_of_koszul_complex(gor2):
    # H_1 = ann(x) is nonzero, so the depth sits at -1
    x = gor2.parse_elem("x")
    assert depth(own(gor2), koszul(gor2, [x])) == -1


def test_rfd_of_module(gor2, split2):
    assert rfd(gor2, module_complex(k_of(gor2))) == 0
    ld1 = split2.local_data()[1]
    assert rfd(split2, module_complex(residue_module_over_parent(ld1))) == 0


def test_rfd_of_shifted_sum(gor2):
    M = module_complex(k_of(gor2))
    X = direct_sum_complexes([shift(M, 3), M])
    assert rfd(gor2, X) == 3


def test_rfd_of_koszul(gor2):
    x = gor2.parse_elem("x")
    assert rfd(gor2, koszul(gor2, [x])) == 1


def test_rfd_empty_support_sentinel(gor2):
    assert rfd(gor2, zero_complex(gor2)) == NEG_INF


def _scalar_reduction(ld, C, n):
    """Entries of a free-complex differential reduced to the residue field;
    relies on the algebra unit being the first basis vector."""
    A = C.algebra
    d = A.dim
    m = C.diff(n)
    rlo = C.dim(n - 1) // d
    rhi = C.dim(n) // d
    out = []
    for g in range(rlo):
        row = []
        for h in range(rhi):
            coords = tuple(m[g * d + r][h * d] for r in range(d))
            row.append(ld.residue_value(coords))
        out.append(row)
    return out


def test_depth_of_free_complex_reads_off_reduction(gor2, gor3, ngor3, ci22):
    # depth F = -sup H(k tensor F) for bounded free complexes
    for A in (gor2, gor3, ngor3, ci22):
        ld = own(A)
        K = koszul(A, list(A.gens.values()))
        F = A.field
        d = A.dim
        sup = None
        for n in range(K.lo, K.hi + 1):
            r = K.dim(n) // d
            rk_in = mat_rank(F, _scalar_reduction(ld, K, n)) if n > K.lo \
                else 0
            rk_out = mat_rank(F, _scalar_reduction(ld, K, n + 1)) \
                if n < K.hi else 0
            if r - rk_in - rk_out > 0:
                sup = n
        assert sup is not None
        assert depth(ld, K) == -sup


# ------------------------------------------------- finite injective dimension


def test_fid_of_free_over_gorenstein(gor2, ci22):
    for A in (gor2, ci22):
        v = finite_injective_dimension(own(A),
                                       module_complex(free_module(A, 1)))
        assert v.is_true
        assert v.witness["kind"] == "bounded-injective-resolution"


def test_fid_of_ring_fails_at_fat_point(ngor3):
    v = finite_injective_dimension(own(ngor3),
                                   module_complex(free_module(ngor3, 1)))
    assert v.is_false
    assert v.witness == {"kind": "unbounded-bass-numbers", "degree": 1,
                         "rank": 3}


def test_fid_of_dual_always_true(ngor3):
    D = matlis_dual_module(free_module(ngor3, 1))
    v = finite_injective_dimension(own(ngor3), module_complex(D))
    assert v.is_true
    assert v.witness["injective-dimension"] == 0


def test_fid_of_residue_field_at_fat_point(ngor3):
    v = finite_injective_dimension(own(ngor3), module_complex(k_of(ngor3)))
    assert v.is_false
    assert v.witness["degree"] == 1 and v.witness["rank"] == 2


def test_fid_of_zero_complex(gor2):
    v = finite_injective_dimension(own(gor2), zero_complex(gor2))
    assert v.is_true
    assert v.witness["kind"] == "zero-complex"


# -------------------------------------------------------- cancellation surgery


def test_unit_cancellation_recovers_minimal_window(gor3):
    # hand-built non-minimal resolution of k over Q[x]/(x^3):
    # R^2 --[[x,0],[0,1]]-- R^2 --[x^2, 0]^T on the kernel side
    A = gor3
    F = A.field
    one = A.unit
    zero = tuple(F.zero() for _ in range(A.dim))
    x = A.parse_elem("x")
    x2 = A.parse_elem("x^2")
    w = LocalResolutionWindow.__new__(LocalResolutionWindow)
    w.ld = own(A)
    w.algebra = A
    w.target = module_complex(k_of(A))
    w.t = 0
    w.zero = False
    w.terminated = False
    w.computed_to = 2
    w.ranks = {0: 2, 1: 2, 2: 1}
    w.dmat = {1: [[x, zero], [zero, one]], 2: [[x2], [zero]]}
    one_k = (F.one(),)
    zero_k = (F.zero(),)
    w.eps = {0: [one_k, zero_k], 1: [(), ()], 2: [()]}
    w._cancel_units()
    assert w.ranks == {0: 1, 1: 1, 2: 1}
    assert w.dmat == {1: [[x]], 2: [[x2]]}
    assert w.eps == {0: [one_k], 1: [()], 2: [()]}
    assert_window_sound(w)


# --------------------------------------------------------- series arithmetic


def test_window_normalizes_exact_padding():
    w = LaurentWindow(-1, 3, [0, 1, 2, 0, 0], True)
    assert (w.lo, w.hi, w.coeffs) == (0, 1, [1, 2])


def test_exact_product():
    a = LaurentWindow(0, 1, [1, 1], True)
    b = LaurentWindow(0, 1, [1, -1], True)
    assert a.mul(b).to_json() == {"lo": 0, "hi": 2, "coeffs": [1, 0, -1],
                                  "exact": True}


def test_truncated_product_range():
    a = LaurentWindow(0, 4, [1, 1, 1, 1, 1], False)
    b = LaurentWindow(0, 1, [1, 1], True)
    w = a.mul(b)
    assert (w.lo, w.hi, w.exact) == (0, 4, False)
    assert w.coeffs == [1, 2, 2, 2, 2]
    both = a.mul(LaurentWindow(-1, 2, [1, 0, 0, 1], False))
    assert (both.lo, both.hi) == (-1, 2)


def test_zero_window_absorbs():
    z = LaurentWindow.zero()
    a = LaurentWindow(0, 2, [1, 2, 3], False)
    assert z.mul(a).is_zero()
    assert z.order() == POS_INF


def test_coefficient_access_respects_precision():
    w = LaurentWindow(1, 3, [1, 0, 2], False)
    assert w.coeff(0) == 0
    assert w.coeff(3) == 2
    with pytest.raises(ValueError):
        w.coeff(4)
    assert w.order() == 1
    assert w.shifted(-1).order() == 0


def test_windows_agree_on_overlap():
    a = LaurentWindow(0, 5, [1, 1, 1, 1, 1, 1], False)
    b = LaurentWindow(0, 3, [1, 1, 1, 1], False)
    assert a.agrees_with(b, 0, 3)
    c = LaurentWindow(0, 3, [1, 1, 2, 1], False)
    assert not a.agrees_with(c, 0, 3)
