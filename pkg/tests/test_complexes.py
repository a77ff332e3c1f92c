import pytest

from qhom.complexes import (
    ChainComplex,
    ChainMap,
    cone,
    direct_sum_complexes,
    dualize_into_ring,
    euler_check,
    ext_module,
    free_resolution,
    koszul_complex,
    resolution_is_exact,
    tor_module,
)
from qhom.errors import ComplexError
from qhom.matrices import PolyMatrix
from qhom.modules import GradedModule, is_isomorphic


def test_koszul_shape_and_exactness(kxy):
    K = koszul_complex(kxy.gens, kxy)
    assert K.ranks() == {0: 1, 1: 2, 2: 1}
    assert K.twists(2) == [2]
    assert K.homology(1).is_zero() and K.homology(2).is_zero()
    assert K.homology(0).is_residue_field()
    assert euler_check(K)


def test_koszul_homology_over_artinian_ring(ci2):
    K = koszul_complex(ci2.gens, ci2)
    # every H_i is a k-vector space: H_0 = k, H_1 = k(-2)^2, H_2 = k(-4)
    k = GradedModule.residue_field(ci2)
    assert K.homology(0).is_residue_field()
    assert is_isomorphic(K.homology(1), k.shifted(2).power(2)).isomorphic
    assert is_isomorphic(K.homology(2), k.shifted(4)).isomorphic


def test_residue_field_resolution_over_dual_numbers(dual_numbers):
    k = GradedModule.residue_field(dual_numbers)
    F = free_resolution(k, 4)
    assert F.ranks() == {i: 1 for i in range(5)}
    assert F.truncated_at == 4
    assert F.twists(3) == [3]
    assert resolution_is_exact(F, k)


def test_finite_resolution_terminates(kxy):
    k = GradedModule.residue_field(kxy)
    F = free_resolution(k, 10)
    assert F.truncated_at is None and F.sup == 2


def test_not_a_complex_is_rejected(kx):
    x, = kx.gens
    d1 = PolyMatrix(kx, [[x]], [0], [1])
    d2 = PolyMatrix(kx, [[x]], [1], [2])
    with pytest.raises(ComplexError):
        ChainComplex(kx, {0: [0], 1: [1], 2: [2]}, {1: d1, 2: d2})


def test_ext_and_tor_over_dual_numbers(dual_numbers):
    k = GradedModule.residue_field(dual_numbers)
    for i in range(4):
        assert ext_module(k, k, i).dim(-i) == 1
        assert tor_module(k, k, i).dim(i) == 1
    R = GradedModule.free(dual_numbers, [0])
    assert ext_module(k, R, 1).is_zero()


def test_shift_and_twist(kx):
    K = koszul_complex(kx.gens, kx)
    S = K.shift(2)
    assert S.indices == [2, 3]
    assert K.twisted(1).twists(1) == [2]


def test_dual_twice_is_negation(kxy):
    K = koszul_complex(kxy.gens, kxy)
    DD = dualize_into_ring(dualize_into_ring(K))
    assert DD.modules == K.modules
    assert DD.same_as(K.negated()) and not DD.same_as(K)


def test_cone_of_identity_is_acyclic(kxy):
    K = koszul_complex(kxy.gens, kxy)
    ident = {i: PolyMatrix.identity(kxy, K.twists(i)) for i in K.indices}
    C = cone(ChainMap(K, K, ident))
    assert C.ranks() == {0: 1, 1: 3, 2: 3, 3: 1}
    assert all(C.homology(i).is_zero() for i in C.indices)


def test_bad_chain_map(kx):
    K = koszul_complex(kx.gens, kx)
    with pytest.raises(ComplexError):
        ChainMap(K, K, {0: PolyMatrix.identity(kx, [0])})


def test_direct_sum_ranks(kxy):
    K = koszul_complex(kxy.gens, kxy)
    S = direct_sum_complexes([K, K.twisted(1)])
    assert S.ranks() == {0: 2, 1: 4, 2: 2}
    assert euler_check(S)


def test_json_roundtrip(ci2):
    K = koszul_complex(ci2.gens, ci2)
    assert ChainComplex.from_json(ci2, K.to_json()).same_as(K)
