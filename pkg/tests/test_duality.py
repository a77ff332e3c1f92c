import pytest

from qhom.duality import cm_dual, dualizing_module, matlis_dual
from qhom.errors import NotArtinianError, NotCohenMacaulayError
from qhom.invariants import cm_type
from qhom.modules import GradedModule, is_isomorphic


def test_dual_of_residue_field(ci2):
    k = GradedModule.residue_field(ci2)
    assert is_isomorphic(matlis_dual(k), k).isomorphic


def test_dual_of_gorenstein_ring_is_a_shifted_ring(dual_numbers):
    R = GradedModule.free(dual_numbers, [0])
    D = matlis_dual(R)
    assert D.minimal_gen_degrees == [-1]
    assert is_isomorphic(D, R, up_to_shift=True).isomorphic


def test_dual_of_non_gorenstein_ring_needs_type_many_generators(triv):
    D = matlis_dual(GradedModule.free(triv, [0]))
    assert len(D.minimal_gen_degrees) == 2


def test_dual_flips_hilbert_function(ci2):
    x, y = ci2.gens
    M = GradedModule.cyclic(ci2, [x])
    D = matlis_dual(M)
    for d in range(-3, 4):
        assert D.dim(d) == M.dim(-d)


def test_matlis_needs_artinian(kx):
    with pytest.raises(NotArtinianError):
        matlis_dual(GradedModule.free(kx, [0]))


def test_canonical_module(kxy, type2, triv):
    om = dualizing_module(kxy)
    assert om.module.minimal_gen_degrees == [2] and om.module.is_free()
    om = dualizing_module(type2)
    assert len(om.module.minimal_gen_degrees) == 2
    om = dualizing_module(triv)
    assert cm_type(om.module) == 1


def test_canonical_module_needs_cm(noncm):
    with pytest.raises(NotCohenMacaulayError):
        dualizing_module(noncm)


def test_cm_dual_round_trip(type2, hyper):
    for R in (type2, hyper):
        x = R.gens[0]
        for M in (GradedModule.free(R, [0]), GradedModule.cyclic(R, [x])):
            assert is_isomorphic(cm_dual(cm_dual(M)), M).isomorphic


def test_cm_dual_of_ring_is_canonical_module(type2):
    om = dualizing_module(type2)
    assert is_isomorphic(cm_dual(GradedModule.free(type2, [0]), om), om.module).isomorphic


def test_cm_dual_rejects_non_cm(noncm, type2):
    y = type2.gens[1]
    M = GradedModule.cyclic(type2, [y]).direct_sum(GradedModule.residue_field(type2))
    with pytest.raises(NotCohenMacaulayError):
        cm_dual(M)
