import pytest

from qhom.invariants import (
    bass_numbers,
    betti_numbers,
    cm_type,
    depth,
    is_cm,
    is_gorenstein,
    krull_dim,
    projective_dimension,
    ring_depth,
    ring_dim,
    ring_is_cm,
    ring_report,
    ring_type,
)
from qhom.modules import GradedModule

# (fixture, dim, depth, CM, Gorenstein, type)
RINGS = [
    ("kx", 1, 1, True, True, 1),
    ("kxy", 2, 2, True, True, 1),
    ("dual_numbers", 0, 0, True, True, 1),
    ("ci2", 0, 0, True, True, 1),
    ("hyper", 1, 1, True, True, 1),
    ("triv", 0, 0, True, False, 2),
    ("noncm", 1, 0, False, False, 1),
    ("type2", 1, 1, True, False, 2),
]


@pytest.mark.parametrize("name,dim,dep,cm,gor,typ", RINGS)
def test_ring_invariants(request, name, dim, dep, cm, gor, typ):
    R = request.getfixturevalue(name)
    assert ring_dim(R) == dim
    assert ring_depth(R) == dep
    assert ring_is_cm(R) is cm
    assert is_gorenstein(R) is gor
    assert ring_type(R) == typ


def test_module_depth_and_dim(type2):
    x, y, z = type2.gens
    k = GradedModule.residue_field(type2)
    assert depth(k) == 0 and krull_dim(k) == 0
    Rx = GradedModule.cyclic(type2, [x])
    assert krull_dim(Rx) == 0 and is_cm(Rx)
    Ry = GradedModule.cyclic(type2, [y])
    assert krull_dim(Ry) == 1


def test_betti_numbers(kxy, triv):
    bt = betti_numbers(GradedModule.residue_field(kxy), 5)
    assert bt.ranks == [1, 2, 1] and bt.complete
    bt = betti_numbers(GradedModule.residue_field(triv), 3)
    # k over k[x,y]/m^2: Poincare series 1/(1-2t)
    assert bt.ranks == [1, 2, 4, 8] and not bt.complete


def test_bass_numbers_of_gorenstein_ring(ci2, triv):
    assert bass_numbers(GradedModule.free(ci2, [0]), 3) == [1, 0, 0, 0]
    assert bass_numbers(GradedModule.free(triv, [0]), 1)[0] == 2
    assert cm_type(GradedModule.free(triv, [0])) == 2


def test_projective_dimension(kxy, hyper):
    x, y = kxy.gens
    assert projective_dimension(GradedModule.cyclic(kxy, [x]), 5) == 1
    assert projective_dimension(GradedModule.residue_field(hyper), 5) is None


def test_ring_report(type2):
    rep = ring_report(type2).to_json()
    assert rep["dim"] == 1 and rep["depth"] == 1 and rep["is_gorenstein"] is False
    assert rep["type"] == 2
