import pytest

from qhom.errors import RingMismatchError
from qhom.modules import (
    GradedModule,
    graded_pieces,
    hom_degree0,
    is_isomorphic,
    module_from_action,
    power_decompose,
    verify_iso,
)


def test_minimal_presentation_prunes_units(kxy):
    x, y = kxy.gens
    M = GradedModule.coker(kxy, [[kxy.one]], [0], [0])
    assert M.minimal_presentation().ngens == 0 and M.is_zero()
    N = GradedModule.coker(kxy, [[x], [kxy.one]], [0, 1], [1])
    assert N.minimal_gen_degrees == [0] and N.is_free()
    P = GradedModule.coker(kxy, [[x, y, kxy.zero], [kxy.zero, kxy.zero, kxy.one]],
                           [0, 0], [1, 1, 0])
    assert P.minimal_gen_degrees == [0]
    assert P.is_residue_field()


def test_basis_and_dimension(type2):
    k = GradedModule.residue_field(type2)
    assert k.dim(0) == 1 and k.dim(1) == 0
    R = GradedModule.free(type2, [0])
    assert [R.dim(d) for d in range(4)] == [1, 3, 3, 3]


def test_hom_degree0_dimensions(dual_numbers):
    k = GradedModule.residue_field(dual_numbers)
    R = GradedModule.free(dual_numbers, [0])
    assert len(hom_degree0(k, R)) == 0
    assert len(hom_degree0(k, k)) == 1
    # the socle of R sits in degree 1
    assert len(hom_degree0(k.shifted(1), R)) == 1


def test_shift_convention(kx):
    k = GradedModule.residue_field(kx)
    assert k.shifted(2).hilbert().values(0, 3) == [0, 0, 1, 0]


def test_iso_detects_hilbert_mismatch(type2):
    x, y, z = type2.gens
    m = GradedModule.ideal(type2, [x, y, z])
    Rx = type2.quotient([x])
    mx = m.base_change(Rx)
    k3 = GradedModule.residue_field(Rx).power(3)
    w = is_isomorphic(mx, k3)
    assert w.verdict == "not-isomorphic" and w.discrepancy_degree == 0
    w = is_isomorphic(mx, k3, up_to_shift=True)
    assert w.isomorphic and w.shift == 1
    assert verify_iso(w.forward, mx, k3.shifted(1))


def test_iso_witness_is_a_real_map(ci2):
    x, y = ci2.gens
    M = GradedModule.coker(ci2, [[x, y]], [0], [1, 1])
    N = GradedModule.coker(ci2, [[y, x + y]], [0], [1, 1])
    w = is_isomorphic(M, N, seed=3)
    assert w.isomorphic
    assert verify_iso(w.forward, M, N)


def test_iso_proves_non_isomorphism(kxy):
    x, y = kxy.gens
    A = GradedModule.cyclic(kxy, [x])
    B = GradedModule.cyclic(kxy, [y])
    # same Hilbert series, different annihilators
    w = is_isomorphic(A, B)
    assert w.verdict == "not-isomorphic" and w.reason == "Hom(M, N)_0 = 0"
    C = GradedModule.cyclic(kxy, [x ** 2])
    D = GradedModule.cyclic(kxy, [x * y])
    w = is_isomorphic(C, D)
    assert w.verdict == "not-isomorphic"


def test_iso_needs_same_ring(kx, kxy):
    with pytest.raises(RingMismatchError):
        is_isomorphic(GradedModule.free(kx, [0]), GradedModule.free(kxy, [0]))


def test_power_decompose_residue(ci2):
    k = GradedModule.residue_field(ci2)
    H = k.power(2).direct_sum(k.shifted(3))
    dec = power_decompose(H, k)
    assert dec.ok and dec.multiplicity == 3 and dec.shifts == {0: 2, 3: 1}
    dec = power_decompose(H, k, allow_shifts=False)
    assert not dec.ok


def test_power_decompose_rejects_non_sums(ci2):
    k = GradedModule.residue_field(ci2)
    R = GradedModule.free(ci2, [0])
    assert not power_decompose(R, k).ok
    dec = power_decompose(R.power(2), R)
    assert dec.ok and dec.multiplicity == 2


def test_module_from_action_roundtrip(triv):
    M = GradedModule.free(triv, [0])
    dims, action, _ = graded_pieces(M)
    N = module_from_action(triv, dims, action)
    assert is_isomorphic(N, M).isomorphic


def test_base_change_and_restriction(kxy, hyper):
    k = GradedModule.residue_field(hyper)
    kQ = k.restrict_to(kxy)
    assert kQ.ring == kxy
    assert kQ.hilbert().values(0, 2) == [1, 0, 0]
    R = GradedModule.free(kxy, [0]).base_change(hyper)
    assert R.hilbert() == GradedModule.free(hyper, [0]).hilbert()


def test_annihilated_by_max_ideal(type2):
    assert GradedModule.residue_field(type2).power(2).annihilated_by_max_ideal()
    assert not GradedModule.free(type2, [0]).annihilated_by_max_ideal()


def test_module_json(kx):
    M = GradedModule.cyclic(kx, ["x^2"])
    d = M.to_json()
    assert d["generators"] == [0] and d["relation_degrees"] == [2]
