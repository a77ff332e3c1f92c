import pytest

from qhom.complexes import ChainMap, cone, free_resolution, koszul_complex
from qhom.duality import dualize_quasi_resolution, matlis_dual
from qhom.matrices import PolyMatrix
from qhom.modules import GradedModule, is_isomorphic
from qhom.quasires import (
    THEOREMS,
    QuasiResolutionCertificate,
    build_homotopies,
    finite_pd,
    koszul_qpres_residue_field,
    koszul_qpres_vector_space,
    power_lift,
    qid_certified,
    qid_obstruction,
    qpd_certified,
    qpres_tensor_down,
    syzygy_module,
)


def test_tensor_down_residue_field(ci2):
    k = GradedModule.residue_field(ci2)
    cert = qpres_tensor_down(k)
    assert cert.valid and cert.verify()
    assert cert.multiplicities == {0: 1, 1: 2, 2: 1}
    assert cert.shifts == {0: {0: 1}, 1: {2: 2}, 2: {4: 1}}
    assert cert.measure == 0


def test_tensor_down_rejects_non_regular(triv):
    with pytest.raises(ValueError):
        qpres_tensor_down(GradedModule.residue_field(triv))


def test_koszul_residue_certificate(type2, noncm):
    for R in (type2, noncm):
        cert = koszul_qpres_residue_field(R)
        assert cert.valid
        assert all(cert.details["annihilated_by_m"].values())
    cert = koszul_qpres_residue_field(type2)
    assert cert.multiplicities == {0: 1, 1: 3, 2: 2}


def test_koszul_vector_space_certificate(triv):
    k = GradedModule.residue_field(triv)
    V = k.power(2).direct_sum(k.shifted(1))
    cert = koszul_qpres_vector_space(V)
    assert cert.valid and cert.complex.rank(0) == 3
    with pytest.raises(ValueError):
        koszul_qpres_vector_space(GradedModule.free(triv, [0]))


def test_acyclic_complex_certifies_nothing(kxy):
    # a nonzero target needs at least one nonzero multiplicity
    K = koszul_complex(kxy.gens, kxy)
    ident = {i: PolyMatrix.identity(kxy, K.twists(i)) for i in K.indices}
    K = cone(ChainMap(K, K, ident))
    cert = QuasiResolutionCertificate.build_projective(K, GradedModule.residue_field(kxy))
    assert not cert.failures and not cert.valid
    assert cert.to_json()["sign_convention"].startswith("D_i = Hom(C_{-i}, R)")


def test_certificate_rejects_wrong_target(dual_numbers):
    k = GradedModule.residue_field(dual_numbers)
    F = free_resolution(k, 2)
    cert = QuasiResolutionCertificate.build_projective(F, GradedModule.free(dual_numbers, [0]))
    assert not cert.valid and cert.failures


@pytest.mark.parametrize("n", [2, 3, 4])
def test_homotopies(kx, n):
    x, = kx.gens
    F = free_resolution(GradedModule.residue_field(kx), 3)
    hs = build_homotopies(F, x, n)
    assert hs.verify() == []
    assert hs.shift == n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_power_lift(kx, n):
    x, = kx.gens
    k = GradedModule.residue_field(kx)
    res = power_lift(free_resolution(k, 3), x, n, target=k)
    assert res.ok
    assert all(w.isomorphic for w in res.witnesses.values())
    assert res.certificate is not None and res.certificate.valid


def test_power_lift_in_two_variables(kxy):
    x, y = kxy.gens
    F = koszul_complex([x, y], kxy)
    res = power_lift(F, x + y, 2)
    assert res.ok and res.homotopies.verify() == []


def test_finite_pd(hyper, kxy):
    x, y = hyper.gens
    assert finite_pd(GradedModule.cyclic(hyper, [x])) is None
    assert finite_pd(GradedModule.free(hyper, [0])) == 0
    assert finite_pd(GradedModule.residue_field(kxy)) == 2
    assert finite_pd(GradedModule.zero(kxy)) == float("-inf")


def test_qpd_values(ci2, triv, type2):
    for R in (ci2, triv, type2):
        v = qpd_certified(GradedModule.residue_field(R))
        assert v.finite
        assert v.value == v.certificate.measure - (v.certificate.measure - v.value)
    v = qpd_certified(GradedModule.residue_field(type2))
    assert v.value == 1 and v.certificate.route == "koszul"
    v = qpd_certified(GradedModule.residue_field(ci2))
    assert v.value == 0 and v.certificate.route == "tensor-down"


def test_qid_obstructions(type2, noncm, triv):
    R = GradedModule.free(type2, [0])
    obs = qid_obstruction(R)
    assert obs.theorem is THEOREMS["gorenstein-obstruction"]
    v = qid_certified(R)
    assert v.infinite and v.value == float("inf")
    obs = qid_obstruction(GradedModule.free(noncm, [0]))
    assert obs.theorem is THEOREMS["cm-obstruction"]
    assert qid_certified(GradedModule.residue_field(triv)).finite


@pytest.mark.parametrize("name", ["dual_numbers", "ci2"])
def test_qid_of_gorenstein_artinian(request, name):
    R = request.getfixturevalue(name)
    for M in (GradedModule.free(R, [0]), GradedModule.residue_field(R)):
        v = qid_certified(M)
        assert v.finite and v.value == 0


def test_qid_cm_duality_route(type2):
    k = GradedModule.residue_field(type2)
    v = qid_certified(k)
    assert v.finite and v.value == 1
    assert v.routes[0][0] == "cm-duality"
    # R/(x) has finite pd over a non-Gorenstein ring
    x = type2.gens[0]
    assert qid_certified(GradedModule.cyclic(type2, [x])).infinite


def test_qid_of_example_quotient(type2):
    x, y, z = type2.gens
    Rx = type2.quotient([x])
    mx = GradedModule.ideal(type2, [x, y, z]).base_change(Rx)
    v = qid_certified(mx)
    assert v.finite and v.value == 0


def test_dualize_round_trip(ci2):
    x, y = ci2.gens
    M = GradedModule.cyclic(ci2, [x])
    qp = qpd_certified(M).certificate
    inj = dualize_quasi_resolution(qp)
    assert inj.kind == "quasi-injective" and inj.valid
    assert inj.multiplicities == {-i: c for i, c in qp.multiplicities.items()}
    back = dualize_quasi_resolution(inj)
    assert back.valid and back.multiplicities == qp.multiplicities
    assert is_isomorphic(back.target, matlis_dual(matlis_dual(M))).isomorphic


def test_syzygy(kxy):
    k = GradedModule.residue_field(kxy)
    assert syzygy_module(k, 1).minimal_gen_degrees == [1, 1]
    assert syzygy_module(k, 3).is_zero()


def test_verdict_json(type2):
    d = qid_certified(GradedModule.free(type2, [0])).to_json()
    assert d["status"] == "infinite" and d["value"] == "inf"
    assert d["obstruction"]["theorem"]["id"] == "gorenstein-obstruction"
    assert d["model"] == "graded-local model"
