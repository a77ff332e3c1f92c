"""The shipped corpus of rings and modules, and the theorem-check harness."""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .complexes import ext_module, koszul_complex
from .duality import cm_dual, dualize_quasi_resolution, dualizing_module, matlis_dual
from .fields import Field
from .invariants import depth, is_cm, krull_dim, ring_depth, ring_dim, ring_is_cm, is_gorenstein
from .modules import GradedModule, is_isomorphic
from .polynomials import PolyRing, Polynomial
from .quasires import (
    THEOREMS,
    finite_pd,
    koszul_qpres_residue_field,
    qid_certified,
    qid_obstruction,
    qpd_certificate,
    qpd_certified,
    qpres_tensor_down,
    residue_generators,
)

INF = math.inf


@dataclass
class CorpusEntry:
    name: str
    ring: object
    modules: list  # (name, GradedModule)

    @property
    def artinian(self) -> bool:
        return ring_dim(self.ring) <= 0


RING_TABLE = [
    # name, variables, defining ideal
    ("k[x]", ["x"], []),
    ("k[x,y]", ["x", "y"], []),
    ("k[x]/(x^2)", ["x"], ["x^2"]),
    ("k[x,y]/(x^2,y^2)", ["x", "y"], ["x^2", "y^2"]),
    ("k[x,y]/(x^2)", ["x", "y"], ["x^2"]),
    ("k[x,y]/(x^2,xy,y^2)", ["x", "y"], ["x^2", "x*y", "y^2"]),
    ("k[x,y]/(x^2,xy)", ["x", "y"], ["x^2", "x*y"]),
    ("k[x,y,z]/(y^2,yz,z^2)", ["x", "y", "z"], ["y^2", "y*z", "z^2"]),
]


def make_ring(variables, relations, field: Field | None = None):
    field = field or Field.prime(101)
    P = PolyRing(field, variables, [1] * len(variables))
    return P.quotient(relations)


def corpus_modules(R) -> list:
    x = R.gens[0]
    out = [
        ("R", GradedModule.free(R, [0])),
        ("k", GradedModule.residue_field(R)),
        ("R/(x)", GradedModule.cyclic(R, [x])),
        ("m", GradedModule.ideal(R, residue_generators(R))),
    ]
    return [(n, M) for n, M in out if not M.is_zero()]


def build_corpus(field: Field | None = None, names=None) -> list[CorpusEntry]:
    out = []
    for name, variables, rels in RING_TABLE:
        if names is not None and name not in names:
            continue
        R = make_ring(variables, rels, field)
        out.append(CorpusEntry(name, R, corpus_modules(R)))
    return out


def random_module(R, rng: random.Random, max_gens: int = 2, max_rels: int = 2,
                  max_deg: int = 2) -> GradedModule:
    """Cokernel of a random homogeneous matrix with small twists."""
    P = R.ambient
    field = R.field
    ng = rng.randint(1, max_gens)
    gen_twists = sorted(rng.randint(0, 1) for _ in range(ng))
    nr = rng.randint(0, max_rels)
    rel_twists = [max(gen_twists) + rng.randint(1, max_deg) for _ in range(nr)]
    rows = []
    for a in gen_twists:
        row = []
        for b in rel_twists:
            terms = {}
            for e in P.monomials_of_degree(b - a):
                c = field.random_element(rng)
                if c:
                    terms[e] = c
            row.append(R(Polynomial(P, terms)) if terms else R.zero)
        rows.append(row)
    return GradedModule.coker(R, rows, gen_twists, rel_twists)


# theorem checks


@dataclass
class TheoremCheck:
    theorem: str
    checked: int = 0
    inconclusive: int = 0
    violations: list = field(default_factory=list)

    def record(self, ok: bool | None, where: str, detail: str = ""):
        if ok is None:
            self.inconclusive += 1
            return
        self.checked += 1
        if not ok:
            self.violations.append({"instance": where, "detail": detail})

    def merge(self, other: "TheoremCheck"):
        self.checked += other.checked
        self.inconclusive += other.inconclusive
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        t = THEOREMS[self.theorem]
        return {
            "theorem-id": t.id,
            "statement": t.statement,
            "instances-checked": self.checked,
            "inconclusive": self.inconclusive,
            "violations": list(self.violations),
        }


ORDER = [
    "bass-formula",
    "dim-depth",
    "cm-obstruction",
    "gorenstein-obstruction",
    "quasi-auslander-buchsbaum",
    "tensor-down",
    "koszul-residue",
    "matlis-duality",
    "self-ext-artinian",
    "cm-duality",
    "gorenstein-qpd-qid",
    "ext-propagation",
    "exact-sequence-transfer",
    "nzd-reduction",
    "direct-sum-invariance",
]


def koszul_depth(R) -> int:
    """depth R = n - max{i : H_i(K(x; R)) != 0} for generators x of m."""
    xs = residue_generators(R)
    K = koszul_complex(xs, R)
    top = max(i for i in range(len(xs) + 1) if not K.homology(i).is_zero())
    return len(xs) - top


def _regular_on(x, M: GradedModule, R) -> bool:
    """x of degree w is M-regular iff H(M/xM) = (1 - t^w) H(M)."""
    Rx = R.quotient([x])
    w = x.degree()
    return M.base_change(Rx).hilbert() == M.hilbert().times({0: 1, w: -1})


def check_entry(entry: CorpusEntry, seed: int = 0, ext_extra: int = 2) -> dict[str, TheoremCheck]:
    R = entry.ring
    checks = {t: TheoremCheck(t) for t in ORDER}
    dR = ring_depth(R)
    dimR = ring_dim(R)
    gor = is_gorenstein(R)
    kd = koszul_depth(R)

    qid = {}
    qpd = {}
    for name, M in entry.modules:
        where = f"{entry.name} :: {name}"
        v = qid_certified(M, seed, use_obstructions=False)
        qid[name] = v
        p = qpd_certified(M, seed)
        qpd[name] = p
        dimM = krull_dim(M)
        if v.finite:
            checks["bass-formula"].record(v.value == kd, where, f"qid {v.value}, depth R {kd}")
            checks["dim-depth"].record(dimM <= dR, where, f"dim M {dimM}, depth R {dR}")
        if dimM == dimR:
            checks["cm-obstruction"].record(not v.finite or ring_is_cm(R), where,
                                            "finite qid with dim M = dim R on a non-CM ring")
        pd = finite_pd(M)
        if pd is not None:
            checks["gorenstein-obstruction"].record(not v.finite or gor, where,
                                                    "finite pd and finite qid, R not Gorenstein")
        obs = qid_obstruction(M)
        if obs is not None and v.finite:
            checks[obs.theorem.id].record(False, where, "obstruction contradicts a certificate")
        if p.finite:
            ok = p.certificate.measure >= p.value and p.certificate.verify()
            if pd is not None:
                ok = ok and pd == p.value
            checks["quasi-auslander-buchsbaum"].record(
                ok, where, f"measure {p.certificate.measure}, value {p.value}, pd {pd}")
        if gor:
            if v.status in ("finite", "infinite") and p.status in ("finite", "infinite"):
                checks["gorenstein-qpd-qid"].record(v.finite == p.finite, where,
                                                    f"qid {v.status}, qpd {p.status}")
            else:
                checks["gorenstein-qpd-qid"].record(None, where)

    # tensor-down against the defining presentation
    gens = list(R.ideal_gens)
    if gens:
        from .groebner import is_regular_sequence

        if is_regular_sequence(gens, R.ambient.as_ring()):
            c = len(gens)
            for name, M in entry.modules:
                cert = qpres_tensor_down(M, seed=seed)
                want = {i: math.comb(c, i) for i in range(c + 1)}
                checks["tensor-down"].record(cert.valid and cert.multiplicities == want,
                                             f"{entry.name} :: {name}",
                                             f"multiplicities {cert.multiplicities}")

    kc = koszul_qpres_residue_field(R, seed)
    checks["koszul-residue"].record(kc.valid and all(kc.details["annihilated_by_m"].values()),
                                    entry.name, f"multiplicities {kc.multiplicities}")

    if entry.artinian:
        for name, M in entry.modules:
            where = f"{entry.name} :: {name}"
            DDM = matlis_dual(matlis_dual(M))
            w = is_isomorphic(DDM, M, seed=seed)
            cert = qpd_certificate(matlis_dual(M), seed)
            same = True
            if cert is not None:
                inj = dualize_quasi_resolution(cert, target=M, seed=seed)
                back = dualize_quasi_resolution(inj, target=matlis_dual(M), seed=seed)
                same = (inj.multiplicities == {-i: a for i, a in cert.multiplicities.items()}
                        and back.multiplicities == cert.multiplicities
                        and inj.measure == cert.measure)
            checks["matlis-duality"].record(w.isomorphic and same, where,
                                            f"double dual {w.verdict}, multiplicities kept {same}")
            bound = int(max(dimR, 0)) + 2
            rigid = all(ext_module(M, M, i).is_zero() for i in range(1, bound + 1))
            if rigid and qid[name].finite:
                checks["self-ext-artinian"].record(finite_pd(matlis_dual(M)) is not None, where,
                                                   "D(M) has infinite pd")

    if ring_is_cm(R):
        omega = dualizing_module(R)
        for name, M in entry.modules:
            if not is_cm(M):
                continue
            where = f"{entry.name} :: {name}"
            N = cm_dual(M, omega)
            w = is_isomorphic(cm_dual(N, omega), M, seed=seed)
            ok = w.isomorphic
            if qpd[name].finite:
                ok = ok and qid_certified(N, seed).finite
            checks["cm-duality"].record(ok, where, f"double dual {w.verdict}")

    # Ext vanishing beyond depth R for N of finite qid, when Ext vanishes at the top
    top = dR + 1 + ext_extra
    for nname, N in entry.modules:
        if not qid[nname].finite:
            continue
        for mname, M in entry.modules:
            where = f"{entry.name} :: Ext({mname}, {nname})"
            ext = [ext_module(M, N, i).is_zero() for i in range(top + 1)]
            if ext[top] and ext[top - 1]:
                checks["ext-propagation"].record(all(ext[dR + 1:]), where,
                                                 f"vanishing pattern {ext}")

    # 0 -> Omega M -> F_0 -> M -> 0 with F_0 free
    from .complexes import free_resolution

    for name, M in entry.modules:
        if not qpd[name].finite or M.is_free():
            continue
        F = free_resolution(M, 1)
        if 2 in F.d:
            syz = GradedModule(F.diff(2))
        elif F.modules.get(1):
            syz = GradedModule.free(R, F.twists(1))
        else:
            continue
        v = qpd_certified(syz, seed)
        checks["exact-sequence-transfer"].record(True if v.finite else None,
                                                 f"{entry.name} :: Omega {name}")

    # reduction modulo a nonzerodivisor down to an Artinian ring
    if dimR == 1:
        x = _linear_nzd(R)
        if x is not None:
            for name, M in entry.modules:
                if not qid[name].finite or not _regular_on(x, M, R):
                    continue
                Mx = M.base_change(R.quotient([x]))
                v = qid_certified(Mx, seed)
                checks["nzd-reduction"].record(v.finite or None, f"{entry.name} :: {name}/x{name}",
                                               f"qid of the reduction: {v.status}")

    for name, M in entry.modules[:2]:
        where = f"{entry.name} :: {name}+{name}"
        M2 = M.direct_sum(M)
        a, b = qid[name], qid_certified(M2, seed, use_obstructions=False)
        c, d = qpd[name], qpd_certified(M2, seed)
        ok = (a.status, a.value) == (b.status, b.value) and (c.status, c.value) == (d.status,
                                                                                       d.value)
        checks["direct-sum-invariance"].record(ok, where, f"qid {a.status}/{b.status}, "
                                                          f"qpd {c.status}/{d.status}")
    return checks


def _linear_nzd(R):
    """A variable that is a nonzerodivisor on R, if any."""
    Rm = GradedModule.free(R, [0])
    for x in R.gens:
        if x and _regular_on(x, Rm, R):
            return x
    return None


def theorem_harness(corpus: list[CorpusEntry], seed: int = 0, threads: int | None = None) -> list[dict]:
    """Run every check on every entry and aggregate per theorem in a fixed order."""
    if threads is None:
        threads = int(os.environ.get("QHOM_THREADS", "1") or 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda e: check_entry(e, seed), corpus))
    else:
        results = [check_entry(e, seed) for e in corpus]
    total = {t: TheoremCheck(t) for t in ORDER}
    for r in results:
        for t in ORDER:
            total[t].merge(r[t])
    return [total[t].to_json() for t in ORDER]


def ring_table(corpus: list[CorpusEntry]) -> list[dict]:
    rows = []
    for e in corpus:
        R = e.ring
        rows.append({
            "ring": e.name,
            "dim": int(ring_dim(R)),
            "depth": ring_depth(R),
            "cohen-macaulay": ring_is_cm(R),
            "gorenstein": is_gorenstein(R),
        })
    return rows


def verdict_table(corpus: list[CorpusEntry], seed: int = 0) -> list[dict]:
    rows = []
    for e in corpus:
        for name, M in e.modules:
            v = qid_certified(M, seed)
            p = qpd_certified(M, seed)
            rows.append({
                "ring": e.name,
                "module": name,
                "depth": depth(M),
                "dim": int(krull_dim(M)),
                "qpd": _short(p),
                "qid": _short(v),
            })
    return rows


def _short(v) -> dict:
    val = v.value
    if val == INF:
        val = "inf"
    return {
        "status": v.status,
        "value": val,
        "via": [t.id for t in v.trail],
        "route": v.certificate.route if v.certificate is not None else None,
    }


def type_two_example(seed: int = 0) -> dict:
    """The one-dimensional CM ring k[x,y,z]/(y^2,yz,z^2) end to end."""
    R = make_ring(["x", "y", "z"], ["y^2", "y*z", "z^2"])
    x, y, z = R.gens
    m = GradedModule.ideal(R, [x, y, z])
    Rx = R.quotient([x])
    mx = m.base_change(Rx)
    k3 = GradedModule.residue_field(Rx).power(3)
    w = is_isomorphic(mx, k3, seed=seed, up_to_shift=True)
    v = qid_certified(mx, seed)
    return {
        "dim": int(ring_dim(R)),
        "depth": ring_depth(R),
        "cohen-macaulay": ring_is_cm(R),
        "gorenstein": is_gorenstein(R),
        "m/xm ~ k^3": w.verdict,
        "shift": w.shift,
        "qid(m/xm over R/(x))": _short(v),
        "depth R/(x)": ring_depth(Rx),
        "qid(R)": _short(qid_certified(GradedModule.free(R, [0]), seed)),
    }


def verify_paper(seed: int = 0, threads: int | None = None) -> dict:
    corpus = build_corpus()
    harness = theorem_harness(corpus, seed, threads)
    return {
        "rings": ring_table(corpus),
        "example": type_two_example(seed),
        "verdicts": verdict_table(corpus, seed),
        "theorems": harness,
        "violations": sum(len(t["violations"]) for t in harness),
    }
