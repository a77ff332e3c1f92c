"""Graded Matlis duality over Artinian rings, canonical modules and CM duality."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ext_module, hom_complex
from .errors import NotArtinianError, NotCohenMacaulayError
from .invariants import depth, is_cm, krull_dim, ring_dim, ring_is_cm
from .modules import GradedModule, graded_pieces, module_from_action
from .polynomials import to_ring


def matlis_dual(M: GradedModule) -> GradedModule:
    """D(M) = Hom_k(M, k) with D(M)_d = (M_{-d})^* and the transposed action."""
    ring = M.ring
    if ring_dim(ring) > 0:
        raise NotArtinianError(f"Matlis duality is only realized over Artinian rings; "
                               f"dim {ring} = {ring_dim(ring)}")
    if M.is_zero():
        return GradedModule.zero(ring)
    dims, action, _ = graded_pieces(M)
    w = ring.weights
    ddims = {-d: n for d, n in dims.items()}

    def daction(j, d):
        # x_j on D_d is the transpose of x_j: M_{-d-w_j} -> M_{-d}
        src = -d - w[j]
        n = ddims.get(d, 0)
        cols = [dict() for _ in range(n)]
        if dims.get(src, 0) == 0:
            return cols
        for v, col in enumerate(action(j, src)):
            for u, c in col.items():
                cols[u][v] = c
        return cols

    D = module_from_action(ring, ddims, daction)
    D.name = f"D({M.name})" if M.name else "D(M)"
    return D


@dataclass
class DualizingModule:
    """omega_R = Ext^c_Q(R, Q(-n)), c = codimension, n = sum of the weights."""

    module: GradedModule
    codim: int
    twist: int

    def to_json(self) -> dict:
        return {"codim": self.codim, "twist": self.twist, "module": self.module.to_json()}


def dualizing_module(ring, check: bool = True) -> DualizingModule:
    ring = to_ring(ring)
    if check and not ring_is_cm(ring):
        raise NotCohenMacaulayError(f"{ring} is not Cohen-Macaulay; no dualizing module")
    Q = ring.ambient.as_ring()
    n = sum(ring.weights)
    c = int(ring.nvars - ring_dim(ring))
    R_over_Q = GradedModule.free(ring, [0]).restrict_to(Q)
    E = ext_module(R_over_Q, GradedModule.free(Q, [n]), c)
    omega = E.base_change(ring).minimal_presentation()
    omega.name = "omega"
    return DualizingModule(omega, c, n)


def cm_dual(M: GradedModule, omega: DualizingModule | None = None) -> GradedModule:
    """Ext^{d-n}_R(M, omega) for M Cohen-Macaulay of dimension n, d = dim R."""
    ring = M.ring
    if omega is None:
        omega = dualizing_module(ring)
    if M.is_zero():
        return GradedModule.zero(ring)
    if not is_cm(M):
        raise NotCohenMacaulayError(
            f"module is not Cohen-Macaulay: depth {depth(M)}, dim {krull_dim(M)}")
    d = int(ring_dim(ring))
    n = int(krull_dim(M))
    out = ext_module(M, omega.module, d - n).minimal_presentation()
    return out


def matlis_dual_complex(P, ring=None):
    """Hom_R(P, D(R)) for a free complex P over an Artinian ring, as a ModuleComplex."""
    ring = to_ring(ring if ring is not None else P.ring)
    DR = matlis_dual(GradedModule.free(ring, [0]))
    return hom_complex(P, DR), DR


def dualize_quasi_resolution(cert, target: GradedModule | None = None, seed: int = 0):
    """Swap a quasi-projective certificate for D(M) and a quasi-injective one for M.

    Projective -> injective: I = Hom_R(P, D(R)), whose homology in degree -i
    is D(H_i(P)).  Injective -> projective: Hom_R(I, D(R)) is canonically the
    free complex P the injective certificate was built from.
    """
    from .quasires import QuasiResolutionCertificate

    ring = cert.ring
    if ring_dim(ring) > 0:
        raise NotArtinianError("quasi-resolution dualization needs an Artinian ring")
    if cert.kind == "quasi-projective":
        if target is None:
            target = matlis_dual(cert.target)
        I, _ = matlis_dual_complex(cert.complex, ring)
        out = QuasiResolutionCertificate.build_injective(I, cert.complex, target, seed=seed,
                                                         route="matlis-dual")
        out.notes.append("Hom_R(P, D(R)) of a quasi-projective certificate")
        return out
    if cert.kind == "quasi-injective":
        if target is None:
            target = matlis_dual(cert.target)
        out = QuasiResolutionCertificate.build_projective(cert.free_model, target, seed=seed,
                                                          route="matlis-dual")
        out.notes.append("Hom_R(I, D(R)) recovered as the underlying free complex")
        return out
    raise ValueError(f"unknown certificate kind {cert.kind!r}")

