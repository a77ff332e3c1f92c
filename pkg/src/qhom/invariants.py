"""Depth, dimension, Cohen-Macaulay and Gorenstein tests, Betti and Bass numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .complexes import ext_module, free_resolution
from .modules import GradedModule
from .polynomials import to_ring

NEG_INF = -math.inf


def _as_module(M) -> GradedModule:
    if isinstance(M, GradedModule):
        return M
    return GradedModule.free(to_ring(M), [0])


def _cached(M: GradedModule, key: str, compute):
    store = M.__dict__.setdefault("_inv_cache", {})
    if key not in store:
        store[key] = compute()
    return store[key]


def residue_resolution(ring, length: int):
    """Minimal resolution of k over R, cached per ring and extended on demand."""
    ring = to_ring(ring)
    cache = _RES_CACHE.get(ring)
    if cache is not None and (cache.truncated_at is None or cache.truncated_at >= length):
        return cache
    F = free_resolution(GradedModule.residue_field(ring), length)
    _RES_CACHE[ring] = F
    return F


_RES_CACHE: dict = {}


def krull_dim(M) -> float:
    """Pole order of the Hilbert series at t = 1 (-inf for the zero module)."""
    return _as_module(M).krull_dim()


def ext_against_residue(M, i: int) -> GradedModule:
    M = _as_module(M)
    F = residue_resolution(M.ring, i + 1)
    k = GradedModule.residue_field(M.ring)
    return ext_module(k, M, i, resolution=F)


def depth(M) -> int:
    """min{ i : Ext^i_R(k, M) != 0 }."""
    M = _as_module(M)

    def compute():
        if M.is_zero():
            raise ValueError("depth of the zero module is undefined")
        top = int(M.krull_dim())
        for i in range(top + 1):
            if not ext_against_residue(M, i).is_zero():
                return i
        raise AssertionError("no nonvanishing Ext^i(k, M) up to dim M")

    return _cached(M, "depth", compute)


def is_cm(M) -> bool:
    M = _as_module(M)
    if M.is_zero():
        return True
    return depth(M) == krull_dim(M)


def is_mcm(M) -> bool:
    M = _as_module(M)
    return not M.is_zero() and depth(M) == krull_dim(M.ring)


def bass_numbers(M, bound: int) -> list[int]:
    """mu^i = dim_k Ext^i_R(k, M) for 0 <= i <= bound."""
    M = _as_module(M)
    out = []
    for i in range(bound + 1):
        E = ext_against_residue(M, i)
        out.append(0 if E.is_zero() else E.hilbert().total_dimension())
    return out


def cm_type(M) -> int:
    """mu^{depth M}(M)."""
    M = _as_module(M)
    d = depth(M)
    return ext_against_residue(M, d).hilbert().total_dimension()


def ring_type(ring) -> int:
    return _ring_facts(to_ring(ring))[2]


@lru_cache(maxsize=None)
def _ring_facts(ring) -> tuple:
    R = GradedModule.free(ring, [0])
    d = depth(R)
    dim = krull_dim(R)
    typ = cm_type(R)
    return d, dim, typ


def is_gorenstein(ring) -> bool:
    d, dim, typ = _ring_facts(to_ring(ring))
    return d == dim and typ == 1


def ring_depth(ring) -> int:
    return _ring_facts(to_ring(ring))[0]


def ring_dim(ring) -> float:
    return _ring_facts(to_ring(ring))[1]


def ring_is_cm(ring) -> bool:
    d, dim, _ = _ring_facts(to_ring(ring))
    return d == dim


def is_artinian(ring) -> bool:
    return ring_dim(ring) <= 0


@dataclass
class BettiTable:
    ranks: list[int]
    twists: list[list[int]]
    complete: bool

    def to_json(self) -> dict:
        return {"ranks": self.ranks, "twists": self.twists, "complete": self.complete}


def betti_numbers(M, bound: int) -> BettiTable:
    M = _as_module(M)
    F = free_resolution(M, bound)
    top = bound if F.truncated_at is not None else (int(F.sup) if F.modules else -1)
    ranks = [F.rank(i) for i in range(top + 1)]
    twists = [sorted(F.twists(i)) for i in range(top + 1)]
    return BettiTable(ranks, twists, F.truncated_at is None)


def projective_dimension(M, bound: int):
    """pd M if the minimal resolution stops within ``bound`` steps, else None."""
    M = _as_module(M)
    F = free_resolution(M, bound)
    if F.truncated_at is not None:
        return None
    return int(F.sup) if F.modules else NEG_INF


def default_pd_bound(ring) -> int:
    ring = to_ring(ring)
    return int(max(ring_dim(ring), 0)) + ring.nvars + 2


@dataclass
class InvariantReport:
    depth: int | None
    dim: float
    is_cm: bool
    betti: list
    bass: list
    is_gorenstein: bool | None = None
    type: int | None = None
    pd: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        dim = None if self.dim == NEG_INF else int(self.dim)
        return {
            "depth": self.depth,
            "dim": dim,
            "is_cm": self.is_cm,
            "is_gorenstein": self.is_gorenstein,
            "type": self.type,
            "betti": self.betti,
            "bass": self.bass,
            "pd": self.pd,
        }


def module_report(M, bound: int | None = None) -> InvariantReport:
    M = _as_module(M)
    ring = M.ring
    if bound is None:
        bound = int(max(ring_dim(ring), 0)) + 2
    if M.is_zero():
        return InvariantReport(None, NEG_INF, True, [], [])
    d = depth(M)
    bt = betti_numbers(M, bound)
    report = InvariantReport(
        depth=d,
        dim=krull_dim(M),
        is_cm=is_cm(M),
        betti=bt.ranks,
        bass=bass_numbers(M, bound),
        type=cm_type(M),
        pd=projective_dimension(M, default_pd_bound(ring)),
    )
    return report


def ring_report(ring, bound: int | None = None) -> InvariantReport:
    ring = to_ring(ring)
    R = GradedModule.free(ring, [0])
    rep = module_report(R, bound)
    rep.is_gorenstein = is_gorenstein(ring)
    rep.betti = betti_numbers(GradedModule.residue_field(ring),
                              bound if bound is not None else int(max(ring_dim(ring), 0)) + 2).ranks
    return rep
