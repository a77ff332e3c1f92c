"""Bounded chain complexes of twisted free modules and their homology.

Indexing is homological: ``d[i]`` maps C_i -> C_{i-1}.  Matrices act on
column vectors, so ``d[i]`` has rows indexed by C_{i-1} and columns by C_i.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import ComplexError, HomogeneityError, RingMismatchError, TruncationError
from .groebner import kernel_of_matrix
from .hilbert import HilbertSeries
from .matrices import PolyMatrix
from .modules import GradedModule
from .polynomials import to_ring

INF = math.inf


def subquotient(K: PolyMatrix, B: PolyMatrix) -> GradedModule:
    """im K / im B for maps into the same free module, assuming im B ⊆ im K.

    x in the source of K maps into im B exactly when (x, y) lies in
    ker[K | B] for some y, so the quotient is presented by the K-part of
    that kernel.
    """
    ring = K.ring
    nk = K.ncols
    if nk == 0:
        return GradedModule.zero(ring)
    if B.ncols == 0:
        rel = kernel_of_matrix(K) if K.nrows else PolyMatrix.identity(ring, K.col_twists)
        return GradedModule(rel)
    S = kernel_of_matrix(K.hstack(B))
    rel = S.select_rows(range(nk))
    keep = [j for j in range(rel.ncols) if any(rel.column(j))]
    return GradedModule(rel.select_columns(keep))


def _is_zero_map(A: PolyMatrix) -> bool:
    return A.nrows == 0 or A.ncols == 0 or A.is_zero()


class ChainComplex:
    """A bounded complex of graded free modules R(-a) over a quotient ring."""

    def __init__(self, ring, modules: dict, differentials: dict | None = None,
                 truncated_at: int | None = None, check: bool = True):
        self.ring = to_ring(ring)
        self.modules = {int(i): list(t) for i, t in modules.items() if len(t)}
        self.truncated_at = truncated_at
        self.d: dict[int, PolyMatrix] = {}
        for i, A in (differentials or {}).items():
            if A.ring != self.ring:
                raise RingMismatchError(f"differential {i} over {A.ring}")
            if A.nrows and A.ncols:
                self.d[int(i)] = A
        if check:
            self.validate()

    # shape

    def twists(self, i: int) -> list[int]:
        return self.modules.get(i, [])

    def rank(self, i: int) -> int:
        return len(self.modules.get(i, []))

    def diff(self, i: int) -> PolyMatrix:
        A = self.d.get(i)
        if A is None:
            return PolyMatrix.zero(self.ring, self.twists(i - 1), self.twists(i))
        return A

    @property
    def indices(self) -> list[int]:
        return sorted(self.modules)

    @property
    def sup(self):
        return max(self.modules) if self.modules else -INF

    @property
    def inf(self):
        return min(self.modules) if self.modules else INF

    @property
    def length(self):
        if not self.modules:
            return -INF
        return self.sup - self.inf

    def ranks(self) -> dict[int, int]:
        return {i: len(t) for i, t in sorted(self.modules.items())}

    def __repr__(self):
        r = ", ".join(f"{i}:{n}" for i, n in self.ranks().items())
        return f"ChainComplex({{{r}}})"

    def validate(self):
        """Shapes, twists, homogeneity and d∘d = 0; raises at the first bad index."""
        for i, A in self.d.items():
            if A.row_twists != self.twists(i - 1) or A.col_twists != self.twists(i):
                raise ComplexError("differential does not match module twists", i)
            try:
                A.check_degrees()
            except HomogeneityError as exc:
                raise ComplexError(f"differential is not degree 0: {exc}", i) from None
        for i in sorted(self.d):
            if i - 1 in self.d and not (self.d[i - 1] @ self.d[i]).is_zero():
                raise ComplexError("d∘d != 0", i)
        return True

    # homology

    def cycles(self, i: int) -> PolyMatrix:
        """Generators of Z_i = ker d_i as columns in C_i."""
        A = self.diff(i)
        if _is_zero_map(A):
            return PolyMatrix.identity(self.ring, self.twists(i))
        return kernel_of_matrix(A)

    def boundaries(self, i: int) -> PolyMatrix:
        """Generators of B_i = im d_{i+1}."""
        return self.diff(i + 1)

    def homology(self, i: int) -> GradedModule:
        if i not in self.modules:
            return GradedModule.zero(self.ring)
        return subquotient(self.cycles(i), self.boundaries(i))

    def homology_table(self) -> "HomologyTable":
        return HomologyTable({i: self.homology(i) for i in self.indices})

    def hsup(self):
        return self.homology_table().hsup

    def hinf(self):
        return self.homology_table().hinf

    def euler_characteristic(self) -> HilbertSeries:
        """sum (-1)^i hilbert(C_i)."""
        out = HilbertSeries({}, self.ring.weights)
        for i in self.indices:
            h = GradedModule.free(self.ring, self.twists(i)).hilbert()
            out = out + h if i % 2 == 0 else out - h
        return out

    # constructions

    def shift(self, j: int) -> "ChainComplex":
        """C[j]_i = C_{i-j} with differential (-1)^j d_{i-j}."""
        sign = -1 if j % 2 else 1
        mods = {i + j: t for i, t in self.modules.items()}
        ds = {i + j: (A if sign == 1 else -A) for i, A in self.d.items()}
        trunc = None if self.truncated_at is None else self.truncated_at + j
        return ChainComplex(self.ring, mods, ds, trunc, check=False)

    def twisted(self, s: int) -> "ChainComplex":
        """C(-s): every generator degree raised by s."""
        mods = {i: [a + s for a in t] for i, t in self.modules.items()}
        ds = {i: A.twisted(s) for i, A in self.d.items()}
        return ChainComplex(self.ring, mods, ds, self.truncated_at, check=False)

    def base_change(self, ring) -> "ChainComplex":
        """C ⊗_Q R for a quotient R of the complex's ring."""
        ring = to_ring(ring)
        if not ring.is_quotient_of(self.ring):
            raise RingMismatchError(f"{ring} is not a quotient of {self.ring}")
        ds = {i: A.base_change(ring) for i, A in self.d.items()}
        return ChainComplex(ring, self.modules, ds, self.truncated_at)

    def negated(self) -> "ChainComplex":
        return ChainComplex(self.ring, self.modules, {i: -A for i, A in self.d.items()},
                            self.truncated_at, check=False)

    def same_as(self, other: "ChainComplex") -> bool:
        if self.ring != other.ring or self.modules != other.modules:
            return False
        keys = set(self.d) | set(other.d)
        return all(self.diff(i) == other.diff(i) for i in keys)

    def to_json(self) -> dict:
        return {
            "indices": self.indices,
            "twists": {str(i): t for i, t in sorted(self.modules.items())},
            "differentials": {str(i): A.to_json() for i, A in sorted(self.d.items())},
            "truncated_at": self.truncated_at,
        }

    @classmethod
    def from_json(cls, ring, data) -> "ChainComplex":
        mods = {int(i): t for i, t in data["twists"].items()}
        ds = {int(i): PolyMatrix.from_json(ring, A) for i, A in data["differentials"].items()}
        return cls(ring, mods, ds, data.get("truncated_at"))


@dataclass
class HomologyTable:
    groups: dict

    def __getitem__(self, i):
        return self.groups.get(i)

    def nonzero(self) -> list[int]:
        return [i for i, H in sorted(self.groups.items()) if not H.is_zero()]

    @property
    def hsup(self):
        nz = self.nonzero()
        return max(nz) if nz else -INF

    @property
    def hinf(self):
        nz = self.nonzero()
        return min(nz) if nz else INF

    def hilbert(self) -> dict:
        return {i: H.hilbert() for i, H in sorted(self.groups.items())}

    def euler_characteristic(self, weights) -> HilbertSeries:
        out = HilbertSeries({}, weights)
        for i, H in self.groups.items():
            h = H.hilbert()
            out = out + h if i % 2 == 0 else out - h
        return out

    def to_json(self) -> dict:
        return {str(i): {"hilbert": str(H.hilbert()), "module": H.minimal_presentation().to_json()}
                for i, H in sorted(self.groups.items()) if not H.is_zero()}


def euler_check(C: ChainComplex) -> bool:
    """Alternating sum of Hilbert series of terms equals that of homology."""
    return C.euler_characteristic() == C.homology_table().euler_characteristic(C.ring.weights)


class ChainMap:
    """phi_i: F_i(-s) -> G_i commuting with the differentials."""

    def __init__(self, source: ChainComplex, target: ChainComplex, maps: dict, degree: int = 0,
                 check: bool = True):
        self.source = source
        self.target = target
        self.degree = degree
        self.maps = dict(maps)
        if check:
            self.validate()

    def at(self, i: int) -> PolyMatrix:
        A = self.maps.get(i)
        if A is None:
            return PolyMatrix.zero(self.source.ring, self.target.twists(i),
                                   [a + self.degree for a in self.source.twists(i)])
        return A

    def validate(self):
        F, G = self.source, self.target
        for i in set(F.indices) | set(G.indices):
            A = self.at(i)
            if A.row_twists != G.twists(i) or A.col_twists != [a + self.degree for a in F.twists(i)]:
                raise ComplexError("chain map component has wrong twists", i)
        for i in set(F.indices) | set(G.indices):
            lhs = G.diff(i) @ self.at(i)
            rhs = self.at(i - 1) @ F.diff(i).twisted(self.degree)
            if not (lhs - rhs).is_zero():
                raise ComplexError("not a chain map: square does not commute", i)
        return True


def cone(phi: ChainMap) -> ChainComplex:
    """Cone_i = F_{i-1}(-s) ⊕ G_i with d = [[-d^F, 0], [phi, d^G]]."""
    F, G, s = phi.source, phi.target, phi.degree
    ring = G.ring
    idx = sorted(set(i + 1 for i in F.indices) | set(G.indices))
    mods = {i: [a + s for a in F.twists(i - 1)] + G.twists(i) for i in idx}
    ds = {}
    for i in idx:
        if i - 1 not in mods:
            continue
        top_left = -F.diff(i - 1).twisted(s)
        top_right = PolyMatrix.zero(ring, [a + s for a in F.twists(i - 2)], G.twists(i))
        bottom_left = phi.at(i - 1)
        bottom_right = G.diff(i)
        ds[i] = _block2(ring, top_left, top_right, bottom_left, bottom_right)
    return ChainComplex(ring, mods, ds)


def direct_sum_complexes(cs) -> ChainComplex:
    """Termwise direct sum with block-diagonal differentials."""
    cs = list(cs)
    ring = cs[0].ring
    idx = sorted(set(i for C in cs for i in C.indices))
    mods = {i: [a for C in cs for a in C.twists(i)] for i in idx}
    ds = {}
    for i in idx:
        if i - 1 in mods:
            ds[i] = PolyMatrix.block_diagonal([C.diff(i) for C in cs], ring)
    return ChainComplex(ring, mods, ds)


def _block2(ring, a, b, c, d) -> PolyMatrix:
    rows = []
    for i in range(a.nrows):
        rows.append(list(a.entries[i]) + list(b.entries[i]))
    for i in range(c.nrows):
        rows.append(list(c.entries[i]) + list(d.entries[i]))
    rt = a.row_twists + c.row_twists
    ct = a.col_twists + b.col_twists
    return PolyMatrix(ring, rows, rt, ct, check=False)


def koszul_complex(fs, ring, twist: int = 0) -> ChainComplex:
    """K(f_1..f_c; R) with wedge basis in lexicographic order.

    d(e_S) = sum over positions p of (-1)^p f_{S[p]} e_{S minus S[p]}.
    """
    ring = to_ring(ring)
    fs = [ring(f) for f in fs]
    degs = [f.degree() if f else _zero_degree(f) for f in fs]
    c = len(fs)
    subsets = {i: list(itertools.combinations(range(c), i)) for i in range(c + 1)}
    mods = {i: [twist + sum(degs[j] for j in S) for S in subsets[i]] for i in range(c + 1)}
    ds = {}
    for i in range(1, c + 1):
        pos = {S: k for k, S in enumerate(subsets[i - 1])}
        rows = [[ring.zero] * len(subsets[i]) for _ in subsets[i - 1]]
        for col, S in enumerate(subsets[i]):
            for p, j in enumerate(S):
                T = S[:p] + S[p + 1:]
                rows[pos[T]][col] = fs[j] if p % 2 == 0 else -fs[j]
        ds[i] = PolyMatrix(ring, rows, mods[i - 1], mods[i], check=False)
    return ChainComplex(ring, mods, ds)


def _zero_degree(f):
    raise HomogeneityError("Koszul complex on a zero element needs an explicit degree")


def free_resolution(M: GradedModule, length: int) -> ChainComplex:
    """Minimal graded free resolution F_0 <- F_1 <- ... <- F_length.

    ``truncated_at`` is None exactly when the resolution is known to stop
    (the last kernel computed is zero); otherwise it records ``length``.
    """
    if length < 0:
        raise ValueError("resolution length must be non-negative")
    ring = M.ring
    Mm = M.minimal_presentation()
    if Mm.ngens == 0:
        return ChainComplex(ring, {}, {}, None)
    mods = {0: list(Mm.gen_twists)}
    ds = {}
    cur = Mm.presentation
    i = 1
    while True:
        if cur.ncols == 0:
            return ChainComplex(ring, mods, ds, None, check=False)
        if i > length:
            return ChainComplex(ring, mods, ds, length, check=False)
        mods[i] = list(cur.col_twists)
        ds[i] = cur
        cur = kernel_of_matrix(cur)
        i += 1


def dualize_into_ring(C: ChainComplex) -> ChainComplex:
    """Hom_R(C, R): D_i = Hom(C_{-i}, R), d^D_i = (-1)^{i+1} (d_{1-i})^T."""
    mods = {-i: [-a for a in t] for i, t in C.modules.items()}
    ds = {}
    for j, A in C.d.items():
        i = 1 - j
        T = A.transpose()
        ds[i] = T if (i + 1) % 2 == 0 else -T
    return ChainComplex(C.ring, mods, ds)


def resolution_is_exact(F: ChainComplex, M: GradedModule) -> bool:
    """H_0(F) ≅ M via the identity on generators and H_i = 0 for 0 < i < top."""
    from .modules import is_isomorphic

    top = F.sup if F.modules else 0
    for i in range(1, int(top)):
        if not F.homology(i).is_zero():
            return False
    if F.truncated_at is None and top >= 1 and not F.homology(int(top)).is_zero():
        return False
    return is_isomorphic(F.homology(0), M).isomorphic


# complexes of finitely presented modules


class ModuleComplex:
    """Complex of modules coker(rel_i) with maps given on the free covers."""

    def __init__(self, ring, gens: dict, rels: dict, maps: dict):
        self.ring = to_ring(ring)
        self.gens = {int(i): list(t) for i, t in gens.items()}
        self.rels = dict(rels)
        self.maps = dict(maps)

    def gen_twists(self, i):
        return self.gens.get(i, [])

    @property
    def indices(self) -> list[int]:
        return sorted(i for i, t in self.gens.items() if t)

    @property
    def sup(self):
        return max(self.indices) if self.indices else -INF

    @property
    def inf(self):
        return min(self.indices) if self.indices else INF

    def rel(self, i) -> PolyMatrix:
        r = self.rels.get(i)
        if r is None:
            return PolyMatrix.zero(self.ring, self.gen_twists(i), [])
        return r

    def map(self, i) -> PolyMatrix:
        A = self.maps.get(i)
        if A is None:
            return PolyMatrix.zero(self.ring, self.gen_twists(i - 1), self.gen_twists(i))
        return A

    def term(self, i) -> GradedModule:
        return GradedModule(self.rel(i))

    def homology(self, i: int) -> GradedModule:
        ring = self.ring
        n = len(self.gen_twists(i))
        if n == 0:
            return GradedModule.zero(ring)
        out_map = self.map(i)
        R_prev = self.rel(i - 1)
        if out_map.nrows == 0 or out_map.is_zero():
            K = PolyMatrix.identity(ring, self.gen_twists(i))
        else:
            S = kernel_of_matrix(out_map.hstack(R_prev))
            K = S.select_rows(range(n))
            keep = [j for j in range(K.ncols) if any(K.column(j))]
            K = K.select_columns(keep)
        B = self.map(i + 1).hstack(self.rel(i))
        return subquotient(K, B)


def _twisted_rel(N: GradedModule, s: int) -> PolyMatrix:
    return N.presentation.twisted(s)


def hom_complex(F: ChainComplex, N: GradedModule) -> ModuleComplex:
    """Hom_R(F, N) placed in degrees -i (so Ext^i = H_{-i})."""
    ring = F.ring
    h = N.gen_twists
    gens, rels, maps = {}, {}, {}
    for i in F.indices:
        a = F.twists(i)
        gens[-i] = [hk - aj for aj in a for hk in h]
        rels[-i] = PolyMatrix.block_diagonal([_twisted_rel(N, -aj) for aj in a], ring)
    for i in F.indices:
        if i + 1 in F.modules:
            D = F.diff(i + 1)
            maps[-i] = D.transpose().kron_identity(h)
    return ModuleComplex(ring, gens, rels, maps)


def tensor_complex(F: ChainComplex, N: GradedModule) -> ModuleComplex:
    ring = F.ring
    h = N.gen_twists
    gens, rels, maps = {}, {}, {}
    for i in F.indices:
        a = F.twists(i)
        gens[i] = [aj + hk for aj in a for hk in h]
        rels[i] = PolyMatrix.block_diagonal([_twisted_rel(N, aj) for aj in a], ring)
        if i - 1 in F.modules:
            maps[i] = F.diff(i).kron_identity(h)
    return ModuleComplex(ring, gens, rels, maps)


def _check_same_ring(M, N):
    if M.ring != N.ring:
        raise RingMismatchError("modules over different rings")


def ext_module(M: GradedModule, N: GradedModule, i: int, bound: int | None = None,
               resolution: ChainComplex | None = None) -> GradedModule:
    """Ext^i_R(M, N) as H_{-i} of Hom(F, N) for a minimal resolution F of M."""
    _check_same_ring(M, N)
    if bound is not None and i > bound:
        raise TruncationError(f"Ext^{i} requested but the resolution bound is {bound}")
    if i < 0:
        return GradedModule.zero(M.ring)
    F = resolution if resolution is not None else free_resolution(M, i + 1)
    if F.truncated_at is not None and F.truncated_at < i + 1:
        raise TruncationError(f"resolution truncated at {F.truncated_at}, need {i + 1}")
    return hom_complex(F, N).homology(-i)


def tor_module(M: GradedModule, N: GradedModule, i: int, bound: int | None = None,
               resolution: ChainComplex | None = None) -> GradedModule:
    """Tor_i^R(M, N) as H_i of F ⊗ N."""
    _check_same_ring(M, N)
    if bound is not None and i > bound:
        raise TruncationError(f"Tor_{i} requested but the resolution bound is {bound}")
    if i < 0:
        return GradedModule.zero(M.ring)
    F = resolution if resolution is not None else free_resolution(M, i + 1)
    if F.truncated_at is not None and F.truncated_at < i + 1:
        raise TruncationError(f"resolution truncated at {F.truncated_at}, need {i + 1}")
    return tensor_complex(F, N).homology(i)


def hom_module(M: GradedModule, N: GradedModule) -> GradedModule:
    return ext_module(M, N, 0)


def tensor_module(M: GradedModule, N: GradedModule) -> GradedModule:
    return tor_module(M, N, 0)
