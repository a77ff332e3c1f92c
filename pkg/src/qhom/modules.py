"""Finitely presented graded modules, degree-0 Hom spaces and isomorphism tests.

A module is ``coker(A: F_1 -> F_0)`` for a homogeneous PolyMatrix A over
R = P/I.  Elements of F_0 are vectors ``{(generator, exponent): coeff}``; the
standard terms of the submodule Groebner basis of ``im A + I F_0`` give a
k-basis of every graded piece.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import RingMismatchError
from .groebner import SubmoduleGB, reduce_vector_mod_ideal
from .hilbert import HilbertSeries, laurent_divide, monomial_quotient_numerator
from .linalg import EchelonSpace, nullspace
from .matrices import PolyMatrix
from .polynomials import QuotientRing, to_ring


def shift_vector(v: dict, e: tuple) -> dict:
    """x^e * v for a vector v over the ambient ring."""
    return {(c, tuple(a + b for a, b in zip(x, e))): a_ for (c, x), a_ in v.items()}


def poly_times_vector(f, v: dict, field) -> dict:
    out: dict = {}
    for e, a in f.terms.items():
        for (c, x), b in v.items():
            t = (c, tuple(p + q for p, q in zip(e, x)))
            val = field.add(out.get(t, field.zero), field.mul(a, b))
            if val:
                out[t] = val
            else:
                out.pop(t, None)
    return out


def vector_degree(v: dict, ring, twists) -> int:
    c, e = next(iter(v))
    return ring.ambient.deg(e) + twists[c]


def minimal_generators(vectors, ring, twists) -> list[dict]:
    """A minimal homogeneous generating subset of the submodule spanned by ``vectors``.

    Works degree by degree: a candidate is kept unless it lies in the span of
    the monomial multiples of the generators already kept (reduced mod I).
    """
    ring = to_ring(ring)
    F = ring.field
    P = ring.ambient
    cands: dict[int, list[dict]] = {}
    for v in vectors:
        v = reduce_vector_mod_ideal(v, ring)
        if v:
            cands.setdefault(vector_degree(v, ring, twists), []).append(v)
    kept: list[tuple[int, dict]] = []
    for d in sorted(cands):
        space = EchelonSpace(F)
        for dg, g in kept:
            for e in P.monomials_of_degree(d - dg):
                w = reduce_vector_mod_ideal(shift_vector(g, e), ring)
                if w:
                    space.add(w)
        for v in cands[d]:
            if space.add(v):
                kept.append((d, v))
    return [v for _, v in kept]


class FreeModule:
    """R(-a_1) + ... + R(-a_r), described by its generator degrees."""

    def __init__(self, ring, twists):
        self.ring = to_ring(ring)
        self.twists = [int(t) for t in twists]

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and self.ring == other.ring
                and self.twists == other.twists)

    def __repr__(self):
        return f"FreeModule({self.ring}, {self.twists})"

    def hilbert(self) -> HilbertSeries:
        return GradedModule.free(self.ring, self.twists).hilbert()

    def to_json(self) -> dict:
        return {"twists": list(self.twists)}


class GradedModule:
    """coker of a degree-0 presentation matrix over a quotient ring."""

    def __init__(self, presentation: PolyMatrix, name: str | None = None):
        self.presentation = presentation
        self.ring: QuotientRing = presentation.ring
        self.name = name

    # constructors

    @classmethod
    def free(cls, ring, twists) -> "GradedModule":
        ring = to_ring(ring)
        return cls(PolyMatrix.zero(ring, list(twists), []))

    @classmethod
    def zero(cls, ring) -> "GradedModule":
        return cls(PolyMatrix.zero(to_ring(ring), [], []))

    @classmethod
    def coker(cls, ring, entries, row_twists=None, col_twists=None) -> "GradedModule":
        """Cokernel of a matrix; twists default to 0 on generators and are inferred
        from the first nonzero entry of each column."""
        ring = to_ring(ring)
        rows = [[ring(x) for x in r] for r in entries]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        row_twists = [0] * nr if row_twists is None else list(row_twists)
        if col_twists is None:
            col_twists = []
            for j in range(nc):
                tw = 0
                for i in range(nr):
                    if rows[i][j]:
                        tw = rows[i][j].degree() + row_twists[i]
                        break
                col_twists.append(tw)
        return cls(PolyMatrix(ring, rows, row_twists, col_twists))

    @classmethod
    def cyclic(cls, ring, gens=(), twist: int = 0) -> "GradedModule":
        """(R / (gens))(-twist)."""
        ring = to_ring(ring)
        gens = [ring(g) for g in gens]
        gens = [g for g in gens if g]
        return cls(PolyMatrix(ring, [gens], [twist], [g.degree() + twist for g in gens]))

    @classmethod
    def residue_field(cls, ring, twist: int = 0) -> "GradedModule":
        ring = to_ring(ring)
        return cls.cyclic(ring, ring.ambient.gens, twist)

    @classmethod
    def ideal(cls, ring, gens) -> "GradedModule":
        """The ideal (gens) of R as an R-module, generators in their own degrees."""
        from .groebner import kernel_of_matrix

        ring = to_ring(ring)
        gens = [ring(g) for g in gens]
        gens = [g for g in gens if g]
        row = PolyMatrix(ring, [gens], [0], [g.degree() for g in gens])
        return cls(kernel_of_matrix(row))

    @classmethod
    def from_vectors(cls, ring, gen_twists, relations) -> "GradedModule":
        ring = to_ring(ring)
        rels = [reduce_vector_mod_ideal(v, ring) for v in relations]
        rels = [v for v in rels if v]
        return cls(PolyMatrix.from_vectors(ring, rels, list(gen_twists)))

    # shape

    @property
    def gen_twists(self) -> list[int]:
        return self.presentation.row_twists

    @property
    def rel_twists(self) -> list[int]:
        return self.presentation.col_twists

    @property
    def ngens(self) -> int:
        return self.presentation.nrows

    @property
    def field(self):
        return self.ring.field

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return (f"GradedModule({label}{self.ngens} gens {self.gen_twists}, "
                f"{self.presentation.ncols} rels)")

    # standard basis

    @cached_property
    def gb(self) -> SubmoduleGB:
        return SubmoduleGB(self.ring, self.gen_twists, self.presentation.column_vectors())

    def reduce(self, v: dict) -> dict:
        """Normal form: a combination of standard terms."""
        if not self.ngens:
            return {}
        return self.gb.reduce(v)

    def basis(self, d: int) -> list[tuple]:
        if not self.ngens:
            return []
        return self.gb.standard_terms(d)

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    @cached_property
    def _hilbert(self) -> HilbertSeries:
        w = self.ring.weights
        num: dict = {}
        if self.ngens:
            lms = self.gb.leading_monomials
            for c, tw in enumerate(self.gen_twists):
                for k, v in monomial_quotient_numerator(lms[c], w).items():
                    num[k + tw] = num.get(k + tw, 0) + v
        return HilbertSeries(num, w)

    def hilbert(self) -> HilbertSeries:
        return self._hilbert

    def is_zero(self) -> bool:
        return self.hilbert().is_zero()

    def krull_dim(self):
        return self.hilbert().dimension()

    def is_finite_length(self) -> bool:
        return self.hilbert().is_finite_length()

    def degree_range(self):
        return self.hilbert().degree_range()

    def annihilated_by_max_ideal(self) -> bool:
        """m M = 0, checked on generators."""
        F = self.field
        for c in range(self.ngens):
            for j in range(self.ring.nvars):
                e = tuple(1 if k == j else 0 for k in range(self.ring.nvars))
                if self.reduce({(c, e): F.one}):
                    return False
        return True

    def multiplication_matrix(self, j: int, d: int) -> list[dict]:
        """Columns: x_j times each basis term of M_d, in coordinates of M_{d+w_j}."""
        F = self.field
        e1 = tuple(1 if k == j else 0 for k in range(self.ring.nvars))
        return [self.reduce(shift_vector({t: F.one}, e1)) for t in self.basis(d)]

    # structure

    def direct_sum(self, *others: "GradedModule") -> "GradedModule":
        mods = (self,) + others
        for m in others:
            if m.ring != self.ring:
                raise RingMismatchError("direct sum of modules over different rings")
        return GradedModule(PolyMatrix.block_diagonal([m.presentation for m in mods], self.ring))

    def __add__(self, other: "GradedModule") -> "GradedModule":
        return self.direct_sum(other)

    def power(self, n: int) -> "GradedModule":
        if n == 0:
            return GradedModule.zero(self.ring)
        return GradedModule(PolyMatrix.block_diagonal([self.presentation] * n, self.ring))

    def shifted(self, s: int) -> "GradedModule":
        """M(-s): every generator and relation degree raised by s."""
        return GradedModule(self.presentation.twisted(s))

    def base_change(self, ring) -> "GradedModule":
        """M (x)_R R' for a quotient R' of R."""
        ring = to_ring(ring)
        if not ring.is_quotient_of(self.ring):
            raise RingMismatchError(f"{ring} is not a quotient of {self.ring}")
        A = self.presentation.base_change(ring)
        keep = [j for j in range(A.ncols) if any(A.column(j))]
        return GradedModule(A.select_columns(keep))

    def restrict_to(self, ring) -> "GradedModule":
        """The same module viewed over a ring R' with R a quotient of R'."""
        ring = to_ring(ring)
        if not self.ring.is_quotient_of(ring):
            raise RingMismatchError(f"{self.ring} is not a quotient of {ring}")
        F0 = self.gen_twists
        cols = list(self.presentation.column_vectors())
        for g in self.ring.groebner:
            for c in range(len(F0)):
                cols.append({(c, e): a for e, a in g.terms.items()})
        return GradedModule.from_vectors(ring, F0, cols)

    @cached_property
    def _minimal(self):
        return _minimize(self)

    def minimal_presentation(self) -> "GradedModule":
        return self._minimal[0]

    def to_minimal_map(self) -> PolyMatrix:
        """Generator images of M in its minimal presentation (an isomorphism)."""
        return self._minimal[1]

    def from_minimal_map(self) -> PolyMatrix:
        """Inverse of to_minimal_map: minimal generators back to surviving generators."""
        return self._minimal[2]

    @property
    def minimal_gen_degrees(self) -> list[int]:
        return sorted(self.minimal_presentation().gen_twists)

    @property
    def minimal_rel_degrees(self) -> list[int]:
        return sorted(self.minimal_presentation().rel_twists)

    def is_free(self) -> bool:
        return self.minimal_presentation().presentation.ncols == 0

    def is_residue_field(self) -> bool:
        """M is isomorphic to k(-s) for some s."""
        mp = self.minimal_presentation()
        return mp.ngens == 1 and self.annihilated_by_max_ideal()

    def to_json(self) -> dict:
        d = self.presentation.to_json()
        out = {"generators": d["row_twists"], "relation_degrees": d["col_twists"],
               "relations": d["entries"]}
        if self.name:
            out["name"] = self.name
        return out


def _minimize(M: GradedModule):
    """Prune unit entries, then drop redundant relations."""
    ring = M.ring
    F = ring.field
    A = [list(r) for r in M.presentation.entries]
    rt = list(M.gen_twists)
    ct = list(M.rel_twists)
    n0 = len(rt)
    # images[i] = image of original generator i, as {current row: poly}
    alive = list(range(n0))
    images = {i: {i: ring.one} for i in range(n0)}
    while True:
        pivot = None
        for j in range(len(ct)):
            for i in range(len(rt)):
                x = A[i][j]
                if x and x.is_constant():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        c = A[i][j].constant_coefficient()
        ci = F.inv(c)
        col_j = [A[r][j] for r in range(len(rt))]
        for k in range(len(ct)):
            if k == j or not A[i][k]:
                continue
            f = A[i][k].scale(ci)
            for r in range(len(rt)):
                if col_j[r]:
                    A[r][k] = ring.reduce(A[r][k] - f * col_j[r])
        # e_i = -(1/c) sum_{r != i} A[r][j] e_r in the cokernel
        for orig, img in images.items():
            if i in img:
                coef = img.pop(i)
                for r in range(len(rt)):
                    if r != i and col_j[r]:
                        img[r] = ring.reduce(img.get(r, ring.zero) - coef * col_j[r].scale(ci))
                        if not img[r]:
                            del img[r]
        for img in images.values():
            for r in sorted([r for r in img if r > i]):
                img[r - 1] = img.pop(r)
        del alive[i]
        del A[i]
        del rt[i]
        for row in A:
            del row[j]
        del ct[j]
    P = PolyMatrix(ring, A, rt, ct, check=False) if rt else PolyMatrix.zero(ring, [], ct)
    vecs = minimal_generators(P.column_vectors(), ring, rt) if rt else []
    Mmin = GradedModule(PolyMatrix.from_vectors(ring, vecs, rt), name=M.name)
    rows = [[ring.zero] * n0 for _ in rt]
    for orig, img in images.items():
        for r, f in img.items():
            rows[r][orig] = f
    phi = PolyMatrix(ring, rows, rt, M.gen_twists, check=False)
    incl = [[ring.one if alive[c] == r else ring.zero for c in range(len(rt))]
            for r in range(n0)]
    back = PolyMatrix(ring, incl, M.gen_twists, rt, check=False)
    return Mmin, phi, back


# Hom spaces and isomorphisms


def hom_degree0(M: GradedModule, N: GradedModule) -> list[PolyMatrix]:
    """k-basis of Hom_R(M, N)_0.

    Each map is a matrix whose column i is a standard-form representative of
    the image of the i-th generator of M in N.
    """
    if M.ring != N.ring:
        raise RingMismatchError("Hom between modules over different rings")
    ring = M.ring
    F = ring.field
    unknowns = []  # (generator of M, standard term of N)
    for i, a in enumerate(M.gen_twists):
        for t in N.basis(a):
            unknowns.append((i, t))
    if not unknowns:
        return []
    rows: dict = {}
    for r_idx, rel in enumerate(M.presentation.column_vectors()):
        by_gen: dict[int, list] = {}
        for (i, e), c in rel.items():
            by_gen.setdefault(i, []).append((e, c))
        for u, (i, t) in enumerate(unknowns):
            if i not in by_gen:
                continue
            v: dict = {}
            for e, c in by_gen[i]:
                tt = (t[0], tuple(p + q for p, q in zip(t[1], e)))
                v[tt] = F.add(v.get(tt, F.zero), c)
            for tt, c in N.reduce(v).items():
                rows.setdefault((r_idx, tt), {})[u] = c
    basis = nullspace(list(rows.values()), len(unknowns), F)
    out = []
    for x in basis:
        out.append(_hom_matrix(M, N, unknowns, x))
    return out


def _hom_matrix(M, N, unknowns, x) -> PolyMatrix:
    ring = M.ring
    P = ring.ambient
    cols = [[dict() for _ in range(N.ngens)] for _ in range(M.ngens)]
    for (i, (c, e)), a in zip(unknowns, x):
        if a:
            cols[i][c][e] = a
    rows = [[P.poly(cols[i][c]) for i in range(M.ngens)] for c in range(N.ngens)]
    return PolyMatrix(ring, rows, N.gen_twists, M.gen_twists, check=False)


def is_surjective(phi: PolyMatrix, N: GradedModule) -> bool:
    """Do the columns of phi generate N?  Checked in N's generator degrees."""
    ring = N.ring
    P = ring.ambient
    F = ring.field
    cols = [(phi.col_twists[i], v) for i, v in enumerate(phi.column_vectors())]
    for d in sorted(set(N.gen_twists)):
        target = N.dim(d)
        if target == 0:
            continue
        space = EchelonSpace(F)
        for a, v in cols:
            if not v or a > d:
                continue
            for e in P.monomials_of_degree(d - a):
                w = N.reduce(shift_vector(v, e))
                if w:
                    space.add(w)
        if space.dim < target:
            return False
    return True


def apply_map(phi: PolyMatrix, v: dict, ring) -> dict:
    """phi applied to a vector of its source free module."""
    F = ring.field
    out: dict = {}
    cols = phi.column_vectors()
    for (i, e), c in v.items():
        for (r, x), a in cols[i].items():
            t = (r, tuple(p + q for p, q in zip(e, x)))
            val = F.add(out.get(t, F.zero), F.mul(a, c))
            if val:
                out[t] = val
            else:
                out.pop(t, None)
    return out


def is_well_defined(phi: PolyMatrix, M: GradedModule, N: GradedModule) -> bool:
    """phi sends every relation of M to zero in N."""
    return all(not N.reduce(apply_map(phi, r, M.ring))
               for r in M.presentation.column_vectors())


@dataclass
class IsoWitness:
    verdict: str  # "isomorphic" | "not-isomorphic" | "undetermined"
    forward: PolyMatrix | None = None
    shift: int = 0
    reason: str = ""
    discrepancy_degree: int | None = None
    seed: int | None = None
    attempts: int = 0
    details: dict = dc_field(default_factory=dict)

    @property
    def isomorphic(self) -> bool:
        return self.verdict == "isomorphic"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "shift": self.shift,
            "reason": self.reason,
            "discrepancy_degree": self.discrepancy_degree,
            "seed": self.seed,
            "attempts": self.attempts,
            "forward": None if self.forward is None else self.forward.to_json(),
        }


def first_discrepancy(h1: HilbertSeries, h2: HilbertSeries) -> int | None:
    diff = h1 - h2
    if diff.is_zero():
        return None
    lo = min(diff.numerator)
    hi = max(diff.numerator)
    for d in range(lo, hi + 1):
        if h1.coefficient(d) != h2.coefficient(d):
            return d
    return None


def verify_iso(phi: PolyMatrix, M: GradedModule, N: GradedModule) -> bool:
    """Well defined, surjective, equal Hilbert series: hence an isomorphism."""
    return (M.hilbert() == N.hilbert() and is_well_defined(phi, M, N)
            and is_surjective(phi, N))


SWEEP_LIMIT = 2000


def is_isomorphic(M: GradedModule, N: GradedModule, budget: int = 16, seed: int = 0,
                  up_to_shift: bool = False) -> IsoWitness:
    """Search for a degree-0 isomorphism M -> N.

    With ``up_to_shift`` the test is for M ≅ N(-s) with s forced by the
    initial degrees.  "not-isomorphic" is only reported with a proof: a
    Hilbert function mismatch, different minimal generator or relation
    degrees, an empty Hom space, or an exhaustive sweep of Hom(M, N)_0 over a
    finite field.
    """
    if M.ring != N.ring:
        raise RingMismatchError("isomorphism test across different rings")
    hM, hN = M.hilbert(), N.hilbert()
    s = 0
    if up_to_shift and not hM.is_zero() and not hN.is_zero():
        s = hM.initial_degree() - hN.initial_degree()
        if s:
            N = N.shifted(s)
            hN = N.hilbert()
    if hM != hN:
        return IsoWitness("not-isomorphic", shift=s, reason="hilbert series differ",
                          discrepancy_degree=first_discrepancy(hM, hN), seed=seed)
    ring = M.ring
    if hM.is_zero():
        return IsoWitness("isomorphic", PolyMatrix.zero(ring, N.gen_twists, M.gen_twists),
                          shift=s, reason="both zero", seed=seed)
    if M.minimal_gen_degrees != N.minimal_gen_degrees:
        return IsoWitness("not-isomorphic", shift=s, reason="minimal generator degrees differ",
                          seed=seed)
    if M.minimal_rel_degrees != N.minimal_rel_degrees:
        return IsoWitness("not-isomorphic", shift=s, reason="minimal relation degrees differ",
                          seed=seed)
    # search between minimal presentations, then transport the witness back
    Mm, Nm = M.minimal_presentation(), N.minimal_presentation()
    basis = hom_degree0(Mm, Nm)
    if not basis:
        return IsoWitness("not-isomorphic", shift=s, reason="Hom(M, N)_0 = 0", seed=seed)
    F = ring.field
    attempts = 0

    def done(phi, how):
        fwd = N.from_minimal_map() @ phi @ M.to_minimal_map()
        return IsoWitness("isomorphic", fwd, shift=s, reason=how, seed=seed,
                          attempts=attempts)

    for phi in basis:
        attempts += 1
        if is_surjective(phi, Nm):
            return done(phi, "Hom basis element is surjective")
    rng = random.Random(seed)
    if len(basis) > 1:
        for _ in range(budget):
            attempts += 1
            coeffs = [F.random_element(rng) for _ in basis]
            if not any(coeffs):
                continue
            phi = _combine(basis, coeffs)
            if is_surjective(phi, Nm):
                return done(phi, "random combination is surjective")
    h = len(basis)
    if F.is_finite and (F.p ** h - 1) // (F.p - 1) <= SWEEP_LIMIT:
        for coeffs in _projective_points(F.p, h):
            attempts += 1
            if is_surjective(_combine(basis, coeffs), Nm):
                return done(_combine(basis, coeffs), "sweep found a surjection")
        return IsoWitness("not-isomorphic", shift=s, reason="exhaustive Hom sweep",
                          seed=seed, attempts=attempts)
    return IsoWitness("undetermined", shift=s, reason="no surjection found", seed=seed,
                      attempts=attempts)


def _combine(basis, coeffs) -> PolyMatrix:
    out = None
    for phi, c in zip(basis, coeffs):
        if not c:
            continue
        term = phi.scale(c)
        out = term if out is None else out + term
    return out if out is not None else basis[0].scale(0)


def _projective_points(p: int, h: int):
    """One representative per line of GF(p)^h (first nonzero coordinate 1)."""
    for lead in range(h):
        for rest in itertools.product(range(p), repeat=h - lead - 1):
            yield [0] * lead + [1] + list(rest)


@dataclass
class PowerDecomposition:
    """H ≅ sum_d M(-d)^{shifts[d]}; ``multiplicity`` is the total count."""

    ok: bool
    multiplicity: int | None = None
    shifts: dict = dc_field(default_factory=dict)
    witness: IsoWitness | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "multiplicity": self.multiplicity,
            "shifts": {str(k): v for k, v in sorted(self.shifts.items())},
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def power_decompose(H: GradedModule, M: GradedModule, allow_shifts: bool = True,
                    budget: int = 16, seed: int = 0) -> PowerDecomposition:
    """Recognize H as a finite direct sum of (shifted) copies of M.

    The Hilbert series ratio fixes the candidate shifts; the candidate is then
    confirmed by an isomorphism witness.  With ``allow_shifts=False`` only
    H ≅ M^a is accepted.
    """
    if M.is_zero():
        raise ValueError("power_decompose needs a nonzero target module")
    hH, hM = H.hilbert(), M.hilbert()
    if hH.is_zero():
        return PowerDecomposition(True, 0, {}, IsoWitness("isomorphic", reason="H = 0"),
                                  reason="zero module")
    q = laurent_divide(hH.numerator, hM.numerator)
    if q is None or any(v < 0 for v in q.values()):
        return PowerDecomposition(False, reason="Hilbert series ratio is not a nonnegative "
                                  "integer Laurent polynomial")
    if not allow_shifts and set(q) != {0}:
        return PowerDecomposition(False, reason="graded shifts required", shifts=q)
    parts = [M.shifted(d) for d in sorted(q) for _ in range(q[d])]
    T = parts[0].direct_sum(*parts[1:]) if len(parts) > 1 else parts[0]
    total = sum(q.values())
    if M.is_residue_field():
        # H is a sum of copies of k exactly when m H = 0
        if H.annihilated_by_max_ideal():
            phi = _basis_map(T, H)
            w = IsoWitness("isomorphic", phi, reason="annihilated by m", seed=seed)
            return PowerDecomposition(True, total, q, w)
        return PowerDecomposition(False, reason="not annihilated by the maximal ideal",
                                  witness=IsoWitness("not-isomorphic", reason="m H != 0"))
    w = is_isomorphic(T, H, budget=budget, seed=seed)
    if w.isomorphic:
        return PowerDecomposition(True, total, q, w)
    return PowerDecomposition(False, shifts=q, witness=w, reason=f"iso test: {w.verdict}")


def _basis_map(T: GradedModule, H: GradedModule) -> PolyMatrix:
    """Send the generators of a sum of residue fields onto a k-basis of H."""
    ring = H.ring
    P = ring.ambient
    lo, hi = H.degree_range()
    targets = []
    for d in range(lo, hi + 1):
        targets.extend(H.basis(d))
    by_deg: dict[int, list] = {}
    for t in targets:
        by_deg.setdefault(P.deg(t[1]) + H.gen_twists[t[0]], []).append(t)
    rows = [[ring.zero] * T.ngens for _ in range(H.ngens)]
    used: dict[int, int] = {}
    for j, a in enumerate(T.gen_twists):
        k = used.get(a, 0)
        c, e = by_deg[a][k]
        used[a] = k + 1
        rows[c][j] = P.monomial(e)
    return PolyMatrix(ring, rows, H.gen_twists, T.gen_twists, check=False)


# finite-dimensional modules from linear data


def module_from_action(ring, dims: dict, action) -> GradedModule:
    """Graded module with k-basis of size ``dims[d]`` in degree d.

    ``action(j, d)`` returns the matrix of x_j: V_d -> V_{d+w_j} as a list of
    columns (dicts index -> coeff), one per basis vector of V_d.  The ring must
    act through R (the caller guarantees commutativity and I V = 0).
    """
    ring = to_ring(ring)
    F = ring.field
    P = ring.ambient
    w = ring.weights
    degs = sorted(d for d, n in dims.items() if n)
    if not degs:
        return GradedModule.zero(ring)
    lo, hi = degs[0], degs[-1]

    def act(j, d, v: dict) -> dict:
        cols = action(j, d)
        out: dict = {}
        for i, c in v.items():
            for k, a in cols[i].items():
                val = F.add(out.get(k, F.zero), F.mul(c, a))
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        return out

    # generators: complements of m V in each degree
    gens: list[tuple[int, dict]] = []
    for d in range(lo, hi + 1):
        n = dims.get(d, 0)
        if not n:
            continue
        space = EchelonSpace(F)
        for j in range(P.nvars):
            dd = d - w[j]
            for i in range(dims.get(dd, 0)):
                space.add(act(j, dd, {i: F.one}))
        for i in range(n):
            if space.add({i: F.one}):
                gens.append((d, {i: F.one}))
    twists = [d for d, _ in gens]

    memo: dict = {}

    def image(g: int, e: tuple):
        key = (g, e)
        if key in memo:
            return memo[key]
        if not any(e):
            r = gens[g][1]
        else:
            j = next(k for k, a in enumerate(e) if a)
            prev = tuple(a - (1 if k == j else 0) for k, a in enumerate(e))
            base = image(g, prev)
            d_prev = twists[g] + P.deg(prev)
            r = act(j, d_prev, base) if base and d_prev + w[j] <= hi else {}
        memo[key] = r
        return r

    kernel_vecs = []
    top = hi + max(w)
    for d in range(lo, top + 1):
        terms = []
        for g, a in enumerate(twists):
            for e in P.monomials_of_degree(d - a):
                if ring.reduce_terms({e: F.one}) == {e: F.one}:
                    terms.append((g, e))
        if not terms:
            continue
        rows: dict = {}
        for u, (g, e) in enumerate(terms):
            for k, c in image(g, e).items():
                rows.setdefault(k, {})[u] = c
        for x in nullspace(list(rows.values()), len(terms), F):
            v = {(g, e): c for (g, e), c in zip(terms, x) if c}
            kernel_vecs.append(v)
    rels = minimal_generators(kernel_vecs, ring, twists)
    return GradedModule(PolyMatrix.from_vectors(ring, rels, twists))


def graded_pieces(M: GradedModule):
    """(dims, action) for a finite-length module, in its standard basis."""
    lo, hi = M.degree_range()
    bases = {d: M.basis(d) for d in range(lo, hi + 1)}
    index = {d: {t: i for i, t in enumerate(b)} for d, b in bases.items()}
    w = M.ring.weights
    cache: dict = {}

    def action(j, d):
        key = (j, d)
        if key not in cache:
            tgt = index.get(d + w[j], {})
            cols = []
            for v in M.multiplication_matrix(j, d):
                cols.append({tgt[t]: c for t, c in v.items()})
            cache[key] = cols
        return cache[key]

    return {d: len(b) for d, b in bases.items()}, action, bases
