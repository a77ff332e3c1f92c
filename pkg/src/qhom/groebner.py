"""Buchberger's algorithm for homogeneous submodules of graded free modules.

Vectors are plain dicts ``{(component, exponent_tuple): coefficient}``; an
ideal is the one-component case.  Quotient rings P/I are handled by adding
``g * e_c`` for every basis element g of I and every component c, so all
kernels, lifts and normal forms are computed over the ambient polynomial ring.
"""

from __future__ import annotations

import heapq
from functools import cached_property

from .errors import HomogeneityError, LiftingError, RingMismatchError
from .polynomials import Polynomial, PolyRing, QuotientRing, to_ring


class ModuleOrder:
    """Degree-first term order on a free module with twisted components.

    ``blocks`` assigns each component a block number; terms in a higher block
    are larger than any term in a lower block (elimination order).  Inside a
    block terms compare by twisted degree, then the ring's monomial order, then
    lower component index first.
    """

    def __init__(self, ring: PolyRing, twists, blocks=None):
        self.ring = ring
        self.twists = list(twists)
        self.blocks = list(blocks) if blocks is not None else [0] * len(self.twists)
        self._neg: dict = {}

    def degree(self, term) -> int:
        c, e = term
        return self.ring.deg(e) + self.twists[c]

    def key(self, term) -> tuple:
        c, e = term
        rk = self.ring.key(e)
        return (self.blocks[c], rk[0] + self.twists[c]) + rk[1:] + (-c,)

    def negkey(self, term) -> tuple:
        k = self._neg.get(term)
        if k is None:
            k = tuple(-x for x in self.key(term))
            self._neg[term] = k
        return k

    def lead(self, v: dict):
        return max(v, key=self.key)


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


class _Elem:
    __slots__ = ("vec", "lt", "lc", "terms", "deg")

    def __init__(self, vec: dict, order: ModuleOrder):
        self.vec = vec
        self.lt = order.lead(vec)
        self.lc = vec[self.lt]
        self.terms = list(vec.items())
        self.deg = order.degree(self.lt)


class _Basis:
    """Elements indexed by leading component for divisor lookup."""

    def __init__(self):
        self.elems: list[_Elem] = []
        self.by_comp: dict[int, list[int]] = {}

    def add(self, el: _Elem) -> int:
        idx = len(self.elems)
        self.elems.append(el)
        self.by_comp.setdefault(el.lt[0], []).append(idx)
        return idx

    def divisor(self, term, skip=None):
        c, e = term
        for idx in self.by_comp.get(c, ()):
            if idx == skip:
                continue
            if _divides(self.elems[idx].lt[1], e):
                return self.elems[idx]
        return None


def _reduce(v: dict, basis: _Basis, order: ModuleOrder, field, skip=None) -> dict:
    """Full reduction of v by the basis; returns the remainder."""
    v = dict(v)
    rem: dict = {}
    p = field.p
    heap = [(order.negkey(t), t) for t in v]
    heapq.heapify(heap)
    while heap:
        _, t = heapq.heappop(heap)
        c = v.get(t)
        if c is None:
            continue
        g = basis.divisor(t, skip)
        if g is None:
            rem[t] = v.pop(t)
            continue
        comp, e = t
        m = _sub(e, g.lt[1])
        if p:
            q = (c * pow(g.lc, -1, p)) % p
        else:
            q = c / g.lc
        del v[t]
        for (gc, ge), a in g.terms:
            tt = (gc, tuple(x + y for x, y in zip(ge, m)))
            if tt == (comp, e):
                continue
            old = v.get(tt)
            if p:
                val = ((old or 0) - q * a) % p
            else:
                val = (old or 0) - q * a
            if val:
                if old is None:
                    heapq.heappush(heap, (order.negkey(tt), tt))
                v[tt] = val
            elif old is not None:
                del v[tt]
    return rem


def _monic(v: dict, order: ModuleOrder, field) -> dict:
    lt = order.lead(v)
    inv = field.inv(v[lt])
    return {t: field.mul(c, inv) for t, c in v.items()}


def _check_homogeneous(v: dict, order: ModuleOrder):
    degs = {order.degree(t) for t in v}
    if len(degs) > 1:
        raise HomogeneityError("inhomogeneous vector passed to the Groebner engine")


def buchberger(gens, order: ModuleOrder, field, ideal_mode: bool = False) -> list[dict]:
    """Reduced Groebner basis of the homogeneous submodule spanned by ``gens``.

    Critical pairs and input generators are processed in increasing degree,
    ties broken by the order of the lcm (normal strategy) and then by index,
    so the output is reproducible.  The chain criterion is always applied and
    the coprime criterion only for ideals.
    """
    work = []
    for i, g in enumerate(gens):
        g = {t: c for t, c in g.items() if c}
        if not g:
            continue
        _check_homogeneous(g, order)
        lt = order.lead(g)
        work.append((order.degree(lt), 0, order.key(lt), i, -1, g))
    heapq.heapify(work)
    basis = _Basis()
    pending: set[tuple[int, int]] = set()

    def spoly(i, j):
        a, b = basis.elems[i], basis.elems[j]
        L = _lcm(a.lt[1], b.lt[1])
        ma, mb = _sub(L, a.lt[1]), _sub(L, b.lt[1])
        out: dict = {}
        ia, ib = field.inv(a.lc), field.inv(b.lc)
        for (c, e), x in a.terms:
            t = (c, tuple(u + w for u, w in zip(e, ma)))
            out[t] = field.add(out.get(t, field.zero), field.mul(x, ia))
        for (c, e), x in b.terms:
            t = (c, tuple(u + w for u, w in zip(e, mb)))
            out[t] = field.sub(out.get(t, field.zero), field.mul(x, ib))
        return {t: c for t, c in out.items() if c}

    def chain_skip(i, j, L, comp):
        for k in basis.by_comp.get(comp, ()):
            if k == i or k == j:
                continue
            if not _divides(basis.elems[k].lt[1], L):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    while work:
        deg, kind, _, i, j, g = heapq.heappop(work)
        if kind == 1:
            if (i, j) not in pending:
                continue
            comp = basis.elems[i].lt[0]
            L = _lcm(basis.elems[i].lt[1], basis.elems[j].lt[1])
            if chain_skip(i, j, L, comp):
                pending.discard((i, j))
                continue
            pending.discard((i, j))
            g = spoly(i, j)
        h = _reduce(g, basis, order, field)
        if not h:
            continue
        h = _monic(h, order, field)
        el = _Elem(h, order)
        k = basis.add(el)
        comp, e = el.lt
        for idx in basis.by_comp.get(comp, ()):
            if idx == k:
                continue
            other = basis.elems[idx].lt[1]
            if ideal_mode and all(x == 0 or y == 0 for x, y in zip(other, e)):
                continue
            L = _lcm(other, e)
            pair = (idx, k)
            pending.add(pair)
            t = (comp, L)
            heapq.heappush(work, (order.degree(t), 1, order.key(t), idx, k, None))

    # discard redundant leading terms, then interreduce tails
    keep = []
    elems = basis.elems
    for i, el in enumerate(elems):
        red = False
        for j, other in enumerate(elems):
            if j != i and other.lt[0] == el.lt[0] and _divides(other.lt[1], el.lt[1]):
                if other.lt[1] != el.lt[1] or j < i:
                    red = True
                    break
        if not red:
            keep.append(el)
    final = _Basis()
    for el in keep:
        final.add(el)
    out = []
    for idx, el in enumerate(final.elems):
        tail = dict(el.vec)
        lt = tail.pop(el.lt)
        r = _reduce(tail, final, order, field, skip=idx)
        r[el.lt] = lt
        out.append(_monic(r, order, field))
    out.sort(key=lambda v: order.key(order.lead(v)), reverse=True)
    return out


# polynomial-level API


def _poly_vec(f: Polynomial) -> dict:
    return {(0, e): c for e, c in f.terms.items()}


def _vec_poly(ring: PolyRing, v: dict) -> Polynomial:
    return Polynomial(ring, {e: c for (_, e), c in v.items()})


def _check_ring(polys, ring: PolyRing):
    for f in polys:
        if not isinstance(f, Polynomial) or f.ring != ring:
            raise RingMismatchError(f"{f!r} is not a polynomial over {ring}")


def groebner_basis(gens, ring: PolyRing) -> list[Polynomial]:
    """Reduced Groebner basis, monic, sorted by leading monomial (largest first)."""
    if isinstance(ring, QuotientRing):
        ring = ring.ambient
    gens = [ring(g) for g in gens]
    _check_ring(gens, ring)
    for g in gens:
        if not g.is_homogeneous():
            raise HomogeneityError(f"{g} is not homogeneous")
    order = ModuleOrder(ring, [0])
    gb = buchberger([_poly_vec(g) for g in gens], order, ring.field, ideal_mode=True)
    return [_vec_poly(ring, v) for v in gb]


class IdealReducer:
    """Normal forms modulo a fixed Groebner basis of an ideal."""

    def __init__(self, ring: PolyRing, gb):
        self.ring = ring
        self.order = ModuleOrder(ring, [0])
        self.basis = _Basis()
        for g in gb:
            self.basis.add(_Elem(_poly_vec(g), self.order))
        self._cache: dict = {}

    def reduce_dict(self, terms: dict) -> dict:
        r = _reduce({(0, e): c for e, c in terms.items()}, self.basis, self.order, self.ring.field)
        return {e: c for (_, e), c in r.items()}

    def reduce_poly(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, self.reduce_dict(f.terms))

    def reduce_monomial(self, e: tuple) -> dict:
        """Normal form of a single monomial, memoized."""
        r = self._cache.get(e)
        if r is None:
            r = self.reduce_dict({e: self.ring.field.one})
            self._cache[e] = r
        return r


def normal_form(f: Polynomial, gb, ring: PolyRing) -> Polynomial:
    """Remainder of f on division by the Groebner basis gb."""
    if isinstance(ring, QuotientRing):
        ring = ring.ambient
    _check_ring([f] + list(gb), ring)
    return IdealReducer(ring, gb).reduce_poly(f)


# submodules of free modules over a quotient ring


def reduce_vector_mod_ideal(v: dict, ring: QuotientRing) -> dict:
    """Reduce each component of v modulo the defining ideal of ring."""
    if not ring.ideal_gens:
        return {t: c for t, c in v.items() if c}
    red = ring._reducer
    F = ring.field
    out: dict = {}
    for (comp, e), c in v.items():
        if not c:
            continue
        for e2, c2 in red.reduce_monomial(e).items():
            t = (comp, e2)
            val = F.add(out.get(t, F.zero), F.mul(c, c2))
            if val:
                out[t] = val
            else:
                out.pop(t, None)
    return out


class SubmoduleGB:
    """Groebner basis of N + I*F inside the free module F = P^r(twists).

    This is the standard basis of the quotient module F/(N + I F), i.e. of the
    cokernel of a presentation matrix over R = P/I.
    """

    def __init__(self, ring: QuotientRing, twists, vectors):
        self.ring = to_ring(ring)
        self.twists = list(twists)
        self.order = ModuleOrder(self.ring.ambient, self.twists)
        gens = [dict(v) for v in vectors]
        for g in self.ring.groebner:
            for c in range(len(self.twists)):
                gens.append({(c, e): a for e, a in g.terms.items()})
        self.gb = buchberger(gens, self.order, self.ring.field)
        self._basis = _Basis()
        for v in self.gb:
            self._basis.add(_Elem(v, self.order))

    def reduce(self, v: dict) -> dict:
        return _reduce(v, self._basis, self.order, self.ring.field)

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @cached_property
    def leading_monomials(self) -> dict[int, list[tuple]]:
        out: dict[int, list[tuple]] = {c: [] for c in range(len(self.twists))}
        for el in self._basis.elems:
            out[el.lt[0]].append(el.lt[1])
        return out

    def standard_terms(self, d: int) -> list[tuple]:
        """Terms (c, e) of degree d not divisible by a leading term."""
        out = []
        ring = self.ring.ambient
        for c, tw in enumerate(self.twists):
            lms = self.leading_monomials[c]
            for e in ring.monomials_of_degree(d - tw):
                if not any(_divides(m, e) for m in lms):
                    out.append((c, e))
        return out


class KernelGB:
    """Elimination Groebner basis for the R-linear map given by ``columns``.

    Works in P^(n+m) with the target block (first n components) above the
    source block.  Basis elements whose leading term lies in the source block
    generate the kernel; reducing (v, 0) to (0, -x) solves A x = v.
    """

    def __init__(self, ring: QuotientRing, row_twists, columns, col_twists):
        self.ring = to_ring(ring)
        self.n = len(row_twists)
        self.m = len(col_twists)
        if len(columns) != self.m:
            raise ValueError("column count does not match column twists")
        twists = list(row_twists) + list(col_twists)
        blocks = [1] * self.n + [0] * self.m
        self.order = ModuleOrder(self.ring.ambient, twists, blocks)
        one = self.ring.ambient.one_exp
        F = self.ring.field
        gens = []
        for j, col in enumerate(columns):
            g = dict(col)
            g[(self.n + j, one)] = F.one
            gens.append(g)
        for g in self.ring.groebner:
            for c in range(self.n + self.m):
                gens.append({(c, e): a for e, a in g.terms.items()})
        self.gb = buchberger(gens, self.order, F)
        self._basis = _Basis()
        for v in self.gb:
            self._basis.add(_Elem(v, self.order))

    def kernel_vectors(self) -> list[dict]:
        """Nonzero (mod I) kernel elements, as vectors in the source module."""
        out = []
        for el in self._basis.elems:
            if el.lt[0] < self.n:
                continue
            v = {(c - self.n, e): a for (c, e), a in el.vec.items()}
            v = reduce_vector_mod_ideal(v, self.ring)
            if v:
                out.append(v)
        return out

    def lift(self, v: dict) -> dict | None:
        """x with A x = v (mod I), or None when v is not in the image."""
        r = _reduce(v, self._basis, self.order, self.ring.field)
        if any(c < self.n for (c, _) in r):
            return None
        F = self.ring.field
        x = {(c - self.n, e): F.neg(a) for (c, e), a in r.items()}
        return reduce_vector_mod_ideal(x, self.ring)


def kernel_of_matrix(A, ring=None):
    """Minimal generators of ker(A) as the columns of a PolyMatrix."""
    from .matrices import PolyMatrix
    from .modules import minimal_generators

    ring = to_ring(ring if ring is not None else A.ring)
    if ring != A.ring:
        A = A.base_change(ring)
    if A.ncols == 0:
        return PolyMatrix.zero(ring, [], [])
    kg = KernelGB(ring, A.row_twists, A.column_vectors(), A.col_twists)
    vecs = minimal_generators(kg.kernel_vectors(), ring, A.col_twists)
    return PolyMatrix.from_vectors(ring, vecs, A.col_twists)


def syzygies(A, ring=None):
    """Generators of ker(A), minimal and sorted by degree; A * syz == 0 exactly."""
    S = kernel_of_matrix(A, ring)
    if not (A.base_change(S.ring) @ S).is_zero():
        raise AssertionError("syzygy check failed")
    return S


def lift_columns(A, B, index: int | None = None):
    """X with A X = B over A's ring; raises LiftingError if impossible."""
    from .matrices import PolyMatrix

    ring = A.ring
    if A.row_twists != B.row_twists:
        raise ValueError("A and B must share their target twists")
    if B.ncols == 0:
        return PolyMatrix.zero(ring, A.col_twists, [])
    if A.ncols == 0:
        if not B.is_zero():
            raise LiftingError("nonzero target cannot lift through a map from 0", index)
        return PolyMatrix.zero(ring, [], B.col_twists)
    kg = KernelGB(ring, A.row_twists, A.column_vectors(), A.col_twists)
    cols = []
    for j, v in enumerate(B.column_vectors()):
        x = kg.lift(v)
        if x is None:
            raise LiftingError(f"column {j} is not in the image", index)
        cols.append(x)
    return PolyMatrix.from_vectors(ring, cols, A.col_twists, B.col_twists)


def is_regular_sequence(fs, ring) -> bool:
    """True iff the first Koszul homology of fs vanishes.

    For homogeneous elements of positive degree this is equivalent to fs being
    a regular sequence (in any order).
    """
    from .matrices import PolyMatrix

    ring = to_ring(ring)
    fs = [ring(f) for f in fs]
    if not fs:
        return True
    for f in fs:
        if f.is_zero() or not f.is_homogeneous() or f.degree() <= 0:
            return False
    degs = [f.degree() for f in fs]
    d1 = PolyMatrix(ring, [fs], [0], degs)
    K = kernel_of_matrix(d1)
    if K.ncols == 0:
        return True
    c = len(fs)
    pairs = [(i, j) for i in range(c) for j in range(i + 1, c)]
    if not pairs:
        return False
    cols = []
    for i, j in pairs:
        cols.append({(i, e): ring.field.neg(a) for e, a in fs[j].terms.items()}
                    | {(j, e): a for e, a in fs[i].terms.items()})
    sub = SubmoduleGB(ring, degs, [reduce_vector_mod_ideal(v, ring) for v in cols])
    return all(sub.contains(v) for v in K.column_vectors())
