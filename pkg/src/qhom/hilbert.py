"""Hilbert series of graded modules as rational functions in t."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

NEG_INF = -math.inf


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def laurent_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return _clean(out)


def laurent_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def laurent_divide(a: dict, b: dict):
    """Exact quotient a / b of integer Laurent polynomials, or None."""
    if not b:
        raise ZeroDivisionError("division by the zero series")
    if not a:
        return {}
    lo_a, lo_b = min(a), min(b)
    A = {k - lo_a: Fraction(v) for k, v in a.items()}
    B = {k - lo_b: v for k, v in b.items()}
    db = max(B)
    lead = B[db]
    q: dict = {}
    while A:
        da = max(A)
        if da < db:
            return None
        c = A[da] / lead
        s = da - db
        q[s] = c
        for k, v in B.items():
            val = A.get(k + s, 0) - c * v
            if val:
                A[k + s] = val
            else:
                A.pop(k + s, None)
    if any(v.denominator != 1 for v in q.values()):
        return None
    shift = lo_a - lo_b
    return {k + shift: int(v) for k, v in q.items() if v}


def _minimalize(gens) -> tuple:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _numerator(gens: tuple, weights: tuple) -> tuple:
    """Numerator of HS(P/J) over prod(1 - t^w) for a minimal monomial ideal J."""
    if not gens:
        return ((0, 1),)
    if not any(gens[0]):
        return ()
    deg = lambda e: sum(a * w for a, w in zip(e, weights))  # noqa: E731
    mixed = [g for g in gens if sum(1 for a in g if a) > 1]
    if not mixed:
        # pure powers of distinct variables: a complete intersection
        out = {0: 1}
        for g in gens:
            out = laurent_mul(out, {0: 1, deg(g): -1})
        return tuple(sorted(out.items()))
    m = mixed[0]
    i = max(range(len(m)), key=lambda k: (sum(1 for g in gens if g[k]), -k))
    if m[i] == 0:
        i = next(k for k, a in enumerate(m) if a)
    x = tuple(1 if k == i else 0 for k in range(len(m)))
    plus = _minimalize(list(gens) + [x])
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(g, x)) for g in gens])
    n1 = dict(_numerator(plus, weights))
    n2 = dict(_numerator(colon, weights))
    out = laurent_add(n1, {k + weights[i]: v for k, v in n2.items()})
    return tuple(sorted(out.items()))


def monomial_quotient_numerator(gens, weights) -> dict:
    """Numerator N(t) with HS(P/(gens)) = N(t) / prod(1 - t^w)."""
    return dict(_numerator(_minimalize([tuple(g) for g in gens]), tuple(weights)))


class HilbertSeries:
    """numerator(t) / prod_i (1 - t^{w_i}), numerator an integer Laurent polynomial."""

    __slots__ = ("numerator", "weights")

    def __init__(self, numerator: dict, weights):
        self.numerator = _clean({int(k): int(v) for k, v in numerator.items()})
        self.weights = tuple(weights)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def _compat(self, other: "HilbertSeries"):
        if self.weights != other.weights:
            raise ValueError("Hilbert series over different gradings")

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.weights == other.weights
            and self.numerator == other.numerator
        )

    def __hash__(self):
        return hash((self.weights, frozenset(self.numerator.items())))

    def __add__(self, other):
        self._compat(other)
        return HilbertSeries(laurent_add(self.numerator, other.numerator), self.weights)

    def __sub__(self, other):
        self._compat(other)
        return HilbertSeries(laurent_add(self.numerator, other.numerator, -1), self.weights)

    def __neg__(self):
        return HilbertSeries({k: -v for k, v in self.numerator.items()}, self.weights)

    def __mul__(self, n: int):
        return HilbertSeries({k: n * v for k, v in self.numerator.items()}, self.weights)

    __rmul__ = __mul__

    def times(self, poly: dict) -> "HilbertSeries":
        """Multiply by an integer Laurent polynomial, e.g. sum of t^{shift}."""
        return HilbertSeries(laurent_mul(self.numerator, poly), self.weights)

    def shift(self, d: int) -> "HilbertSeries":
        """Series of M(-d): multiply by t^d."""
        return HilbertSeries({k + d: v for k, v in self.numerator.items()}, self.weights)

    def is_zero(self) -> bool:
        return not self.numerator

    def ratio(self, other: "HilbertSeries"):
        """The Laurent polynomial q with self = q * other, or None."""
        self._compat(other)
        return laurent_divide(self.numerator, other.numerator)

    # expansion

    def values(self, lo: int, hi: int) -> list[int]:
        """dim_k M_d for d in [lo, hi]."""
        if hi < lo:
            return []
        base = min(self.numerator) if self.numerator else lo
        n = max(hi - min(base, lo), 0) + 1
        denom = [0] * n
        denom[0] = 1
        for w in self.weights:
            for k in range(w, n):
                denom[k] += denom[k - w]
        out = []
        for d in range(lo, hi + 1):
            s = 0
            for k, v in self.numerator.items():
                j = d - k
                if 0 <= j < n:
                    s += v * denom[j]
            out.append(s)
        return out

    def coefficient(self, d: int) -> int:
        return self.values(d, d)[0]

    def initial_degree(self):
        """Lowest degree with a nonzero value (None for the zero module)."""
        if not self.numerator:
            return None
        d = min(self.numerator)
        while self.coefficient(d) == 0:
            d += 1
        return d

    def dimension(self):
        """Krull dimension = pole order at t = 1; -inf for the zero module."""
        if not self.numerator:
            return NEG_INF
        lo = min(self.numerator)
        poly = [0] * (max(self.numerator) - lo + 1)
        for k, v in self.numerator.items():
            poly[k - lo] = v
        mult = 0
        while sum(poly) == 0:
            # synthetic division by (t - 1)
            q = []
            acc = 0
            for c in reversed(poly):
                acc += c
                q.append(acc)
            q.reverse()
            poly = q[1:]
            mult += 1
        return self.nvars - mult

    def multiplicity_free_form(self):
        """(h, d) with HS = h(t) / (1 - t)^d; only for standard gradings."""
        if any(w != 1 for w in self.weights):
            raise ValueError("reduced form needs a standard grading")
        dim = self.dimension()
        if dim == NEG_INF:
            return {}, 0
        num = dict(self.numerator)
        for _ in range(self.nvars - dim):
            num = laurent_divide(num, {0: 1, 1: -1})
        return num, dim

    def is_finite_length(self) -> bool:
        return self.dimension() <= 0

    def total_dimension(self) -> int:
        """dim_k M for a finite-length module."""
        if not self.is_finite_length():
            raise ValueError("module has infinite length")
        return sum(self.values(*self.degree_range()))

    def degree_range(self):
        """(lo, hi) of nonzero degrees for a finite-length module."""
        if not self.numerator:
            return (0, -1)
        num, _ = _reduce_to_poly(self)
        return (min(num), max(num))

    def __str__(self):
        if any(w != 1 for w in self.weights):
            den = "*".join(f"(1-t^{w})" if w != 1 else "(1-t)" for w in self.weights)
            return f"({_laurent_str(self.numerator)}) / ({den})"
        num, dim = self.multiplicity_free_form()
        if dim == 0 or dim == NEG_INF:
            return _laurent_str(num)
        den = "(1-t)" if dim == 1 else f"(1-t)^{dim}"
        return f"({_laurent_str(num)}) / {den}"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "numerator": {str(k): v for k, v in sorted(self.numerator.items())},
            "weights": list(self.weights),
            "dimension": None if self.dimension() == NEG_INF else self.dimension(),
        }


def _reduce_to_poly(hs: HilbertSeries):
    """For finite-length modules: the Hilbert polynomial itself as a dict."""
    den = {0: 1}
    for w in hs.weights:
        den = laurent_mul(den, {0: 1, w: -1})
    q = laurent_divide(hs.numerator, den)
    if q is None:
        raise ValueError("not a finite-length series")
    return q, 0


def _laurent_str(p: dict) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p):
        v = p[k]
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        a = abs(v)
        body = (str(a) if (a != 1 or not mono) else "") + ("*" if a != 1 and mono else "") + mono
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
