"""Graded polynomial rings, their homogeneous quotients, and polynomials."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

from .errors import HomogeneityError, ParseError, RingMismatchError
from .fields import Field

ORDERS = ("grevlex", "glex", "lex")


class PolyRing:
    """k[x_1..x_n] with positive integer weights and a monomial order.

    Orders are compared on homogeneous data only, so every order is used with
    the weighted degree as its first key.
    """

    def __init__(self, field: Field, variables, weights=None, order: str = "grevlex"):
        variables = tuple(str(v) for v in variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be distinct: {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables):
            raise ValueError("one weight per variable required")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}; choose from {ORDERS}")
        self.field = field
        self.variables = variables
        self.weights = weights
        self.order = order
        self.nvars = len(variables)
        self._keys: dict[tuple, tuple] = {}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.weights == other.weights
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.weights, self.order))

    def __repr__(self):
        w = "" if set(self.weights) <= {1} else f", weights={list(self.weights)}"
        return f"{self.field}[{','.join(self.variables)}{w}; {self.order}]"

    # monomials

    def deg(self, e: tuple) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def key(self, e: tuple) -> tuple:
        """Sort key: larger key means larger monomial."""
        k = self._keys.get(e)
        if k is None:
            d = self.deg(e)
            if self.order == "grevlex":
                k = (d,) + tuple(-a for a in reversed(e))
            else:
                k = (d,) + e
            self._keys[e] = k
        return k

    @property
    def one_exp(self) -> tuple:
        return (0,) * self.nvars

    def monomials_of_degree(self, d: int) -> list[tuple]:
        """All exponent vectors of weighted degree d, largest first."""
        out: list[tuple] = []
        if d < 0:
            return out

        def rec(i, left, acc):
            if i == self.nvars:
                if left == 0:
                    out.append(tuple(acc))
                return
            w = self.weights[i]
            for a in range(left // w, -1, -1):
                acc.append(a)
                rec(i + 1, left - a * w, acc)
                acc.pop()

        rec(0, d, [])
        out.sort(key=self.key, reverse=True)
        return out

    # constructors

    def poly(self, terms: dict) -> "Polynomial":
        return Polynomial(self, {e: c for e, c in terms.items() if c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {self.one_exp: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.one_exp: c} if c else {})

    def monomial(self, e, c=None) -> "Polynomial":
        c = self.field.one if c is None else self.field(c)
        return Polynomial(self, {tuple(e): c} if c else {})

    @cached_property
    def gens(self) -> list["Polynomial"]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.monomial(tuple(e)))
        return out

    def var(self, name: str) -> "Polynomial":
        return self.gens[self.variables.index(name)]

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"polynomial over {value.ring} used in {self}")
            return value
        if isinstance(value, str):
            return parse_polynomial(value, self)
        return self.constant(value)

    def quotient(self, gens=()) -> "QuotientRing":
        return QuotientRing(self, gens)

    def as_ring(self) -> "QuotientRing":
        return QuotientRing(self, ())

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "variables": list(self.variables),
            "weights": list(self.weights),
            "order": self.order,
        }


class Polynomial:
    """Immutable polynomial: a mapping exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lead is None:
            e = max(self.terms, key=self.ring.key)
            self._lead = (e, self.terms[e])
        return self._lead

    @property
    def lm(self) -> tuple:
        return self.leading_term()[0]

    @property
    def lc(self):
        return self.leading_term()[1]

    def is_homogeneous(self) -> bool:
        return len({self.ring.deg(e) for e in self.terms}) <= 1

    def degree(self) -> int:
        """Weighted degree; requires homogeneity.  The zero polynomial has degree -1."""
        if not self.terms:
            return -1
        degs = {self.ring.deg(e) for e in self.terms}
        if len(degs) != 1:
            raise HomogeneityError(f"{self} is not homogeneous")
        return degs.pop()

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring.one_exp, self.ring.field.zero)

    # arithmetic

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(out.get(e, F.zero), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_term(self, exp: tuple, c) -> "Polynomial":
        F = self.ring.field
        if not c:
            return self.ring.zero
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): F.mul(v, c) for e, v in self.terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # text

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            cs = F.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.ring.variables, e) if a
            )
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


class QuotientRing:
    """R = P / I for a homogeneous ideal I given by generators.

    The reduced Groebner basis of I is computed lazily and cached; two quotient
    rings compare equal when their ambient rings and reduced bases agree.
    """

    def __init__(self, ambient: PolyRing, ideal_gens=()):
        if isinstance(ambient, QuotientRing):
            ideal_gens = list(ambient.ideal_gens) + list(ideal_gens)
            ambient = ambient.ambient
        gens = []
        for g in ideal_gens:
            g = ambient(g)
            if not g.is_homogeneous():
                raise HomogeneityError(f"ideal generator {g} is not homogeneous")
            if g:
                gens.append(g)
        self.ambient = ambient
        self.ideal_gens = tuple(gens)
        self._gb = None

    @property
    def field(self) -> Field:
        return self.ambient.field

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    @property
    def variables(self):
        return self.ambient.variables

    @property
    def weights(self):
        return self.ambient.weights

    @property
    def groebner(self) -> list[Polynomial]:
        if self._gb is None:
            from .groebner import groebner_basis

            self._gb = groebner_basis(list(self.ideal_gens), self.ambient)
        return self._gb

    @cached_property
    def _reducer(self):
        from .groebner import IdealReducer

        return IdealReducer(self.ambient, self.groebner)

    def reduce(self, f) -> Polynomial:
        f = self.ambient(f)
        if not self.ideal_gens:
            return f
        return self._reducer.reduce_poly(f)

    def reduce_terms(self, terms: dict) -> dict:
        """Normal form of a raw exponent->coeff dict."""
        if not self.ideal_gens:
            return terms
        return self._reducer.reduce_dict(terms)

    def is_zero(self, f) -> bool:
        return self.reduce(f).is_zero()

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.groebner

    def __call__(self, value) -> Polynomial:
        return self.reduce(self.ambient(value))

    @cached_property
    def gens(self) -> list[Polynomial]:
        return [self.reduce(g) for g in self.ambient.gens]

    @property
    def zero(self):
        return self.ambient.zero

    @property
    def one(self):
        return self.reduce(self.ambient.one)

    def quotient(self, gens=()) -> "QuotientRing":
        return QuotientRing(self.ambient, list(self.ideal_gens) + [self.ambient(g) for g in gens])

    def is_quotient_of(self, other: "QuotientRing") -> bool:
        """True when this ring is other / J for some ideal J."""
        other = to_ring(other)
        if other.ambient != self.ambient:
            return False
        return all(self.is_zero(g) for g in other.ideal_gens)

    def __eq__(self, other):
        if isinstance(other, PolyRing):
            other = other.as_ring()
        return (
            isinstance(other, QuotientRing)
            and self.ambient == other.ambient
            and [g.terms for g in self.groebner] == [g.terms for g in other.groebner]
        )

    def __hash__(self):
        return hash((self.ambient, tuple(frozenset(g.terms.items()) for g in self.groebner)))

    def __repr__(self):
        if not self.ideal_gens:
            return repr(self.ambient)
        return f"{self.ambient} / ({', '.join(str(g) for g in self.ideal_gens)})"

    def to_json(self) -> dict:
        d = self.ambient.to_json()
        d["ideal"] = [str(g) for g in self.ideal_gens]
        d["groebner"] = [str(g) for g in self.groebner]
        return d


def to_ring(r) -> QuotientRing:
    """Coerce a PolyRing into the trivial quotient; pass QuotientRings through."""
    if isinstance(r, QuotientRing):
        return r
    if isinstance(r, PolyRing):
        return r.as_ring()
    raise TypeError(f"not a ring: {r!r}")


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str, line: int = 1, col0: int = 1):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        kind = ("num", "id", "op")[m.lastindex - 1]
        toks.append((kind, m.group(m.lastindex), line, col0 + start))
        pos = m.end()
    toks.append(("end", "", line, col0 + len(text)))
    return toks


class _PolyParser:
    def __init__(self, text: str, ring: PolyRing, line: int = 1, col: int = 1):
        self.ring = ring
        self.toks = _tokenize(text, line, col)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, expected=()):
        _, _, line, col = self.peek()
        raise ParseError(msg, line, col, expected)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}", ("+", "-", "*", "^"))
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division only by nonzero constants")
                p = p.scale(self.ring.field.inv(q.constant_coefficient()))
        return p

    def unary(self) -> Polynomial:
        if self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, _, _ = self.peek()
            if kind != "num":
                self.error("exponent must be a non-negative integer", ("integer",))
            self.take()
            p = p ** int(val)
        return p

    def atom(self) -> Polynomial:
        kind, val, _, _ = self.peek()
        if kind == "num":
            self.take()
            return self.ring.constant(int(val))
        if kind == "id":
            if val not in self.ring.variables:
                self.error(f"unknown variable {val!r}", self.ring.variables)
            self.take()
            return self.ring.var(val)
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            if self.peek()[1] != ")":
                self.error("missing ')'", (")",))
            self.take()
            return p
        self.error(f"unexpected {val!r}" if val else "unexpected end of input",
                   ("number", "variable", "("))


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, col: int = 1) -> Polynomial:
    """Parse ``3*x^2*y - z/2 + (x+y)^2`` style text over ``ring``."""
    if isinstance(ring, QuotientRing):
        return ring.reduce(_PolyParser(text, ring.ambient, line, col).parse())
    return _PolyParser(text, ring, line, col).parse()
