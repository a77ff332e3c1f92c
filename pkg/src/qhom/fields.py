"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

import random
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """A coefficient field.

    ``Field.rationals()`` uses :class:`fractions.Fraction`; ``Field.prime(p)``
    stores elements as ints in ``range(p)``.  Characteristic 2 is rejected
    because the Koszul and cone sign conventions need ``-1 != 1``.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int = 0):
        if kind not in ("QQ", "GF"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "GF":
            if not _is_prime(p) or p == 2 or p >= 2**31:
                raise ValueError(f"GF(p) needs an odd prime p < 2^31, got {p}")
        else:
            p = 0
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls("QQ")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("GF", p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.replace(" ", "")
        if t in ("QQ", "Q"):
            return cls.rationals()
        for prefix in ("GF(", "ZZ/(", "F("):
            if t.startswith(prefix) and t.endswith(")"):
                return cls.prime(int(t[len(prefix):-1]))
        if t.startswith("ZZ/"):
            return cls.prime(int(t[3:]))
        raise ValueError(f"cannot parse field {text!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "QQ" else f"GF({self.p})"

    __str__ = __repr__

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    # element arithmetic

    def __call__(self, value):
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == "QQ":
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == "QQ" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "QQ" else 1

    def add(self, a, b):
        if self.p:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.p:
            return (a - b) % self.p
        return a - b

    def mul(self, a, b):
        if self.p:
            return (a * b) % self.p
        return a * b

    def neg(self, a):
        if self.p:
            return (-a) % self.p
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_element(self, rng: random.Random, nonzero: bool = False, height: int = 9):
        """Random element; rationals are drawn as small integers."""
        while True:
            if self.p:
                c = rng.randrange(self.p)
            else:
                c = Fraction(rng.randint(-height, height))
            if c or not nonzero:
                return c

    def to_str(self, a) -> str:
        """Canonical text; prime-field elements use the symmetric range."""
        if self.p:
            a = int(a) % self.p
            if a > self.p // 2:
                a -= self.p
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_json(self) -> str:
        return repr(self)
