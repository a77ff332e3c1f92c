"""Homogeneous polynomial matrices: degree-0 maps between twisted free modules."""

from __future__ import annotations

from .errors import HomogeneityError, RingMismatchError
from .polynomials import Polynomial, QuotientRing, to_ring


class PolyMatrix:
    """A rows x cols matrix over R = P/I, read as a map F(cols) -> F(rows).

    Twists are generator degrees: entry (i, j) is zero or homogeneous of degree
    ``col_twists[j] - row_twists[i]``.  Entries are kept in normal form.
    """

    __slots__ = ("ring", "entries", "row_twists", "col_twists")

    def __init__(self, ring, entries, row_twists, col_twists, check: bool = True):
        ring = to_ring(ring)
        self.ring = ring
        self.row_twists = [int(t) for t in row_twists]
        self.col_twists = [int(t) for t in col_twists]
        nr, nc = len(self.row_twists), len(self.col_twists)
        if len(entries) != nr or any(len(r) != nc for r in entries):
            raise ValueError(f"entries do not have shape {nr}x{nc}")
        self.entries = [[ring.reduce(ring.ambient(x)) for x in row] for row in entries]
        if check:
            self.check_degrees()

    def check_degrees(self):
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x and x.degree() != self.col_twists[j] - self.row_twists[i]:
                    raise HomogeneityError(
                        f"entry ({i},{j}) = {x} has degree {x.degree()}, expected "
                        f"{self.col_twists[j] - self.row_twists[i]}"
                    )

    # constructors

    @classmethod
    def zero(cls, ring, row_twists, col_twists) -> "PolyMatrix":
        ring = to_ring(ring)
        z = ring.zero
        return cls(ring, [[z] * len(col_twists) for _ in row_twists], row_twists, col_twists,
                   check=False)

    @classmethod
    def identity(cls, ring, twists) -> "PolyMatrix":
        ring = to_ring(ring)
        n = len(twists)
        rows = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        return cls(ring, rows, twists, twists, check=False)

    @classmethod
    def scalar(cls, ring, f, twists, shift: int) -> "PolyMatrix":
        """f * Id as a map F(twists + shift) -> F(twists)."""
        ring = to_ring(ring)
        f = ring(f)
        n = len(twists)
        rows = [[f if i == j else ring.zero for j in range(n)] for i in range(n)]
        return cls(ring, rows, twists, [t + shift for t in twists])

    @classmethod
    def from_vectors(cls, ring, vectors, row_twists, col_twists=None) -> "PolyMatrix":
        """Columns given as ``{(row, exp): coeff}`` dicts; twists inferred if omitted."""
        ring = to_ring(ring)
        P = ring.ambient
        nr = len(row_twists)
        if col_twists is None:
            col_twists = []
            for v in vectors:
                (r, e) = next(iter(v))
                col_twists.append(P.deg(e) + row_twists[r])
        cols = []
        for v in vectors:
            col = [dict() for _ in range(nr)]
            for (r, e), c in v.items():
                col[r][e] = c
            cols.append([Polynomial(P, d) for d in col])
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(nr)]
        return cls(ring, rows, row_twists, col_twists)

    @classmethod
    def block(cls, blocks) -> "PolyMatrix":
        """Assemble from a 2-D list of PolyMatrix blocks with matching twists."""
        ring = blocks[0][0].ring
        row_twists = [t for row in blocks for t in row[0].row_twists]
        col_twists = [t for b in blocks[0] for t in b.col_twists]
        rows = []
        for brow in blocks:
            for b in brow:
                if b.ring != ring:
                    raise RingMismatchError("blocks over different rings")
            for i in range(brow[0].nrows):
                rows.append([x for b in brow for x in b.entries[i]])
        return cls(ring, rows, row_twists, col_twists)

    # shape and access

    @property
    def nrows(self) -> int:
        return len(self.row_twists)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list[Polynomial]:
        return [row[j] for row in self.entries]

    def column_vectors(self) -> list[dict]:
        out = []
        for j in range(self.ncols):
            v = {}
            for i, row in enumerate(self.entries):
                for e, c in row[j].terms.items():
                    v[(i, e)] = c
            out.append(v)
        return out

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.row_twists == other.row_twists
            and self.col_twists == other.col_twists
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )

    def same_entries(self, other) -> bool:
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    # algebra

    def _check(self, other: "PolyMatrix"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(f"matrices over {self.ring} and {other.ring}")

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.col_twists != other.row_twists:
            raise HomogeneityError("composition of maps with mismatched twists")
        P = self.ring.ambient
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = P.zero
                for k in range(self.ncols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return PolyMatrix(self.ring, rows, self.row_twists, other.col_twists, check=False)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        rows = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return PolyMatrix(self.ring, rows, self.row_twists, self.col_twists, check=False)

    def __neg__(self) -> "PolyMatrix":
        rows = [[-a for a in r] for r in self.entries]
        return PolyMatrix(self.ring, rows, self.row_twists, self.col_twists, check=False)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def scale(self, f, shift: int = 0) -> "PolyMatrix":
        """Multiply every entry by f; the source twists grow by ``shift`` = deg f."""
        f = self.ring(f) if not isinstance(f, int) else self.ring.ambient.constant(f)
        rows = [[a * f for a in r] for r in self.entries]
        return PolyMatrix(self.ring, rows, self.row_twists, [t + shift for t in self.col_twists])

    def transpose(self) -> "PolyMatrix":
        """Dual map Hom(F_rows, R) -> Hom(F_cols, R); twists are negated."""
        rows = [list(col) for col in zip(*self.entries)] if self.nrows else [
            [] for _ in range(self.ncols)]
        return PolyMatrix(self.ring, rows, [-t for t in self.col_twists],
                          [-t for t in self.row_twists], check=False)

    def twisted(self, s: int) -> "PolyMatrix":
        """Same entries, all twists raised by s (the map F(-s) -> G(-s))."""
        return PolyMatrix(self.ring, self.entries, [t + s for t in self.row_twists],
                          [t + s for t in self.col_twists], check=False)

    def base_change(self, ring) -> "PolyMatrix":
        ring = to_ring(ring)
        if ring is self.ring:
            return self
        if ring.ambient != self.ring.ambient:
            raise RingMismatchError(f"cannot base change {self.ring} to {ring}")
        return PolyMatrix(ring, self.entries, self.row_twists, self.col_twists, check=False)

    def select_columns(self, cols) -> "PolyMatrix":
        cols = list(cols)
        rows = [[r[j] for j in cols] for r in self.entries]
        return PolyMatrix(self.ring, rows, self.row_twists, [self.col_twists[j] for j in cols],
                          check=False)

    def select_rows(self, rows_idx) -> "PolyMatrix":
        rows_idx = list(rows_idx)
        return PolyMatrix(self.ring, [list(self.entries[i]) for i in rows_idx],
                          [self.row_twists[i] for i in rows_idx], self.col_twists, check=False)

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.row_twists != other.row_twists:
            raise ValueError("hstack needs identical row twists")
        rows = [ra + rb for ra, rb in zip(self.entries, other.entries)]
        return PolyMatrix(self.ring, rows, self.row_twists, self.col_twists + other.col_twists,
                          check=False)

    def vstack(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        if self.col_twists != other.col_twists:
            raise ValueError("vstack needs identical column twists")
        return PolyMatrix(self.ring, [list(r) for r in self.entries + other.entries],
                          self.row_twists + other.row_twists, self.col_twists, check=False)

    def kron_identity(self, twists) -> "PolyMatrix":
        """self (x) Id_G for G = F(twists): block (i, j) is entry(i, j) * Id."""
        g = len(twists)
        z = self.ring.zero
        rows = []
        for i in range(self.nrows):
            for a in range(g):
                row = []
                for j in range(self.ncols):
                    x = self.entries[i][j]
                    row.extend(x if b == a else z for b in range(g))
                rows.append(row)
        rt = [t + s for t in self.row_twists for s in twists]
        ct = [t + s for t in self.col_twists for s in twists]
        return PolyMatrix(self.ring, rows, rt, ct, check=False)

    @staticmethod
    def block_diagonal(mats, ring=None) -> "PolyMatrix":
        ring = to_ring(ring if ring is not None else mats[0].ring)
        rt = [t for m in mats for t in m.row_twists]
        ct = [t for m in mats for t in m.col_twists]
        out = PolyMatrix.zero(ring, rt, ct)
        r0 = c0 = 0
        for m in mats:
            for i in range(m.nrows):
                for j in range(m.ncols):
                    out.entries[r0 + i][c0 + j] = m.entries[i][j]
            r0 += m.nrows
            c0 += m.ncols
        return out

    # text

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "row_twists": list(self.row_twists),
            "col_twists": list(self.col_twists),
            "entries": self.to_strings(),
        }

    @classmethod
    def from_json(cls, ring, data) -> "PolyMatrix":
        ring = to_ring(ring)
        rows = [[ring(x) for x in row] for row in data["entries"]]
        return cls(ring, rows, data["row_twists"], data["col_twists"])

    def __repr__(self):
        body = "; ".join(", ".join(r) for r in self.to_strings())
        return f"PolyMatrix[{self.nrows}x{self.ncols}]({body})"
