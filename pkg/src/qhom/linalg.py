"""Exact linear algebra over a Field on sparse dict vectors."""

from __future__ import annotations

from .fields import Field


class EchelonSpace:
    """Incrementally built subspace kept in reduced row echelon form.

    Vectors are dicts mapping hashable coordinates to nonzero field elements.
    Each stored row has a pivot coordinate that appears in no other row, so a
    vector reduces in one pass over its pivot coordinates.
    """

    def __init__(self, field: Field, pivot_key=None):
        self.field = field
        self.rows: dict = {}
        self.pivot_key = pivot_key

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        F = self.field
        v = {k: c for k, c in v.items() if c}
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, a in self.rows[piv].items():
                val = F.sub(v.get(k, F.zero), F.mul(c, a))
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        """Add v to the span; returns True when the dimension grew."""
        F = self.field
        r = self.reduce(v)
        if not r:
            return False
        piv = max(r, key=self.pivot_key) if self.pivot_key else min(r)
        inv = F.inv(r[piv])
        r = {k: F.mul(c, inv) for k, c in r.items()}
        for p, row in self.rows.items():
            c = row.get(piv)
            if c:
                for k, a in r.items():
                    val = F.sub(row.get(k, F.zero), F.mul(c, a))
                    if val:
                        row[k] = val
                    else:
                        row.pop(k, None)
        self.rows[piv] = r
        return True


def rank(rows: list[dict], field: Field) -> int:
    sp = EchelonSpace(field)
    for r in rows:
        sp.add(r)
    return sp.dim


def nullspace(rows: list[dict], ncols: int, field: Field) -> list[list]:
    """Basis of {x : sum_j row[j] x_j = 0 for every row}, rows as {col: coeff}."""
    F = field
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {j: c for j, c in row.items() if c}
        for p in [j for j in r if j in pivots]:
            c = r.get(p)
            if not c:
                continue
            for j, a in pivots[p].items():
                val = F.sub(r.get(j, F.zero), F.mul(c, a))
                if val:
                    r[j] = val
                else:
                    r.pop(j, None)
        if not r:
            continue
        p = min(r)
        inv = F.inv(r[p])
        r = {j: F.mul(c, inv) for j, c in r.items()}
        for q, other in pivots.items():
            c = other.get(p)
            if c:
                for j, a in r.items():
                    val = F.sub(other.get(j, F.zero), F.mul(c, a))
                    if val:
                        other[j] = val
                    else:
                        other.pop(j, None)
        pivots[p] = r
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                x[p] = F.neg(c)
        basis.append(x)
    return basis
