"""Dense degreewise linear algebra over GF(p), independent of the package kernels.

Polynomials are plain dicts {exponent tuple: coefficient}; the only thing
borrowed from the package is the input data.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


def monomials(nvars: int, d: int) -> list[tuple]:
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(set(out))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def poly_mul_mono(f: dict, m: tuple, p: int) -> dict:
    return {mono_mul(e, m): c % p for e, c in f.items()}


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Plain Gaussian elimination on a dense copy."""
    A = [[x % p for x in r] for r in rows if any(x % p for x in r)]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def _vec(f: dict, basis: list[tuple]) -> list[int]:
    idx = {m: i for i, m in enumerate(basis)}
    v = [0] * len(basis)
    for e, c in f.items():
        v[idx[e]] = c
    return v


def ideal_span_rows(gens: list[tuple[dict, int]], nvars: int, d: int, p: int) -> list[list[int]]:
    """Rows spanning I_d for I generated by (poly, degree) pairs."""
    basis = monomials(nvars, d)
    rows = []
    for f, deg in gens:
        for m in monomials(nvars, d - deg):
            rows.append(_vec(poly_mul_mono(f, m, p), basis))
    return rows


def ideal_dim(gens, nvars: int, d: int, p: int) -> int:
    rows = ideal_span_rows(gens, nvars, d, p)
    return rank_mod_p(rows, p) if rows else 0


def same_ideal_span(gens_a, gens_b, nvars: int, d: int, p: int) -> bool:
    ra = ideal_span_rows(gens_a, nvars, d, p)
    rb = ideal_span_rows(gens_b, nvars, d, p)
    a = rank_mod_p(ra, p) if ra else 0
    b = rank_mod_p(rb, p) if rb else 0
    both = rank_mod_p(ra + rb, p) if ra + rb else 0
    return a == b == both


# free-module maps


def module_basis(twists: list[int], nvars: int, d: int) -> list[tuple]:
    return [(c, m) for c, a in enumerate(twists) for m in monomials(nvars, d - a)]


def matrix_in_degree(entries, row_twists, col_twists, nvars: int, d: int, p: int):
    """The k-linear map (F_col)_d -> (F_row)_d as a dense matrix (rows = target basis)."""
    src = module_basis(col_twists, nvars, d)
    tgt = module_basis(row_twists, nvars, d)
    idx = {b: i for i, b in enumerate(tgt)}
    M = [[0] * len(src) for _ in tgt]
    for j, (c, m) in enumerate(src):
        for r in range(len(row_twists)):
            for e, coef in entries[r][c].items():
                M[idx[(r, mono_mul(e, m))]][j] = (M[idx[(r, mono_mul(e, m))]][j] + coef) % p
    return M


def kernel_dim(entries, row_twists, col_twists, nvars: int, d: int, p: int) -> int:
    M = matrix_in_degree(entries, row_twists, col_twists, nvars, d, p)
    ncols = len(module_basis(col_twists, nvars, d))
    if not M:
        return ncols
    cols = [list(r) for r in zip(*M)] if ncols else []
    return ncols - (rank_mod_p(cols, p) if cols else 0)


def submodule_dim(vectors, twists, nvars: int, d: int, p: int) -> int:
    """dim of the degree-d part of the submodule of F = ⊕ R(-twists) spanned by vectors.

    Each vector is (list of polys per component, degree).
    """
    basis = module_basis(twists, nvars, d)
    idx = {b: i for i, b in enumerate(basis)}
    rows = []
    for comps, deg in vectors:
        for m in monomials(nvars, d - deg):
            row = [0] * len(basis)
            for c, f in enumerate(comps):
                for e, coef in f.items():
                    row[idx[(c, mono_mul(e, m))]] = (row[idx[(c, mono_mul(e, m))]] + coef) % p
            rows.append(row)
    return rank_mod_p(rows, p) if rows else 0


def quotient_hilbert(gens, nvars: int, d: int, p: int) -> int:
    return len(monomials(nvars, d)) - ideal_dim(gens, nvars, d, p)
