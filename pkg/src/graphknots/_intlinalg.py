"""Integer row Hermite normal form for lattice membership and coset reduction.

Plain-Python arbitrary-precision arithmetic; matrix sizes here are at most a
few hundred rows/columns, so the classic Euclidean row reduction is plenty.
"""

from __future__ import annotations


def hermite_normal_form(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row-style HNF of the lattice spanned by ``rows``.

    Returns (H, pivot_cols): H has one row per pivot, pivots positive,
    entries above each pivot reduced into [0, pivot).
    """
    if not rows:
        return [], []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    h: list[list[int]] = []
    pivots: list[int] = []
    row_pool = m
    col = 0
    while col < ncols and row_pool:
        nz = [r for r in row_pool if r[col] != 0]
        rest = [r for r in row_pool if r[col] == 0]
        if not nz:
            col += 1
            continue
        # Euclidean elimination in this column
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            base = nz[0]
            out = [base]
            for r in nz[1:]:
                q = r[col] // base[col]
                rr = [a - q * b for a, b in zip(r, base)]
                if rr[col] != 0:
                    out.append(rr)
                elif any(rr):
                    rest.append(rr)
            nz = out
        pivot_row = nz[0]
        if pivot_row[col] < 0:
            pivot_row = [-a for a in pivot_row]
        h.append(pivot_row)
        pivots.append(col)
        row_pool = rest
        col += 1
    # reduce entries above pivots
    for i in range(len(h) - 1, -1, -1):
        p = pivots[i]
        v = h[i][p]
        for j in range(i):
            q = h[j][p] // v
            if q:
                h[j] = [a - q * b for a, b in zip(h[j], h[i])]
    return h, pivots


def reduce_vector(vec: list[int], h: list[list[int]], pivots: list[int]) -> list[int]:
    """Unique coset representative of ``vec`` modulo the HNF lattice."""
    v = list(vec)
    for row, p in zip(h, pivots):
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


def in_lattice(vec: list[int], h: list[list[int]], pivots: list[int]) -> bool:
    return not any(reduce_vector(vec, h, pivots))


def lattice_rank(h: list[list[int]]) -> int:
    return len(h)
