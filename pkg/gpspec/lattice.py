"""Exact integer lattice arithmetic.

A lattice is given by generator rows in Z^width. The canonical
representative is the row Hermite normal form: echelon shape, zero rows
dropped, positive pivots, and entries above each pivot reduced into
[0, pivot). Two generator sets span the same lattice iff their Hermite
forms are identical.

Smith forms are computed with numpy object arrays so that all entries
stay Python integers.
"""


__all__ = [
    'hermite_rows',
    'pivot_columns',
    'is_member',
    'intersect_rows',
    'line_generator',
    'smith_form',
    'smith_invariants',
    'row_times',
    'lattice_index',
]


import numpy as np


def hermite_rows(rows, width):
    """Return the row Hermite normal form of the lattice spanned by
    rows, as a tuple of tuples.
    """
    work = []
    for r in rows:
        r = list(r)
        if len(r) != width:
            raise ValueError('Row {} does not have width {}'.format(r, width))
        if any(r):
            work.append(r)
    
    basis = []
    pivots = []
    for col in range(width):
        # Euclid on the column until a single row is left with a
        # nonzero entry there.
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(col, width):
                    r[k] -= q * piv[k]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col] != 0]
        if not nz:
            continue
        piv = nz[0]
        work = [r for r in work if r is not piv]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        pivots.append(col)
    
    # Reduce entries above pivots. Rows below a pivot are zero in
    # earlier columns, so reducing in pivot order is stable.
    for i, col in enumerate(pivots):
        p = basis[i][col]
        for j in range(i):
            q = basis[j][col] // p
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    
    return tuple(tuple(r) for r in basis)


def pivot_columns(basis):
    """Pivot column of each row of a Hermite basis."""
    cols = []
    for r in basis:
        cols.append(next(k for k, a in enumerate(r) if a != 0))
    return cols


def is_member(basis, vector):
    """Decide whether vector lies in the lattice with the given
    Hermite basis.
    """
    w = list(vector)
    for r, col in zip(basis, pivot_columns(basis)):
        q, rem = divmod(w[col], r[col])
        if rem != 0:
            return False
        if q:
            w = [a - q * b for a, b in zip(w, r)]
    return not any(w)


def intersect_rows(basis1, basis2, width):
    """Hermite basis of the intersection of two lattices.
    
    The rows (b | b) for b in basis1 and (b | 0) for b in basis2 span a
    lattice whose elements with zero left half are exactly (0 | x) for
    x in the intersection.
    """
    zero = (0,) * width
    rows = [tuple(b) + tuple(b) for b in basis1]
    rows += [tuple(b) + zero for b in basis2]
    joint = hermite_rows(rows, 2 * width)
    right = [r[width:] for r in joint if not any(r[:width])]
    return hermite_rows(right, width)


def line_generator(basis, j, width):
    """Smallest c >= 0 with c * e_j in the lattice."""
    unit = tuple(int(k == j) for k in range(width))
    meet = intersect_rows(basis, [unit], width)
    if not meet:
        return 0
    assert len(meet) == 1
    return meet[0][j]


def _identity(n):
    return np.array([[int(i == j) for j in range(n)] for i in range(n)],
                    dtype=object).reshape(n, n)


def smith_form(rows, width):
    """Smith normal form by row and column operations.
    
    Returns (diag, V, Vinv) where diag is the list of nonzero invariant
    factors d_1 | d_2 | ... and V, Vinv are mutually inverse unimodular
    width x width matrices (nested lists) such that x lies in the
    lattice spanned by rows iff x V lies in the span of d_i e_i.
    Only column operations are tracked; row operations do not change
    the lattice.
    """
    m = len(rows)
    D = np.array([list(r) for r in rows], dtype=object).reshape(m, width)
    V = _identity(width)
    Vinv = _identity(width)
    
    def swap_cols(a, b):
        if a != b:
            D[:, [a, b]] = D[:, [b, a]]
            V[:, [a, b]] = V[:, [b, a]]
            Vinv[[a, b]] = Vinv[[b, a]]
    
    def swap_rows(a, b):
        if a != b:
            D[[a, b]] = D[[b, a]]
    
    def col_sub(j, t, q):
        # column j -= q * column t
        D[:, j] = D[:, j] - q * D[:, t]
        V[:, j] = V[:, j] - q * V[:, t]
        Vinv[t] = Vinv[t] + q * Vinv[j]
    
    diag = []
    t = 0
    while t < min(m, width):
        best = None
        for i in range(t, m):
            for j in range(t, width):
                if D[i, j] != 0 and (best is None or
                                     abs(D[i, j]) < abs(D[best])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        
        while True:
            dirty = False
            for i in range(t + 1, m):
                q = D[i, t] // D[t, t]
                if q:
                    D[i] = D[i] - q * D[t]
                if D[i, t] != 0:
                    dirty = True
            for j in range(t + 1, width):
                q = D[t, j] // D[t, t]
                if q:
                    col_sub(j, t, q)
                if D[t, j] != 0:
                    dirty = True
            if dirty:
                # Move the smallest leftover in row t / column t to
                # the pivot; its absolute value strictly decreased.
                cands = [(abs(D[i, t]), i, t) for i in range(t + 1, m)
                         if D[i, t] != 0]
                cands += [(abs(D[t, j]), t, j) for j in range(t + 1, width)
                          if D[t, j] != 0]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, width):
                    if D[i, j] % D[t, t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            D[t] = D[t] + D[bad]
        
        if D[t, t] < 0:
            D[t] = -D[t]
        diag.append(D[t, t])
        t += 1
    
    return diag, V.tolist(), Vinv.tolist()


def smith_invariants(rows, width):
    """Return (free_rank, torsion) of Z^width / span(rows), torsion
    being the invariant factors greater than 1.
    """
    diag, _V, _Vinv = smith_form(rows, width)
    return width - len(diag), [d for d in diag if d > 1]


def row_times(vector, matrix):
    """Row vector times matrix over the integers."""
    n = len(matrix[0]) if matrix else 0
    return [sum(vector[i] * matrix[i][j] for i in range(len(vector)))
            for j in range(n)]


def lattice_index(basis, width):
    """Index of a full-rank lattice in Z^width, or 0 if the lattice
    does not have full rank.
    """
    if len(basis) < width:
        return 0
    index = 1
    for r, col in zip(basis, pivot_columns(basis)):
        index *= r[col]
    return index
