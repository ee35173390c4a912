"""Dense exact linear algebra over the rationals.

Everything here works on lists of lists of Fraction.  Matrices are small
(bases of graded components), so plain Gauss-Jordan elimination with exact
arithmetic is all we need.
"""

from fractions import Fraction


class RationalMatrix:
    """Dense row-major matrix of Fractions with optional basis labels."""

    def __init__(self, rows, row_labels=None, col_labels=None):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
        if row_labels is not None and len(row_labels) != self.nrows:
            raise ValueError("row label count mismatch")
        if col_labels is not None and len(col_labels) != self.ncols:
            raise ValueError("column label count mismatch")
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def _copy_rows(m):
    if isinstance(m, RationalMatrix):
        return [row[:] for row in m.rows]
    return [[Fraction(x) for x in row] for row in m]


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivots, rank) where pivots is the strictly increasing list
    of pivot column indices and pivot entries are 1.
    """
    rows = _copy_rows(m)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = Fraction(1) / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    labels = m.col_labels if isinstance(m, RationalMatrix) else None
    return RationalMatrix(rows, col_labels=labels) if rows else RationalMatrix(rows), pivots, len(pivots)


def solve(m, b):
    """One exact solution of M x = b, or None.

    Free variables are set to zero, so the returned representative is
    deterministic.
    """
    rows = _copy_rows(m)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    b = [Fraction(x) for x in b]
    if len(b) != nrows:
        raise ValueError("dimension mismatch in solve")
    aug = [rows[i] + [b[i]] for i in range(nrows)]
    red, pivots, rank = rref(aug)
    if ncols in pivots:
        return None  # inconsistent: pivot in the augmented column
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red.rows[r][ncols]
    return x


def kernel_basis(m):
    """Standard free-variable basis of the kernel of M."""
    rows = _copy_rows(m)
    ncols = len(rows[0]) if rows else 0
    red, pivots, rank = rref(rows) if rows else (RationalMatrix([]), [], 0)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red.rows[r][f]
        basis.append(v)
    return basis


def rank(m):
    rows = _copy_rows(m)
    if not rows:
        return 0
    _, _, rk = rref(rows)
    return rk


def row_space_basis(vectors, ncols=None):
    """Canonical (RREF) basis of the span of the given vectors."""
    vecs = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    red, pivots, rk = rref(vecs)
    return [red.rows[i] for i in range(rk)]


def reduce_against(vector, rref_rows, pivots):
    """Subtract the projection of `vector` onto an RREF row space."""
    v = list(vector)
    for row, c in zip(rref_rows, pivots):
        if v[c] != 0:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_span(vector, rref_rows, pivots):
    return all(x == 0 for x in reduce_against(vector, rref_rows, pivots))


def spans_equal(vectors_a, vectors_b):
    """Do two sets of vectors span the same subspace?"""
    a = row_space_basis(vectors_a)
    b = row_space_basis(vectors_b)
    return a == b
