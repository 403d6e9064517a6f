"""Exact sparse linear algebra over the Gaussian rationals.

Matrices are dicts {(row, col): GaussRat} with no stored zeros.  Row
reduction uses the first nonzero entry in column order as pivot (the
arithmetic is exact, so no numerical pivoting is wanted) which makes
every result deterministic.  Elimination works on sparse row dicts and
falls back to dense row lists once fill-in passes half the matrix.
"""

from __future__ import annotations

import heapq

from .gaussian import GR_ONE, GR_ZERO, GaussRat, grat

DENSE_FILL_RATIO = 0.5


class SparseMat:
    """Immutable-by-convention sparse matrix over Q(i)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for key, val in entries.items():
                if val:
                    self.entries[key] = val

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): GR_ONE for i in range(n)})

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        ent = {}
        for i, row in enumerate(rows_list):
            for j, val in enumerate(row):
                val = val if isinstance(val, GaussRat) else grat(val)
                if val:
                    ent[(i, j)] = val
        return cls(rows, cols, ent)

    def items(self):
        """Deterministic row-major iteration over nonzero entries."""
        return sorted(self.entries.items())

    def get(self, i, j):
        return self.entries.get((i, j), GR_ZERO)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.items())))

    def __add__(self, other):
        ent = dict(self.entries)
        for key, val in other.entries.items():
            acc = ent.get(key)
            new = val if acc is None else acc + val
            if new:
                ent[key] = new
            elif acc is not None:
                del ent[key]
        return SparseMat(self.rows, self.cols, ent)

    def __sub__(self, other):
        return self + (other * grat(-1))

    def __mul__(self, other):
        if isinstance(other, SparseMat):
            return self.matmul(other)
        other = other if isinstance(other, GaussRat) else grat(other)
        if not other:
            return SparseMat(self.rows, self.cols)
        return SparseMat(
            self.rows, self.cols, {k: v * other for k, v in self.entries.items()}
        )

    __rmul__ = __mul__

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matmul")
        by_row = {}
        for (i, k), val in other.entries.items():
            by_row.setdefault(i, []).append((k, val))
        ent = {}
        for (i, j), val in self.entries.items():
            for k, oval in by_row.get(j, ()):
                key = (i, k)
                acc = ent.get(key)
                ent[key] = val * oval if acc is None else acc + val * oval
        return SparseMat(self.rows, other.cols, {k: v for k, v in ent.items() if v})

    def transpose(self):
        return SparseMat(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def apply(self, vec):
        """Matrix times sparse vector (dict col -> scalar)."""
        out = {}
        for (i, j), val in self.entries.items():
            x = vec.get(j)
            if x is None:
                continue
            acc = out.get(i)
            out[i] = val * x if acc is None else acc + val * x
        return {i: v for i, v in out.items() if v}

    def trace(self):
        t = GR_ZERO
        for (i, j), val in self.entries.items():
            if i == j:
                t = t + val
        return t

    def det(self):
        """Determinant by fraction-full Gaussian elimination (square only)."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        rows = [dict() for _ in range(n)]
        for (i, j), val in self.entries.items():
            rows[i][j] = val
        det = GR_ONE
        for col in range(n):
            piv = None
            for r in range(col, n):
                if rows[r].get(col):
                    piv = r
                    break
            if piv is None:
                return GR_ZERO
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            pval = rows[col][col]
            det = det * pval
            inv = GR_ONE / pval
            for r in range(col + 1, n):
                f = rows[r].get(col)
                if not f:
                    continue
                f = f * inv
                for c, v in rows[col].items():
                    if c < col:
                        continue
                    acc = rows[r].get(c, GR_ZERO) - f * v
                    if acc:
                        rows[r][c] = acc
                    elif c in rows[r]:
                        del rows[r][c]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = {}
        for (i, j), val in self.entries.items():
            aug[(i, j)] = val
        for i in range(n):
            aug[(i, n + i)] = GR_ONE
        rank, _, red = rref(SparseMat(n, 2 * n, aug))
        if rank < n:
            raise ValueError("matrix is singular")
        ent = {}
        for (i, j), val in red.entries.items():
            if j >= n:
                ent[(i, j - n)] = val
        return SparseMat(n, n, ent)

    def to_triplets(self):
        """[(i, j, re, im)] rows in deterministic order, for serialization."""
        return [(i, j, *v.as_pair()) for (i, j), v in self.items()]

    def __repr__(self):
        return "SparseMat(%dx%d, %d nonzero)" % (self.rows, self.cols, len(self.entries))


def stack_rows(mats):
    """Vertical concatenation."""
    cols = mats[0].cols if mats else 0
    ent = {}
    off = 0
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in stack")
        for (i, j), v in m.entries.items():
            ent[(off + i, j)] = v
        off += m.rows
    return SparseMat(off, cols, ent)


# ---------------------------------------------------------------------------
# Row reduction


def _rows_of(m):
    rows = [dict() for _ in range(m.rows)]
    for (i, j), val in m.entries.items():
        rows[i][j] = val
    return rows


def rref(m):
    """Reduced row echelon form.

    Returns (rank, pivot column list, reduced SparseMat).  Pivot rule:
    scan columns left to right, take the first row (in index order)
    with a nonzero entry.
    """
    rows = _rows_of(m)
    dense = None
    nnz = len(m.entries)
    budget = m.rows * m.cols
    if budget and nnz / budget > DENSE_FILL_RATIO:
        dense = [[row.get(j, GR_ZERO) for j in range(m.cols)] for row in rows]
        rows = None
    pivots = []
    piv_r = 0
    for col in range(m.cols):
        if rows is not None:
            nnz = sum(len(r) for r in rows)
            if budget and nnz / budget > DENSE_FILL_RATIO:
                dense = [[row.get(j, GR_ZERO) for j in range(m.cols)] for row in rows]
                rows = None
        if rows is not None:
            piv_r = _step_sparse(rows, col, piv_r, pivots)
        else:
            piv_r = _step_dense(dense, col, piv_r, pivots, m.cols)
        if piv_r == m.rows:
            break
    ent = {}
    if rows is not None:
        for i, row in enumerate(rows):
            for j, val in row.items():
                ent[(i, j)] = val
    else:
        for i, row in enumerate(dense):
            for j, val in enumerate(row):
                if val:
                    ent[(i, j)] = val
    return len(pivots), pivots, SparseMat(m.rows, m.cols, ent)


def _step_sparse(rows, col, piv_r, pivots):
    sel = None
    for r in range(piv_r, len(rows)):
        if rows[r].get(col):
            sel = r
            break
    if sel is None:
        return piv_r
    rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
    prow = rows[piv_r]
    inv = GR_ONE / prow[col]
    if inv != GR_ONE:
        for j in list(prow):
            prow[j] = prow[j] * inv
    for r in range(len(rows)):
        if r == piv_r:
            continue
        f = rows[r].get(col)
        if not f:
            continue
        row = rows[r]
        for j, v in prow.items():
            acc = row.get(j, GR_ZERO) - f * v
            if acc:
                row[j] = acc
            elif j in row:
                del row[j]
    pivots.append(col)
    return piv_r + 1


def _step_dense(dense, col, piv_r, pivots, ncols):
    sel = None
    for r in range(piv_r, len(dense)):
        if dense[r][col]:
            sel = r
            break
    if sel is None:
        return piv_r
    dense[piv_r], dense[sel] = dense[sel], dense[piv_r]
    prow = dense[piv_r]
    inv = GR_ONE / prow[col]
    if inv != GR_ONE:
        for j in range(col, ncols):
            if prow[j]:
                prow[j] = prow[j] * inv
    for r in range(len(dense)):
        if r == piv_r:
            continue
        f = dense[r][col]
        if not f:
            continue
        row = dense[r]
        for j in range(col, ncols):
            if prow[j]:
                row[j] = row[j] - f * prow[j]
    pivots.append(col)
    return piv_r + 1


def null_space(m):
    """Canonical kernel basis read off the reduced row echelon form.

    Each free column gives one basis vector with that coordinate set
    to 1; vectors are dicts {col: GaussRat} in ascending free-column
    order.
    """
    rank, pivots, red = rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        vec = {j: GR_ONE}
        for r, pc in enumerate(pivots):
            val = red.get(r, j)
            if val:
                vec[pc] = -val
        basis.append(vec)
    return basis


def intersect(a, b, length=None):
    """Basis of span(a) & span(b); vectors are dicts {index: GaussRat}."""
    if length is None:
        keys = [k for vec in a for k in vec] + [k for vec in b for k in vec]
        length = max(keys) + 1 if keys else 0
    cols = len(a) + len(b)
    ent = {}
    for k, vec in enumerate(a):
        for i, val in vec.items():
            ent[(i, k)] = val
    for k, vec in enumerate(b):
        for i, val in vec.items():
            ent[(i, len(a) + k)] = val
    combos = null_space(SparseMat(length, cols, ent))
    out = []
    for z in combos:
        vec = {}
        for k in range(len(a)):
            c = z.get(k)
            if not c:
                continue
            for i, val in a[k].items():
                acc = vec.get(i, GR_ZERO) + c * val
                if acc:
                    vec[i] = acc
                elif i in vec:
                    del vec[i]
        if vec:
            out.append(vec)
    span = EchelonSpan()
    for vec in out:
        span.insert(vec)
    return span.basis()


# ---------------------------------------------------------------------------
# Incremental echelon spans over arbitrary sortable keys


def vec_axpy(target, coeff, vec):
    """target += coeff * vec, in place, dropping zeros."""
    for key, val in vec.items():
        acc = target.get(key)
        new = coeff * val if acc is None else acc + coeff * val
        if new:
            target[key] = new
        elif acc is not None:
            del target[key]
    return target


def vec_scale(vec, coeff):
    if coeff == GR_ONE:
        return dict(vec)
    return {k: v * coeff for k, v in vec.items()}


class EchelonSpan:
    """A subspace kept in reduced echelon form, keyed by sortable indices.

    Rows are vectors (dicts) with pairwise distinct pivots (minimal key
    of the row), each pivot normalized to 1 and eliminated from every
    other row, so the row set is the canonical reduced basis of the
    span and reduction coefficients are coordinates.
    """

    def __init__(self):
        self.rows = {}
        self._order = None

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return (residual, coeffs) with vec = residual + sum c_p row_p.

        Rows have their pivot as minimal key, so eliminating the
        smallest pivot key present only ever introduces larger keys;
        a single ascending pass over a heap of candidate keys settles
        every coefficient.
        """
        residual = dict(vec)
        coeffs = {}
        heap = [k for k in residual if k in self.rows]
        heapq.heapify(heap)
        while heap:
            piv = heapq.heappop(heap)
            c = residual.get(piv)
            if not c:
                continue
            coeffs[piv] = c
            for key, val in self.rows[piv].items():
                acc = residual.get(key)
                new = (-c) * val if acc is None else acc - c * val
                if new:
                    residual[key] = new
                    if acc is None and key in self.rows:
                        heapq.heappush(heap, key)
                elif acc is not None:
                    del residual[key]
        return residual, coeffs

    def insert(self, vec):
        """Add vec to the span. Returns the new pivot key, or None."""
        residual, _ = self.reduce(vec)
        if not residual:
            return None
        piv = min(residual)
        inv = GR_ONE / residual[piv]
        row = vec_scale(residual, inv)
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                vec_axpy(other, -c, row)
        self.rows[piv] = row
        self._order = None
        return piv

    def contains(self, vec):
        residual, _ = self.reduce(vec)
        return not residual

    def pivot_order(self):
        if self._order is None:
            self._order = sorted(self.rows)
        return self._order

    def basis(self):
        """Canonical basis, ordered by pivot key."""
        return [self.rows[p] for p in self.pivot_order()]

    def coords(self, vec):
        """Coordinates of vec in basis() order; raises if not in span."""
        residual, coeffs = self.reduce(vec)
        if residual:
            raise ValueError("vector not in span")
        order = self.pivot_order()
        pos = {p: k for k, p in enumerate(order)}
        return {pos[p]: c for p, c in coeffs.items() if c}


def canonical_vectors(vectors):
    """RREF-canonicalize a list of dict-vectors (deterministic basis)."""
    span = EchelonSpan()
    for vec in vectors:
        span.insert(vec)
    return span.basis()
