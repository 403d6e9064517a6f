"""Ambient spaces that concrete modules live in.

TensorWedgeAmbient is a tensor product of exterior powers of C^{2n}
(one wedge factor per column of a Young diagram); it sits inside the
plain tensor power of the same total degree, with basis vectors the
antisymmetrized column tensors.  Vectors are dicts mapping a key --
a tuple of strictly increasing index tuples -- to a GaussRat.

MatrixAmbient is the space of 2n x 2n matrices with the conjugation
action, used for the symmetric-traceless model.

All matrices here are in u-coordinates, where the embedded torus is
diagonal, so every ambient key has a well-defined torus exponent
vector ("content") and spans built by root-vector closures stay
weight-homogeneous.
"""

from __future__ import annotations

from bisect import bisect_left

from .gaussian import GR_ONE, GR_ZERO
from .linalg import SparseMat


def _columns(mat):
    cols = {}
    for (i, j), val in sorted(mat.entries.items()):
        cols.setdefault(j, []).append((i, val))
    return cols


def _rows(mat):
    rows = {}
    for (i, j), val in sorted(mat.entries.items()):
        rows.setdefault(i, []).append((j, val))
    return rows


def wedge_insert(subset, b):
    """Insert b into a strictly increasing tuple; (sign, new) or None."""
    pos = bisect_left(subset, b)
    if pos < len(subset) and subset[pos] == b:
        return None
    sign = -1 if pos % 2 else 1
    return sign, subset[:pos] + (b,) + subset[pos:]


def wedge_replace(subset, t, b):
    """Replace element at slot t by b, resorting; (sign, new) or None."""
    a = subset[t]
    if b == a:
        return 1, subset
    rest = subset[:t] + subset[t + 1 :]
    pos = bisect_left(rest, b)
    if pos < len(rest) and rest[pos] == b:
        return None
    sign = -1 if (t + pos) % 2 else 1
    return sign, rest[:pos] + (b,) + rest[pos:]


class TensorWedgeAmbient:
    """Tensor product of wedge powers of C^{2n}, u-coordinates."""

    def __init__(self, two_n, degrees):
        self.two_n = two_n
        self.degrees = tuple(degrees)
        if any(d < 0 or d > two_n for d in self.degrees):
            raise ValueError("wedge degree out of range")

    def hw_key(self):
        return tuple(tuple(range(d)) for d in self.degrees)

    def key_content(self, key):
        content = [0] * self.two_n
        for subset in key:
            for m in subset:
                content[m] += 1
        return tuple(content)

    def apply_lie(self, vec, mat):
        cols = _columns(mat)
        out = {}
        for key, coeff in vec.items():
            for f, subset in enumerate(key):
                for t, a in enumerate(subset):
                    for b, val in cols.get(a, ()):
                        rep = wedge_replace(subset, t, b)
                        if rep is None:
                            continue
                        sign, new_subset = rep
                        new_key = key[:f] + (new_subset,) + key[f + 1 :]
                        c = coeff * val
                        if sign < 0:
                            c = -c
                        acc = out.get(new_key)
                        new = c if acc is None else acc + c
                        if new:
                            out[new_key] = new
                        elif acc is not None:
                            del out[new_key]
        return out

    def apply_group(self, vec, mat, mat_inv=None):
        cols = _columns(mat)
        out = {}
        for key, coeff in vec.items():
            partials = {(): coeff}
            for subset in key:
                factor = self._wedge_columns(subset, cols)
                if not factor:
                    partials = {}
                    break
                new_partials = {}
                for pkey, pval in partials.items():
                    for fkey, fval in factor.items():
                        nk = pkey + (fkey,)
                        acc = new_partials.get(nk)
                        term = pval * fval
                        new_partials[nk] = term if acc is None else acc + term
                partials = new_partials
            for nk, val in partials.items():
                if not val:
                    continue
                acc = out.get(nk)
                new = val if acc is None else acc + val
                if new:
                    out[nk] = new
                elif acc is not None:
                    del out[nk]
        return out

    @staticmethod
    def _wedge_columns(subset, cols):
        """Wedge product of the image columns g(u_{s_0}) ^ ... ^ g(u_{s_p})."""
        partial = {(): GR_ONE}
        for a in subset:
            col = cols.get(a)
            if not col:
                return {}
            new = {}
            for pkey, pval in partial.items():
                for b, val in col:
                    ins = wedge_insert(pkey, b)
                    if ins is None:
                        continue
                    sign, nk = ins
                    c = pval * val
                    if sign < 0:
                        c = -c
                    acc = new.get(nk)
                    tot = c if acc is None else acc + c
                    if tot:
                        new[nk] = tot
                    elif acc is not None:
                        del new[nk]
            partial = new
            if not partial:
                return {}
        return partial

    def describe(self):
        return {"type": "tensor_wedge", "two_n": self.two_n, "degrees": list(self.degrees)}


class MatrixAmbient:
    """2n x 2n matrices; Lie action ad X, group action by conjugation."""

    def __init__(self, two_n):
        self.two_n = two_n

    def key_content(self, key):
        content = [0] * self.two_n
        a, b = key
        content[a] += 1
        content[b] -= 1
        return tuple(content)

    def apply_lie(self, vec, mat):
        cols = _columns(mat)
        rows = _rows(mat)
        out = {}

        def add(key, val):
            acc = out.get(key)
            new = val if acc is None else acc + val
            if new:
                out[key] = new
            elif acc is not None:
                del out[key]

        for (a, b), coeff in vec.items():
            for r, val in cols.get(a, ()):
                add((r, b), val * coeff)
            for c, val in rows.get(b, ()):
                add((a, c), -(coeff * val))
        return out

    def apply_group(self, vec, mat, mat_inv=None):
        if mat_inv is None:
            mat_inv = mat.inverse()
        cols = _columns(mat)
        rows = _rows(mat_inv)
        out = {}
        for (a, b), coeff in vec.items():
            for r, gv in cols.get(a, ()):
                left = coeff * gv
                for c, hv in rows.get(b, ()):
                    key = (r, c)
                    val = left * hv
                    acc = out.get(key)
                    new = val if acc is None else acc + val
                    if new:
                        out[key] = new
                    elif acc is not None:
                        del out[key]
        return out

    def describe(self):
        return {"type": "matrix", "two_n": self.two_n}


def vec_from_mat(mat):
    return dict(mat.entries)


def mat_from_vec(vec, two_n):
    return SparseMat(two_n, two_n, vec)
