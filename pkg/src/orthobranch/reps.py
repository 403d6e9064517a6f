"""Explicit matrix models of the representations in play.

Irreducible GL(2n) modules are built as the cyclic span of the
standard column-determinant highest weight vector (in the paired
u-coordinates, so "highest" is with respect to the upper triangular
Borel seen by the embedded torus) under the simple lowering operators,
inside a tensor product of column wedge powers of C^{2n}.  Irreducible
O(2n) modules with label (l_1 >= ... >= l_n >= 0) are the cyclic span
of the same vector for the padded weight (l, 0, ..., 0) under
so(2n) + a reflection; the label with last entry -1/2 is the
determinant twist of the last-entry-0 module, an identification the
descent check verifies rather than assumes.

A module's basis is the canonical reduced echelon basis of its span,
ordered by pivot key, so identical inputs give bit-identical modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ambient import MatrixAmbient, TensorWedgeAmbient, mat_from_vec
from .gaussian import GR_ONE, GR_ZERO, GaussRat, grat, rat
from .labels import OLabel, o_dim, weyl_dim_gl
from .lie import (
    GroupSpec,
    delta_alternate,
    delta_bookkeeping,
    delta_default,
    gl_simple_lowering,
    gl_simple_raising,
    pair,
    s_spanning_mats,
    so_basis,
    so_simple_raising,
    subgroup,
)
from .linalg import EchelonSpan, SparseMat, null_space, stack_rows


@dataclass(frozen=True)
class Op:
    """A single group or Lie algebra element acting through an ambient."""

    kind: str  # 'lie' | 'group'
    label: str
    mat: SparseMat


def ops_of(spec: GroupSpec):
    out = [Op("lie", "%s:%s" % (spec.name, g.label), g.mat) for g in spec.lie]
    out += [Op("group", "%s:%s" % (spec.name, g.label), g.mat) for g in spec.reps]
    return out


def _gr_pow(x, k):
    if k == 0:
        return GR_ONE
    if k < 0:
        x = GR_ONE / x
        k = -k
    out = GR_ONE
    for _ in range(k):
        out = out * x
    return out


class RepModule:
    """A concrete finite-dimensional module with cached actions/weights.

    kind 'span': subspace of an ambient, basis = canonical echelon rows.
    kind 'tensor' / 'wedge' / 'dual': functorial constructions whose
    basis is the full formal one; actions are derived from the factors.
    """

    def __init__(
        self,
        kind,
        two_n,
        ambient=None,
        span=None,
        factors=None,
        degree=None,
        det_twist=0,
        odet=0,
        olabel=None,
        glabel=None,
    ):
        self.kind = kind
        self.two_n = two_n
        self.ambient = ambient
        self.span = span
        self.factors = factors
        self.degree = degree
        self.det_twist = det_twist
        self.odet = odet
        self.olabel = olabel
        self.glabel = glabel
        self.hw_vec = None
        self.o_seed = None  # (coords dict, xi) for seeded O-irreducibles
        if kind == "span":
            self.basis = span.basis()
            self.dim = len(self.basis)
            self.keys = None
        elif kind == "tensor":
            self.dim = factors[0].dim * factors[1].dim
            self.keys = None
        elif kind == "wedge":
            self.keys = list(combinations(range(factors[0].dim), degree))
            self.key_index = {k: i for i, k in enumerate(self.keys)}
            self.dim = len(self.keys)
        elif kind == "dual":
            self.dim = factors[0].dim
        else:
            raise ValueError(kind)
        self._acts = {}
        self._contents = {}
        self._classes = {}

    # -- actions ----------------------------------------------------------

    def act(self, op):
        key = (op.kind, op.label)
        mat = self._acts.get(key)
        if mat is None:
            mat = self._compute_act(op)
            self._acts[key] = mat
        return mat

    def _compute_act(self, op):
        if self.kind == "span":
            return self._act_span(op)
        if self.kind == "tensor":
            m1, m2 = self.factors
            return _tensor_act(m1.act(op), m2.act(op), op.kind)
        if self.kind == "wedge":
            inner = self.factors[0].act(op)
            if op.kind == "lie":
                return _wedge_lie(inner, self.keys, self.key_index)
            return _wedge_group(inner, self.keys, self.key_index)
        if self.kind == "dual":
            inner = self.factors[0].act(op)
            if op.kind == "lie":
                return inner.transpose() * grat(-1)
            return inner.inverse().transpose()
        raise AssertionError(self.kind)

    def _act_span(self, op):
        ent = {}
        ginv = op.mat.inverse() if op.kind == "group" else None
        for j, bv in enumerate(self.basis):
            if op.kind == "lie":
                img = self.ambient.apply_lie(bv, op.mat)
            else:
                img = self.ambient.apply_group(bv, op.mat, ginv)
            for i, c in self.span.coords(img).items():
                ent[(i, j)] = c
        mat = SparseMat(self.dim, self.dim, ent)
        if op.kind == "lie":
            if self.det_twist:
                t = op.mat.trace() * grat(self.det_twist)
                if t:
                    mat = mat + SparseMat.identity(self.dim) * t
        else:
            scal = GR_ONE
            if self.det_twist:
                scal = scal * _gr_pow(op.mat.det(), self.det_twist)
            if self.odet:
                d = op.mat.det()
                if d != GR_ONE and d != grat(-1):
                    raise ValueError("determinant twist needs det = +-1, got %s" % d)
                if d != GR_ONE:
                    scal = -scal
            if scal != GR_ONE:
                mat = mat * scal
        return mat

    def coords_of(self, ambient_vec):
        if self.kind != "span":
            raise ValueError("coords_of only applies to span modules")
        return self.span.coords(ambient_vec)

    def basis_mats(self):
        if not isinstance(self.ambient, MatrixAmbient):
            raise ValueError("basis_mats needs a matrix ambient")
        return [mat_from_vec(v, self.two_n) for v in self.basis]

    # -- torus weights -----------------------------------------------------

    def _content(self, j):
        content = self._contents.get(j)
        if content is None:
            vec = self.basis[j]
            contents = {self.ambient.key_content(k) for k in vec}
            if len(contents) != 1:
                raise AssertionError("basis vector %d is not weight-homogeneous" % j)
            content = contents.pop()
            self._contents[j] = content
        return content

    def basis_weight(self, j, torus_kind):
        if self.kind == "span":
            content = self._content(j)
            n = self.two_n // 2
            if torus_kind == "gamma":
                return tuple(c + self.det_twist for c in content)
            if torus_kind == "to":
                return tuple(
                    content[k] - content[pair(k, self.two_n)] for k in range(n)
                )
            if torus_kind == "hprime":
                return tuple(
                    content[k] + content[pair(k, self.two_n)] + 2 * self.det_twist
                    for k in range(n)
                )
            raise ValueError("unsupported torus %r for graded weights" % torus_kind)
        if self.kind == "tensor":
            m1, m2 = self.factors
            i1, i2 = divmod(j, m2.dim)
            a = m1.basis_weight(i1, torus_kind)
            b = m2.basis_weight(i2, torus_kind)
            return tuple(x + y for x, y in zip(a, b))
        if self.kind == "wedge":
            inner = self.factors[0]
            acc = None
            for t in self.keys[j]:
                w = inner.basis_weight(t, torus_kind)
                acc = w if acc is None else tuple(x + y for x, y in zip(acc, w))
            if acc is None:
                rank = self.two_n if torus_kind == "gamma" else self.two_n // 2
                acc = (0,) * rank
            return acc
        if self.kind == "dual":
            return tuple(-x for x in self.factors[0].basis_weight(j, torus_kind))
        raise AssertionError(self.kind)

    def weight_classes(self, torus_kind):
        classes = self._classes.get(torus_kind)
        if classes is None:
            classes = {}
            for j in range(self.dim):
                classes.setdefault(self.basis_weight(j, torus_kind), []).append(j)
            self._classes[torus_kind] = classes
        return classes

    def describe(self):
        out = {"kind": self.kind, "dim": self.dim, "two_n": self.two_n}
        if self.det_twist:
            out["det_twist"] = self.det_twist
        if self.odet:
            out["odet"] = self.odet
        if self.olabel is not None:
            out["olabel"] = str(self.olabel)
        if self.glabel is not None:
            out["glabel"] = list(self.glabel)
        return out

    def __repr__(self):
        tag = self.olabel or self.glabel or self.kind
        return "RepModule(%s, dim=%d)" % (tag, self.dim)


def _tensor_act(a1, a2, kind):
    d1, d2 = a1.rows, a2.rows
    ent = {}
    if kind == "lie":
        for (i, j), v in a1.entries.items():
            for k in range(d2):
                key = (i * d2 + k, j * d2 + k)
                acc = ent.get(key)
                ent[key] = v if acc is None else acc + v
        for (i, j), v in a2.entries.items():
            for k in range(d1):
                key = (k * d2 + i, k * d2 + j)
                acc = ent.get(key)
                ent[key] = v if acc is None else acc + v
        return SparseMat(d1 * d2, d1 * d2, ent)
    for (i1, j1), v1 in a1.entries.items():
        for (i2, j2), v2 in a2.entries.items():
            ent[(i1 * d2 + i2, j1 * d2 + j2)] = v1 * v2
    return SparseMat(d1 * d2, d1 * d2, ent)


def _wedge_lie(inner, keys, key_index):
    from .ambient import wedge_replace

    cols = {}
    for (i, j), v in inner.entries.items():
        cols.setdefault(j, []).append((i, v))
    ent = {}
    for j, key in enumerate(keys):
        for t, a in enumerate(key):
            for b, val in cols.get(a, ()):
                rep = wedge_replace(key, t, b)
                if rep is None:
                    continue
                sign, nk = rep
                i = key_index[nk]
                c = -val if sign < 0 else val
                acc = ent.get((i, j))
                tot = c if acc is None else acc + c
                if tot:
                    ent[(i, j)] = tot
                elif acc is not None:
                    del ent[(i, j)]
    return SparseMat(len(keys), len(keys), ent)


def _wedge_group(inner, keys, key_index):
    from .ambient import TensorWedgeAmbient

    cols = {}
    for (i, j), v in inner.entries.items():
        cols.setdefault(j, []).append((i, v))
    for lst in cols.values():
        lst.sort()
    ent = {}
    for j, key in enumerate(keys):
        image = TensorWedgeAmbient._wedge_columns(key, cols)
        for nk, val in image.items():
            ent[(key_index[nk], j)] = val
    return SparseMat(len(keys), len(keys), ent)


# ---------------------------------------------------------------------------
# Span closure


def close_span(ambient, seeds, ops, bound=None, what="module"):
    """Close the span of seeds under ops; raises if bound is exceeded."""
    span = EchelonSpan()
    queue = []
    inverses = {}
    for op in ops:
        if op.kind == "group":
            inverses[op.label] = op.mat.inverse()
    for s in seeds:
        if span.insert(s) is not None:
            queue.append(s)
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for op in ops:
            if op.kind == "lie":
                w = ambient.apply_lie(v, op.mat)
            else:
                w = ambient.apply_group(v, op.mat, inverses[op.label])
            if w and span.insert(w) is not None:
                queue.append(w)
                if bound is not None and span.rank > bound:
                    raise RuntimeError(
                        "%s span exceeded the expected dimension %d" % (what, bound)
                    )
    return span


# ---------------------------------------------------------------------------
# Builders


def conjugate_partition(part):
    """Column heights of a partition (weakly decreasing, nonnegative)."""
    if not part or part[0] == 0:
        return ()
    return tuple(sum(1 for p in part if p > c) for c in range(part[0]))


def _check_dominant_int(mu):
    for e in mu:
        if not isinstance(e, int):
            raise ValueError("weight entries must be integers: %r" % (mu,))
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError("weight %r is not dominant" % (mu,))


_cache = {}


def _cached(key, builder):
    mod = _cache.get(key)
    if mod is None:
        mod = builder()
        _cache[key] = mod
    return mod


def build_gl_irrep(mu):
    """Irreducible GL(2n) module with highest weight mu (dominant ints).

    Writes mu = mu+ + k(1,...,1), builds the partition part as a
    lowering-operator span and records the determinant twist k.  The
    dimension is checked against the Weyl formula.
    """
    mu = tuple(mu)
    _check_dominant_int(mu)
    return _cached(("gl", mu), lambda: _build_gl(mu))


def _build_gl(mu):
    two_n = len(mu)
    k = mu[-1]
    mup = tuple(m - k for m in mu)
    degrees = conjugate_partition(mup)
    amb = TensorWedgeAmbient(two_n, degrees)
    seed = {amb.hw_key(): GR_ONE}
    ops = [
        Op("lie", "gl_lower%d" % i, m) for i, m in enumerate(gl_simple_lowering(two_n))
    ]
    expected = weyl_dim_gl(mup)
    span = close_span(amb, [seed], ops, bound=expected, what="gl(%s)" % (mu,))
    if span.rank != expected:
        raise AssertionError(
            "gl module %s has dim %d, Weyl formula says %d" % (mu, span.rank, expected)
        )
    mod = RepModule("span", two_n, ambient=amb, span=span, det_twist=k, glabel=mu)
    mod.hw_vec = seed
    return mod


def build_o_irrep(label, n, alternate_delta=False, check_descent=False):
    """Irreducible O(2n) module for a label in the admissible set.

    For last entry >= 0 this is the cyclic span of the highest weight
    vector of the padded GL weight under so(2n) and a reflection; the
    -1/2 labels are determinant twists of the last-entry-0 ones.
    """
    label = label if isinstance(label, OLabel) else OLabel(tuple(label))
    if label.n != n:
        raise ValueError("label %s has length %d, expected n=%d" % (label, label.n, n))
    key = ("o", label.entries, n, alternate_delta)
    mod = _cached(key, lambda: _build_o(label, n, alternate_delta))
    if check_descent:
        verify_descent(mod)
    return mod


def _build_o(label, n, alternate_delta):
    two_n = 2 * n
    if label.is_det_type():
        base = build_o_irrep(OLabel(label.entries[:-1] + (0,)), n, alternate_delta)
        mod = RepModule(
            "span",
            two_n,
            ambient=base.ambient,
            span=base.span,
            det_twist=base.det_twist,
            odet=1,
            olabel=label,
        )
        mod.hw_vec = base.hw_vec
        mod.o_seed = (base.o_seed[0], -base.o_seed[1])
        return mod
    nu = label.so_weight() + (0,) * n
    degrees = conjugate_partition(nu)
    amb = TensorWedgeAmbient(two_n, degrees)
    seed = {amb.hw_key(): GR_ONE}
    delta = delta_alternate(two_n) if alternate_delta else delta_default(two_n)
    ops = [Op("lie", "so:%s" % lbl, m) for lbl, m in so_basis(n)]
    ops.append(Op("group", "delta", delta))
    expected = o_dim(label)
    span = close_span(amb, [seed], ops, bound=expected, what="o(%s)" % label)
    if span.rank != expected:
        raise AssertionError(
            "o module %s has dim %d, expected %d" % (label, span.rank, expected)
        )
    mod = RepModule("span", two_n, ambient=amb, span=span, olabel=label)
    mod.hw_vec = seed
    coords = mod.coords_of(seed)
    xi = None
    if label.last == 0:
        xi = _delta_eigenvalue(mod, coords)
    mod.o_seed = (coords, xi)
    return mod


def _delta_eigenvalue(mod, coords):
    """Eigenvalue of the bookkeeping reflection on a weight line."""
    dmat = mod.act(Op("group", "delta_book", delta_bookkeeping(mod.two_n)))
    img = dmat.apply(coords)
    keys = set(img) | set(coords)
    ratio = None
    for kk in sorted(keys):
        a = coords.get(kk, GR_ZERO)
        b = img.get(kk, GR_ZERO)
        if not a:
            if b:
                raise AssertionError("vector is not a reflection eigenvector")
            continue
        r = b / a
        if ratio is None:
            ratio = r
        elif ratio != r:
            raise AssertionError("vector is not a reflection eigenvector")
    if ratio != GR_ONE and ratio != grat(-1):
        raise AssertionError("reflection eigenvalue %s is not +-1" % ratio)
    return 1 if ratio == GR_ONE else -1


def verify_descent(mod):
    """Check the flag-descent data that pins the label of an O-module.

    For last entry l_n >= 1 the highest vector space has exactly the
    two weight lines (l', +-l_n); for l_n in {0, -1/2} it is one line
    whose bookkeeping-reflection eigenvalue is +1 for 0 and -1 for
    -1/2.
    """
    label = mod.olabel
    lam = label.so_weight()
    hw = highest_vectors(mod, "bo")
    table = {w: vecs for w, vecs in hw}
    if lam[-1] > 0:
        mirror = lam[:-1] + (-lam[-1],)
        if set(table) != {lam, mirror} or any(len(v) != 1 for v in table.values()):
            raise AssertionError("descent check failed for %s: hw table %s" % (label, sorted(table)))
    else:
        if set(table) != {lam} or len(table[lam]) != 1:
            raise AssertionError("descent check failed for %s" % label)
        xi = _delta_eigenvalue(mod, table[lam][0])
        want = -1 if label.is_det_type() else 1
        if xi != want:
            raise AssertionError(
                "descent check: reflection eigenvalue %d != %d for %s" % (xi, want, label)
            )
    return True


def s2n_module(n):
    """The symmetric-traceless model of gl(2n)/k with conjugation action."""
    return _cached(("s", n), lambda: _build_s(n))


def _build_s(n):
    two_n = 2 * n
    amb = MatrixAmbient(two_n)
    span = EchelonSpan()
    for mat in s_spanning_mats(n):
        span.insert(dict(mat.entries))
    expected = n * (2 * n + 1) - 1
    if span.rank != expected:
        raise AssertionError("s model dim %d != %d" % (span.rank, expected))
    return RepModule("span", two_n, ambient=amb, span=span)


def tensor(m1, m2):
    if m1.two_n != m2.two_n:
        raise ValueError("tensor factors live over different groups")
    return RepModule("tensor", m1.two_n, factors=(m1, m2))


def exterior_power(m, p):
    if p < 0 or p > m.dim:
        raise ValueError("wedge degree %d out of range for dim %d" % (p, m.dim))
    return RepModule("wedge", m.two_n, factors=(m,), degree=p)


def dual(m):
    out = RepModule("dual", m.two_n, factors=(m,))
    out.olabel = m.olabel
    return out


def restrict(m, name, **kw):
    """Cache the action matrices of the named subgroup on m.

    Returns m itself: a module is immutable mathematics, restriction
    just selects which generators act.  Raises if m's span is not
    closed under the subgroup.
    """
    spec = name if isinstance(name, GroupSpec) else subgroup(name, m.two_n // 2, **kw)
    for op in ops_of(spec):
        m.act(op)
    return spec


# ---------------------------------------------------------------------------
# Highest weight spaces and isotypic decomposition


def _simple_raising_data(m, borel):
    n = m.two_n // 2
    if borel == "bo":
        mats = so_simple_raising(n)
        roots = []
        for i in range(n - 1):
            r = [0] * n
            r[i], r[i + 1] = 1, -1
            roots.append(tuple(r))
        if n >= 2:
            r = [0] * n
            r[n - 2], r[n - 1] = 1, 1
            roots.append(tuple(r))
        labels = ["so_raise%d" % i for i in range(len(mats))]
        return "to", list(zip(labels, roots, mats))
    if borel == "b2n":
        mats = gl_simple_raising(m.two_n)
        roots = []
        for i in range(m.two_n - 1):
            r = [0] * m.two_n
            r[i], r[i + 1] = 1, -1
            roots.append(tuple(r))
        labels = ["gl_raise%d" % i for i in range(len(mats))]
        return "gamma", list(zip(labels, roots, mats))
    raise ValueError("unknown Borel %r" % (borel,))


def highest_vectors(m, borel="bo", weight=None):
    """Joint kernel of the positive simple root vectors, graded by weight.

    Returns [(weight tuple, [coordinate vectors])] sorted by weight;
    with weight= given, only that block is computed.
    """
    torus, data = _simple_raising_data(m, borel)
    classes = m.weight_classes(torus)
    acts = [(root, m.act(Op("lie", lbl, mat))) for lbl, root, mat in data]
    out = []
    weights = [weight] if weight is not None else sorted(classes)
    for w in weights:
        idxs = classes.get(w)
        if not idxs:
            continue
        pos = {j: t for t, j in enumerate(idxs)}
        rows = {}
        nrows = 0
        for root, amat in acts:
            row_ids = {}
            for (i, j), v in amat.entries.items():
                if j in pos:
                    r = row_ids.get(i)
                    if r is None:
                        r = nrows
                        row_ids[i] = r
                        nrows += 1
                    rows[(r, pos[j])] = v
        kern = null_space(SparseMat(nrows, len(idxs), rows))
        vecs = [{idxs[t]: v for t, v in sorted(k.items())} for k in kern]
        if vecs:
            out.append((w, vecs))
    return out


def multiplicity_decomposition(m, bookkeeping_delta=None):
    """Complete isotypic decomposition of an O(2n) module.

    Multiplicities come from the highest-vector spaces: a dominant
    weight with positive last entry counts the label directly, a last
    entry 0 splits by the bookkeeping-reflection eigenvalue into the
    label with last entry 0 (+1) and -1/2 (-1).  The mirror spaces
    (negative last entry) must match their partners, and total
    dimension is checked.
    """
    n = m.two_n // 2
    hw = highest_vectors(m, "bo")
    if bookkeeping_delta is None:
        bookkeeping_delta = delta_bookkeeping(m.two_n)
    dmat_op = Op("group", "delta_book:%s" % _mat_tag(bookkeeping_delta), bookkeeping_delta)
    table = {w: vecs for w, vecs in hw}
    out = []
    seen_mirrors = {}
    for w in sorted(table):
        vecs = table[w]
        if any(x != int(x) for x in w):
            raise ValueError("non-integral T_O weight %s in O-module" % (w,))
        lam = tuple(int(x) for x in w)
        if any(a < b for a, b in zip(lam, lam[:-1][1:])) or (
            n > 1 and lam[-2] < abs(lam[-1])
        ) or any(a < b for a, b in zip(lam, lam[1:-1])):
            raise AssertionError("highest weight %s is not dominant" % (lam,))
        if lam[-1] < 0:
            seen_mirrors[lam[:-1] + (-lam[-1],)] = len(vecs)
            continue
        if lam[-1] > 0:
            out.append((OLabel(lam), len(vecs)))
            continue
        # split the last-entry-0 space by the reflection eigenvalue
        span = EchelonSpan()
        for v in vecs:
            span.insert(v)
        basis = span.basis()
        amat = m.act(dmat_op)
        ent = {}
        for t, v in enumerate(basis):
            for i, c in span.coords(amat.apply(v)).items():
                ent[(i, t)] = c
        dsub = SparseMat(len(basis), len(basis), ent)
        ident = SparseMat.identity(len(basis))
        plus = len(null_space(dsub - ident))
        minus = len(null_space(dsub + ident))
        if plus + minus != len(basis):
            raise AssertionError("reflection does not split the weight-%s space" % (lam,))
        if plus:
            out.append((OLabel(lam), plus))
        if minus:
            out.append((OLabel(lam[:-1] + (rat(-1, 2),)), minus))
    for lam, cnt in seen_mirrors.items():
        have = next((c for lbl, c in out if lbl.entries == tuple(rat(x) for x in lam)), 0)
        if have != cnt:
            raise AssertionError(
                "mirror space of %s has dim %d != %d" % (lam, cnt, have)
            )
    total = sum(cnt * o_dim(lbl) for lbl, cnt in out)
    if total != m.dim:
        raise AssertionError(
            "isotypic dimensions sum to %d != module dim %d" % (total, m.dim)
        )
    out.sort(key=lambda t: t[0].sort_key(), reverse=True)
    return out


def _mat_tag(mat):
    return "%x" % (hash(mat) & 0xFFFFFFFF)


def o_type_span(F):
    """The O(2n)-type generated by the highest weight vector of F.

    This is the canonical copy of the maximal type inside an
    irreducible GL(2n) module.  The label is inferred from the data
    (weight of the highest vector; reflection eigenvalue in the
    ambiguous case) and the span dimension is checked against it.
    """
    if F.hw_vec is None:
        raise ValueError("module has no recorded highest weight vector")
    two_n = F.two_n
    n = two_n // 2
    ops = [Op("lie", "so:%s" % lbl, m) for lbl, m in so_basis(n)]
    ops.append(Op("group", "delta", delta_default(two_n)))
    span = close_span(F.ambient, [F.hw_vec], ops, bound=F.dim, what="o-type")
    mod = RepModule(
        "span", two_n, ambient=F.ambient, span=span, det_twist=F.det_twist
    )
    mod.hw_vec = F.hw_vec
    coords = mod.coords_of(F.hw_vec)
    lam = mod.basis_weight(next(iter(coords)), "to") if False else None
    # T_O weight of the highest vector
    content = F.ambient.key_content(next(iter(F.hw_vec)))
    lam = tuple(content[k] - content[pair(k, two_n)] for k in range(n))
    if lam[-1] > 0:
        label = OLabel(lam)
        xi = None
    else:
        xi = _delta_eigenvalue(mod, coords)
        label = OLabel(lam if xi == 1 else lam[:-1] + (rat(-1, 2),))
    if mod.dim != o_dim(label):
        raise AssertionError(
            "o-type span dim %d != dim of label %s" % (mod.dim, label)
        )
    mod.olabel = label
    mod.o_seed = (coords, xi)
    return mod


# ---------------------------------------------------------------------------
# Oracles: Weyl dimensions (labels.py) and Freudenthal multiplicities


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def freudenthal_multiplicities(lam):
    """Weight multiplicities of the irreducible gl_m module, exactly.

    Returns {dominant weight: multiplicity}; other weights are found
    by sorting (Weyl invariance).  Independent of the module builder.
    """
    lam = tuple(int(x) for x in lam)
    _check_dominant_int(lam)
    m = len(lam)
    rho = tuple(m - 1 - i for i in range(m))
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            r = [0] * m
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    clam = _dot(lam_rho, lam_rho)
    doms = sorted(_dominated_weights(lam), reverse=True)
    mult = {lam: 1}
    for mu in doms:
        if mu == lam:
            continue
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                snu = tuple(sorted(nu, reverse=True))
                cnt = mult.get(snu)
                if cnt is None:
                    if not _majorized(snu, lam):
                        break
                    cnt = 0
                if cnt:
                    acc += 2 * cnt * _dot(nu, alpha)
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = clam - _dot(mu_rho, mu_rho)
        q, r = divmod(acc, denom)
        assert r == 0
        if q:
            mult[mu] = q
    return mult


def _majorized(mu, lam):
    """mu <= lam in dominance order (equal sums, mu weakly decreasing)."""
    if sum(mu) != sum(lam):
        return False
    acc_m = acc_l = 0
    for a, b in zip(mu, lam):
        acc_m += a
        acc_l += b
        if acc_m > acc_l:
            return False
    return True


def _dominated_weights(lam):
    """All dominant integer weights <= lam in dominance order."""
    m = len(lam)
    total = sum(lam)
    low, high = lam[-1], lam[0]
    out = []

    def rec(prefix, remaining, cap):
        k = len(prefix)
        if k == m:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        partial = sum(lam[: k + 1])
        for e in range(min(cap, partial - sum(prefix)), low - 1, -1):
            rest = remaining - e
            if rest < 0:
                continue
            # remaining entries are at most e and at least low
            if rest > e * (m - k - 1) or rest < low * (m - k - 1):
                continue
            prefix.append(e)
            rec(prefix, rest, e)
            prefix.pop()

    rec([], total, high)
    return out


def gamma_weight_multiset(m):
    """Multiset {gamma weight: multiplicity} of a concrete module."""
    return {w: len(idx) for w, idx in sorted(m.weight_classes("gamma").items())}


def weight_multiset_matches_freudenthal(F):
    """Oracle: constructed weights equal the Freudenthal recursion output."""
    mu = F.glabel
    k = mu[-1]
    mup = tuple(x - k for x in mu)
    table = freudenthal_multiplicities(mup)
    built = gamma_weight_multiset(F)
    total = 0
    for w, cnt in built.items():
        base = tuple(x - k for x in w)
        expect = table.get(tuple(sorted(base, reverse=True)), 0)
        if cnt != expect:
            return False
        total += cnt
    return total == F.dim and total == sum(
        _orbit_size(w) * c for w, c in table.items()
    )


def _orbit_size(w):
    from math import factorial

    m = len(w)
    size = factorial(m)
    run = 1
    for a, b in zip(w, w[1:]):
        if a == b:
            run += 1
        else:
            size //= factorial(run)
            run = 1
    size //= factorial(run)
    return size


def std_diag_weight_dims(m):
    """Weights of the standard diagonal torus, by joint eigenspaces.

    Valid for modules closed under all of gl(2n); the candidate list is
    the (conjugation-invariant) multiset of embedded-torus weights.
    """
    spec = subgroup("std_diag", m.two_n // 2)
    acts = [m.act(op) for op in ops_of(spec)]
    counts = gamma_weight_multiset(m)
    out = {}
    total = 0
    for w in sorted(counts):
        mats = []
        for k, amat in enumerate(acts):
            shift = SparseMat.identity(m.dim) * grat(w[k])
            mats.append(amat - shift)
        dim = len(null_space(stack_rows(mats)))
        if dim:
            out[w] = dim
            total += dim
    if total != m.dim or out != counts:
        raise AssertionError("standard torus weights disagree with expected multiset")
    return out
