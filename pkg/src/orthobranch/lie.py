"""Matrix realizations of gl(2n), so(2n), tori, Borel data and s_{2n}.

Conventions, fixed once for the whole package:

* Indices are 0-based; index m pairs with m' = 2n-1-m.
* The paired-coordinate embedding gamma of the rank-2n torus sends
  (a_0, ..., a_{2n-1}) to the matrix with (m, m) entry (a_m + a_m')/2
  and (m, m') entry (a_m - a_m')/(2i).  Its image meets O(2n) (for the
  standard symmetric form) in the rank-n Cartan subgroup T_O given by
  a_m' = 1/a_m.
* The Cayley matrix T = I + iJ (J the antidiagonal flip) has columns
  u_m = x_m + i x_{m'} which diagonalize the gamma torus.  Everything
  downstream works in these u-coordinates: there gl's Borel b is upper
  triangular, so(2n) = {X : X^t = -JXJ}, and the symmetric-traceless
  model s = {X : X^t = JXJ, tr X = 0}.
* delta = the reflection in the last standard coordinate represents
  the nontrivial O(2n) component; the reflection in standard
  coordinate n normalizes the Borel of so(2n) and is the one used for
  label bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import GR_ONE, GaussRat, grat, rat
from .linalg import EchelonSpan, SparseMat
from .weights import Weight, gamma_torus, to_torus


def pair(m, two_n):
    return two_n - 1 - m


def elem(i, j, m):
    """Elementary matrix E_ij of size m."""
    return SparseMat(m, m, {(i, j): GR_ONE})


# ---------------------------------------------------------------------------
# The torus embedding and the Cayley change of basis


def gamma_matrix(avals):
    """The embedded torus element gamma(a_0, ..., a_{2n-1}), standard coords."""
    two_n = len(avals)
    if two_n % 2:
        raise ValueError("gamma needs an even number of coordinates")
    half = grat(rat(1, 2))
    minus_half_i = grat(0, rat(-1, 2))
    ent = {}
    for m in range(two_n):
        mp = pair(m, two_n)
        am = avals[m] if isinstance(avals[m], GaussRat) else grat(avals[m])
        ap = avals[mp] if isinstance(avals[mp], GaussRat) else grat(avals[mp])
        d = (am + ap) * half
        o = (am - ap) * minus_half_i
        if d:
            ent[(m, m)] = d
        if o:
            ent[(m, mp)] = o
    return SparseMat(two_n, two_n, ent)


def dgamma(n):
    """The 2n cocharacter derivatives dgamma(e_k), standard coords."""
    two_n = 2 * n
    out = []
    half = grat(rat(1, 2))
    minus_half_i = grat(0, rat(-1, 2))
    half_i = grat(0, rat(1, 2))
    for k in range(two_n):
        kp = pair(k, two_n)
        out.append(
            SparseMat(
                two_n,
                two_n,
                {(k, k): half, (kp, kp): half, (k, kp): minus_half_i, (kp, k): half_i},
            )
        )
    return out


def cayley(two_n):
    """(T, T^-1) with T = I + iJ, the u-coordinate change of basis."""
    i = grat(0, 1)
    ent = {}
    for m in range(two_n):
        ent[(m, m)] = GR_ONE
        ent[(m, pair(m, two_n))] = i
    T = SparseMat(two_n, two_n, ent)
    half = grat(rat(1, 2))
    minus_half_i = grat(0, rat(-1, 2))
    ent = {}
    for m in range(two_n):
        ent[(m, m)] = half
        ent[(m, pair(m, two_n))] = minus_half_i
    Tinv = SparseMat(two_n, two_n, ent)
    return T, Tinv


def to_u(mat_std):
    T, Tinv = cayley(mat_std.rows)
    return Tinv * mat_std * T


def to_std(mat_u):
    T, Tinv = cayley(mat_u.rows)
    return T * mat_u * Tinv


def reflection_std(two_n, p):
    ent = {(m, m): GR_ONE for m in range(two_n)}
    ent[(p, p)] = grat(-1)
    return SparseMat(two_n, two_n, ent)


def reflection_u(two_n, p):
    return to_u(reflection_std(two_n, p))


def delta_default(two_n):
    """Component representative of O(2n): last standard coordinate flip."""
    return reflection_u(two_n, two_n - 1)


def delta_alternate(two_n):
    return reflection_u(two_n, 0)


def delta_bookkeeping(two_n):
    """The reflection normalizing the Borel of so(2n): standard index n."""
    return reflection_u(two_n, two_n // 2)


def sigma_matrix_std(n):
    ent = {}
    for m in range(2 * n):
        ent[(m, m)] = GR_ONE if m < n else grat(-1)
    return SparseMat(2 * n, 2 * n, ent)


@dataclass(frozen=True)
class InvolutionSpec:
    """sigma2n is conjugation by diag(I_n, -I_n); theta is X -> -X^t
    (standard coordinates), both expressed on u-coordinate matrices."""

    kind: str
    mat_u: SparseMat | None

    def apply_lie(self, x_u):
        if self.kind == "sigma2n":
            return self.mat_u * x_u * self.mat_u
        return -GR_ONE * swap_transpose(x_u)

    def apply_group(self, g_u):
        if self.kind == "sigma2n":
            return self.mat_u * g_u * self.mat_u
        return swap_transpose(g_u.inverse())


def sigma_involution(n):
    return InvolutionSpec("sigma2n", to_u(sigma_matrix_std(n)))


def theta_involution(n):
    return InvolutionSpec("theta_transpose_inverse", None)


def swap_transpose(x_u):
    """J X^t J: the u-coordinate image of the standard transpose."""
    m = x_u.rows
    return SparseMat(
        m, m, {(pair(j, m), pair(i, m)): v for (i, j), v in x_u.entries.items()}
    )


# ---------------------------------------------------------------------------
# Root data


def rho(two_n):
    """Half sum of positive roots of gl(2n): ((2n-1)/2, ..., (1-2n)/2)."""
    return Weight(
        tuple(rat(two_n - 1 - 2 * k, 2) for k in range(two_n)), gamma_torus(two_n)
    )


def gl_positive_system(two_n):
    """Positive roots e_i - e_j (i < j) with root vectors, u-coordinates."""
    out = []
    for i in range(two_n):
        for j in range(i + 1, two_n):
            w = [0] * two_n
            w[i], w[j] = 1, -1
            out.append((Weight(w, gamma_torus(two_n)), elem(i, j, two_n)))
    return out


def so_positive_system(n):
    """Positive roots e_i +- e_j (i < j <= n) of so(2n) with root vectors."""
    two_n = 2 * n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            w = [0] * n
            w[i], w[j] = 1, -1
            mat = elem(i, j, two_n) - elem(pair(j, two_n), pair(i, two_n), two_n)
            out.append((Weight(w, to_torus(n)), mat))
            w = [0] * n
            w[i], w[j] = 1, 1
            mat = elem(i, pair(j, two_n), two_n) - elem(j, pair(i, two_n), two_n)
            out.append((Weight(w, to_torus(n)), mat))
    return out


def positive_system(algebra, n):
    """positive_system('gl'|'so', n): n means gl(2n) resp. so(2n)."""
    if algebra == "gl":
        return gl_positive_system(2 * n)
    if algebra == "so":
        return so_positive_system(n)
    raise ValueError("unknown algebra %r" % (algebra,))


def so_torus_gens(n):
    two_n = 2 * n
    return [elem(k, k, two_n) - elem(pair(k, two_n), pair(k, two_n), two_n) for k in range(n)]


def so_basis(n):
    """Labeled basis of so(2n): torus, then positive, then negative roots."""
    two_n = 2 * n
    gens = [("h%d" % k, m) for k, m in enumerate(so_torus_gens(n))]
    for root, mat in so_positive_system(n):
        gens.append(("r+[%s]" % root, mat))
        neg = SparseMat(
            two_n, two_n, {(j, i): v for (i, j), v in mat.entries.items()}
        )
        gens.append(("r-[%s]" % root, neg))
    return gens


def so_simple_raising(n):
    """Simple positive root vectors of so(2n) (e_i - e_{i+1}, e_{n-2}+e_{n-1})."""
    two_n = 2 * n
    out = []
    for i in range(n - 1):
        out.append(elem(i, i + 1, two_n) - elem(pair(i + 1, two_n), pair(i, two_n), two_n))
    if n >= 2:
        i, j = n - 2, n - 1
        out.append(elem(i, pair(j, two_n), two_n) - elem(j, pair(i, two_n), two_n))
    return out


def so_simple_lowering(n):
    return [m.transpose() for m in so_simple_raising(n)]


def gl_simple_raising(two_n):
    return [elem(i, i + 1, two_n) for i in range(two_n - 1)]


def gl_simple_lowering(two_n):
    return [elem(i + 1, i, two_n) for i in range(two_n - 1)]


# ---------------------------------------------------------------------------
# The symmetric-traceless model s_{2n} of gl(2n)/k and its pairing


def sym_traceless_project(x_u):
    """Projection of gl(2n) onto s along so(2n) + scalars, u-coordinates."""
    m = x_u.rows
    sym = (x_u + swap_transpose(x_u)) * grat(rat(1, 2))
    t = sym.trace() * grat(rat(1, m))
    if t:
        sym = sym - SparseMat(m, m, {(k, k): t for k in range(m)})
    return sym


def s_spanning_mats(n):
    two_n = 2 * n
    return [
        sym_traceless_project(elem(a, b, two_n))
        for a in range(two_n)
        for b in range(two_n)
    ]


def trace_pairing(x, y):
    """tr(xy) for two square matrices in matching coordinates."""
    if x.rows != y.rows or x.cols != y.cols or x.rows != x.cols:
        raise ValueError("trace pairing needs square matrices of equal size")
    t = (x * y).trace()
    return t


def wedge_pairing(xs, ys):
    """Gram-determinant pairing of two decomposable degree-p wedges.

    xs and ys are lists of matrices of equal length p; the value is
    det(tr(x_i y_j)).
    """
    if len(xs) != len(ys):
        raise ValueError("wedge degrees differ: %d vs %d" % (len(xs), len(ys)))
    p = len(xs)
    gram = SparseMat(
        p, p, {(i, j): trace_pairing(x, y) for i, x in enumerate(xs) for j, y in enumerate(ys)}
    )
    return gram.det()


# ---------------------------------------------------------------------------
# The block subalgebra h = gl_n x gl_n and the Borel of gl(2n)


def h_block_elem_u(n, block, a, b):
    """Standard block element E_ab of factor 'block' (0 or 1), u-coords."""
    off = 0 if block == 0 else n
    return to_u(elem(off + a, off + b, 2 * n))


def h_basis_u(n):
    out = []
    for block in range(2):
        for a in range(n):
            for b in range(n):
                out.append(h_block_elem_u(n, block, a, b))
    return out


def h_mod_c_embedding(n):
    """Basis of the image of h = gl_n x gl_n inside s (canonical order).

    The kernel of the projection restricted to h is c = h n k, so this
    realizes h/c inside s; its dimension must be n^2 + n - 1.
    """
    span = EchelonSpan()
    for mat in h_basis_u(n):
        span.insert(sym_traceless_project(mat).entries)
    basis = [SparseMat(2 * n, 2 * n, row) for row in span.basis()]
    return basis


def borel_basis_u(two_n):
    """Upper triangular basis of b (torus then positive root vectors)."""
    out = [elem(k, k, two_n) for k in range(two_n)]
    for i in range(two_n):
        for j in range(i + 1, two_n):
            out.append(elem(i, j, two_n))
    return out


def b_mod_bk_embedding(n):
    """Basis of the image of the Borel of gl(2n) inside s.

    The kernel is b n k = (Borel of so(2n)) + scalars, so this is the
    p_0-dimensional space whose top wedge has T_O weight (2n, ..., 2).
    """
    span = EchelonSpan()
    for mat in borel_basis_u(2 * n):
        span.insert(sym_traceless_project(mat).entries)
    return [SparseMat(2 * n, 2 * n, row) for row in span.basis()]


def to_weight_of_gamma(content, n):
    """Fold a gamma-torus exponent vector onto T_O: w_k = c_k - c_{k'}."""
    two_n = 2 * n
    return tuple(content[k] - content[pair(k, two_n)] for k in range(n))


# ---------------------------------------------------------------------------
# Group specifications: generator lists with character data


@dataclass(frozen=True)
class LieGen:
    label: str
    mat: SparseMat
    char_data: tuple


@dataclass(frozen=True)
class CompGen:
    label: str
    mat: SparseMat
    char_parity: tuple


@dataclass(frozen=True)
class GroupSpec:
    """A subgroup given by Lie generators plus component representatives.

    char_kind names the lattice of characters the group supports:
    'gl_pair' (det^{w1} x det^{w2}), 'o_pair' (det^{e1} x det^{e2}),
    'o_det' (det^e on O(2n)), 'power' ((a_1...a_n)^w), or 'none'.
    """

    name: str
    two_n: int
    char_kind: str
    lie: tuple
    reps: tuple

    def lie_mats(self):
        return [(g.label, g.mat) for g in self.lie]

    def rep_mats(self):
        return [(g.label, g.mat) for g in self.reps]


def group_gl_pair(n):
    lie = []
    for block in range(2):
        for a in range(n):
            for b in range(n):
                cd = (rat(int(a == b)), rat(0)) if block == 0 else (rat(0), rat(int(a == b)))
                lie.append(
                    LieGen("gl%d[%d,%d]" % (block + 1, a, b), h_block_elem_u(n, block, a, b), cd)
                )
    return GroupSpec("gl_pair(%d)" % n, 2 * n, "gl_pair", tuple(lie), ())


def group_o_pair(n):
    two_n = 2 * n
    lie = []
    for block in range(2):
        off = 0 if block == 0 else n
        for a in range(n):
            for b in range(a + 1, n):
                mat = to_u(elem(off + a, off + b, two_n) - elem(off + b, off + a, two_n))
                lie.append(LieGen("so%d[%d,%d]" % (block + 1, a, b), mat, (rat(0), rat(0))))
    reps = (
        CompGen("delta1", reflection_u(two_n, 0), (1, 0)),
        CompGen("delta2", reflection_u(two_n, n), (0, 1)),
    )
    return GroupSpec("o_pair(%d)" % n, two_n, "o_pair", tuple(lie), reps)


def group_o_full(n, alternate_delta=False):
    two_n = 2 * n
    lie = tuple(LieGen(lbl, mat, (rat(0),)) for lbl, mat in so_basis(n))
    delta = delta_alternate(two_n) if alternate_delta else delta_default(two_n)
    name = "o_full(%d)%s" % (n, "_alt" if alternate_delta else "")
    return GroupSpec(name, two_n, "o_det", lie, (CompGen("delta", delta, (1,)),))


def group_gl_full(two_n):
    lie = tuple(
        LieGen("E[%d,%d]" % (a, b), elem(a, b, two_n), (rat(int(a == b)),))
        for a in range(two_n)
        for b in range(two_n)
    )
    return GroupSpec("gl_full(%d)" % two_n, two_n, "power", lie, ())


def group_to_torus(n):
    lie = tuple(
        LieGen("h%d" % k, mat, (rat(0),)) for k, mat in enumerate(so_torus_gens(n))
    )
    return GroupSpec("to(%d)" % n, 2 * n, "none", lie, ())


def group_std_diag(two_n):
    lie = tuple(
        LieGen("d%d" % m, to_u(elem(m, m, two_n)), (rat(0),)) for m in range(two_n)
    )
    return GroupSpec("std_diag(%d)" % two_n, two_n, "none", lie, ())


def group_hprime(n):
    two_n = 2 * n
    lie = tuple(
        LieGen(
            "hp%d" % k,
            elem(k, k, two_n) + elem(pair(k, two_n), pair(k, two_n), two_n),
            (rat(1),),
        )
        for k in range(n)
    )
    return GroupSpec("hprime(%d)" % n, two_n, "power", lie, ())


SUBGROUP_BUILDERS = {
    "gl_pair": group_gl_pair,
    "o_pair": group_o_pair,
    "o_full": group_o_full,
    "to": group_to_torus,
    "hprime": group_hprime,
}


def subgroup(name, n, **kw):
    """Look up a subgroup spec by short name ('gl_pair', 'o_pair', ...)."""
    if name == "std_diag":
        return group_std_diag(2 * n)
    if name == "gl_full":
        return group_gl_full(2 * n)
    try:
        return SUBGROUP_BUILDERS[name](n, **kw)
    except KeyError:
        raise ValueError("unknown subgroup %r" % (name,)) from None
