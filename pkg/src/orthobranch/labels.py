"""Labels for irreducible O(2n) representations and dimension formulas.

An O(2n) label is a weakly decreasing tuple (l_1 >= ... >= l_n) with
l_1 ... l_{n-1} nonnegative integers and l_n in {-1/2, 0, 1, 2, ...}.
The value -1/2 marks the determinant twist of the label with last
entry 0.  Dimension oracles (Weyl-type product formulas for gl and
so) are kept here so the representation builders can cross-check
against an independent count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import rat

MINUS_HALF = rat(-1, 2)


@dataclass(frozen=True)
class OLabel:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(rat(e) for e in self.entries))
        ent = self.entries
        if not ent:
            raise ValueError("empty label")
        for a, b in zip(ent, ent[1:]):
            if a < b:
                raise ValueError("label %s is not weakly decreasing" % (self,))
        for e in ent[:-1]:
            if e.denominator != 1 or e < 0:
                raise ValueError("label %s: leading entries must be nonnegative integers" % (self,))
        last = ent[-1]
        if not (last == MINUS_HALF or (last.denominator == 1 and last >= 0)):
            raise ValueError("label %s: last entry must be -1/2 or a nonnegative integer" % (self,))

    @property
    def n(self):
        return len(self.entries)

    @property
    def last(self):
        return self.entries[-1]

    def is_det_type(self):
        return self.last == MINUS_HALF

    def so_weight(self):
        """Highest weight of the underlying so(2n) constituent (ints)."""
        ent = [int(e) for e in self.entries[:-1]]
        ent.append(0 if self.is_det_type() else int(self.last))
        return tuple(ent)

    def det_partner(self):
        """Label of this representation twisted by the determinant."""
        if self.is_det_type():
            return OLabel(self.entries[:-1] + (0,))
        if self.last == 0:
            return OLabel(self.entries[:-1] + (MINUS_HALF,))
        return self

    def size_sq(self):
        """Square of the size: sum of (l_j + 2n - 2j)^2, j = 1..n."""
        n = self.n
        return sum((e + 2 * n - 2 * j) ** 2 for j, e in enumerate(self.entries, start=1))

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    def sort_key(self):
        return tuple(rat(2) * e for e in self.entries)


def parse_olabel(text):
    return OLabel(tuple(rat(p.strip()) for p in text.split(",")))


def olabel_size_sq(label, n):
    label = label if isinstance(label, OLabel) else OLabel(tuple(label))
    if label.n != n:
        raise ValueError("label %s has length %d, expected %d" % (label, label.n, n))
    return label.size_sq()


def weyl_dim_gl(mu):
    """Dimension of the irreducible GL_m module with highest weight mu."""
    mu = tuple(mu)
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError("non-dominant weight %s" % (mu,))
    m = len(mu)
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= int(mu[i] - mu[j]) + (j - i)
            den *= j - i
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def so_even_dim(lam):
    """Dimension of the irreducible so(2n) module with highest weight lam.

    lam is an integer tuple with lam_1 >= ... >= lam_{n-1} >= |lam_n|.
    Product over positive roots e_i +- e_j of <lam+rho, alpha>/<rho, alpha>
    with rho = (n-1, n-2, ..., 0).
    """
    lam = tuple(lam)
    n = len(lam)
    if any(a < b for a, b in zip(lam, lam[1:-1])) or (n > 1 and lam[-2] < abs(lam[-1])):
        raise ValueError("non-dominant so weight %s" % (lam,))
    num = den = 1
    for i in range(n):
        li = lam[i] + (n - 1 - i)
        ri = n - 1 - i
        for j in range(i + 1, n):
            lj = lam[j] + (n - 1 - j)
            rj = n - 1 - j
            num *= (li - lj) * (li + lj)
            den *= (ri - rj) * (ri + rj)
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def o_dim(label):
    """Dimension of the irreducible O(2n) module with the given label."""
    label = label if isinstance(label, OLabel) else OLabel(tuple(label))
    lam = label.so_weight()
    d = so_even_dim(lam)
    return 2 * d if lam[-1] > 0 else d
