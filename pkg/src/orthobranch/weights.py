"""Torus weights with an explicit torus tag.

Two different Cartan subgroups are in play (the paired embedding's
diagonal torus of GL(2n) and its intersection T_O with O(2n), plus the
standard diagonal and the GL_n x GL_n determinant lattice), and mixing
them silently is the classic way to get wrong Hom spaces.  Every
Weight therefore carries its torus and cross-torus arithmetic raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import rat

GAMMA = "gamma"  # diagonal torus of GL(2n) in the paired coordinates
TO = "to"  # Cartan subgroup of O(2n), rank n
STD_DIAG = "std_diag"  # standard diagonal torus of GL(m)
HBLOCK = "hblock"  # determinant lattice of GL_n x GL_n
HPRIME = "hprime"  # rank-n split subtorus (a_1, ..., a_n) with a_k' = a_k


@dataclass(frozen=True)
class Torus:
    kind: str
    rank: int

    def __str__(self):
        return "%s(%d)" % (self.kind, self.rank)


def gamma_torus(two_n):
    return Torus(GAMMA, two_n)


def to_torus(n):
    return Torus(TO, n)


def std_torus(m):
    return Torus(STD_DIAG, m)


def hblock_torus(n):
    return Torus(HBLOCK, 2)


def hprime_torus(n):
    return Torus(HPRIME, n)


class Weight:
    """A rational weight vector on a named torus."""

    __slots__ = ("entries", "torus")

    def __init__(self, entries, torus):
        entries = tuple(e if type(e) is type(rat(0)) else rat(e) for e in entries)
        if len(entries) != torus.rank:
            raise ValueError("weight length %d != torus rank %d" % (len(entries), torus.rank))
        self.entries = entries
        self.torus = torus

    def _check(self, other):
        if self.torus != other.torus:
            raise ValueError("mixing weights on %s and %s" % (self.torus, other.torus))

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.torus == other.torus
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.entries, self.torus))

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.entries, other.entries)), self.torus)

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.entries, other.entries)), self.torus)

    def __neg__(self):
        return Weight(tuple(-a for a in self.entries), self.torus)

    def is_dominant(self):
        """Weakly decreasing entries."""
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def is_integral(self):
        return all(e.denominator == 1 for e in self.entries)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    def __repr__(self):
        return "Weight(%s @ %s)" % (self, self.torus)

    def to_json(self):
        return {"torus": str(self.torus), "entries": str(self)}


def parse_weight(text, torus):
    """Parse 'a,b/2,-c' comma syntax onto the given torus."""
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    return Weight(tuple(rat(p) for p in parts), torus)
