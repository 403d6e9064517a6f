"""Exact arithmetic over the Gaussian rationals Q(i).

Every scalar in this package is a GaussRat: a + b*i with a, b
arbitrary-precision rationals.  gmpy2's mpq is used when available
(it is much faster than fractions.Fraction); results are identical
either way because both are canonical reduced rationals.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _ratimpl
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _ratimpl


def rat(x=0, y=None):
    """Coerce to the underlying rational type ('3/2' strings allowed)."""
    if y is not None:
        return _ratimpl(x) / _ratimpl(y)
    if isinstance(x, str):
        return _ratimpl(x.strip())
    return _ratimpl(x)


RAT_ZERO = rat(0)
RAT_ONE = rat(1)


class GaussRat:
    """a + b*i with rational a, b, always in canonical reduced form."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(RAT_ZERO) else rat(re)
        self.im = im if type(im) is type(RAT_ZERO) else rat(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int,)) or type(other) is type(RAT_ZERO):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            raise TypeError("cannot divide GaussRat by %r" % (other,))
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def conj(self):
        return GaussRat(self.re, -self.im)

    def inv(self):
        return GR_ONE / self

    def is_rational(self):
        return not self.im

    def __repr__(self):
        return "GaussRat(%s)" % self

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = _imag_str(self.im)
        if not self.re:
            return im
        return "%s%s%s" % (self.re, "" if im.startswith("-") else "+", im)

    def as_pair(self):
        """Canonical (re, im) string pair, used by the JSON serializers."""
        return (str(self.re), str(self.im))


def _imag_str(b):
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return "%s*i" % b


def _coerce(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, int) or type(x) is type(RAT_ZERO):
        return GaussRat(x)
    return None


def grat(x, y=None):
    """GaussRat from rationals: grat(a) = a, grat(a, b) = a + b*i."""
    if isinstance(x, GaussRat):
        return x
    if y is None:
        return GaussRat(x)
    return GaussRat(rat(x), rat(y))


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)
GR_HALF = GaussRat(rat(1, 2))
GR_MINUS_HALF_I = GaussRat(0, rat(-1, 2))
