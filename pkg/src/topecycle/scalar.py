"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d).

Rational entries are plain ``int``/``Fraction`` values so that the common
case stays on Python's fast paths.  ``Quad`` represents ``a + b*sqrt(d)``
for a square-free integer ``d > 1``; it interoperates with rationals and
with other ``Quad`` values over the same ``d``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import FieldMismatch, ParseError, UnsupportedField


def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


_CHECKED: set[int] = set()
_ZERO = Fraction(0)


class Quad:
    """An element ``a + b*sqrt(d)`` of the real quadratic field Q(sqrt d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d not in _CHECKED:
            if not is_squarefree(d):
                raise UnsupportedField(f"sqrt({d}): d must be a square-free integer > 1")
            _CHECKED.add(d)
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def _new(cls, a: Fraction, b: Fraction, d: int) -> Quad:
        q = object.__new__(cls)
        q.a = a
        q.b = b
        q.d = d
        return q

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise FieldMismatch(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, Rational):
            return Quad._new(Fraction(other), _ZERO, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad._new(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad._new(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad._new(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad._new(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self) -> Quad:
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return Quad._new(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: |a| vs |b| sqrt(d); equality impossible for d square-free
        return sa if a * a > b * b * self.d else sb

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.a == other.a and self.b == other.b and (self.d == other.d or self.b == 0)
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare Quad with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def sign(x) -> int:
    """Exact sign of an int, Fraction or Quad."""
    if isinstance(x, Quad):
        return x.sign()
    return (x > 0) - (x < 0)


def field_of(x) -> int | None:
    """``None`` for rationals, ``d`` for elements of Q(sqrt d) with nonzero irrational part."""
    if isinstance(x, Quad):
        return x.d if x.b else None
    return None


def simplify(x):
    """Drop to the cheapest exact representation (int, Fraction, or Quad)."""
    if isinstance(x, Quad):
        if x.b == 0:
            x = x.a
        else:
            return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def embed(x, d: int | None):
    """View ``x`` as an element of the field tagged by ``d``."""
    if d is None:
        if isinstance(x, Quad):
            if x.b:
                raise FieldMismatch(f"{x} is not rational")
            return simplify(x.a)
        return x
    if isinstance(x, Quad):
        if x.b and x.d != d:
            raise FieldMismatch(f"{x} is not in Q(sqrt {d})")
        return Quad(x.a, x.b, d)
    return Quad(x, 0, d)


def _format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    if isinstance(x, Quad):
        if x.b == 0:
            return _format_rational(x.a)
        irr = _format_rational(x.b) + "*sqrt"
        if x.a == 0:
            return irr
        if x.b > 0:
            return f"{_format_rational(x.a)}+{irr}"
        return f"{_format_rational(x.a)}{irr}"
    return _format_rational(x)


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(\*sqrt)?|(sqrt))")


def parse_scalar(text: str, d: int | None = None):
    """Parse ``p/q``, ``p/q+r/s*sqrt``, ``-sqrt``, ... into an exact scalar.

    ``sqrt`` stands for ``sqrt(d)`` and is only legal when ``d`` is given.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty coefficient")
    pos = 0
    a = Fraction(0)
    b = Fraction(0)
    nterms = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (nterms and not m.group(1)):
            raise ParseError(f"bad coefficient {text!r}")
        sgn = -1 if m.group(1) == "-" else 1
        if m.group(4):
            b += sgn
        else:
            try:
                val = Fraction(m.group(2))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {text!r}") from None
            if m.group(3):
                b += sgn * val
            else:
                a += sgn * val
        nterms += 1
        pos = m.end()
    if b:
        if d is None:
            raise UnsupportedField(f"coefficient {text!r} uses sqrt in a rational field")
        return Quad(a, b, d)
    if d is not None:
        return Quad(a, 0, d)
    return simplify(a)
