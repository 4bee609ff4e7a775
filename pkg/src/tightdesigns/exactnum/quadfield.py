"""Exact elements of Q and of real quadratic fields Q(sqrt(D)).

Values are ``a + b*sqrt(D)`` with rational ``a``, ``b``. ``D == 0`` is plain
Q. Rationals are held as normalized :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<a>{_RAT})(?=[+-]))?(?P<b>{_RAT})\*sqrt\((?P<D>\d+)\)$"
)


def _squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class ExactScalar:
    """An element ``a + b*sqrt(D)`` with ``D`` square-free (or 0 for Q)."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 0):
        a, b = Fraction(a), Fraction(b)
        if D < 0:
            raise ValueError("only real quadratic fields are supported")
        if D == 1:
            a, b, D = a + b, Fraction(0), 0
        if D == 0 and b != 0:
            raise ValueError("radical part given for D = 0")
        if D > 1 and not _squarefree(D):
            raise ValueError(f"D = {D} is not square-free")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.D != self.D and self.b and other.b:
                raise ValueError(f"field mismatch: sqrt({self.D}) vs sqrt({other.D})")
            return other
        if isinstance(other, (int, Rational)):
            return ExactScalar(other, 0, self.D)
        return None

    def _field(self, other: "ExactScalar") -> int:
        return self.D if self.D else other.D

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.a - o.a, self.b - o.b, self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._field(o)
        return ExactScalar(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a^2 - D b^2``."""
        return self.a * self.a - self.D * self.b * self.b

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.a, -self.b, self.D)

    def inverse(self) -> "ExactScalar":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero")
        return ExactScalar(self.a / nrm, -self.b / nrm, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactScalar(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(D), decided exactly."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 D
        big = (self.a * self.a > self.b * self.b * self.D) - (self.a * self.a < self.b * self.b * self.D)
        return sa * big

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.D ** 0.5

    def __repr__(self):
        return f"ExactScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def format_scalar(x) -> str:
    """Serialize as ``p/q`` or ``p/q+r/s*sqrt(D)``."""
    if isinstance(x, ExactScalar):
        if x.b == 0:
            return str(x.a)
        sign = "+" if x.b > 0 else "-"
        head = "" if x.a == 0 else str(x.a)
        if not head:
            sign = "" if x.b > 0 else "-"
        return f"{head}{sign}{abs(x.b)}*sqrt({x.D})"
    return str(Fraction(x))


def parse_scalar(text: str, D: int = 0):
    """Parse a scalar token; returns a Fraction for D = 0, else an ExactScalar."""
    text = text.strip()
    if "sqrt" in text:
        m = _SCALAR_RE.match(text)
        if not m:
            raise ValueError(f"malformed scalar {text!r}")
        radical = int(m.group("D"))
        if radical != D:
            raise ValueError(f"scalar {text!r} uses sqrt({radical}) but the field is sqrt({D})")
        return ExactScalar(Fraction(m.group("a") or 0), Fraction(m.group("b")), D)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed scalar {text!r}") from None
    if "." in text or "e" in text.lower():
        raise ValueError(f"malformed scalar {text!r}: use p/q")
    return ExactScalar(value, 0, D) if D else value


def golden_ratio() -> ExactScalar:
    return ExactScalar(Fraction(1, 2), Fraction(1, 2), 5)
