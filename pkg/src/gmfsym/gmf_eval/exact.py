"""Complex numbers with exact rational parts."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RAT = r"[+-]?\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>{_RAT})?(?:(?P<sign>[+-])?(?P<im>\d+(?:/\d+)?)?\*?i)?$"
)


class ExactComplex:
    """re + im*i with ``Fraction`` parts. Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    def __reduce__(self):
        return (ExactComplex, (self.re, self.im))

    @classmethod
    def coerce(cls, value) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (int, Rational)):
            return cls(value)
        raise TypeError(f"cannot convert {value!r} to ExactComplex")

    @classmethod
    def parse(cls, text: str) -> "ExactComplex":
        """Parse "3", "-1/2", "i", "-i", "2i", "1/2+3/4 i", "0-1 i"."""
        try:
            return cls._parse(text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None

    @classmethod
    def _parse(cls, text: str) -> "ExactComplex":
        s = text.replace(" ", "")
        m = _COMPLEX_RE.match(s)
        if not s or m is None:
            raise ValueError(f"bad exact complex literal: {text!r}")
        real = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        if not s.endswith("i"):
            if m.group("sign") or m.group("im"):
                raise ValueError(f"bad exact complex literal: {text!r}")
            return cls(real)
        imag = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            imag = -imag
        elif m.group("sign") is None and m.group("re") is not None:
            # "3i" parsed as re=3 with no imaginary part: move it over
            if m.group("im") is None:
                return cls(0, real)
            raise ValueError(f"bad exact complex literal: {text!r}")
        return cls(real, imag)

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if o.im == 0 and self.im == 0:
            return ExactComplex(self.re * o.re)
        return ExactComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by exact zero")
        num = self * o.conjugate()
        return ExactComplex(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else ExactComplex(1) / self
        result = ExactComplex(1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        op = "+" if self.im > 0 else "-"
        return f"{self.re}{op}{abs(self.im)} i"

    def __repr__(self):
        return f"ExactComplex('{self}')"


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact parts must be rational, got {type(x).__name__}")


def _coerce_or_none(x):
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, (int, Rational)):
        return ExactComplex(x)
    return None


ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)
