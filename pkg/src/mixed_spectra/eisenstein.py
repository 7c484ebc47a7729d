"""Exact arithmetic in the Eisenstein integers Z[w], w = exp(2*pi*i/3).

Values are stored in the basis {1, w} and reduced with w**2 = -1 - w.
Python ints are unbounded, so nothing here can overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

SQRT3_2 = math.sqrt(3.0) / 2.0


@dataclass(frozen=True, slots=True)
class Eisenstein:
    """The number ``a + b*w``."""

    a: int = 0
    b: int = 0

    @classmethod
    def unit(cls, power: int) -> Eisenstein:
        """Return ``w**power`` (power taken mod 3)."""
        return _UNITS[power % 3]

    @classmethod
    def coerce(cls, x: Union[int, Eisenstein]) -> Eisenstein:
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to Eisenstein")

    def __add__(self, other):
        if isinstance(other, int):
            return Eisenstein(self.a + other, self.b)
        if isinstance(other, Eisenstein):
            return Eisenstein(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (int, Eisenstein)):
            return self + (-Eisenstein.coerce(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Eisenstein(other, 0) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        if isinstance(other, Eisenstein):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            return Eisenstein(a * c - bd, a * d + b * c - bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Eisenstein:
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, Eisenstein):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def conj(self) -> Eisenstein:
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        """``|x|**2 = a**2 - a*b + b**2``."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_real(self) -> bool:
        return self.b == 0

    def unit_power(self) -> int | None:
        """Exponent p with ``self == w**p``, or None if self is not a cube root of unity."""
        for p, u in enumerate(_UNITS):
            if self == u:
                return p
        return None

    def to_complex(self) -> complex:
        return complex(self.a - 0.5 * self.b, SQRT3_2 * self.b)

    def __complex__(self) -> complex:
        return self.to_complex()

    def __repr__(self) -> str:
        return f"Eisenstein({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return _coef_w(self.b)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{_coef_w(abs(self.b))}"


def _coef_w(b: int) -> str:
    if b == 1:
        return "w"
    if b == -1:
        return "-w"
    return f"{b}w"


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)
_UNITS = (ONE, OMEGA, OMEGA2)


def mul(x: Eisenstein, y: Eisenstein) -> Eisenstein:
    return x * y


def conj(x: Eisenstein) -> Eisenstein:
    return x.conj()


def to_complex(x: Eisenstein) -> complex:
    return x.to_complex()


@dataclass(frozen=True, slots=True, init=False)
class EisensteinRational:
    """``numerator / denominator`` with a positive, fully reduced integer denominator."""

    numerator: Eisenstein
    denominator: int

    def __init__(self, numerator: Union[int, Eisenstein], denominator: int = 1):
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        num = Eisenstein.coerce(numerator)
        if denominator < 0:
            num, denominator = -num, -denominator
        g = math.gcd(num.a, num.b, denominator)
        object.__setattr__(self, "numerator", Eisenstein(num.a // g, num.b // g))
        object.__setattr__(self, "denominator", denominator // g)

    @classmethod
    def coerce(cls, x) -> EisensteinRational:
        if isinstance(x, EisensteinRational):
            return x
        return cls(Eisenstein.coerce(x), 1)

    def __add__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> EisensteinRational:
        return EisensteinRational(-self.numerator, self.denominator)

    def __sub__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(
            self.numerator * o.numerator, self.denominator * o.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.numerator:
            raise ZeroDivisionError("division by zero")
        # x / y = x * conj(y) / |y|^2
        nrm = o.numerator.norm()
        return EisensteinRational(
            self.numerator * o.numerator.conj() * o.denominator,
            self.denominator * nrm,
        )

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) / self

    def __eq__(self, other) -> bool:
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def conj(self) -> EisensteinRational:
        return EisensteinRational(self.numerator.conj(), self.denominator)

    def is_integral(self) -> bool:
        return self.denominator == 1

    def to_int(self) -> int:
        """The value as a rational integer; raises ValueError if it is not one."""
        if self.denominator != 1 or self.numerator.b != 0:
            raise ValueError(f"{self} is not a rational integer")
        return self.numerator.a

    def to_complex(self) -> complex:
        return self.numerator.to_complex() / self.denominator

    def __repr__(self) -> str:
        return f"EisensteinRational({self.numerator!r}, {self.denominator})"

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"({self.numerator})/{self.denominator}"
