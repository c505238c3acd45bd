"""Exact field arithmetic over the rationals and over prime fields.

Two representations coexist:

* raw values, used inside tensors and hot loops: a :class:`fractions.Fraction`
  for Q, an ``int`` in ``[0, p)`` for F_p.  All arithmetic on raw values goes
  through the owning :class:`FieldSpec`.
* :class:`Scalar`, a small immutable value type that remembers its field and
  refuses to mix with scalars of another field.

>>> Q = FieldSpec.rationals()
>>> Q.format(Q.add(Q.parse("1/2"), Q.parse("1/3")))
'5/6'
>>> F7 = FieldSpec.prime(7)
>>> F7.inv(3)
5
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "FieldSpec",
    "Scalar",
    "FieldMismatchError",
    "QQ",
    "scalar_arith",
    "parse_scalar",
    "format_scalar",
]

Raw = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


class FieldMismatchError(ValueError):
    """Operands live in different fields."""


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind == "Q"``) or a prime field (``kind == "Fp"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or self.p < 2 or not _is_prime(self.p):
                raise ValueError(f"prime field modulus must be a prime >= 2, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("Fp", p)

    @classmethod
    def from_name(cls, name: str) -> FieldSpec:
        """Parse ``"Q"``, ``"F7"``, ``"Fp7"`` or a bare prime such as ``"7"``."""
        text = name.strip()
        if text in ("Q", "QQ"):
            return cls.rationals()
        m = re.fullmatch(r"(?:Fp?|GF)?\(?(\d+)\)?", text)
        if not m:
            raise ValueError(f"cannot parse field name {name!r}")
        return cls.prime(int(m.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    # -- raw arithmetic ---------------------------------------------------

    @property
    def zero(self) -> Raw:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p else Fraction(1)

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p else -a

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def coerce(self, x) -> Raw:
        """Canonical raw value for an int, Fraction, string or :class:`Scalar`."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatchError(f"scalar over {x.field} used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x % self.p if self.p else Fraction(x)
        if isinstance(x, Fraction):
            if not self.p:
                return x
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes in {self}")
            return x.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def parse(self, text: str) -> Raw:
        m = _SCALAR_RE.match(text.strip().replace("−", "-"))
        if not m:
            raise ValueError(f"malformed scalar {text!r}")
        sign, num, den = m.groups()
        n = int(num) * (-1 if sign else 1)
        d = int(den) if den is not None else 1
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return self.coerce(Fraction(n, d))

    def format(self, a: Raw) -> str:
        if self.p:
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def is_member(self, a) -> bool:
        if self.p:
            return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p
        return isinstance(a, Fraction)


QQ = FieldSpec.rationals()


@dataclass(frozen=True)
class Scalar:
    """An element of a specific field; arithmetic refuses mixed fields."""

    field: FieldSpec
    value: Raw

    def __post_init__(self):
        if not self.field.is_member(self.value):
            object.__setattr__(self, "value", self.field.coerce(self.value))

    @classmethod
    def of(cls, x, field: FieldSpec = QQ) -> Scalar:
        return cls(field, field.coerce(x))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


_BINARY = {"add", "sub", "mul"}
_UNARY = {"neg", "inv"}


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``op`` (add, sub, mul, neg, inv) to field elements."""
    if op in _BINARY:
        if b is None:
            raise TypeError(f"{op} needs two operands")
        if a.field != b.field:
            raise FieldMismatchError(f"{a.field} vs {b.field}")
        return Scalar(a.field, getattr(a.field, op)(a.value, b.value))
    if op in _UNARY:
        if b is not None:
            raise TypeError(f"{op} takes a single operand")
        return Scalar(a.field, getattr(a.field, op)(a.value))
    raise ValueError(f"unknown scalar operation {op!r}")


def parse_scalar(text: str, field: FieldSpec = QQ) -> Scalar:
    return Scalar(field, field.parse(text))


def format_scalar(s: Scalar) -> str:
    return s.field.format(s.value)
