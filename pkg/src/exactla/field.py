"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational elements are :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator.  Prime-field elements are
:class:`GFElement` residues in ``[0, p)``.  Both representations are
canonical, so ``==`` on elements is semantic equality.

Library code never divides elements with ``/``; every division goes through
:meth:`Field.inv`.  That keeps division-freeness of an algorithm observable.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .errors import DivisionByZero, FieldMismatch, ParseError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GFElement:
    """A residue modulo a prime ``p``, always stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return GFElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * GF(self.p).inv(GFElement(v, self.p))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return GF(self.p).inv(self) * v

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.value == other.value and self.p == other.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GFElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Element = Union[Fraction, GFElement]


@dataclass(frozen=True)
class Field:
    """Descriptor of the coefficient field.

    ``modulus`` is ``None`` for the rationals and a prime ``p`` for GF(p).
    Use :data:`Q` and :func:`GF` rather than constructing directly.
    """

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def kind(self) -> str:
        return "Rationals" if self.modulus is None else "PrimeField"

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    @property
    def zero(self) -> Element:
        return self.from_integer(0)

    @property
    def one(self) -> Element:
        return self.from_integer(1)

    def from_integer(self, k: int) -> Element:
        if self.modulus is None:
            return Fraction(k)
        return GFElement(k, self.modulus)

    def inv(self, a: Element) -> Element:
        if not a:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.modulus is None:
            return Fraction(a.denominator, a.numerator)
        return GFElement(pow(a.value, -1, self.modulus), self.modulus)

    def contains(self, a) -> bool:
        if self.modulus is None:
            return isinstance(a, Fraction)
        return isinstance(a, GFElement) and a.p == self.modulus

    def coerce(self, a) -> Element:
        """Map an int, Fraction or matching element into this field."""
        if self.contains(a):
            return a
        if isinstance(a, int):
            return self.from_integer(a)
        if self.modulus is None and isinstance(a, Fraction):
            return a
        raise FieldMismatch(f"{a!r} is not an element of {self}")

    def elements(self) -> Iterator[Element]:
        if self.modulus is None:
            raise ValueError("the rationals are infinite")
        return (GFElement(v, self.modulus) for v in range(self.modulus))

    def random_element(self, rng: random.Random, bound: int = 5) -> Element:
        """Uniform over GF(p); uniform integer in ``[-bound, bound]`` over Q."""
        if self.modulus is None:
            return Fraction(rng.randint(-bound, bound))
        return GFElement(rng.randrange(self.modulus), self.modulus)

    def parse(self, text: str) -> Element:
        text = text.strip()
        if self.modulus is None:
            if not _RATIONAL_RE.match(text):
                raise ParseError(f"bad rational literal {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den) if den else 1)
        if not _INTEGER_RE.match(text):
            raise ParseError(f"bad GF({self.modulus}) literal {text!r}")
        return GFElement(int(text), self.modulus)

    @staticmethod
    def format(a: Element) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.modulus is None else f"GF({self.modulus})"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        """Accept ``Q``/``q`` and ``GF(p)``/``gf:p`` spellings."""
        s = name.strip()
        if s.lower() == "q":
            return Q
        m = re.fullmatch(r"(?i)gf(?:\((\d+)\)|:(\d+))", s)
        if not m:
            raise ParseError(f"unknown field {name!r}")
        p = int(m.group(1) or m.group(2))
        if not is_prime(p):
            raise ParseError(f"GF({p}): modulus is not prime")
        return GF(p)


Q = Field()


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def from_integer(F: Field, k: int) -> Element:
    return F.from_integer(k)


def inv(F: Field, a: Element) -> Element:
    return F.inv(a)


def characteristic(F: Field) -> int:
    return F.characteristic
