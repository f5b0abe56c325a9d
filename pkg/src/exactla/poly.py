"""Univariate polynomials with ascending coefficient tuples.

``coeffs[i]`` is the coefficient of x^i.  Trailing zeros are stripped, so the
zero polynomial has no coefficients and degree ``-1`` (below every constant).
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZeroPoly, FieldMismatch, NotSquare, ParseError
from .field import Element, Field
from .matrix import Matrix, add, identity, mul, scale


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> "Poly":
        return cls(field, [0] * k + [c])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Poly":
        """prod (x - r)."""
        p = cls(field, [1])
        for r in roots:
            p = p * cls(field, [-field.coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    @property
    def leading(self) -> Element:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int) -> Element:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __call__(self, x: Element) -> Element:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, a) -> "Poly":
        a = self.field.coerce(a)
        return Poly(self.field, [a * c for c in self.coeffs])

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly<{self.field}>{format_poly(self)}"


def poly_mul(p: Poly, q: Poly) -> Poly:
    p._check(q)
    if p.is_zero() or q.is_zero():
        return Poly(p.field)
    out = [p.field.zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return Poly(p.field, out)


def poly_divmod(p: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with p = q g + r and deg r < deg g."""
    p._check(g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = p.field
    lead_inv = F.inv(g.leading)
    r = list(p.coeffs)
    dg = g.degree
    q = [F.zero] * max(len(r) - dg, 0)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * lead_inv
        q[k] = c
        if c:
            for j, b in enumerate(g.coeffs):
                r[k + j] = r[k + j] - c * b
    return Poly(F, q), Poly(F, r[:dg])


def eval_matrix(p: Poly, A: Matrix) -> Matrix:
    """p(A) by Horner's scheme, with A^0 = I."""
    if not A.is_square:
        raise NotSquare(f"cannot evaluate at a {A.rows}x{A.cols} matrix")
    if p.field != A.field:
        raise FieldMismatch(f"{p.field} vs {A.field}")
    I = identity(A.field, A.rows)
    acc = scale(0, I)
    for c in reversed(p.coeffs):
        acc = add(mul(acc, A), scale(c, I))
    return acc


def format_poly(p: Poly) -> str:
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def parse_poly(F: Field, text: str) -> Poly:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"polynomial literal must be bracketed: {text!r}")
    body = s[1:-1].strip()
    return Poly(F, [F.parse(t) for t in body.split(",")] if body else [])


def from_descending(F: Field, coeffs: Sequence) -> Poly:
    return Poly(F, list(reversed(list(coeffs))))
