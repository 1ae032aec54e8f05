"""The ring R = F_q[v]/(v^3 - v).

R is semi-local with maximal ideals <v>, <v-1>, <v+1>.  Evaluating
``a + b v + c v^2`` at v = 0, 1, -1 gives the CRT coordinates

    beta0 = a,   beta1 = a + b + c,   beta2 = a - b + c,

and the inverse map is ``r = beta0*eta0 + beta1*eta1 + beta2*eta2`` with the
orthogonal idempotents

    eta0 = 1 - v^2,   eta1 = zeta (v^2 + v),   eta2 = zeta (v^2 - v),   2 zeta = 1 mod p.

Each eta_i evaluates to 1 at its own point and 0 at the other two, which is
why the evaluation formulas above invert the eta-combination.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .field import GF, FieldElement

__all__ = ["RingElement", "CrtCoords", "idempotents", "zeta", "ring_elements", "parse_ring_element"]


@dataclass(frozen=True)
class CrtCoords:
    beta0: FieldElement
    beta1: FieldElement
    beta2: FieldElement

    def __iter__(self) -> Iterator[FieldElement]:
        return iter((self.beta0, self.beta1, self.beta2))

    def __mul__(self, other: CrtCoords) -> CrtCoords:
        return CrtCoords(self.beta0 * other.beta0, self.beta1 * other.beta1, self.beta2 * other.beta2)


@dataclass(frozen=True)
class RingElement:
    """``a + b v + c v^2`` with a, b, c in a common field."""

    a: FieldElement
    b: FieldElement
    c: FieldElement

    def __post_init__(self):
        if not (self.a.field == self.b.field == self.c.field):
            raise ValueError("ring element components must share a field")

    @classmethod
    def of(cls, field: GF, a=0, b=0, c=0) -> RingElement:
        return cls(field(a), field(b), field(c))

    @property
    def field(self) -> GF:
        return self.a.field

    def _other(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.field != self.field:
                raise ValueError("mismatched fields")
            return other
        return RingElement(self.field(other), self.field.zero, self.field.zero)

    def __add__(self, other) -> RingElement:
        o = self._other(other)
        return RingElement(self.a + o.a, self.b + o.b, self.c + o.c)

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement(-self.a, -self.b, -self.c)

    def __sub__(self, other) -> RingElement:
        return self + (-self._other(other))

    def __rsub__(self, other) -> RingElement:
        return self._other(other) - self

    def __mul__(self, other) -> RingElement:
        o = self._other(other)
        a, b, c = self.a, self.b, self.c
        x, y, z = o.a, o.b, o.c
        # v^3 = v, v^4 = v^2
        return RingElement(
            a * x,
            a * y + b * x + b * z + c * y,
            a * z + c * x + b * y + c * z,
        )

    __rmul__ = __mul__

    def to_crt(self) -> CrtCoords:
        return CrtCoords(self.a, self.a + self.b + self.c, self.a - self.b + self.c)

    @classmethod
    def from_crt(cls, coords: CrtCoords | tuple) -> RingElement:
        b0, b1, b2 = coords
        field = b0.field
        e0, e1, e2 = idempotents(field)
        return e0 * b0 + e1 * b1 + e2 * b2

    def scale(self, s: FieldElement) -> RingElement:
        return RingElement(self.a * s, self.b * s, self.c * s)

    def is_unit(self) -> bool:
        return all(not beta.is_zero() for beta in self.to_crt())

    def inverse(self) -> RingElement:
        b0, b1, b2 = self.to_crt()
        return RingElement.from_crt((b0.inv(), b1.inv(), b2.inv()))

    def sigma(self, twist: int = 1) -> RingElement:
        """Componentwise Theta^twist."""
        return RingElement(self.a.frobenius(twist), self.b.frobenius(twist), self.c.frobenius(twist))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def __str__(self) -> str:
        parts = []
        for coeff, mono in ((self.a, ""), (self.b, "v"), (self.c, "v^2")):
            if coeff.is_zero():
                continue
            s = str(coeff)
            if mono:
                s = mono if s == "1" else (f"{s}{mono}" if re.fullmatch(r"\d+", s) else f"({s}){mono}")
            parts.append(s)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"RingElement({self})"


def zeta(field: GF) -> FieldElement:
    """The prime-field inverse of 2."""
    return field(pow(2, -1, field.p))


def idempotents(field: GF) -> tuple[RingElement, RingElement, RingElement]:
    z = zeta(field)
    one, zero = field.one, field.zero
    eta0 = RingElement(one, zero, -one)
    eta1 = RingElement(zero, z, z)
    eta2 = RingElement(zero, -z, z)
    return eta0, eta1, eta2


def ring_elements(field: GF) -> Iterator[RingElement]:
    for a in field:
        for b in field:
            for c in field:
                yield RingElement(a, b, c)


def parse_ring_element(field: GF, text: str) -> RingElement:
    """Parse forms like ``1-2v^2``, ``2v^2-1``, ``-1``, ``(t)v + 3``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty ring element")
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and s[i - 1] not in "^":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    acc = [field.zero, field.zero, field.zero]
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        mt = re.fullmatch(r"(.*?)v(\^2)?", body)
        if mt:
            power = 2 if mt.group(2) else 1
            cs = mt.group(1).strip("*")
            if cs.startswith("(") and cs.endswith(")"):
                cs = cs[1:-1]
            coeff = field.parse(cs) if cs else field.one
        else:
            power = 0
            coeff = field.parse(body.strip("()"))
        acc[power] = acc[power] + (coeff if sign > 0 else -coeff)
    return RingElement(*acc)
