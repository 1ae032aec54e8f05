"""The skew polynomial ring F_q[x; Theta^k].

Multiplication follows ``(a x^i)(b x^j) = a Theta^{k i}(b) x^{i+j}``.  Division
is always *right* division: ``f = q * g + r`` with the divisor on the right,
which is the orientation used by generator polynomials of skew constacyclic
codes (``x^n - lam = h * g``).
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

from .field import DEFAULT_ENUMERATION_BOUND, GF, FieldElement

__all__ = [
    "SkewPoly",
    "NEG_INF",
    "is_central_modulus",
    "enumerate_monic_right_divisors",
    "parse_poly",
    "parse_product",
    "skew_mul",
    "right_divmod",
    "right_divides",
    "skew_reciprocal",
    "format_coefficient_string",
]

NEG_INF = float("-inf")


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class SkewPoly:
    """Immutable element of F_q[x; Theta^twist].

    ``coeffs`` are ascending field elements with trailing zeros removed; the zero
    polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("field", "twist", "_c")

    def __init__(self, field: GF, coeffs: Iterable = (), twist: int = 1):
        self.field = field
        self.twist = twist % field.m if field.m > 1 else 0
        self._c = tuple(_trim([field(c).index for c in coeffs]))

    @classmethod
    def _raw(cls, field: GF, idx: list[int], twist: int) -> SkewPoly:
        obj = cls.__new__(cls)
        obj.field = field
        obj.twist = twist
        obj._c = tuple(_trim(idx))
        return obj

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff=1, twist: int = 1) -> SkewPoly:
        return cls(field, [0] * degree + [coeff], twist)

    @classmethod
    def binomial(cls, field: GF, n: int, lam, twist: int = 1) -> SkewPoly:
        """``x^n - lam``."""
        return cls(field, [-field(lam)] + [0] * (n - 1) + [1], twist)

    # -- basic accessors --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(self.field.elements[i] for i in self._c)

    @property
    def indices(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else NEG_INF

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self._c):
            return self.field.elements[self._c[i]]
        return self.field.zero

    @property
    def leading(self) -> FieldElement:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.field.elements[self._c[-1]]

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def _compatible(self, other: SkewPoly) -> None:
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.field != self.field or other.twist != self.twist:
            raise ValueError("skew polynomials live in different rings")

    def _coerce(self, other) -> SkewPoly:
        if isinstance(other, SkewPoly):
            self._compatible(other)
            return other
        return SkewPoly(self.field, [other], self.twist)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other) -> SkewPoly:
        o = self._coerce(other)
        add = self.field.ints.add
        a, b = self._c, o._c
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return SkewPoly._raw(self.field, [add[x][y] for x, y in zip(a, b)], self.twist)

    __radd__ = __add__

    def __neg__(self) -> SkewPoly:
        neg = self.field.ints.neg
        return SkewPoly._raw(self.field, [neg[x] for x in self._c], self.twist)

    def __sub__(self, other) -> SkewPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> SkewPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> SkewPoly:
        if isinstance(other, SkewPoly):
            return skew_mul(self, other)
        return skew_mul(self, self._coerce(other))

    def __rmul__(self, other) -> SkewPoly:
        return skew_mul(self._coerce(other), self)

    def __pow__(self, e: int) -> SkewPoly:
        out = SkewPoly(self.field, [1], self.twist)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.field == other.field and self.twist == other.twist and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._c, self.twist, self.field.q))

    def monic(self) -> SkewPoly:
        """Left-normalise by the inverse leading coefficient."""
        lead_inv = self.leading.inv()
        return SkewPoly(self.field, [lead_inv], self.twist) * self

    def sigma_power(self, j: int) -> SkewPoly:
        """Apply Theta^{twist*j} to every coefficient."""
        table = self.field.frobenius_table((self.twist * j) % self.field.m)
        return SkewPoly._raw(self.field, [int(table[c]) for c in self._c], self.twist)

    # -- division --------------------------------------------------------------

    def right_divmod(self, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
        return right_divmod(self, g)

    def __mod__(self, g: SkewPoly) -> SkewPoly:
        return right_divmod(self, g)[1]

    def __floordiv__(self, g: SkewPoly) -> SkewPoly:
        return right_divmod(self, g)[0]

    def skew_reciprocal(self) -> SkewPoly:
        return skew_reciprocal(self)

    # -- text ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e in range(len(self._c) - 1, -1, -1):
            c = self._c[e]
            if not c:
                continue
            cs = self.field.format(c)
            xs = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if e == 0:
                terms.append(cs)
            elif c == 1:
                terms.append(xs)
            elif re.fullmatch(r"\d+|\d*t(\^\d+)?", cs):
                terms.append(cs + xs)
            else:
                terms.append(f"({cs}){xs}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"SkewPoly({self}, F_{self.field.q}, twist={self.twist})"

    def coefficient_string(self) -> str:
        return format_coefficient_string(self)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Twisted product ``f * g``."""
    f._compatible(g)
    if not f._c or not g._c:
        return SkewPoly._raw(f.field, [], f.twist)
    field = f.field
    add, mul = field.ints.add, field.ints.mul
    out = [0] * (len(f._c) + len(g._c) - 1)
    gc = g._c
    for i, a in enumerate(f._c):
        if not a:
            continue
        frob = field.frobenius_table((f.twist * i) % field.m) if f.twist else None
        row = mul[a]
        for j, b in enumerate(gc):
            if b:
                if frob is not None:
                    b = int(frob[b])
                out[i + j] = add[out[i + j]][row[b]]
    return SkewPoly._raw(field, out, f.twist)


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = q * g + r`` and ``deg r < deg g``."""
    f._compatible(g)
    if not g._c:
        raise ZeroDivisionError("right division by the zero polynomial")
    field = f.field
    ints = field.ints
    sub, mul, inv = ints.sub, ints.mul, ints.inv
    m = field.m
    r = list(f._c)
    dg = len(g._c) - 1
    if len(r) - 1 < dg:
        return SkewPoly._raw(field, [], f.twist), f
    q = [0] * (len(r) - dg)
    gc = g._c
    for d in range(len(r) - 1, dg - 1, -1):
        a = r[d]
        if not a:
            continue
        shift = d - dg
        frob = field.frobenius_table((f.twist * shift) % m)
        tg = [int(frob[b]) for b in gc]
        c = mul[a][inv[tg[-1]]]
        q[shift] = c
        row = mul[c]
        for j, b in enumerate(tg):
            if b:
                r[shift + j] = sub[r[shift + j]][row[b]]
    return SkewPoly._raw(field, q, f.twist), SkewPoly._raw(field, r[:dg], f.twist)


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    """True iff ``f = q * g`` for some ``q``."""
    return right_divmod(f, g)[1].is_zero()


def skew_reciprocal(h: SkewPoly) -> SkewPoly:
    """``h*(x) = sum_j sigma^j(h_{k-j}) x^j`` with ``k = deg h``."""
    if h.is_zero():
        raise ValueError("skew reciprocal of the zero polynomial")
    field = h.field
    k = len(h._c) - 1
    out = []
    for j in range(k + 1):
        table = field.frobenius_table((h.twist * j) % field.m)
        out.append(int(table[h._c[k - j]]))
    return SkewPoly._raw(field, out, h.twist)


def is_central_modulus(field: GF, n: int, delta, twist: int = 1) -> bool:
    """Whether ``x^n - delta`` is central in F_q[x; Theta^twist]."""
    d = field(delta)
    return n % field.automorphism_order(twist) == 0 and d.frobenius(twist) == d


def enumerate_monic_right_divisors(
    field: GF,
    n: int,
    lam,
    degree: int,
    twist: int = 1,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> list[SkewPoly]:
    """All monic degree-``degree`` right divisors of ``x^n - lam``, in lexicographic order.

    Candidates are ordered by their low coefficients read from the constant term
    upward, each compared by integer encoding.
    """
    total = field.q**degree
    if total > bound:
        raise ValueError(f"{total} candidates exceed enumeration bound {bound}")
    if degree > n:
        return []
    target = SkewPoly.binomial(field, n, lam, twist)
    out = []
    for low in itertools.product(range(field.q), repeat=degree):
        g = SkewPoly._raw(field, list(low) + [1], target.twist)
        if right_divides(g, target):
            out.append(g)
    return out


# -- text formats --------------------------------------------------------------


def format_coefficient_string(f: SkewPoly) -> str:
    """Ascending coefficients, parenthesised unless a single digit: ``(3t+3)(2t+3)1``."""
    parts = []
    for c in f.coeffs:
        s = str(c)
        parts.append(s if len(s) == 1 else f"({s})")
    return "".join(parts) if parts else "0"


def _parse_coefficient_string(field: GF, text: str) -> list[FieldElement]:
    out, i = [], 0
    s = text.replace(" ", "")
    while i < len(s):
        ch = s[i]
        if ch == "(":
            j = s.find(")", i)
            if j < 0:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            out.append(field.parse(s[i + 1 : j]))
            i = j + 1
        elif ch.isdigit() or ch == "t":
            out.append(field.parse(ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in coefficient string {text!r}")
    return out


def _split_top_level(s: str) -> list[tuple[int, str]]:
    terms, depth = [], 0
    sign, start = (-1, 1) if s.startswith("-") else (1, 0)
    for i in range(start, len(s)):
        ch = s[i]
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and s[i - 1] != "^":
            terms.append((sign, s[start:i]))
            sign = 1 if ch == "+" else -1
            start = i + 1
    if s[start:]:
        terms.append((sign, s[start:]))
    return terms


_X_TERM = re.compile(r"^(.*?)x(?:\^\{?(\d+)\}?)?$")


def parse_poly(field: GF, text: str, twist: int = 1) -> SkewPoly:
    """Parse either the ascending coefficient string (``(3t+3)(2t+3)1``) or
    algebraic notation (``x^2 + (2t+3)x + 3t+3``, ``x^{12}-1``)."""
    s = text.replace(" ", "")
    if "x" not in s:
        return SkewPoly(field, _parse_coefficient_string(field, s), twist)
    coeffs: dict[int, FieldElement] = {}
    for sign, term in _split_top_level(s):
        mt = _X_TERM.match(term)
        if mt:
            cs, es = mt.groups()
            e = int(es) if es else 1
            cs = cs.strip("*")
            if cs.startswith("(") and cs.endswith(")"):
                cs = cs[1:-1]
            c = field.parse(cs) if cs else field.one
        else:
            e, c = 0, field.parse(term.strip("()"))
        if sign < 0:
            c = -c
        coeffs[e] = coeffs.get(e, field.zero) + c
    dense = [field.zero] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        dense[e] = c
    return SkewPoly(field, dense, twist)


def _outer_groups(s: str) -> list[str]:
    groups, depth, start = [], 0, None
    for i, ch in enumerate(s):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                groups.append(s[start : i + 1])
    return groups


def parse_product(field: GF, text: str, twist: int = 1) -> list[SkewPoly]:
    """Parse a printed factor list like ``(x^2 + t + 1)(x + 4t + 3)^2`` into factors, in order."""
    s = text.replace(" ", "")
    factors: list[SkewPoly] = []
    pos = 0
    for group in _outer_groups(s):
        start = s.index(group, pos)
        pos = start + len(group)
        power = 1
        mt = re.match(r"\^\{?(\d+)\}?", s[pos:])
        if mt:
            power = int(mt.group(1))
            pos += mt.end()
        f = parse_poly(field, group[1:-1], twist)
        factors.extend([f] * power)
    if not factors:
        raise ValueError(f"no parenthesised factors in {text!r}")
    return factors
