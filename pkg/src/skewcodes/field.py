"""Exact arithmetic in F_{p^m} for odd primes p.

Elements are polynomials in a generator ``t`` over F_p, reduced modulo a monic
irreducible ``modulus``.  Every field object precomputes addition and
multiplication tables over the integer encoding ``sum(c_i * p**i)`` so that the
linear algebra layer can work on plain integer arrays.  Fields handled here are
tiny (q <= a few thousand), which keeps the q*q tables cheap.
"""

from __future__ import annotations

import re
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "FieldError",
    "GF",
    "FieldElement",
    "conway_polynomial",
    "is_irreducible",
    "monic_irreducibles",
]

MAX_TABLE_ORDER = 1500
DEFAULT_ENUMERATION_BOUND = 10**7


class FieldError(ValueError):
    """Raised for invalid field parameters or mixed-field arithmetic."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_mod(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` over F_p (ascending lists)."""
    a = [c % p for c in a]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm] + [0] * max(0, dm - len(a))


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    for code in range(p**d):
        low = []
        for _ in range(d):
            code, r = divmod(code, p)
            low.append(r)
        yield low + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not any(_poly_mod(list(poly), cand, p)[:d]):
                return False
    return True


def monic_irreducibles(p: int, m: int) -> list[list[int]]:
    """All monic irreducible polynomials of degree ``m`` over F_p, ascending coefficients."""
    return [f for f in _monic_polys(p, m) if is_irreducible(f, p)]


def _poly_powmod(base: list[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1] + [0] * (len(mod) - 2)
    b = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, b, p), mod, p)
        b = _poly_mod(_poly_mul(b, b, p), mod, p)
        e >>= 1
    return result


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _is_primitive(poly: Sequence[int], p: int) -> bool:
    m = len(poly) - 1
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    t = [0, 1] if m > 1 else [(-poly[0]) % p]
    for r in _prime_factors(order):
        if _poly_powmod(t, order // r, poly, p) == one:
            return False
    return True


@lru_cache(maxsize=None)
def _least_primitive_root(p: int) -> int:
    for g in range(1, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_factors(p - 1)):
            return g
    raise FieldError(f"no primitive root mod {p}")


@lru_cache(maxsize=None)
def conway_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Conway polynomial of degree ``m`` <= 2 over F_p (ascending coefficients).

    Degree 1 is ``x - g`` for the least primitive root ``g``.  Degree 2 is the
    primitive quadratic whose constant term is ``g`` (the norm compatibility
    condition) and which is least in Conway's alternating-sign order.
    """
    g = _least_primitive_root(p)
    if m == 1:
        return ((-g) % p, 1)
    if m != 2:
        raise FieldError("Conway polynomials are only derived for m <= 2; pass a modulus explicitly")
    for key in range(p):
        c1 = (-key) % p
        poly = (g, c1, 1)
        if is_irreducible(poly, p) and _is_primitive(poly, p):
            return poly
    raise FieldError(f"no Conway polynomial found for p={p}, m=2")


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:(t)(?:\^(\d+))?)?")


class GF:
    """The field F_{p^m} = F_p[t]/(modulus).

    ``modulus`` is an ascending, monic coefficient list of degree ``m``; when
    omitted the Conway polynomial is used (m <= 2).
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not _is_prime(p) or p == 2:
            raise FieldError(f"p must be an odd prime, got {p}")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = conway_polynomial(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}: {list(modulus)}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        if self.q > MAX_TABLE_ORDER:
            raise FieldError(f"field order {self.q} exceeds supported bound {MAX_TABLE_ORDER}")
        self.modulus = modulus
        self._build_tables()
        self.elements = tuple(FieldElement(self, i) for i in range(self.q))
        self.zero = self.elements[0]
        self.one = self.elements[1]

    # -- construction helpers -------------------------------------------------

    def _coeffs_of(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            index, r = divmod(index, self.p)
            out.append(r)
        return tuple(out)

    def _index_of(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        coeffs = np.array([self._coeffs_of(i) for i in range(q)], dtype=np.int64)
        weights = p ** np.arange(self.m, dtype=np.int64)
        add = (coeffs[:, None, :] + coeffs[None, :, :]) % p
        self.add_table = (add @ weights).astype(np.int64)
        neg = (-coeffs) % p
        self.neg_table = (neg @ weights).astype(np.int64)
        self.sub_table = self.add_table[:, self.neg_table]
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            ca = coeffs[a].tolist()
            for b in range(a, q):
                prod = _poly_mod(_poly_mul(ca, coeffs[b].tolist(), p), self.modulus, p)
                v = self._index_of(prod)
                mul[a, b] = mul[b, a] = v
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        self.inv_table = inv
        self._coeff_array = coeffs

    # -- public API -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GF({self.p}, {self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __call__(self, value: int | str | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce an integer (prime-field value), a string like ``4t+1``, or a coefficient list."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return self.elements[value.index]
        if isinstance(value, (int, np.integer)):
            return self.elements[int(value) % self.p]
        if isinstance(value, str):
            return self.parse(value)
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs = [c % self.p for c in coeffs] + [0] * (self.m - len(coeffs))
        return self.elements[self._index_of(coeffs)]

    def from_index(self, index: int) -> FieldElement:
        return self.elements[index]

    @property
    def gen(self) -> FieldElement:
        """The class of ``t``."""
        return self([0, 1])

    def parse(self, text: str) -> FieldElement:
        """Parse a polynomial in ``t`` such as ``12t+11``, ``3t``, ``t^2``, ``-1``."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise FieldError("empty field element")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            mt = _TERM.match(s, pos)
            if mt is None or mt.end() == pos:
                raise FieldError(f"cannot parse field element {text!r}")
            sign, num, var, exp = mt.groups()
            if not num and not var:
                raise FieldError(f"cannot parse field element {text!r}")
            c = int(num) if num else 1
            if sign == "-":
                c = -c
            e = (int(exp) if exp else 1) if var else 0
            coeffs[e] = coeffs.get(e, 0) + c
            pos = mt.end()
            if pos < len(s) and s[pos] not in "+-":
                raise FieldError(f"cannot parse field element {text!r}")
        dense = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            dense[e] = c
        return self(dense)

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.q

    def enumerate(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[FieldElement]:
        if self.q > bound:
            raise FieldError(f"field order {self.q} exceeds enumeration bound {bound}")
        return iter(self.elements)

    def prime_subfield(self) -> list[FieldElement]:
        return [self.elements[i] for i in range(self.p)]

    def automorphism_order(self, k: int) -> int:
        """Order of Theta^k, Theta the Frobenius map."""
        return self.m // gcd(self.m, k)

    @lru_cache(maxsize=None)
    def frobenius_table(self, k: int) -> np.ndarray:
        """Index map a -> a^(p^k), built by repeated p-th powering."""
        k %= self.m
        table = np.arange(self.q, dtype=np.int64)
        for _ in range(k):
            table = np.array([self._pow_index(int(a), self.p) for a in table], dtype=np.int64)
        table.setflags(write=False)
        return table

    def _pow_index(self, a: int, e: int) -> int:
        result, base = 1, a
        mul = self.ints.mul
        while e:
            if e & 1:
                result = mul[result][base]
            base = mul[base][base]
            e >>= 1
        return result

    @cached_property
    def ints(self) -> "_IntTables":
        return _IntTables(self)

    def format(self, index: int) -> str:
        return _format_coeffs(self._coeffs_of(index))

    def vector(self, values: Iterable) -> np.ndarray:
        """Integer-encoded numpy vector from field elements / ints / strings."""
        return np.array([self(v).index for v in values], dtype=np.int64)


class _IntTables:
    """Plain-list copies of the tables for tight scalar loops."""

    def __init__(self, field: GF):
        self.add = field.add_table.tolist()
        self.sub = field.sub_table.tolist()
        self.mul = field.mul_table.tolist()
        self.neg = field.neg_table.tolist()
        self.inv = field.inv_table.tolist()


def _format_coeffs(coeffs: Sequence[int]) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            var = "t" if e == 1 else f"t^{e}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"


class FieldElement:
    """An element of a ``GF``; instances are canonical per field, so ``is`` works."""

    __slots__ = ("field", "index")

    def __init__(self, field: GF, index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field._coeffs_of(self.index)

    def _check(self, other: object) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("mismatched fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field(int(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self.field.elements[self.field.ints.add[self.index][o.index]]

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self.field.elements[self.field.ints.sub[self.index][o.index]]

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return self.field.elements[self.field.ints.neg[self.index]]

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self.field.elements[self.field.ints.mul[self.index][o.index]]

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        if self.index == 0:
            raise ZeroDivisionError("inversion of zero in " + repr(self.field))
        return self.field.elements[self.field.ints.inv[self.index]]

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        return self.field.elements[self.field._pow_index(self.index, e)]

    def frobenius(self, k: int = 1) -> FieldElement:
        """Theta^k(a) = a^(p^k)."""
        return self.field.elements[self.field.frobenius_table(k % self.field.m)[self.index]]

    def is_zero(self) -> bool:
        return self.index == 0

    def __bool__(self) -> bool:
        return self.index != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.index == other.index and self.field == other.field
        if isinstance(other, (int, np.integer)):
            return self.index == self.field(int(other)).index
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.index, self.field.q))

    def __str__(self) -> str:
        return self.field.format(self.index)

    def __repr__(self) -> str:
        return f"<{self} in F_{self.field.q}>"
