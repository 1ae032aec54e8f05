"""Linear codes over F_q and over R via their CRT components.

Codewords are row vectors; ``c H^T = 0`` for the parity-check matrix ``H``.
A code over R is held as three F_q-codes ``(A0, A1, A2)`` with
``C = eta0 A0 + eta1 A1 + eta2 A2`` (direct sum), so every question about C
is answered componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .field import GF, FieldElement
from .ring import RingElement, idempotents
from .skewpoly import SkewPoly, is_central_modulus, right_divmod

__all__ = [
    "CodeError",
    "LinearCode",
    "RCode",
    "from_skew_generator",
    "dual",
    "contains",
    "assemble_r_code",
    "r_dual",
    "tau_shift",
    "tau_shift_rows",
]


class CodeError(ValueError):
    pass


class LinearCode:
    """A linear [n, k] code over a ``GF``.

    ``gen`` is a full-rank k x n index matrix; ``par`` is an (n-k) x n basis of
    the dual, computed once at construction.
    """

    def __init__(self, field: GF, gen, n: int | None = None):
        self.field = field
        G = linalg.as_matrix(field, gen, ncols=n)
        if n is None:
            n = G.shape[1]
        if G.shape[1] != n:
            raise CodeError(f"generator has {G.shape[1]} columns, expected {n}")
        r = linalg.rank(field, G) if G.size else 0
        if r < G.shape[0]:
            G = linalg.rref(field, G)[0] if r else np.zeros((0, n), dtype=np.int64)
        self.n = n
        self.k = G.shape[0]
        self.gen = G
        self.gen.setflags(write=False)
        self.par = linalg.nullspace(field, G, ncols=n)
        self.par.setflags(write=False)

    @classmethod
    def from_parity(cls, field: GF, par, n: int | None = None) -> LinearCode:
        """Code with the given parity-check rows (rank-reduced if needed)."""
        H = linalg.as_matrix(field, par, ncols=n)
        n = H.shape[1] if n is None else n
        if H.shape[0] and linalg.rank(field, H) < H.shape[0]:
            H = linalg.rref(field, H)[0]
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = n
        obj.gen = linalg.nullspace(field, H, ncols=n)
        obj.gen.setflags(write=False)
        obj.k = obj.gen.shape[0]
        obj.par = H
        obj.par.setflags(write=False)
        return obj

    @classmethod
    def full(cls, field: GF, n: int) -> LinearCode:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, field: GF, n: int) -> LinearCode:
        return cls(field, np.zeros((0, n), dtype=np.int64), n=n)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over F_{self.field.q})"

    def syndrome(self, word) -> np.ndarray:
        w = linalg.as_matrix(self.field, word if isinstance(word, np.ndarray) else [word])
        if self.par.shape[0] == 0:
            return np.zeros((w.shape[0], 0), dtype=np.int64)
        return linalg.matmul(self.field, w, self.par.T)

    def contains_word(self, word) -> bool:
        return not self.syndrome(word).any()

    def contains_words(self, words: np.ndarray) -> np.ndarray:
        """Row-wise membership for a 2-D index array."""
        if self.par.shape[0] == 0:
            return np.ones(words.shape[0], dtype=bool)
        return ~linalg.matmul(self.field, words, self.par.T).any(axis=1)

    def encode(self, message) -> np.ndarray:
        msg = linalg.as_matrix(self.field, message if isinstance(message, np.ndarray) else [message])
        return linalg.matmul(self.field, msg, self.gen)

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        if self.k == 0:
            return np.zeros(self.n, dtype=np.int64)
        msg = rng.integers(0, self.field.q, size=(1, self.k))
        return linalg.matmul(self.field, msg, self.gen)[0]

    def codewords(self, bound: int = 10**6) -> Iterator[np.ndarray]:
        if self.field.q**self.k > bound:
            raise CodeError(f"{self.field.q}^{self.k} codewords exceed bound {bound}")
        for msg in product(range(self.field.q), repeat=self.k):
            if self.k == 0:
                yield np.zeros(self.n, dtype=np.int64)
            else:
                yield linalg.combine(self.field, np.array(msg), self.gen)

    def same_as(self, other: LinearCode) -> bool:
        return self.n == other.n and self.k == other.k and contains(self, other)

    def is_self_orthogonal(self) -> bool:
        return contains(dual(self), self)

    def is_dual_containing(self) -> bool:
        return contains(self, dual(self))

    def export_text(self, which: str = "gen") -> str:
        """One row per line, space-separated field elements."""
        M = self.gen if which == "gen" else self.par
        return "\n".join(" ".join(self.field.format(int(x)) for x in row) for row in M)

    @classmethod
    def import_text(cls, field: GF, text: str) -> LinearCode:
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        return cls(field, [[field.parse(tok) for tok in row] for row in rows])


def dual(C: LinearCode) -> LinearCode:
    """Euclidean dual."""
    return LinearCode(C.field, C.par, n=C.n)


def contains(C: LinearCode, D: LinearCode) -> bool:
    """True iff every codeword of ``D`` lies in ``C``."""
    if C.n != D.n:
        raise CodeError("codes of different length")
    if D.k == 0:
        return True
    return bool(C.contains_words(D.gen).all())


def from_skew_generator(f: SkewPoly, n: int, lam, check: bool = True) -> LinearCode:
    """Skew (Theta^twist, lam)-constacyclic code generated by the right divisor ``f`` of x^n - lam.

    Row j is the coefficient vector of ``x^j * f`` reduced modulo x^n - lam, j < n - deg f.
    """
    field = f.field
    lam = field(lam)
    if f.is_zero():
        raise CodeError("generator polynomial is zero")
    if not f.is_monic():
        raise CodeError(f"generator {f} is not monic")
    target = SkewPoly.binomial(field, n, lam, f.twist)
    if check:
        if not is_central_modulus(field, n, lam, f.twist):
            raise CodeError(f"x^{n} - {lam} is not central for twist {f.twist}")
        if not right_divmod(target, f)[1].is_zero():
            raise CodeError(f"{f} does not right-divide x^{n} - ({lam})")
    k = n - int(f.degree)
    rows = np.zeros((k, n), dtype=np.int64)
    for j in range(k):
        w = SkewPoly.monomial(field, j, 1, f.twist) * f
        if w.degree >= n:
            w = right_divmod(w, target)[1]
        idx = w.indices
        rows[j, : len(idx)] = idx
    code = LinearCode(field, rows, n=n)
    if code.k != k:
        raise CodeError("generator rows are not independent")
    return code


def tau_shift(word: Sequence, delta, twist: int = 1) -> list:
    """Skew constacyclic shift ``(sigma(delta c_{n-1}), sigma(c_0), ..., sigma(c_{n-2}))``.

    Works on sequences of ``FieldElement`` (sigma = Frobenius power) or
    ``RingElement`` (sigma applied componentwise).
    """
    def sig(x):
        return x.sigma(twist) if isinstance(x, RingElement) else x.frobenius(twist)

    word = list(word)
    if not word:
        return []
    return [sig(delta * word[-1])] + [sig(c) for c in word[:-1]]


def tau_shift_rows(field: GF, words: np.ndarray, lam, twist: int = 1) -> np.ndarray:
    """Vectorised ``tau_shift`` over rows of an index array (field scalars only)."""
    lam_i = field(lam).index
    frob = field.frobenius_table(twist % field.m)
    W = np.atleast_2d(np.asarray(words, dtype=np.int64))
    out = np.empty_like(W)
    out[:, 1:] = frob[W[:, :-1]]
    out[:, 0] = frob[field.mul_table[lam_i, W[:, -1]]]
    return out


@dataclass
class RCode:
    """``C = eta0*A0 + eta1*A1 + eta2*A2`` over R, with optional polynomial provenance."""

    components: tuple[LinearCode, LinearCode, LinearCode]
    f_polys: tuple[SkewPoly, SkewPoly, SkewPoly] | None = None
    lambdas: tuple[FieldElement, FieldElement, FieldElement] | None = None
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        ns = {A.n for A in self.components}
        if len(ns) != 1:
            raise CodeError(f"component lengths differ: {sorted(ns)}")
        fields = {A.field for A in self.components}
        if len(fields) != 1:
            raise CodeError("components over different fields")

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def field(self) -> GF:
        return self.components[0].field

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(A.k for A in self.components)  # type: ignore[return-value]

    @property
    def log_q_size(self) -> int:
        """|C| = q^(k0 + k1 + k2)."""
        return sum(self.dims)

    def cardinality(self) -> int:
        return self.field.q**self.log_q_size

    def generator_matrix(self) -> list[list[RingElement]]:
        """The eta-weighted stacked generator (display only)."""
        rows = []
        for eta, A in zip(idempotents(self.field), self.components):
            for row in A.gen:
                rows.append([eta.scale(self.field.from_index(int(x))) for x in row])
        return rows

    def contains_word(self, word: Sequence[RingElement]) -> bool:
        crt = [r.to_crt() for r in word]
        for i, A in enumerate(self.components):
            comp = np.array([[list(c)[i].index for c in crt]], dtype=np.int64)
            if not A.contains_word(comp):
                return False
        return True

    def word_from_components(self, a0, a1, a2) -> list[RingElement]:
        F = self.field
        return [
            RingElement.from_crt((F.from_index(int(x)), F.from_index(int(y)), F.from_index(int(z))))
            for x, y, z in zip(a0, a1, a2)
        ]

    def codewords(self, bound: int = 10**6) -> Iterator[list[RingElement]]:
        if self.cardinality() > bound:
            raise CodeError("too many codewords to enumerate")
        A0, A1, A2 = self.components
        for a0 in A0.codewords():
            for a1 in A1.codewords():
                for a2 in A2.codewords():
                    yield self.word_from_components(a0, a1, a2)

    def is_dual_containing(self) -> bool:
        return all(A.is_dual_containing() for A in self.components)

    def is_self_orthogonal(self) -> bool:
        return all(A.is_self_orthogonal() for A in self.components)


def assemble_r_code(A0: LinearCode, A1: LinearCode, A2: LinearCode, **provenance) -> RCode:
    return RCode((A0, A1, A2), **provenance)


def r_dual(C: RCode) -> RCode:
    """Componentwise dual; for skew constacyclic C the constants become lam_i^-1."""
    lambdas = tuple(l.inv() for l in C.lambdas) if C.lambdas else None
    return RCode(tuple(dual(A) for A in C.components), lambdas=lambdas)  # type: ignore[arg-type]
