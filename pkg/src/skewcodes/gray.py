"""Gray map R^n -> F_q^{3n} given by an invertible 3x3 matrix on CRT coordinates.

Each ring coordinate r_j maps to ``(beta0, beta1, beta2) M``.  With the default
``blocks`` ordering the image is laid out as three sections of length n (all
first components, then all second, then all third), so a skew constacyclic
shift applied inside each section corresponds to the shift on R^n whenever the
twist constant is a scalar and M is fixed by the automorphism.  ``interleaved``
keeps the three symbols of each ring coordinate adjacent; both orderings differ
by a fixed coordinate permutation and give equal distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .code import LinearCode, RCode, tau_shift, tau_shift_rows
from .field import GF, FieldElement
from .ring import RingElement

__all__ = [
    "GrayMatrix",
    "PRESETS",
    "preset",
    "gray_map",
    "gray_code",
    "check_orthogonality",
    "quasi_twist",
    "quasi_twist_rows",
    "gray_positions",
    "components_of",
    "transported_shift_rows",
]

GRAY_ORDERS = ("blocks", "interleaved")

# Rows of the matrices, keyed by name; entries are field-element strings.
PRESETS: dict[str, tuple[tuple[int, int], list[list[str]]]] = {
    "example1-5-2": ((5, 2), [["3", "2", "1"], ["3", "4", "3"], ["4", "3", "2"]]),
    "table-3-2": ((3, 2), [["t^2", "2", "t"], ["2", "t", "t^2"], ["t", "t^2", "2"]]),
    "table-7-2": ((7, 2), [["1", "6", "3"], ["4", "1", "6"], ["6", "3", "6"]]),
    "table-11-2": ((11, 2), [["7", "4", "2"], ["9", "7", "4"], ["4", "2", "4"]]),
    "table-13-2": ((13, 2), [["9", "4", "2"], ["11", "9", "4"], ["4", "2", "4"]]),
}

DEFAULT_PRESET = {(5, 2): "example1-5-2", (3, 2): "table-3-2", (7, 2): "table-7-2",
                  (11, 2): "table-11-2", (13, 2): "table-13-2"}


def _det3(field: GF, M: np.ndarray) -> int:
    add, sub, mul = field.ints.add, field.ints.sub, field.ints.mul
    m = M.tolist()

    def minor(r0, r1, c0, c1):
        return sub[mul[m[r0][c0]][m[r1][c1]]][mul[m[r0][c1]][m[r1][c0]]]

    t0 = mul[m[0][0]][minor(1, 2, 1, 2)]
    t1 = mul[m[0][1]][minor(1, 2, 0, 2)]
    t2 = mul[m[0][2]][minor(1, 2, 0, 1)]
    return add[sub[t0][t1]][t2]


@dataclass(frozen=True)
class GrayMatrix:
    field: GF
    entries: np.ndarray  # 3x3 index matrix
    alpha: FieldElement | None = None

    @classmethod
    def from_rows(cls, field: GF, rows: Sequence[Sequence]) -> GrayMatrix:
        M = linalg.as_matrix(field, rows)
        if M.shape != (3, 3):
            raise ValueError(f"Gray matrix must be 3x3, got {M.shape}")
        if _det3(field, M) == 0:
            raise ValueError("Gray matrix is singular")
        M.setflags(write=False)
        obj = cls(field, M)
        object.__setattr__(obj, "alpha", check_orthogonality(obj))
        return obj

    @classmethod
    def identity(cls, field: GF) -> GrayMatrix:
        return cls.from_rows(field, np.eye(3, dtype=np.int64))

    def row(self, i: int) -> np.ndarray:
        return self.entries[i]

    def rows_text(self) -> list[list[str]]:
        return [[self.field.format(int(x)) for x in row] for row in self.entries]

    def is_sigma_fixed(self, twist: int = 1) -> bool:
        frob = self.field.frobenius_table(twist % self.field.m)
        return bool((frob[self.entries] == self.entries).all())

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(r) for r in self.rows_text()) + "]"


def preset(name: str, field: GF) -> GrayMatrix:
    try:
        (p, m), rows = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown Gray matrix preset {name!r}; known: {sorted(PRESETS)}") from None
    if (field.p, field.m) != (p, m):
        raise ValueError(f"preset {name!r} is for F_{p}^{m}, not F_{field.q}")
    return GrayMatrix.from_rows(field, [[field.parse(x) for x in r] for r in rows])


def check_orthogonality(M: GrayMatrix) -> FieldElement | None:
    """Return alpha if ``M M^T = alpha I`` with alpha != 0, else None."""
    field = M.field
    P = linalg.matmul(field, M.entries, M.entries.T)
    a = int(P[0, 0])
    if a == 0:
        return None
    if (np.diag(P) == a).all() and not (P - np.diag(np.diag(P))).any():
        return field.from_index(a)
    return None


def gray_positions(n: int, order: str = "blocks") -> np.ndarray:
    """``pos[c, j]``: output position of component c of ring coordinate j."""
    if order not in GRAY_ORDERS:
        raise ValueError(f"gray_order must be one of {GRAY_ORDERS}")
    c = np.arange(3)[:, None]
    j = np.arange(n)[None, :]
    return c * n + j if order == "blocks" else 3 * j + c


def gray_map(word: Sequence[RingElement], M: GrayMatrix, order: str = "blocks") -> list[FieldElement]:
    """psi: R^n -> F_q^{3n}."""
    field = M.field
    n = len(word)
    pos = gray_positions(n, order)
    out = [field.zero] * (3 * n)
    Ment = [[field.from_index(int(x)) for x in row] for row in M.entries]
    for j, r in enumerate(word):
        beta = list(r.to_crt())
        for c in range(3):
            out[pos[c, j]] = beta[0] * Ment[0][c] + beta[1] * Ment[1][c] + beta[2] * Ment[2][c]
    return out


def gray_code(C: RCode, M: GrayMatrix, order: str = "blocks") -> LinearCode:
    """The F_q-linear code psi(C) of length 3n.

    The image of ``eta_i * a`` (a in A_i) has component c of coordinate j equal
    to ``a_j * M[i, c]``, so the generator stacks ``A_i.gen`` scaled by row i of M.
    """
    field = M.field
    if C.field != field:
        raise ValueError("Gray matrix and code use different fields")
    n = C.n
    pos = gray_positions(n, order)
    blocks = []
    for i, A in enumerate(C.components):
        if A.k == 0:
            continue
        G = np.zeros((A.k, 3 * n), dtype=np.int64)
        for c in range(3):
            G[:, pos[c]] = field.mul_table[int(M.entries[i, c]), A.gen]
        blocks.append(G)
    gen = np.vstack(blocks) if blocks else np.zeros((0, 3 * n), dtype=np.int64)
    return LinearCode(field, gen, n=3 * n)


def quasi_twist(word: Sequence, s: int, t: int, lam, twist: int = 1) -> list:
    """Apply the skew constacyclic shift to each of the ``t`` consecutive sections of length ``s``."""
    if len(word) != s * t:
        raise ValueError(f"word length {len(word)} is not {s}*{t}")
    out: list = []
    for i in range(t):
        out.extend(tau_shift(word[i * s : (i + 1) * s], lam, twist))
    return out


def quasi_twist_rows(field: GF, words: np.ndarray, s: int, t: int, lam, twist: int = 1) -> np.ndarray:
    W = np.atleast_2d(np.asarray(words, dtype=np.int64))
    if W.shape[1] != s * t:
        raise ValueError(f"word length {W.shape[1]} is not {s}*{t}")
    return np.hstack([tau_shift_rows(field, W[:, i * s : (i + 1) * s], lam, twist) for i in range(t)])


def components_of(field: GF, words: np.ndarray, M: GrayMatrix, n: int, order: str = "blocks") -> np.ndarray:
    """Inverse Gray map on index rows: returns shape (3, rows, n) of CRT components a_i."""
    W = np.atleast_2d(np.asarray(words, dtype=np.int64))
    pos = gray_positions(n, order)
    blocks = [W[:, pos[c]] for c in range(3)]
    Minv = linalg.inverse(field, M.entries)
    add, mul = field.add_table, field.mul_table
    out = np.zeros((3,) + blocks[0].shape, dtype=np.int64)
    for i in range(3):
        for c in range(3):
            out[i] = add[out[i], mul[int(Minv[c, i]), blocks[c]]]
    return out


def transported_shift_rows(
    field: GF, words: np.ndarray, M: GrayMatrix, n: int, lambdas, order: str = "blocks", twist: int = 1
) -> np.ndarray:
    """``psi o tau o psi^-1`` on Gray words, tau the skew delta-constacyclic shift on R^n.

    In CRT coordinates tau acts on component i as the skew lambda_i-shift, so the
    image is rebuilt from the shifted components.
    """
    A = components_of(field, words, M, n, order)
    shifted = [tau_shift_rows(field, A[i], lam, twist) for i, lam in enumerate(lambdas)]
    pos = gray_positions(n, order)
    add, mul = field.add_table, field.mul_table
    out = np.zeros((A.shape[1], 3 * n), dtype=np.int64)
    for c in range(3):
        acc = np.zeros_like(shifted[0])
        for i in range(3):
            acc = add[acc, mul[int(M.entries[i, c]), shifted[i]]]
        out[:, pos[c]] = acc
    return out
