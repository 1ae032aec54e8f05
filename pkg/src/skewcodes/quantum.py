"""Dual containment, CSS parameters and searches for quantum codes.

A skew constacyclic code over R with component generators f_i (lambda_i = +-1)
contains its dual iff ``x^n - lambda_i`` right-divides ``h_i* h_i`` for each i,
where ``x^n - lambda_i = h_i f_i``.  A dual-containing [3n, k, d] Gray image then
yields a quantum code [[3n, 2k - 3n, d]] by the CSS construction.
"""

from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .code import LinearCode, RCode, assemble_r_code, contains, dual, from_skew_generator
from .distance import DEFAULT_D_MAX, DistanceCertificate, min_distance_from_parity
from .field import DEFAULT_ENUMERATION_BOUND, GF, FieldElement
from .gray import GrayMatrix, gray_code, gray_positions
from .ring import RingElement
from .skewpoly import (
    SkewPoly,
    enumerate_monic_right_divisors,
    format_coefficient_string,
    is_central_modulus,
    right_divmod,
    skew_reciprocal,
)

__all__ = [
    "QuantumError",
    "DualContainmentCheck",
    "QuantumParams",
    "QuantumCodeRecord",
    "dual_containment_check",
    "dual_containing",
    "r_dual_containing",
    "css_parameters",
    "singleton_slack",
    "gray_parity_check",
    "build_record",
    "search",
    "records_to_csv",
    "format_records",
]


class QuantumError(ValueError):
    pass


@dataclass(frozen=True)
class DualContainmentCheck:
    """Intermediate quantities of the polynomial dual-containment test."""

    f: SkewPoly
    h: SkewPoly
    h_star: SkewPoly
    product: SkewPoly
    quotient: SkewPoly
    remainder: SkewPoly

    @property
    def holds(self) -> bool:
        return self.remainder.is_zero()


def _require_pm_one(lam: FieldElement) -> None:
    if not (lam == 1 or lam == -1):
        raise QuantumError(f"lambda must be 1 or -1, got {lam}")


def dual_containment_check(f: SkewPoly, n: int, lam, twist: int | None = None) -> DualContainmentCheck:
    field = f.field
    lam = field(lam)
    twist = f.twist if twist is None else twist
    _require_pm_one(lam)
    if not is_central_modulus(field, n, lam, twist):
        raise QuantumError(f"x^{n} - ({lam}) is not central for twist {twist}")
    target = SkewPoly.binomial(field, n, lam, twist)
    h, r = right_divmod(target, f)
    if not r.is_zero():
        raise QuantumError(f"{f} does not right-divide x^{n} - ({lam})")
    h_star = skew_reciprocal(h)
    prod = h_star * h
    quot, rem = right_divmod(prod, target)
    return DualContainmentCheck(f, h, h_star, prod, quot, rem)


def dual_containing(f: SkewPoly, n: int, lam, twist: int | None = None) -> bool:
    return dual_containment_check(f, n, lam, twist).holds


def r_dual_containing(
    fs: Sequence[SkewPoly],
    n: int,
    lambdas: Sequence,
    twist: int | None = None,
    cross_check: bool = True,
) -> bool:
    """Polynomial criterion on all three components.

    With ``cross_check`` the matrix-level test ``dual(A_i) <= A_i`` is run as
    well and any disagreement raises, since it would be an arithmetic bug.
    """
    verdicts = [dual_containing(f, n, lam, twist) for f, lam in zip(fs, lambdas)]
    if cross_check:
        for f, lam, v in zip(fs, lambdas, verdicts):
            A = from_skew_generator(f, n, lam)
            if contains(A, dual(A)) != v:
                raise AssertionError(f"polynomial and matrix criteria disagree for {f}")
    return all(verdicts)


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int | None = None

    def __str__(self) -> str:
        base = f"[[{self.n},{self.k},{self.d}]]"
        return f"{base}_{self.q}" if self.q else base

    @property
    def slack(self) -> int:
        return singleton_slack(self)

    @property
    def is_mds(self) -> bool:
        return self.slack == 0


def css_parameters(n3: int, k: int, d: int, q: int | None = None) -> QuantumParams:
    """[[n3, 2k - n3, d]] from a dual-containing [n3, k, d] code."""
    if 2 * k < n3:
        raise QuantumError(f"2k = {2 * k} < n = {n3}: dual containment impossible")
    return QuantumParams(n3, 2 * k - n3, d, q)


def singleton_slack(params: QuantumParams | tuple[int, int, int]) -> int:
    """(n + 2) - (2d + k); zero for quantum MDS codes."""
    n, k, d = (params.n, params.k, params.d) if isinstance(params, QuantumParams) else params
    return (n + 2) - (2 * d + k)


@dataclass
class QuantumCodeRecord:
    p: int
    m: int
    n_ring: int
    delta: RingElement
    lambdas: tuple[FieldElement, FieldElement, FieldElement]
    f_polys: tuple[SkewPoly, SkewPoly, SkewPoly]
    gray_params: tuple[int, int, int | None]
    certificate: DistanceCertificate
    quantum: QuantumParams | None
    modulus: tuple[int, ...] = ()
    gray_matrix: list[list[str]] = dc_field(default_factory=list)
    gray_order: str = "blocks"

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def singleton_slack(self) -> int | None:
        return None if self.quantum is None else self.quantum.slack

    @property
    def is_mds(self) -> bool:
        return self.quantum is not None and self.quantum.is_mds

    def gray_text(self) -> str:
        n3, k, d = self.gray_params
        return f"[{n3},{k},{'?' if d is None else d}]"

    def row(self) -> dict[str, str]:
        """Flat text form with the columns of the published table."""
        return {
            "q": str(self.q),
            "n": str(self.n_ring),
            "delta": str(self.delta),
            "lambdas": ",".join("1" if l == 1 else "-1" for l in self.lambdas),
            "f0": format_coefficient_string(self.f_polys[0]),
            "f1": format_coefficient_string(self.f_polys[1]),
            "f2": format_coefficient_string(self.f_polys[2]),
            "gray": self.gray_text(),
            "quantum": str(self.quantum) if self.quantum else "",
            "slack": "" if self.quantum is None else str(self.singleton_slack),
            "mds": "yes" if self.is_mds else "no",
        }


def gray_parity_check(
    field: GF, parity: Sequence[np.ndarray], M: GrayMatrix, n: int, order: str = "blocks"
) -> np.ndarray:
    """Parity-check matrix of psi(eta0 A0 + eta1 A1 + eta2 A2) from the H_i.

    A Gray word has blocks ``w_c = sum_i M[i,c] a_i``, so
    ``a_i = sum_c Minv[c,i] w_c`` and the checks for component i place
    ``Minv[c,i] * H_i`` in block c.
    """
    Minv = linalg.inverse(field, M.entries)
    return np.vstack([_component_checks(field, H, i, Minv, n, order) for i, H in enumerate(parity)])


def _component_checks(field: GF, H: np.ndarray, i: int, Minv: np.ndarray, n: int, order: str) -> np.ndarray:
    pos = gray_positions(n, order)
    out = np.zeros((H.shape[0], 3 * n), dtype=np.int64)
    for c in range(3):
        out[:, pos[c]] = field.mul_table[int(Minv[c, i]), H]
    return out


def _lambdas_of(delta: RingElement) -> tuple[FieldElement, FieldElement, FieldElement]:
    lams = tuple(delta.to_crt())
    for lam in lams:
        if not (lam == 1 or lam == -1):
            raise QuantumError(f"CRT coordinates of delta must be +-1, got {', '.join(map(str, lams))}")
    return lams  # type: ignore[return-value]


def _check_record(rec: QuantumCodeRecord) -> None:
    n3, k, _ = rec.gray_params
    if k != 3 * rec.n_ring - sum(int(f.degree) for f in rec.f_polys):
        raise AssertionError("Gray dimension disagrees with generator degrees")
    if rec.quantum is not None and rec.quantum.slack < 0:
        raise AssertionError(f"quantum Singleton bound violated by {rec.quantum} ({rec.f_polys})")


def build_record(
    field: GF,
    n: int,
    delta: RingElement,
    f_polys: Sequence[SkewPoly],
    M: GrayMatrix,
    order: str = "blocks",
    d_max: int = DEFAULT_D_MAX,
) -> tuple[QuantumCodeRecord, RCode, LinearCode]:
    """Construct, test and certify one code; returns the record, the R-code and psi(C)."""
    lambdas = _lambdas_of(delta)
    comps = [from_skew_generator(f, n, lam) for f, lam in zip(f_polys, lambdas)]
    C = assemble_r_code(*comps, f_polys=tuple(f_polys), lambdas=lambdas)
    G = gray_code(C, M, order)
    cert = min_distance_from_parity(field, G.par, d_max=d_max)
    quantum = None
    if cert.d is not None and r_dual_containing(f_polys, n, lambdas) and 2 * G.k >= G.n:
        quantum = css_parameters(G.n, G.k, cert.d, field.q)
    rec = QuantumCodeRecord(
        p=field.p, m=field.m, n_ring=n, delta=delta, lambdas=lambdas, f_polys=tuple(f_polys),
        gray_params=(G.n, G.k, cert.d), certificate=cert, quantum=quantum,
        modulus=field.modulus, gray_matrix=M.rows_text(), gray_order=order,
    )
    _check_record(rec)
    return rec, C, G


# -- search --------------------------------------------------------------------

_WORKER: dict = {}


def _init_worker(p, m, modulus, blocks, d_max):
    _WORKER.update(field=GF(p, m, modulus), blocks=blocks, d_max=d_max)


def _certify(field: GF, blocks, triples, d_max) -> list[DistanceCertificate]:
    out = []
    for t in triples:
        H = np.vstack([blocks[i][j] for i, j in enumerate(t)])
        out.append(min_distance_from_parity(field, H, d_max=d_max))
    return out


def _certify_chunk(triples):
    w = _WORKER
    return _certify(w["field"], w["blocks"], triples, w["d_max"])


def _normalise_bounds(degree_bounds) -> list[tuple[int, int]]:
    if isinstance(degree_bounds, int):
        degree_bounds = (degree_bounds,) * 3
    out = []
    for b in degree_bounds:
        lo, hi = (0, b) if isinstance(b, int) else b
        if lo < 0 or hi < lo:
            raise QuantumError(f"bad degree bound {b}")
        out.append((lo, hi))
    if len(out) != 3:
        raise QuantumError("need one degree bound per component")
    return out


def search(
    field: GF,
    n: int,
    delta: RingElement,
    degree_bounds,
    M: GrayMatrix,
    order: str = "blocks",
    d_max: int = DEFAULT_D_MAX,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    twist: int = 1,
    workers: int = 1,
) -> list[QuantumCodeRecord]:
    """Every dual-containing divisor triple within the degree bounds, certified.

    ``degree_bounds`` is one int (upper bound for all components), three ints,
    or three ``(lo, hi)`` pairs.  Records are sorted by (n, -k, -d); the order
    does not depend on ``workers``.
    """
    lambdas = _lambdas_of(delta)
    bounds = _normalise_bounds(degree_bounds)
    for lam in lambdas:
        if not is_central_modulus(field, n, lam, twist):
            raise QuantumError(f"x^{n} - ({lam}) is not central for twist {twist}")
    Minv = linalg.inverse(field, M.entries)
    candidates: list[list[SkewPoly]] = []
    blocks: list[list[np.ndarray]] = []
    for i, (lam, (lo, hi)) in enumerate(zip(lambdas, bounds)):
        polys, checks = [], []
        for deg in range(lo, min(hi, n) + 1):
            try:
                found = enumerate_monic_right_divisors(field, n, lam, deg, twist, bound)
            except ValueError as exc:
                raise QuantumError(str(exc)) from None
            for f in found:
                if not dual_containing(f, n, lam, twist):
                    continue
                A = from_skew_generator(f, n, lam)
                if not contains(A, dual(A)):
                    raise AssertionError(f"polynomial and matrix criteria disagree for {f}")
                polys.append(f)
                checks.append(_component_checks(field, A.par, i, Minv, n, order))
        candidates.append(polys)
        blocks.append(checks)
    total = int(np.prod([len(c) for c in candidates]))
    if total > bound:
        raise QuantumError(f"{total} divisor triples exceed enumeration bound {bound}")
    triples = list(itertools.product(*(range(len(c)) for c in candidates)))
    # triples with k = 0 are skipped: every component is the zero code
    triples = [t for t in triples if sum(b[j].shape[0] for b, j in zip(blocks, t)) < 3 * n]
    if workers > 1 and len(triples) > 1:
        size = -(-len(triples) // (4 * workers))
        chunks = [triples[s : s + size] for s in range(0, len(triples), size)]
        with ProcessPoolExecutor(
            workers, initializer=_init_worker, initargs=(field.p, field.m, field.modulus, blocks, d_max)
        ) as pool:
            certs = [c for part in pool.map(_certify_chunk, chunks) for c in part]
    else:
        certs = _certify(field, blocks, triples, d_max)

    records = []
    m_text = M.rows_text()
    for t, cert in zip(triples, certs):
        fs = tuple(candidates[i][j] for i, j in enumerate(t))
        n3, k = 3 * n, cert.k
        quantum = css_parameters(n3, k, cert.d, field.q) if cert.d is not None else None
        rec = QuantumCodeRecord(
            p=field.p, m=field.m, n_ring=n, delta=delta, lambdas=lambdas, f_polys=fs,
            gray_params=(n3, k, cert.d), certificate=cert, quantum=quantum,
            modulus=field.modulus, gray_matrix=m_text, gray_order=order,
        )
        _check_record(rec)
        records.append(rec)
    records.sort(key=lambda r: (r.n_ring, -r.gray_params[1], -(r.certificate.d or r.certificate.lower_bound)))
    return records


# -- output --------------------------------------------------------------------

COLUMNS = ("q", "n", "delta", "lambdas", "f0", "f1", "f2", "gray", "quantum", "slack", "mds")


def records_to_csv(records: Iterable[QuantumCodeRecord], out: io.TextIOBase | None = None) -> str:
    buf = io.StringIO() if out is None else out
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for rec in records:
        w.writerow(rec.row())
    return buf.getvalue() if out is None else ""


def format_records(records: Iterable[QuantumCodeRecord]) -> str:
    """Aligned text table."""
    rows = [dict(zip(COLUMNS, COLUMNS))] + [r.row() for r in records]
    widths = {c: max(len(r[c]) for r in rows) for c in COLUMNS}
    return "\n".join("  ".join(r[c].ljust(widths[c]) for c in COLUMNS).rstrip() for r in rows)
