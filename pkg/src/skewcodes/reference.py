"""Published reference data and the routines that re-derive it.

``TABLE1`` holds the fourteen printed code rows and ``EXAMPLE1`` the worked
F_25 example.  Polynomials in the rows use the ascending coefficient-string
format (``(3t+3)(2t+3)1`` is x^2 + (2t+3)x + 3t+3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import reduce

from .code import contains, dual, from_skew_generator
from .distance import verify_certificate
from .field import GF, conway_polynomial, monic_irreducibles
from .gray import DEFAULT_PRESET, GrayMatrix, preset, transported_shift_rows
from .quantum import QuantumCodeRecord, QuantumError, build_record, css_parameters, dual_containment_check
from .ring import parse_ring_element
from .skewpoly import SkewPoly, parse_poly, parse_product, right_divides

__all__ = [
    "TableRow",
    "TABLE1",
    "EXAMPLE1",
    "RowReport",
    "Report",
    "candidate_moduli",
    "modulus_text",
    "reproduce_row",
    "reproduce_table",
    "verify_example1",
]


@dataclass(frozen=True)
class TableRow:
    index: int
    p: int
    n: int
    delta: str
    lambdas: tuple[int, int, int]
    f: tuple[str, str, str]
    gray: tuple[int, int, int]
    quantum: tuple[int, int, int]
    m: int = 2

    @property
    def q(self) -> int:
        return self.p**self.m

    def quantum_text(self) -> str:
        n, k, d = self.quantum
        return f"[[{n},{k},{d}]]_{self.q}"


def _row(i, p, n, delta, lambdas, f0, f1, f2, gray, quantum) -> TableRow:
    return TableRow(i, p, n, delta, lambdas, (f0, f1, f2), gray, quantum)


TABLE1: tuple[TableRow, ...] = (
    _row(1, 3, 12, "1", (1, 1, 1), "11", "(t)1", "(2t+1)1", (36, 33, 3), (36, 30, 3)),
    _row(2, 5, 6, "-1", (-1, -1, -1), "1(4t+3)1", "21", "31", (18, 14, 4), (18, 10, 4)),
    _row(3, 5, 10, "1", (1, 1, 1), "(3t+4)1", "1(t+3)1", "(3t+3)1", (30, 26, 3), (30, 22, 3)),
    _row(4, 5, 12, "1-2v^2", (1, -1, -1), "(3t+3)(2t+3)1", "(4t+3)1", "(3t+2)1", (36, 32, 3), (36, 28, 3)),
    _row(5, 7, 8, "1-2v^2", (1, -1, -1), "(t+3)1", "(5t+6)(2t+2)1", "(t+3)(3t+6)1", (24, 19, 4), (24, 14, 4)),
    _row(6, 7, 14, "2v^2-1", (-1, 1, 1), "(5t+4)1", "(t+3)1", "(2t+1)(3t)1", (42, 38, 3), (42, 34, 3)),
    _row(7, 7, 14, "2v^2-1", (-1, 1, 1), "(5t+4)1", "(t+3)1", "(2t+1)1", (42, 39, 2), (42, 36, 2)),
    _row(8, 7, 18, "1-2v^2", (1, -1, -1), "(3t+2)1", "(5t+2)1", "(6t)1", (54, 51, 3), (54, 48, 3)),
    _row(9, 11, 10, "1-2v^2", (1, -1, -1), "(5t+9)(9t+2)1", "(7t+4)1", "(3t+8)1", (30, 26, 3), (30, 22, 3)),
    _row(10, 11, 16, "1", (1, 1, 1), "(4t+3)1", "(10t+1)(9t+7)1", "(5t+8)(7t+4)1", (48, 43, 4), (48, 38, 4)),
    _row(11, 11, 20, "2v^2-1", (-1, 1, 1), "(7t+10)(4t+9)1", "(8t+7)1", "(2t+7)(t)1", (60, 55, 3), (60, 50, 3)),
    _row(12, 13, 4, "-1", (-1, -1, -1), "(12t+11)1", "(9t+6)1", "(t+6)1", (12, 9, 4), (12, 6, 4)),
    _row(13, 13, 6, "-1", (-1, -1, -1), "(t+11)1", "81", "(2t+8)1", (18, 15, 4), (18, 12, 4)),
    _row(14, 13, 8, "2v^2-1", (-1, 1, 1), "(2t+11)(7t+3)1", "(t+10)1", "(5t+4)1", (24, 20, 3), (24, 16, 3)),
)


# Worked example over F_25 with t^2 = t + 3; polynomials in algebraic form.
EXAMPLE1 = {
    "p": 5,
    "m": 2,
    "modulus": (2, 4, 1),  # t^2 - t - 3
    "n": 12,
    "delta": "1-2v^2",
    "lambdas": (1, -1, -1),
    "factorizations": [
        (1, "(x^2 + (3t + 2)x + 2t + 1)(x^2 + 3t + 3)(x^2 + 2t + 1)(x + t + 1)(x + 2t + 1)"
            "(x + 2t + 2)(x + t + 3)(x^2 + (2t + 3)x + 3t + 3)"),
        (-1, "(x^2 + t + 1)(x^2 + 4t + 2)(x^2 + 4t + 4)(x^2 + t + 3)(x + 4t)(x + 4t + 1)(x + 4t + 3)^2"),
        (-1, "(x^2 + t + 1)(x^2 + 4t + 2)(x^2 + 4t + 4)(x^2 + t + 3)(x + 3t)(x + t + 4)(x + t)(x + 3t + 2)"),
    ],
    "f": ("x^2 + (2t + 3)x + 3t + 3", "x + 4t + 3", "x + 3t + 2"),
    "h": (
        "x^10 + (3t + 2)x^9 + 2tx^8 + (2t + 3)x^7 + (3t + 4)x^6 + x^4 + (3t + 2)x^3 + 2tx^2 + (2t + 3)x + 3t + 4",
        "x^11 + (4t + 3)x^10 + 3x^9 + (2t + 4)x^8 + 4x^7 + (t + 2)x^6 + 2x^5 + (3t + 1)x^4 + x^3"
        " + (4t + 3)x^2 + 3x + 2t + 4",
        "x^11 + 3tx^10 + 3x^9 + 4tx^8 + 4x^7 + 2tx^6 + 2x^5 + tx^4 + x^3 + 3tx^2 + 3x + 4t",
    ),
    "h_star": (
        "(3t + 4)x^10 + 3tx^9 + 2tx^8 + 2tx^7 + x^6 + (3t + 4)x^4 + 3tx^3 + 2tx^2 + 2tx + 1",
        "(3t + 1)x^11 + 3x^10 + (t + 2)x^9 + x^8 + (2t + 4)x^7 + 2x^6 + (4t + 3)x^5 + 4x^4"
        " + (3t + 1)x^3 + 3x^2 + (t + 2)x + 1",
        "(t + 4)x^11 + 3x^10 + (2t + 3)x^9 + x^8 + (4t + 1)x^7 + 2x^6 + (3t + 2)x^5 + 4x^4"
        " + (t + 4)x^3 + 3x^2 + (2t + 3)x + 1",
    ),
    "quotients": (
        "(3t + 4)x^8 + (2t + 1)x^6 + (3t + 4)x^2 + 2t + 1",
        "(3t + 1)x^10 + 4x^9 + (2t + 4)x^8 + (2t + 4)x^6 + x^5 + (3t + 1)x^4 + (3t + 1)x^2 + 4x + 2t + 4",
        "(t + 4)x^10 + (3t + 1)x^9 + 4tx^8 + (4t + 1)x^6 + (2t + 4)x^5 + tx^4 + (t + 4)x^2 + (3t + 1)x + 4t",
    ),
    "gray_matrix": "example1-5-2",
    "alpha": 4,
    "gray": (36, 32, 3),
    "quantum": (36, 28, 3),
}


def modulus_text(mod) -> str:
    terms = []
    for e in range(len(mod) - 1, -1, -1):
        c = mod[e]
        if c == 0:
            continue
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        coef = "" if (c == 1 and e) else str(c)
        terms.append(f"{coef}{mono}")
    return " + ".join(terms)


def candidate_moduli(p: int, m: int) -> list[tuple[int, ...]]:
    """Conway polynomial first, then the other monic irreducibles in lexicographic order."""
    conway = conway_polynomial(p, m)
    return [conway] + [tuple(f) for f in monic_irreducibles(p, m) if tuple(f) != conway]


# -- table rows ----------------------------------------------------------------


@dataclass
class RowReport:
    row: TableRow
    status: str  # CONFIRMED, MISMATCH or UNRESOLVED
    modulus: tuple[int, ...] | None = None
    record: QuantumCodeRecord | None = None
    witness_ok: bool = False
    shift_closed: bool = False
    diagnostics: list[str] = dc_field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return self.status == "CONFIRMED"

    def line(self) -> str:
        r = self.row
        head = f"row {r.index:2d}  n={r.n:<3d} F_{r.q:<4d} printed {r.quantum_text():<17}"
        if self.record is None:
            return f"{head} {self.status}: " + "; ".join(self.diagnostics)
        got = str(self.record.quantum) if self.record.quantum else self.record.gray_text()
        tail = f"derived {self.record.gray_text()} {got:<17} modulus {modulus_text(self.modulus)}"
        extra = ("  [" + "; ".join(self.diagnostics) + "]") if self.diagnostics else ""
        return f"{head} {tail}  {self.status}{extra}"


def _row_polys(row: TableRow, F: GF, twist: int = 1):
    delta = parse_ring_element(F, row.delta)
    lambdas = tuple(delta.to_crt())
    fs = tuple(parse_poly(F, s, twist) for s in row.f)
    return delta, lambdas, fs


def _divides_all(F: GF, n: int, fs, lambdas) -> bool:
    return all(right_divides(f, SkewPoly.binomial(F, n, lam, f.twist)) for f, lam in zip(fs, lambdas))


def _gray_matrix(F: GF) -> GrayMatrix:
    return preset(DEFAULT_PRESET[(F.p, F.m)], F)


def _matches(row: TableRow, rec: QuantumCodeRecord) -> bool:
    return tuple(rec.gray_params) == row.gray and rec.quantum is not None and (
        rec.quantum.n, rec.quantum.k, rec.quantum.d) == row.quantum


def reproduce_row(row: TableRow, order: str = "blocks", d_max: int = 5) -> RowReport:
    """Resolve the modulus, build the code, certify and compare with the printed row."""
    tried: list[str] = []
    results: list[RowReport] = []
    for mod in candidate_moduli(row.p, row.m):
        F = GF(row.p, row.m, mod)
        delta, lambdas, fs = _row_polys(row, F)
        if tuple(int(l == 1) * 2 - 1 for l in lambdas) != row.lambdas:
            return RowReport(row, "MISMATCH", diagnostics=[f"delta {row.delta} does not give lambdas {row.lambdas}"])
        if not _divides_all(F, row.n, fs, lambdas):
            tried.append(modulus_text(mod))
            continue
        try:
            M = _gray_matrix(F)
        except ValueError as exc:
            tried.append(f"{modulus_text(mod)} ({exc})")
            continue
        rec, C, G = build_record(F, row.n, delta, fs, M, order, d_max)
        rep = RowReport(row, "CONFIRMED" if _matches(row, rec) else "MISMATCH", mod, rec)
        rep.witness_ok = verify_certificate(G, rec.certificate)
        W = transported_shift_rows(F, G.gen, M, row.n, lambdas, order)
        rep.shift_closed = bool(G.contains_words(W).all())
        if not (rep.witness_ok and rep.shift_closed):
            rep.status = "MISMATCH"
            rep.diagnostics.append("certificate or shift closure failed")
        if rep.confirmed:
            return rep
        results.append(rep)
    if not results:
        return RowReport(row, "UNRESOLVED", diagnostics=[f"no modulus makes every f_i divide x^n - lambda_i (tried {', '.join(tried)})"])
    first = results[0]
    first.diagnostics.append(
        "all validating moduli: "
        + ", ".join(f"{modulus_text(r.modulus)} -> {r.record.gray_text()}" for r in results)
    )
    return first


def reproduce_table(rows=None, order: str = "blocks") -> list[RowReport]:
    """``rows`` is an iterable of 1-based row numbers; None or empty selects all."""
    selected = TABLE1 if not rows else [TABLE1[i - 1] for i in rows]
    return [reproduce_row(r, order) for r in selected]


# -- worked example -------------------------------------------------------------


@dataclass
class Report:
    items: list[tuple[str, bool, str]] = dc_field(default_factory=list)
    final: str = ""

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append((name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.items)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "") for name, ok, detail in self.items]
        return out + ([self.final] if self.final else [])


def _product_check(F: GF, n: int, lam, text: str, bound: int = 10**5) -> tuple[bool, str]:
    """Multiply the factors in printed order; on mismatch, search other orders."""
    factors = parse_product(F, text)
    target = SkewPoly.binomial(F, n, lam)
    if reduce(lambda a, b: a * b, factors) == target:
        return True, "printed order"
    for i, perm in enumerate(itertools.permutations(range(len(factors)))):
        if i >= bound:
            break
        if reduce(lambda a, b: a * b, (factors[j] for j in perm)) == target:
            return True, f"order {perm}"
    return False, "no factor order tried gives the product"


def verify_example1(negate: tuple[int, ...] = (), order: str = "blocks", d_max: int = 5) -> Report:
    """Re-derive every quantity of the worked example.

    ``negate`` lists components whose lambda is replaced by its negative; this
    is a negative control and should make that component's checks fail.
    """
    ex = EXAMPLE1
    rep = Report()
    F = GF(ex["p"], ex["m"], ex["modulus"])
    n = ex["n"]
    rep.add("modulus t^2 = t + 3 is the Conway polynomial", ex["modulus"] == conway_polynomial(5, 2))
    delta = parse_ring_element(F, ex["delta"])
    lambdas = [F(l) for l in ex["lambdas"]]
    rep.add("lambdas are the CRT coordinates of delta", tuple(delta.to_crt()) == tuple(lambdas),
            ", ".join(str(l) for l in delta.to_crt()))
    for lam, text in ex["factorizations"]:
        ok, how = _product_check(F, n, lam, text)
        rep.add(f"factor product equals x^{n} - ({F(lam)})", ok, how)

    lambdas = [-l if i in negate else l for i, l in enumerate(lambdas)]
    fs = [parse_poly(F, s) for s in ex["f"]]
    dc_ok = []
    for i, (f, lam) in enumerate(zip(fs, lambdas)):
        tag = f"component {i} (lambda = {lam})"
        try:
            chk = dual_containment_check(f, n, lam)
        except QuantumError as exc:
            rep.add(f"{tag}: f{i} right-divides x^{n} - lambda", False, str(exc))
            rep.add(f"{tag}: dual containment", False, "criterion not applicable")
            dc_ok.append(False)
            continue
        rep.add(f"{tag}: h{i} matches", chk.h == parse_poly(F, ex["h"][i]))
        rep.add(f"{tag}: h{i}* matches", chk.h_star == parse_poly(F, ex["h_star"][i]))
        rep.add(f"{tag}: h{i}* h{i} quotient matches", chk.quotient == parse_poly(F, ex["quotients"][i]))
        A = from_skew_generator(f, n, lam)
        matrix_ok = contains(A, dual(A))
        rep.add(f"{tag}: dual containment", chk.holds and matrix_ok,
                f"polynomial {chk.holds}, matrix {matrix_ok}")
        dc_ok.append(chk.holds and matrix_ok)

    M = preset(ex["gray_matrix"], F)
    rep.add("M M^T = 4 I", M.alpha is not None and M.alpha == ex["alpha"], f"alpha = {M.alpha}")
    if not all(dc_ok) or negate:
        rep.final = f"[[{ex['quantum'][0]},{ex['quantum'][1]},{ex['quantum'][2]}]]_25 NOT CONFIRMED"
        if not all(dc_ok):
            return rep
    rec, _, G = build_record(F, n, delta, fs, M, order, d_max)
    cert = rec.certificate
    rep.add(f"Gray image parameters [36,32,3] ({order} ordering)", tuple(rec.gray_params) == ex["gray"],
            rec.gray_text())
    rep.add("weight-d witness lies in the Gray image", verify_certificate(G, cert),
            f"support {cert.support}")
    q = css_parameters(G.n, G.k, cert.d, F.q) if cert.d else None
    rep.add("quantum parameters [[36,28,3]]_25", q is not None and (q.n, q.k, q.d) == ex["quantum"], str(q))
    if not rep.final:
        rep.final = f"{q} CONFIRMED" if rep.ok else f"{q} NOT CONFIRMED"
    return rep
