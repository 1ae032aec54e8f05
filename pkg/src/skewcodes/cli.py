"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .config import ConfigError, load_config
from .field import GF, FieldError
from .quantum import QuantumError, build_record, format_records, records_to_csv, search
from .reference import TABLE1, modulus_text, reproduce_table, verify_example1
from .ring import RingElement, idempotents, ring_elements, zeta

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _field_name(F: GF) -> str:
    return f"F_{F.q}" if F.m == 1 else f"F_{F.q} (modulus {modulus_text(F.modulus)})"


def cmd_verify_example1(args) -> int:
    rep = verify_example1(negate=tuple(args.negate_lambda), order=args.gray_order)
    print(f"gray ordering: {args.gray_order}")
    print("\n".join(rep.lines()))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_reproduce_table(args) -> int:
    rows = args.rows or []
    bad = [r for r in rows if not 1 <= r <= len(TABLE1)]
    if bad:
        print(f"error: rows must be in 1..{len(TABLE1)}, got {bad}", file=sys.stderr)
        return EXIT_CONFIG
    t0 = time.perf_counter()
    reports = reproduce_table(rows, order=args.gray_order)
    for r in reports:
        print(r.line())
    n_ok = sum(r.confirmed for r in reports)
    print(f"{n_ok}/{len(reports)} rows confirmed in {time.perf_counter() - t0:.1f}s")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["row", "q", "n", "delta", "f0", "f1", "f2", "printed_gray", "printed_quantum",
                        "derived_gray", "derived_quantum", "modulus", "status"])
            for r in reports:
                row, rec = r.row, r.record
                w.writerow([
                    row.index, row.q, row.n, row.delta, *row.f,
                    "[{},{},{}]".format(*row.gray), row.quantum_text(),
                    rec.gray_text() if rec else "", str(rec.quantum) if rec and rec.quantum else "",
                    modulus_text(r.modulus) if r.modulus else "", r.status,
                ])
    return EXIT_OK if n_ok == len(reports) else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        cfg = load_config(args.config)
        F = cfg.field()
        delta = cfg.delta_element(F)
        M = cfg.gray(F)
        fs = cfg.generators(F)
        if fs is not None:
            records = [build_record(F, cfg.n, delta, fs, M, cfg.gray_order, cfg.d_max)[0]]
        else:
            records = search(F, cfg.n, delta, cfg.degree_bounds, M, cfg.gray_order, cfg.d_max,
                             cfg.enumeration_bound, cfg.twist, args.workers or cfg.workers)
    except (ConfigError, QuantumError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    shown = records if args.top == 0 else records[: args.top]
    print(f"{_field_name(F)}, n = {cfg.n}, delta = {delta}, Gray matrix {M}")
    print(format_records(shown))
    if len(shown) < len(records):
        print(f"... {len(records) - len(shown)} more records")
    print(f"{len(records)} records")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            records_to_csv(records, fh)
    return EXIT_OK


def cmd_ring_info(args) -> int:
    try:
        F = GF(args.p, args.m)
    except FieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    q = F.q
    e = idempotents(F)
    print(f"R = F_{q}[v]/(v^3 - v) over {_field_name(F)}")
    print(f"zeta = {zeta(F)}")
    for i, eta in enumerate(e):
        print(f"eta{i} = {eta}")
    ok = all((e[i] * e[j]).is_zero() for i in range(3) for j in range(3) if i != j)
    ok &= all(x * x == x for x in e) and (e[0] + e[1] + e[2]) == RingElement.of(F, 1)
    print(f"eta_i eta_j = 0, eta_i^2 = eta_i, sum = 1: {'PASS' if ok else 'FAIL'}")
    if q**3 <= 10**6:
        units = sum(r.is_unit() for r in ring_elements(F))
        print(f"units: {units} of {q**3} (expected (q-1)^3 = {(q - 1) ** 3})")
        ok &= units == (q - 1) ** 3
    else:
        print(f"units: {(q - 1) ** 3} of {q**3}")
    if q <= 9:
        idem = [r for r in ring_elements(F) if r * r == r]
        print(f"idempotents (exhaustive): {len(idem)} found, expected 8")
        ok &= len(idem) == 8
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcodes", description="Skew constacyclic codes over F_q[v]/(v^3-v) and quantum codes from them.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-example1", help="re-derive the worked F_25 example")
    p.add_argument("--negate-lambda", type=int, action="append", default=[], choices=(0, 1, 2),
                   metavar="I", help="negate lambda_I (negative control); may repeat")
    p.add_argument("--gray-order", choices=("blocks", "interleaved"), default="blocks")
    p.set_defaults(func=cmd_verify_example1)

    p = sub.add_parser("reproduce-table", help="rebuild and certify the published table rows")
    p.add_argument("--rows", type=int, nargs="*", help="1-based row numbers (default: all)")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--gray-order", choices=("blocks", "interleaved"), default="blocks")
    p.set_defaults(func=cmd_reproduce_table)

    p = sub.add_parser("search", help="search divisor triples described by a job file")
    p.add_argument("--config", required=True, metavar="FILE")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--top", type=int, default=20, help="records to print (0 = all; CSV always has all)")
    p.add_argument("--workers", type=int, default=0, help="processes (default: from config)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ring-info", help="structure of R over F_{p^m}")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, default=1)
    p.set_defaults(func=cmd_ring_info)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
