"""Job files: line-oriented ``key = value`` text.

Example::

    # worked F_25 example, search
    p = 5
    m = 2
    modulus = [2, 4, 1]
    n = 12
    delta = 1, 4, 4
    gray_matrix = example1-5-2
    degree_bounds = 2, 1, 1

``delta`` is given by its three CRT coordinates (or as ring text such as
``1-2v^2``), ``gray_matrix`` by preset name or as ``a b c; d e f; g h i``.
When f0, f1 and f2 are all present the job evaluates that single code instead
of searching.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields, replace

from .distance import DEFAULT_D_MAX
from .field import DEFAULT_ENUMERATION_BOUND, GF, FieldError, conway_polynomial
from .gray import DEFAULT_PRESET, GRAY_ORDERS, GrayMatrix, preset
from .ring import RingElement, parse_ring_element
from .skewpoly import SkewPoly, format_coefficient_string, parse_poly

__all__ = ["ConfigError", "JobConfig", "parse_config", "format_config", "load_config"]


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class JobConfig:
    p: int
    n: int
    delta: tuple[str, str, str]
    m: int = 1
    modulus: tuple[int, ...] | None = None
    gray_matrix: str | tuple[tuple[str, ...], ...] | None = None
    gray_order: str = "blocks"
    twist: int = 1
    f0: str | None = None
    f1: str | None = None
    f2: str | None = None
    degree_bounds: tuple[int, int, int] = (1, 1, 1)
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    d_max: int = DEFAULT_D_MAX
    workers: int = 1

    def field(self) -> GF:
        return GF(self.p, self.m, self.modulus)

    def delta_element(self, F: GF | None = None) -> RingElement:
        F = F or self.field()
        return RingElement.from_crt(tuple(F.parse(x) for x in self.delta))

    def gray(self, F: GF | None = None) -> GrayMatrix:
        F = F or self.field()
        if self.gray_matrix is None:
            try:
                return preset(DEFAULT_PRESET[(self.p, self.m)], F)
            except KeyError:
                raise ConfigError(f"no default Gray matrix for F_{F.q}; set gray_matrix") from None
        if isinstance(self.gray_matrix, str):
            return preset(self.gray_matrix, F)
        return GrayMatrix.from_rows(F, [[F.parse(x) for x in row] for row in self.gray_matrix])

    def generators(self, F: GF | None = None) -> tuple[SkewPoly, SkewPoly, SkewPoly] | None:
        if None in (self.f0, self.f1, self.f2):
            return None
        F = F or self.field()
        return tuple(parse_poly(F, s, self.twist) for s in (self.f0, self.f1, self.f2))  # type: ignore[return-value]


_INT_KEYS = ("p", "m", "n", "twist", "enumeration_bound", "d_max", "workers")
_KEYS = {f.name for f in fields(JobConfig)}


def _ints(text: str) -> list[int]:
    return [int(x) for x in re.split(r"[\s,]+", text.strip("[]() ").strip()) if x]


def _parse_value(key: str, value: str):
    if key in _INT_KEYS:
        return int(value)
    if key == "modulus":
        return tuple(_ints(value))
    if key == "degree_bounds":
        b = _ints(value)
        if len(b) == 1:
            b = b * 3
        if len(b) != 3 or min(b) < 0:
            raise ValueError("degree_bounds needs one or three non-negative integers")
        return tuple(b)
    if key == "gray_order":
        if value not in GRAY_ORDERS:
            raise ValueError(f"gray_order must be one of {', '.join(GRAY_ORDERS)}")
        return value
    if key == "gray_matrix":
        if ";" not in value:
            return value
        rows = tuple(tuple(r.split()) for r in value.split(";"))
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("gray_matrix needs three rows of three elements")
        return rows
    return value  # delta, f0..f2 are checked against the field afterwards


def parse_config(text: str) -> JobConfig:
    raw: dict[str, tuple[object, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"expected 'key = value', got {body!r}", lineno)
        key, value = (s.strip() for s in body.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        if key in raw:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        if not value:
            raise ConfigError(f"empty value for {key!r}", lineno)
        try:
            raw[key] = (_parse_value(key, value), lineno)
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}", lineno) from None
    for key in ("p", "n", "delta"):
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
    values = {k: v for k, (v, _) in raw.items()}
    where = {k: ln for k, (_, ln) in raw.items()}
    values["delta"] = ("0", "0", "0")
    cfg = JobConfig(**values)

    try:
        F = cfg.field()
    except FieldError as exc:
        line = where.get("modulus") or where.get("m") or where["p"]
        raise ConfigError(str(exc), line) from None
    if cfg.modulus is None and cfg.m > 1:
        cfg = replace(cfg, modulus=conway_polynomial(cfg.p, cfg.m))

    try:
        dtext = str(raw["delta"][0])
        if "," in dtext:
            parts = [s.strip() for s in dtext.split(",")]
            if len(parts) != 3:
                raise ValueError("delta needs three CRT coordinates")
            coords = tuple(F.parse(x) for x in parts)
        else:
            coords = tuple(parse_ring_element(F, dtext).to_crt())
    except (ValueError, FieldError) as exc:
        raise ConfigError(f"delta: {exc}", where["delta"]) from None
    cfg = replace(cfg, delta=tuple(str(c) for c in coords))

    for key in ("f0", "f1", "f2"):
        if getattr(cfg, key) is not None:
            try:
                f = parse_poly(F, getattr(cfg, key), cfg.twist)
            except (ValueError, FieldError) as exc:
                raise ConfigError(f"{key}: {exc}", where[key]) from None
            cfg = replace(cfg, **{key: format_coefficient_string(f)})
    if cfg.gray_matrix is not None:
        try:
            cfg.gray(F)
        except (ValueError, FieldError) as exc:
            raise ConfigError(f"gray_matrix: {exc}", where["gray_matrix"]) from None
    if cfg.d_max < 1 or cfg.workers < 1:
        raise ConfigError("d_max and workers must be positive", where.get("d_max") or where.get("workers"))
    return cfg


def format_config(cfg: JobConfig) -> str:
    """Inverse of ``parse_config`` (up to comments and spacing)."""
    out = []
    for f in fields(JobConfig):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        if f.name in ("modulus",):
            text = "[" + ", ".join(map(str, v)) + "]"
        elif f.name in ("delta", "degree_bounds"):
            text = ", ".join(map(str, v))
        elif f.name == "gray_matrix" and not isinstance(v, str):
            text = "; ".join(" ".join(r) for r in v)
        else:
            text = str(v)
        out.append(f"{f.name} = {text}")
    return "\n".join(out) + "\n"


def load_config(path: str) -> JobConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse_config(text)
