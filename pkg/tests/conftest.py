from __future__ import annotations

import numpy as np
import pytest

from skewcodes.field import GF
from skewcodes.skewpoly import SkewPoly


@pytest.fixture(scope="session")
def F25() -> GF:
    # t^2 = t + 3
    return GF(5, 2, (2, 4, 1))


@pytest.fixture(scope="session")
def F9() -> GF:
    return GF(3, 2)


@pytest.fixture(scope="session")
def F5() -> GF:
    return GF(5)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


def random_poly(F: GF, rng: np.random.Generator, degree: int, twist: int = 1, monic: bool = False) -> SkewPoly:
    c = [int(x) for x in rng.integers(0, F.q, size=degree + 1)]
    c[-1] = 1 if monic else int(rng.integers(1, F.q))
    return SkewPoly(F, [F.from_index(x) for x in c], twist)


def naive_skew_product(f: SkewPoly, g: SkewPoly) -> list:
    """Expand (a x^i)(b x^j) = a b^(p^(k i)) x^(i+j) term by term; Theta via powering."""
    F, k = f.field, f.twist
    out = [F.zero] * (len(f.coeffs) + len(g.coeffs))
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b ** (F.p ** (k * i))
    while out and out[-1].is_zero():
        out.pop()
    return out


def sigma_norm(c, n: int, twist: int = 1):
    """sigma^(n-1)(c) ... sigma(c) c: the remainder of x^n on right division by x - c."""
    F = c.field
    acc = F.one
    for i in range(n):
        acc = c ** (F.p ** (twist * i)) * acc
    return acc
