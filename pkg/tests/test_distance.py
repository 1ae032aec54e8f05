from __future__ import annotations

import itertools

import numpy as np
import pytest

from skewcodes.code import CodeError, LinearCode, assemble_r_code, from_skew_generator
from skewcodes.distance import (
    DistanceCertificate,
    min_distance,
    min_distance_columns,
    min_distance_exhaustive,
    verify_certificate,
    weight,
)
from skewcodes.field import GF
from skewcodes.gray import gray_code, gray_map, preset
from skewcodes.reference import EXAMPLE1, TABLE1, reproduce_row
from skewcodes.ring import RingElement
from skewcodes.skewpoly import parse_poly


def ex1_gray(F25, order="blocks"):
    lams = [F25(l) for l in EXAMPLE1["lambdas"]]
    comps = [from_skew_generator(parse_poly(F25, s), 12, l) for s, l in zip(EXAMPLE1["f"], lams)]
    return gray_code(assemble_r_code(*comps), preset("example1-5-2", F25), order)


def brute_distance(C: LinearCode) -> int:
    """Plain itertools enumeration of messages, independent of the chunked version."""
    best = C.n
    for msg in itertools.product(range(C.field.q), repeat=C.k):
        if any(msg):
            w = C.encode(np.array(msg))
            best = min(best, int(np.count_nonzero(w)))
    return best


def test_identity_and_repetition(F5):
    assert min_distance_exhaustive(LinearCode.full(F5, 6)).d == 1
    assert min_distance_columns(LinearCode.full(F5, 6)).d == 1
    for n in (2, 5, 9):
        rep = LinearCode(F5, [[1] * n])
        assert min_distance_exhaustive(rep).d == n
        assert min_distance_columns(rep, d_max=n).d == n


def test_exhaustive_bound(F25):
    A0 = from_skew_generator(parse_poly(F25, EXAMPLE1["f"][0]), 12, 1)
    assert A0.k == 10
    with pytest.raises(CodeError):
        min_distance_exhaustive(A0)
    assert min_distance(A0).method == "column-dependence"


def test_zero_code_rejected(F5):
    with pytest.raises(CodeError):
        min_distance_columns(LinearCode.zero(F5, 4))
    with pytest.raises(CodeError):
        min_distance_exhaustive(LinearCode.zero(F5, 4))


def test_example1_gray_distance(F25):
    G = ex1_gray(F25)
    cert = min_distance_columns(G)
    assert (G.n, G.k, cert.d) == (36, 32, 3)
    assert weight(np.array(cert.witness)) == 3
    assert verify_certificate(G, cert, samples=10**6, seed=1)


def test_row2_gray_distance():
    rep = reproduce_row(TABLE1[1])
    assert rep.record.gray_params == (18, 14, 4)
    assert rep.witness_ok


def test_methods_agree_on_random_codes(F5, rng):
    for _ in range(100):
        k = int(rng.integers(1, 6))
        C = LinearCode(F5, rng.integers(0, 5, size=(k, 10)))
        if C.k == 0:
            continue
        ex = min_distance_exhaustive(C)
        col = min_distance_columns(C, d_max=10)
        assert ex.d == col.d == brute_distance(C)
        assert verify_certificate(C, col) and verify_certificate(C, ex)


def test_d_max_gives_lower_bound(F5):
    rep = LinearCode(F5, [[1] * 8])
    cert = min_distance_columns(rep, d_max=3)
    assert cert.d is None and cert.lower_bound == 4 and not cert.certified
    assert not verify_certificate(rep, cert)


def test_forged_certificates_rejected(F5):
    C = LinearCode(F5, [[1, 1, 1, 0], [0, 0, 1, 1]])
    good = min_distance_columns(C)
    assert good.d == 2 and verify_certificate(C, good)
    lighter = DistanceCertificate(**{**good.__dict__, "d": 1})
    assert not verify_certificate(C, lighter)
    outside = DistanceCertificate(**{**good.__dict__, "witness": [1, 1, 0, 0]})
    assert not verify_certificate(C, outside)
    # a true codeword whose weight exceeds d: sampling finds lighter words
    heavy = DistanceCertificate(**{**good.__dict__, "d": 3, "witness": [1, 1, 2, 1], "method": "exhaustive"})
    assert not verify_certificate(C, heavy, samples=2000)


def test_weight_examples(F5, F25):
    assert weight([F5(0)] * 4) == 0
    assert weight(np.ones(7, dtype=np.int64)) == 7
    M = preset("example1-5-2", F25)
    img = gray_map([RingElement.of(F25, 1)] * 3, M)
    assert weight(img) == 2 * 3


@pytest.mark.parametrize("row", TABLE1, ids=lambda r: f"row{r.index}")
def test_distance_independent_of_gray_order(row):
    a, b = reproduce_row(row, "blocks"), reproduce_row(row, "interleaved")
    assert a.record.gray_params == b.record.gray_params


def test_certificate_text_round_trip(F25):
    cert = min_distance_columns(ex1_gray(F25))
    again = DistanceCertificate.from_text(cert.to_text())
    assert again == cert
    assert '"method": "column-dependence"' in cert.to_text()
