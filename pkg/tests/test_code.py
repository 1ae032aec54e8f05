from __future__ import annotations

import itertools

import numpy as np
import pytest

from skewcodes import linalg
from skewcodes.code import (
    CodeError,
    LinearCode,
    assemble_r_code,
    contains,
    dual,
    from_skew_generator,
    r_dual,
    tau_shift,
    tau_shift_rows,
)
from skewcodes.field import GF
from skewcodes.reference import EXAMPLE1, TABLE1, candidate_moduli
from skewcodes.ring import RingElement, idempotents, parse_ring_element
from skewcodes.skewpoly import SkewPoly, enumerate_monic_right_divisors, parse_poly, right_divides, right_divmod, skew_reciprocal


def example_components(F25):
    lams = EXAMPLE1["lambdas"]
    return [from_skew_generator(parse_poly(F25, s), 12, lam) for s, lam in zip(EXAMPLE1["f"], lams)]


def test_full_space_generator(F25):
    A = from_skew_generator(SkewPoly(F25, [1]), 6, 1)
    assert A.k == 6 and (A.gen == np.eye(6, dtype=np.int64)).all()


def test_f1_generator_rows(F25):
    A = from_skew_generator(parse_poly(F25, "x + 4t + 3"), 12, -1)
    assert (A.n, A.k) == (12, 11)
    theta = F25.parse("4t+3") ** 5  # Theta by powering, independent of the Frobenius table
    assert theta == F25.parse("t+2")
    assert A.gen[1].tolist()[:4] == [0, theta.index, 1, 0]
    assert A.gen[0].tolist()[:3] == [F25.parse("4t+3").index, 1, 0]


def test_zero_code_from_modulus(F25):
    A = from_skew_generator(SkewPoly.binomial(F25, 4, 1), 4, 1)
    assert A.k == 0 and A.par.shape == (4, 4)


def test_example_dimensions(F25):
    comps = example_components(F25)
    assert [A.k for A in comps] == [10, 11, 11]
    C = assemble_r_code(*comps)
    assert C.log_q_size == 32
    # q^(3n - sum deg f) = 25^32 = 5^64; the exponent of p carries the factor m
    assert C.cardinality() == 25 ** (3 * 12 - 4) == 5 ** (2 * (3 * 12 - 4))


def test_generator_errors(F25):
    with pytest.raises(CodeError):
        from_skew_generator(parse_poly(F25, "x + t"), 12, 1)
    with pytest.raises(CodeError):
        from_skew_generator(SkewPoly(F25, [1, 2]), 12, 1)  # not monic
    with pytest.raises(CodeError):
        from_skew_generator(SkewPoly(F25, [-1, 1]), 7, 1)  # not central


def test_dual_basics(F25, rng):
    full = LinearCode.full(F25, 5)
    assert dual(full).k == 0
    for _ in range(20):
        C = LinearCode(F25, rng.integers(0, 25, size=(3, 7)))
        D = dual(C)
        assert D.k == 7 - C.k
        assert not linalg.matmul(F25, C.gen, D.gen.T).any()
        assert dual(D).same_as(C)


def test_dual_of_a1_from_reciprocal(F25):
    f1 = parse_poly(F25, EXAMPLE1["f"][1])
    lam = F25(-1)
    h, r = right_divmod(SkewPoly.binomial(F25, 12, lam), f1)
    hs = skew_reciprocal(h).monic()
    assert right_divides(hs, SkewPoly.binomial(F25, 12, lam.inv()))
    A1 = from_skew_generator(f1, 12, lam)
    B = from_skew_generator(hs, 12, lam.inv())
    assert linalg.same_rowspace(F25, dual(A1).gen, B.gen)


def test_contains_examples(F25, rng):
    C = LinearCode(F25, rng.integers(0, 25, size=(3, 6)))
    assert contains(C, C)
    assert contains(LinearCode.full(F25, 6), C)
    A1 = example_components(F25)[1]
    assert contains(A1, dual(A1))


def test_assemble_matches_eta_combination(F5, rng):
    e = idempotents(F5)
    for _ in range(5):
        comps = [LinearCode(F5, rng.integers(0, 5, size=(int(rng.integers(0, 2)) + 1, 4))) for _ in range(3)]
        C = assemble_r_code(*comps)
        got = {tuple(w) for w in C.codewords()}
        expect = set()
        for words in itertools.product(*(list(A.codewords()) for A in comps)):
            expect.add(tuple(
                sum((e[i].scale(F5.from_index(int(words[i][j]))) for i in range(3)), RingElement.of(F5))
                for j in range(4)
            ))
        assert got == expect


def test_zero_components_give_zero_code(F5):
    Z = LinearCode.zero(F5, 4)
    C = assemble_r_code(Z, Z, Z)
    assert C.cardinality() == 1


def test_r_dual(F25):
    C = assemble_r_code(*example_components(F25), lambdas=tuple(F25(l) for l in EXAMPLE1["lambdas"]))
    D = r_dual(C)
    assert D.dims == (2, 1, 1)
    DD = r_dual(D)
    assert all(a.same_as(b) for a, b in zip(DD.components, C.components))


def _all_subspaces(F, n):
    """Every subspace of F^n, by reduced echelon bases (n <= 2 here)."""
    seen, out = set(), []
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(F.q), repeat=n)]
    for k in range(n + 1):
        for rows in itertools.combinations(vecs, k):
            M = np.array(rows, dtype=np.int64).reshape(k, n)
            if k and linalg.rank(F, M) < k:
                continue
            key = linalg.rref(F, M)[0].tobytes() if k else b""
            if (k, key) not in seen:
                seen.add((k, key))
                out.append(LinearCode(F, M, n=n))
    return out


def _ring_inner(u, w):
    acc = RingElement.of(u[0].field)
    for a, b in zip(u, w):
        acc = acc + a * b
    return acc


def test_self_orthogonal_iff_components_exhaustive(F5):
    subspaces = _all_subspaces(F5, 2)
    assert len(subspaces) == 8
    e = idempotents(F5)
    for comps in itertools.product(subspaces, repeat=3):
        C = assemble_r_code(*comps)
        gens = [[e[i].scale(F5.from_index(int(x))) for x in row] for i, A in enumerate(comps) for row in A.gen]
        ring_level = all(_ring_inner(u, w).is_zero() for u in gens for w in gens)
        assert ring_level == C.is_self_orthogonal()


def test_tau_shift_examples(F5, F25):
    word = [F5(i) for i in range(5)]
    assert tau_shift(word, F5.one, 0) == [F5(4), F5(0), F5(1), F5(2), F5(3)]
    w = [F25.from_index(i) for i in (3, 7, 11, 19)]
    out = w
    for _ in range(4):
        out = tau_shift(out, F25.one, 1)
    assert out == w  # tau^n = sigma^n, and Theta^4 = id
    A = example_components(F25)[0]
    shifted = tau_shift_rows(F25, A.gen, 1, 1)
    assert A.contains_words(shifted).all()


def test_tau_shift_rows_matches_scalar(F25, rng):
    W = rng.integers(0, 25, size=(5, 6))
    lam = F25.parse("3")
    fast = tau_shift_rows(F25, W, lam, 1)
    for row, out in zip(W, fast):
        slow = tau_shift([F25.from_index(int(x)) for x in row], lam, 1)
        assert [x.index for x in slow] == out.tolist()


def _lines(F, n):
    out = [LinearCode.zero(F, n)]
    for v in itertools.product(range(F.q), repeat=n):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            out.append(LinearCode(F, [list(v)]))
    return out


def component_decomposition_counts(F5) -> dict[bool, int]:
    """C closed under tau_delta over R  <=>  every A_i closed under tau_lambda_i (n = 4, F_5).

    One slot runs over every code of dimension <= 1 and every lambda; the
    other two are the zero code or a fixed line that is never closed.
    Returns how many closed and non-closed cases were seen; raises on any
    disagreement.
    """
    n = 4
    lines = _lines(F5, n)
    assert len(lines) == 157
    zero = LinearCode.zero(F5, n)
    stray = LinearCode(F5, [[1, 0, 0, 0]])
    seen = {True: 0, False: 0}
    for slot in range(3):
        for other in (zero, stray):
            for lam in range(1, 5):
                lams = [F5(1), F5(-1), F5(2)]
                lams[slot] = F5(lam)
                delta = RingElement.from_crt(tuple(lams))
                for A in lines:
                    comps = [A if i == slot else (other if i == (slot + 1) % 3 else zero) for i in range(3)]
                    C = assemble_r_code(*comps)
                    words = {tuple(w) for w in C.codewords()}
                    ring_closed = all(tuple(tau_shift(list(w), delta, 0)) in words for w in words)
                    comp_closed = all(
                        B.contains_words(tau_shift_rows(F5, B.gen, l, 0)).all() if B.k else True
                        for B, l in zip(comps, lams)
                    )
                    if ring_closed != comp_closed:
                        raise AssertionError(f"slot {slot}, lambda {lam}, code {A.gen.tolist()}")
                    seen[ring_closed] += 1
    return seen


def test_component_decomposition_of_constacyclicity_exhaustive(F5):
    seen = component_decomposition_counts(F5)
    assert seen[True] and seen[False]
    assert sum(seen.values()) == 3 * 2 * 4 * 157


@pytest.mark.parametrize("row", TABLE1, ids=lambda r: f"row{r.index}")
def test_table_generators_closed_under_shift(row):
    for mod in candidate_moduli(row.p, row.m):
        F = GF(row.p, row.m, mod)
        lams = tuple(parse_ring_element(F, row.delta).to_crt())
        fs = [parse_poly(F, s) for s in row.f]
        if all(right_divides(f, SkewPoly.binomial(F, row.n, l)) for f, l in zip(fs, lams)):
            break
    for f, lam in zip(fs, lams):
        A = from_skew_generator(f, row.n, lam)
        assert A.k == row.n - f.degree
        assert A.contains_words(tau_shift_rows(F, A.gen, lam, 1)).all()


def test_dual_closed_under_inverse_shift(F25, rng):
    """Dual of a skew delta-constacyclic code is closed under the delta^-1 shift."""
    n = 4
    lams = (F25(2), F25(3), F25(4))
    delta = RingElement.from_crt(lams)
    for _ in range(5):
        comps = []
        for lam in lams:
            divs = [g for d in (1, 2) for g in enumerate_monic_right_divisors(F25, n, lam, d)]
            comps.append(from_skew_generator(divs[int(rng.integers(len(divs)))], n, lam))
        C = assemble_r_code(*comps, lambdas=lams)
        D = r_dual(C)
        inv = delta.inverse()
        for _ in range(10):
            parts = [B.random_codeword(rng) for B in D.components]
            word = D.word_from_components(*parts)
            assert D.contains_word(word)
            assert D.contains_word(tau_shift(word, inv, 1))


def test_export_import_round_trip(F25, rng):
    C = LinearCode(F25, rng.integers(0, 25, size=(3, 5)))
    assert LinearCode.import_text(F25, C.export_text()).same_as(C)


def test_from_parity_matches_generator_route(F25, rng):
    C = LinearCode(F25, rng.integers(0, 25, size=(3, 7)))
    D = LinearCode.from_parity(F25, C.par)
    assert D.same_as(C)
