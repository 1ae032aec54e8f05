from __future__ import annotations

import pytest

from skewcodes.field import GF
from skewcodes.ring import CrtCoords, RingElement, idempotents, parse_ring_element, ring_elements, zeta


def R(F, a=0, b=0, c=0):
    return RingElement.of(F, a, b, c)


def test_idempotents_p5(F5):
    assert zeta(F5) == F5(3)
    e0, e1, e2 = idempotents(F5)
    assert e1 == R(F5, 0, 3, 3)
    assert e0 + e1 + e2 == R(F5, 1)
    # (3v + 3v^2)^2 = 9v^2 + 18v^3 + 9v^4 = 9v^2 + 18v + 9v^2 = 3v + 3v^2 mod 5
    assert e1 * e1 == e1


def test_ring_mul_examples(F5):
    v, v2 = R(F5, 0, 1), R(F5, 0, 0, 1)
    assert v * v2 == v
    e0, e1, e2 = idempotents(F5)
    assert (e1 * e2).is_zero()
    delta = parse_ring_element(F5, "1-2v^2")
    assert delta * delta == R(F5, 1)


def test_crt_examples(F5):
    delta = parse_ring_element(F5, "1-2v^2")
    assert tuple(delta.to_crt()) == (F5(1), F5(-1), F5(-1))
    assert tuple(R(F5, 1).to_crt()) == (F5(1),) * 3


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2)])
def test_crt_round_trip_and_idempotents_exhaustive(p, m):
    F = GF(p, m)
    e = idempotents(F)
    for i in range(3):
        for j in range(3):
            assert e[i] * e[j] == (e[i] if i == j else R(F))
    assert e[0] + e[1] + e[2] == R(F, 1)
    count = 0
    for r in ring_elements(F):
        assert RingElement.from_crt(r.to_crt()) == r
        count += 1
    assert count == F.q**3


def test_crt_is_multiplicative_exhaustive_q5(F5):
    elems = list(ring_elements(F5))
    for r in elems:
        cr = r.to_crt()
        for s in elems[::7]:
            assert (r * s).to_crt() == cr * s.to_crt()


def test_units(F5):
    assert parse_ring_element(F5, "1-2v^2").is_unit()
    assert not R(F5, 0, 1).is_unit()
    assert sum(r.is_unit() for r in ring_elements(F5)) == 64


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2)])
def test_unit_iff_invertible_exhaustive(p, m):
    F = GF(p, m)
    one = R(F, 1)
    elems = list(ring_elements(F))
    for r in elems:
        has_inverse = any(r * s == one for s in elems)
        assert has_inverse == r.is_unit()
        if has_inverse:
            assert r * r.inverse() == one


def test_sigma_examples(F25):
    delta = parse_ring_element(F25, "1-2v^2")
    assert delta.sigma() == delta
    tv = RingElement(F25.zero, F25.gen, F25.zero)
    assert tv.sigma() == RingElement(F25.zero, F25.parse("4t+1"), F25.zero)
    for r in list(ring_elements(F25))[::97]:
        assert r.sigma().sigma() == r


def test_sigma_commutes_with_crt(F25):
    for r in list(ring_elements(F25))[::31]:
        assert tuple(r.sigma().to_crt()) == tuple(b.frobenius(1) for b in r.to_crt())


def test_sigma_fixes_delta_iff_theta_fixes_lambdas(F25):
    for r in list(ring_elements(F25))[::13]:
        fixed = r.sigma() == r
        assert fixed == all(b.frobenius(1) == b for b in r.to_crt())


def test_parse_ring_element_forms(F5):
    assert parse_ring_element(F5, "2v^2-1") == R(F5, -1, 0, 2)
    assert parse_ring_element(F5, "-1") == R(F5, -1)
    assert parse_ring_element(F5, "3 + v") == R(F5, 3, 1)
    assert str(R(F5, 1, 0, 3)) == "1 + 3v^2"


def test_crt_coords_iterable(F5):
    c = CrtCoords(F5(1), F5(2), F5(3))
    assert list(c) == [F5(1), F5(2), F5(3)]
