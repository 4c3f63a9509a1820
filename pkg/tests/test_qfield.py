import random

import pytest

from waringlab.qfield import (
    FieldElem,
    TauMismatchError,
    rational,
    rational_str,
)

TAUS = [rational("-1/2"), rational(-2)]


def rand_elem(rng, tau):
    return FieldElem(
        tuple(rational(rng.randint(-3, 3)) / rng.randint(1, 3)
              for _ in range(6)), tau)


@pytest.mark.parametrize("tau", TAUS)
def test_add_examples(tau):
    z = FieldElem.zeta(tau)
    a = FieldElem.gen_a(tau)
    one = FieldElem.one(tau)
    half = FieldElem.from_rational(rational("1/2"), tau)
    assert z + z * z == -one
    assert z + FieldElem.zero(tau) == z
    assert (half + a) + (half - a) == one


@pytest.mark.parametrize("tau", TAUS)
def test_mul_examples(tau):
    z = FieldElem.zeta(tau)
    a = FieldElem.gen_a(tau)
    one = FieldElem.one(tau)
    assert z * (z * z) == one
    assert a * (a * a) == FieldElem.from_rational(tau, tau)
    assert (one + z) * (one + z * z) == one


@pytest.mark.parametrize("tau", TAUS)
def test_inv_examples(tau):
    z = FieldElem.zeta(tau)
    a = FieldElem.gen_a(tau)
    assert z.inv() == z * z
    assert a.inv() == (a * a) / rational(tau)
    two = FieldElem.from_rational(2, tau)
    assert two.inv() == FieldElem.from_rational(rational("1/2"), tau)
    with pytest.raises(ZeroDivisionError):
        FieldElem.zero(tau).inv()


@pytest.mark.parametrize("tau", TAUS)
def test_inv_random(tau):
    rng = random.Random(7)
    one = FieldElem.one(tau)
    for _ in range(25):
        x = rand_elem(rng, tau)
        if x.is_zero():
            continue
        assert x * x.inv() == one


@pytest.mark.parametrize("tau", TAUS)
def test_field_axioms_random(tau):
    rng = random.Random(11)
    for _ in range(30):
        x, y, w = (rand_elem(rng, tau) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * (y + w) == x * y + x * w
        assert x - x == FieldElem.zero(tau)


@pytest.mark.parametrize("tau", TAUS)
def test_conjugate(tau):
    z = FieldElem.zeta(tau)
    a = FieldElem.gen_a(tau)
    assert z.conjugate() == -FieldElem.one(tau) - z
    assert a.conjugate() == a
    rng = random.Random(3)
    for _ in range(20):
        x, y = rand_elem(rng, tau), rand_elem(rng, tau)
        assert x.conjugate().conjugate() == x
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@pytest.mark.parametrize("tau", TAUS)
def test_embed_complex(tau):
    one = FieldElem.one(tau)
    z = FieldElem.zeta(tau)
    assert one.embed_complex() == 1.0 + 0.0j
    zc = z.embed_complex()
    assert abs(zc.real + 0.5) < 1e-14
    assert abs(zc.imag - 0.8660254037844386) < 1e-12
    rng = random.Random(19)
    for _ in range(20):
        x, y = rand_elem(rng, tau), rand_elem(rng, tau)
        prod = (x * y).embed_complex()
        assert abs(prod - x.embed_complex() * y.embed_complex()) < 1e-12
        s = (x + y).embed_complex()
        assert abs(s - (x.embed_complex() + y.embed_complex())) < 1e-12
        cc = x.conjugate().embed_complex()
        assert abs(cc - x.embed_complex().conjugate()) < 1e-12


@pytest.mark.parametrize("tau", TAUS)
def test_cube_roots_of_unity(tau):
    one = FieldElem.one(tau)
    z = FieldElem.zeta(tau)
    for mu in (one, z, z * z):
        assert mu ** 3 == one


def test_tau_mixing_rejected():
    x = FieldElem.gen_a(TAUS[0])
    y = FieldElem.gen_a(TAUS[1])
    with pytest.raises(TauMismatchError):
        x + y
    with pytest.raises(TauMismatchError):
        x * y
    assert x != y


def test_json_roundtrip():
    tau = TAUS[1]
    rng = random.Random(23)
    for _ in range(10):
        x = rand_elem(rng, tau)
        data = x.to_json()
        assert all(isinstance(s, str) and "/" in s for s in data)
        assert FieldElem.from_json(data, tau) == x


def test_rational_str():
    assert rational_str(rational("3/6")) == "1/2"
    assert rational_str(rational(-4)) == "-4/1"
    assert rational(rational_str(rational("-1/2"))) == rational("-1/2")
