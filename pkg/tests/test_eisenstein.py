import cmath
import itertools

import pytest
from hypothesis import given, strategies as st

from mixed_spectra.eisenstein import (
    OMEGA,
    OMEGA2,
    ONE,
    Eisenstein,
    EisensteinRational,
    conj,
    mul,
    to_complex,
)

ints = st.integers(-1000, 1000)
eis = st.builds(Eisenstein, ints, ints)
W = cmath.exp(2j * cmath.pi / 3)


def test_omega_squared():
    assert mul(OMEGA, OMEGA) == Eisenstein(-1, -1)
    assert OMEGA * OMEGA == OMEGA2


def test_omega_times_omega2_is_one():
    assert mul(OMEGA, OMEGA2) == ONE


def test_one_plus_omega_times_one_plus_omega2():
    # (1 + w)(1 + w^2) = 1 + w + w^2 + w^3 = 0 + 1
    assert mul(1 + OMEGA, 1 + OMEGA2) == ONE


def test_conj_examples():
    assert conj(OMEGA) == Eisenstein(-1, -1)
    assert conj(Eisenstein(5)) == 5


@given(eis)
def test_conj_involution(x):
    assert conj(conj(x)) == x


def test_to_complex_examples():
    assert to_complex(OMEGA) == pytest.approx(complex(-0.5, 0.8660254037844386), abs=1e-15)
    assert to_complex(1 + OMEGA) == pytest.approx(complex(0.5, 0.8660254037844386), abs=1e-15)
    assert to_complex(Eisenstein()) == 0


@given(eis)
def test_norm_matches_modulus(x):
    assert abs(to_complex(x)) ** 2 == pytest.approx(x.norm(), abs=1e-12 * max(1, x.norm()))
    assert x.norm() >= 0
    assert (x.norm() == 0) == (not x)


@given(eis, eis)
def test_mul_matches_complex(x, y):
    z = to_complex(x * y)
    assert z == pytest.approx(to_complex(x) * to_complex(y), rel=1e-12, abs=1e-9)


@given(eis, eis)
def test_conj_is_homomorphism(x, y):
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)


def test_unit_group_table():
    units = [Eisenstein.unit(p) for p in range(3)]
    for (i, a), (j, b) in itertools.product(enumerate(units), repeat=2):
        assert a * b == units[(i + j) % 3]
    assert all(u.norm() == 1 for u in units)
    assert [to_complex(u) for u in units] == pytest.approx([1, W, W * W], abs=1e-15)
    assert [u.unit_power() for u in units] == [0, 1, 2]
    assert Eisenstein(2, 0).unit_power() is None


def test_pow():
    assert OMEGA**3 == ONE
    # 1 + w = -w^2 is a primitive sixth root of unity
    assert (1 + OMEGA) ** 3 == Eisenstein(-1)
    assert (1 + OMEGA) ** 6 == ONE


def test_str():
    assert str(Eisenstein(-1, -1)) == "-1-w"
    assert str(OMEGA) == "w"
    assert str(Eisenstein(3, 2)) == "3+2w"


def test_rational_reduces():
    r = EisensteinRational(Eisenstein(4, 6), 8)
    assert r.numerator == Eisenstein(2, 3) and r.denominator == 4
    r = EisensteinRational(Eisenstein(3, 0), -6)
    assert r.numerator == Eisenstein(-1, 0) and r.denominator == 2
    with pytest.raises(ZeroDivisionError):
        EisensteinRational(1, 0)


@given(eis, eis.filter(bool))
def test_rational_division_roundtrip(x, y):
    q = EisensteinRational(x) / EisensteinRational(y)
    assert q * y == EisensteinRational(x)


def test_rational_to_int():
    assert EisensteinRational(Eisenstein(-6), 3).to_int() == -2
    with pytest.raises(ValueError):
        EisensteinRational(Eisenstein(1), 2).to_int()
    with pytest.raises(ValueError):
        EisensteinRational(OMEGA).to_int()
