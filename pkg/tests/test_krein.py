import numpy as np
import pytest

from conftest import random_krein
from kreinorbit.krein import (
    KreinVector,
    hat_u_power,
    hilbert_pairing,
    krein_form,
    symmetric_form,
    symmetric_form_transform,
)
from kreinorbit.seq_core import BiSequence
from kreinorbit.shift import geometric, table

b = BiSequence.delta
ZERO = BiSequence()


def dense_form(v, w, L=40):
    """Oracle: J-matrix [[0, I], [I, 0]] applied to stacked dense coordinates."""
    x = np.concatenate([v.top.to_array(-L, L), v.bottom.to_array(-L, L)])
    y = np.concatenate([w.top.to_array(-L, L), w.bottom.to_array(-L, L)])
    n = 2 * L + 1
    J = np.block([[np.zeros((n, n)), np.eye(n)], [np.eye(n), np.zeros((n, n))]])
    return np.vdot(x, J @ y)


def test_form_examples():
    assert krein_form(KreinVector(b(0), b(0)), KreinVector(b(0), b(0))) == 2
    assert krein_form(KreinVector(b(0), -b(0)), KreinVector(b(0), -b(0))) == -2
    assert krein_form(KreinVector(b(0), ZERO), KreinVector(b(1), ZERO)) == 0


def test_pairing_is_linear_in_second_argument():
    f, g = BiSequence({0: 1, 1: 2j}), BiSequence({0: 3, 1: 1})
    assert hilbert_pairing(f, g * 1j) == 1j * hilbert_pairing(f, g)
    assert hilbert_pairing(f * 1j, g) == -1j * hilbert_pairing(f, g)
    assert hilbert_pairing(f, g) == 3 + (-2j) * 1


def test_form_matches_dense_oracle(rng):
    for _ in range(50):
        v, w = random_krein(rng), random_krein(rng)
        assert krein_form(v, w) == pytest.approx(dense_form(v, w), rel=1e-14, abs=1e-14)


def test_form_hermitian_exact(rng):
    for _ in range(200):
        v, w = random_krein(rng), random_krein(rng)
        assert krein_form(v, w) == krein_form(w, v).conjugate()


def test_neutral_diagonal():
    for n in range(-10, 11):
        assert krein_form(KreinVector.basis(n, "top"), KreinVector.basis(n, "top")) == 0
        assert krein_form(KreinVector.basis(n, "bottom"), KreinVector.basis(n, "bottom")) == 0


def test_real_mode_drops_conjugation():
    v = KreinVector(BiSequence({0: 2.0}), BiSequence({0: 3.0}))
    w = KreinVector(BiSequence({0: 5.0}), BiSequence({0: 7.0}))
    assert krein_form(v, w, real=True) == krein_form(v, w) == 2 * 7 + 3 * 5
    z = KreinVector(BiSequence({0: 1j}), ZERO)
    assert krein_form(z, KreinVector(ZERO, b(0)), real=True) == 1j
    assert krein_form(z, KreinVector(ZERO, b(0))) == -1j


def test_hat_u_examples():
    w = geometric(2)
    seed = KreinVector(b(0), b(0))
    assert hat_u_power(w, 1, seed) == KreinVector(BiSequence({1: 2}), BiSequence({1: 0.5}))
    assert hat_u_power(w, -1, seed) == KreinVector(BiSequence({-1: 2}), BiSequence({-1: 0.5}))
    assert hat_u_power(w, 0, seed) == seed


@pytest.mark.parametrize(
    "w",
    [geometric(1.1), geometric(3.0), geometric(8.0), table({0: 1, 1: 2 + 1j, 2: 5j, 3: -4}, tail_rho=3.0)],
    ids=["rho1.1", "rho3", "rho8", "complex-table"],
)
def test_hat_u_is_krein_unitary(w, rng):
    for _ in range(20):
        v, x = random_krein(rng), random_krein(rng)
        base = krein_form(v, x)
        scale = v.hilbert_norm() * x.hilbert_norm()
        for N in range(-16, 17):
            got = krein_form(hat_u_power(w, N, v), hat_u_power(w, N, x))
            assert abs(got - base) <= 1e-12 * scale


def test_symmetric_transform():
    assert symmetric_form_transform(KreinVector(b(0), b(0)), 1) == KreinVector(b(0), b(0) * 1j)
    assert symmetric_form_transform(KreinVector(b(0), b(0)), -1) == KreinVector(b(0), b(0) * -1j)
    with pytest.raises(ValueError):
        symmetric_form_transform(KreinVector(b(0), b(0)), 2)


def test_symmetric_form_value(rng):
    seed = KreinVector(b(0), b(0))
    assert symmetric_form(seed, seed) == 0
    for _ in range(50):
        a, c = random_krein(rng), random_krein(rng)
        expected = 1j * (hilbert_pairing(a.top, c.bottom) - hilbert_pairing(a.bottom, c.top))
        assert symmetric_form(a, c) == pytest.approx(expected, rel=1e-14, abs=1e-14)
        # Hermitian
        assert symmetric_form(a, c) == pytest.approx(symmetric_form(c, a).conjugate(), rel=1e-14, abs=1e-14)


def test_symmetric_transform_commutes_with_hat_u(rng):
    w = geometric(2.5)
    for _ in range(20):
        v = random_krein(rng)
        for N in (-3, -1, 2, 5):
            for sign in (1, -1):
                lhs = symmetric_form_transform(hat_u_power(w, N, v), sign)
                rhs = hat_u_power(w, N, symmetric_form_transform(v, sign))
                assert lhs.top == rhs.top
                np.testing.assert_allclose(
                    lhs.bottom.to_array(-20, 20), rhs.bottom.to_array(-20, 20), rtol=1e-15
                )


def test_krein_vector_algebra(rng):
    v, x = random_krein(rng), random_krein(rng)
    back = (v + x) - x
    for part in ("top", "bottom"):
        np.testing.assert_allclose(getattr(back, part).to_array(-9, 9), getattr(v, part).to_array(-9, 9), atol=1e-15)
    assert not KreinVector.zero()
    assert krein_form(v * 2j, x) == pytest.approx(-2j * krein_form(v, x))
    assert krein_form(v, x * 2j) == pytest.approx(2j * krein_form(v, x))
