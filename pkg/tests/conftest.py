import numpy as np
import pytest

from kreinorbit.krein import KreinVector
from kreinorbit.seq_core import BiSequence, hermitian_extend


def random_sparse(rng, max_support=6, span=8):
    size = int(rng.integers(1, max_support + 1))
    idx = rng.choice(np.arange(-span, span + 1), size=size, replace=False)
    vals = rng.normal(size=size) + 1j * rng.normal(size=size)
    return BiSequence(zip((int(n) for n in idx), vals))


def random_krein(rng, max_support=6, span=8):
    return KreinVector(random_sparse(rng, max_support, span), random_sparse(rng, max_support, span))


def random_moments(rng, max_window=16, base=4.0):
    """Admissible moments: window <= max_window, |c(N)| <= base**|N|."""
    window = int(rng.integers(0, max_window + 1))
    half = [(0, rng.uniform(-1, 1))]
    for N in range(1, window + 1):
        r = base**N * np.sqrt(rng.random())
        half.append((N, r * np.exp(2j * np.pi * rng.random())))
    return hermitian_extend(half)


def dense_shift(w, L):
    """Matrix of U on span{b_n : |n| <= L} built only from b_n -> (u_{n+1}/u_n) b_{n+1}."""
    size = 2 * L + 1
    U = np.zeros((size, size), dtype=complex)
    for n in range(-L, L):
        U[n + 1 + L, n + L] = w(n + 1) / w(n)
    return U


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
