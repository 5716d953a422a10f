"""The doubled orbit space ``L + L`` with the difference form and its embedding Omega.

``Omega(U_0^N x_0 + U_0^M x_0) = U_hat^N (b_0 + f_0) + U_hat^M (b_0 - f_0)``,
extended linearly. Omega carries the difference form
``{x + y, x1 + y1}_- = {x, x1}_0 - {y, y1}_0`` to the Krein form and
intertwines ``U_0 + U_0`` with ``U_hat``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .krein import KreinVector, hat_u_power, krein_form
from .model import ModelOrbit
from .seq_core import BiSequence, MomentSequence
from .subspaces import OrbitVector, generator_matrix, normalized_smallest_singular_value, orbit_form, orbit_shift


@dataclass(frozen=True)
class DoubledOrbitVector:
    first: OrbitVector
    second: OrbitVector

    def __add__(self, other: "DoubledOrbitVector") -> "DoubledOrbitVector":
        return DoubledOrbitVector(self.first + other.first, self.second + other.second)

    def __mul__(self, scalar: complex) -> "DoubledOrbitVector":
        return DoubledOrbitVector(self.first * scalar, self.second * scalar)

    __rmul__ = __mul__

    def shifted(self, N: int) -> "DoubledOrbitVector":
        """``(U_0 + U_0)^N``."""
        return DoubledOrbitVector(orbit_shift(self.first, N), orbit_shift(self.second, N))

    def l1_norm(self) -> float:
        return self.first.l1_norm() + self.second.l1_norm()


def omega_apply(d: DoubledOrbitVector, m: ModelOrbit) -> KreinVector:
    plus, minus = m.seed(1), m.seed(-1)
    out = KreinVector.zero()
    for N, a in d.first.items():
        out = out + hat_u_power(m.w, N, plus) * a
    for M, b in d.second.items():
        out = out + hat_u_power(m.w, M, minus) * b
    return out


def minus_form_eval(a: DoubledOrbitVector, b: DoubledOrbitVector, c: MomentSequence) -> complex:
    return orbit_form(a.first, b.first, c) - orbit_form(a.second, b.second, c)


def pullback_norm(d: DoubledOrbitVector, m: ModelOrbit) -> float:
    """Hilbert norm of ``Omega(d)``: a prehilbert norm on the doubled orbit space."""
    return omega_apply(d, m).hilbert_norm()


def random_orbit_vector(rng: np.random.Generator, max_support: int = 6, span: int = 8) -> OrbitVector:
    """Sparse coefficients: support size <= ``max_support`` in ``[-span, span]``, entries in the unit disk."""
    size = int(rng.integers(0, max_support + 1))
    idx = rng.choice(np.arange(-span, span + 1), size=size, replace=False)
    radius = np.sqrt(rng.random(size))
    phase = np.exp(2j * np.pi * rng.random(size))
    return BiSequence(zip((int(n) for n in idx), radius * phase))


def random_doubled(rng: np.random.Generator, max_support: int = 6, span: int = 8) -> DoubledOrbitVector:
    return DoubledOrbitVector(random_orbit_vector(rng, max_support, span), random_orbit_vector(rng, max_support, span))


def omega_isometry_residual(m: ModelOrbit, trials: int, seed: int) -> float:
    """``max |{Omega a, Omega b} - {a, b}_-|`` over ``trials`` random pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        a, b = random_doubled(rng), random_doubled(rng)
        lhs = krein_form(omega_apply(a, m), omega_apply(b, m))
        worst = max(worst, abs(lhs - minus_form_eval(a, b, m.c)))
    return worst


def intertwining_defect(m: ModelOrbit, trials: int, seed: int) -> tuple[bool, float]:
    """Compare ``Omega((U_0 + U_0) d)`` with ``U_hat Omega(d)`` on random ``d``.

    Returns whether the supports agree exactly on every trial, and the
    largest coefficient mismatch relative to ``max(1, |Omega d|_inf)``.
    """
    rng = np.random.default_rng(seed)
    same_support = True
    worst = 0.0
    for _ in range(trials):
        d = random_doubled(rng)
        for step in (1, -1):
            lhs = omega_apply(d.shifted(step), m)
            rhs = hat_u_power(m.w, step, omega_apply(d, m))
            diff = lhs - rhs
            # exact cancellation can drop entries on one side only
            same_support &= _support_close(lhs, rhs)
            scale = max(1.0, lhs.top.max_abs(), lhs.bottom.max_abs())
            worst = max(worst, diff.top.max_abs() / scale, diff.bottom.max_abs() / scale)
    return same_support, worst


def _support_close(a: KreinVector, b: KreinVector, rel: float = 1e-13) -> bool:
    for x, y in ((a.top, b.top), (a.bottom, b.bottom)):
        scale = max(1.0, x.max_abs(), y.max_abs())
        for n in set(x.support) ^ set(y.support):
            if abs(x[n] - y[n]) > rel * scale:
                return False
    return True


def injectivity_defect(m: ModelOrbit, K: int, basis: str = "orbit") -> float:
    """Normalized smallest singular value of Omega on ``{delta_N + 0, 0 + delta_M : |N|, |M| <= K}``.

    Images are expressed in the doubled shift basis truncated to ``|n| <= K``.
    """
    plus, minus = m.seed(1), m.seed(-1)
    images = [hat_u_power(m.w, N, plus) for N in range(-K, K + 1)]
    images += [hat_u_power(m.w, M, minus) for M in range(-K, K + 1)]
    return normalized_smallest_singular_value(generator_matrix(images, m.w, K, basis))
