"""Model vector ``x1 = b_0 + f_0`` whose Krein moments reproduce a moment sequence.

With ``conj(u_{-n}) = u_n`` the moment equations

    (f0(-N) + conj(f0(N))) * u_N / u_0 = c(N)

are solved by ``f0(N) = 1/2 * conj(u_0)/conj(u_N) * conj(c(N))`` plus any
``f00`` with ``conj(f00(-N)) = -f00(N)``. The default gauge is ``f00 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GaugeViolation, WeightError
from .krein import KreinVector, hat_u_power, krein_form
from .seq_core import BiSequence, MomentSequence
from .shift import Vector, WeightSequence


@dataclass(frozen=True)
class ModelOrbit:
    c: MomentSequence
    w: WeightSequence
    f0: Vector
    x1: KreinVector

    def seed(self, sign: int = 1) -> KreinVector:
        """``b_0 + sign*f0``."""
        return KreinVector(self.x1.top, self.f0 * sign)


def _check_weight_symmetry(w: WeightSequence, N: int) -> None:
    if w(-N).conjugate() != w(N):
        raise WeightError(f"conj(u_{-N}) != u_{N}", index=N)


def build_f0(c: MomentSequence, w: WeightSequence) -> Vector:
    """Coefficients of f0 on the support of ``c``.

    Computed for N >= 0 and mirrored, so ``conj(f0(-N)) == f0(N)`` holds
    exactly rather than to rounding.
    """
    u0 = w(0)
    out: dict[int, complex] = {}
    for N in sorted({abs(n) for n in c.c.support}):
        _check_weight_symmetry(w, N)
        val = 0.5 * (u0 / w(N)).conjugate() * c[N].conjugate()
        if N == 0:
            out[0] = complex(val.real, 0.0)
        else:
            out[N] = val
            out[-N] = val.conjugate()
    return BiSequence._wrap(out)


def model_vector(c: MomentSequence, w: WeightSequence, f00: Vector | None = None) -> ModelOrbit:
    """Assemble ``x1 = b_0 + f0``.

    ``f00`` is an optional antisymmetric gauge term; it must satisfy
    ``conj(f00(-N)) == -f00(N)`` exactly. It leaves the moments unchanged but
    breaks the symmetry of f0 that cross-orthogonality of the model lineals
    relies on.
    """
    f0 = build_f0(c, w)
    if f00 is not None and f00:
        for n, v in f00.items():
            if f00[-n].conjugate() != -v:
                raise GaugeViolation(f"conj(f00(-n)) != -f00(n) at n = {n}", index=n)
        f0 = f0 + f00
    elif f0_symmetry_residual(f0) != 0:
        raise AssertionError("f0 lost its conjugate symmetry")
    return ModelOrbit(c, w, f0, KreinVector(BiSequence.delta(0), f0))


def computed_moment(m: ModelOrbit, N: int) -> complex:
    """``{x1, U_hat^N x1}``."""
    return krein_form(m.x1, hat_u_power(m.w, N, m.x1))


def moment_residuals(m: ModelOrbit, range_: int) -> BiSequence:
    """``N -> {x1, U_hat^N x1} - c(N)`` for ``|N| <= range_``."""
    if range_ < m.c.window:
        raise ValueError(f"range {range_} smaller than the moment window {m.c.window}")
    return BiSequence._wrap({N: computed_moment(m, N) - m.c[N] for N in range(-range_, range_ + 1)})


def f0_symmetry_residual(f0: Vector) -> float:
    """``max_N |conj(f0(-N)) - f0(N)|``."""
    idx = set(f0.support) | {-n for n in f0.support}
    return max((abs(f0[-n].conjugate() - f0[n]) for n in idx), default=0.0)
