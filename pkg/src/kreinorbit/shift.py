"""Bilateral weighted shifts on a Z-indexed basis ``{b_n}``.

The shift sends ``b_n`` to ``(u_{n+1}/u_n) b_{n+1}``. Weights are given by a
closed-form policy, so every power acts exactly on finitely supported
vectors without truncation:

    U^N      : b_n -> (u_{n+N} / u_n) b_{n+N}
    U^{*-N}  : b_n -> (conj(u_n) / conj(u_{n+N})) b_{n+N}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .errors import WeightError
from .seq_core import BiSequence, MomentSequence, validate_moments

# vectors of the shift space are coefficient sequences in the basis {b_n}
Vector = BiSequence

WEIGHT_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class WeightSequence:
    """Nonvanishing weights with ``conj(u_{-n}) = u_n``.

    ``policy == "geometric"``: ``u_n = rho**|n|``.
    ``policy == "table"``: explicit values on ``[-L, L]``, continued outside by
    ``u_{+-L} * rho**(|n| - L)`` (the geometric tail).
    """

    policy: str
    rho: float
    table: BiSequence | None = None
    half_width: int = 0

    def __post_init__(self):
        if not self.rho > 1:
            raise WeightError(f"rho must exceed 1, got {self.rho}")

    def __call__(self, n: int) -> complex:
        if self.policy == "geometric":
            return self.rho ** abs(n)
        L = self.half_width
        if abs(n) <= L:
            return self.table[n]
        edge = self.table[L if n > 0 else -L]
        return edge * self.rho ** (abs(n) - L)

    def ratio(self, a: int, b: int) -> complex:
        """``u_a / u_b``."""
        if self.policy == "geometric":
            return self.rho ** (abs(a) - abs(b))
        return self(a) / self(b)

    @property
    def is_real_positive(self) -> bool:
        return self.policy == "geometric" or all(v.imag == 0 and v.real > 0 for _, v in self.table.items())

    def to_json(self) -> dict:
        if self.policy == "geometric":
            return {"policy": "geometric", "rho": self.rho}
        entries = [{"n": n, "re": self.table[n].real, "im": self.table[n].imag} for n in range(self.half_width + 1)]
        return {"policy": "table", "entries": entries, "extension": "geometric_tail", "rho": self.rho}


def geometric(rho: float) -> WeightSequence:
    return WeightSequence("geometric", float(rho))


def table(entries: Mapping[int, complex], tail_rho: float = 2.0) -> WeightSequence:
    """Weights from explicit values.

    ``entries`` may list indices ``0..L`` only (the negative side is filled by
    conjugate reflection) or the full range ``-L..L``, in which case the
    symmetry ``conj(u_{-n}) = u_n`` is checked.
    """
    raw = {int(n): complex(v) for n, v in entries.items()}
    if not raw:
        raise WeightError("empty weight table")
    L = max(abs(n) for n in raw)
    full = {}
    for n in range(-L, L + 1):
        if n in raw:
            full[n] = raw[n]
        elif -n in raw and n < 0:
            full[n] = raw[-n].conjugate()
        else:
            raise WeightError(f"weight table has a gap at index {n}", index=n)
    for n, v in full.items():
        if v == 0:
            raise WeightError(f"weight u_{n} vanishes", index=n)
    for n in range(0, L + 1):
        u, u_neg = full[n], full[-n]
        if abs(u_neg.conjugate() - u) > WEIGHT_SYMMETRY_TOL * abs(u):
            raise WeightError(f"conj(u_{-n}) != u_{n}", index=n)
        # snap to exact symmetry so downstream identities hold bit-for-bit
        full[-n] = u.conjugate()
    full[0] = complex(full[0].real, 0.0)
    return WeightSequence("table", float(tail_rho), BiSequence._wrap(full), L)


def weights_from_json(obj: dict) -> WeightSequence:
    policy = obj.get("policy")
    if policy == "geometric":
        return geometric(obj["rho"])
    if policy == "table":
        if obj.get("extension", "geometric_tail") != "geometric_tail":
            raise WeightError(f"unknown extension rule {obj.get('extension')!r}")
        entries = {e["n"]: complex(e["re"], e.get("im", 0.0)) for e in obj["entries"]}
        return table(entries, obj.get("rho", 2.0))
    raise WeightError(f"unknown weight policy {policy!r}")


def make_weights(c: MomentSequence, margin: float) -> WeightSequence:
    """Geometric weights that make ``c(N)/u_N`` decay like ``exp(-margin |N|)``."""
    if not margin > 0:
        raise ValueError("margin must be positive")
    est = validate_moments(c)
    return geometric(max(2.0, math.exp(est.a_hat + margin)))


def shift_power_apply(w: WeightSequence, N: int, v: Vector) -> Vector:
    """``U^N v``."""
    if N == 0:
        return v
    return BiSequence._wrap({n + N: w.ratio(n + N, n) * x for n, x in v.items()})


def adjoint_inverse_power_apply(w: WeightSequence, N: int, v: Vector) -> Vector:
    """``(U^*)^{-N} v``."""
    if N == 0:
        return v
    return BiSequence._wrap({n + N: w.ratio(n, n + N).conjugate() * x for n, x in v.items()})


class PowerNorm(NamedTuple):
    value: float
    lower_bound: bool


def power_norm(w: WeightSequence, N: int, window: int) -> PowerNorm:
    """``sup_n |u_{n+N} / u_n|``.

    Closed form ``rho**|N|`` for geometric weights. For a table the sup is
    taken over ``|n| <= window`` and flagged as a lower bound.
    """
    if window < abs(N):
        raise ValueError(f"window {window} smaller than |N| = {abs(N)}")
    if N == 0:
        return PowerNorm(1.0, False)
    if w.policy == "geometric":
        return PowerNorm(w.rho ** abs(N), False)
    return PowerNorm(max(abs(w.ratio(n + N, n)) for n in range(-window, window + 1)), True)
