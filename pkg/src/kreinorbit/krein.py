"""The doubled space H + H with the indefinite form {x+y, x1+y1} = (x, y1) + (y, x1).

All forms are linear in the SECOND argument and conjugate-linear in the first.
Passing ``real=True`` switches to the real-bilinear variant (conjugation is
the identity); it is meant for real coefficient data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .seq_core import BiSequence
from .shift import Vector, WeightSequence, adjoint_inverse_power_apply, shift_power_apply


@dataclass(frozen=True)
class KreinVector:
    top: Vector
    bottom: Vector

    @classmethod
    def zero(cls) -> "KreinVector":
        return cls(BiSequence(), BiSequence())

    @classmethod
    def basis(cls, n: int, slot: str) -> "KreinVector":
        """``b_n + 0`` (slot ``"top"``) or ``0 + b_n`` (slot ``"bottom"``)."""
        d = BiSequence.delta(n)
        return cls(d, BiSequence()) if slot == "top" else cls(BiSequence(), d)

    def __add__(self, other: "KreinVector") -> "KreinVector":
        return KreinVector(self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: "KreinVector") -> "KreinVector":
        return KreinVector(self.top - other.top, self.bottom - other.bottom)

    def __neg__(self) -> "KreinVector":
        return KreinVector(-self.top, -self.bottom)

    def __mul__(self, scalar: complex) -> "KreinVector":
        return KreinVector(self.top * scalar, self.bottom * scalar)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.top) or bool(self.bottom)

    def hilbert_norm(self) -> float:
        return math.hypot(self.top.l2_norm(), self.bottom.l2_norm())


def hilbert_pairing(f: Vector, g: Vector, real: bool = False) -> complex:
    """``(f, g) = sum_n conj(f(n)) g(n)``."""
    fd, gd = f._data, g._data
    if len(fd) <= len(gd):
        terms = [(a, gd[n]) for n, a in fd.items() if n in gd]
    else:
        terms = [(fd[n], b) for n, b in gd.items() if n in fd]
    if real:
        return sum((a * b for a, b in terms), 0j)
    return sum((a.conjugate() * b for a, b in terms), 0j)


def krein_form(v: KreinVector, w: KreinVector, real: bool = False) -> complex:
    return hilbert_pairing(v.top, w.bottom, real) + hilbert_pairing(v.bottom, w.top, real)


def hat_u_power(w: WeightSequence, N: int, v: KreinVector) -> KreinVector:
    """``(U + U^{*-1})^N v``; unitary for :func:`krein_form`."""
    if N == 0:
        return v
    return KreinVector(shift_power_apply(w, N, v.top), adjoint_inverse_power_apply(w, N, v.bottom))


def symmetric_form_transform(v: KreinVector, sign: int) -> KreinVector:
    """``(I + sign*i*I) v``: scales the bottom component by ``sign * i``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return KreinVector(v.top, v.bottom * (sign * 1j))


def symmetric_form(a: KreinVector, b: KreinVector) -> complex:
    """``i((a.top, b.bottom) - (a.bottom, b.top))`` obtained from :func:`krein_form`.

    The transform ``I + iI`` is applied to both arguments: with a form that
    is conjugate-linear on the left, this is the pairing that yields the
    difference of cross terms.
    """
    return krein_form(symmetric_form_transform(a, 1), symmetric_form_transform(b, 1))
