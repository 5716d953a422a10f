"""Finitely supported bilateral sequences and moment-sequence validation.

A :class:`BiSequence` is the single coefficient container used throughout the
package: vectors in the shift space, moment sequences and coefficients of
vectors in the abstract orbit space are all finitely supported maps from the
integers to complex numbers.
"""

from __future__ import annotations

import json
import math
import operator
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DuplicateIndex, GrowthViolation, NonRealC0, ParseError, SymmetryViolation

IMAG_TOL = 1e-12
SYMMETRY_TOL = 1e-12


class BiSequence:
    """Immutable finitely supported map Z -> C.

    Exact zeros are dropped on construction, so two sequences compare equal
    iff they have the same support and the same values there.
    """

    __slots__ = ("_data",)

    def __init__(self, entries: Mapping[int, complex] | Iterable[tuple[int, complex]] | None = None):
        data: dict[int, complex] = {}
        if entries is not None:
            pairs = entries.items() if isinstance(entries, Mapping) else entries
            seen = set()
            for n, v in pairs:
                n = operator.index(n)
                if n in seen:
                    raise DuplicateIndex(f"index {n} given twice", index=n)
                seen.add(n)
                v = complex(v)
                if v != 0:
                    data[n] = v
        self._data = dict(sorted(data.items()))

    @classmethod
    def _wrap(cls, data: dict[int, complex]) -> "BiSequence":
        # trusted fast path: caller guarantees int keys and complex values
        out = cls.__new__(cls)
        out._data = {n: v for n, v in sorted(data.items()) if v != 0}
        return out

    @classmethod
    def delta(cls, n: int = 0, value: complex = 1.0) -> "BiSequence":
        return cls({n: value})

    @classmethod
    def from_array(cls, values, start: int) -> "BiSequence":
        """Sequence whose entry at ``start + k`` is ``values[k]``."""
        return cls._wrap({start + k: complex(v) for k, v in enumerate(values)})

    def __getitem__(self, n: int) -> complex:
        return self._data.get(n, 0j)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def items(self):
        return self._data.items()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._data)

    def bounds(self) -> tuple[int, int] | None:
        if not self._data:
            return None
        keys = self.support
        return keys[0], keys[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSequence):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {v!r}" for n, v in self._data.items())
        return f"BiSequence({{{body}}})"

    def __add__(self, other: "BiSequence") -> "BiSequence":
        out = dict(self._data)
        for n, v in other._data.items():
            out[n] = out.get(n, 0j) + v
        return BiSequence._wrap(out)

    def __neg__(self) -> "BiSequence":
        return BiSequence._wrap({n: -v for n, v in self._data.items()})

    def __sub__(self, other: "BiSequence") -> "BiSequence":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "BiSequence":
        scalar = complex(scalar)
        return BiSequence._wrap({n: scalar * v for n, v in self._data.items()})

    __rmul__ = __mul__

    def conj(self) -> "BiSequence":
        return BiSequence._wrap({n: v.conjugate() for n, v in self._data.items()})

    def reflect(self) -> "BiSequence":
        """n -> self[-n]."""
        return BiSequence._wrap({-n: v for n, v in self._data.items()})

    def shifted(self, N: int) -> "BiSequence":
        """n -> self[n - N]."""
        return BiSequence._wrap({n + N: v for n, v in self._data.items()})

    def restrict(self, lo: int, hi: int) -> "BiSequence":
        return BiSequence._wrap({n: v for n, v in self._data.items() if lo <= n <= hi})

    def max_abs(self) -> float:
        return max((abs(v) for v in self._data.values()), default=0.0)

    def l1_norm(self) -> float:
        return math.fsum(abs(v) for v in self._data.values())

    def l2_norm(self) -> float:
        return math.sqrt(math.fsum(abs(v) ** 2 for v in self._data.values()))

    def to_array(self, lo: int, hi: int) -> np.ndarray:
        """Dense complex array of entries ``lo..hi`` inclusive."""
        out = np.zeros(hi - lo + 1, dtype=complex)
        for n, v in self._data.items():
            if lo <= n <= hi:
                out[n - lo] = v
        return out


@dataclass(frozen=True)
class GrowthEstimate:
    a_hat: float
    M_hat: float


@dataclass(frozen=True)
class MomentSequence:
    """Hermitian-symmetric moments ``c(N)``; values beyond the support are zero.

    ``window`` is the largest |N| the data speaks for (zeros inside it were
    supplied explicitly). Use :func:`hermitian_extend` to build one; direct
    construction does not enforce the symmetry so that
    :func:`validate_moments` can report violations.
    """

    c: BiSequence
    window: int
    growth: GrowthEstimate | None = None

    def __post_init__(self):
        if self.window < 0:
            raise ValueError("window must be nonnegative")
        if self.growth is not None:
            for n, v in self.c.items():
                if abs(v) > self.growth.M_hat * math.exp(self.growth.a_hat * abs(n)):
                    raise GrowthViolation(f"|c({n})| exceeds the stated growth bound", index=n)

    def __getitem__(self, N: int) -> complex:
        return self.c[N]

    def max_abs(self) -> float:
        return self.c.max_abs()

    def scale(self) -> float:
        """Magnitude used to make tolerances relative: ``1 + max|c|``."""
        return 1.0 + self.max_abs()

    def nonnegative_half(self) -> list[tuple[int, complex]]:
        return [(N, self.c[N]) for N in range(self.window + 1)]

    def with_growth(self, est: GrowthEstimate) -> "MomentSequence":
        return MomentSequence(self.c, self.window, est)


def hermitian_extend(half: Iterable[tuple[int, complex]]) -> MomentSequence:
    """Build ``c`` from its values at N >= 0 by conjugate reflection."""
    entries: dict[int, complex] = {}
    for N, v in half:
        N = operator.index(N)
        if N < 0:
            raise ValueError(f"negative index {N}; give N >= 0 only")
        if N in entries:
            raise DuplicateIndex(f"index {N} given twice", index=N)
        entries[N] = complex(v)
    c0 = entries.get(0, 0j)
    if abs(c0.imag) > IMAG_TOL * max(1.0, abs(c0)):
        raise NonRealC0(f"c(0) = {c0!r} is not real", index=0)
    data = {}
    for N, v in entries.items():
        if N == 0:
            data[0] = complex(v.real, 0.0)
        else:
            data[N] = v
            data[-N] = v.conjugate()
    window = max(entries, default=0)
    return MomentSequence(BiSequence._wrap(data), window)


def symmetry_defect(c: MomentSequence) -> tuple[float, int | None]:
    """Largest |c(-N) - conj(c(N))| (and |Im c(0)|) with its index."""
    worst, where = 0.0, None
    for N in set(c.c.support) | {-n for n in c.c.support}:
        if N < 0:
            continue
        d = abs(c[-N] - c[N].conjugate()) if N else abs(c[0].imag)
        if d > worst:
            worst, where = d, N
    return worst, where


def validate_moments(c: MomentSequence) -> GrowthEstimate:
    """Check symmetry and estimate growth constants ``(a_hat, M_hat)``.

    ``M_hat = max(1, |c(0)|)`` and ``a_hat`` is the least nonnegative slope
    with ``|c(N)| <= M_hat * exp(a_hat * |N|)`` on every stored index.
    """
    worst, where = symmetry_defect(c)
    if worst > SYMMETRY_TOL * max(1.0, c.max_abs()):
        raise SymmetryViolation(f"c(-N) != conj(c(N)) at N = {where} (defect {worst:.3e})", index=where)
    M_hat = max(1.0, abs(c[0]))
    log_M = math.log(M_hat)
    a_hat = 0.0
    for N, v in c.c.items():
        if N != 0:
            a_hat = max(a_hat, (math.log(abs(v)) - log_M) / abs(N))
    # rounding in log/exp can leave the bound short by an ulp
    while any(abs(v) > M_hat * math.exp(a_hat * abs(N)) for N, v in c.c.items()):
        a_hat = float(np.nextafter(a_hat, math.inf))
    return GrowthEstimate(a_hat=a_hat, M_hat=M_hat)


def moments_from_json(obj) -> MomentSequence:
    """Parse ``{"moments": [{"n": int >= 0, "re": x, "im": y}, ...]}``."""
    if not isinstance(obj, dict) or not isinstance(obj.get("moments"), list):
        raise ParseError('expected an object with a "moments" list')
    half = []
    for k, item in enumerate(obj["moments"]):
        if not isinstance(item, dict) or "n" not in item or "re" not in item:
            raise ParseError(f'moment #{k} needs fields "n" and "re"')
        n, re, im = item["n"], item["re"], item.get("im", 0.0)
        if isinstance(n, bool) or not isinstance(n, int):
            raise ParseError(f"moment #{k}: n must be an integer")
        if n < 0:
            raise ParseError(f"moment #{k}: negative index {n} rejected", index=n)
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in (re, im)):
            raise ParseError(f"moment #{k}: re/im must be numbers", index=n)
        half.append((n, complex(re, im)))
    try:
        return hermitian_extend(half)
    except DuplicateIndex as exc:
        raise ParseError(f"duplicate index {exc.index}", index=exc.index) from exc


def load_moments(path: str | Path) -> MomentSequence:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return moments_from_json(obj)


def moments_to_json(c: MomentSequence) -> dict:
    return {"moments": [{"n": N, "re": v.real, "im": v.imag} for N, v in c.nonnegative_half()]}


def toeplitz_matrix(c: MomentSequence, W: int) -> np.ndarray:
    """Dense ``T[N, n] = c(n - N)`` for ``|N|, |n| <= W``."""
    lags = c.c.to_array(-2 * W, 2 * W)
    idx = np.arange(-W, W + 1)
    return lags[(idx[None, :] - idx[:, None]) + 2 * W]
