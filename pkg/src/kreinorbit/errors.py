"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class KreinOrbitError(ValueError):
    """Base class. ``module`` names the stage that raised, ``index`` the offending index if any."""

    module = "kreinorbit"

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(f"[{self.module}] {message}")


class DuplicateIndex(KreinOrbitError):
    module = "seq_core"


class NonRealC0(KreinOrbitError):
    module = "seq_core"


class SymmetryViolation(KreinOrbitError):
    module = "seq_core"


class GrowthViolation(KreinOrbitError):
    module = "seq_core"


class ParseError(KreinOrbitError):
    module = "seq_core"


class WeightError(KreinOrbitError):
    module = "shift"


class GaugeViolation(KreinOrbitError):
    module = "model"


class SymmetryHypothesisViolated(KreinOrbitError):
    module = "subspaces"
