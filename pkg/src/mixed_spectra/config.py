from __future__ import annotations

import os
from dataclasses import dataclass

ENV_TOL = "MIXED_SPECTRA_TOL"


@dataclass(frozen=True)
class Tolerances:
    # off-diagonal Frobenius norm at which Jacobi sweeps stop
    jacobi: float = 1e-10
    # absolute slack for every eigenvalue-derived comparison
    spectral: float = 1e-8
    max_sweeps: int = 100
    # adjacent values of the doubled spectrum further apart than this trigger a warning
    pair_gap: float = 1e-6

    @classmethod
    def from_env(cls) -> Tolerances:
        raw = os.environ.get(ENV_TOL)
        if raw is None or not raw.strip():
            return cls()
        value = float(raw)
        if not value > 0:
            raise ValueError(f"{ENV_TOL} must be positive, got {raw!r}")
        return cls(spectral=value)


def default_tolerances() -> Tolerances:
    return Tolerances.from_env()
