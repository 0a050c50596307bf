from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by the solver, energies and bound checks.

    solve: Jacobi stops once the off-diagonal Frobenius norm is at most
        ``solve * ||M||_F``.
    group: eigenvalues closer than ``group * max(1, ||M||_F)`` are one cluster.
    eq: absolute margin for equality detection and bound violations.
    cmp: absolute margin for the strict hyperenergetic comparisons.
    """

    solve: float = 1e-12
    group: float = 1e-7
    eq: float = 1e-7
    cmp: float = 1e-6
    max_sweeps: int = 100

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"tolerance {f.name} must be positive")


DEFAULT = Tolerances()
