"""Precision configuration shared by every numerical routine.

All accumulation-heavy sums in this package use error-compensated
(Neumaier) float64 accumulation; phase-critical reductions additionally
go through numpy longdouble (80-bit extended on x86-64).  That policy is
fixed package-wide; PrecisionConfig only controls term budgets and
tolerances.
"""

from dataclasses import dataclass, replace

MAX_EULER_MACLAURIN_TERMS = 30
MAX_RS_CORRECTION_TERMS = 4
MAX_SUBDIVISIONS_CAP = 1_000_000

#: |s - 1| below this raises PoleAt1 (quadratures here never approach s=1).
POLE_THRESHOLD = 1e-3


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision, truncation orders and quadrature tolerances."""

    target_abs_error: float = 1e-12
    euler_maclaurin_terms: int = 14
    rs_correction_terms: int = 2
    quad_tol: float = 1e-9
    max_subdivisions: int = 20_000

    def __post_init__(self):
        if not self.target_abs_error > 0:
            raise ValueError("target_abs_error must be > 0")
        if not self.quad_tol > 0:
            raise ValueError("quad_tol must be > 0")
        if self.target_abs_error > self.quad_tol:
            raise ValueError("target_abs_error must be <= quad_tol")
        if not 1 <= self.euler_maclaurin_terms <= MAX_EULER_MACLAURIN_TERMS:
            raise ValueError("euler_maclaurin_terms out of range")
        if not 0 <= self.rs_correction_terms <= MAX_RS_CORRECTION_TERMS:
            raise ValueError("rs_correction_terms out of range")
        if not 1 <= self.max_subdivisions <= MAX_SUBDIVISIONS_CAP:
            raise ValueError("max_subdivisions out of range")

    def refined(self, factor: float = 10.0) -> "PrecisionConfig":
        """A config with all tolerances tightened by ``factor``."""
        return replace(
            self,
            target_abs_error=self.target_abs_error / factor,
            quad_tol=self.quad_tol / factor,
            euler_maclaurin_terms=min(
                self.euler_maclaurin_terms + 2, MAX_EULER_MACLAURIN_TERMS
            ),
            rs_correction_terms=MAX_RS_CORRECTION_TERMS,
            max_subdivisions=min(self.max_subdivisions * 4, MAX_SUBDIVISIONS_CAP),
        )


#: Default configuration; suitable for every acceptance-scale experiment.
DEFAULT = PrecisionConfig()

#: Relaxed configuration for long scans where 1e-6 absolute suffices.
FAST = PrecisionConfig(
    target_abs_error=1e-9, quad_tol=1e-6, euler_maclaurin_terms=12,
    rs_correction_terms=2, max_subdivisions=20_000,
)
