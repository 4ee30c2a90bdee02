"""Log-scaled complex arithmetic.

The completed zeta function shrinks like exp(-pi*t/4) along the critical
strip, so interesting values sit at magnitudes around 1e-30 .. 1e-40 and
products of many factors leave the double range entirely.  Every evaluator
in this package therefore returns a :class:`LogScaledComplex`: the pair
(log |z|, arg z).  Multiplication and division act directly on the pair,
and an ordinary ``complex`` is available only as a lossy view.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

TAU = 2.0 * math.pi
NEG_INF = float("-inf")


def wrap_phase(phi: float) -> float:
    """Reduce an angle to the half-open interval (-pi, pi]."""
    p = math.remainder(phi, TAU)
    if p <= -math.pi:
        p += TAU
    return p


@dataclass(frozen=True)
class LogScaledComplex:
    """A complex value stored as (log magnitude, phase).

    ``log_magnitude`` is the natural log of |z|; -inf encodes z = 0.
    ``phase`` lies in (-pi, pi] and is 0.0 for z = 0.  ``rel_error`` carries
    the producing evaluator's accuracy estimate; it never takes part in
    equality comparisons.
    """

    log_magnitude: float
    phase: float
    rel_error: float = field(default=0.0, compare=False)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LogScaledComplex":
        return cls(NEG_INF, 0.0)

    @classmethod
    def one(cls) -> "LogScaledComplex":
        return cls(0.0, 0.0)

    @classmethod
    def from_complex(cls, z: complex, rel_error: float = 0.0) -> "LogScaledComplex":
        z = complex(z)
        r = abs(z)
        if r == 0.0:
            return cls(NEG_INF, 0.0, rel_error)
        return cls(math.log(r), wrap_phase(math.atan2(z.imag, z.real)), rel_error)

    @classmethod
    def from_polar(cls, log_magnitude: float, phase: float,
                   rel_error: float = 0.0) -> "LogScaledComplex":
        if log_magnitude == NEG_INF:
            return cls(NEG_INF, 0.0, rel_error)
        return cls(log_magnitude, wrap_phase(phase), rel_error)

    # -- views -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.log_magnitude == NEG_INF

    def to_complex(self) -> complex:
        """Lossy view: under/overflows when |log_magnitude| is extreme."""
        if self.is_zero:
            return 0.0 + 0.0j
        return cmath.rect(math.exp(self.log_magnitude), self.phase)

    def descaled(self, ref_log_magnitude: float) -> complex:
        """z / exp(ref): brings a tiny value into plain-float range."""
        if self.is_zero:
            return 0.0 + 0.0j
        return cmath.rect(math.exp(self.log_magnitude - ref_log_magnitude), self.phase)

    @property
    def real(self) -> float:
        """Lossy real part."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_magnitude) * math.cos(self.phase)

    @property
    def imag(self) -> float:
        """Lossy imaginary part."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_magnitude) * math.sin(self.phase)

    @property
    def log10_magnitude(self) -> float:
        return self.log_magnitude / math.log(10.0)

    def imag_residue(self) -> float:
        """|Im z| / |z|: how far the value is from being real."""
        return abs(math.sin(self.phase))

    def snapped_real(self) -> "LogScaledComplex":
        """Project onto the real axis: phase becomes exactly 0 or pi."""
        if self.is_zero:
            return self
        snapped = 0.0 if math.cos(self.phase) >= 0.0 else math.pi
        return LogScaledComplex(self.log_magnitude, snapped, self.rel_error)

    def signed_magnitude(self) -> float:
        """exp(log_magnitude) with the sign taken from the phase.

        Only meaningful after :meth:`snapped_real` (phase 0 or pi).
        """
        if self.is_zero:
            return 0.0
        sign = 1.0 if math.cos(self.phase) >= 0.0 else -1.0
        return sign * math.exp(self.log_magnitude)

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "LogScaledComplex") -> "LogScaledComplex":
        if not isinstance(other, LogScaledComplex):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LogScaledComplex(NEG_INF, 0.0, self.rel_error + other.rel_error)
        return LogScaledComplex(
            self.log_magnitude + other.log_magnitude,
            wrap_phase(self.phase + other.phase),
            self.rel_error + other.rel_error,
        )

    def __truediv__(self, other: "LogScaledComplex") -> "LogScaledComplex":
        if not isinstance(other, LogScaledComplex):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by a log-scaled zero")
        if self.is_zero:
            return LogScaledComplex(NEG_INF, 0.0, self.rel_error + other.rel_error)
        return LogScaledComplex(
            self.log_magnitude - other.log_magnitude,
            wrap_phase(self.phase - other.phase),
            self.rel_error + other.rel_error,
        )

    def __neg__(self) -> "LogScaledComplex":
        if self.is_zero:
            return self
        return LogScaledComplex(self.log_magnitude, wrap_phase(self.phase + math.pi),
                                self.rel_error)

    def conjugate(self) -> "LogScaledComplex":
        return LogScaledComplex(self.log_magnitude, wrap_phase(-self.phase),
                                self.rel_error)

    def ratio_magnitude(self, other: "LogScaledComplex") -> float:
        """|self| / |other| as a plain float."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_magnitude - other.log_magnitude)
