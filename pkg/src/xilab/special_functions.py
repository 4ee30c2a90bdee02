"""Complex log-gamma, analytically continued zeta, and the completed xi.

xi(s) = s(s-1)/2 * pi^(-s/2) * Gamma(s/2) * zeta(s) is entire, symmetric
under s <-> 1-s, and real on the critical line sigma = 1/2.  Assembly is
done entirely in log-scale so that magnitudes far below the plain-float
floor stay exact in the log_magnitude channel.

zeta is continued by Euler-Maclaurin summation (cutoff N, Bernoulli tail),
with the functional-equation reflection for sigma < 0.  Near s = 1 the
removable combination (s-1)*zeta(s) is evaluated by its local expansion.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import loggamma as _scipy_loggamma

from .errors import AccuracyError, PoleError
from .logscale import LogScaledComplex, wrap_phase

EULER_GAMMA = 0.5772156649015328606
# First two Stieltjes constants, for the (s-1)*zeta(s) expansion near s = 1.
STIELTJES_1 = -0.07281584548367672486
STIELTJES_2 = -0.00969036319287231848

LN_PI = math.log(math.pi)
MACHINE_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + i*t of the complex plane.

    ``lam`` is the strip coordinate lambda = sigma - 1/2, so the critical
    line is lam = 0 and the open strip is |lam| < 1/2.
    """

    sigma: float
    t: float

    @property
    def lam(self) -> float:
        return self.sigma - 0.5

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    @classmethod
    def from_lambda(cls, lam: float, t: float) -> "ComplexPoint":
        return cls(lam + 0.5, t)

    @classmethod
    def from_s(cls, s: complex) -> "ComplexPoint":
        s = complex(s)
        return cls(s.real, s.imag)

    def conjugate(self) -> "ComplexPoint":
        return ComplexPoint(self.sigma, -self.t)

    def reflected(self) -> "ComplexPoint":
        """The mirror point 1 - s."""
        return ComplexPoint(1.0 - self.sigma, -self.t)


@dataclass(frozen=True)
class EvalConfig:
    """Accuracy knobs for the gamma/zeta/xi evaluators.

    euler_maclaurin_cutoff is the floor for the summation cutoff N; the
    effective N also grows with |t| so accuracy stays uniform on the strip.
    euler_maclaurin_terms is the number of Bernoulli tail terms.
    """

    target_relative_error: float = 1e-12
    euler_maclaurin_terms: int = 14
    euler_maclaurin_cutoff: int = 50

    def __post_init__(self) -> None:
        if not (0.0 < self.target_relative_error <= 1e-6):
            raise ValueError("target_relative_error must lie in (0, 1e-6]")
        if self.euler_maclaurin_terms < 1 or self.euler_maclaurin_cutoff < 1:
            raise ValueError("term counts must be >= 1")


DEFAULT_CONFIG = EvalConfig()


@lru_cache(maxsize=8)
def _even_bernoulli(count: int) -> tuple[float, ...]:
    """B_2, B_4, ..., B_{2*count} computed exactly, then rounded to float."""
    top = 2 * count
    b = [Fraction(1)]
    for m in range(1, top + 1):
        acc = Fraction(0)
        comb = 1
        for j in range(m):
            acc += comb * b[j]
            comb = comb * (m + 1 - j) // (j + 1)
        b.append(-acc / (m + 1))
    return tuple(float(b[2 * k]) for k in range(1, count + 1))


@lru_cache(maxsize=64)
def _log_range(n: int) -> np.ndarray:
    return np.log(np.arange(1, n, dtype=float))


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real)


def ln_gamma(s: ComplexPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> LogScaledComplex:
    """Gamma(s) in log-scale (principal branch of log Gamma).

    log_magnitude is Re log Gamma, the phase is Im log Gamma wrapped to
    (-pi, pi].  Raises PoleError at the poles s = 0, -1, -2, ...
    """
    z = s.s
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at s = {z}")
    w = complex(_scipy_loggamma(z))
    # Error of exp(w) is dominated by the absolute rounding of Re/Im w.
    est = 8.0 * MACHINE_EPS * max(1.0, abs(w))
    if est > cfg.target_relative_error:
        raise AccuracyError(
            f"ln_gamma at {z}: estimated relative error {est:.3e} exceeds "
            f"target {cfg.target_relative_error:.3e}")
    return LogScaledComplex.from_polar(w.real, w.imag, rel_error=est)


def _log_sin(w: complex) -> LogScaledComplex:
    """sin(w) in log-scale, stable for |Im w| large."""
    if w.imag > 20.0:
        # sin w = (i/2) e^{-iw} (1 - e^{2iw}),  |e^{2iw}| = e^{-2 Im w} << 1
        rest = (0.5j) * (1.0 - cmath.exp(2j * w))
        return LogScaledComplex.from_complex(rest) * LogScaledComplex.from_polar(
            w.imag, -w.real)
    if w.imag < -20.0:
        return _log_sin(w.conjugate()).conjugate()
    return LogScaledComplex.from_complex(cmath.sin(w))


def _zeta_euler_maclaurin(z: complex, cfg: EvalConfig) -> tuple[complex, float]:
    """Euler-Maclaurin value of zeta(z) for Re z >= 0, plus an error estimate."""
    m_terms = cfg.euler_maclaurin_terms
    n_cut = max(cfg.euler_maclaurin_cutoff, int(math.ceil(0.6 * abs(z.imag))) + 8)

    # sum_{n < N} n^-z  +  N^-z/2  +  N^{1-z}/(z-1)  +  Bernoulli tail
    powers = np.exp(-z * _log_range(n_cut))
    total = complex(powers.sum())
    ln_n = math.log(n_cut)
    n_pow_minus_z = cmath.exp(-z * ln_n)
    total += 0.5 * n_pow_minus_z
    total += n_pow_minus_z * n_cut / (z - 1.0)

    bern = _even_bernoulli(m_terms + 1)
    rising = z                      # z (z+1) ... (z+2k-2)
    n_power = n_pow_minus_z / n_cut  # N^{-z-2k+1}
    factorial = 2.0                  # (2k)!
    last_term_mag = 0.0
    for k in range(1, m_terms + 1):
        term = bern[k - 1] / factorial * rising * n_power
        total += term
        last_term_mag = abs(term)
        rising *= (z + (2 * k - 1)) * (z + 2 * k)
        n_power /= n_cut * n_cut
        factorial *= (2 * k + 1) * (2 * k + 2)

    # First omitted term bounds the remainder up to the standard
    # |(z+2M+1)/(sigma+2M+1)| factor.
    omitted = abs(bern[m_terms] / factorial * rising * n_power)
    safety = abs(z + (2 * m_terms + 1)) / (z.real + 2 * m_terms + 1)
    est_abs = omitted * safety + 8.0 * MACHINE_EPS * abs(total)
    scale = abs(total)
    rel = est_abs / scale if scale > 0.0 else est_abs
    return total, rel


def zeta(s: ComplexPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> LogScaledComplex:
    """Analytically continued zeta(s) in log-scale.

    Euler-Maclaurin summation for sigma >= 0; the functional equation
    zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) for sigma < 0.
    Raises PoleError at s = 1 and AccuracyError when the configured budget
    cannot reach cfg.target_relative_error.
    """
    z = s.s
    if z == 1.0:
        raise PoleError("zeta pole at s = 1")
    if s.sigma < 0.0:
        two_pow = LogScaledComplex.from_polar(s.sigma * math.log(2.0),
                                              s.t * math.log(2.0))
        pi_pow = LogScaledComplex.from_polar((s.sigma - 1.0) * LN_PI, s.t * LN_PI)
        sin_part = _log_sin(0.5 * math.pi * z)
        gamma_part = ln_gamma(ComplexPoint.from_s(1.0 - z), cfg)
        zeta_part = zeta(s.reflected(), cfg)
        return two_pow * pi_pow * sin_part * gamma_part * zeta_part

    value, rel = _zeta_euler_maclaurin(z, cfg)
    if rel > cfg.target_relative_error:
        raise AccuracyError(
            f"zeta at {z}: estimated relative error {rel:.3e} exceeds target "
            f"{cfg.target_relative_error:.3e} "
            f"(terms={cfg.euler_maclaurin_terms}, cutoff={cfg.euler_maclaurin_cutoff})")
    return LogScaledComplex.from_complex(value, rel_error=rel)


def _one_minus_s_zeta(s: ComplexPoint, cfg: EvalConfig) -> LogScaledComplex:
    """(s-1)*zeta(s), with the pole removed by a local expansion near s = 1."""
    z = s.s
    u = z - 1.0
    if abs(u) < 1e-6:
        # (s-1) zeta(s) = 1 + euler_gamma u - gamma_1 u^2 + gamma_2/2 u^3 + ...
        val = 1.0 + EULER_GAMMA * u - STIELTJES_1 * u * u
        est = abs(STIELTJES_2) / 2.0 * abs(u) ** 3 + 4.0 * MACHINE_EPS
        return LogScaledComplex.from_complex(val, rel_error=est)
    return LogScaledComplex.from_complex(u) * zeta(s, cfg)


def xi(s: ComplexPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> LogScaledComplex:
    """The completed function xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s).

    Assembled as Gamma(s/2 + 1) * pi^(-s/2) * (s-1)*zeta(s), which absorbs
    the Gamma pole at s = 0 and the zeta pole at s = 1; the result is entire.
    All factors multiply in log-scale.
    """
    z = s.s
    gamma_part = ln_gamma(ComplexPoint.from_s(0.5 * z + 1.0), cfg)
    pi_pow = LogScaledComplex.from_polar(-0.5 * s.sigma * LN_PI,
                                         wrap_phase(-0.5 * s.t * LN_PI))
    zeta_part = _one_minus_s_zeta(s, cfg)
    return gamma_part * pi_pow * zeta_part
