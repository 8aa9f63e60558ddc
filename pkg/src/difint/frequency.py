"""Frequency grids, exact fractional responses and band error norms."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .design import DesignSpec, design_pair, special_epsilon
from .errors import DomainError
from .factored import ComplexResponse, FactoredModel, frequency_response

__all__ = [
    "DIFFERENTIATOR",
    "INTEGRATOR",
    "ErrorReport",
    "SweepRow",
    "error_series",
    "exact_response",
    "make_grid",
    "sweep_table",
]

INTEGRATOR = "integrator"
DIFFERENTIATOR = "differentiator"


def make_grid(omega_l: float, omega_h: float, count: int) -> np.ndarray:
    """Log-uniform frequency grid spanning [omega_l, omega_h] inclusive."""
    if count < 2:
        raise DomainError(f"grid needs at least 2 points, got {count!r}")
    if not 0.0 < omega_l < omega_h:
        raise DomainError(f"band must satisfy 0 < omega_l < omega_h, got [{omega_l!r}, {omega_h!r}]")
    ratio = omega_h / omega_l
    points = omega_l * ratio ** (np.arange(count) / (count - 1))
    points[0] = omega_l
    points[-1] = omega_h
    return points


def _signed_order(alpha: float, kind: str) -> float:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"order must lie in (0, 1), got {alpha!r}")
    if kind == INTEGRATOR:
        return -alpha
    if kind == DIFFERENTIATOR:
        return alpha
    raise DomainError(f"kind must be {INTEGRATOR!r} or {DIFFERENTIATOR!r}, got {kind!r}")


def exact_response(alpha: float, kind: str, omega: float) -> ComplexResponse:
    """Ideal operator response: magnitude omega**(+-alpha), phase +-90*alpha."""
    if not omega > 0.0:
        raise DomainError(f"omega must be > 0, got {omega!r}")
    a = _signed_order(alpha, kind)
    return ComplexResponse(
        value=cmath.exp(a * cmath.log(1j * omega)),
        magnitude_db=20.0 * a * math.log10(omega),
        phase_deg=90.0 * a,
    )


@dataclass(frozen=True)
class ErrorReport:
    """Pointwise dB/degree error series over a grid plus their norms.

    Norms are the plain discrete max and root-sum-square over the grid
    samples (no frequency weighting).
    """

    magnitude_error_db: np.ndarray
    phase_error_deg: np.ndarray
    mag_norm_inf: float
    mag_norm_two: float
    phase_norm_inf: float
    phase_norm_two: float

    @classmethod
    def from_series(cls, magnitude_error_db, phase_error_deg) -> "ErrorReport":
        em = np.asarray(magnitude_error_db, dtype=float)
        ep = np.asarray(phase_error_deg, dtype=float)
        return cls(
            magnitude_error_db=em,
            phase_error_deg=ep,
            mag_norm_inf=float(np.max(np.abs(em))),
            mag_norm_two=float(math.sqrt(np.sum(em * em))),
            phase_norm_inf=float(np.max(np.abs(ep))),
            phase_norm_two=float(math.sqrt(np.sum(ep * ep))),
        )


def error_series(model: FactoredModel, alpha: float, kind: str, grid) -> ErrorReport:
    """Exact-minus-model magnitude (dB) and phase (deg) series over ``grid``."""
    w = np.asarray(grid, dtype=float)
    a = _signed_order(alpha, kind)
    _, mag_db, phase_deg = frequency_response(model, w)
    exact_mag = 20.0 * a * np.log10(w)
    exact_phase = np.full(w.shape, 90.0 * a)
    return ErrorReport.from_series(exact_mag - mag_db, exact_phase - phase_deg)


@dataclass(frozen=True)
class SweepRow:
    """Worst-case norms across an order sweep (one benchmark table row)."""

    mag_norm_inf: float
    mag_norm_two: float
    phase_norm_inf: float
    phase_norm_two: float


def sweep_table(
    kappa: int,
    kind: str,
    alphas,
    omega_l: float = 1e-3,
    omega_h: float = 1e3,
    n: int = 10,
    k: int = 2,
    count: int = 10000,
    epsilon: float | None = None,
) -> SweepRow:
    """Per-order error norms, maximized over ``alphas``.

    Each order gets its own norm over a ``count``-point grid; the row
    reports the maximum of each norm across the sweep.  Methods 3 and 4
    default to their special offset (the value collapsing them onto
    methods 1 and 2) unless ``epsilon`` is given explicitly.
    """
    alphas = list(alphas)
    if not alphas:
        raise DomainError("order sweep must not be empty")
    grid = make_grid(omega_l, omega_h, count)
    rows = []
    for alpha in alphas:
        spec = DesignSpec(kappa, alpha, omega_l, omega_h, n, k, epsilon)
        if kappa in (3, 4) and epsilon is None:
            spec = DesignSpec(kappa, alpha, omega_l, omega_h, n, k, special_epsilon(spec))
        pair = design_pair(spec)
        model = pair.integrator if kind == INTEGRATOR else pair.differentiator
        rows.append(error_series(model, alpha, kind, grid))
    return SweepRow(
        mag_norm_inf=max(r.mag_norm_inf for r in rows),
        mag_norm_two=max(r.mag_norm_two for r in rows),
        phase_norm_inf=max(r.phase_norm_inf for r in rows),
        phase_norm_two=max(r.phase_norm_two for r in rows),
    )
