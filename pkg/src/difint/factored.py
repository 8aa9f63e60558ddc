"""Factored zero-pole-gain models with repeated first-order sections.

Every transfer function handled by this package has the shape

    gain * s**s_exponent * prod_i ((s + zeros[i]) / (s + poles[i]))**multiplicity

with a positive gain, a net s power restricted to {-1, 0, +1} and every
critical frequency on the open negative real axis.  Keeping the factored
form (instead of expanded polynomials) is what makes exact composition,
cancellation and reciprocal possible on 20+ section models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError

__all__ = [
    "DEFAULT_CANCEL_TOL",
    "ComplexResponse",
    "FactoredModel",
    "eval_response",
    "frequency_response",
    "multiply_and_simplify",
    "reciprocal",
]

# Designed compositions cancel exactly in closed form; floating-point noise
# on the same closed form sits near 1e-15 relative, so 1e-9 separates true
# cancellations from near-misses by six orders of magnitude.
DEFAULT_CANCEL_TOL = 1e-9


@dataclass(frozen=True)
class FactoredModel:
    """Immutable factored rational model.

    ``factors`` is an ordered sequence of ``(zero, pole)`` pairs, each pair
    meaning ``((s + zero) / (s + pole)) ** multiplicity``.
    """

    gain: float
    s_exponent: int = 0
    multiplicity: int = 1
    factors: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        gain = float(self.gain)
        if not (math.isfinite(gain) and gain > 0.0):
            raise DomainError(f"gain must be finite and positive, got {self.gain!r}")
        if self.s_exponent not in (-1, 0, 1):
            raise ShapeError(
                f"s exponent must be -1, 0 or +1, got {self.s_exponent!r}"
            )
        if int(self.multiplicity) < 1:
            raise DomainError(f"multiplicity must be >= 1, got {self.multiplicity!r}")
        factors = tuple((float(z), float(p)) for z, p in self.factors)
        for z, p in factors:
            if not (math.isfinite(z) and z > 0.0 and math.isfinite(p) and p > 0.0):
                raise DomainError(f"zero/pole values must be finite and > 0, got {(z, p)}")
        object.__setattr__(self, "gain", gain)
        object.__setattr__(self, "s_exponent", int(self.s_exponent))
        object.__setattr__(self, "multiplicity", int(self.multiplicity))
        object.__setattr__(self, "factors", factors)

    @property
    def zeros(self) -> tuple[float, ...]:
        return tuple(z for z, _ in self.factors)

    @property
    def poles(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.factors)


@dataclass(frozen=True)
class ComplexResponse:
    """A single frequency-response sample.

    ``magnitude_db`` and ``phase_deg`` are accumulated per factor (log
    magnitudes and arguments summed term by term) so long factor chains never
    wrap the phase or lose precision in the final complex value.
    """

    value: complex
    magnitude_db: float
    phase_deg: float


def eval_response(model: FactoredModel, omega: float) -> ComplexResponse:
    """Evaluate ``model`` at ``s = j*omega`` for a single ``omega > 0``.

    The complex ``value`` comes from the direct factor product; magnitude and
    phase come from summed per-factor log magnitudes and arguments.  The two
    routes agree to better than 1e-12 relative on any valid model.
    """
    if not omega > 0.0:
        raise DomainError(f"omega must be > 0, got {omega!r}")
    k = model.multiplicity
    value = complex(model.gain)
    mag_db = 20.0 * math.log10(model.gain)
    phase = 0.0
    if model.s_exponent:
        value *= (1j * omega) ** model.s_exponent
        mag_db += 20.0 * model.s_exponent * math.log10(omega)
        phase += model.s_exponent * (math.pi /  2.0)
    w2 = omega * omega
    for z, p in model.factors:
        value *= ((z + 1j * omega) / (p + 1j * omega)) ** k
        mag_db += 10.0 * k * math.log10((w2 + z * z) / (w2 + p * p))
        phase += k * (math.atan2(omega, z) - math.atan2(omega, p))
    return ComplexResponse(value, mag_db, math.degrees(phase))


def frequency_response(model: FactoredModel, omegas) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized response over an array of frequencies.

    Returns ``(values, magnitude_db, phase_deg)`` arrays.  Reductions run in
    fixed factor order, so results are independent of any outer parallelism.
    """
    w = np.asarray(omegas, dtype=float)
    if np.any(w <= 0.0):
        raise DomainError("all frequencies must be > 0")
    k = model.multiplicity
    jw = 1j * w
    values = np.full(w.shape, complex(model.gain))
    mag_db = np.full(w.shape, 20.0 * math.log10(model.gain))
    phase = np.zeros(w.shape)
    if model.s_exponent:
        values = values * jw**model.s_exponent
        mag_db = mag_db + 20.0 * model.s_exponent * np.log10(w)
        phase = phase + model.s_exponent * (math.pi / 2.0)
    w2 = w * w
    for z, p in model.factors:
        values = values * ((z + jw) / (p + jw)) ** k
        mag_db = mag_db + 10.0 * k * np.log10((w2 + z * z) / (w2 + p * p))
        phase = phase + k * (np.arctan2(w, z) - np.arctan2(w, p))
    return values, mag_db, np.degrees(phase)


def reciprocal(model: FactoredModel) -> FactoredModel:
    """Invert a model: 1/gain, negated s power, swapped zero/pole pairs."""
    return FactoredModel(
        gain=1.0 / model.gain,
        s_exponent=-model.s_exponent,
        multiplicity=model.multiplicity,
        factors=tuple((p, z) for z, p in model.factors),
    )


def _relative_gap(a: float, b: float) -> float:
    return abs(a - b) / max(a, b)


def _greedy_match(zeros, poles, rel_tol):
    """Match zeros against poles by nearest relative gap.

    Candidates within ``rel_tol`` are taken closest first; ties fall to the
    smaller zero index, then the smaller pole index.  Returns the sets of
    matched indices on either side.
    """
    candidates = []
    for iz, z in enumerate(zeros):
        for ip, p in enumerate(poles):
            gap = _relative_gap(z, p)
            if gap <= rel_tol:
                candidates.append((gap, iz, ip))
    candidates.sort()
    matched_z: set[int] = set()
    matched_p: set[int] = set()
    for _, iz, ip in candidates:
        if iz not in matched_z and ip not in matched_p:
            matched_z.add(iz)
            matched_p.add(ip)
    return matched_z, matched_p


def multiply_and_simplify(
    a: FactoredModel,
    b: FactoredModel,
    rel_tol: float = DEFAULT_CANCEL_TOL,
) -> FactoredModel:
    """Multiply two models and cancel matching zero/pole pairs.

    Gains multiply and s powers add; a zero of one operand cancels a pole of
    the other when their relative gap ``|z - p| / max(z, p)`` is within
    ``rel_tol``.  Because both operands must carry the same multiplicity, a
    cancellation removes the full repeated factor on both sides.  Surviving
    zeros and poles are re-paired in ascending order.

    Raises ``ShapeError`` when the multiplicities differ or the net s power
    leaves {-1, 0, +1}; an out-of-range s power is how a failed composition
    law shows up structurally, so it is deliberately not generalized away.
    """
    if not 0.0 <= rel_tol <= 1e-6:
        raise DomainError(f"rel_tol must lie in [0, 1e-6], got {rel_tol!r}")
    if a.multiplicity != b.multiplicity:
        raise ShapeError(
            f"factor multiplicities differ: {a.multiplicity} vs {b.multiplicity}"
        )
    s_exponent = a.s_exponent + b.s_exponent
    if s_exponent not in (-1, 0, 1):
        raise ShapeError(f"net s power {s_exponent} is outside {{-1, 0, +1}}")

    za, pa = list(a.zeros), list(a.poles)
    zb, pb = list(b.zeros), list(b.poles)
    za_used, pb_used = _greedy_match(za, pb, rel_tol)
    zb_used, pa_used = _greedy_match(zb, pa, rel_tol)

    zeros = sorted(
        [z for i, z in enumerate(za) if i not in za_used]
        + [z for i, z in enumerate(zb) if i not in zb_used]
    )
    poles = sorted(
        [p for i, p in enumerate(pa) if i not in pa_used]
        + [p for i, p in enumerate(pb) if i not in pb_used]
    )
    return FactoredModel(
        gain=a.gain * b.gain,
        s_exponent=s_exponent,
        multiplicity=a.multiplicity,
        factors=tuple(zip(zeros, poles)),
    )
