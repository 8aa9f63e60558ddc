"""Summation (partial-fraction) forms and passive RC realizations.

A factored integrator model expands into

    direct + origin_residue/s + sum_i sum_l residues[i][l-1] / (s + pole_i)**l

Simple poles use the closed-form cover-up residues; repeated poles use the
Heaviside derivative rule evaluated through truncated local series (the
numerator and denominator are shifted to the pole and long-divided), which
keeps the arithmetic in the local scale instead of expanding degree-40
polynomials with a 1e15 coefficient spread.

A summation form whose residues are all simple and positive is the
driving-point impedance of a series chain: a resistor for the direct term, a
capacitor for the 1/s term and one parallel RC section per pole.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import ConditioningError, DomainError, NotRealizableError
from .factored import FactoredModel

__all__ = [
    "ParallelRC",
    "PartialFractionForm",
    "PartialFractionTerm",
    "RcNetwork",
    "SeriesCapacitor",
    "SeriesResistor",
    "evaluate_partial_fractions",
    "export_netlist",
    "network_impedance",
    "synthesize_rc",
    "to_partial_fractions",
]

_DISTINCT_POLE_TOL = 1e-12


@dataclass(frozen=True)
class PartialFractionTerm:
    """One pole with its residue ladder: residues[l-1] / (s + pole)**l."""

    pole: float
    residues: tuple[float, ...]


@dataclass(frozen=True)
class PartialFractionForm:
    direct: float
    origin_residue: float  # coefficient of 1/s, 0 when the model has no s pole
    terms: tuple[PartialFractionTerm, ...]


def _series_mul(a: list[float], b: list[float], order: int) -> list[float]:
    out = [0.0] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0.0:
            continue
        for j, bj in enumerate(b[: order - i]):
            out[i + j] += ai * bj
    return out


def _series_div(num: list[float], den: list[float], order: int) -> list[float]:
    if den[0] == 0.0:
        raise ConditioningError("series division by a vanishing leading coefficient")
    out = [0.0] * order
    for i in range(order):
        acc = num[i] if i < len(num) else 0.0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out[i] = acc / den[0]
    return out


def _check_poles_distinct(poles) -> None:
    ordered = sorted(poles)
    for a, b in zip(ordered, ordered[1:]):
        if (b - a) / max(a, b) <= _DISTINCT_POLE_TOL:
            raise ConditioningError(
                f"poles {a!r} and {b!r} coincide; expansion would be ill conditioned"
            )


def _simple_residues(gain: float, zeros, poles, with_origin_pole: bool) -> list[float]:
    residues = []
    for i, p in enumerate(poles):
        r = gain * (zeros[i] - p)
        for l, (z, q) in enumerate(zip(zeros, poles)):
            if l != i:
                r *= (z - p) / (q - p)
        if with_origin_pole:
            r /= -p
        residues.append(r)
    return residues


def _repeated_residues(model: FactoredModel, pole_index: int) -> list[float]:
    """Heaviside residues at poles[pole_index] via local series division.

    With G(s) = (s + p)**k * H(s), the residue of depth l is the coefficient
    of t**(k-l) in the expansion of G(-p + t); numerator and denominator are
    built factor by factor around the pole, then long-divided.
    """
    k = model.multiplicity
    p = model.poles[pole_index]
    num = [model.gain]
    for z in model.zeros:
        for _ in range(k):
            num = _series_mul(num, [z - p, 1.0], k)
    den = [1.0]
    for i, q in enumerate(model.poles):
        if i == pole_index:
            continue
        for _ in range(k):
            den = _series_mul(den, [q - p, 1.0], k)
    if model.s_exponent == -1:
        den = _series_mul(den, [-p, 1.0], k)
    local = _series_div(num, den, k)
    return [local[k - l] for l in range(1, k + 1)]


def to_partial_fractions(model: FactoredModel) -> PartialFractionForm:
    """Expand a factored model into its summation form.

    Requires distinct poles (designed models interlace, so this always
    holds for them) and a net s power of 0 or -1; a differentiator carrying
    a bare s factor has no proper expansion.
    """
    if model.s_exponent not in (-1, 0):
        raise DomainError(
            f"summation form needs s_exponent in {{-1, 0}}, got {model.s_exponent}"
        )
    _check_poles_distinct(model.poles)

    direct = model.gain if model.s_exponent == 0 else 0.0
    origin = 0.0
    if model.s_exponent == -1:
        origin = model.gain
        for z, p in model.factors:
            origin *= (z / p) ** model.multiplicity

    k = model.multiplicity
    if k == 1:
        residues = _simple_residues(
            model.gain, model.zeros, model.poles, model.s_exponent == -1
        )
        terms = tuple(
            PartialFractionTerm(p, (r,)) for p, r in zip(model.poles, residues)
        )
    else:
        terms = tuple(
            PartialFractionTerm(p, tuple(_repeated_residues(model, i)))
            for i, p in enumerate(model.poles)
        )
    return PartialFractionForm(direct, origin, terms)


def evaluate_partial_fractions(pf: PartialFractionForm, s_values) -> np.ndarray:
    """Evaluate a summation form at complex points (used for round trips)."""
    s = np.asarray(s_values, dtype=complex)
    out = np.full(s.shape, complex(pf.direct))
    if pf.origin_residue:
        out = out + pf.origin_residue / s
    for term in pf.terms:
        base = s + term.pole
        power = base.copy()
        for residue in term.residues:
            out = out + residue / power
            power = power * base
    return out


@dataclass(frozen=True)
class SeriesResistor:
    resistance: float


@dataclass(frozen=True)
class SeriesCapacitor:
    capacitance: float


@dataclass(frozen=True)
class ParallelRC:
    resistance: float
    capacitance: float


@dataclass(frozen=True)
class RcNetwork:
    """Series chain of elements whose driving-point impedance realizes a
    simple-pole summation form."""

    elements: tuple[SeriesResistor | SeriesCapacitor | ParallelRC, ...]


def synthesize_rc(pf: PartialFractionForm) -> RcNetwork:
    """Map a summation form onto a series RC chain.

    r/(s + p) is exactly the impedance of a parallel RC with R = r/p and
    C = 1/r; the direct term is a series resistor and the 1/s term a series
    capacitor.  Requires simple poles and nonnegative direct/origin terms
    with strictly positive residues, i.e. an RC driving-point impedance.
    """
    if any(len(term.residues) != 1 for term in pf.terms):
        raise NotRealizableError(
            "repeated poles have no single-section RC realization (k > 1 not synthesizable)"
        )
    if pf.direct < 0.0 or pf.origin_residue < 0.0:
        raise NotRealizableError(
            f"negative series term (direct={pf.direct!r}, origin={pf.origin_residue!r})"
        )
    elements: list[SeriesResistor | SeriesCapacitor | ParallelRC] = []
    if pf.direct > 0.0:
        elements.append(SeriesResistor(pf.direct))
    if pf.origin_residue > 0.0:
        elements.append(SeriesCapacitor(1.0 / pf.origin_residue))
    for term in pf.terms:
        residue = term.residues[0]
        if residue <= 0.0:
            raise NotRealizableError(
                f"residue {residue!r} at pole {term.pole!r} is not positive"
            )
        elements.append(ParallelRC(resistance=residue / term.pole, capacitance=1.0 / residue))
    return RcNetwork(tuple(elements))


def network_impedance(network: RcNetwork, omegas) -> np.ndarray:
    """Driving-point impedance of the series chain at s = j*omega."""
    s = 1j * np.asarray(omegas, dtype=float)
    z = np.zeros(s.shape, dtype=complex)
    for element in network.elements:
        if isinstance(element, SeriesResistor):
            z = z + element.resistance
        elif isinstance(element, SeriesCapacitor):
            z = z + 1.0 / (s * element.capacitance)
        else:
            z = z + element.resistance / (1.0 + s * element.resistance * element.capacitance)
    return z


def _sci(value: float, precision: int = 9) -> str:
    mantissa, exponent = f"{value:.{precision}e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _meta_comment(meta) -> str:
    if not meta:
        return "* design: unspecified"
    parts = " ".join(f"{key}={value}" for key, value in meta.items())
    return f"* design: {parts}"


def export_netlist(network: RcNetwork, format: str = "spice", meta=None, precision: int = 9) -> str:
    """Serialize a network as SPICE-like text or a JSON document.

    The chain occupies nodes 1, 2, ... with the far end grounded at node 0;
    both legs of a parallel RC share the same node pair.  Values print in
    scientific notation at ``precision`` fractional digits.
    """
    groups = len(network.elements)
    lines = ["* series rc chain, driving-point impedance between node 1 and 0"]
    records = []
    r_count = c_count = 0
    for index, element in enumerate(network.elements):
        node_a = index + 1
        node_b = 0 if index == groups - 1 else index + 2
        if isinstance(element, SeriesResistor):
            r_count += 1
            records.append(("resistor", f"R{r_count}", node_a, node_b, element.resistance, None))
        elif isinstance(element, SeriesCapacitor):
            c_count += 1
            records.append(("capacitor", f"C{c_count}", node_a, node_b, element.capacitance, None))
        else:
            r_count += 1
            c_count += 1
            records.append(
                ("parallel_rc", f"R{r_count}/C{c_count}", node_a, node_b,
                 element.resistance, element.capacitance)
            )
    if format == "spice":
        for kind, name, node_a, node_b, first, second in records:
            if kind == "parallel_rc":
                r_name, c_name = name.split("/")
                lines.append(f"{r_name} {node_a} {node_b} {_sci(first, precision)}")
                lines.append(f"{c_name} {node_a} {node_b} {_sci(second, precision)}")
            else:
                lines.append(f"{name} {node_a} {node_b} {_sci(first, precision)}")
        lines.append(_meta_comment(meta))
        return "\n".join(lines) + "\n"
    if format == "json":
        elements = []
        for kind, name, node_a, node_b, first, second in records:
            entry = {"kind": kind, "nodes": [node_a, node_b]}
            if kind == "resistor":
                entry["R"] = float(_sci(first, precision))
            elif kind == "capacitor":
                entry["C"] = float(_sci(first, precision))
            else:
                entry["R"] = float(_sci(first, precision))
                entry["C"] = float(_sci(second, precision))
            elements.append(entry)
        document = {"elements": elements, "meta": dict(meta) if meta else {}}
        return json.dumps(document, indent=2) + "\n"
    raise DomainError(f"format must be 'spice' or 'json', got {format!r}")
