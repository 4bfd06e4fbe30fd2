"""Deterministic JSON, LaTeX and plain-text emission.

Rationals print reduced as "p/q", infinity as "inf", JSON keys are sorted and
nothing time- or environment-dependent ever enters the output, so identical
inputs produce identical bytes.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .conic_bundle import BlowUpSchedule, DiscriminantReport
from .exact import Infinity, format_scalar
from .model import MinitwistorModel, QuadraticForm


def jsonable(value):
    """Recursively convert library objects to JSON-serializable data."""
    if isinstance(value, (Fraction, Infinity)):
        return format_scalar(value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {_key_str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _key_str(key) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, tuple):
        return ",".join(str(part) for part in key)
    return str(key)


def dumps(value) -> str:
    return json.dumps(jsonable(value), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# equation rendering


def _ordered_terms(q: QuadraticForm) -> list[tuple[tuple[int, int], Fraction]]:
    # descending total degree on the parameter curve, then descending index
    return sorted(q.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]))


def _join_terms(rendered: list[tuple[int, str]]) -> str:
    if not rendered:
        return "0"
    parts = []
    for position, (sign, body) in enumerate(rendered):
        if position == 0:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append(("- " if sign < 0 else "+ ") + body)
    return " ".join(parts)


def equation_latex(model: MinitwistorModel) -> str:
    """The model equation z_{m+1} z_{m+2} = Q as a LaTeX line."""
    m = model.m
    rendered = []
    for (a, b), coeff in _ordered_terms(model.q):
        mono = f"z_{{{a}}}^{{2}}" if a == b else f"z_{{{a}}}z_{{{b}}}"
        mag = abs(coeff)
        if mag == 1:
            body = mono
        elif mag.denominator == 1:
            body = f"{mag.numerator}{mono}"
        else:
            body = f"\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}{mono}"
        rendered.append((1 if coeff > 0 else -1, body))
    return f"z_{{{m + 1}}}z_{{{m + 2}}} = " + _join_terms(rendered)


def equation_text(model: MinitwistorModel) -> str:
    m = model.m
    rendered = []
    for (a, b), coeff in _ordered_terms(model.q):
        mono = f"z{a}^2" if a == b else f"z{a}*z{b}"
        mag = abs(coeff)
        body = mono if mag == 1 else f"{format_scalar(mag)}*{mono}"
        rendered.append((1 if coeff > 0 else -1, body))
    return f"z{m + 1}*z{m + 2} = " + _join_terms(rendered)


def model_text(model: MinitwistorModel) -> str:
    lines = [
        f"n = {model.n}, m = {model.m}, surface of degree {model.surface_degree} "
        f"in CP^{model.ambient_dim}",
        f"lambdas: ({', '.join(format_scalar(l) for l in model.lambdas)}), c = {model.c_sign:+d}",
        f"dim V_m = {model.dim_vm}, dim W_m = {model.dim_wm}",
        "equation: " + equation_text(model),
    ]
    if model.singularities:
        for record in model.singularities:
            if record.kind == "cyclic-quotient-pair":
                lines.append(
                    f"singularity: conjugate pair of cyclic quotient points C^2/Z_{record.order}"
                )
            else:
                lines.append(
                    f"singularity: A_{record.order} over lambda_{record.index} = "
                    f"{format_scalar(record.location)}"
                )
    else:
        lines.append("singularity: none (smooth quadric)")
    lines.append(
        "reducible fibers over: "
        + ", ".join(format_scalar(v) for v in model.reducible_fibers)
    )
    if model.irreducible_marked_fibers:
        lines.append(
            "irreducible marked fibers over: "
            + ", ".join(format_scalar(v) for v in model.irreducible_marked_fibers)
        )
    lines.append(
        "moduli dimension: "
        + ("-" if model.moduli_dim is None else str(model.moduli_dim))
    )
    if model.fixed_lines:
        lines.append(
            "pointwise-fixed twistor lines at indices: "
            + ", ".join(str(i) for i in model.fixed_lines)
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# discriminant and schedule rendering


def discriminant_text(report: DiscriminantReport) -> str:
    kind = "deformed" if report.deformed else "torus-invariant"
    lines = [f"discriminant locus ({kind} model):"]
    lines.append("  sections: " + ", ".join(report.sections))
    for index, length in report.reducible_fiber_chains:
        lines.append(f"  reducible fiber chain at index {index}: {length} curves")
    for index in report.irreducible_fibers:
        lines.append(f"  irreducible fiber at index {index}")
    if report.deformed:
        lines.append(f"  hyperplane sections: {report.hyperplane_sections} (= n + r - s)")
    lines.append("  multiplicities: possibly non-reduced (not computed)")
    return "\n".join(lines)


def discriminant_latex(report: DiscriminantReport) -> str:
    kind = "deformed" if report.deformed else "torus-invariant"
    rows = [f"sections & $\\Gamma,\\ \\overline{{\\Gamma}}$ & 2 \\\\"]
    for index, length in report.reducible_fiber_chains:
        rows.append(f"reducible fiber chain & $i = {index}$ & {length} \\\\")
    for index in report.irreducible_fibers:
        rows.append(f"irreducible fiber & $i = {index}$ & 1 \\\\")
    if report.deformed:
        rows.append(f"hyperplane sections & $n + r - s$ & {report.hyperplane_sections} \\\\")
    body = "\n".join(rows)
    return (
        f"% discriminant locus of the {kind} conic bundle\n"
        "\\begin{tabular}{lll}\n"
        "component & location & count \\\\\n"
        "\\hline\n"
        f"{body}\n"
        "\\end{tabular}"
    )


def schedule_text(schedule: BlowUpSchedule) -> str:
    lines = [
        f"blow-up schedule: {schedule.stage_count} stage(s), m = {schedule.m}, "
        f"max multiplicity = {schedule.max_multiplicity}",
        f"normal bundle of E_1: O({schedule.normal_bundle[0]}, {schedule.normal_bundle[1]}) pullback",
    ]
    for stage in schedule.stages:
        lines.append(f"  stage {stage.stage}: {stage.description}")
        if stage.centers:
            lines.append("    centers: " + ", ".join(stage.centers) + " (+ conjugates)")
    return "\n".join(lines)
