"""Discriminant reports and blow-up bookkeeping for the conic-bundle models.

The twistor space maps onto the model surface as a conic bundle once a short,
explicitly specified chain of blow-ups removes the part of the base locus
meeting the distinguished exceptional divisors.  Both the centers of that
chain and the discriminant locus of the resulting bundle are pure
combinatorics of the multiplicity vector, so they are reported as a symbolic
ledger (curve names and index sets), never as geometry.

Two discriminant reports exist: the one over an untouched torus-invariant
metric (all interior indices participate) and the one after an equivariant
deformation (indices confined to the regular-run window r..s, with the lost
tails reappearing as hyperplane-section discriminant curves, exactly
n + r - s of them).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError
from .fans import fan_from_sequence, self_intersections
from .invariants import l_vector, reduction_trace, regularity, trace_divisor


@dataclass(frozen=True)
class DiscriminantReport:
    """Discriminant locus of a conic-bundle model, as index bookkeeping.

    The two sections are always discriminant curves.  Reducible fibers
    contribute chains of l_i + 1 rational curves, irreducible marked fibers
    contribute single curves, and in the deformed case n + r - s hyperplane
    sections join in.  Discriminant curves may be non-reduced; no multiplicity
    is computed (none is known), only the flag below records the caveat.
    """

    deformed: bool
    reducible_fiber_chains: tuple[tuple[int, int], ...]
    irreducible_fibers: tuple[int, ...]
    hyperplane_sections: int
    r: int | None = None
    s: int | None = None
    sections: tuple[str, str] = ("Gamma", "Gamma_bar")
    possibly_nonreduced: bool = True


def discriminant_joyce(seq: tuple[int, ...]) -> DiscriminantReport:
    """Discriminant report over the undeformed metric: every interior index
    shows up, as a chain when l_i > 0 and as an irreducible fiber when
    l_i = 0 (the two boundary fibers never contribute)."""
    lvec = l_vector(trace_divisor(reduction_trace(seq)))
    n = len(seq) - 1
    interior = range(2, n + 2)
    return DiscriminantReport(
        deformed=False,
        reducible_fiber_chains=tuple((i, lvec[i - 1] + 1) for i in interior if lvec[i - 1] > 0),
        irreducible_fibers=tuple(i for i in interior if lvec[i - 1] == 0),
        hyperplane_sections=0,
    )


def discriminant_deformed(seq: tuple[int, ...]) -> DiscriminantReport:
    """Discriminant report after the equivariant deformation: fibers are
    confined to r < i < s and the regular tails contribute n + r - s
    hyperplane sections.  Requires a non-semi-free sequence (the semi-free
    case belongs to LeBrun's theory); the report is emitted whether or not the
    slack is positive."""
    reg = regularity(seq)
    if reg.semi_free:
        raise InvalidParameterError(
            "semi-free sequence: deformations are handled by LeBrun theory"
        )
    lvec = l_vector(trace_divisor(reduction_trace(seq)))
    r, s, n = reg.r, reg.s, reg.n
    window = range(r + 1, s)
    return DiscriminantReport(
        deformed=True,
        reducible_fiber_chains=tuple((i, lvec[i - 1] + 1) for i in window if lvec[i - 1] > 0),
        irreducible_fibers=tuple(i for i in window if lvec[i - 1] == 0),
        hyperplane_sections=n + r - s,
        r=r,
        s=s,
    )


@dataclass(frozen=True)
class BlowUpStage:
    """One stage of the base-locus elimination.  Center names use '~' for the
    conjugate divisor and '&' for intersection; conjugate centers are implied
    throughout.  For stages past the second, plus_indices and minus_indices
    record which component towers (over E_2 and over ~E_{n+2}) are hit."""

    stage: int
    description: str
    centers: tuple[str, ...]
    plus_indices: tuple[int, ...] = field(default=())
    minus_indices: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class BlowUpSchedule:
    """Symbolic ledger of the partial base-locus elimination.

    One stage suffices in the semi-free case m = 1; otherwise the multiplicity
    vector empties out one unit per stage and the count is max(l_i) + 2.  The
    normal bundle of the distinguished exceptional divisor is the pullback of
    O(l+1, -1) with l the self-intersection of the marked component.
    """

    n: int
    m: int
    max_multiplicity: int
    normal_bundle: tuple[int, int]
    stages: tuple[BlowUpStage, ...]

    @property
    def stage_count(self) -> int:
        return len(self.stages)


def blow_up_schedule(seq: tuple[int, ...]) -> BlowUpSchedule:
    trace = reduction_trace(seq)
    div = trace_divisor(trace)
    lvec = l_vector(div)
    n, m = trace.n, trace.m
    marked_self_int = self_intersections(fan_from_sequence(seq))[0]
    normal_bundle = (marked_self_int + 1, -1)

    stages = [
        BlowUpStage(
            stage=1,
            description="blow up the marked curve pair C_1, ~C_1",
            centers=("C_1", "~C_1"),
        )
    ]
    if m == 1:
        return BlowUpSchedule(
            n=n,
            m=m,
            max_multiplicity=max(lvec),
            normal_bundle=normal_bundle,
            stages=tuple(stages),
        )

    stages.append(
        BlowUpStage(
            stage=2,
            description="blow up the four cycle components adjacent to the marked pair",
            centers=("C_2", f"~C_{n + 2}", "~C_2", f"C_{n + 2}"),
        )
    )
    interior = range(2, n + 2)
    plus3 = tuple(i for i in interior if div.plus[i - 1] > 0)
    minus3 = tuple(i for i in interior if div.minus[i - 1] > 0)
    stages.append(
        BlowUpStage(
            stage=3,
            description="blow up the base curves cut on E_2 and ~E_{n+2} by the divisor components",
            centers=tuple(f"E_2 & S_{i}^-" for i in plus3)
            + tuple(f"~E_{n + 2} & S_{i}^-" for i in minus3),
            plus_indices=plus3,
            minus_indices=minus3,
        )
    )
    max_mult = max(lvec)
    for t in range(4, max_mult + 3):
        threshold = t - 2
        plus_t = tuple(i for i in interior if div.plus[i - 1] >= threshold)
        minus_t = tuple(i for i in interior if div.minus[i - 1] >= threshold)
        primes = "'" * (t - 4)
        stages.append(
            BlowUpStage(
                stage=t,
                description=(
                    f"blow up the exceptional intersections still of multiplicity >= {threshold}"
                ),
                centers=tuple(f"F{primes}_{i} & E_2" for i in plus_t)
                + tuple(f"F{primes}_{i} & ~E_{n + 2}" for i in minus_t),
                plus_indices=plus_t,
                minus_indices=minus_t,
            )
        )
    return BlowUpSchedule(
        n=n,
        m=m,
        max_multiplicity=max_mult,
        normal_bundle=normal_bundle,
        stages=tuple(stages),
    )
