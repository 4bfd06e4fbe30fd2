"""Invariants of a circle subgroup acting on an invariant anticanonical cycle.

Everything downstream is driven by the weight sequence (k_2, ..., k_{n+2}) of
the chosen circle subgroup on the components of the cycle.  The decrement
procedure repeatedly lowers the leftmost maximal run of maximal entries by
one; its step count m is the basic invariant.  The recorded steps assemble a
distinguished divisor, encoded by the plus/minus multiplicity vectors l_i^+,
l_i^-, whose sum l_i drives fibers, singularities and discriminants.  The
regular-run indices r and s and the slack n + r - s express the deformability
criterion.

Indices follow the geometry: weights are indexed 2..n+2 and divisors 1..n+2.
Python tuples hold the entries in that order, while every index appearing in
steps, reports or index sets is the 1-based geometric one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, InvalidSequenceError
from .fans import HalfFan, sequence_from_fan, validate_sequence


@dataclass(frozen=True)
class ReductionTrace:
    """Steps (i_l, j_l) of the decrement procedure on a weight sequence.

    Step l lowers entries i_l..j_l by one; indices are in the k-numbering
    (2..n+2).  The final step always spans (2, n+2): one pass before the end
    every entry equals 1.
    """

    n: int
    steps: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.steps)


def reduction_steps(
    entries: tuple[int, ...], first_index: int = 2
) -> tuple[tuple[int, int], ...]:
    """Run the decrement procedure on a positive sequence, recording steps.

    Each pass picks the smallest position attaining the maximum, extends it to
    the maximal run of equal entries, and lowers that run by one; passes repeat
    until the sequence is zero.  Positions are reported shifted so the first
    entry has index ``first_index``.
    """
    k = list(entries)
    steps: list[tuple[int, int]] = []
    while any(k):
        top = max(k)
        i = k.index(top)
        j = i
        while j + 1 < len(k) and k[j + 1] == top:
            j += 1
        for t in range(i, j + 1):
            k[t] -= 1
        steps.append((i + first_index, j + first_index))
    return tuple(steps)


def reduction_trace(seq: tuple[int, ...]) -> ReductionTrace:
    """Trace of the decrement procedure on a valid weight sequence."""
    validate_sequence(seq)
    n = len(seq) - 1
    steps = reduction_steps(seq)
    m = len(steps)
    if m > sum(seq):
        raise InternalInvariantError("step count exceeds the entry sum")
    if m < max(seq):
        raise InternalInvariantError("step count fell below the maximal weight")
    if steps[-1] != (2, n + 2):
        raise InternalInvariantError("final pass does not span the whole sequence")
    return ReductionTrace(n=n, steps=steps)


@dataclass(frozen=True)
class TraceDivisor:
    """Multiplicities of the degree-one components of the divisor built from
    a reduction trace: step (i_l, j_l) contributes the component left of the
    run on the plus side and the run end on the minus side.

    ``plus[t]`` and ``minus[t]`` are the multiplicities of the t+1-st
    plus/minus component; no index carries both signs, the first plus and last
    minus multiplicities are exactly one, and each sign sums to m.
    """

    n: int
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(self.plus)


def trace_divisor(trace: ReductionTrace) -> TraceDivisor:
    """Assemble the signed multiplicity vectors from a reduction trace."""
    n = trace.n
    plus = [0] * (n + 2)
    minus = [0] * (n + 2)
    for i, j in trace.steps:
        plus[i - 2] += 1
        minus[j - 1] += 1
    m = trace.m
    if plus[0] != 1 or minus[n + 1] != 1 or minus[0] != 0 or plus[n + 1] != 0:
        raise InternalInvariantError("boundary multiplicities of the trace divisor are wrong")
    if any(p and q for p, q in zip(plus, minus)):
        raise InternalInvariantError("an index carries both signs in the trace divisor")
    if sum(plus) != m or sum(minus) != m:
        raise InternalInvariantError("signed multiplicities do not each sum to m")
    return TraceDivisor(n=n, plus=tuple(plus), minus=tuple(minus))


def l_vector(div: TraceDivisor) -> tuple[int, ...]:
    """Total multiplicities l_i = l_i^+ + l_i^-; they sum to 2m and the two
    boundary entries are 1."""
    l = tuple(p + q for p, q in zip(div.plus, div.minus))
    if sum(l) != 2 * div.m or l[0] != 1 or l[-1] != 1:
        raise InternalInvariantError("l-vector failed its structural identities")
    return l


def sequence_l_vector(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Convenience: l-vector straight from a weight sequence."""
    return l_vector(trace_divisor(reduction_trace(seq)))


def restriction_multiplicities(
    div: TraceDivisor, seq: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Multiplicities of the cycle components in the divisor's restriction.

    Each plus component restricts to the half-cycle C_{a+1}, ..., conj C_a and
    each minus component to C_b, ..., conj C_{b+1}; accumulating them must give
    exactly m + k_i on C_i and m - k_i on conj C_i (and m on both C_1 and its
    conjugate).  A mismatch is an implementation bug, so it raises.
    """
    n = div.n
    if len(seq) != n + 1:
        raise InvalidSequenceError("sequence length does not match the divisor")
    c = [0] * (n + 2)
    cbar = [0] * (n + 2)
    for a in range(1, n + 3):
        weight = div.plus[a - 1]
        if weight:
            for t in range(a + 1, n + 3):
                c[t - 1] += weight
            for t in range(1, a + 1):
                cbar[t - 1] += weight
    for b in range(1, n + 3):
        weight = div.minus[b - 1]
        if weight:
            for t in range(1, b + 1):
                c[t - 1] += weight
            for t in range(b + 1, n + 3):
                cbar[t - 1] += weight
    m = div.m
    expected_c = (m,) + tuple(m + k for k in seq)
    expected_cbar = (m,) + tuple(m - k for k in seq)
    if tuple(c) != expected_c or tuple(cbar) != expected_cbar:
        raise InternalInvariantError("restriction multiplicities disagree with m +/- k_i")
    return tuple(c), tuple(cbar)


@dataclass(frozen=True)
class RegularityReport:
    """Regular components and the deformability slack of a weight sequence.

    A component is regular when its weight is 1.  r is the last index of the
    all-regular prefix starting at 2, s the first index of the all-regular
    suffix ending at n+2, and slack = n + r - s (nonnegative; positive slack
    is the deformability criterion).  For semi-free sequences (all weights 1)
    r and s are undefined and deformability is settled by LeBrun's theory of
    semi-free circle actions instead: such metrics deform whenever n >= 3.
    """

    n: int
    k: tuple[int, ...]
    regular: tuple[int, ...]
    semi_free: bool
    r: int | None
    s: int | None
    slack: int | None
    deformable: bool
    note: str | None = None


def regularity(seq: tuple[int, ...]) -> RegularityReport:
    validate_sequence(seq)
    n = len(seq) - 1
    regular = tuple(i for i in range(2, n + 3) if seq[i - 2] == 1)
    if all(k == 1 for k in seq):
        return RegularityReport(
            n=n,
            k=seq,
            regular=regular,
            semi_free=True,
            r=None,
            s=None,
            slack=None,
            deformable=n >= 3,
            note="semi-free: handled by LeBrun theory",
        )
    r = 2
    while r + 1 <= n + 2 and seq[r - 1] == 1:
        r += 1
    s = n + 2
    while s - 1 >= 2 and seq[s - 3] == 1:
        s -= 1
    if not 2 <= r < s <= n + 2:
        raise InternalInvariantError("regular-run indices out of order")
    slack = n + r - s
    if slack < 0:
        raise InternalInvariantError("slack n + r - s went negative")
    return RegularityReport(
        n=n,
        k=seq,
        regular=regular,
        semi_free=False,
        r=r,
        s=s,
        slack=slack,
        deformable=slack > 0,
    )


def is_lebrun(fan: HalfFan) -> bool:
    """Whether some marking of the fan yields the all-ones weight sequence,
    i.e. whether the surface belongs to a LeBrun twistor space (the marked
    subgroup then acts semi-freely and m = 1)."""
    return any(
        all(k == 1 for k in sequence_from_fan(fan, marked))
        for marked in range(1, fan.n + 3)
    )


def sequence_summary(seq: tuple[int, ...]) -> dict:
    """The invariant report of a weight sequence as a plain dict.

    Keys: n, k, m, trace, l_plus, l_minus, l, r, s, slack, deformable.
    """
    trace = reduction_trace(seq)
    div = trace_divisor(trace)
    reg = regularity(seq)
    return {
        "n": trace.n,
        "k": seq,
        "m": trace.m,
        "trace": trace.steps,
        "l_plus": div.plus,
        "l_minus": div.minus,
        "l": l_vector(div),
        "r": reg.r,
        "s": reg.s,
        "slack": reg.slack,
        "deformable": reg.deformable,
    }
