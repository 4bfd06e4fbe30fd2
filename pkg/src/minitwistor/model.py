"""Projective model of the minitwistor space attached to a weight sequence.

The model is a degree-2m surface in CP^{m+2} fibered in conics over a rational
normal curve of degree m: in suitable coordinates it satisfies the single
quadratic equation

    z_{m+1} z_{m+2} = Q(z_0, ..., z_m),

where the product z_{m+1} z_{m+2} expands, on the curve z_d = u_1^d u_{n+2}^{m-d},
to the binary form

    c * u_1 * prod_{i=2}^{n+1} (u_1 - lambda_i u_{n+2})^{l_i} * u_{n+2}.

The exponents are the multiplicity vector of the trace divisor and the
lambda_i are the conformal invariants of the metric, normalized so that
lambda_1 = 0 and lambda_{n+2} = infinity.  Q is determined only up to the
ideal of the rational normal curve; the canonical choice here is the balanced
split of each monomial, and equality of two splits is decided by comparing
pullbacks.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError, InvalidParameterError
from .exact import INF, Infinity, Scalar
from .invariants import l_vector, reduction_trace, trace_divisor


def default_lambdas(n: int) -> tuple[Scalar, ...]:
    """The sample conformal invariants (0, 1, 2, ..., n, inf)."""
    return tuple(Fraction(i) for i in range(n + 1)) + (INF,)


def validate_lambdas(lambdas: tuple[Scalar, ...], n: int) -> None:
    """Check a conformal-invariant tuple: lambda_1 = 0, lambda_{n+2} = inf,
    strictly increasing finite values in between."""
    if len(lambdas) != n + 2:
        raise InvalidParameterError(f"need {n + 2} conformal invariants, got {len(lambdas)}")
    if lambdas[0] != Fraction(0):
        raise InvalidParameterError("lambda_1 must be 0")
    if not isinstance(lambdas[-1], Infinity):
        raise InvalidParameterError("lambda_{n+2} must be inf")
    middle = lambdas[1:-1]
    for value in middle:
        if not isinstance(value, Fraction):
            raise InvalidParameterError("interior conformal invariants must be rational")
    for a, b in zip((Fraction(0),) + middle, middle):
        if not a < b:
            raise InvalidParameterError("conformal invariants must be strictly increasing")


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous binary form; coefficients[d] multiplies u_1^d u_{n+2}^{degree-d}."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise InvalidParameterError("coefficient list does not match the degree")

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def rhs_polynomial(
    lvec: tuple[int, ...], lambdas: tuple[Scalar, ...], c_sign: int = 1
) -> BinaryForm:
    """Expand c * u_1 * prod (u_1 - lambda_i u_{n+2})^{l_i} * u_{n+2} exactly.

    The boundary multiplicities must equal 1 (they always do for trace
    divisors); the result has degree 2m with m = sum(lvec) / 2.
    """
    n = len(lvec) - 2
    if lvec[0] != 1 or lvec[-1] != 1:
        raise InvalidParameterError("boundary multiplicities l_1, l_{n+2} must be 1")
    validate_lambdas(lambdas, n)
    if c_sign not in (1, -1):
        raise InvalidParameterError("c must be +1 or -1")
    if sum(lvec) % 2:
        raise InvalidParameterError("multiplicities must sum to an even number")
    coeffs: list[Fraction] = [Fraction(c_sign)]
    coeffs = [Fraction(0)] + coeffs  # factor u_1
    for i in range(2, n + 2):
        lam = lambdas[i - 1]
        for _ in range(lvec[i - 1]):
            # multiply by (u_1 - lam * u_{n+2})
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for d, cf in enumerate(coeffs):
                nxt[d + 1] += cf
                nxt[d] -= lam * cf
            coeffs = nxt
    coeffs = coeffs + [Fraction(0)]  # factor u_{n+2}
    form = BinaryForm(degree=len(coeffs) - 1, coefficients=tuple(coeffs))
    if form.degree != sum(lvec):
        raise InternalInvariantError("expanded degree disagrees with the multiplicity sum")
    return form


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic polynomial in z_0..z_m as a map (a, b) -> coefficient of z_a z_b,
    keys normalized to a <= b and zero coefficients omitted."""

    m: int
    terms: dict[tuple[int, int], Fraction]

    def pullback(self) -> BinaryForm:
        """Substitute z_d = u_1^d u_{n+2}^{m-d}; inverse of the splitting."""
        coeffs = [Fraction(0)] * (2 * self.m + 1)
        for (a, b), cf in self.terms.items():
            coeffs[a + b] += cf
        return BinaryForm(degree=2 * self.m, coefficients=tuple(coeffs))

    def matches(self, other: "QuadraticForm") -> bool:
        """Equality modulo the ideal of the rational normal curve, decided by
        comparing pullbacks."""
        return self.m == other.m and self.pullback() == other.pullback()


def quadratic_split(form: BinaryForm, m: int) -> QuadraticForm:
    """Balanced split of a degree-2m binary form into a quadratic in the z_d:
    the u_1^d u_{n+2}^{2m-d} coefficient lands on z_{floor(d/2)} z_{ceil(d/2)}."""
    if form.degree != 2 * m:
        raise InvalidParameterError(f"form has degree {form.degree}, expected {2 * m}")
    terms: dict[tuple[int, int], Fraction] = {}
    for d, cf in enumerate(form.coefficients):
        if cf:
            terms[(d // 2, (d + 1) // 2)] = cf
    split = QuadraticForm(m=m, terms=terms)
    if split.pullback() != form:
        raise InternalInvariantError("balanced split does not pull back to its input")
    return split


@dataclass(frozen=True)
class SingularityRecord:
    """One singularity of the model surface.

    kind "cyclic-quotient-pair": the conjugate pair of C^2/Z_m points over
    infinity (order m, present once m > 1).  kind "real-A": an A_{l_i - 1}
    point over the real parameter lambda_i, present exactly when l_i > 1.
    """

    kind: str
    order: int
    location: Scalar | str
    index: int | None = None


def singularities(
    lvec: tuple[int, ...], lambdas: tuple[Scalar, ...], m: int
) -> list[SingularityRecord]:
    records: list[SingularityRecord] = []
    if m > 1:
        records.append(
            SingularityRecord(
                kind="cyclic-quotient-pair",
                order=m,
                location="conjugate pair over infinity",
            )
        )
    for i, l in enumerate(lvec, start=1):
        if l > 1:
            records.append(
                SingularityRecord(
                    kind="real-A", order=l - 1, location=lambdas[i - 1], index=i
                )
            )
    return records


def reducible_fibers(
    lvec: tuple[int, ...], lambdas: tuple[Scalar, ...]
) -> tuple[Scalar, ...]:
    """Parameters over which the conic fiber breaks into two lines: the
    lambda_i with l_i > 0 (infinity always qualifies)."""
    return tuple(lambdas[i] for i, l in enumerate(lvec) if l > 0)


def irreducible_marked_fibers(
    lvec: tuple[int, ...], lambdas: tuple[Scalar, ...]
) -> tuple[Scalar, ...]:
    return tuple(lambdas[i] for i, l in enumerate(lvec) if l == 0)


def moduli_dimension(lvec: tuple[int, ...]) -> int | None:
    """Dimension #{i : l_i > 0} - 3 of the moduli the reducible-fiber
    positions sweep out; undefined (None) in the rigid case m = 1."""
    m = sum(lvec) // 2
    if m < 2:
        return None
    return sum(1 for l in lvec if l > 0) - 3


def fixed_lines(lvec: tuple[int, ...]) -> tuple[int, ...]:
    """Indices i with l_i = 0; the corresponding invariant twistor lines are
    pointwise fixed by the subgroup."""
    return tuple(i for i, l in enumerate(lvec, start=1) if l == 0)


@dataclass(frozen=True)
class MinitwistorModel:
    """The full projective model: equation, dimensions, fibers, singularities."""

    m: int
    n: int
    lambdas: tuple[Scalar, ...]
    c_sign: int
    rhs: BinaryForm
    q: QuadraticForm
    ambient_dim: int
    surface_degree: int
    dim_vm: int
    dim_wm: int
    singularities: tuple[SingularityRecord, ...]
    reducible_fibers: tuple[Scalar, ...]
    irreducible_marked_fibers: tuple[Scalar, ...]
    moduli_dim: int | None
    fixed_lines: tuple[int, ...]


def minitwistor_model(
    seq: tuple[int, ...],
    lambdas: tuple[Scalar, ...] | None = None,
    c_sign: int = 1,
) -> MinitwistorModel:
    """Synthesize the model surface for a weight sequence.

    lambdas defaults to (0, 1, ..., n, inf); c to +1.
    """
    trace = reduction_trace(seq)
    lvec = l_vector(trace_divisor(trace))
    n, m = trace.n, trace.m
    if lambdas is None:
        lambdas = default_lambdas(n)
    form = rhs_polynomial(lvec, lambdas, c_sign)
    if form.degree != 2 * m:
        raise InternalInvariantError("model degree is not 2m")
    split = quadratic_split(form, m)
    return MinitwistorModel(
        m=m,
        n=n,
        lambdas=lambdas,
        c_sign=c_sign,
        rhs=form,
        q=split,
        ambient_dim=m + 2,
        surface_degree=2 * m,
        dim_vm=m + 1,
        dim_wm=m + 3,
        singularities=tuple(singularities(lvec, lambdas, m)),
        reducible_fibers=reducible_fibers(lvec, lambdas),
        irreducible_marked_fibers=irreducible_marked_fibers(lvec, lambdas),
        moduli_dim=moduli_dimension(lvec),
        fixed_lines=fixed_lines(lvec),
    )
