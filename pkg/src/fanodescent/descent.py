"""The split Chern model and descent along minimal rational-curve families.

A manifold enters the model as a vector of rational scalars r_1..r_n,
one per degree of its Chern character against a distinguished
polarization.  Descending to the minimal family of degree-a rational
curves produces a shorter vector over the family's own polarization;
iterating builds chains whose first non-Fano member defines the chain
invariant N.  Two model manifold families (projective spaces, quadric
hypersurfaces) are built in; Grassmannians are catalogued by chain shape
only since their minimal families leave the scalar model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coeffs import CoeffTable, shared_table

__all__ = [
    "DescentError",
    "NonIntegralDimensionError",
    "InsufficientScalarsError",
    "SplitChernVector",
    "DescentStep",
    "ChainReport",
    "DIMENSION_ZERO",
    "NOT_FANO",
    "INSUFFICIENT_DATA",
    "NEGATIVE_DIMENSION",
    "family_dimension",
    "descend",
    "descend_direct",
    "descend_chain",
    "CatalogueEntry",
    "projective_space",
    "quadric",
    "grassmannian",
    "catalogue",
    "CATALOGUE_NAMES",
]


class DescentError(ValueError):
    """A descent step cannot be carried out on the given data."""


class NonIntegralDimensionError(DescentError):
    """The first Chern scalar times the curve degree is not an integer.

    That product is the anticanonical degree of the curves in the family
    and must be integral for any consistent model.
    """


class InsufficientScalarsError(DescentError):
    """The vector is too short to express the descended scalars.

    Raised when the family dimension d satisfies d + 1 > dim: the step
    would need the degree-(d+1) Chern scalar, which the model does not
    carry.  ``family_dim`` records the d that was attempted.
    """

    def __init__(self, message: str, family_dim: int):
        super().__init__(message)
        self.family_dim = family_dim


@dataclass(frozen=True)
class SplitChernVector:
    """A manifold whose degree-k Chern character is r_k times c1(L)^k.

    ``scalars`` lists r_1..r_n; the manifold dimension is the length.
    Positivity of a class in this model is positivity of its scalar, so
    the manifold is Fano exactly when r_1 > 0.
    """

    scalars: tuple[Fraction, ...]
    label: str | None = None

    def __post_init__(self):
        coerced = tuple(Fraction(s) for s in self.scalars)
        if not coerced:
            raise ValueError("a split Chern vector needs at least one scalar")
        object.__setattr__(self, "scalars", coerced)

    @property
    def dim(self) -> int:
        return len(self.scalars)

    def ch(self, k: int) -> Fraction:
        """The degree-k Chern scalar r_k, 1-indexed."""
        if not 1 <= k <= self.dim:
            raise ValueError(f"ch_{k} not stored for a dimension-{self.dim} vector")
        return self.scalars[k - 1]

    @property
    def is_fano(self) -> bool:
        return self.scalars[0] > 0


@dataclass(frozen=True)
class DescentStep:
    """One descent: the curve degree used, the family dimension it gave,
    and the descended vector (present only when the dimension is >= 1
    and the source carried enough scalars)."""

    degree_used: int
    family_dim: int
    descended: SplitChernVector | None


DIMENSION_ZERO = "dimension_zero"
NOT_FANO = "not_fano"
INSUFFICIENT_DATA = "insufficient_data"
NEGATIVE_DIMENSION = "negative_dimension"


@dataclass(frozen=True)
class ChainReport:
    """Record of a full descent walk.

    ``n_first_non_fano`` is the index of the step that produced the
    first non-Fano member (a point or a vector with r_1 <= 0); it is
    None when the walk ended for a bookkeeping reason instead
    (missing scalars, or no degree-1 family at the attempted step).
    """

    steps: tuple[DescentStep, ...]
    degree_sequence: tuple[int, ...]
    terminal: str
    n_first_non_fano: int | None


def _check_degree(a: int) -> None:
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"curve degree must be a positive integer, got {a!r}")


def family_dimension(v: SplitChernVector, a: int) -> int:
    """Dimension of the minimal family of degree-a rational curves: r_1*a - 2."""
    _check_degree(a)
    degree = v.ch(1) * a
    if degree.denominator != 1:
        raise NonIntegralDimensionError(
            f"anticanonical degree r_1*a = {degree} is not an integer; "
            "the model is inconsistent for this curve degree"
        )
    return int(degree) - 2


def descend(v: SplitChernVector, a: int, table: CoeffTable | None = None) -> DescentStep:
    """One descent step to the minimal family of degree-a curves.

    For family dimension d >= 1 the descended scalars are

        s_j = -1/j! + sum_{k=1}^{j+1} c(1, j, k) * r_k * a^k,   j = 1..d,

    which consumes r_{d+1}; a shorter vector raises
    InsufficientScalarsError.  For d <= 0 the step records the dimension
    and carries no vector.
    """
    tab = table or shared_table()
    d = family_dimension(v, a)
    if d <= 0:
        return DescentStep(a, d, None)
    if v.dim < d + 1:
        raise InsufficientScalarsError(
            f"descent to a dimension-{d} family needs ch_{d + 1}, but the "
            f"vector only carries scalars up to degree {v.dim}",
            family_dim=d,
        )
    powers = [v.ch(k) * Fraction(a) ** k for k in range(1, d + 2)]
    scalars = []
    for j in range(1, d + 1):
        s = Fraction(-1, factorial(j))
        for k in range(1, j + 2):
            s += tab.coefficient(1, j, k) * powers[k - 1]
        scalars.append(s)
    return DescentStep(a, d, SplitChernVector(tuple(scalars)))


def descend_direct(
    v: SplitChernVector, i: int, a1: int, table: CoeffTable | None = None
) -> SplitChernVector:
    """The i-th iterated family in one evaluation (degrees a1, 1, 1, ...).

    Uses the depth-i coefficients directly:

        s_j = -i/j! + sum_{k=1}^{i+j} c(i, j, k) * r_k * a1^k,

    with the same per-level dimension bookkeeping the step-by-step walk
    performs, so it raises exactly when the iterated walk would.
    """
    if i < 1:
        raise ValueError(f"iteration depth must be >= 1, got {i}")
    _check_degree(a1)
    tab = table or shared_table()
    a = Fraction(a1)
    d_prev = v.dim
    d = 0
    for level in range(1, i + 1):
        if level == 1:
            s1 = v.ch(1) * a
        else:
            s1 = Fraction(-(level - 1)) + sum(
                tab.coefficient(level - 1, 1, k) * v.ch(k) * a**k
                for k in range(1, level + 1)
            )
        if s1.denominator != 1:
            raise NonIntegralDimensionError(
                f"anticanonical degree {s1} at level {level} is not an integer"
            )
        d = int(s1) - 2
        if d < 1:
            raise DescentError(
                f"chain reaches family dimension {d} at level {level}; "
                f"no dimension-{i} iterate exists"
            )
        if d_prev < d + 1:
            raise InsufficientScalarsError(
                f"level {level} needs ch_{d + 1} of the previous member, "
                f"which only carries scalars up to degree {d_prev}",
                family_dim=d,
            )
        d_prev = d
    scalars = []
    for j in range(1, d + 1):
        s = Fraction(-i, factorial(j))
        for k in range(1, i + j + 1):
            s += tab.coefficient(i, j, k) * v.ch(k) * a**k
        scalars.append(s)
    return SplitChernVector(tuple(scalars))


def descend_chain(
    v: SplitChernVector,
    degrees: tuple[int, ...] | list[int] | None = None,
    table: CoeffTable | None = None,
) -> ChainReport:
    """Walk descent steps until the chain terminates.

    Step i uses degrees[i-1] when provided and 1 otherwise.  A step of
    family dimension 0 is a genuine chain member (a point, the first
    non-Fano one) and is recorded.  Attempts that produce no member at
    all are not recorded as steps: a negative dimension (no family of
    that degree exists) and missing scalars both only set the terminal
    cause, which keeps family dimensions strictly decreasing along the
    recorded steps.
    """
    if degrees is not None:
        for a in degrees:
            _check_degree(a)
    steps: list[DescentStep] = []
    current = v
    terminal = None
    n_value: int | None = None
    while terminal is None:
        idx = len(steps)
        a = degrees[idx] if degrees is not None and idx < len(degrees) else 1
        try:
            step = descend(current, a, table)
        except InsufficientScalarsError:
            terminal = INSUFFICIENT_DATA
            break
        if step.family_dim < 0:
            terminal = NEGATIVE_DIMENSION
            break
        steps.append(step)
        if step.family_dim == 0:
            terminal = DIMENSION_ZERO
            n_value = len(steps)
        elif not step.descended.is_fano:
            terminal = NOT_FANO
            n_value = len(steps)
        else:
            current = step.descended
    return ChainReport(
        tuple(steps), tuple(s.degree_used for s in steps), terminal, n_value
    )


@dataclass(frozen=True)
class CatalogueEntry:
    """A model manifold: split vector (when the model applies), the
    degree sequence that realizes its chain, the expected chain labels,
    and the expected first/last non-Fano indices."""

    name: str
    params: tuple[int, ...]
    label: str
    split: bool
    vector: SplitChernVector | None
    degrees: tuple[int, ...] | None
    chains: tuple[tuple[str, ...], ...]
    n_lower: int
    n_upper: int


def projective_space(n: int) -> CatalogueEntry:
    """P^n with r_k = (n+1)/k!; its chain drops one dimension per step."""
    if n < 1:
        raise ValueError(f"projective_space needs n >= 1, got {n}")
    scalars = tuple(Fraction(n + 1, factorial(k)) for k in range(1, n + 1))
    labels = tuple(f"P^{d}" for d in range(n, 0, -1)) + ("pt",)
    return CatalogueEntry(
        name="projective_space",
        params=(n,),
        label=f"P^{n}",
        split=True,
        vector=SplitChernVector(scalars, label=f"P^{n}"),
        degrees=(1,) * n,
        chains=(labels,),
        n_lower=n,
        n_upper=n,
    )


def quadric(n: int) -> CatalogueEntry:
    """Q^n with r_k = (n+2-2^k)/k!; its chain drops two dimensions per step.

    The degree sequence is all ones except that an odd chain ends at a
    dimension-1 member whose minimal rational curve is a conic in the
    inherited polarization, so the final step uses degree 2.
    """
    if n < 1:
        raise ValueError(f"quadric needs n >= 1, got {n}")
    scalars = tuple(Fraction(n + 2 - 2**k, factorial(k)) for k in range(1, n + 1))
    steps = (n + 1) // 2
    degrees = (1,) * (steps - 1) + (2,) if n % 2 else (1,) * steps
    labels = tuple(f"Q^{d}" for d in range(n, 0, -2)) + ("pt",)
    return CatalogueEntry(
        name="quadric",
        params=(n,),
        label=f"Q^{n}",
        split=True,
        vector=SplitChernVector(scalars, label=f"Q^{n}"),
        degrees=degrees,
        chains=(labels,),
        n_lower=steps,
        n_upper=steps,
    )


def grassmannian(k: int, m: int) -> CatalogueEntry:
    """G(k, m): chain shape only.

    The first family is a product of projective spaces, which has no
    split vector, so no descent is possible; the two chain branches and
    the resulting invariants min{k, m-k} and max{k, m-k} are catalogued
    as stated shapes.
    """
    if not 0 < k < m:
        raise ValueError(f"grassmannian needs 0 < k < m, got ({k}, {m})")
    head = (f"G({k},{m})", f"P^{k - 1}xP^{m - k - 1}")

    def branch(top: int) -> tuple[str, ...]:
        return head + tuple(f"P^{d}" for d in range(top, 0, -1)) + ("pt",)

    return CatalogueEntry(
        name="grassmannian",
        params=(k, m),
        label=f"G({k},{m})",
        split=False,
        vector=None,
        degrees=None,
        chains=(branch(k - 2), branch(m - k - 2)),
        n_lower=min(k, m - k),
        n_upper=max(k, m - k),
    )


CATALOGUE_NAMES = ("projective_space", "quadric", "grassmannian")

_ARITY = {"projective_space": 1, "quadric": 1, "grassmannian": 2}
_BUILDERS = {
    "projective_space": projective_space,
    "quadric": quadric,
    "grassmannian": grassmannian,
}


def catalogue(name: str, params: tuple[int, ...] | list[int]) -> CatalogueEntry:
    """Look up a model manifold by family name and integer parameters."""
    if name not in _BUILDERS:
        raise ValueError(
            f"unknown manifold family {name!r}; choose from {', '.join(CATALOGUE_NAMES)}"
        )
    params = tuple(params)
    if len(params) != _ARITY[name]:
        raise ValueError(
            f"{name} takes {_ARITY[name]} integer parameter(s), got {len(params)}"
        )
    return _BUILDERS[name](*params)
