"""Fixed-point data of Hamiltonian circle actions with n+2 isolated points.

A dataset records, for each of the n+2 fixed points of a Hamiltonian circle
action on a compact 2n-dimensional symplectic manifold, its integer moment
value and the multiset of n nonzero integer weights of the isotropy
representation. The module provides the standard dataset carried by the
oriented 2-plane Grassmannian, and a validator for the arithmetic conditions
every genuine dataset must satisfy:

* moment values nondecreasing, strict except possibly at the middle pair;
* Morse indices (twice the negative-weight count) follow the forced pattern
  0, 2, ..., n, n, ..., 2n;
* the multiset of all weights is closed under negation;
* the index of each point is bounded by the count of points strictly below;
* the localization sum of the unit class vanishes.

All types are immutable and every function is pure, so everything here is
safe to call concurrently.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DataError, InvalidGeneratorError


@dataclass(frozen=True)
class FixedPoint:
    """One isolated fixed point: moment value and weight multiset."""

    phi: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "phi", int(self.phi))
        if any(w == 0 for w in self.weights):
            raise DataError(f"zero weight at moment value {self.phi}")

    @property
    def negative_count(self) -> int:
        """Number of negative weights; half the Morse index."""
        return sum(1 for w in self.weights if w < 0)

    @property
    def morse_index(self) -> int:
        return 2 * self.negative_count


@dataclass(frozen=True)
class FixedPointData:
    """n plus the ordered list of n+2 fixed points.

    Construction checks only structure (n even and positive, point and weight
    counts, nonzero weights); the semantic conditions are reported by
    ``validate`` so that bad datasets can be inspected rather than rejected.
    """

    n: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if self.n < 2 or self.n % 2 != 0:
            raise DataError(f"n must be even and positive, got {self.n}")
        if len(self.points) != self.n + 2:
            raise DataError(
                f"expected {self.n + 2} fixed points, got {len(self.points)}"
            )
        for p in self.points:
            if len(p.weights) != self.n:
                raise DataError(
                    f"point at phi={p.phi} has {len(p.weights)} weights, expected {self.n}"
                )

    @property
    def phis(self) -> tuple[int, ...]:
        return tuple(p.phi for p in self.points)

    def all_weights(self) -> Counter[int]:
        """Multiset of all n(n+2) weights."""
        counts: Counter[int] = Counter()
        for p in self.points:
            counts.update(p.weights)
        return counts


@dataclass(frozen=True)
class PointInvariants:
    """Weight sum and products at one fixed point.

    gamma is the sum of the weights, lambda_full their product, and
    lambda_minus / lambda_plus the products over the negative / positive
    weights (empty products are 1).
    """

    gamma: int
    lambda_full: int
    lambda_minus: int
    lambda_plus: int


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    """One entry per validation check, in a fixed order."""

    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def morse_pattern(n: int) -> tuple[int, ...]:
    """Forced negative-weight counts: i for i <= n/2, i-1 above."""
    half = n // 2
    return tuple(i if i <= half else i - 1 for i in range(n + 2))


def standard_weights(phis: Sequence[int], i: int) -> tuple[int, ...]:
    """Weights of the standard action at point i: all moment gaps from point i
    except the one to its antipode n+1-i."""
    m = len(phis)
    return tuple(phis[j] - phis[i] for j in range(m) if j != i and j != m - 1 - i)


def make_standard_g2(b: Sequence[int]) -> FixedPointData:
    """Standard dataset of the oriented 2-plane Grassmannian in dimension 2n.

    The circle acts on C^(n/2+1) with pairwise distinct integer exponents b;
    the induced action on oriented 2-planes has n+2 fixed points with moment
    values the sorted multiset {-b_i} union {b_i} and weights given by
    ``standard_weights``. Exponents with b_i = -b_j (j != i) are rejected:
    they would collide moment values away from the middle pair and produce
    zero weights. The output is order-insensitive in b and passes ``validate``.
    """
    values = [int(x) for x in b]
    if len(values) < 2:
        raise InvalidGeneratorError("need at least two exponents")
    if len(set(values)) != len(values):
        raise InvalidGeneratorError(f"exponents must be pairwise distinct: {values}")
    for i, x in enumerate(values):
        for y in values[i + 1 :]:
            if x + y == 0:
                raise InvalidGeneratorError(
                    f"opposite exponents {x} and {y} collide moment values"
                )
    n = 2 * (len(values) - 1)
    phis = sorted([-x for x in values] + values)
    points = tuple(
        FixedPoint(phis[i], standard_weights(phis, i)) for i in range(n + 2)
    )
    return FixedPointData(n, points)


def point_invariants(data: FixedPointData, i: int) -> PointInvariants:
    """Weight sum and products at point i (empty products are 1)."""
    if not 0 <= i <= data.n + 1:
        raise IndexError(f"point index {i} out of range 0..{data.n + 1}")
    gamma = 0
    full = 1
    minus = 1
    plus = 1
    for w in data.points[i].weights:
        gamma += w
        full *= w
        if w < 0:
            minus *= w
        else:
            plus *= w
    return PointInvariants(gamma, full, minus, plus)


def _check_phi_order(data: FixedPointData) -> CheckResult:
    half = data.n // 2
    phis = data.phis
    bad = []
    for i in range(len(phis) - 1):
        if i == half:
            if not phis[i] <= phis[i + 1]:
                bad.append(f"phi[{i}]={phis[i]} > phi[{i + 1}]={phis[i + 1]}")
        elif not phis[i] < phis[i + 1]:
            bad.append(f"phi[{i}]={phis[i]} >= phi[{i + 1}]={phis[i + 1]}")
    if bad:
        return CheckResult("phi-order", False, "; ".join(bad))
    return CheckResult(
        "phi-order",
        True,
        f"moment values {phis} strictly increasing away from the middle pair",
    )


def _check_morse_pattern(data: FixedPointData) -> CheckResult:
    expected = morse_pattern(data.n)
    actual = tuple(p.negative_count for p in data.points)
    if actual != expected:
        return CheckResult(
            "morse-index",
            False,
            f"negative-weight counts {actual} differ from required {expected}",
        )
    return CheckResult(
        "morse-index", True, f"negative-weight counts follow the pattern {expected}"
    )


def _check_negation_closure(data: FixedPointData) -> CheckResult:
    counts = data.all_weights()
    bad = sorted(w for w in counts if counts[w] != counts[-w])
    if bad:
        return CheckResult(
            "negation-closure",
            False,
            f"unbalanced weights {bad} (count(w) != count(-w))",
        )
    return CheckResult(
        "negation-closure", True, "weight multiset equals its own negation"
    )


def _check_index_bound(data: FixedPointData) -> CheckResult:
    phis = data.phis
    bad = []
    for i, p in enumerate(data.points):
        below = sum(1 for q in phis if q < p.phi)
        if p.negative_count > below:
            bad.append(
                f"point {i}: index {p.negative_count} exceeds {below} points below"
            )
    if bad:
        return CheckResult("index-bound", False, "; ".join(bad))
    return CheckResult(
        "index-bound", True, "each index is bounded by the count of points below"
    )


def _check_unit_localization(data: FixedPointData) -> CheckResult:
    total = Fraction(0)
    for i in range(data.n + 2):
        total += Fraction(1, point_invariants(data, i).lambda_full)
    if total != 0:
        return CheckResult(
            "localization-of-one",
            False,
            f"sum of reciprocal weight products is {total}, expected 0",
        )
    return CheckResult(
        "localization-of-one", True, "sum of reciprocal weight products vanishes"
    )


def validate(data: FixedPointData) -> ValidationReport:
    """Run every dataset check and report each outcome individually.

    Failures are report entries rather than exceptions so that a single pass
    surfaces all problems at once.
    """
    return ValidationReport(
        (
            _check_phi_order(data),
            _check_morse_pattern(data),
            _check_negation_closure(data),
            _check_index_bound(data),
            _check_unit_localization(data),
        )
    )
