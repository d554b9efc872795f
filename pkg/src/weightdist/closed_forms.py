"""Closed-form weight distributions for codes with small Singleton defect and
for extremal doubly-even self-dual binary codes.

All of these are pure parameter-to-distribution functions: none of them
checks that a code with the requested parameters exists.  Negative or
non-integral outputs are surfaced (as values or errors, per function), since
they are exactly the evidence one wants when probing nonexistence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codes import LinearCode, WeightDistribution
from .errors import (
    NegativeEntryError,
    RangeViolationError,
    SingularMatrixError,
    SingularSelectionError,
)
from .fields import Field
from .matrices import GFMatrix, RationalMatrix, binom, solve_exact
from .moments import MomentSystem


def kronecker_delta(a, b) -> int:
    return 1 if a == b else 0


def mds_distribution(n: int, k: int, q: int) -> WeightDistribution:
    """Distribution of a maximum-distance-separable [n, k, n-k+1]_q code:
    A_w = binom(n, w) sum_j (-1)^j binom(w, j) (q^(w-d+1-j) - 1) for w >= d.
    Depends on nothing but the parameters (defect sum zero)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if q < 2:
        raise ValueError("field order must be >= 2")
    d = n - k + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    for w in range(d, n + 1):
        s = 0
        for j in range(0, w - d + 1):
            term = binom(w, j) * (q ** (w - d + 1 - j) - 1)
            s += -term if j & 1 else term
        counts[w] = binom(n, w) * s
    return WeightDistribution(tuple(counts), q, k)


def nmds_distribution(n: int, k: int, q: int, a_d: int) -> WeightDistribution:
    """Distribution of a near-MDS [n, k, n-k]_q code (defect 1 on both
    sides), pinned by the single count a_d of minimum-weight words:

        A_{n-k+i} = binom(n, k-i) sum_{j<i} (-1)^j binom(n-k+i, j)(q^(i-j)-1)
                    + (-1)^i binom(k, i) a_d.

    An unrealizable a_d shows up as negative entries in the result; they are
    returned as computed, never clamped."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if a_d < 0:
        raise ValueError("minimum-weight count must be >= 0")
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[n - k] = a_d
    for i in range(1, k + 1):
        s = 0
        for j in range(0, i):
            term = binom(n - k + i, j) * (q ** (i - j) - 1)
            s += -term if j & 1 else term
        val = binom(n, k - i) * s + (-1) ** i * binom(k, i) * a_d
        counts[n - k + i] = val
    return WeightDistribution(tuple(counts), q, k)


@dataclass(frozen=True)
class AmdsInput:
    """Parameters of an almost-MDS [n, k, n-k]_q code whose dual has
    distance k - sigma + 2, plus the sigma-1 seed counts
    A_{n-k}, ..., A_{n-k+sigma-2} that pin the distribution."""

    n: int
    k: int
    q: int
    sigma: int
    seed_weights: tuple[int, ...]

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if not 2 <= self.sigma <= self.k + 1:
            raise ValueError(f"need 2 <= sigma <= k+1, got sigma={self.sigma}")
        if len(self.seed_weights) != self.sigma - 1:
            raise ValueError(
                f"need {self.sigma - 1} seed weights, got {len(self.seed_weights)}")
        if any(w < 0 for w in self.seed_weights):
            raise ValueError("seed weights must be >= 0")


def amds_counts(inp: AmdsInput) -> tuple[int, ...]:
    """Raw closed-form counts for an almost-MDS code, negatives included.

    For 0 <= i <= k-sigma+1 the count A_{n-k+sigma-1+i} equals

        sum_{j<=i} (-1)^(i-j) binom(k-sigma+1-j, i-j) *
            [ binom(n, n-k+sigma-1+j)(q^(j+sigma-1)-1)
              - sum_{h<=sigma-2} binom(k-h, sigma-1+j-h) A_{n-k+h} ],

    i.e. the explicit inverse of the lower-triangular Pascal system that the
    census identity induces once A_0..A_{n-k+sigma-2} are in place."""
    n, k, q, sig = inp.n, inp.k, inp.q, inp.sigma
    counts = [0] * (n + 1)
    counts[0] = 1
    for h, w in enumerate(inp.seed_weights):
        counts[n - k + h] = w
    for i in range(0, k - sig + 2):
        acc = 0
        for j in range(0, i + 1):
            bracket = binom(n, n - k + sig - 1 + j) * (q ** (j + sig - 1) - 1)
            bracket -= sum(binom(k - h, sig - 1 + j - h) * inp.seed_weights[h]
                           for h in range(sig - 1))
            term = binom(k - sig + 1 - j, i - j) * bracket
            acc += -term if (i - j) & 1 else term
        counts[n - k + sig - 1 + i] = acc
    return tuple(counts)


def amds_distribution(inp: AmdsInput) -> WeightDistribution:
    """Closed-form distribution of an almost-MDS code from its seeds; raises
    NegativeEntryError when the seeds are inconsistent with any code.  At
    sigma = 2 this coincides with nmds_distribution."""
    counts = amds_counts(inp)
    for i, c in enumerate(counts):
        if c < 0:
            raise NegativeEntryError(
                f"A_{i} = {c} is negative; seeds match no [{inp.n},{inp.k},"
                f"{inp.n - inp.k}]_{inp.q} code with dual distance "
                f"{inp.k - inp.sigma + 2}")
    return WeightDistribution(counts, inp.q, inp.k)


def pascal_inverse(size: int, k: int, sigma: int) -> RationalMatrix:
    """Explicit inverse [(-1)^(i-j) binom(k-sigma+1-j, i-j)] of the
    lower-triangular Pascal matrix [binom(k-sigma+1-j, i-j)]; size must be
    k - sigma + 2."""
    if size != k - sigma + 2:
        raise ValueError(f"size must be k - sigma + 2 = {k - sigma + 2}")
    return RationalMatrix.from_rows(
        [[(-1) ** (i - j) * binom(k - sigma + 1 - j, i - j) if i >= j else 0
          for j in range(size)] for i in range(size)])


def amds_forward_pascal(size: int, k: int, sigma: int) -> RationalMatrix:
    """The lower-triangular Pascal matrix [binom(k-sigma+1-j, i-j)] whose
    inverse pascal_inverse() spells out."""
    if size != k - sigma + 2:
        raise ValueError(f"size must be k - sigma + 2 = {k - sigma + 2}")
    return RationalMatrix.from_rows(
        [[binom(k - sigma + 1 - j, i - j) if i >= j else 0
          for j in range(size)] for i in range(size)])


# ---------------------------------------------------------------------------
# extremal doubly-even self-dual binary codes [24m, 12m, 4m+4]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalParams:
    """Derived parameters of the extremal type II family."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @property
    def n(self) -> int:
        return 24 * self.m

    @property
    def k(self) -> int:
        return 12 * self.m

    @property
    def d(self) -> int:
        return 4 * self.m + 4

    @property
    def unknown_indices(self) -> tuple[int, ...]:
        """Weights not forced to 0 or 1 by divisibility and symmetry:
        A_{4m+4}, A_{4m+8}, ..., A_{20m-4}."""
        return tuple(4 * self.m + 4 * l for l in range(1, 4 * self.m))


def extremal_relation_range(m: int) -> range:
    """Widths nu for which the census identity collapses to a relation on
    the 4m-1 free counts: 20m-4 < nu <= 24m."""
    return range(20 * m - 3, 24 * m + 1)


def extremal_system(m: int, nu_set: Sequence[int],
                    include_symmetry: bool = False) -> MomentSystem:
    """Relations on the free counts A_{4m+4l} of a [24m, 12m, 4m+4] type II
    code:

        sum_l binom(20m-4l, nu-4m-4l) A_{4m+4l}
            = binom(24m, nu) (2^(nu-12m) - 1) - delta(24m, nu)

    for each requested nu in (20m-4, 24m], optionally extended with the
    2m-1 symmetry rows A_{4m+4l} = A_{20m-4l}."""
    ep = ExtremalParams(m)
    unknowns = ep.unknown_indices
    pos = {u: i for i, u in enumerate(unknowns)}
    rows, rhs, labels = [], [], []
    for nu in nu_set:
        if nu not in extremal_relation_range(m):
            raise RangeViolationError(
                f"nu={nu} outside ({20 * m - 4}, {24 * m}]")
        rows.append([binom(20 * m - 4 * l, nu - 4 * m - 4 * l)
                     for l in range(1, 4 * m)])
        rhs.append(Fraction(binom(24 * m, nu)) * (2 ** (nu - 12 * m) - 1)
                   - kronecker_delta(24 * m, nu))
        labels.append(nu)
    if include_symmetry:
        for l in range(1, 2 * m):
            row = [Fraction(0)] * len(unknowns)
            row[pos[4 * m + 4 * l]] += 1
            row[pos[20 * m - 4 * l]] -= 1
            rows.append(row)
            rhs.append(Fraction(0))
            labels.append(f"sym A_{4 * m + 4 * l}=A_{20 * m - 4 * l}")
    return MomentSystem("extremal", RationalMatrix.from_rows(rows, cols=len(unknowns)),
                        tuple(rhs), tuple(labels), unknowns, None)


def _extremal_candidate_selections(m: int):
    """Deterministic sequence of (4m-1)-subsets of the relation widths to
    try, largest widths first."""
    nus = sorted(extremal_relation_range(m), reverse=True)
    want = 4 * m - 1
    yield tuple(sorted(nus[:want]))
    for combo in itertools.combinations(nus, want):
        c = tuple(sorted(combo))
        if c != tuple(sorted(nus[:want])):
            yield c


def extremal_distribution(m: int) -> WeightDistribution:
    """Full distribution of a [24m, 12m, 4m+4] extremal type II code.

    Solves a (4m-1)-relation selection exactly, then verifies the solution
    against every relation width and the symmetry pattern; if a selection
    turns out singular the next one is tried rather than assumed good."""
    ep = ExtremalParams(m)
    unknowns = ep.unknown_indices
    last_error: SingularMatrixError | None = None
    for selection in _extremal_candidate_selections(m):
        sys_ = extremal_system(m, selection)
        try:
            x = solve_exact(sys_.matrix, sys_.rhs)
        except SingularMatrixError as e:
            last_error = e
            continue
        counts = [0] * (ep.n + 1)
        counts[0] = counts[ep.n] = 1
        for u, v in zip(unknowns, x):
            if v.denominator != 1 or v < 0:
                raise SingularSelectionError(
                    f"selection {selection} solved to invalid count A_{u} = {v}")
            counts[u] = int(v)
        dist = WeightDistribution(tuple(counts), 2, ep.k)
        _verify_extremal(m, dist)
        return dist
    raise SingularSelectionError(
        f"every tried relation selection for m={m} was singular "
        f"(last: {last_error})")


def _verify_extremal(m: int, dist: WeightDistribution) -> None:
    full = extremal_system(m, list(extremal_relation_range(m)), include_symmetry=True)
    vec = [dist.counts[u] for u in full.col_labels]
    got = full.matrix.matvec(vec)
    for label, lhs, rhs in zip(full.row_labels, got, full.rhs):
        if lhs != rhs:
            raise SingularSelectionError(
                f"solved distribution violates relation {label!r}")
    if dist.total() != 2 ** (12 * m):
        raise SingularSelectionError("solved distribution has wrong total")


# ---------------------------------------------------------------------------
# Reed-Solomon fixture generator
# ---------------------------------------------------------------------------

def reed_solomon_code(field: Field, n: int, k: int) -> LinearCode:
    """Evaluation code of polynomials of degree < k at n distinct field
    elements, extended with the point at infinity when n = q+1; an
    [n, k, n-k+1] MDS code.  Test fixture for comparing the closed form
    against the enumeration oracle."""
    if not 1 <= k <= n <= field.q + 1:
        raise ValueError(f"need 1 <= k <= n <= q+1, got n={n}, k={k}, q={field.q}")
    points = list(range(min(n, field.q)))
    rows = [[field.pow(x, i) for x in points] for i in range(k)]
    if n == field.q + 1:
        # infinity column: the coefficient of x^(k-1)
        for i in range(k):
            rows[i].append(1 if i == k - 1 else 0)
    return LinearCode(GFMatrix.from_rows(field, rows))
