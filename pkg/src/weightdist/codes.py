"""Linear codes over GF(q): construction, duality, exhaustive weight
enumeration (the ground-truth oracle), parameter extraction, and the
MacWilliams transform used to obtain the dual distance without enumerating
the dual code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .enumeration import DEFAULT_ENUMERATION_BUDGET, weight_histogram
from .errors import (
    NonIntegralResultError,
    RankDeficientGeneratorError,
    ZeroCodeError,
)
from .fields import Field
from .matrices import (
    GFMatrix,
    binom,
    gf_kernel_basis,
    gf_matmul,
    gf_rank,
)


@dataclass(frozen=True)
class CodeParameters:
    """The scalar invariants [n, k, d]_q plus the dual distance and the sum
    of the two Singleton defects."""

    n: int
    k: int
    d: int
    d_perp: int
    q: int

    @property
    def sigma(self) -> int:
        return self.n + 2 - self.d - self.d_perp

    @property
    def defect(self) -> int:
        return self.n - self.k + 1 - self.d

    @property
    def dual_defect(self) -> int:
        return self.k + 1 - self.d_perp


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords per Hamming weight, as exact integers.

    Closed-form constructors may produce negative entries for unrealizable
    inputs, so the invariants (A_0 = 1, nonnegativity, sum q^k) are checked
    by validate() rather than at construction.
    """

    counts: tuple[int, ...]
    q: int
    k: int

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_weight(self) -> int:
        for i in range(1, len(self.counts)):
            if self.counts[i]:
                return i
        raise ZeroCodeError("no nonzero codeword; minimum weight undefined")

    def validate(self) -> None:
        if self.counts[0] != 1:
            raise ValueError(f"A_0 = {self.counts[0]}, expected 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative weight count")
        if self.total() != self.q ** self.k:
            raise ValueError(f"counts sum to {self.total()}, expected {self.q ** self.k}")


class LinearCode:
    """An [n, k] code over GF(q), held as a full-rank generator matrix G and
    a full-rank parity-check matrix H with G H^T = 0.

    Immutable; the distribution and parameters are cached once computed.
    """

    def __init__(self, G: GFMatrix, H: Optional[GFMatrix] = None, check: bool = True):
        self.field = G.field
        self.G = G
        self.H = gf_kernel_basis(G) if H is None else H
        self.n = G.cols
        self.k = G.rows
        if check:
            if gf_rank(self.G) != self.k:
                raise RankDeficientGeneratorError(
                    f"generator has rank {gf_rank(self.G)} < {self.k} rows")
            if self.H.cols != self.n or self.H.rows != self.n - self.k:
                raise ValueError("parity-check shape mismatch")
            prod = gf_matmul(self.G, self.H.transpose())
            if any(any(r) for r in prod.entries):
                raise ValueError("G H^T != 0")
        self._distribution: Optional[WeightDistribution] = None

    @classmethod
    def from_generator(cls, G: GFMatrix) -> "LinearCode":
        return cls(G)

    def dual(self) -> "LinearCode":
        return LinearCode(self.H, self.G, check=False)

    def same_codewords(self, other: "LinearCode") -> bool:
        """True when the two row spaces coincide (checked via orthogonality
        to the other's parity check, both ways)."""
        if self.field != other.field or self.n != other.n or self.k != other.k:
            return False
        a = gf_matmul(self.G, other.H.transpose())
        b = gf_matmul(other.G, self.H.transpose())
        return not any(any(r) for r in a.entries) and not any(any(r) for r in b.entries)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All q^k codewords, for small-code tests and demos."""
        f, k = self.field, self.k
        msg = [0] * k
        while True:
            yield tuple(self._encode(msg))
            i = k - 1
            while i >= 0 and msg[i] == f.q - 1:
                msg[i] = 0
                i -= 1
            if i < 0:
                return
            msg[i] += 1

    def _encode(self, msg) -> list[int]:
        f = self.field
        out = [0] * self.n
        for mi, row in zip(msg, self.G.entries):
            if mi:
                for j, e in enumerate(row):
                    if e:
                        out[j] = f.add(out[j], f.mul(mi, e))
        return out

    def weight_distribution(self, budget: int | None = DEFAULT_ENUMERATION_BUDGET,
                            workers: int = 1) -> WeightDistribution:
        """Exact distribution by full enumeration of all q^k messages."""
        if self._distribution is None:
            counts = weight_histogram(self.G, budget=budget, workers=workers)
            dist = WeightDistribution(tuple(counts), self.field.q, self.k)
            dist.validate()
            self._distribution = dist
        return self._distribution

    def min_distance(self, budget: int | None = DEFAULT_ENUMERATION_BUDGET) -> int:
        if self.k == 0:
            raise ZeroCodeError("the zero code has no nonzero codeword")
        return self.weight_distribution(budget).min_weight

    def parameters(self, budget: int | None = DEFAULT_ENUMERATION_BUDGET) -> CodeParameters:
        """n, k, d, the dual distance, and the defect sum.  The dual distance
        comes from the MacWilliams transform of the primal distribution, so
        no second enumeration is needed."""
        if self.k == 0:
            raise ZeroCodeError("the zero code has no nonzero codeword")
        if self.k == self.n:
            raise ZeroCodeError("the dual of the full space is the zero code")
        A = self.weight_distribution(budget)
        B = macwilliams_transform(A)
        return CodeParameters(n=self.n, k=self.k, d=A.min_weight,
                              d_perp=B.min_weight, q=self.field.q)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over {self.field!r})"


def code_from_generator(G: GFMatrix) -> LinearCode:
    return LinearCode.from_generator(G)


def krawtchouk(n: int, q: int, j: int, i: int) -> int:
    """K_j(i) = sum_l (-1)^l binom(i, l) binom(n-i, j-l) (q-1)^(j-l)."""
    acc = 0
    for l in range(0, j + 1):
        term = binom(i, l) * binom(n - i, j - l) * (q - 1) ** (j - l)
        acc += -term if l & 1 else term
    return acc


def macwilliams_transform(A: WeightDistribution) -> WeightDistribution:
    """Distribution of the dual code, B_j = q^{-k} sum_i A_i K_j(i).

    Raises NonIntegralResultError when the result is not a vector of
    nonnegative integers, which certifies the input was not the weight
    distribution of any [n, k]_q linear code.
    """
    n, q, k = A.n, A.q, A.k
    qk = q ** k
    counts = []
    for j in range(n + 1):
        s = sum(A.counts[i] * krawtchouk(n, q, j, i) for i in range(n + 1))
        if s % qk:
            raise NonIntegralResultError(
                f"B_{j} = {s}/{qk} is not an integer; invalid input distribution")
        bj = s // qk
        if bj < 0:
            raise NonIntegralResultError(
                f"B_{j} = {bj} is negative; invalid input distribution")
        counts.append(bj)
    return WeightDistribution(tuple(counts), q, n - k)


def random_code(field: Field, n: int, k: int, seed: int) -> LinearCode:
    """Uniformly sampled full-rank generator; deterministic for a seed."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    rng = random.Random(seed)
    while True:
        rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k)]
        G = GFMatrix.from_rows(field, rows)
        if gf_rank(G) == k:
            return LinearCode(G, check=False)
