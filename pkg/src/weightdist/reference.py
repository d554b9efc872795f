"""Reference codes with known exact weight distributions.

These serve as golden fixtures for the test suite, the fixtures CLI command
and the demos.  The centerpiece is a pair of [8, 4, 4] near-MDS codes over
GF(4) that share all parameters (n, k, d, dual distance) yet have different
distributions, which is precisely why one weight count must be supplied
before the moment systems can pin down the rest.
"""

from __future__ import annotations

from .codes import LinearCode
from .fields import GF
from .matrices import GFMatrix

# GF(4) with modulus x^2 + x + 1; encodings 0, 1, 2, 3 = 0, 1, a, a^2.

_NMDS_844_ROWS_A = (
    (1, 0, 0, 0, 1, 3, 2, 0),
    (0, 1, 0, 0, 0, 1, 3, 2),
    (0, 0, 1, 0, 2, 2, 0, 1),
    (0, 0, 0, 1, 1, 3, 1, 1),
)

_NMDS_844_ROWS_B = (
    (1, 0, 0, 0, 1, 3, 2, 0),
    (0, 1, 0, 0, 3, 0, 1, 1),
    (0, 0, 1, 0, 0, 1, 3, 3),
    (0, 0, 0, 1, 2, 2, 0, 1),
)

# Exact distributions of the two codes (verified by full enumeration in the
# test suite; frozen here as the golden values).
NMDS_844_DISTRIBUTION_A = (1, 0, 0, 0, 27, 60, 78, 60, 30)
NMDS_844_DISTRIBUTION_B = (1, 0, 0, 0, 30, 48, 96, 48, 33)

# Extended binary Golay [24, 12, 8]: the free counts of the m=1 extremal
# type II distribution.
GOLAY_FREE_COUNTS = {8: 759, 12: 2576, 16: 759}


def nmds_844_codes() -> tuple[LinearCode, LinearCode]:
    """The two reference [8, 4, 4] near-MDS codes over GF(4)."""
    f4 = GF(4)
    a = LinearCode(GFMatrix.from_rows(f4, _NMDS_844_ROWS_A))
    b = LinearCode(GFMatrix.from_rows(f4, _NMDS_844_ROWS_B))
    return a, b
