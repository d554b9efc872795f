import pytest

from weightdist.corpus import random_corpus
from weightdist.reference import nmds_844_codes

CORPUS_SEED = 20250810


@pytest.fixture(scope="session")
def corpus():
    """>= 100 seeded random codes over GF(2..5), n <= 10, duals enumerable."""
    return random_corpus(seed=CORPUS_SEED, count_per_q=30)


@pytest.fixture(scope="session")
def reference_pair():
    """The two [8,4,4] near-MDS codes over GF(4) with known distributions."""
    return nmds_844_codes()
