import random
from fractions import Fraction

import pytest

from weightdist.errors import DuplicateIndexError, IndexOutOfRangeError, SingularMatrixError
from weightdist.fields import GF
from weightdist.matrices import (
    GFMatrix,
    RationalMatrix,
    binom,
    gf_kernel_basis,
    gf_matmul,
    gf_rank,
    pascal_minor_check,
    rational_kernel_vector,
    rational_rank,
    select_columns,
    solve_exact,
    truncated_pascal,
)


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(5, -1) == 0
    assert binom(2, 5) == 0
    assert binom(0, 0) == 1
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_rank_basics():
    f2 = GF(2)
    assert gf_rank(GFMatrix.zeros(f2, 2, 3)) == 0
    assert gf_rank(GFMatrix.identity(f2, 4)) == 4
    assert gf_rank(GFMatrix.from_rows(f2, [[1, 1], [1, 1]])) == 1


def test_kernel_basics():
    f2 = GF(2)
    assert gf_kernel_basis(GFMatrix.identity(f2, 3)).rows == 0
    kb = gf_kernel_basis(GFMatrix.from_rows(f2, [[1, 1]]))
    assert kb.entries == ((1, 1),)


def test_kernel_is_in_kernel_and_dimension_formula():
    rng = random.Random(11)
    for q in (2, 3, 4, 5, 8, 9):
        f = GF(q)
        for _ in range(20):
            r, c = rng.randrange(1, 5), rng.randrange(1, 7)
            M = GFMatrix.from_rows(f, [[rng.randrange(q) for _ in range(c)] for _ in range(r)])
            kb = gf_kernel_basis(M)
            assert gf_rank(M) + kb.rows == c
            for v in kb.entries:
                assert all(x == 0 for x in gf_matmul(M, GFMatrix.from_rows(f, [v]).transpose()).column(0))
            if kb.rows:
                assert gf_rank(kb) == kb.rows


def test_select_columns():
    f3 = GF(3)
    M = GFMatrix.from_rows(f3, [[1, 2, 0], [0, 1, 2]])
    assert select_columns(M, range(3)).entries == M.entries
    assert select_columns(M, [0, 2]).entries == ((1, 0), (0, 2))
    with pytest.raises(IndexOutOfRangeError):
        select_columns(M, [0, 3])
    with pytest.raises(DuplicateIndexError):
        select_columns(M, [1, 1])


def test_selected_rank_bounded():
    rng = random.Random(5)
    f4 = GF(4)
    for _ in range(25):
        M = GFMatrix.from_rows(f4, [[rng.randrange(4) for _ in range(6)] for _ in range(3)])
        idx = sorted(rng.sample(range(6), rng.randrange(1, 6)))
        sub = select_columns(M, idx)
        assert gf_rank(sub) <= min(gf_rank(M), len(idx))


def test_solve_exact_identity():
    A = RationalMatrix.identity(4)
    b = [3, Fraction(1, 2), -7, 0]
    assert solve_exact(A, b) == (3, Fraction(1, 2), -7, 0)


def test_solve_exact_roundtrip_random():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randrange(1, 6)
        A = RationalMatrix.from_rows(
            [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)])
        b = [rng.randrange(-9, 10) for _ in range(n)]
        try:
            x = solve_exact(A, b)
        except SingularMatrixError as e:
            kv = e.kernel_vector
            assert kv is not None and any(kv)
            assert all(v == 0 for v in A.matvec(kv))
            continue
        assert A.matvec(x) == tuple(Fraction(v) for v in b)


def test_singular_reports_rank_and_witness():
    A = RationalMatrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(SingularMatrixError) as ei:
        solve_exact(A, [1, 2])
    assert ei.value.rank == 1
    kv = ei.value.kernel_vector
    assert any(kv) and all(v == 0 for v in A.matvec(kv))


def test_rational_rank_and_kernel():
    A = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rational_rank(A) == 2
    kv = rational_kernel_vector(A)
    assert any(kv) and all(v == 0 for v in A.matvec(kv))
    assert rational_kernel_vector(RationalMatrix.identity(3)) is None


def test_truncated_pascal_values():
    P = truncated_pascal(1, 2)
    assert P.entries == ((1, 1, 1),)
    P = truncated_pascal(2, 2)
    assert P.entries == ((1, 1, 1), (2, 1, 0))


def test_pascal_minor_check_spots():
    assert pascal_minor_check(3, 8)
    assert pascal_minor_check(1, 1)
    assert pascal_minor_check(4, 6)


def test_pascal_all_square_selections_solvable():
    # nonzero maximal minors mean any r-column selection is invertible
    import itertools
    P = truncated_pascal(3, 6)
    for cols in itertools.combinations(range(7), 3):
        sub = RationalMatrix.from_rows([[P.entries[i][j] for j in cols] for i in range(3)])
        x = solve_exact(sub, [1, 2, 3])
        assert sub.matvec(x) == (1, 2, 3)
