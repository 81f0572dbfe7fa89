"""Exact rational linear algebra: ranks, solving, subspaces, rank trackers."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from stargraded.linalg import (
    RankTracker,
    RankTrackerModP,
    Subspace,
    coordinate_span,
    identity_matrix,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rank_mod_p,
    rref,
    solve,
)

entries = st.integers(min_value=-6, max_value=6)


def matrices(max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda n: st.integers(1, max_side).flatmap(
            lambda m: st.lists(st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n)
        )
    )


def test_rank_basics():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank(identity_matrix(4)) == 4
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 1], [0, 3]]) == 2


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rref_is_idempotent(rows):
    reduced, pivots = rref(rows)
    again, pivots2 = rref([r for r in reduced if any(r)])
    assert again == [r for r in reduced if any(r)] and pivots2 == pivots
    assert rank(reduced) == rank(rows) == len(pivots)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_dimension_and_membership(rows):
    ncols = len(rows[0])
    null = nullspace(rows, ncols)
    assert rank(rows) + len(null) == ncols
    for v in null:
        assert all(c == 0 for c in mat_vec(rows, v))


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_solve_recovers_a_consistent_rhs(rows):
    x = [Fraction(i + 1, 2) for i in range(len(rows[0]))]
    b = mat_vec(rows, x)
    y = solve(rows, b)
    assert y is not None
    assert mat_vec(rows, y) == b


def test_solve_detects_inconsistency():
    assert solve([[1, 0], [1, 0]], [1, 2]) is None


def test_mat_mul_against_identity():
    m = [[1, 2], [3, 4]]
    assert mat_mul(m, identity_matrix(2)) == [[1, 2], [3, 4]]


@given(matrices(4))
@settings(max_examples=40, deadline=None)
def test_rank_mod_large_prime_matches(rows):
    p = 2147483647
    assert rank_mod_p(rows, p) == rank(rows)


def test_rank_mod_small_prime_can_drop():
    assert rank([[2]]) == 1
    assert rank_mod_p([[2]], 2) == 0


@given(matrices())
@settings(max_examples=40, deadline=None)
def test_rank_tracker_matches_batch_rank(rows):
    tr = RankTracker()
    grew = sum(1 for r in rows if tr.add(r))
    assert tr.rank == rank(rows) == grew


@given(matrices(4))
@settings(max_examples=40, deadline=None)
def test_rank_tracker_mod_p_never_exceeds_exact(rows):
    tr = RankTrackerModP(2147483629)
    for r in rows:
        tr.add(r)
    assert tr.rank <= rank(rows)


def test_subspace_operations():
    u = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    v = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert u.dim == v.dim == 2
    assert u.add(v).dim == 3
    w = u.intersect(v)
    assert w.dim == 1 and w.contains([0, 5, 0])
    assert u.contains_subspace(w) and v.contains_subspace(w)
    assert not u.contains([0, 0, 1])
    assert Subspace(3).is_zero()


def test_subspace_equality_is_canonical():
    a = Subspace(2, [[1, 1], [1, 0]])
    b = Subspace(2, [[0, 1], [1, 0]])
    assert a == b and hash(a) == hash(b)


def test_coordinate_span():
    s = coordinate_span(4, [1, 3])
    assert s.dim == 2
    assert s.contains([0, 7, 0, -1])
    assert not s.contains([1, 0, 0, 0])
