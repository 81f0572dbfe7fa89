"""Typed multilinear polynomials: construction, signs, and the two evaluators."""

import random
from itertools import permutations
from math import factorial

from hypothesis import given, settings
from hypothesis import strategies as st

import stargraded as sg
from stargraded.core import to_sparse
from stargraded.polynomials import (
    ANY,
    CapelliShape,
    barred_capelli_set,
    capelli_member,
    capelli_ordinary,
    evaluate,
    evaluate_alternating_fast,
    evaluate_sparse,
    generator_family,
    perm_sign,
)


def reference_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@given(st.permutations(list(range(6))))
def test_perm_sign_matches_cycle_parity(p):
    assert perm_sign(tuple(p)) == reference_sign(tuple(p))


def test_capelli_member_shape():
    p = capelli_member(3, "y+")
    assert p.nslots == 3 + 2
    assert p.slot_kinds == ("y+", "y+", "y+", ANY, ANY)
    assert len(p.terms) == factorial(3)
    assert p.terms[(0, 3, 1, 4, 2)] == 1
    assert p.terms[(1, 3, 0, 4, 2)] == -1
    assert p.alt_groups == ((0, 1, 2),)


def test_capelli_member_with_deletions():
    p = capelli_member(3, "z-", deleted=(0,))
    assert p.slot_kinds == ("z-", "z-", "z-", ANY)
    assert (0, 1, 3, 2) in p.terms
    full = capelli_member(3, "z-", deleted=(0, 1))
    assert full.slot_kinds == ("z-", "z-", "z-")
    assert full.terms[(0, 1, 2)] == 1


def test_barred_set_enumerates_deletion_patterns():
    fam = barred_capelli_set(4, "y-")
    assert len(fam) == 8
    assert fam[0].shape.deleted == frozenset()
    assert {p.shape.deleted for p in fam} == {
        frozenset(s) for s in ([], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2])
    }


def test_generator_family_counts():
    polys = generator_family(2, 1, 1, 3)
    assert len(polys) == 2 + 1 + 1 + 4
    kinds = [p.shape.kind for p in polys]
    assert kinds == ["y+", "y+", "y-", "z+", "z-", "z-", "z-", "z-"]


def test_ordinary_member_is_untyped():
    p = capelli_ordinary(2)
    assert p.slot_kinds == (ANY, ANY, ANY)
    assert p.shape.kind == ANY


def test_evaluate_standard_polynomial_on_matrix_units(m2):
    p = capelli_member(2, "any", deleted=(0,))
    e12 = [0, 1, 0, 0]
    e21 = [0, 0, 1, 0]
    # x1 x2 - x2 x1 on (e12, e21) = e11 - e22
    assert evaluate(m2, p, [e12, e21]) == [1, 0, 0, -1]
    assert evaluate(m2, p, [e12, e12]) == [0, 0, 0, 0]


def test_alternating_in_equal_arguments_gives_zero(m2):
    p = capelli_member(3, "any")
    rng = random.Random(5)
    v = [rng.randint(-2, 2) for _ in range(4)]
    w = [rng.randint(-2, 2) for _ in range(4)]
    c = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(2)]
    assert evaluate(m2, p, [v, w, v] + c) == [0, 0, 0, 0]


def naive_fast_pair(A, m, deleted, rng):
    shape = CapelliShape(m, ANY, frozenset(deleted))
    p = capelli_member(m, ANY, deleted)
    alt = [to_sparse([rng.randint(-2, 2) for _ in range(A.dim)]) for _ in range(m)]
    conn = [to_sparse([rng.randint(-2, 2) for _ in range(A.dim)]) for _ in shape.kept_gaps]
    slow = evaluate_sparse(A, p, alt + conn)
    fast = evaluate_alternating_fast(A, shape, alt, conn)
    return slow, fast


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_fast_evaluator_matches_naive(seed):
    rng = random.Random(seed)
    A = sg.m_hl_transpose(1, 1)
    m = rng.randint(1, 4)
    deleted = [g for g in range(m - 1) if rng.random() < 0.4]
    slow, fast = naive_fast_pair(A, m, deleted, rng)
    assert slow == fast


@given(st.integers(0, 10_000))
@settings(max_examples=20, deadline=None)
def test_fast_evaluator_matches_naive_on_exchange(seed):
    rng = random.Random(seed)
    A = sg.m_hl_exchange(1, 1)
    m = rng.randint(1, 3)
    deleted = [g for g in range(m - 1) if rng.random() < 0.4]
    slow, fast = naive_fast_pair(A, m, deleted, rng)
    assert slow == fast
