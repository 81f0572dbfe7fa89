"""Core algebra type: validation, homogeneous parts, radical, Peirce pieces,
simplicity, serialization."""

from fractions import Fraction

import pytest

import stargraded as sg
from stargraded.core import (
    StarSuperAlgebra,
    _frac_str,
    block_unit,
    semisimple_unit,
    sparse_mul,
    sparse_star,
)


def test_validate_accepts_well_formed_algebras():
    for a in (sg.m_hl_transpose(2, 1), sg.m_hh_symplectic(1), sg.mn_cmn(2, "t", "-")):
        assert sg.validate(a) == []


def test_validate_catches_broken_associativity():
    bad = StarSuperAlgebra(
        dim=2,
        labels=("a", "b"),
        structure=[(0, 0, 1, 1), (0, 1, 0, 1)],
        grading=(0, 0),
        involution=((1, 0), (0, 1)),
    )
    assert any("associat" in p for p in sg.validate(bad))


def test_validate_catches_non_involutive_star(m2):
    doc = sg.to_interchange(m2)
    doc["involution"][0] = [0, 1, "2/1"]
    broken = sg.from_interchange(doc)
    assert sg.validate(broken) != []


def test_multiply_and_star_on_matrix_units(m2):
    e12 = [0, 1, 0, 0]
    e21 = [0, 0, 1, 0]
    assert sg.multiply(m2, e12, e21) == [1, 0, 0, 0]
    assert sg.multiply(m2, e21, e12) == [0, 0, 0, 1]
    assert sg.star(m2, e12) == e21


def test_star_is_graded_antiautomorphism(m2):
    import itertools

    for i, j in itertools.product(range(4), repeat=2):
        x = [1 if k == i else 0 for k in range(4)]
        y = [1 if k == j else 0 for k in range(4)]
        lhs = sg.star(m2, sg.multiply(m2, x, y))
        rhs = sg.multiply(m2, sg.star(m2, y), sg.star(m2, x))
        assert lhs == rhs


def test_hom_components_split_the_whole_space(m2):
    comp = sg.hom_components(m2)
    assert sum(comp.by_kind(k).dim for k in ("y+", "y-", "z+", "z-")) == m2.dim
    assert sg.hom_dims(m2) == (2, 0, 1, 1)


def test_hom_members_have_the_right_symmetry(m2):
    space = sg.hom_components(m2).by_kind("z-")
    assert space.dim > 0
    for dense in space.basis:
        assert sg.star(m2, list(dense)) == [-c for c in dense]


def test_radical_of_simple_is_zero(m2):
    assert sg.jacobson_radical(m2).is_zero


def test_radical_of_triangular_is_the_strictly_upper_part(ut2):
    rad = sg.jacobson_radical(ut2)
    assert rad.dim == 8
    want = set(ut2.wedderburn.radical)
    for k in want:
        assert rad.contains([1 if i == k else 0 for i in range(ut2.dim)])


def test_block_unit_and_semisimple_unit(ut2):
    blocks = ut2.wedderburn.blocks
    u0 = block_unit(ut2, blocks[0].indices)
    assert sparse_mul(ut2, u0, u0) == u0
    e = semisimple_unit(ut2)
    assert sparse_mul(ut2, e, e) == e
    assert sparse_star(ut2, e) == e


def test_block_unit_requires_a_unital_subalgebra(small_ut):
    with pytest.raises(ValueError):
        block_unit(small_ut, small_ut.wedderburn.radical)


def test_peirce_pieces_partition_the_radical(ut2):
    p = sg.peirce_decompose(ut2)
    assert (p.j00.dim, p.j01.dim, p.j10.dim, p.j11.dim) == (0, 0, 0, 8)


def test_is_star_graded_simple(m2, ut2):
    assert sg.is_star_graded_simple(m2)
    assert not sg.is_star_graded_simple(ut2)
    two = sg.direct_sum(m2, m2)
    assert not sg.is_star_graded_simple(two)


def test_direct_sum_adds_dimensions(m2, ground):
    s = sg.direct_sum(m2, ground)
    assert s.dim == 5
    assert sg.validate(s) == []
    assert sg.hom_dims(s) == (3, 0, 1, 1)
    assert len(s.wedderburn.blocks) == 2


def test_central_primitive_idempotents(m2, ground):
    s = sg.direct_sum(m2, ground)
    idems = sg.central_primitive_idempotents(s)
    assert len(idems) == 2
    for e in idems:
        assert sparse_mul(s, e, e) == e


def test_interchange_round_trip(ut2):
    doc = sg.to_interchange(ut2)
    back = sg.from_interchange(doc)
    assert back.dim == ut2.dim
    assert back.labels == ut2.labels
    assert back.grading == ut2.grading
    assert back.involution == ut2.involution
    assert sg.to_interchange(back) == doc


def test_save_and_load(tmp_path, m2):
    path = tmp_path / "m2.json"
    sg.save_algebra(m2, path)
    back = sg.load_algebra(path)
    assert sg.to_interchange(back) == sg.to_interchange(m2)


def test_frac_str_lowest_terms():
    assert _frac_str(Fraction(2, 4)) == "1/2"
    assert _frac_str(3) == "3/1"
    assert _frac_str(Fraction(-1, 3)) == "-1/3"


def test_radical_centralizer_sizes(ut2):
    assert sg.radical_centralizer(ut2).dim == 0
