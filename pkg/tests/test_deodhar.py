"""Cell parameterizations, rank-profile positions, and chain checks."""

import random
from fractions import Fraction

import pytest

from g2cells import deodhar, linalg, rep
from g2cells.weyl import W, WORD_I


def test_families_geometry():
    fams = deodhar.families()
    assert len(fams) == 8
    for fam in fams:
        assert fam.dim + fam.codim == 6
        assert fam.codim in (0, 1, 2)
    assert sorted(f.codim for f in fams) == [0, 1, 1, 1, 1, 2, 2, 2]


def test_param_signatures():
    assert deodhar.family_by_name("x21x12").param_signature() == ("t1", "t2", "m1", "m2")
    assert deodhar.family_by_name("12x21x").param_signature() == ("t1", "m1", "m2", "t2")
    assert deodhar.family_by_name("1x1xxx").param_signature() == ("t1", "m1", "t2", "t3", "t4")
    assert deodhar.family_by_name("xxxxxx").param_signature() == tuple(
        "t%d" % k for k in range(1, 7)
    )


def test_cell_display_round_trip():
    cell = deodhar.cell_by_display("0+*0-*")
    assert cell.family.name == "1x12x2"
    assert cell.h == (1, -1)
    assert cell.display() == "0+*0-*"
    with pytest.raises(KeyError):
        deodhar.cell_by_display("0+0+**")  # no family has J = {1,3}


def test_cell_point_all_ones_is_unipotent_lower():
    fam = deodhar.family_by_name("xxxxxx")
    cell = deodhar.CellId(fam, (1,) * 6)
    point = deodhar.cell_point(cell, (1,) * 6, ())
    direct = rep.group_product(rep.y(i, Fraction(1)) for i in WORD_I)
    assert point == direct
    assert rep.is_unipotent_lower(point)


def test_cell_point_matches_explicit_word():
    # 12x21x: s1. s2. y1(t1) x2(m1) s2.^-1 x1(m2) s1.^-1 y2(t2)
    fam = deodhar.family_by_name("12x21x")
    cell = deodhar.CellId(fam, (1, -1))
    t1, t2, m1, m2 = Fraction(3), Fraction(-2), Fraction(5, 7), Fraction(-1, 3)
    point = deodhar.cell_point(cell, (t1, t2), (m1, m2))
    explicit = (
        rep.sdot(1) * rep.sdot(2) * rep.y(1, t1) * rep.x(2, m1)
        * rep.sdot_inverse(2) * rep.x(1, m2) * rep.sdot_inverse(1) * rep.y(2, t2)
    )
    assert point == explicit
    assert rep.is_unipotent_lower(point)


def test_cell_point_validates_signs():
    fam = deodhar.family_by_name("x21x12")
    cell = deodhar.CellId(fam, (1, -1))
    with pytest.raises(ValueError):
        deodhar.cell_point(cell, (1, 2), (0, 0))  # t2 must be negative
    with pytest.raises(ValueError):
        deodhar.cell_point(cell, (0, -2), (0, 0))  # t1 must be nonzero
    with pytest.raises(ValueError):
        deodhar.cell_point(cell, (1,), (0, 0))  # arity


def test_mixed_position_examples():
    assert deodhar.bruhat_position_mixed(rep.group_identity()) is W.identity
    assert deodhar.bruhat_position_mixed(rep.x(1, Fraction(1))) is W.identity
    for w in W.elements:
        assert deodhar.bruhat_position_mixed(rep.wdot(w)) is w


def test_plus_position_examples():
    assert deodhar.bruhat_position_plus(rep.y(1, Fraction(5))) is W.s(1)
    assert deodhar.bruhat_position_plus(rep.y(2, Fraction(-2))) is W.s(2)
    assert deodhar.bruhat_position_plus(rep.wdot(W.w0)) is W.w0
    ones = rep.group_product(rep.y(i, Fraction(1)) for i in WORD_I)
    assert deodhar.bruhat_position_plus(ones) is W.w0


def test_rank_profile_permutation_against_subranks():
    rng = random.Random(9)
    for _ in range(12):
        fam = rng.choice(deodhar.families())
        t = tuple(rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.I)
        m = tuple(rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.K)
        cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
        g = deodhar.cell_point(cell, t, m)
        mat = g.m7
        assert linalg.bruhat_permutation_topleft(mat) == \
            linalg.bruhat_permutation_topleft_by_ranks(mat)
        assert linalg.bruhat_permutation_bottomleft(mat) == \
            linalg.bruhat_permutation_bottomleft_by_ranks(mat)


def test_bareiss_rank_basics():
    assert linalg.rank(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))) == 1
    assert linalg.rank(linalg.identity(5)) == 5
    assert linalg.det(linalg.identity(3)) == 1


def test_position_chain_example():
    fam = deodhar.family_by_name("x21x12")
    cell = deodhar.CellId(fam, (1, 1))
    chain = deodhar.position_chain(cell, (1, 2), (3, 5))
    w0 = W.w0
    expected = (
        w0,
        w0,
        w0 * W.s(2),
        w0 * W.s(2) * W.s(1),
        w0 * W.s(2) * W.s(1),
        w0 * W.s(2),
        w0,
    )
    assert chain == expected
    # the chain is exactly w0 times the subexpression chain
    assert chain == tuple(w0 * s for s in fam.sigma)
    assert deodhar.verify_cell_chain(cell, (1, 2), (3, 5))


def test_chain_all_ones_stays_at_w0():
    fam = deodhar.family_by_name("xxxxxx")
    cell = deodhar.CellId(fam, (1,) * 6)
    chain = deodhar.position_chain(cell, (1,) * 6, ())
    assert all(w is W.w0 for w in chain)


def test_chain_invariants_random_points():
    rng = random.Random(31)
    for fam in deodhar.families():
        for _ in range(8):
            t = tuple(rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.I)
            m = tuple(rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.K)
            cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
            point = deodhar.cell_point(cell, t, m)
            assert rep.is_unipotent_lower(point)
            assert deodhar.bruhat_position_plus(point) is W.w0
            assert deodhar.verify_cell_chain(cell, t, m)
            # every partial product lies in U- sigma_j dot
            prefixes = deodhar._prefix_points(cell, t, m)
            for j, g in enumerate(prefixes, start=1):
                shifted = g * rep.wdot(fam.sigma[j]).inverse()
                assert rep.is_unipotent_lower(shifted)


def test_cells_of_distinct_families_have_distinct_chains():
    rng = random.Random(13)
    fams = deodhar.families()
    for fam in fams:
        t = tuple(deodhar.sample_magnitude(rng) for _ in fam.I)
        m = tuple(deodhar.sample_magnitude(rng) for _ in fam.K)
        cell = deodhar.CellId(fam, (1,) * len(fam.I))
        chain = deodhar.position_chain(cell, t, m)
        sigma_read = tuple(W.w0 * w for w in chain)
        assert sigma_read == fam.sigma
        for other in fams:
            if other.name != fam.name:
                assert sigma_read != other.sigma
