"""The two exact representations and the one-parameter subgroups."""

import json
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from g2cells import linalg, rep
from g2cells.weyl import W, WORD_I, WORD_I_TILDE, Weight

V7, V14 = rep.build_representations()

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def test_dimensions():
    assert V7.dim == 7
    assert V14.dim == 14


def test_weight_multisets():
    short = {(1, 0), (-2, 1), (1, -1), (-1, 0), (2, -1), (-1, 1)}
    got7 = sorted((w.n1, w.n2) for w in V7.weights)
    assert got7 == sorted(list(short) + [(0, 0)])
    zero_mult = sum(1 for w in V14.weights if w == Weight(0, 0))
    assert zero_mult == 2
    long_roots = {(0, 1), (3, -1), (-3, 2), (3, -2), (-3, 1), (0, -1)}
    got14 = sorted((w.n1, w.n2) for w in V14.weights)
    assert got14 == sorted(list(short) + list(long_roots) + [(0, 0), (0, 0)])


@pytest.mark.parametrize("R", (V7, V14), ids=("V7", "V14"))
def test_chevalley_relations(R):
    A = ((2, -3), (-1, 2))
    zero = linalg.mat_scale(R.h[1], Fraction(0))
    for i in (1, 2):
        for j in (1, 2):
            assert linalg.commutator(R.e[i], R.f[j]) == (R.h[i] if i == j else zero)
            assert linalg.commutator(R.h[i], R.e[j]) == linalg.mat_scale(
                R.e[j], Fraction(A[i - 1][j - 1])
            )
            assert linalg.commutator(R.h[i], R.f[j]) == linalg.mat_scale(
                R.f[j], Fraction(-A[i - 1][j - 1])
            )


@pytest.mark.parametrize("R", (V7, V14), ids=("V7", "V14"))
def test_serre_relations(R):
    for mats in (R.e, R.f):
        t = mats[2]
        for _ in range(4):
            t = linalg.commutator(mats[1], t)
        assert linalg.is_zero_matrix(t)
        t = mats[1]
        for _ in range(2):
            t = linalg.commutator(mats[2], t)
        assert linalg.is_zero_matrix(t)


@pytest.mark.parametrize("R", (V7, V14), ids=("V7", "V14"))
def test_triangularity_of_generators(R):
    for i in (1, 2):
        assert all(
            R.e[i][r][c] == 0 for r in range(R.dim) for c in range(r + 1)
        )
        assert all(
            R.f[i][r][c] == 0 for r in range(R.dim) for c in range(r, R.dim)
        )


def test_weights_strictly_decreasing_in_height():
    for R in (V7, V14):
        heights = [w.height() for w in R.weights]
        assert heights == sorted(heights, reverse=True)


def test_nilpotency_degrees_recorded():
    assert V7.nilpotency == {("x", 1): 3, ("x", 2): 2, ("y", 1): 3, ("y", 2): 2}
    assert V14.nilpotency == {("x", 1): 4, ("x", 2): 3, ("y", 1): 4, ("y", 2): 3}


def test_x_at_zero_is_identity():
    assert rep.x(1, 0) == rep.group_identity()
    assert rep.y(2, 0).m14 == linalg.identity(14)


@settings(max_examples=25, deadline=None)
@given(rationals, rationals, st.sampled_from((1, 2)))
def test_one_parameter_subgroup_law(s, t, i):
    assert rep.x(i, s) * rep.x(i, t) == rep.x(i, s + t)
    assert rep.y(i, s) * rep.y(i, t) == rep.y(i, s + t)


def test_coweight_identity_and_inverse():
    for i in (1, 2):
        assert rep.coweight(i, 1) == rep.group_identity()
        g = rep.coweight(i, Fraction(3, 4))
        assert g * g.inverse() == rep.group_identity()
    with pytest.raises(ValueError):
        rep.coweight(1, 0)


def test_braid_identity_for_w0():
    a = rep.group_product(rep.sdot(i) for i in WORD_I)
    b = rep.group_product(rep.sdot(i) for i in WORD_I_TILDE)
    assert a == b and a.m14 == b.m14
    assert rep.wdot(W.w0) == a


@settings(max_examples=20, deadline=None)
@given(nonzero_rationals, st.sampled_from((1, 2)))
def test_rank_one_factorization_identity(t, i):
    lhs = rep.x(i, t)
    rhs = rep.y(i, 1 / t) * rep.sdot(i) * rep.coweight(i, 1 / t) * rep.y(i, 1 / t)
    assert lhs.m7 == rhs.m7
    assert lhs.m14 == rhs.m14


def test_wdot_representatives_are_distinct():
    assert len({rep.wdot(w).m7 for w in W.elements}) == 12


def test_sdot_conjugation_permutes_weight_spaces():
    for i in (1, 2):
        g = rep.sdot(i)
        inv = g.inverse()
        for R, label in ((V7, "V7"),):
            m = g.matrix(label)
            minv = inv.matrix(label)
            conj = linalg.mat_mul(linalg.mat_mul(m, _diag_basis(R, 0)), minv)
            # conjugating the projector onto a weight line lands on the
            # reflected weight's line
            for k, mu in enumerate(R.weights):
                proj = _diag_basis(R, k)
                image = linalg.mat_mul(linalg.mat_mul(m, proj), minv)
                target = mu.reflect(i)
                expected_index = R.weights.index(target)
                for r in range(R.dim):
                    for c in range(R.dim):
                        if image[r][c] != 0:
                            assert r == c == expected_index


def _diag_basis(R, k):
    return tuple(
        tuple(
            Fraction(1) if r == c == k else Fraction(0) for c in range(R.dim)
        )
        for r in range(R.dim)
    )


def test_determinants_are_one():
    samples = [
        rep.x(1, Fraction(2, 3)) * rep.y(2, Fraction(-5)) * rep.sdot(1),
        rep.wdot(W.w0),
        rep.coweight(2, Fraction(7, 2)),
    ]
    for g in samples:
        assert linalg.det(g.m7) == 1
        assert linalg.det(g.m14) == 1


def test_provenance_regenerates_matrices():
    g = rep.x(1, Fraction(1, 2)) * rep.sdot(2) * rep.y(1, Fraction(-3, 7))
    m7, m14 = g.regenerate()
    assert m7 == g.m7 and m14 == g.m14
    inv = g.inverse()
    assert g * inv == rep.group_identity()
    assert (g * inv).m14 == linalg.identity(14)


def test_triangularity_predicates():
    assert rep.is_unipotent_lower(rep.y(1, Fraction(5)))
    assert rep.is_unipotent_upper(rep.x(2, Fraction(-3)))
    assert not rep.is_upper(rep.sdot(1))
    assert rep.is_upper(rep.coweight(1, Fraction(2)))
    assert not rep.is_unipotent_upper(rep.coweight(1, Fraction(2)))


def test_v14_consistent_with_v7_on_predicates():
    for g in (rep.y(1, Fraction(5)), rep.x(2, Fraction(-3)),
              rep.y(2, Fraction(1, 3)) * rep.y(1, Fraction(2))):
        m = g.m14
        lower = all(m[i][j] == 0 for i in range(14) for j in range(i + 1, 14))
        assert lower == rep.is_lower(g)


def test_generator_fixture_matches_committed_file():
    committed = json.loads(
        resources.files("g2cells.data")
        .joinpath("chevalley_generators.json")
        .read_text()
    )
    assert committed == rep.generator_fixture()
