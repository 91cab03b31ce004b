"""Chamber Ansatz factorizations: closed forms, round trips, flags."""

import random
from fractions import Fraction

import pytest

from g2cells import chamber, deodhar, rep
from g2cells.weyl import WORD_I, WORD_I_TILDE


def x_tilde(params):
    return rep.group_product(
        rep.x(i, Fraction(t)) for i, t in zip(WORD_I_TILDE, params)
    )


def y_word(word, params):
    return rep.group_product(
        rep.y(i, Fraction(t)) for i, t in zip(word, params)
    )


def test_epsilon_at_prime_point():
    params = tuple(Fraction(v) for v in (1, 2, 3, 5, 7, 11))
    fac = chamber.epsilon_factorize(x_tilde(params), WORD_I_TILDE)
    assert fac.kind == "lower" and fac.word == WORD_I_TILDE
    assert fac.params[0] == Fraction(1, 11)
    assert fac.params == chamber.closed_form_epsilon(params)
    assert chamber.flag_equal_opposed(x_tilde(params), fac.product())


def test_epsilon_identity_not_factorizable():
    with pytest.raises(chamber.NotFactorizable):
        chamber.epsilon_factorize(rep.group_identity(), WORD_I_TILDE)
    with pytest.raises(chamber.NotFactorizable):
        chamber.closed_form_epsilon((1, 0, 1, 1, 1, 1))


def test_epsilon_totally_positive_point():
    fac = chamber.epsilon_factorize(x_tilde((1,) * 6), WORD_I_TILDE)
    assert all(p > 0 for p in fac.params)


def test_alpha_first_param_examples():
    fam = deodhar.family_by_name("x21x12")
    cell = deodhar.CellId(fam, (1, 1))
    point = deodhar.cell_point(cell, (1, 2), (3, 5))
    fac = chamber.alpha_factorize(point, WORD_I_TILDE)
    assert fac.params[0] == Fraction(-1, 5)
    assert fac.params == chamber.closed_form_alpha("x21x12", (1, 2), (3, 5))

    fam = deodhar.family_by_name("12x21x")
    cell = deodhar.CellId(fam, (1, 1))
    point = deodhar.cell_point(cell, (1, 2), (3, 5))
    fac = chamber.alpha_factorize(point, WORD_I_TILDE)
    assert fac.params[0] == Fraction(1, 2)
    assert fac.params[1] == Fraction(-1, 5)


def test_alpha_identity_not_factorizable():
    with pytest.raises(chamber.NotFactorizable):
        chamber.alpha_factorize(rep.group_identity(), WORD_I_TILDE)


def test_alpha_requires_lower_input():
    with pytest.raises(ValueError):
        chamber.alpha_factorize(rep.x(1, Fraction(1)), WORD_I_TILDE)
    with pytest.raises(ValueError):
        chamber.epsilon_factorize(rep.y(1, Fraction(1)), WORD_I_TILDE)


def test_factorize_rejects_bad_words():
    with pytest.raises(ValueError):
        chamber.epsilon_factorize(x_tilde((1,) * 6), (1, 2, 1, 2, 1, 1))
    with pytest.raises(ValueError):
        chamber.epsilon_factorize(x_tilde((1,) * 6), (1, 2, 1))


@pytest.mark.parametrize("name", sorted(chamber.CLOSED_FORM_FAMILIES))
def test_closed_alpha_agrees_with_minors(name):
    rng = random.Random(hash(name) % 100000)
    fam = deodhar.family_by_name(name)
    done = 0
    while done < 25:
        t = tuple(
            rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.I
        )
        m = tuple(
            rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.K
        )
        cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
        point = deodhar.cell_point(cell, t, m)
        try:
            closed = chamber.closed_form_alpha(name, t, m)
            fac = chamber.alpha_factorize(point, WORD_I_TILDE)
        except chamber.NotFactorizable:
            continue
        assert fac.params == closed
        done += 1


def test_alpha_epsilon_round_trip_both_words():
    rng = random.Random(11)
    for word in (WORD_I, WORD_I_TILDE):
        done = 0
        while done < 10:
            params = tuple(
                rng.choice((1, -1)) * deodhar.sample_magnitude(rng)
                for _ in range(6)
            )
            y = y_word(word, params)
            try:
                x = chamber.alpha_factorize(y, word)
                back = chamber.epsilon_factorize(x.product(), word)
            except chamber.NotFactorizable:
                continue
            assert back.params == params
            assert back.product() == y
            assert chamber.flag_equal_opposed(x.product(), y)
            done += 1


def test_alpha_totally_positive_point():
    y = y_word(WORD_I_TILDE, (1,) * 6)
    fac = chamber.alpha_factorize(y, WORD_I_TILDE)
    assert all(p > 0 for p in fac.params)


def test_flag_equal_opposed_rejects_mismatched_pair():
    assert not chamber.flag_equal_opposed(rep.x(1, Fraction(1)), rep.y(1, Fraction(1)))


def test_factorization_forbids_zero_params():
    with pytest.raises(chamber.NotFactorizable):
        chamber.Factorization(WORD_I_TILDE, (Fraction(0),) * 6, "lower")


def test_closed_alpha_examples_from_tables():
    vals = chamber.closed_form_alpha("12x21x", (1, 2), (3, 5))
    assert vals[0] == Fraction(1, 2) and vals[1] == Fraction(-1, 5)
    vals = chamber.closed_form_alpha("1x12x2", (1, 2), (3, 5))
    assert vals[0] == Fraction(-1, 5)
