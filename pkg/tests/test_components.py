"""Component graph, letter matching, classification, Euler numbers."""

import random
from fractions import Fraction

import pytest

from g2cells import chamber, components, deodhar, fixtures, rep
from g2cells.components import SignVector
from g2cells.weyl import WORD_I, WORD_I_TILDE

SAMPLES, SEED = 8, 42


@pytest.fixture(scope="module")
def partition():
    return components.compute_figure1(SAMPLES, SEED)


@pytest.fixture(scope="module")
def report():
    return components.euler_report(SAMPLES, SEED)


def test_partition_sizes(partition):
    assert partition.sizes() == (2, 2, 2, 2, 16, 16, 16, 16, 16, 16, 24)
    assert sum(partition.sizes()) == 128


def test_partition_matches_reference(partition):
    for num, (icells, itcells) in fixtures.FIGURE1.items():
        expected = {SignVector("i", s) for s in icells}
        expected |= {SignVector("it", s) for s in itcells}
        assert partition.components[num] == frozenset(expected), num


def test_expected_edges_present(partition):
    graph = partition.graph
    assert frozenset((SignVector("i", "++++++"), SignVector("it", "++++++"))) in graph.edges
    assert frozenset((SignVector("i", "+-+-+-"), SignVector("it", "-+-+-+"))) in graph.edges


def test_edges_stay_inside_components(partition):
    for edge in partition.graph.edges:
        nums = {partition.component_of(n) for n in edge}
        assert len(nums) == 1


def test_overlap_is_symmetric_under_reseeding(partition):
    # a point of a 121212 cell that lands in a 212121 cell factors back
    # to the original sign vector
    rng = random.Random(4)
    for signs in ("++++++", "+-+-+-", "-++---"):
        params = tuple(
            (1 if ch == "+" else -1) * deodhar.sample_magnitude(rng)
            for ch in signs
        )
        y = rep.group_product(rep.y(i, t) for i, t in zip(WORD_I, params))
        x = chamber.alpha_factorize(y, WORD_I_TILDE)
        mate = chamber.epsilon_factorize(x.product(), WORD_I_TILDE)
        assert mate.product() == y
        back = chamber.epsilon_factorize(
            chamber.alpha_factorize(mate.product(), WORD_I).product(), WORD_I
        )
        assert fixtures.string_of_signs(back.signs()) == signs


def test_upper_letter_groups_match_reference():
    groups = components.upper_letter_groups(SAMPLES, SEED)
    for letter, cells in fixtures.UPPER_COMPONENTS.items():
        assert groups[letter] == frozenset(cells)


def test_bijection(partition):
    assert components.match_plus_components(SAMPLES, SEED) == fixtures.BIJECTION


def test_classification_tables_match_reference():
    tables = components.classification_tables(SAMPLES, SEED)
    for name, expected_rows in fixtures.CLASSIFICATION_TABLES.items():
        got = {(r.cell, r.signs, r.letter, r.component) for r in tables[name]}
        expected = {
            (cell, signs, letter, fixtures.BIJECTION[letter])
            for cell, signs, letter in expected_rows
        }
        assert got == expected, name


def test_spec_level_classification_examples():
    r = components.classify_cell("0+*0+*", SAMPLES, SEED)
    assert (r.signs, r.letter, r.component) == ("---+++", "K", 11)
    r = components.classify_cell("++0+*+", SAMPLES, SEED)
    assert (r.signs, r.letter, r.component) == ("+-+++-", "H", 8)
    r = components.classify_cell("+00+**", SAMPLES, SEED)
    assert (r.signs, r.letter, r.component) == ("-+++-+", "F", 6)


def test_codim0_classification_uses_graph(partition):
    record = components.classify_cell("++++++", SAMPLES, SEED)
    assert record.component == 1 and record.codim == 0
    record = components.classify_cell("+-+-+-", SAMPLES, SEED)
    assert record.component == 3
    record = components.classify_cell("-+-+-+", SAMPLES, SEED)
    assert record.component == 4


def test_euler_report_counts(report):
    for num in range(1, 12):
        assert report.per_component[num] == fixtures.EULER_TABLE[num]
    assert report.total_euler() == 12
    assert len(report.records) == 140


def test_component_cell_grouping_matches_reference(report):
    by_component = {num: ([], [], []) for num in range(1, 12)}
    for record in report.records:
        by_component[record.component][record.codim].append(record.cell)
    for num, groups in by_component.items():
        for c in range(3):
            assert set(groups[c]) == set(fixtures.COMPONENT_CELLS[num][c]), (num, c)


def test_counting_remarks(report):
    pairs = {frozenset((5, 6)), frozenset((7, 8)), frozenset((9, 10))}
    for fam in deodhar.families():
        comps = [r.component for r in report.records if r.family == fam.name]
        if fam.codim == 2:
            assert len(comps) == 4
            assert comps.count(11) == 2
            assert frozenset(c for c in comps if c != 11) in pairs
        elif fam.codim == 1:
            assert len(comps) == 16
            for comp in range(5, 11):
                assert comps.count(comp) == 2
            assert comps.count(11) == 4


def test_classification_point_independent():
    rng = random.Random(99)
    for display in ("0+*0-*", "-+0-*-", "+00-**", "---0+*"):
        cell = deodhar.cell_by_display(display)
        base = components.classify_cell(display, SAMPLES, SEED)
        done = 0
        while done < 6:
            t = tuple(s * deodhar.sample_magnitude(rng) for s in cell.h)
            m = tuple(
                rng.choice((0, 1, -1)) * deodhar.sample_magnitude(rng)
                for _ in cell.family.K
            )
            point = deodhar.cell_point(cell, t, m)
            try:
                fac = chamber.alpha_factorize(point, WORD_I_TILDE)
            except chamber.NotFactorizable:
                continue
            signs = fixtures.string_of_signs(fac.signs())
            letter = next(
                L for L, grp in fixtures.UPPER_COMPONENTS.items() if signs in grp
            )
            assert fixtures.BIJECTION[letter] == base.component
            done += 1


def test_fixture_internal_coherence():
    # the upper letter groups are exactly the 212121 columns of the figure
    for letter, number in fixtures.BIJECTION.items():
        column_of = {
            "A": 1, "B": 2, "C": 3, "D": 4, "E": 5, "F": 6,
            "G": 7, "H": 8, "I": 9, "J": 10, "K": 11,
        }
        assert set(fixtures.UPPER_COMPONENTS[letter]) == set(
            fixtures.FIGURE1[column_of[letter]][1]
        )
    # the component cell lists agree with the classification tables
    for name, rows in fixtures.CLASSIFICATION_TABLES.items():
        for cell, signs, letter in rows:
            num = fixtures.BIJECTION[letter]
            codim = cell.count("0")
            assert cell in fixtures.COMPONENT_CELLS[num][codim], (name, cell)
    # each codimension layer has the right total size
    totals = [0, 0, 0]
    for groups in fixtures.COMPONENT_CELLS.values():
        for c in range(3):
            totals[c] += len(groups[c])
    assert totals == [64, 64, 12]
    # Euler numbers are the alternating sums of the table that lists them
    for num, (n0, n1, n2, chi) in fixtures.EULER_TABLE.items():
        assert chi == n0 - n1 + n2
        assert (n0, n1, n2) == tuple(
            len(fixtures.COMPONENT_CELLS[num][c]) for c in range(3)
        )


def test_graph_input_validation():
    with pytest.raises(ValueError):
        components.build_overlap_graph(samples=0)
