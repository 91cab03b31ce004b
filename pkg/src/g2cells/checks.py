"""The acceptance suite: every verification criterion in one place.

Each check returns quietly or raises ``AssertionError`` with a
description of the mismatch.  ``run_all`` collects the outcomes, so the
command line ``verify`` and the test suite share one source of truth.
All arithmetic is exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import chamber, components, deodhar, fixtures, linalg, minors, rep
from .weyl import W, WORD_I, WORD_I_TILDE, Weight, enumerate_distinguished


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str


def check_distinguished_subexpressions():
    """The eight subexpressions of 121212, with names and chains."""
    subs = enumerate_distinguished(WORD_I)
    got = {s.name: s.sigma_names() for s in subs}
    if got != fixtures.DISTINGUISHED_I:
        missing = set(fixtures.DISTINGUISHED_I) ^ set(got)
        raise AssertionError("subexpression sets differ: %s" % (missing or got))
    for s in subs:
        if len(s.I) + len(s.J) + len(s.K) != 6 or len(s.J) != len(s.K):
            raise AssertionError("index sets of %s are inconsistent" % s.name)
    if len(enumerate_distinguished(WORD_I_TILDE)) != 8:
        raise AssertionError("the opposite word must also have 8 subexpressions")


def check_representations():
    """Chevalley, Serre, braid and rank-1 factorization identities, exactly."""
    cartan = ((2, -3), (-1, 2))
    for label in ("V7", "V14"):
        R = rep.representation(label)
        zero = linalg.mat_scale(R.h[1], Fraction(0))
        for i in (1, 2):
            for j in (1, 2):
                lhs = linalg.commutator(R.e[i], R.f[j])
                rhs = R.h[i] if i == j else zero
                assert lhs == rhs, "[e%d, f%d] in %s" % (i, j, label)
                assert linalg.commutator(R.h[i], R.e[j]) == linalg.mat_scale(
                    R.e[j], Fraction(cartan[i - 1][j - 1])
                ), "[h%d, e%d] in %s" % (i, j, label)
                assert linalg.commutator(R.h[i], R.f[j]) == linalg.mat_scale(
                    R.f[j], Fraction(-cartan[i - 1][j - 1])
                ), "[h%d, f%d] in %s" % (i, j, label)
        for mats, (a, b) in ((R.e, (1, 2)), (R.f, (1, 2))):
            t = mats[b]
            for _ in range(4):
                t = linalg.commutator(mats[a], t)
            assert linalg.is_zero_matrix(t), "quartic Serre relation in %s" % label
            t = mats[a]
            for _ in range(2):
                t = linalg.commutator(mats[b], t)
            assert linalg.is_zero_matrix(t), "quadratic Serre relation in %s" % label
    w0a = rep.group_product(rep.sdot(i) for i in WORD_I)
    w0b = rep.group_product(rep.sdot(i) for i in WORD_I_TILDE)
    assert w0a.m7 == w0b.m7 and w0a.m14 == w0b.m14, "braid identity for w0dot"
    rng = random.Random(2024)
    for _ in range(20):
        t = Fraction(rng.choice(deodhar.PRIMES), rng.choice(deodhar.PRIMES))
        if rng.random() < 0.5:
            t = -t
        for i in (1, 2):
            lhs = rep.x(i, t)
            rhs = rep.y(i, 1 / t) * rep.sdot(i) * rep.coweight(i, 1 / t) * rep.y(i, 1 / t)
            assert lhs.m7 == rhs.m7 and lhs.m14 == rhs.m14, (
                "rank-1 factorization identity at t=%s, i=%d" % (t, i)
            )


def check_symbolic_minors():
    """The 12 minors of the symbolic sextuple product, verbatim."""
    got = minors.symbolic_minors()
    expected = fixtures.minor_polynomials()
    assert set(got) == set(expected)
    for label in expected:
        assert got[label] == expected[label], (
            "minor %s: %s != %s" % (label, got[label], expected[label])
        )


def _random_family_point(fam, rng):
    t = tuple(
        rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.I
    )
    m = tuple(
        rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in fam.K
    )
    cell = deodhar.CellId(fam, tuple(1 if v > 0 else -1 for v in t))
    return cell, t, m


def check_chamber_consistency(points_per_family=100, seed=90210):
    """Theorem factorizations match closed forms and round-trip exactly."""
    rng = random.Random(seed)
    # epsilon family: symbolic-product inputs
    done = 0
    while done < points_per_family:
        params = tuple(
            rng.choice((1, -1)) * deodhar.sample_magnitude(rng) for _ in range(6)
        )
        xel = rep.group_product(
            rep.x(i, t) for i, t in zip(WORD_I_TILDE, params)
        )
        try:
            closed = chamber.closed_form_epsilon(params)
            fac = chamber.epsilon_factorize(xel, WORD_I_TILDE)
        except chamber.NotFactorizable:
            continue
        assert fac.params == closed, "epsilon closed form drift at %s" % (params,)
        yel = fac.product()
        assert chamber.flag_equal_opposed(xel, yel), "flag identity (epsilon)"
        back = chamber.alpha_factorize(yel, WORD_I_TILDE)
        assert back.product() == xel, "alpha then epsilon round trip"
        done += 1
    # the seven alpha families
    for name in fixtures.TABLE_ORDER:
        fam = deodhar.family_by_name(name)
        done = 0
        while done < points_per_family:
            cell, t, m = _random_family_point(fam, rng)
            point = deodhar.cell_point(cell, t, m)
            try:
                closed = chamber.closed_form_alpha(name, t, m)
                fac = chamber.alpha_factorize(point, WORD_I_TILDE)
            except chamber.NotFactorizable:
                continue
            assert fac.params == closed, (
                "alpha closed form drift on %s at %s %s" % (name, t, m)
            )
            xel = fac.product()
            assert chamber.flag_equal_opposed(xel, point), "flag identity (alpha)"
            back = chamber.epsilon_factorize(xel, WORD_I_TILDE)
            assert back.product() == point, "epsilon then alpha round trip"
            done += 1
    # total positivity: all-positive input gives all-positive output
    ones = tuple(Fraction(1) for _ in range(6))
    xel = rep.group_product(rep.x(i, t) for i, t in zip(WORD_I_TILDE, ones))
    assert all(p > 0 for p in chamber.epsilon_factorize(xel, WORD_I_TILDE).params)
    yel = rep.group_product(rep.y(i, t) for i, t in zip(WORD_I_TILDE, ones))
    assert all(p > 0 for p in chamber.alpha_factorize(yel, WORD_I_TILDE).params)


def check_component_graph(samples=8, seed=42):
    """The 128-cell partition equals the reference figure exactly."""
    partition = components.compute_figure1(samples, seed)
    assert partition.sizes() == (2, 2, 2, 2, 16, 16, 16, 16, 16, 16, 24)
    expected = {
        num: frozenset(
            [components.SignVector("i", s) for s in icells]
            + [components.SignVector("it", s) for s in itcells]
        )
        for num, (icells, itcells) in fixtures.FIGURE1.items()
    }
    assert partition.components == expected, "component membership differs"


def check_bijection(samples=8, seed=42):
    got = components.match_plus_components(samples, seed)
    assert got == fixtures.BIJECTION, "bijection differs: %s" % (got,)


def check_classification(samples=8, seed=42):
    """All seven family tables, including intermediate sign vectors."""
    tables = components.classification_tables(samples, seed)
    for name, rows in tables.items():
        got = {(r.cell, r.signs, r.letter, r.component) for r in rows}
        expected = {
            (cell, signs, letter, fixtures.BIJECTION[letter])
            for cell, signs, letter in fixtures.CLASSIFICATION_TABLES[name]
        }
        assert got == expected, (
            "classification table %s differs: %s" % (name, got ^ expected)
        )


def check_euler(samples=8, seed=42):
    report = components.euler_report(samples, seed)
    for num in range(1, 12):
        assert report.per_component[num] == fixtures.EULER_TABLE[num], (
            "component %d: %s" % (num, report.per_component[num])
        )
    assert report.total_euler() == 12
    # full per-cell grouping
    by_component = {num: ([], [], []) for num in range(1, 12)}
    for record in report.records:
        by_component[record.component][record.codim].append(record.cell)
    for num, groups in by_component.items():
        expected = fixtures.COMPONENT_CELLS[num]
        for c in range(3):
            assert set(groups[c]) == set(expected[c]), (
                "component %d codim %d cells differ" % (num, c)
            )


def check_property_suites(resamples=10, chain_points=50, seed=777, samples=8, graph_seed=42):
    """Point independence, chain verification, and the counting remarks."""
    rng = random.Random(seed)
    # point independence of the classification: every cell keeps its
    # label at `resamples` fresh interior points (zero m included once)
    for record in components.euler_report(samples, graph_seed).records:
        cell = deodhar.cell_by_display(record.cell)
        fam = cell.family
        done = 0
        attempts = 0
        while done < resamples:
            attempts += 1
            assert attempts <= 20 * resamples, "resample budget exhausted"
            t = tuple(s * deodhar.sample_magnitude(rng) for s in cell.h)
            if fam.K and done == 0 and attempts == 1:
                m = tuple(Fraction(0) for _ in fam.K)
            else:
                m = tuple(
                    rng.choice((1, -1)) * deodhar.sample_magnitude(rng)
                    for _ in fam.K
                )
            point = deodhar.cell_point(cell, t, m)
            try:
                fac = chamber.alpha_factorize(point, WORD_I_TILDE)
            except chamber.NotFactorizable:
                continue
            signs = fixtures.string_of_signs(fac.signs())
            letter = next(
                L for L, group in fixtures.UPPER_COMPONENTS.items() if signs in group
            )
            assert fixtures.BIJECTION[letter] == record.component, (
                "cell %s reclassified to %s" % (record.cell, letter)
            )
            done += 1
    # Deodhar chain invariants
    for fam in deodhar.families():
        for _ in range(chain_points):
            cell, t, m = _random_family_point(fam, rng)
            point = deodhar.cell_point(cell, t, m)
            assert rep.is_unipotent_lower(point)
            assert deodhar.bruhat_position_plus(point) is W.w0
            assert deodhar.verify_cell_chain(cell, t, m)
    # counting remarks on the computed report
    report = components.euler_report(samples, graph_seed)
    pair_components = {frozenset((5, 6)), frozenset((7, 8)), frozenset((9, 10))}
    for fam in deodhar.families():
        if fam.codim != 2:
            continue
        comps = [r.component for r in report.records if r.family == fam.name]
        assert sorted(comps).count(11) == 2, "codim-2 family %s" % fam.name
        others = frozenset(c for c in comps if c != 11)
        assert others in pair_components, "codim-2 family %s pairs" % fam.name
    codim1 = [r for r in report.records if r.codim == 1]
    for comp in range(5, 11):
        for fam in deodhar.families():
            if fam.codim != 1:
                continue
            n = sum(
                1 for r in codim1 if r.family == fam.name and r.component == comp
            )
            assert n == 2, "component %d holds %d cells of %s" % (comp, n, fam.name)
    for fam in deodhar.families():
        if fam.codim != 1:
            continue
        n = sum(1 for r in codim1 if r.family == fam.name and r.component == 11)
        assert n == 4
    assert all(r.codim <= 2 for r in report.records)


def check_generator_fixture():
    """The committed Chevalley matrices equal the freshly built ones."""
    committed = json.loads(
        resources.files("g2cells.data").joinpath("chevalley_generators.json").read_text()
    )
    assert committed == rep.generator_fixture(), "generator fixture drift"


CHECKS = (
    (1, "distinguished subexpressions of 121212", check_distinguished_subexpressions),
    (2, "representation identities", check_representations),
    (3, "symbolic generalized minors", check_symbolic_minors),
    (4, "chamber ansatz consistency", check_chamber_consistency),
    (5, "component graph partition", check_component_graph),
    (6, "letter-to-component bijection", check_bijection),
    (7, "cell classification tables", check_classification),
    (8, "Euler characteristics", check_euler),
    (9, "property suites", check_property_suites),
)


def run_all(progress=None):
    """Run every acceptance criterion; returns a list of CheckResult."""
    results = []
    for number, name, fn in CHECKS:
        try:
            fn()
            results.append(CheckResult(number, name, True, ""))
        except Exception as exc:  # report, never swallow silently
            results.append(CheckResult(number, name, False, str(exc)))
        if progress is not None:
            progress(results[-1])
    return results
