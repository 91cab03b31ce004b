"""Generalized minors labeled by chamber weights.

A chamber weight of level i is an extremal weight w*omega_i.  The minor
Delta^{w omega_i}(g) is the coefficient of the highest weight vector
v_{omega_i} in g . v_{w omega_i}, where v_{w omega_i} is built from the
highest weight vector by divided powers of the f_i along a reduced word
of w.  Delta_-^{w omega_i}(g) takes the coefficient of the lowest
weight vector v_{-omega_i} := v_{w0 omega_i} instead.

Extremal weight spaces are one dimensional, so in the weight-ordered
bases these coefficients are single coordinates.  Extremal vectors have
integer coordinates (divided powers clear all denominators) and depend
only on the weight, not on the reduced word used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import rep
from .scalars import PolyRing
from .weyl import W, Weight

__all__ = [
    "ChamberWeight",
    "ExtremalVector",
    "extremal_vector",
    "minor",
    "minor_lower",
    "minor_by_weight",
    "minor_lower_by_weight",
    "weight_to_chamber",
    "LEVEL1_LABELS",
    "LEVEL2_LABELS",
    "symbolic_minors",
]

_REP_OF_LEVEL = {1: "V7", 2: "V14"}


@dataclass(frozen=True)
class ChamberWeight:
    """A pair (w, i) naming the generalized minor Delta^{w omega_i}."""

    w: object
    level: int

    @property
    def weight(self):
        return self.w.act(Weight(1, 0) if self.level == 1 else Weight(0, 1))

    def label(self):
        return self.weight.eps_label()


@dataclass(frozen=True)
class ExtremalVector:
    rep: str
    coordinates: tuple
    weight: Weight


@lru_cache(maxsize=None)
def _orbit(level):
    """All weights w*omega_i with a minimal-length representative each."""
    omega = Weight(1, 0) if level == 1 else Weight(0, 1)
    reps = {}
    for w in sorted(W.elements, key=lambda el: (el.length, el.word)):
        mu = w.act(omega)
        if (mu.n1, mu.n2) not in reps:
            reps[(mu.n1, mu.n2)] = w
        else:
            # minimal-length coset representatives are unique
            u = reps[(mu.n1, mu.n2)]
            if w.length == u.length and w != u:
                raise AssertionError("tie among minimal-length representatives")
    return reps


def weight_to_chamber(mu):
    """The unique (w of minimal length, i) with w*omega_i = mu."""
    for level in (1, 2):
        w = _orbit(level).get((mu.n1, mu.n2))
        if w is not None:
            return ChamberWeight(w, level)
    raise ValueError("%r is not in the Weyl orbit of a fundamental weight" % (mu,))


@lru_cache(maxsize=None)
def _extremal_by_weight(level, n1, n2):
    """Integer coordinates of v_{w omega_i}, computed along the minimal word."""
    cw = weight_to_chamber(Weight(n1, n2))
    if cw.level != level:
        raise ValueError("weight %r is not of level %d" % ((n1, n2), level))
    return _extremal_along_word(level, cw.w.word)


def _extremal_along_word(level, word):
    """v of weight (s_{j1}...s_{jl}) omega for word (j1..jl).

    Divided powers are applied from the right end of the word inward:
    f_{jl}^{(<a_{jl}^vee, omega>)} first, so each step moves one more
    reflection from the right of the word onto the weight.
    """
    label = _REP_OF_LEVEL[level]
    r = rep.representation(label)
    omega = Weight(1, 0) if level == 1 else Weight(0, 1)
    vec = tuple(Fraction(1) if k == 0 else Fraction(0) for k in range(r.dim))
    mu = omega
    for j in reversed(word):
        b = mu.pairing(j)
        if b < 0:
            raise AssertionError("negative divided power along a reduced word")
        mat = r.divided_f_power(j, b)
        vec = tuple(
            sum(mat[i][k] * vec[k] for k in range(r.dim) if vec[k]) for i in range(r.dim)
        )
        mu = mu.reflect(j)
    for c in vec:
        if Fraction(c).denominator != 1:
            raise ArithmeticError("extremal vector has a non-integer coordinate")
    return vec


def extremal_vector(level, w):
    """The extremal weight vector of weight w*omega_level."""
    omega = Weight(1, 0) if level == 1 else Weight(0, 1)
    mu = w.act(omega)
    vec = _extremal_by_weight(level, mu.n1, mu.n2)
    return ExtremalVector(_REP_OF_LEVEL[level], vec, mu)


def _lowest_info(level):
    omega = Weight(1, 0) if level == 1 else Weight(0, 1)
    mu = -omega
    vec = _extremal_by_weight(level, mu.n1, mu.n2)
    dim = len(vec)
    nz = [k for k in range(dim) if vec[k] != 0]
    if nz != [dim - 1] or abs(vec[dim - 1]) != 1:
        raise AssertionError("lowest extremal vector is not +/- the last basis vector")
    return dim - 1, vec[dim - 1]


_LOWEST = {}


def highest_row(g, level):
    """The row functional v -> coefficient of v_omega in g.v, as a covector."""
    r = rep.representation(_REP_OF_LEVEL[level])
    unit = tuple(Fraction(1) if k == 0 else Fraction(0) for k in range(r.dim))
    return rep.apply_covector(g, _REP_OF_LEVEL[level], unit)


def lowest_row(g, level):
    """The row functional v -> coefficient of v_{-omega} in g.v."""
    if level not in _LOWEST:
        _LOWEST[level] = _lowest_info(level)
    idx, sign = _LOWEST[level]
    r = rep.representation(_REP_OF_LEVEL[level])
    unit = tuple(
        Fraction(1, sign) if k == idx else Fraction(0) for k in range(r.dim)
    )
    return rep.apply_covector(g, _REP_OF_LEVEL[level], unit)


def pair_row_with_weight(row, level, mu):
    """Contract a precomputed row functional with the extremal vector of mu."""
    vec = _extremal_by_weight(level, mu.n1, mu.n2)
    return sum((a * b for a, b in zip(row, vec) if a and b), start=0)


def minor_by_weight(g, level, mu):
    """Delta at the chamber weight mu of the given level."""
    vec = _extremal_by_weight(level, mu.n1, mu.n2)
    out = rep.apply_to_vector(g, _REP_OF_LEVEL[level], vec)
    return out[0]


def minor_lower_by_weight(g, level, mu):
    """Delta_- at the chamber weight mu of the given level."""
    if level not in _LOWEST:
        _LOWEST[level] = _lowest_info(level)
    idx, sign = _LOWEST[level]
    vec = _extremal_by_weight(level, mu.n1, mu.n2)
    out = rep.apply_to_vector(g, _REP_OF_LEVEL[level], vec)
    return out[idx] / sign if sign != 1 else out[idx]


def minor(g, cw):
    """Delta^{w omega_i}(g): coefficient of v_{omega_i} in g . v_{w omega_i}."""
    return minor_by_weight(g, cw.level, cw.weight)


def minor_lower(g, cw):
    """Delta_-^{w omega_i}(g): coefficient of v_{-omega_i} in g . v_{w omega_i}."""
    return minor_lower_by_weight(g, cw.level, cw.weight)


#: epsilon labels of the level-1 and level-2 chamber weights in display order
LEVEL1_LABELS = ("e1", "-e3", "-e2", "e2", "e3", "-e1")
LEVEL2_LABELS = ("e1-e3", "e1-e2", "e2-e3", "e3-e2", "e2-e1", "e3-e1")

_LABEL_TO_WEIGHT = {}


def weight_by_label(label):
    if not _LABEL_TO_WEIGHT:
        eps = {1: Weight(1, 0), 2: Weight(-2, 1), 3: Weight(1, -1)}
        for i in (1, 2, 3):
            _LABEL_TO_WEIGHT["e%d" % i] = eps[i]
            _LABEL_TO_WEIGHT["-e%d" % i] = -eps[i]
            for j in (1, 2, 3):
                if i != j:
                    _LABEL_TO_WEIGHT["e%d-e%d" % (i, j)] = eps[i] - eps[j]
    return _LABEL_TO_WEIGHT[label]


@lru_cache(maxsize=None)
def symbolic_minors():
    """All 12 minors of x_2(a) x_1(b) x_2(c) x_1(d) x_2(e) x_1(f).

    Returns an ordered dict label -> Poly over Q[a..f], with the level-1
    labels first.  This is the calibration table for all sign
    conventions in the package.
    """
    ring = PolyRing("abcdef")
    a, b, c, d, e, f = ring.gens()
    factors = (("x", 2, a), ("x", 1, b), ("x", 2, c), ("x", 1, d), ("x", 2, e), ("x", 1, f))
    g = rep.GroupElement(factors)
    out = {}
    for label in LEVEL1_LABELS:
        out[label] = minor_by_weight(g, 1, weight_by_label(label))
    for label in LEVEL2_LABELS:
        out[label] = minor_by_weight(g, 2, weight_by_label(label))
    return out
