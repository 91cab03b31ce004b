"""Deodhar cell parameterizations and Bruhat-position computations.

Each distinguished subexpression sigma of the word (1,2,1,2,1,2) gives
a family of points

    z_1 ... z_6,   z_j = y_{i_j}(t_j)            for j in I(sigma),
                   z_j = s_{i_j}dot              for j in J(sigma),
                   z_j = x_{i_j}(m_j) s_{i_j}dot^-1   for j in K(sigma),

with t_j nonzero and m_j arbitrary.  Sign choices h on the I positions
select the connected components; the display string convention is '+'
or '-' at I positions, '0' at J positions and '*' at K positions, so
the number of zeros is the codimension.

Flags are always carried as coset representative matrices, and relative
positions reduce to rank profiles of exact matrices: the permutation of
g in B- w B+ is read off top-left ranks, the one in B+ w B+ off
bottom-left ranks (row index reversed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg, rep
from .weyl import W, WORD_I, enumerate_distinguished

__all__ = [
    "CellFamily",
    "CellId",
    "families",
    "family_by_name",
    "cell_by_display",
    "cell_point",
    "bruhat_position_mixed",
    "bruhat_position_plus",
    "verify_cell_chain",
    "position_chain",
    "sample_magnitude",
    "PRIMES",
]

#: primes up to 97, the magnitude pool for parameter sampling
PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
          53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def sample_magnitude(rng):
    """A positive rational with prime numerator and denominator."""
    return Fraction(rng.choice(PRIMES), rng.choice(PRIMES))


@dataclass(frozen=True)
class CellFamily:
    """A Deodhar family: a distinguished subexpression with its geometry."""

    subexpression: object

    @property
    def name(self):
        return self.subexpression.name

    @property
    def word(self):
        return self.subexpression.word

    @property
    def I(self):
        return self.subexpression.I

    @property
    def J(self):
        return self.subexpression.J

    @property
    def K(self):
        return self.subexpression.K

    @property
    def sigma(self):
        return self.subexpression.sigma

    @property
    def dim(self):
        return len(self.I) + len(self.K)

    @property
    def codim(self):
        return len(self.J)

    def param_signature(self):
        """Parameter names in position order, e.g. ('t1','t2','m1','m2')."""
        names = []
        ti = mi = 0
        for j in range(1, len(self.word) + 1):
            if j in self.I:
                ti += 1
                names.append("t%d" % ti)
            elif j in self.K:
                mi += 1
                names.append("m%d" % mi)
        return tuple(names)

    def __repr__(self):
        return "CellFamily(%s)" % self.name


@lru_cache(maxsize=None)
def families():
    """The eight families over the word (1,2,1,2,1,2)."""
    subs = enumerate_distinguished(WORD_I)
    fams = tuple(CellFamily(s) for s in subs)
    assert {f.codim for f in fams} <= {0, 1, 2}
    assert all(f.dim + f.codim == 6 for f in fams)
    return fams


def family_by_name(name):
    for fam in families():
        if fam.name == name:
            return fam
    raise KeyError("unknown cell family %r" % (name,))


@dataclass(frozen=True)
class CellId:
    """A cell D_sigma(h): a family plus a sign per R*-coordinate."""

    family: CellFamily
    h: tuple  # one +1/-1 per I position, in increasing position order

    def __post_init__(self):
        if len(self.h) != len(self.family.I):
            raise ValueError("sign vector length must match |I|")
        if any(s not in (1, -1) for s in self.h):
            raise ValueError("signs must be +1 or -1")

    def display(self):
        """'+'/'-' at I positions, '0' at J positions, '*' at K positions."""
        chars = []
        signs = iter(self.h)
        for j in range(1, len(self.family.word) + 1):
            if j in self.family.I:
                chars.append("+" if next(signs) > 0 else "-")
            elif j in self.family.J:
                chars.append("0")
            else:
                chars.append("*")
        return "".join(chars)

    @property
    def codim(self):
        return self.family.codim

    def __repr__(self):
        return "CellId(%s)" % self.display()


def cell_by_display(display):
    """Recover (family, h) from a display string such as '0+*0-*'."""
    if len(display) != 6:
        raise ValueError("display strings have six symbols")
    I = tuple(j for j, ch in enumerate(display, start=1) if ch in "+-")
    J = tuple(j for j, ch in enumerate(display, start=1) if ch == "0")
    K = tuple(j for j, ch in enumerate(display, start=1) if ch == "*")
    for fam in families():
        if fam.I == I and fam.J == J and fam.K == K:
            h = tuple(1 if display[j - 1] == "+" else -1 for j in I)
            return CellId(fam, h)
    raise KeyError("no cell family matches %r" % (display,))


def cell_point(cell, t, m):
    """The product z_1 ... z_6 at the given coordinates.

    ``t`` lists the R*-coordinates (I positions, in order), each with
    the sign required by the cell; ``m`` lists the R-coordinates.
    """
    fam = cell.family
    t = tuple(Fraction(v) for v in t)
    m = tuple(Fraction(v) for v in m)
    if len(t) != len(fam.I) or len(m) != len(fam.K):
        raise ValueError("expected %d t's and %d m's" % (len(fam.I), len(fam.K)))
    for val, sign in zip(t, cell.h):
        if val == 0:
            raise ValueError("t coordinates must be nonzero")
        if (val > 0) != (sign > 0):
            raise ValueError("t coordinate %s violates the sign choice" % val)
    factors = []
    ti = iter(t)
    mi = iter(m)
    for j, letter in enumerate(fam.word, start=1):
        if j in fam.I:
            factors.append(rep.y(letter, next(ti)))
        elif j in fam.J:
            factors.append(rep.sdot(letter))
        else:
            factors.append(rep.x(letter, next(mi)) * rep.sdot_inverse(letter))
    return rep.group_product(factors)


def _prefix_points(cell, t, m):
    fam = cell.family
    t = tuple(Fraction(v) for v in t)
    m = tuple(Fraction(v) for v in m)
    for val, sign in zip(t, cell.h):
        if val == 0 or (val > 0) != (sign > 0):
            raise ValueError("t coordinates must be nonzero with the cell's signs")
    factors = []
    ti = iter(t)
    mi = iter(m)
    for j, letter in enumerate(fam.word, start=1):
        if j in fam.I:
            factors.append(rep.y(letter, next(ti)))
        elif j in fam.J:
            factors.append(rep.sdot(letter))
        else:
            factors.append(rep.x(letter, next(mi)) * rep.sdot_inverse(letter))
    prefixes = []
    g = rep.group_identity()
    for z in factors:
        g = g * z
        prefixes.append(g)
    return prefixes


@lru_cache(maxsize=None)
def _weight_permutations():
    """For each Weyl element, its permutation of the V7 basis lines."""
    v7 = rep.representation("V7")
    table = {}
    for w in W.elements:
        images = tuple(w.act(mu) for mu in v7.weights)
        perm = tuple(v7.weights.index(img) for img in images)
        table[perm] = w
    return table


def _element_from_matrix_permutation(p):
    # p[j] = i means the matrix sends basis line j to basis line i
    w = _weight_permutations().get(tuple(p))
    if w is None:
        raise ArithmeticError(
            "rank profile permutation %r is not induced by a Weyl element" % (p,)
        )
    return w


def bruhat_position_mixed(g):
    """The w with g in B- wdot B+, from the top-left rank profile."""
    return _element_from_matrix_permutation(
        linalg.bruhat_permutation_topleft(g.m7)
    )


def bruhat_position_plus(g):
    """The w with g in B+ wdot B+, from the bottom-left rank profile."""
    return _element_from_matrix_permutation(
        linalg.bruhat_permutation_bottomleft(g.m7)
    )


def position_chain(cell, t, m):
    """Relative positions of B- to the flags of the partial products.

    Returns the Weyl elements w with B- -> B_j in position w for
    j = 0..6; membership of the point in the cell is equivalent to this
    chain equalling (w0 sigma_j).
    """
    chain = [W.w0]
    for g in _prefix_points(cell, t, m):
        chain.append(W.w0 * bruhat_position_mixed(g))
    return tuple(chain)


def verify_cell_chain(cell, t, m):
    """True iff every partial product sits in B- sigma_j B+."""
    sigma = cell.family.sigma
    try:
        for j, g in enumerate(_prefix_points(cell, t, m), start=1):
            if bruhat_position_mixed(g) != sigma[j]:
                return False
    except ArithmeticError:
        return False
    return True
