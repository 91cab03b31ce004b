"""The Chamber Ansatz factorization maps between opposed unipotent cells.

``epsilon_factorize`` takes x in U+ meeting the opposite big cell and
produces the y in U- representing the same flag, factored along a
reduced word of w0; ``alpha_factorize`` is the inverse direction.  Both
express the parameters as monomials in generalized minors:

    a_m = prod_{j != j_m} Delta[u_m omega_j]^{-A(j, j_m)}
          / ( Delta[u_m omega_{j_m}] * Delta[u_{m-1} omega_{j_m}] )

where u_m = s_{j_1}...s_{j_m} is the m-th prefix of the word, Delta is
the highest-coefficient minor of x for epsilon, and the lowest
coefficient minor Delta_- at the negated chamber weights -u_m omega_j
of y for alpha.  The closed forms below are the same maps written out
for the sextuple words of w0; they are cross-checked against the minor
formulas at random rational points, so any drift in conventions fails
loudly.

A vanishing minor means the input is outside the open chart for the
chosen word; that is a recoverable condition (``NotFactorizable``), not
a failure, and callers are expected to resample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import rep
from .minors import highest_row, lowest_row, pair_row_with_weight
from .weyl import W, Weight

__all__ = [
    "NotFactorizable",
    "Factorization",
    "epsilon_factorize",
    "alpha_factorize",
    "flag_equal_opposed",
    "closed_form_epsilon",
    "closed_form_alpha",
    "CLOSED_FORM_FAMILIES",
]

_OMEGA = {1: Weight(1, 0), 2: Weight(0, 1)}
_CARTAN = {(1, 1): 2, (1, 2): -3, (2, 1): -1, (2, 2): 2}


class NotFactorizable(Exception):
    """The point lies outside the open chart of the requested word."""


@dataclass(frozen=True)
class Factorization:
    """A factorization g = prod_k x_{j_k}(a_k) or prod_k y_{j_k}(a_k)."""

    word: tuple
    params: tuple
    kind: str  # "upper" or "lower"

    def __post_init__(self):
        if self.kind not in ("upper", "lower"):
            raise ValueError("kind must be 'upper' or 'lower'")
        if any(p == 0 for p in self.params):
            raise NotFactorizable("factorization parameters must be nonzero")

    def product(self):
        gen = rep.x if self.kind == "upper" else rep.y
        return rep.group_product(
            gen(i, t) for i, t in zip(self.word, self.params)
        )

    def signs(self):
        return tuple(1 if p > 0 else -1 for p in self.params)


@lru_cache(maxsize=None)
def _prefixes(word):
    """Prefix products u_0 = e, u_m = s_{j_1}..s_{j_m}; word must be reduced for w0."""
    chain = [W.identity]
    for i in word:
        nxt = chain[-1] * W.s(i)
        if nxt.length != chain[-1].length + 1:
            raise ValueError("word %r is not reduced" % (word,))
        chain.append(nxt)
    if chain[-1] != W.w0:
        raise ValueError("word %r is not a reduced word of w0" % (word,))
    return tuple(chain)


@lru_cache(maxsize=None)
def _ansatz_weights(word, negate):
    """Per position m: (numerator weight+exponent, two denominator weights).

    Weights are u_m omega_j, negated for the alpha direction.
    """
    prefixes = _prefixes(word)
    out = []
    for m in range(1, len(word) + 1):
        jm = word[m - 1]
        jbar = 2 if jm == 1 else 1
        exp = -_CARTAN[(jbar, jm)]
        num = prefixes[m].act(_OMEGA[jbar])
        den1 = prefixes[m].act(_OMEGA[jm])
        den2 = prefixes[m - 1].act(_OMEGA[jm])
        if negate:
            num, den1, den2 = -num, -den1, -den2
        out.append((jbar, num, exp, jm, den1, den2))
    return tuple(out)


def _factor_params(g, word, row_fn, negate):
    # one covector fold per level; each minor is then a single contraction
    rows = {1: row_fn(g, 1), 2: row_fn(g, 2)}
    cache = {}

    def value(level, mu):
        key = (level, mu.n1, mu.n2)
        if key not in cache:
            cache[key] = pair_row_with_weight(rows[level], level, mu)
        return cache[key]

    params = []
    for jbar, num_w, exp, jm, den1_w, den2_w in _ansatz_weights(word, negate):
        num = value(jbar, num_w)
        den1 = value(jm, den1_w)
        den2 = value(jm, den2_w)
        if num == 0 or den1 == 0 or den2 == 0:
            raise NotFactorizable("a required minor vanishes")
        params.append(num**exp / (den1 * den2))
    return tuple(params)


def epsilon_factorize(x, word):
    """Factor the flag of x in U+ as a product of y's along the word."""
    word = tuple(word)
    if not rep.is_unipotent_upper(x):
        raise ValueError("epsilon_factorize expects a unipotent upper input")
    params = _factor_params(x, word, highest_row, negate=False)
    return Factorization(word, params, "lower")


def alpha_factorize(y, word):
    """Factor the flag of y in U- as a product of x's along the word."""
    word = tuple(word)
    if not rep.is_unipotent_lower(y):
        raise ValueError("alpha_factorize expects a unipotent lower input")
    params = _factor_params(y, word, lowest_row, negate=True)
    return Factorization(word, params, "upper")


def flag_equal_opposed(x, y):
    """True iff x . [B-] and y . [B+] are the same flag.

    [B-] = w0dot . [B+] and the stabilizer of [B+] is B+, so the test is
    that y^-1 x w0dot is upper triangular.
    """
    if not rep.is_unipotent_upper(x):
        raise ValueError("first argument must be unipotent upper")
    if not rep.is_unipotent_lower(y):
        raise ValueError("second argument must be unipotent lower")
    g = y.inverse() * x * rep.wdot(W.w0)
    return rep.is_upper(g)


# ---------------------------------------------------------------------------
# closed forms for the two sextuple words
# ---------------------------------------------------------------------------


def _nonzero(value, what):
    if value == 0:
        raise NotFactorizable("%s vanishes" % what)
    return value


def closed_form_epsilon(params):
    """The six lower parameters of the flag of x_2(a)x_1(b)...x_1(f).

    Closed form of ``epsilon_factorize`` on the word (2,1,2,1,2,1).
    """
    a, b, c, d, e, f = (Fraction(p) for p in params)
    u = (
        e**2 * d**3 * c + e**2 * d**3 * a + 3 * e**2 * a * b * d**2
        + 3 * e**2 * a * b**2 * d + e**2 * a * b**3 + 3 * e * a * b**2 * c * d
        + 2 * e * a * b**3 * c + a * b**3 * c**2
    )
    d1 = _nonzero(e + c + a, "e+c+a")
    d2 = _nonzero(e * d + e * b + b * c, "ed+eb+bc")
    du = _nonzero(u, "the auxiliary polynomial")
    for name, val in (("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f)):
        _nonzero(val, name)
    return (
        1 / d1,
        d1 / d2,
        d2**3 / (du * d1),
        du / (b * c * d**2 * e * d2),
        e**2 * d**3 * c / (a * du),
        a * b / (d * e * f),
    )


def _alpha_x21x12(t, m):
    t1, t2 = t
    m1, m2 = m
    p1 = _nonzero(t1 * m2 + m1, "t1*m2+m1")
    p2 = _nonzero(-m2 * t2 + m1**3, "m1^3-m2*t2")
    p3 = _nonzero(t1 * m1**2 + t2, "t1*m1^2+t2")
    _nonzero(m2, "m2"), _nonzero(t1, "t1"), _nonzero(t2, "t2")
    return (
        -1 / m2,
        m2 / p1,
        p1**3 / (m2 * p2),
        p2 / (p1 * p3),
        -(p3**3) / (p2 * t2**2),
        t2 / (p3 * t1),
    )


def _alpha_12x21x(t, m):
    t1, t2 = t
    m1, m2 = m
    p1 = _nonzero(3 * t1 * m2 + m1, "3*t1*m2+m1")
    p2 = _nonzero(2 * t1 * m2 + m1, "2*t1*m2+m1")
    _nonzero(t2, "t2"), _nonzero(m2, "m2"), _nonzero(t1, "t1")
    return (
        1 / t2,
        -1 / m2,
        m2**3 / p1,
        p1 / (m2 * p2),
        p2**3 / (p1 * t1**3),
        -t1 / p2,
    )


def _alpha_1x12x2(t, m):
    t1, t2 = t
    m1, m2 = m
    p1 = _nonzero(m1 * m2 + t2, "m1*m2+t2")
    p2 = _nonzero(t1 * m2**2 - t2**3, "t1*m2^2-t2^3")
    p3 = _nonzero(t1 * m2 + m1 * t2**2, "t1*m2+m1*t2^2")
    _nonzero(m2, "m2"), _nonzero(t1, "t1"), _nonzero(t2, "t2")
    return (
        -1 / m2,
        -m2 / p1,
        -(p1**3) / (m2 * p2),
        p2 / (p1 * p3),
        p3**3 / (p2 * t1 * t2**3),
        t2**2 / p3,
    )


def _alpha_xx1x1x(t, m):
    t1, t2, t3, t4 = t
    (m1,) = m
    p1 = _nonzero(t2 + t4, "t2+t4")
    p2 = _nonzero(t1 * t2 - m1 * t4 + t4 * t1, "t1*t2-m1*t4+t4*t1")
    p3 = _nonzero(-t2 * t3 + t4 * m1**3 * t2 - t4 * t3, "t4*m1^3*t2-(t2+t4)*t3")
    p4 = _nonzero(t1 * t2 * m1**2 - t3, "t1*t2*m1^2-t3")
    _nonzero(t1, "t1"), _nonzero(t2, "t2"), _nonzero(t3, "t3"), _nonzero(t4, "t4")
    return (
        1 / p1,
        p1 / p2,
        -(p2**3) / (p1 * t4 * p3),
        -p3 / (p4 * p2),
        p4**3 * t4 / (p3 * t2 * t3**2),
        -t3 / (p4 * t1),
    )


def _alpha_1x1xxx(t, m):
    t1, t2, t3, t4 = t
    (m1,) = m
    p1 = _nonzero(t2 + t4, "t2+t4")
    p2 = _nonzero(m1 * t2 + m1 * t4 - t4 * t3, "m1*(t2+t4)-t4*t3")
    p3 = _nonzero(
        t1 * t2**2 + 2 * t1 * t2 * t4 + t4**2 * t1 + t2 * t3**3 * t4**2,
        "t1*(t2+t4)^2+t2*t3^3*t4^2",
    )
    p4 = _nonzero(t1 * t2 + t4 * t1 + t2 * t3**2 * t4 * m1, "t1*(t2+t4)+t2*t3^2*t4*m1")
    _nonzero(t1, "t1"), _nonzero(t2, "t2"), _nonzero(t3, "t3"), _nonzero(t4, "t4")
    return (
        1 / p1,
        -p1 / p2,
        -(p2**3) / (p1 * p3),
        p3 / (p2 * p4),
        -(p4**3) / (p3 * t1 * t2**2 * t3**3 * t4),
        t2 * t3**2 * t4 / p4,
    )


def _alpha_xxx2x2(t, m):
    t1, t2, t3, t4 = t
    (m1,) = m
    p1 = _nonzero(m1 - t2, "m1-t2")
    p2 = _nonzero(t1 * m1 + m1 * t3 - t1 * t2 - t4, "(t1+t3)*m1-t1*t2-t4")
    p3 = _nonzero(
        t2 * t3**3 * m1**2 - 3 * t2 * t3**2 * t4 * m1 + 3 * t2 * t3 * t4**2 - t4**3,
        "t2*t3^3*m1^2-3*t2*t3^2*t4*m1+3*t2*t3*t4^2-t4^3",
    )
    p4 = _nonzero(
        t1 * t2 * t3**2 * m1 - 2 * t1 * t2 * t3 * t4 + t4**2 * t1 + t3 * t4**2,
        "t1*t2*t3^2*m1-2*t1*t2*t3*t4+t4^2*t1+t3*t4^2",
    )
    _nonzero(t1, "t1"), _nonzero(t2, "t2"), _nonzero(t3, "t3"), _nonzero(t4, "t4")
    return (
        -1 / p1,
        p1 / p2,
        p2**3 / (p1 * p3),
        p3 / (p2 * p4),
        -(p4**3) / (p3 * t2 * t3**3 * t4**3),
        t3 * t4**2 / (p4 * t1),
    )


def _alpha_x2x2xx(t, m):
    t1, t2, t3, t4 = t
    (m1,) = m
    p1 = _nonzero(m1 - t4, "m1-t4")
    p2 = _nonzero(t1 * m1 - t2 - t4 * t1 - t4 * t3, "t1*m1-t2-t4*t1-t4*t3")
    p3 = _nonzero(
        t2**3 + 3 * t2**2 * t3 * t4 + 3 * t2 * t3**2 * t4**2 + t4**2 * m1 * t3**3,
        "t2^3+3*t2^2*t3*t4+3*t2*t3^2*t4^2+t4^2*m1*t3^3",
    )
    p4 = _nonzero(
        t1 * t2**2 + 2 * t1 * t2 * t3 * t4 + t4 * t3**2 * t1 * m1 - t2 * t3**2 * t4,
        "t1*t2^2+2*t1*t2*t3*t4+t4*t3^2*t1*m1-t2*t3^2*t4",
    )
    _nonzero(t1, "t1"), _nonzero(t2, "t2"), _nonzero(t3, "t3"), _nonzero(t4, "t4")
    return (
        -1 / p1,
        p1 / p2,
        -(p2**3) / (p1 * p3),
        -p3 / (p2 * p4),
        -(p4**3) / (p3 * t2**3 * t3**3 * t4),
        -t2 * t3**2 * t4 / (p4 * t1),
    )


#: closed alpha forms on the seven positive-codimension cell families,
#: each mapping (t params, m params) to the six upper parameters for
#: the word (2,1,2,1,2,1)
CLOSED_FORM_FAMILIES = {
    "x21x12": _alpha_x21x12,
    "12x21x": _alpha_12x21x,
    "1x12x2": _alpha_1x12x2,
    "xx1x1x": _alpha_xx1x1x,
    "1x1xxx": _alpha_1x1xxx,
    "xxx2x2": _alpha_xxx2x2,
    "x2x2xx": _alpha_x2x2xx,
}


def closed_form_alpha(family, t, m):
    """The six upper parameters of alpha on a named cell family.

    ``family`` may be a family object with a ``name`` or a name string;
    ``t`` and ``m`` list the R*-coordinates and R-coordinates in
    position order.
    """
    name = getattr(family, "name", family)
    try:
        fn = CLOSED_FORM_FAMILIES[name]
    except KeyError:
        raise KeyError("no closed alpha form for family %r" % (name,))
    return fn(tuple(Fraction(v) for v in t), tuple(Fraction(v) for v in m))
