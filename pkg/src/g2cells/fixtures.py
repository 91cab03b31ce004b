"""Reference data for the component structure, used as regression fixtures.

Everything in this module is independently recomputed by the package;
acceptance means exact agreement with these tables.  Sign strings list
the six coordinate signs of a factorization cell; cell display strings
use '+'/'-' for free signs, '0' for forced reflection steps and '*' for
unconstrained coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import PolyRing

# ---------------------------------------------------------------------------
# the eight distinguished subexpressions of (1,2,1,2,1,2), with their chains
# ---------------------------------------------------------------------------

DISTINGUISHED_I = {
    "xxxxxx": ("e", "e", "e", "e", "e", "e", "e"),
    "1x1xxx": ("e", "s1", "s1", "e", "e", "e", "e"),
    "x2x2xx": ("e", "e", "s2", "s2", "e", "e", "e"),
    "xx1x1x": ("e", "e", "e", "s1", "s1", "e", "e"),
    "xxx2x2": ("e", "e", "e", "e", "s2", "s2", "e"),
    "1x12x2": ("e", "s1", "s1", "e", "s2", "s2", "e"),
    "12x21x": ("e", "s1", "s1*s2", "s1*s2", "s1", "e", "e"),
    "x21x12": ("e", "e", "s2", "s2*s1", "s2*s1", "s2", "e"),
}

# ---------------------------------------------------------------------------
# the twelve generalized minors of x_2(a) x_1(b) x_2(c) x_1(d) x_2(e) x_1(f)
# ---------------------------------------------------------------------------

MINOR_RING = PolyRing("abcdef")


def minor_polynomials():
    """Expected symbolic minors, keyed by the epsilon label of the weight."""
    a, b, c, d, e, f = MINOR_RING.gens()
    one = MINOR_RING.one()
    aux = (
        e**2 * d**3 * c + e**2 * d**3 * a + 3 * e**2 * a * b * d**2
        + 3 * e**2 * a * b**2 * d + e**2 * a * b**3 + 3 * e * a * b**2 * c * d
        + 2 * e * a * b**3 * c + a * b**3 * c**2
    )
    return {
        "e1": one,
        "-e3": f + d + b,
        "-e2": e * d + e * b + b * c,
        "e2": (
            f**2 * e * d + f**2 * e * b + f**2 * b * c
            + 2 * b * c * d * f + b * c * d**2
        ),
        "e3": b * c * d**2 * e,
        "-e1": b * c * d**2 * e * f,
        "e1-e3": one,
        "e1-e2": e + c + a,
        "e2-e3": (
            f**3 * e + f**3 * c + f**3 * a + 3 * f**2 * c * d + 3 * f**2 * a * d
            + 3 * f**2 * a * b + 3 * f * d**2 * c + 3 * f * d**2 * a
            + 6 * f * a * b * d + 3 * f * a * b**2 + d**3 * c + d**3 * a
            + 3 * a * b * d**2 + 3 * a * b**2 * d + a * b**3
        ),
        "e3-e2": aux,
        "e2-e1": (
            f**3 * e**2 * d**3 * c + f**3 * e**2 * d**3 * a
            + 3 * f**3 * e**2 * a * b * d**2 + 3 * f**3 * e**2 * a * b**2 * d
            + f**3 * e**2 * a * b**3 + 3 * f**3 * e * a * b**2 * c * d
            + 2 * f**3 * e * a * b**3 * c + f**3 * a * b**3 * c**2
            + 3 * f**2 * e * a * b**2 * c * d**2 + 3 * f**2 * e * a * b**3 * c * d
            + 3 * f**2 * a * b**3 * c**2 * d + 3 * a * b**3 * c**2 * d**2 * f
            + a * b**3 * c**2 * d**3
        ),
        "e3-e1": a * b**3 * c**2 * d**3 * e,
    }


# ---------------------------------------------------------------------------
# connected components of the two opposed big cells (128 sign cells)
# ---------------------------------------------------------------------------

#: component number -> (cells over the word 121212, cells over 212121)
FIGURE1 = {
    1: (("++++++",), ("++++++",)),
    2: (("------",), ("------",)),
    3: (("+-+-+-",), ("-+-+-+",)),
    4: (("-+-+-+",), ("+-+-+-",)),
    5: (
        ("++-+-+", "--++-+", "-+---+", "----++",
         "-+-++-", "---+--", "-++---", "+-----"),
        ("+-+-++", "+-++--", "+---+-", "++----",
         "-++-+-", "--+---", "---++-", "-----+"),
    ),
    6: (
        ("--+-+-", "++--+-", "+-+++-", "++++--",
         "+-+--+", "+++-++", "+--+++", "-+++++"),
        ("-+-+--", "-+--++", "-+++-+", "--++++",
         "+--+-+", "++-+++", "+++--+", "+++++-"),
    ),
    7: (
        ("+-+-++", "+-++--", "+---+-", "++----",
         "-++-+-", "--+---", "---++-", "-----+"),
        ("++-+-+", "--++-+", "-+---+", "----++",
         "-+-++-", "---+--", "-++---", "+-----"),
    ),
    8: (
        ("-+-+--", "-+--++", "-+++-+", "--++++",
         "+--+-+", "++-+++", "+++--+", "+++++-"),
        ("--+-+-", "++--+-", "+-+++-", "++++--",
         "+-+--+", "+++-++", "+--+++", "-+++++"),
    ),
    9: (
        ("-+-+++", "+--++-", "-++++-", "---+-+",
         "+-+---", "-++--+", "+----+", "+++-+-"),
        ("++++-+", "++-+--", "++--++", "+-++++",
         "----+-", "--+-++", "--++--", "-+----"),
    ),
    10: (
        ("++++-+", "++-+--", "++--++", "+-++++",
         "----+-", "--+-++", "--++--", "-+----"),
        ("-+-+++", "+--++-", "-++++-", "---+-+",
         "+-+---", "-++--+", "+----+", "+++-+-"),
    ),
    11: (
        ("---+++", "-++-++", "+---++", "+-++-+", "--+--+", "++---+",
         "+++---", "+--+--", "-+++--", "-+--+-", "++-++-", "--+++-"),
        ("+++---", "++-++-", "++---+", "+-++-+", "+--+--", "+---++",
         "---+++", "--+--+", "--+++-", "-+--+-", "-++-++", "-+++--"),
    ),
}

#: letter -> sign cells of the upper unipotent side (word 212121)
UPPER_COMPONENTS = {
    "A": ("++++++",),
    "B": ("------",),
    "C": ("-+-+-+",),
    "D": ("+-+-+-",),
    "E": ("+-+-++", "+-++--", "+---+-", "++----",
          "-++-+-", "--+---", "---++-", "-----+"),
    "F": ("-+-+--", "-+--++", "-+++-+", "--++++",
          "+--+-+", "++-+++", "+++--+", "+++++-"),
    "G": ("++-+-+", "--++-+", "-+---+", "----++",
          "-+-++-", "---+--", "-++---", "+-----"),
    "H": ("--+-+-", "++--+-", "+-+++-", "++++--",
          "+-+--+", "+++-++", "+--+++", "-+++++"),
    "I": ("++++-+", "++-+--", "++--++", "+-++++",
          "----+-", "--+-++", "--++--", "-+----"),
    "J": ("-+-+++", "+--++-", "-++++-", "---+-+",
          "+-+---", "-++--+", "+----+", "+++-+-"),
    "K": ("+++---", "++-++-", "++---+", "+-++-+", "+--+--", "+---++",
          "---+++", "--+--+", "--+++-", "-+--+-", "-++-++", "-+++--"),
}

#: letter components of the upper side against numbered components of the
#: flag-variety intersection
BIJECTION = {
    "A": 1, "B": 2, "C": 3, "D": 4, "E": 5, "F": 6,
    "G": 7, "H": 8, "I": 10, "J": 9, "K": 11,
}

# ---------------------------------------------------------------------------
# classification tables: one per positive-codimension family, rows
# (cell display, signs of the six upper parameters, letter)
# ---------------------------------------------------------------------------

CLASSIFICATION_TABLES = {
    "1x12x2": (
        ("0+*0+*", "---+++", "K"),
        ("0+*0-*", "---+-+", "J"),
        ("0-*0+*", "--+-++", "I"),
        ("0-*0-*", "--+--+", "K"),
    ),
    "xx1x1x": (
        ("++0+*+", "+-+++-", "H"),
        ("++0+*-", "--+++-", "K"),
        ("++0-*+", "+-++++", "I"),
        ("++0-*-", "--++++", "F"),
        ("+-0+*+", "+--+-+", "F"),
        ("+-0+*-", "---+-+", "J"),
        ("+-0-*+", "+--+--", "K"),
        ("+-0-*-", "---+--", "G"),
        ("-+0+*+", "+-+---", "J"),
        ("-+0+*-", "--+---", "E"),
        ("-+0-*+", "+-+--+", "H"),
        ("-+0-*-", "--+--+", "K"),
        ("--0+*+", "+---++", "K"),
        ("--0+*-", "----++", "G"),
        ("--0-*+", "+---+-", "E"),
        ("--0-*-", "----+-", "I"),
    ),
    "1x1xxx": (
        ("0+*+++", "+--+-+", "F"),
        ("0+*++-", "---+-+", "J"),
        ("0+*+-+", "+-+--+", "H"),
        ("0+*+--", "--+--+", "K"),
        ("0+*-++", "+-++-+", "K"),
        ("0+*-+-", "--++-+", "G"),
        ("0+*--+", "+----+", "J"),
        ("0+*---", "-----+", "E"),
        ("0-*+++", "+--+++", "H"),
        ("0-*++-", "---+++", "K"),
        ("0-*+-+", "+-+-++", "E"),
        ("0-*+--", "--+-++", "I"),
        ("0-*-++", "+-++++", "I"),
        ("0-*-+-", "--++++", "F"),
        ("0-*--+", "+---++", "K"),
        ("0-*---", "----++", "G"),
    ),
    "12x21x": (
        ("00+**+", "+-+++-", "H"),
        ("00+**-", "--+++-", "K"),
        ("00-**+", "+--+--", "K"),
        ("00-**-", "---+--", "G"),
    ),
    "xxx2x2": (
        ("+++0+*", "-+++-+", "F"),
        ("+++0-*", "-+++++", "H"),
        ("++-0+*", "--++--", "I"),
        ("++-0-*", "--+++-", "K"),
        ("+-+0+*", "-+---+", "G"),
        ("+-+0-*", "-+-+--", "F"),
        ("+--0+*", "---+++", "K"),
        ("+--0-*", "---+-+", "J"),
        ("-++0+*", "-++-++", "K"),
        ("-++0-*", "-++--+", "J"),
        ("-+-0+*", "--+-+-", "H"),
        ("-+-0-*", "--+---", "E"),
        ("--+0+*", "-+----", "I"),
        ("--+0-*", "-+--+-", "K"),
        ("---0+*", "-----+", "E"),
        ("---0-*", "---+--", "G"),
    ),
    "x2x2xx": (
        ("+0+*++", "--++--", "I"),
        ("+0+*+-", "-+-+--", "F"),
        ("+0+*-+", "-+++--", "K"),
        ("+0+*--", "---+--", "G"),
        ("+0-*++", "--++++", "F"),
        ("+0-*+-", "-+-+++", "J"),
        ("+0-*-+", "-+++++", "H"),
        ("+0-*--", "---+++", "K"),
        ("-0+*++", "--+-+-", "H"),
        ("-0+*+-", "-+--+-", "K"),
        ("-0+*-+", "-++-+-", "E"),
        ("-0+*--", "----+-", "I"),
        ("-0-*++", "--+--+", "K"),
        ("-0-*+-", "-+---+", "G"),
        ("-0-*-+", "-++--+", "J"),
        ("-0-*--", "-----+", "E"),
    ),
    "x21x12": (
        ("+00+**", "-+++-+", "F"),
        ("+00-**", "-+++--", "K"),
        ("-00+**", "---+++", "K"),
        ("-00-**", "---++-", "E"),
    ),
}

#: the order in which the seven family tables are conventionally listed
TABLE_ORDER = ("1x12x2", "xx1x1x", "1x1xxx", "12x21x", "xxx2x2", "x2x2xx", "x21x12")

# ---------------------------------------------------------------------------
# full cell decomposition of each connected component (140 cells)
# ---------------------------------------------------------------------------

#: component number -> (codim-0 cells, codim-1 cells, codim-2 cells).
#: Numbering follows the component figure above; the published cell-by-
#: component figure swaps the boxes of components 3 and 4 relative to it,
#: and the recomputation confirms the ordering used here.
COMPONENT_CELLS = {
    1: (("++++++",), (), ()),
    2: (("------",), (), ()),
    3: (("+-+-+-",), (), ()),
    4: (("-+-+-+",), (), ()),
    5: (
        ("++-+-+", "--++-+", "-+---+", "----++",
         "-+-++-", "---+--", "-++---", "+-----"),
        ("-+0+*-", "--0-*+", "0+*---", "0-*+-+",
         "-+-0-*", "---0+*", "-0+*-+", "-0-*--"),
        ("-00-**",),
    ),
    6: (
        ("--+-+-", "++--+-", "+-+++-", "++++--",
         "+-+--+", "+++-++", "+--+++", "-+++++"),
        ("++0-*-", "+-0+*+", "0+*+++", "0-*-+-",
         "+++0+*", "+-+0-*", "+0+*+-", "+0-*++"),
        ("+00+**",),
    ),
    7: (
        ("+-+-++", "+-++--", "+---+-", "++----",
         "-++-+-", "--+---", "---++-", "-----+"),
        ("+-0-*-", "--0+*-", "0+*-+-", "0-*---",
         "+-+0+*", "---0-*", "+0+*--", "-0-*+-"),
        ("00-**-",),
    ),
    8: (
        ("-+-+--", "-+--++", "-+++-+", "--++++",
         "+--+-+", "++-+++", "+++--+", "+++++-"),
        ("++0+*+", "-+0-*+", "0+*+-+", "0-*+++",
         "+++0-*", "-+-0+*", "+0-*-+", "-0+*++"),
        ("00+**+",),
    ),
    9: (
        ("-+-+++", "+--++-", "-++++-", "---+-+",
         "+-+---", "-++--+", "+----+", "+++-+-"),
        ("+-0+*-", "-+0+*+", "0+*++-", "0+*--+",
         "+--0-*", "-++0-*", "+0-*+-", "-0-*-+"),
        ("0+*0-*",),
    ),
    10: (
        ("++++-+", "++-+--", "++--++", "+-++++",
         "----+-", "--+-++", "--++--", "-+----"),
        ("++0-*+", "--0-*-", "0-*+--", "0-*-++",
         "++-0+*", "--+0+*", "+0+*++", "-0+*--"),
        ("0-*0+*",),
    ),
    11: (
        ("---+++", "-++-++", "+---++", "+-++-+", "--+--+", "++---+",
         "+++---", "+--+--", "-+++--", "-+--+-", "++-++-", "--+++-"),
        ("++0+*-", "+-0-*+", "-+0-*-", "--0+*+",
         "0+*+--", "0+*-++", "0-*++-", "0-*--+",
         "++-0-*", "+--0+*", "-++0+*", "--+0-*",
         "+0+*-+", "+0-*--", "-0+*+-", "-0-*++"),
        ("+00-**", "-00+**", "00+**-", "00-**+", "0+*0+*", "0-*0-*"),
    ),
}

#: component -> (codim-0 count, codim-1 count, codim-2 count, Euler characteristic)
EULER_TABLE = {
    1: (1, 0, 0, 1),
    2: (1, 0, 0, 1),
    3: (1, 0, 0, 1),
    4: (1, 0, 0, 1),
    5: (8, 8, 1, 1),
    6: (8, 8, 1, 1),
    7: (8, 8, 1, 1),
    8: (8, 8, 1, 1),
    9: (8, 8, 1, 1),
    10: (8, 8, 1, 1),
    11: (12, 16, 6, 2),
}

#: magnitudes of the test point used to separate the upper components
UPPER_TEST_MAGNITUDES = (1, 2, 3, 5, 7, 11)

#: magnitudes substituted into cell coordinates when classifying cells
CLASSIFY_T_MAGNITUDES = {2: (1, 2), 4: (1, 2, 3, 5)}
CLASSIFY_M_MAGNITUDES = {2: (3, 5), 1: (7,)}


def signs_of_string(s):
    return tuple(1 if ch == "+" else -1 for ch in s)


def string_of_signs(signs):
    return "".join("+" if v > 0 else "-" for v in signs)
