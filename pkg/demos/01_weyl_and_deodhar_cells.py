"""Walk through the combinatorial layer: the Weyl group of type G2,
distinguished subexpressions of the longest element, and the Deodhar
cell families they parameterize.

Run with:  python demos/01_weyl_and_deodhar_cells.py
"""

from fractions import Fraction

from g2cells import (
    W,
    WORD_I,
    WORD_I_TILDE,
    bruhat_position_plus,
    cell_point,
    enumerate_distinguished,
    families,
    is_unipotent_lower,
    position_chain,
    verify_cell_chain,
)
from g2cells.deodhar import CellId

# The Weyl group of type G2 is dihedral of order 12.  Its longest
# element has the two reduced words 121212 and 212121.
print("group order:", len(W.elements))
print("longest element:", W.w0, "of length", W.w0.length)
print("braid identity:", W.from_word(WORD_I) == W.from_word(WORD_I_TILDE))
print()

# Every point of the intersection of the two opposed big cells travels
# through a chain of intermediate flags; the chain is recorded by a
# distinguished subexpression for 1 of the chosen reduced word.
print("distinguished subexpressions of 121212:")
for sub in enumerate_distinguished(WORD_I):
    print(
        "  %-7s chain %-40s codim %d"
        % (sub.name, " ".join(sub.sigma_names()), sub.codim)
    )
print()

# Each subexpression yields an explicit product parameterization of the
# corresponding cell.  Free signs live at the skipped positions.
for fam in families():
    print("family %-7s parameters (%s)" % (fam.name, ", ".join(fam.param_signature())))
print()

# Evaluate one point of the codimension-2 family x21x12 and watch the
# chain of relative positions drop from w0 and climb back.
fam = next(f for f in families() if f.name == "x21x12")
cell = CellId(fam, (1, 1))
t, m = (Fraction(1), Fraction(2)), (Fraction(3), Fraction(5))
point = cell_point(cell, t, m)
print("cell", cell.display(), "point is unipotent lower:", is_unipotent_lower(point))
print("lies in the open big cell:", bruhat_position_plus(point) is W.w0)
print("relative position chain:")
for j, w in enumerate(position_chain(cell, t, m)):
    print("  step %d: %s" % (j, w))
print("chain matches the subexpression:", verify_cell_chain(cell, t, m))
