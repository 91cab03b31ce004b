"""Exact matrix models of the group of type G2.

Two representations are carried everywhere:

* ``V7``, the 7-dimensional fundamental representation with highest
  weight omega1, built from explicit Chevalley generator matrices, and
* ``V14``, the adjoint representation with highest weight omega2,
  realized on a Chevalley basis of the 14-dimensional Lie algebra
  generated inside 7x7 matrices (one vector per root plus h1, h2).

Both bases are ordered by strictly decreasing weight height, so every
e_i is strictly upper triangular and every f_i strictly lower.  Basis
ties in V14 (the two height-1 roots, the zero space, and their mirrors)
are resolved symmetrically: position k and position 13-k carry opposite
weights.

One-parameter subgroups are exact truncated exponentials (the
generators are nilpotent), torus elements are diagonal in the weight
bases, and each group element remembers the generator word that
produced it, so that matrices can be regenerated and inverted exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .weyl import W, Weight

__all__ = [
    "Representation",
    "GroupElement",
    "build_representations",
    "x",
    "y",
    "sdot",
    "sdot_inverse",
    "coweight",
    "wdot",
    "group_identity",
    "group_product",
    "apply_to_vector",
    "is_upper",
    "is_lower",
    "is_unipotent_upper",
    "is_unipotent_lower",
    "generator_fixture",
]


def _unit(i, j, c=1, n=7):
    return tuple(
        tuple(Fraction(c) if (r, s) == (i, j) else Fraction(0) for s in range(n))
        for r in range(n)
    )


def _madd(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = linalg.mat_add(out, m)
    return out


#: V7 basis weights, strictly decreasing height: eps1, -eps3, -eps2, 0, eps2, eps3, -eps1
V7_WEIGHTS = (
    Weight(1, 0),
    Weight(-1, 1),
    Weight(2, -1),
    Weight(0, 0),
    Weight(-2, 1),
    Weight(1, -1),
    Weight(-1, 0),
)

# Chevalley generators of the 7-dimensional representation in the basis
# above, normalized so that the lattice spanned by the basis is stable
# under all divided powers e_i^k / k!, f_i^k / k!.
_E1_7 = _madd(_unit(0, 1), _unit(2, 3, 2), _unit(3, 4), _unit(5, 6))
_F1_7 = _madd(_unit(1, 0), _unit(3, 2), _unit(4, 3, 2), _unit(6, 5))
_E2_7 = _madd(_unit(1, 2), _unit(4, 5))
_F2_7 = _madd(_unit(2, 1), _unit(5, 4))

_ALPHA_W = {1: Weight(2, -1), 2: Weight(-3, 2)}


class Representation:
    """An exact matrix representation with a weight-ordered basis."""

    def __init__(self, label, weights, e, f):
        self.label = label
        self.dim = len(weights)
        self.weights = tuple(weights)
        self.e = dict(e)
        self.f = dict(f)
        self.h = {i: linalg.commutator(self.e[i], self.f[i]) for i in (1, 2)}
        # truncated exponential tables: powers E^k / k! until zero
        self._exp_tables = {}
        self.nilpotency = {}
        for kind, mats in (("x", self.e), ("y", self.f)):
            for i in (1, 2):
                table = [linalg.identity(self.dim)]
                k = 0
                power = linalg.identity(self.dim)
                fact = 1
                while True:
                    k += 1
                    power = linalg.mat_mul(power, mats[i])
                    if linalg.is_zero_matrix(power):
                        break
                    fact *= k
                    table.append(linalg.mat_scale(power, Fraction(1, fact)))
                self._exp_tables[(kind, i)] = table
                self.nilpotency[(kind, i)] = k
        # sparse views of the positive powers, for fast per-parameter assembly
        self._sparse_terms = {}
        for key, table in self._exp_tables.items():
            self._sparse_terms[key] = tuple(
                tuple(
                    (r, c, term[r][c])
                    for r in range(self.dim)
                    for c in range(self.dim)
                    if term[r][c]
                )
                for term in table[1:]
            )

    def one_parameter_rows(self, kind, i, t):
        """Sparse rows of exp(t e_i) / exp(t f_i): row -> ((col, value), ...)."""
        extra = {}
        tk = 1
        for entries in self._sparse_terms[(kind, i)]:
            tk = tk * t
            for r, c, v in entries:
                extra.setdefault(r, []).append((c, v * tk))
        rows = []
        one = Fraction(1)
        for r in range(self.dim):
            rows.append(tuple([(r, one)] + extra.get(r, [])))
        return tuple(rows)

    def one_parameter(self, kind, i, t):
        """exp(t * e_i) for kind 'x', exp(t * f_i) for kind 'y'."""
        rows = self.one_parameter_rows(kind, i, t)
        zero = Fraction(0)
        out = []
        for r in range(self.dim):
            dense = [zero] * self.dim
            for c, v in rows[r]:
                dense[c] = dense[c] + v
            out.append(tuple(dense))
        return tuple(out)

    def coweight_matrix(self, i, t):
        if t == 0:
            raise ValueError("coweight argument must be nonzero")
        t = Fraction(t) if not isinstance(t, Fraction) else t
        vals = []
        for mu in self.weights:
            n = mu.pairing(i)
            vals.append(t**n if n >= 0 else (1 / t) ** (-n))
        return tuple(
            tuple(vals[r] if r == s else Fraction(0) for s in range(self.dim))
            for r in range(self.dim)
        )

    def divided_f_power(self, i, b):
        """f_i^b / b! as an exact matrix (zero beyond nilpotency)."""
        table = self._exp_tables[("y", i)]
        if b < len(table):
            return table[b]
        return tuple(
            tuple(Fraction(0) for _ in range(self.dim)) for _ in range(self.dim)
        )


def _coordinates_in_basis(M, basis, supports, h_pair):
    """Coefficients of M in a basis of matrices with disjoint root supports."""
    coeffs = []
    for k, B in enumerate(basis):
        if k == h_pair[0]:
            coeffs.append(M[0][0])
        elif k == h_pair[1]:
            coeffs.append(M[1][1] + M[0][0])
        else:
            (i, j) = supports[k]
            coeffs.append(M[i][j] / B[i][j])
    # exactness check: the basis must reproduce M on the nose
    recon = None
    for c, B in zip(coeffs, basis):
        term = linalg.mat_scale(B, c)
        recon = term if recon is None else linalg.mat_add(recon, term)
    if recon != tuple(tuple(row) for row in M):
        raise ArithmeticError("matrix is not in the span of the root basis")
    return coeffs


def _build_adjoint(v7):
    """Chevalley basis of the algebra inside gl7 and the adjoint matrices."""
    e1, e2, f1, f2 = v7.e[1], v7.e[2], v7.f[1], v7.f[2]
    h1, h2 = v7.h[1], v7.h[2]

    def nest(a, b, denom=1):
        c = linalg.commutator(a, b)
        return linalg.mat_scale(c, Fraction(1, denom))

    # positive root vectors, built by adding one simple root at a time;
    # the divisor p+1 keeps every vector primitive in the matrix lattice
    x_a1 = e1
    x_a2 = e2
    x_a12 = nest(e1, e2)          # alpha1 + alpha2
    x_2a12 = nest(e1, x_a12, 2)   # 2*alpha1 + alpha2
    x_3a12 = nest(e1, x_2a12, 3)  # 3*alpha1 + alpha2
    x_theta = nest(e2, x_3a12)    # 3*alpha1 + 2*alpha2 (highest root)
    y_a1 = f1
    y_a2 = f2
    y_a12 = nest(f1, f2)
    y_2a12 = nest(f1, y_a12, 2)
    y_3a12 = nest(f1, y_2a12, 3)
    y_theta = nest(f2, y_3a12)

    a1, a2 = _ALPHA_W[1], _ALPHA_W[2]
    theta = Weight(3 * a1.n1 + 2 * a2.n1, 3 * a1.n2 + 2 * a2.n2)
    pos = [
        (theta, x_theta),
        (Weight(3 * a1.n1 + a2.n1, 3 * a1.n2 + a2.n2), x_3a12),
        (Weight(2 * a1.n1 + a2.n1, 2 * a1.n2 + a2.n2), x_2a12),
        (a1 + a2, x_a12),
        (a1, x_a1),
        (a2, x_a2),
    ]
    zero = Weight(0, 0)
    neg = [(-wt, {id(x_theta): y_theta,
                  id(x_3a12): y_3a12,
                  id(x_2a12): y_2a12,
                  id(x_a12): y_a12,
                  id(x_a1): y_a1,
                  id(x_a2): y_a2}[id(mat)]) for wt, mat in pos]
    # mirror-symmetric order: position k and 13-k carry opposite weights
    basis = pos + [(zero, h1), (zero, h2)] + list(reversed(neg))
    weights = tuple(wt for wt, _ in basis)
    mats = [mat for _, mat in basis]

    supports = {}
    for k, m in enumerate(mats):
        if k in (6, 7):
            continue
        supports[k] = next(
            (i, j) for i in range(7) for j in range(7) if m[i][j] != 0
        )

    def ad_matrix(g):
        cols = []
        for m in mats:
            cols.append(_coordinates_in_basis(linalg.commutator(g, m), mats, supports, (6, 7)))
        n = len(mats)
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    e = {1: ad_matrix(e1), 2: ad_matrix(e2)}
    f = {1: ad_matrix(f1), 2: ad_matrix(f2)}
    for mat in list(e.values()) + list(f.values()):
        for row in mat:
            for entry in row:
                if entry.denominator != 1:
                    raise ArithmeticError("adjoint matrices must be integral")
    return Representation("V14", weights, e, f)


@lru_cache(maxsize=None)
def build_representations():
    """The pair (V7, V14), built once and shared read-only."""
    v7 = Representation("V7", V7_WEIGHTS, {1: _E1_7, 2: _E2_7}, {1: _F1_7, 2: _F2_7})
    v14 = _build_adjoint(v7)
    return v7, v14


def representation(label):
    v7, v14 = build_representations()
    return v7 if label == "V7" else v14


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

_ATOM_CACHE = {}


def _atom_matrix(atom, label):
    key = None
    kind = atom[0]
    try:
        key = (atom, label)
        hit = _ATOM_CACHE.get(key)
        if hit is not None:
            return hit
    except TypeError:
        key = None
    rep = representation(label)
    if kind in ("x", "y"):
        _, i, t = atom
        mat = rep.one_parameter(kind, i, t)
    elif kind == "coweight":
        _, i, t = atom
        mat = rep.coweight_matrix(i, t)
    elif kind == "sdot":
        _, i = atom
        mat = linalg.mat_mul(
            linalg.mat_mul(
                rep.one_parameter("x", i, Fraction(1)),
                rep.one_parameter("y", i, Fraction(-1)),
            ),
            rep.one_parameter("x", i, Fraction(1)),
        )
    elif kind == "sdot_inv":
        _, i = atom
        mat = linalg.mat_mul(
            linalg.mat_mul(
                rep.one_parameter("x", i, Fraction(-1)),
                rep.one_parameter("y", i, Fraction(1)),
            ),
            rep.one_parameter("x", i, Fraction(-1)),
        )
    else:
        raise ValueError("unknown atom %r" % (atom,))
    if key is not None:
        _ATOM_CACHE[key] = mat
    return mat


def _fold_atoms(atoms, label, dim):
    """Product of atom matrices, multiplying sparsely from the left."""
    out = linalg.identity(dim)
    for atom in atoms:
        rows = _atom_rows(atom, label)
        nxt = []
        for i in range(dim):
            acc = [0] * dim
            row = out[i]
            for t in range(dim):
                a = row[t]
                if a:
                    for j, v in rows[t]:
                        acc[j] = acc[j] + a * v
            nxt.append(tuple(acc))
        out = tuple(nxt)
    return out


def _invert_atom(atom):
    kind = atom[0]
    if kind == "x":
        return ("x", atom[1], -atom[2])
    if kind == "y":
        return ("y", atom[1], -atom[2])
    if kind == "sdot":
        return ("sdot_inv", atom[1])
    if kind == "sdot_inv":
        return ("sdot", atom[1])
    if kind == "coweight":
        t = atom[2]
        return ("coweight", atom[1], Fraction(1) / Fraction(t))
    raise ValueError("unknown atom %r" % (atom,))


class GroupElement:
    """A group element carried in both representations at once.

    ``provenance`` is the word of generator atoms that produced the
    element; the 7x7 matrix is computed eagerly, the 14x14 one lazily.
    """

    __slots__ = ("provenance", "_m7", "_m14")

    def __init__(self, provenance, m7=None):
        self.provenance = tuple(provenance)
        if m7 is None:
            m7 = _fold_atoms(self.provenance, "V7", 7)
        self._m7 = m7
        self._m14 = None

    @property
    def m7(self):
        return self._m7

    @property
    def m14(self):
        if self._m14 is None:
            self._m14 = _fold_atoms(self.provenance, "V14", 14)
        return self._m14

    def matrix(self, label):
        return self.m7 if label == "V7" else self.m14

    def regenerate(self):
        """Rebuild both matrices from provenance (used as an exactness check)."""
        fresh = GroupElement(self.provenance)
        return fresh.m7, fresh.m14

    def __mul__(self, other):
        out = GroupElement.__new__(GroupElement)
        out.provenance = self.provenance + other.provenance
        out._m7 = linalg.mat_mul(self._m7, other._m7)
        out._m14 = None
        if self._m14 is not None and other._m14 is not None:
            out._m14 = linalg.mat_mul(self._m14, other._m14)
        return out

    def inverse(self):
        atoms = tuple(_invert_atom(a) for a in reversed(self.provenance))
        return GroupElement(atoms)

    def __eq__(self, other):
        # V7 is faithful for G2, so the 7x7 matrix identifies the element
        return isinstance(other, GroupElement) and self._m7 == other._m7

    def __hash__(self):
        return hash(self._m7)

    def __repr__(self):
        return "GroupElement(%s)" % (", ".join(map(_atom_repr, self.provenance)) or "1")


def _atom_repr(atom):
    if atom[0] in ("x", "y"):
        return "%s%d(%s)" % (atom[0], atom[1], atom[2])
    if atom[0] == "sdot":
        return "s%d." % atom[1]
    if atom[0] == "sdot_inv":
        return "s%d.^-1" % atom[1]
    return "%s%d(%s)" % (atom[0], atom[1], atom[2])


def group_identity():
    return GroupElement(())


def group_product(elements):
    out = group_identity()
    for g in elements:
        out = out * g
    return out


def x(i, t):
    """One-parameter subgroup exp(t e_i)."""
    return GroupElement((("x", i, _as_scalar(t)),))


def y(i, t):
    """One-parameter subgroup exp(t f_i)."""
    return GroupElement((("y", i, _as_scalar(t)),))


def _as_scalar(t):
    if isinstance(t, int):
        return Fraction(t)
    return t


def sdot(i):
    """The Weyl representative x_i(1) y_i(-1) x_i(1)."""
    return GroupElement((("sdot", i),))


def sdot_inverse(i):
    return GroupElement((("sdot_inv", i),))


def coweight(i, t):
    """The torus element with eigenvalue t^<alpha_i^vee, mu> on weight mu."""
    t = _as_scalar(t)
    if t == 0:
        raise ValueError("coweight argument must be nonzero")
    return GroupElement((("coweight", i, t),))


@lru_cache(maxsize=None)
def wdot(w):
    """Representative of w, the product of sdot along any reduced word."""
    atoms = tuple(("sdot", i) for i in w.word)
    return GroupElement(atoms)


_SPARSE_CACHE = {}


def _atom_rows(atom, label):
    """Nonzero entries of the atom matrix, grouped by row."""
    try:
        hit = _SPARSE_CACHE.get((atom, label))
    except TypeError:
        hit = None
    if hit is not None:
        return hit
    kind = atom[0]
    r = representation(label)
    if kind in ("x", "y"):
        rows = r.one_parameter_rows(kind, atom[1], atom[2])
    elif kind == "coweight":
        mat = r.coweight_matrix(atom[1], atom[2])
        rows = tuple(((k, mat[k][k]),) for k in range(r.dim))
    else:
        mat = _atom_matrix(atom, label)
        rows = tuple(
            tuple((j, v) for j, v in enumerate(row) if v)
            for row in mat
        )
    try:
        _SPARSE_CACHE[(atom, label)] = rows
    except TypeError:
        pass
    return rows


def apply_to_vector(g, label, vec):
    """g . vec computed through the provenance chain (no big products)."""
    for atom in reversed(g.provenance):
        rows = _atom_rows(atom, label)
        vec = [
            sum((v * vec[j] for j, v in row if vec[j]), start=0)
            for row in rows
        ]
    return tuple(vec)


def apply_covector(g, label, row_vec):
    """row_vec . g (a row vector) through the provenance chain."""
    n = len(row_vec)
    for atom in g.provenance:
        rows = _atom_rows(atom, label)
        out = [0] * n
        for i, u in enumerate(row_vec):
            if u:
                for j, v in rows[i]:
                    out[j] = out[j] + u * v
        row_vec = out
    return tuple(row_vec)


# ---------------------------------------------------------------------------
# triangularity predicates (checked on V7; V14 is consistent by construction)
# ---------------------------------------------------------------------------


def is_upper(g):
    m = g.m7
    return all(m[i][j] == 0 for i in range(7) for j in range(i))


def is_lower(g):
    m = g.m7
    return all(m[i][j] == 0 for i in range(7) for j in range(i + 1, 7))


def is_unipotent_upper(g):
    return is_upper(g) and all(g.m7[i][i] == 1 for i in range(7))


def is_unipotent_lower(g):
    return is_lower(g) and all(g.m7[i][i] == 1 for i in range(7))


def generator_fixture():
    """The six Chevalley matrices per representation, as integer lists."""
    out = {}
    for label in ("V7", "V14"):
        rep = representation(label)
        entry = {}
        for name, mat in (
            ("e1", rep.e[1]),
            ("e2", rep.e[2]),
            ("f1", rep.f[1]),
            ("f2", rep.f[2]),
            ("h1", rep.h[1]),
            ("h2", rep.h[2]),
        ):
            for row in mat:
                for v in row:
                    if Fraction(v).denominator != 1:
                        raise ArithmeticError("generator matrices must be integral")
            entry[name] = [[int(v) for v in row] for row in mat]
        out[label] = entry
    return out
