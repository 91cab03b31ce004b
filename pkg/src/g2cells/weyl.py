"""Weyl group combinatorics for the rank-2 root system of type G2.

The group (dihedral of order 12) is realized by its faithful permutation
action on the six short roots, so equality and multiplication reduce to
permutation composition.  Reduced words, Bruhat order and distinguished
subexpressions are all precomputed by exhaustive search, which is exact
and instant at this size.

Weights are stored in fundamental-weight coordinates (n1, n2), i.e.
mu = n1*omega1 + n2*omega2, with the conventions

    omega1 = eps1,   omega2 = 2*eps1 + eps2 = eps1 - eps3,
    alpha1 = -eps2 (short),   alpha2 = eps2 - eps3 (long),
    eps1 + eps2 + eps3 = 0,

under which <alpha_i^vee, alpha_j> reproduces the Cartan matrix
[[2, -3], [-1, 2]] and <alpha_i^vee, omega_j> = delta_ij.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class CartanMatrix:
    """A rank-2 Cartan matrix, validated on construction."""

    entries: tuple

    def __post_init__(self):
        a = self.entries
        if len(a) != 2 or any(len(row) != 2 for row in a):
            raise ValueError("expected a 2x2 matrix")
        if a[0][0] != 2 or a[1][1] != 2:
            raise ValueError("diagonal entries must equal 2")
        if a[0][1] > 0 or a[1][0] > 0:
            raise ValueError("off-diagonal entries must be <= 0")
        if (a[0][1] == 0) != (a[1][0] == 0):
            raise ValueError("A_ij = 0 iff A_ji = 0")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]


G2_CARTAN = CartanMatrix(((2, -3), (-1, 2)))

# simple roots and fundamental weights in fundamental-weight coordinates
_ALPHA = {1: (2, -1), 2: (-3, 2)}
_OMEGA = {1: (1, 0), 2: (0, 1)}


@dataclass(frozen=True, order=True)
class Weight:
    """An integral weight n1*omega1 + n2*omega2."""

    n1: int
    n2: int

    def pairing(self, i):
        """<alpha_i^vee, self>."""
        return self.n1 if i == 1 else self.n2

    def reflect(self, i):
        c = self.pairing(i)
        a = _ALPHA[i]
        return Weight(self.n1 - c * a[0], self.n2 - c * a[1])

    def __add__(self, other):
        return Weight(self.n1 + other.n1, self.n2 + other.n2)

    def __sub__(self, other):
        return Weight(self.n1 - other.n1, self.n2 - other.n2)

    def __neg__(self):
        return Weight(-self.n1, -self.n2)

    def height(self):
        """Coefficient sum in the simple-root basis (weight = root lattice here)."""
        # mu = c1*alpha1 + c2*alpha2 with alpha1 = (2,-1), alpha2 = (-3,2)
        c1 = 2 * self.n1 + 3 * self.n2
        c2 = self.n1 + 2 * self.n2
        return c1 + c2

    def eps_triple(self):
        """Coordinates (a, b, c) with mu = a*eps1 + b*eps2 + c*eps3, min = 0."""
        a, b, c = self.n1 + 2 * self.n2, self.n2, 0
        m = min(a, b, c)
        return (a - m, b - m, c - m)

    def eps_label(self):
        lbl = _EPS_LABELS.get((self.n1, self.n2))
        return lbl if lbl is not None else str(self.eps_triple())


def _eps(i):
    return {1: Weight(1, 0), 2: Weight(-2, 1), 3: Weight(1, -1)}[i]


_EPS_LABELS = {}
for _i in (1, 2, 3):
    _EPS_LABELS[(_eps(_i).n1, _eps(_i).n2)] = "e%d" % _i
    _EPS_LABELS[((-_eps(_i)).n1, (-_eps(_i)).n2)] = "-e%d" % _i
for _i, _j in itertools.permutations((1, 2, 3), 2):
    _w = _eps(_i) - _eps(_j)
    _EPS_LABELS[(_w.n1, _w.n2)] = "e%d-e%d" % (_i, _j)

#: the six short roots, in the fixed order used for the permutation action
SHORT_ROOTS = (_eps(1), _eps(2), _eps(3), -_eps(1), -_eps(2), -_eps(3))


class WeylElement:
    """An element of the G2 Weyl group in canonical form.

    Canonical form is the lexicographically least reduced word; elements
    are interned, so identity comparison is reliable for equal elements.
    """

    __slots__ = ("perm", "word", "length", "_group", "index")

    def __init__(self, group, perm, word, index):
        self.perm = perm            # action on SHORT_ROOTS by position
        self.word = word            # canonical (lex-least) reduced word
        self.length = len(word)
        self._group = group
        self.index = index

    def __mul__(self, other):
        return self._group.product(self, other)

    def inverse(self):
        return self._group.inverse(self)

    def act(self, weight):
        """Apply the reflection word to a weight (rightmost letter first)."""
        for i in reversed(self.word):
            weight = weight.reflect(i)
        return weight

    def is_identity(self):
        return self.length == 0

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        if not self.word:
            return "e"
        return "*".join("s%d" % i for i in self.word)


class WeylGroup:
    """The Weyl group of type G2 with all tables precomputed."""

    def __init__(self, cartan=G2_CARTAN):
        if cartan != G2_CARTAN:
            raise ValueError("only the G2 Cartan matrix is supported")
        self.cartan = cartan
        s_perm = {}
        for i in (1, 2):
            s_perm[i] = tuple(
                SHORT_ROOTS.index(w.reflect(i)) for w in SHORT_ROOTS
            )
        id_perm = tuple(range(6))

        def compose(p, q):
            # (p after q): apply q first
            return tuple(p[q[k]] for k in range(6))

        # breadth-first closure, tracking lex-least shortest words
        elements = {id_perm: ()}
        frontier = [id_perm]
        while frontier:
            new = []
            for perm in frontier:
                for i in (1, 2):
                    # right multiplication by s_i appends a letter
                    q = compose(perm, s_perm[i])
                    word = elements[perm] + (i,)
                    if q not in elements:
                        elements[q] = word
                        new.append(q)
                    elif len(word) == len(elements[q]) and word < elements[q]:
                        elements[q] = word
            frontier = new

        order = sorted(elements.items(), key=lambda kv: (len(kv[1]), kv[1]))
        self.elements = tuple(
            WeylElement(self, perm, word, k) for k, (perm, word) in enumerate(order)
        )
        self._by_perm = {el.perm: el for el in self.elements}
        self.identity = self.elements[0]
        self.w0 = max(self.elements, key=lambda el: el.length)
        self._s = {1: self._by_perm[s_perm[1]], 2: self._by_perm[s_perm[2]]}

        n = len(self.elements)
        self._mult = [[None] * n for _ in range(n)]
        for a in self.elements:
            for b in self.elements:
                self._mult[a.index][b.index] = self._by_perm[compose(a.perm, b.perm)]
        self._inv = [None] * n
        for a in self.elements:
            for b in self.elements:
                if self._mult[a.index][b.index] is self.identity:
                    self._inv[a.index] = b

        # all reduced words per element, by brute force over short words
        self._reduced_words = {el: [] for el in self.elements}
        for length in range(self.w0.length + 1):
            for word in itertools.product((1, 2), repeat=length):
                el = self.from_word(word)
                if el.length == length:
                    self._reduced_words[el].append(word)

        # Bruhat order by the subword property on a fixed reduced word of w
        self._leq = {}
        for u in self.elements:
            for w in self.elements:
                self._leq[(u, w)] = self._subword(u, w)

    # -- group operations -------------------------------------------------

    def s(self, i):
        return self._s[i]

    def product(self, a, b):
        return self._mult[a.index][b.index]

    def inverse(self, a):
        return self._inv[a.index]

    def from_word(self, word):
        el = self.identity
        for i in word:
            el = self.product(el, self._s[i])
        return el

    def reduced_words(self, el):
        return tuple(self._reduced_words[el])

    def is_reduced(self, word):
        return self.from_word(word).length == len(word)

    def element_by_weight_action(self, images):
        """The element sending SHORT_ROOTS[k] to images[k], or None."""
        try:
            perm = tuple(SHORT_ROOTS.index(w) for w in images)
        except ValueError:
            return None
        return self._by_perm.get(perm)

    # -- Bruhat order -----------------------------------------------------

    def _subword(self, u, w):
        if u.length > w.length:
            return False
        word = w.word
        for uw in self._reduced_words[u]:
            # greedy left-to-right subsequence embedding
            it = iter(word)
            if all(any(x == letter for x in it) for letter in uw):
                return True
        return False

    def bruhat_leq(self, u, w):
        return self._leq[(u, w)]

    def bruhat_less(self, u, w):
        return u != w and self._leq[(u, w)]


#: the shared G2 Weyl group instance
W = WeylGroup()

#: the two reduced words of the longest element
WORD_I = (1, 2, 1, 2, 1, 2)
WORD_I_TILDE = (2, 1, 2, 1, 2, 1)


def multiply(u, w):
    """Group product in canonical form."""
    return W.product(u, w)


def bruhat_leq(u, w):
    """True iff u <= w in Bruhat order (subword property)."""
    return W.bruhat_leq(u, w)


@dataclass(frozen=True)
class Subexpression:
    """A distinguished subexpression for 1 of a reduced word.

    ``sigma`` has length N+1 with sigma[0] = identity.  The index sets
    I, J, K (1-based positions) partition {1..N}: position j is in I if
    the letter is skipped, in J if it increases length, in K if it
    decreases length.
    """

    word: tuple
    sigma: tuple
    I: tuple
    J: tuple
    K: tuple

    @property
    def name(self):
        """Positions show the taken letter, skipped positions show 'x'."""
        taken = set(self.J) | set(self.K)
        return "".join(
            str(self.word[j - 1]) if j in taken else "x"
            for j in range(1, len(self.word) + 1)
        )

    @property
    def codim(self):
        return len(self.J)

    @property
    def dim(self):
        return len(self.I) + len(self.K)

    def sigma_names(self):
        return tuple(repr(s) for s in self.sigma)


def enumerate_distinguished(word):
    """All distinguished subexpressions for 1 of a reduced word.

    Enumeration is depth-first with 'skip' explored before 'take' at
    each position, which makes the output order deterministic.
    """
    word = tuple(word)
    if not W.is_reduced(word):
        raise ValueError("word %r is not reduced" % (word,))
    N = len(word)
    out = []

    def walk(j, chain):
        if j > N:
            if chain[-1] is W.identity:
                I, J, K = [], [], []
                for k in range(1, N + 1):
                    prev, cur = chain[k - 1], chain[k]
                    if cur == prev:
                        I.append(k)
                    elif cur.length > prev.length:
                        J.append(k)
                    else:
                        K.append(k)
                out.append(
                    Subexpression(word, tuple(chain), tuple(I), tuple(J), tuple(K))
                )
            return
        prev = chain[-1]
        nxt = prev * W.s(word[j - 1])
        if nxt.length > prev.length:
            # skipping is allowed only when taking the letter would go up
            walk(j + 1, chain + [prev])
        walk(j + 1, chain + [nxt])

    walk(1, [W.identity])
    return out


def subexpression_by_name(word, name):
    for sub in enumerate_distinguished(word):
        if sub.name == name:
            return sub
    raise KeyError(name)
