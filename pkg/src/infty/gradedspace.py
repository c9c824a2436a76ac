"""Graded bases, words, Koszul signs and the dualization of structure maps.

Words are tuples of generator indices.  A LinComb maps words to rationals.
Generators of W = (suspended dual of V) have degree 1 - |v|.
"""
from fractions import Fraction
from itertools import product

from .errors import DegreeMismatch, LengthMismatch, MixedWeight
from .exactlin import qnorm


class GradedBasis:
    """Named generators with integer degrees.

    role is "V" for the algebra itself and "W" for the alphabet of the
    suspended dual, whose generator t_v has degree 1 - |v|.
    """

    def __init__(self, generators, role="V"):
        gens = [(str(n), int(d)) for n, d in generators]
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if role not in ("V", "W"):
            raise ValueError("role must be 'V' or 'W'")
        self.generators = tuple(gens)
        self.role = role

    @property
    def names(self):
        return [n for n, _ in self.generators]

    @property
    def degrees(self):
        return [d for _, d in self.generators]

    @property
    def rank(self):
        return len(self.generators)

    def __len__(self):
        return len(self.generators)

    def index(self, name):
        for i, (n, _) in enumerate(self.generators):
            if n == name:
                return i
        raise KeyError(name)

    def dual(self):
        """The alphabet W: t_v of degree 1 - |v|."""
        if self.role != "V":
            raise ValueError("dual() expects a V basis")
        return GradedBasis([("t_" + n, 1 - d) for n, d in self.generators], role="W")

    def is_weight_finite(self):
        """True when every W-degree is >= 1, so each degree meets finitely many weights."""
        degs = self.degrees if self.role == "W" else [1 - d for d in self.degrees]
        return all(d >= 1 for d in degs)

    def __eq__(self, other):
        return isinstance(other, GradedBasis) and (self.generators, self.role) == (other.generators, other.role)

    def __hash__(self):
        return hash((self.generators, self.role))

    def __repr__(self):
        return "GradedBasis(%r, role=%r)" % (list(self.generators), self.role)


def _degs(basis_or_degrees):
    if isinstance(basis_or_degrees, GradedBasis):
        return basis_or_degrees.degrees
    return list(basis_or_degrees)


def word_degree(w, degrees):
    return sum(degrees[x] for x in w)


def koszul_sign(permutation, degrees):
    """Sign of rearranging x_1..x_n into x_{p(1)}..x_{p(n)}.

    permutation is 1-based; degrees[k] is the degree of x_{k+1}.
    """
    n = len(permutation)
    if len(degrees) != n:
        raise LengthMismatch("permutation of length %d with %d degrees" % (n, len(degrees)))
    if sorted(permutation) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d" % n)
    odd = 0
    for a in range(n):
        pa = permutation[a]
        for b in range(a + 1, n):
            pb = permutation[b]
            if pa > pb:
                odd += degrees[pa - 1] * degrees[pb - 1]
    return -1 if odd & 1 else 1


def enumerate_words(basis, weight, degree=None):
    """All words of the given weight in lexicographic order, optionally of one degree."""
    degs = _degs(basis)
    if weight < 0:
        raise ValueError("weight must be >= 0")
    words = product(range(len(degs)), repeat=weight)
    if degree is None:
        return list(words)
    return [w for w in words if word_degree(w, degs) == degree]


class LinComb(dict):
    """Finite Q-linear combination of words (dict word -> nonzero coefficient)."""

    def __init__(self, *args, **kw):
        super().__init__()
        for w, c in dict(*args, **kw).items():
            self.add_term(w, c)

    def add_term(self, w, c):
        if not c:
            return
        w = tuple(w)
        v = self.get(w, 0) + c
        if v:
            self[w] = qnorm(v)
        else:
            del self[w]

    def add(self, other, c=1):
        for w, a in other.items():
            self.add_term(w, c * a)
        return self

    def copy(self):
        out = LinComb()
        dict.update(out, self)
        return out

    def __add__(self, other):
        return self.copy().add(other)

    def __sub__(self, other):
        return self.copy().add(other, -1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c):
        out = LinComb()
        if c:
            for w, a in self.items():
                dict.__setitem__(out, w, qnorm(c * a))
        return out

    def __rmul__(self, c):
        return self.scaled(c)

    def weights(self):
        return {len(w) for w in self}

    def weight(self):
        """The common weight; raises MixedWeight otherwise (None for zero)."""
        ws = self.weights()
        if len(ws) > 1:
            raise MixedWeight("weights %s" % sorted(ws))
        return next(iter(ws)) if ws else None

    def weight_part(self, n):
        out = LinComb()
        for w, a in self.items():
            if len(w) == n:
                dict.__setitem__(out, w, a)
        return out

    def truncate(self, cap):
        out = LinComb()
        for w, a in self.items():
            if len(w) <= cap:
                dict.__setitem__(out, w, a)
        return out

    def degrees(self, degrees):
        return {word_degree(w, degrees) for w in self}

    def __repr__(self):
        return "LinComb(%s)" % dict.__repr__(self)


def as_lincomb(x):
    if isinstance(x, LinComb):
        return x
    if isinstance(x, tuple):
        return LinComb({x: 1})
    return LinComb(x)


def to_vector(x, index):
    """Coordinates of a LinComb in a basis given as dict word -> position."""
    out = {}
    for w, a in x.items():
        out[index[w]] = a
    return out


def from_vector(v, basis):
    out = LinComb()
    for i, a in v.items():
        out.add_term(basis[i], a)
    return out


def symmetrize_word(w, degrees):
    """Sorted form of w in the free graded-commutative algebra.

    Returns (sorted word, sign), or (None, 0) when an odd letter repeats.
    """
    degrees = _degs(degrees)
    n = len(w)
    odd = 0
    for a in range(n):
        for b in range(a + 1, n):
            if w[a] > w[b]:
                odd += degrees[w[a]] * degrees[w[b]]
            elif w[a] == w[b] and degrees[w[a]] & 1:
                return None, 0
    return tuple(sorted(w)), (-1 if odd & 1 else 1)


def symmetrize(x, degrees):
    """Image of a LinComb of tensor words in the symmetric algebra."""
    out = LinComb()
    for w, a in x.items():
        s, sg = symmetrize_word(w, degrees)
        if s is not None:
            out.add_term(s, sg * a)
    return out


def enumerate_symwords(basis, weight, degree=None):
    """Nonzero sorted words (multisets without repeated odd letters)."""
    degs = _degs(basis)
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for g in range(start, len(degs)):
            if acc and acc[-1] == g and degs[g] & 1:
                continue
            acc.append(g)
            rec(g, left - 1, acc)
            acc.pop()

    rec(0, weight, [])
    if degree is not None:
        out = [w for w in out if word_degree(w, degs) == degree]
    return out


def suspension_sign(vword, vdegrees):
    """(-1)^{sum_k (i-k)|v_k|} for a V-word of length i (k 1-based)."""
    i = len(vword)
    odd = 0
    for k, g in enumerate(vword, start=1):
        odd += (i - k) * vdegrees[g]
    return -1 if odd & 1 else 1


def dualize_structure(mcheck, vbasis, symmetric=False):
    """Components of the derivation m on W from maps m̌_i on V.

    mcheck: dict arity -> dict (tuple of V indices) -> dict output index -> coeff
    (or an iterable of (inputs, output, coeff) triples).
    Returns a list indexed by generator g of LinCombs over W-words (all arities).
    With symmetric=True the words are sorted into the symmetric algebra.
    """
    vdeg = vbasis.degrees
    wdeg = [1 - d for d in vdeg]
    comps = [LinComb() for _ in vdeg]
    for i, table in mcheck.items():
        for inputs, outs in _iter_table(table):
            if len(inputs) != i:
                raise LengthMismatch("arity %d entry with %d inputs" % (i, len(inputs)))
            sg = suspension_sign(inputs, vdeg)
            for g, c in outs.items():
                if not c:
                    continue
                if word_degree(inputs, wdeg) != wdeg[g] + 1:
                    raise DegreeMismatch(
                        "m_%d(%s) -> %s violates |m| = 1" % (i, inputs, vbasis.names[g]))
                c = qnorm(Fraction(c))
                if symmetric:
                    s, ss = symmetrize_word(inputs, wdeg)
                    if s is not None:
                        comps[g].add_term(s, ss * sg * c)
                else:
                    comps[g].add_term(inputs, sg * c)
    return comps


def _iter_table(table):
    if isinstance(table, dict):
        for inputs, outs in table.items():
            yield tuple(inputs), outs
    else:
        for inputs, out, c in table:
            yield tuple(inputs), {out: c}


def undualize(components, vbasis):
    """Inverse of dualize_structure (tensor case): recover m̌_i tables."""
    vdeg = vbasis.degrees
    out = {}
    for g, comp in enumerate(components):
        for w, c in comp.items():
            sg = suspension_sign(w, vdeg)
            out.setdefault(len(w), {}).setdefault(w, {})[g] = qnorm(sg * c)
    return out
