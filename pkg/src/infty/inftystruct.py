"""A-infinity, C-infinity and L-infinity structures as derivations of free algebras.

A structure on V is stored on the dual side: for every generator t_g of W
the element m(t_g), a LinComb of W-words (sorted words for L-infinity).
"""
from dataclasses import dataclass, field

from .cyclicshuffle import apply_e
from .errors import IllegalDirection, NoUnitDeclared, WrongKind
from .gradedspace import (GradedBasis, LinComb, dualize_structure, symmetrize,
                          symmetrize_word, word_degree)

KINDS = ("ainf", "cinf", "linf")


@dataclass
class Report:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fail(self, **item):
        self.passed = False
        self.failures.append(item)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "failures": self.failures, "info": self.info}


class InftyStructure:
    """m on the completed free algebra of W, given on generators.

    basis is the V basis; components[g] is m(t_g).  unit is the index of the
    unit generator of V (its dual is tau), or None.
    """

    def __init__(self, kind, basis, components, unit=None, name=""):
        if kind not in KINDS:
            raise ValueError("kind must be one of %s" % (KINDS,))
        if len(components) != len(basis):
            raise ValueError("one component per generator")
        self.kind = kind
        self.basis = basis
        self.wbasis = basis.dual()
        self.wdeg = tuple(self.wbasis.degrees)
        self.components = [LinComb(c) for c in components]
        self.unit = unit
        self.name = name
        self._terms = [tuple(c.items()) for c in self.components]

    @classmethod
    def from_mcheck(cls, kind, basis, mcheck, unit=None, name=""):
        """Build from structure maps on V: mcheck[i][(v_1..v_i)] = {output: coeff}."""
        comps = dualize_structure(mcheck, basis, symmetric=(kind == "linf"))
        return cls(kind, basis, comps, unit=unit, name=name)

    @property
    def symmetric(self):
        return self.kind == "linf"

    @property
    def max_arity(self):
        return max((len(w) for c in self.components for w in c), default=0)

    @property
    def is_minimal(self):
        return all(len(w) != 1 for c in self.components for w in c)

    @property
    def is_strict(self):
        """Only binary operations."""
        return all(len(w) == 2 for c in self.components for w in c)

    def arity_part(self, i):
        return [c.weight_part(i) for c in self.components]

    def apply(self, x, cap=None):
        """m applied to a LinComb of words (weight > cap dropped)."""
        return apply_derivation(self._terms, x, self.wdeg, 1, cap, self.symmetric)

    def __repr__(self):
        return "InftyStructure(%s, %s, unit=%r)" % (self.kind, self.basis.names, self.unit)


def derivation_terms(xi):
    """Normalize a derivation given as list/dict generator -> LinComb."""
    if isinstance(xi, dict):
        n = max(xi) + 1 if xi else 0
        xi = [xi.get(g, {}) for g in range(n)]
    return [tuple(LinComb(v).items()) for v in xi]


def apply_derivation(terms, x, degrees, deg=1, cap=None, symmetric=False):
    """Extend a derivation of degree deg from generators to words by Leibniz.

    terms[g] is a sequence of (word, coeff) pairs.  For symmetric=True the
    words are sorted words of the free graded-commutative algebra.
    """
    out = LinComb()
    ng = len(terms)
    for w, c in x.items():
        pre = 0
        for i, g in enumerate(w):
            if g < ng and terms[g]:
                sg = -1 if (deg * pre) & 1 else 1
                head, tail = w[:i], w[i + 1:]
                for u, a in terms[g]:
                    if cap is not None and len(w) - 1 + len(u) > cap:
                        continue
                    nw = head + u + tail
                    if symmetric:
                        s, ss = symmetrize_word(nw, degrees)
                        if s is not None:
                            out.add_term(s, ss * sg * a * c)
                    else:
                        out.add_term(nw, sg * a * c)
            pre += degrees[g]
    return out


def derivation_bracket(xi, dxi, gamma, dgamma, degrees, cap=None, symmetric=False):
    """[xi, gamma] = xi gamma - (-1)^{|xi||gamma|} gamma xi on generators."""
    txi, tga = derivation_terms(xi), derivation_terms(gamma)
    n = max(len(txi), len(tga))
    txi += [()] * (n - len(txi))
    tga += [()] * (n - len(tga))
    sign = -1 if (dxi * dgamma) & 1 else 1
    out = []
    for g in range(n):
        a = apply_derivation(txi, LinComb(dict(tga[g])), degrees, dxi, cap, symmetric)
        b = apply_derivation(tga, LinComb(dict(txi[g])), degrees, dgamma, cap, symmetric)
        out.append(a.add(b, -sign))
    return out


def validate_square_zero(S, cap):
    """Check m(m(t_g)) = 0 in every weight <= cap."""
    rep = Report("square_zero", info={"cap": cap, "kind": S.kind})
    for g in range(len(S.basis)):
        mm = S.apply(S.components[g], cap)
        for w in sorted(mm, key=lambda w: (len(w), w)):
            rep.fail(generator=S.wbasis.names[g], weight=len(w),
                     witness=[S.wbasis.names[x] for x in w], coeff=str(mm[w]))
    if rep.failures:
        rep.info["first_weight"] = min(f["weight"] for f in rep.failures)
    return rep


def check_cinfty(S):
    """Every value of m must be fixed by e(1), i.e. a Lie element."""
    if S.kind == "linf":
        raise WrongKind("check_cinfty expects an A-infinity or C-infinity structure")
    rep = Report("cinfty")
    for g, comp in enumerate(S.components):
        for i in sorted(comp.weights()):
            part = comp.weight_part(i)
            diff = part - apply_e(1, part, S.wdeg)
            if diff:
                w = min(diff)
                rep.fail(generator=S.wbasis.names[g], weight=i,
                         witness=[S.wbasis.names[x] for x in w])
    return rep


def unital_terms(S, g):
    """The tau-dependent part that ad(tau) - tau^2 d/dtau puts into m(t_g)."""
    u = S.unit
    if g == u:
        return LinComb({(u, u): 1})
    d = S.wdeg[g]
    return LinComb({(u, g): 1, (g, u): -1 if d % 2 == 0 else 1})


def check_unital(S):
    if S.unit is None:
        raise NoUnitDeclared("structure has no declared unit")
    rep = Report("unital", info={"unit": S.basis.names[S.unit]})
    u = S.unit
    if S.wdeg[u] != 1:
        rep.fail(reason="unit must have degree 0 in V")
        return rep
    for g, comp in enumerate(S.components):
        with_tau = LinComb({w: c for w, c in comp.items() if u in w})
        diff = with_tau - unital_terms(S, g)
        for w in sorted(diff):
            rep.fail(generator=S.wbasis.names[g],
                     monomial=[S.wbasis.names[x] for x in w], coeff=str(diff[w]))
    return rep


def convert(S, target):
    """C-inf -> A-inf by relabeling; A-inf or C-inf -> L-inf by symmetrization."""
    if target == "ainf" and S.kind == "cinf":
        return InftyStructure("ainf", S.basis, S.components, S.unit, S.name)
    if target == "linf" and S.kind in ("ainf", "cinf"):
        comps = [symmetrize(c, S.wdeg) for c in S.components]
        return InftyStructure("linf", S.basis, comps, S.unit, S.name)
    raise IllegalDirection("cannot convert %s to %s" % (S.kind, target))


class InftyMorphism:
    """Continuous algebra map from the target's free algebra to the source's.

    components[g'] is phi(t'_g'), a LinComb of words in the source alphabet.
    """

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = [LinComb(c) for c in components]

    @classmethod
    def identity(cls, S):
        return cls(S, S, [{(g,): 1} for g in range(len(S.basis))])

    def apply(self, x, cap=None):
        out = LinComb()
        for w, c in x.items():
            acc = LinComb({(): c})
            for g in w:
                nxt = LinComb()
                for a, ca in acc.items():
                    for b, cb in self.components[g].items():
                        if cap is None or len(a) + len(b) <= cap:
                            nxt.add_term(a + b, ca * cb)
                acc = nxt
            out.add(acc)
        return out


def check_morphism(phi, S, T, cap):
    """phi o m_T = m_S o phi on generators of T up to weight cap."""
    rep = Report("morphism", info={"cap": cap})
    for g in range(len(T.basis)):
        deg_ok = all(word_degree(w, S.wdeg) == T.wdeg[g] for w in phi.components[g])
        if not deg_ok:
            rep.fail(generator=T.wbasis.names[g], reason="phi must have degree 0")
        lhs = phi.apply(T.components[g], cap)
        rhs = S.apply(phi.components[g], cap)
        diff = lhs - rhs
        for w in sorted(diff, key=lambda w: (len(w), w)):
            rep.fail(generator=T.wbasis.names[g], weight=len(w),
                     witness=[S.wbasis.names[x] for x in w], coeff=str(diff[w]))
    # linear parts: phi_1 m'_1 = m_1 phi_1
    chain = True
    for g in range(len(T.basis)):
        p1 = phi.components[g].weight_part(1)
        lhs = phi.apply(T.components[g].weight_part(1)).weight_part(1)
        rhs = S.apply(p1).weight_part(1)
        if lhs - rhs:
            chain = False
    rep.info["phi1_chain_map"] = chain
    return rep


def trivial_field():
    """The ground field as a unital strict algebra: m(tau) = tau^2."""
    basis = GradedBasis([("1", 0)])
    return InftyStructure.from_mcheck("cinf", basis, {2: {(0, 0): {0: 1}}}, unit=0, name="K")
