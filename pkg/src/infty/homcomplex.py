"""Bar, Hochschild, Harrison and Chevalley-Eilenberg complexes at finite windows.

Cochains are words in W (or sorted words for the symmetric theories).
A word of W-degree d sits in cohomological degree d - 1.  Everything is
truncated at a weight cap; m never lowers weight, so the truncation is a
quotient complex and d^2 = 0 holds exactly.
"""
from functools import lru_cache
from itertools import product

from .cyclicshuffle import eigen_basis, eigen_pairs, rotate
from .errors import NotCinfty, NotUnital, WrongKind
from .exactlin import RationalMatrix, Subspace, cohomology_dim, rank
from .gradedspace import LinComb, enumerate_symwords, symmetrize_word, word_degree
from .inftystruct import apply_derivation, check_cinfty


class ComplexWindow:
    """Bases and differentials of a complex on a range of degrees.

    basis[n] lists the basis elements in degree n, d[n] is the matrix of
    C^n -> C^{n+1}.  exact[n] says whether degree n is unaffected by the cap.
    """

    def __init__(self, theory, basis, d, cap, exact, info=None):
        self.theory = theory
        self.basis = basis
        self.d = d
        self.cap = cap
        self.exact = exact
        self.info = dict(info or {})

    @property
    def degrees(self):
        """Degrees whose cohomology the window determines."""
        return sorted(n for n in self.basis if n - 1 in self.d and n in self.d)

    def dim(self, n):
        return len(self.basis.get(n, ()))

    def cohomology(self, n):
        return cohomology_dim(self.d[n - 1], self.d[n])

    def dims(self):
        return {n: self.cohomology(n) for n in self.degrees}

    def check_d2(self):
        for n in self.d:
            if n + 1 in self.d and not (self.d[n + 1] @ self.d[n]).is_zero():
                return False
        return True

    def rows(self):
        return [{"degree": n, "dim": self.cohomology(n), "exact": self.exact.get(n, False)}
                for n in self.degrees]

    def __repr__(self):
        return "ComplexWindow(%s, degrees=%s, cap=%s)" % (self.theory, self.degrees, self.cap)


# word tables

@lru_cache(maxsize=256)
def words_of_degree(wdeg, D, cap, minw=1):
    """Words over letters of degrees wdeg with total degree D and minw <= weight <= cap."""
    out = []
    if all(d >= 1 for d in wdeg):
        def rec(prefix, left):
            if len(prefix) >= minw and left == 0:
                out.append(tuple(prefix))
            if len(prefix) == cap or left <= 0:
                return
            for g, d in enumerate(wdeg):
                if d <= left:
                    prefix.append(g)
                    rec(prefix, left - d)
                    prefix.pop()
        rec([], D)
    else:
        for n in range(minw, cap + 1):
            for w in product(range(len(wdeg)), repeat=n):
                if word_degree(w, wdeg) == D:
                    out.append(w)
    out.sort(key=lambda w: (len(w), w))
    return tuple(out)


@lru_cache(maxsize=256)
def symwords_of_degree(wdeg, D, cap, minw=1):
    out = []
    for n in range(minw, cap + 1):
        out.extend(enumerate_symwords(list(wdeg), n, D))
    return tuple(out)


def _weight_finite(wdeg):
    return all(d >= 1 for d in wdeg)


def _complete(wdeg, D, cap):
    """All words of degree <= D have weight <= cap."""
    if not _weight_finite(wdeg):
        return False
    return D // min(wdeg) <= cap


def _assemble(theory, basis_fn, diff_fn, degrees, cap, exact_fn, info=None):
    lo, hi = min(degrees), max(degrees)
    basis = {n: list(basis_fn(n)) for n in range(lo - 1, hi + 2)}
    d = {}
    for n in range(lo - 1, hi + 1):
        index = {b: i for i, b in enumerate(basis[n + 1])}
        cols = []
        for b in basis[n]:
            img = diff_fn(b)
            cols.append({index[t]: a for t, a in img.items()})
        d[n] = RationalMatrix.from_columns(len(basis[n + 1]), cols)
    exact = {n: exact_fn(n) for n in range(lo, hi + 1)}
    return ComplexWindow(theory, basis, d, cap, exact, info)


def _degrees(window):
    if window is None:
        return list(range(0, 7))
    if isinstance(window, int):
        return list(range(0, window + 1))
    return list(window)


# differentials on words

def bar_word(S, w, cap):
    """b' on a single word: m extended as a derivation."""
    return S.apply(LinComb({w: 1}), cap)


def hochschild_word(S, w, cap):
    """b = Theta^{-1} L_m Theta on a Theta-word (first letter x, tail y)."""
    wdeg = S.wdeg
    x, y = w[0], w[1:]
    out = LinComb()
    for u, c in S._terms[x]:
        if len(u) + len(y) > cap:
            continue
        full = u + y
        for k in range(len(u)):
            r, s = rotate(full, k, wdeg)
            out.add_term(r, -s * c)
    if y:
        my = S.apply(LinComb({y: 1}), cap - 1)
        sg = 1 if wdeg[x] % 2 == 0 else -1
        for t, a in my.items():
            out.add_term((x,) + t, -sg * a)
    return out


def adjoint_word(S, key, cap):
    """d(xi) = [m, xi] for the cochain xi: t_g -> u, other generators -> 0."""
    g, u = key
    wdeg = S.wdeg
    sym = S.symmetric
    dxi = word_degree(u, wdeg) - wdeg[g]
    out = LinComb()
    if u:
        for t, a in S.apply(LinComb({u: 1}), cap).items():
            out.add_term((g, t), a)
    xi = [()] * len(wdeg)
    xi[g] = ((u, 1),)
    sg = -1 if dxi % 2 == 0 else 1
    for h in range(len(wdeg)):
        comp = S.components[h]
        if not comp:
            continue
        img = apply_derivation(xi, comp, wdeg, dxi, cap, sym)
        for t, a in img.items():
            out.add_term((h, t), sg * a)
    return out


def ce_dual_word(S, key, cap):
    """Chevalley-Eilenberg differential with dual coefficients on (g; y)."""
    g, y = key
    wdeg = S.wdeg
    out = LinComb()
    for u, c in S._terms[g]:
        if len(u) + len(y) > cap:
            continue
        pre = 0
        for i, ui in enumerate(u):
            rest, s0 = symmetrize_word(u[:i] + u[i + 1:] + y, wdeg)
            if rest is not None:
                sg = -1 if (pre * wdeg[ui]) & 1 else 1
                out.add_term((ui, rest), -c * sg * s0)
            pre += wdeg[ui]
    if y:
        my = S.apply(LinComb({y: 1}), cap - 1)
        sg = 1 if wdeg[g] % 2 == 0 else -1
        for t, a in my.items():
            out.add_term((g, t), -sg * a)
    return out


# public windows

def bar_differential(S, window=None, cap=8):
    """The bar complex (words of weight >= 1, differential b')."""
    wdeg = S.wdeg
    degs = _degrees(window)
    sym = S.symmetric
    src = symwords_of_degree if sym else words_of_degree
    return _assemble("bar", lambda n: src(wdeg, n + 1, cap),
                     lambda w: bar_word(S, w, cap), degs, cap,
                     lambda n: _complete(wdeg, n + 2, cap))


def hochschild_b(S, window=None, cap=8, coefficients="dual"):
    wdeg = S.wdeg
    degs = _degrees(window)
    if S.kind == "linf":
        raise WrongKind("use ce_window for L-infinity structures")
    if coefficients == "dual":
        return _assemble("hochschild_dual", lambda n: words_of_degree(wdeg, n + 1, cap),
                         lambda w: hochschild_word(S, w, cap), degs, cap,
                         lambda n: _complete(wdeg, n + 2, cap))
    if coefficients == "adjoint":
        return _assemble("hochschild_adjoint", lambda n: _adjoint_basis(S, n, cap, False),
                         lambda k: adjoint_word(S, k, cap), degs, cap,
                         lambda n: all(_complete(wdeg, n + d, cap) for d in wdeg))
    raise ValueError("coefficients must be 'dual' or 'adjoint'")


def _adjoint_basis(S, n, cap, sym):
    """Cochains (g, u) with |u| - |t_g| + 1 = n, 0 <= weight(u) <= cap."""
    wdeg = S.wdeg
    out = []
    for g, dg in enumerate(wdeg):
        D = n - 1 + dg
        if sym:
            ws = symwords_of_degree(wdeg, D, cap, 0)
        else:
            ws = words_of_degree(wdeg, D, cap, 0)
        out.extend((g, w) for w in ws)
    return out


def ce_window(S, window=None, cap=8, coefficients="dual"):
    if S.kind != "linf":
        raise WrongKind("Chevalley-Eilenberg complexes need an L-infinity structure")
    wdeg = S.wdeg
    degs = _degrees(window)
    if coefficients == "trivial":
        return _assemble("ce_trivial", lambda n: symwords_of_degree(wdeg, n + 1, cap),
                         lambda w: S.apply(LinComb({w: 1}), cap), degs, cap,
                         lambda n: _complete(wdeg, n + 2, cap))
    if coefficients == "dual":
        def basis(n):
            out = []
            for g, dg in enumerate(wdeg):
                out.extend((g, y) for y in symwords_of_degree(wdeg, n + 1 - dg, cap - 1, 0))
            return out
        return _assemble("ce_dual", basis, lambda k: ce_dual_word(S, k, cap), degs, cap,
                         lambda n: _complete(wdeg, n + 2, cap))
    if coefficients == "adjoint":
        return _assemble("ce_adjoint", lambda n: _adjoint_basis(S, n, cap, True),
                         lambda k: adjoint_word(S, k, cap), degs, cap,
                         lambda n: all(_complete(wdeg, n + d, cap) for d in wdeg))
    raise ValueError("coefficients must be 'dual', 'adjoint' or 'trivial'")


# subcomplexes cut out by subspaces

def restrict(W, vectors, theory=None, reduced=False):
    """Subcomplex of W spanned in each degree by the given LinCombs over W's basis labels.

    The new basis is the reduced echelon basis; info['invariant'] records
    whether d maps each subspace into the next one (coordinates are only
    meaningful when it does).  With reduced=True the vectors come as
    (pivot label, LinComb) pairs already in reduced echelon form.
    """
    subs = {}
    for n, vecs in vectors.items():
        index = {b: i for i, b in enumerate(W.basis[n])}
        if reduced:
            subs[n] = Subspace._from_reduced(len(index), [
                (index[p], {index[t]: a for t, a in v.items()}) for p, v in vecs])
        else:
            subs[n] = Subspace(len(index), [{index[t]: a for t, a in v.items()} for v in vecs])
    basis = {}
    for n, S in subs.items():
        labels = W.basis[n]
        basis[n] = [LinComb({labels[i]: a for i, a in v.items()}) for v in S.basis]
    d = {}
    bad = []
    for n in W.d:
        if n not in subs or n + 1 not in subs:
            continue
        cols = []
        tgt = subs[n + 1]
        piv = tgt.pivots
        for v in subs[n].basis:
            img = W.d[n].apply(v)
            if tgt.reduce(img):
                bad.append(n)
                break
            cols.append({k: img[c] for k, c in enumerate(piv) if c in img})
        d[n] = RationalMatrix.from_columns(tgt.dim, cols) if n not in bad else None
    if bad:
        d = {n: m for n, m in d.items() if m is not None}
    info = dict(W.info)
    info["invariant"] = not bad
    info["leaks"] = sorted(set(bad))
    return ComplexWindow(theory or W.theory, basis, d, W.cap, dict(W.exact), info), subs


def harrison_window(S, window=None, cap=8, coefficients="dual"):
    """Harrison complex as the ẽ(1) (dual) or Lie-valued (adjoint) subcomplex."""
    if S.kind == "linf":
        raise NotCinfty("Harrison complexes need a C-infinity structure")
    if not check_cinfty(S).passed:
        raise NotCinfty("structure values are not Lie elements")
    wdeg = S.wdeg
    if coefficients == "dual":
        W = hochschild_b(S, window, cap, "dual")
        vecs = {n: [p for w in range(1, cap + 1) for p in eigen_pairs(1, w, wdeg, "tilde", n + 1)]
                for n in W.basis}
        H, _ = restrict(W, vecs, "harrison_dual", True)
        return H
    if coefficients == "adjoint":
        W = hochschild_b(S, window, cap, "adjoint")
        vecs = {}
        for n in W.basis:
            vs = []
            for g, dg in enumerate(wdeg):
                for w in range(1, cap + 1):
                    for p, v in eigen_pairs(1, w, wdeg, "plain", n - 1 + dg):
                        vs.append(((g, p), LinComb({(g, t): a for t, a in v.items()})))
            vecs[n] = vs
        H, _ = restrict(W, vecs, "harrison_adjoint", True)
        return H
    raise ValueError("coefficients must be 'dual' or 'adjoint'")


# unital tools

def contracting_h(S, x):
    """h(tau w) = w, h(t_i w) = 0 (weight-zero results dropped)."""
    if S.unit is None:
        raise NotUnital("contracting homotopy needs a unit")
    u = S.unit
    out = LinComb()
    for w, c in LinComb(x).items():
        if len(w) > 1 and w[0] == u:
            out.add_term(w[1:], c)
    return out


def _s_i(S, x, i):
    u = S.unit
    wdeg = S.wdeg
    out = LinComb()
    for w, c in x.items():
        f = w[1:]
        if len(f) > i and f[i] == u:
            e = wdeg[w[0]] + 1 + sum(wdeg[t] for t in f[:i])
            out.add_term(w[:1] + f[:i] + f[i + 1:], -c if e & 1 else c)
    return out


def _b(S, x, cap):
    out = LinComb()
    for w, c in x.items():
        out.add(hochschild_word(S, w, cap), c)
    return out


def is_normalised(S, x):
    return all(S.unit not in w[1:] for w in x)


def normalize_H(S, alpha, cap=None):
    """Push a 1-form (Theta-coordinates) into normalised form by H = ... h_1 h_0.

    h_i = id + b s_i + s_i b removes tau from tail position i.  b is evaluated
    with room above the cap and the result truncated to weight <= cap.
    """
    if S.unit is None:
        raise NotUnital("normalisation needs a unit")
    x = LinComb(alpha)
    if not x:
        return x
    if cap is None:
        cap = max(len(w) for w in x)
    # h_i only touches weights >= i + 1, and each step moves weight down by
    # at most one, so cap steps with room 2*cap give exact weights <= cap
    inner = 2 * cap
    for i in range(cap):
        x = x + _b(S, _s_i(S, x, i), inner) + _s_i(S, _b(S, x, inner), i)
    return x.truncate(cap)


def rank_of(M):
    return rank(M)
