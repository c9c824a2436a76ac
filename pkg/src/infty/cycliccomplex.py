"""Cyclic cohomology: necklace complex, Tsygan and Connes bicomplexes, periodicity.

Bicomplex labels are (column, word).  A word of W-degree d in column c of
the Tsygan bicomplex has total degree d - 1 + c; in column i of the Connes
bicomplex it has total degree d - 1 + 2i.  Column truncations shrink with
the column (cap - ceil(c/2) for Tsygan, cap - i for Connes) so that every
horizontal map sends dropped words to dropped words.
"""
from .cyclicshuffle import act_N, apply_e, eigen_basis, necklace, necklace_project, rotate
from .errors import NotCinfty, NotMinimal, NotUnital
from .exactlin import RationalMatrix, Subspace, induced_rank, kernel, rank
from .gradedspace import LinComb, word_degree
from .homcomplex import (ComplexWindow, _assemble, _complete, _degrees, bar_word,
                         contracting_h, hochschild_word, restrict, words_of_degree)
from .inftystruct import check_cinfty


class BicomplexWindow(ComplexWindow):
    """Total complex of a bicomplex; keeps the column structure for inspection."""

    def __init__(self, theory, basis, d, cap, exact, columns, col_caps, info=None):
        super().__init__(theory, basis, d, cap, exact, info)
        self.columns = columns
        self.col_caps = col_caps

    def column_of(self, n):
        return [lab[0] for lab in self.basis[n]]


def _need_weight_finite(S):
    if not all(d >= 1 for d in S.wdeg):
        raise ValueError("bicomplex totalization needs every W-degree >= 1 "
                         "(V concentrated in degrees <= 0)")


def necklaces_of_degree(wdeg, D, cap):
    out = []
    for w in words_of_degree(wdeg, D, cap):
        r, s = necklace(w, wdeg)
        if r == w and s == 1:
            out.append(w)
    return out


def cyclic_word(S, w, cap):
    """Induced b' on the necklace with representative w."""
    return necklace_project(bar_word(S, w, cap), S.wdeg)


def cyclic_window(S, window=None, cap=8):
    wdeg = S.wdeg
    return _assemble("cyclic", lambda n: necklaces_of_degree(wdeg, n + 1, cap),
                     lambda w: cyclic_word(S, w, cap), _degrees(window), cap,
                     lambda n: _complete(wdeg, n + 2, cap))


# Tsygan

def tsygan_cap(cap, c):
    return cap - (c + 1) // 2


def _tsygan_vertical(S, c, w, cap):
    if c % 2 == 0:
        return hochschild_word(S, w, cap)
    return bar_word(S, w, cap)


def _tsygan_horizontal(S, c, w):
    """Even column -> odd: 1 - z.  Odd -> even: N."""
    if c % 2 == 0:
        return LinComb({w: 1}) - _z(w, S.wdeg)
    return act_N({w: 1}, S.wdeg)


def _z(w, wdeg):
    r, s = rotate(w, 1, wdeg)
    return LinComb({r: s})


def tsygan_window(S, window=None, cap=8, max_column=None):
    """Total complex of the Tsygan bicomplex (optionally only columns <= max_column)."""
    _need_weight_finite(S)
    wdeg = S.wdeg
    degs = _degrees(window)

    def basis(n):
        out = []
        for c in range(0, n + 2):
            cc = tsygan_cap(cap, c)
            if cc < 1 or (max_column is not None and c > max_column):
                break
            out.extend((c, w) for w in words_of_degree(wdeg, n + 1 - c, cc))
        return out

    def diff(lab):
        c, w = lab
        out = LinComb()
        for t, a in _tsygan_vertical(S, c, w, tsygan_cap(cap, c)).items():
            out.add_term((c, t), a)
        if len(w) <= tsygan_cap(cap, c + 1) and (max_column is None or c < max_column):
            for t, a in _tsygan_horizontal(S, c, w).items():
                out.add_term((c + 1, t), a)
        return out

    def exact(n):
        return all(_complete(wdeg, n + 2 - c, tsygan_cap(cap, c)) for c in range(0, n + 2)
                   if n + 2 - c >= 1 and (max_column is None or c <= max_column))

    W = _assemble("tsygan", basis, diff, degs, cap, exact)
    return BicomplexWindow("tsygan", W.basis, W.d, cap, W.exact, "tsygan",
                           {c: tsygan_cap(cap, c) for c in range(0, max(degs) + 3)})


def tsygan_comparison(S, T, n):
    """The chain map (-1)^n N from necklaces (degree n) into column 0 of T."""
    wdeg = S.wdeg
    src = necklaces_of_degree(wdeg, n + 1, T.cap)
    index = {lab: i for i, lab in enumerate(T.basis[n])}
    sg = -1 if n % 2 else 1
    cols = []
    for w in src:
        cols.append({index[(0, t)]: sg * a for t, a in act_N({w: 1}, wdeg).items()})
    return RationalMatrix.from_columns(len(T.basis[n]), cols)


# Connes

def B_prime(S, w, normalised=False):
    """B' = N h (1 - z) on one word; the normalised variant is N h."""
    wdeg = S.wdeg
    x = LinComb({w: 1})
    if not normalised:
        x = x - _z(w, wdeg)
    return act_N(contracting_h(S, x), wdeg) if x else LinComb()


def _act_N_any(x, wdeg):
    out = LinComb()
    for w, a in x.items():
        out.add(act_N({w: 1}, wdeg), a)
    return out


def connes_window(S, window=None, cap=8, normalised=False):
    if S.unit is None:
        raise NotUnital("Connes complex needs a unit")
    _need_weight_finite(S)
    wdeg = S.wdeg
    u = S.unit
    degs = _degrees(window)

    def ok(w):
        return not normalised or u not in w[1:]

    def basis(n):
        out = []
        i = 0
        while cap - i >= 1 and n + 1 - 2 * i >= 1:
            out.extend((i, w) for w in words_of_degree(wdeg, n + 1 - 2 * i, cap - i) if ok(w))
            i += 1
        return out

    def diff(lab):
        i, w = lab
        out = LinComb()
        for t, a in hochschild_word(S, w, cap - i).items():
            out.add_term((i, t), a)
        if cap - i - 1 >= 1:
            x = LinComb({w: 1})
            if not normalised:
                x = x - _z(w, wdeg)
            hx = contracting_h(S, x)
            for t, a in _act_N_any(hx, wdeg).items():
                if len(t) <= cap - i - 1:
                    out.add_term((i + 1, t), a)
        return out

    def exact(n):
        i = 0
        while n + 2 - 2 * i >= 1:
            if not _complete(wdeg, n + 2 - 2 * i, cap - i):
                return False
            i += 1
        return True

    W = _assemble("connes_normalised" if normalised else "connes", basis, diff, degs, cap, exact)
    return BicomplexWindow(W.theory, W.basis, W.d, cap, W.exact, "connes",
                           {i: cap - i for i in range(0, max(degs) + 2)})


def connes_to_tsygan(S, C, T, n):
    """x in Connes column i -> (-1)^i x in column 2i + (-1)^{i+1} h(1-z)x in column 2i+1."""
    index = {lab: k for k, lab in enumerate(T.basis[n])}
    wdeg = S.wdeg
    cols = []
    for i, w in C.basis[n]:
        col = {}
        s = -1 if i % 2 else 1
        col[index[(2 * i, w)]] = s
        hx = contracting_h(S, LinComb({w: 1}) - _z(w, wdeg))
        for t, a in hx.items():
            if len(t) <= tsygan_cap(T.cap, 2 * i + 1):
                col[index[(2 * i + 1, t)]] = -s * a
        cols.append(col)
    return RationalMatrix.from_columns(len(T.basis[n]), cols)


def normalised_inclusion(C, Cn, n):
    """Inclusion of the normalised Connes complex into the Connes complex in degree n."""
    index = {lab: k for k, lab in enumerate(C.basis[n])}
    return RationalMatrix.from_columns(len(C.basis[n]), [{index[lab]: 1} for lab in Cn.basis[n]])


# periodicity S, I, B in the Tsygan model

def _cocycles(W, n):
    return kernel(W.d[n])


def _coboundaries(W, n):
    M = W.d[n - 1]
    return Subspace(M.rows, [c for c in M.columns() if c])


def periodicity_maps(S, T, n):
    """Matrices of S: Tot^{n-2} -> Tot^n, I: Tot^n -> C^n(b), B: C^n(b) -> Tot^{n-1}.

    I is the projection on column 0 (a chain map since horizontal maps go
    right), S the shift by two columns and B the connecting map
    y -> -N h (1 - z) y placed in column 0.
    """
    if S.unit is None:
        raise NotUnital("periodicity maps need a unit")
    wdeg = S.wdeg
    out = {}
    if n - 2 in T.basis:
        tgt = {lab: k for k, lab in enumerate(T.basis[n])}
        cols = []
        for c, w in T.basis[n - 2]:
            lab = (c + 2, w)
            cols.append({tgt[lab]: 1} if lab in tgt else {})
        out["S"] = RationalMatrix.from_columns(len(T.basis[n]), cols)
    hoch = [w for c, w in T.basis[n] if c == 0]
    hidx = {w: k for k, w in enumerate(hoch)}
    cols = []
    for c, w in T.basis[n]:
        cols.append({hidx[w]: 1} if c == 0 else {})
    out["I"] = RationalMatrix.from_columns(len(hoch), cols)
    out["hoch_basis"] = hoch
    if n - 1 in T.basis:
        tgt = {lab: k for k, lab in enumerate(T.basis[n - 1])}
        cols = []
        for w in hoch:
            img = B_prime(S, w)
            cols.append({tgt[(0, t)]: -a for t, a in img.items() if (0, t) in tgt})
        out["B"] = RationalMatrix.from_columns(len(T.basis[n - 1]), cols)
    return out


def hochschild_column(S, T, window):
    """The b-complex on the column-0 words of T (same truncation)."""
    from .homcomplex import hochschild_b
    return hochschild_b(S, window, T.cap, "dual")


def periodicity_report(S, window=None, cap=8, T=None, H=None):
    """Rank bookkeeping for ... -> HC^{n-2} -S-> HC^n -I-> HH^n -B-> HC^{n-1} -> ..."""
    degs = _degrees(window)
    degs = list(range(min(min(degs), 0) - 2, max(degs) + 1))
    if T is None:
        T = tsygan_window(S, degs, cap)
    if H is None:
        H = hochschild_column(S, T, degs)
    return _les_report(T, H, lambda n: periodicity_maps(S, T, n), degs, T, H)


def _les_report(Tsrc, H, maps_at, degs, Ttgt=None, Hc=None):
    """Exactness of a periodicity-type sequence by ranks at every node.

    Tsrc holds HC^{n-2} and HC^{n-1} terms, Ttgt the HC^n terms.
    """
    Ttgt = Ttgt or Tsrc
    rows = []
    ok = True
    for n in degs:
        if not all(k in Ttgt.d and k - 1 in Ttgt.d for k in (n,)) or n not in H.d or n - 1 not in H.d:
            continue
        if n - 2 not in Tsrc.d or n - 3 not in Tsrc.d or n - 1 not in Tsrc.d or n - 2 not in Tsrc.d:
            continue
        mp = maps_at(n)
        ZC2, BC2 = _cocycles(Tsrc, n - 2), _coboundaries(Tsrc, n - 2)
        ZC, BC = _cocycles(Ttgt, n), _coboundaries(Ttgt, n)
        ZH, BH = _cocycles(H, n), _coboundaries(H, n)
        ZC1, BC1 = _cocycles(Tsrc, n - 1), _coboundaries(Tsrc, n - 1)
        hc2 = ZC2.dim - BC2.dim
        hc = ZC.dim - BC.dim
        hh = ZH.dim - BH.dim
        hc1 = ZC1.dim - BC1.dim
        rS = induced_rank(mp["S"], ZC2, BC)
        rI = induced_rank(mp["I"], ZC, BH)
        rB = induced_rank(mp["B"], ZH, BC1)
        rIS = induced_rank(mp["I"] @ mp["S"], ZC2, BH)
        rBI = induced_rank(mp["B"] @ mp["I"], ZC, BC1)
        exact_hc = hc - rI == rS
        exact_hh = hh - rB == rI
        row = {"degree": n, "HC_n-2": hc2, "HC_n": hc, "HH_n": hh, "HC_n-1": hc1,
               "rank_S": rS, "rank_I": rI, "rank_B": rB, "IS": rIS, "BI": rBI,
               "exact_at_HC": exact_hc, "exact_at_HH": exact_hh,
               "exact": bool(Ttgt.exact.get(n) and H.exact.get(n) and Tsrc.exact.get(n - 1)
                             and Tsrc.exact.get(n - 2))}
        row["ok"] = exact_hc and exact_hh and rIS == 0 and rBI == 0
        if row["exact"] and not row["ok"]:
            ok = False
        rows.append(row)
    # exactness at HC^{n-1}: ker(S out of it) = im B, read off the row of degree n+1
    by = {r["degree"]: r for r in rows}
    for r in rows:
        nxt = by.get(r["degree"] + 1)
        if nxt is None:
            continue
        r["exact_at_HC_n-1"] = r["HC_n-1"] - nxt["rank_S"] == r["rank_B"]
        r["SB"] = induced_rank(maps_at(r["degree"] + 1)["S"] @ maps_at(r["degree"])["B"],
                               _cocycles(H, r["degree"]), _coboundaries(Ttgt, r["degree"] + 1))
        r["ok"] = r["ok"] and r["exact_at_HC_n-1"] and r["SB"] == 0
        if r["exact"] and nxt["exact"] and not r["ok"]:
            ok = False
    return {"passed": ok, "rows": rows}


# cyclic Harrison and the coinvariant Hodge summands

def necklace_summand(j, S, window=None, cap=8, W=None):
    """Summand e(j) of the necklace complex (e(j+1) is the cyclic j-th piece)."""
    wdeg = S.wdeg
    W = W or cyclic_window(S, window, cap)
    vecs = {}
    for n in W.basis:
        vs = []
        for w in range(1, cap + 1):
            for v in eigen_basis(j, w, wdeg, "plain", n + 1):
                p = necklace_project(v, wdeg)
                if p:
                    vs.append(p)
        vecs[n] = vs
    R, subs = restrict(W, vecs, "cyclic_e%d" % j)
    return R


def cyclic_harrison_window(S, window=None, cap=8):
    if S.kind == "linf" or not check_cinfty(S).passed:
        raise NotCinfty("cyclic Harrison complex needs a C-infinity structure")
    R = necklace_summand(2, S, window, cap)
    R.theory = "cyclic_harrison"
    return R


# normalised cyclic complex

def normalised_cyclic_window(S, window=None, cap=8, require_minimal=False):
    """Subcomplex of tau-free necklaces, the projection to the field, and ranks.

    Returns a dict with the windows and, per degree, dims and induced ranks
    of iota (inclusion) and pi (set all t = 0).
    """
    if S.unit is None:
        raise NotUnital("normalised cyclic complex needs a unit")
    if require_minimal and not S.is_minimal:
        raise NotMinimal("the split sequence is stated for minimal structures")
    from .inftystruct import trivial_field
    wdeg = S.wdeg
    u = S.unit
    degs = _degrees(window)
    C = cyclic_window(S, degs, cap)
    sub_vecs = {n: [LinComb({w: 1}) for w in C.basis[n] if u not in w] for n in C.basis}
    Nrm, _ = restrict(C, sub_vecs, "cyclic_normalised")
    K = trivial_field()
    CK = cyclic_window(K, degs, cap)
    rows = []
    ok = True
    for n in C.degrees:
        idx = {w: k for k, w in enumerate(C.basis[n])}
        iota = RationalMatrix.from_columns(len(C.basis[n]),
                                           [{idx[w]: a for w, a in v.items()} for v in Nrm.basis[n]])
        kidx = {w: k for k, w in enumerate(CK.basis[n])}
        cols = []
        for w in C.basis[n]:
            if all(x == u for x in w):
                cols.append({kidx[(0,) * len(w)]: 1})
            else:
                cols.append({})
        pi = RationalMatrix.from_columns(len(CK.basis[n]), cols)
        hn, hc, hk = Nrm.cohomology(n), C.cohomology(n), CK.cohomology(n)
        r_iota = induced_rank(iota, kernel(Nrm.d[n]), _coboundaries(C, n))
        r_pi = induced_rank(pi, kernel(C.d[n]), _coboundaries(CK, n))
        split = r_iota == hn and r_pi == hk and hc == r_iota + r_pi
        rows.append({"degree": n, "HC_norm": hn, "HC": hc, "HC_field": hk,
                     "rank_iota": r_iota, "rank_pi": r_pi, "split": split,
                     "exact": C.exact.get(n, False)})
        if C.exact.get(n) and not split:
            ok = False
    return {"sub": Nrm, "full": C, "field": CK, "rows": rows, "split": ok}
