"""Hodge decompositions of the bar, Hochschild and cyclic complexes.

Summands are eigenspaces of the shuffle operator: e(j) on bar words and
necklaces, ẽ(j) on Theta-words, e(j) on the values of adjoint cochains.
Each summand is cut out of the full window with homcomplex.restrict, so
block-diagonality is the statement that every summand is invariant.
"""
import csv
import io
from dataclasses import dataclass, field

from .cyclicshuffle import act_N, eigen_basis, eigen_pairs, necklace_project
from .cycliccomplex import (_coboundaries, _cocycles, _les_report, cyclic_window,
                            periodicity_maps, tsygan_cap, tsygan_window)
from .errors import NotCinfty, NotMinimal, NotUnital
from .exactlin import RationalMatrix, Subspace, cohomology_dim, induced_rank, kernel
from .gradedspace import LinComb
from .homcomplex import (ComplexWindow, _degrees, bar_differential, hochschild_b, restrict)
from .inftystruct import check_cinfty, trivial_field


@dataclass
class HodgeTable:
    theory: str
    dims: dict = field(default_factory=dict)       # (n, j) -> dim, or (n, j, order) -> dim
    totals: dict = field(default_factory=dict)     # n -> undecomposed dim
    exact: dict = field(default_factory=dict)
    block_diagonal: bool = True
    info: dict = field(default_factory=dict)

    def js(self):
        return sorted({k[1] for k in self.dims})

    def degrees(self):
        return sorted(self.totals)

    def dim(self, n, j):
        return sum(v for k, v in self.dims.items() if k[0] == n and k[1] == j)

    def row_sum(self, n):
        return sum(v for k, v in self.dims.items() if k[0] == n)

    def sums_ok(self):
        """Row sums equal the undecomposed dims in every weight-complete degree."""
        return all(self.row_sum(n) == self.totals[n] for n in self.totals if self.exact.get(n))

    def rows(self):
        out = []
        for k in sorted(self.dims, key=lambda k: tuple(-1 if x is None else x for x in k)):
            n, j = k[0], k[1]
            order = k[2] if len(k) > 2 else None
            out.append({"degree": n, "order": order, "j": j, "dim": self.dims[k],
                        "exact": bool(self.exact.get(n))})
        return out

    def to_csv(self):
        buf = io.StringIO()
        w = csv.DictWriter(buf, ["degree", "order", "j", "dim", "exact"], lineterminator="\n")
        w.writeheader()
        for r in self.rows():
            w.writerow({k: ("" if v is None else v) for k, v in r.items()})
        return buf.getvalue()


def _require_cinf(S):
    if S.kind == "linf" or not check_cinfty(S).passed:
        raise NotCinfty("Hodge decomposition needs a C-infinity structure")


def _summand_vectors(W, j, wdeg, which, cap):
    """Per degree, the summand-j vectors; (pivot, vector) pairs except for cyclic."""
    vecs = {}
    for n in W.basis:
        vs = []
        if which == "bar":
            for w in range(1, cap + 1):
                vs.extend(eigen_pairs(j, w, wdeg, "plain", n + 1))
        elif which == "dual":
            for w in range(1, cap + 1):
                vs.extend(eigen_pairs(j, w, wdeg, "tilde", n + 1))
        elif which == "adjoint":
            for g, dg in enumerate(wdeg):
                D = n - 1 + dg
                if j == 0 and D == 0:
                    vs.append(((g, ()), LinComb({(g, ()): 1})))
                for w in range(1, cap + 1):
                    for p, v in eigen_pairs(j, w, wdeg, "plain", D):
                        vs.append(((g, p), LinComb({(g, t): a for t, a in v.items()})))
        elif which == "cyclic":
            for w in range(1, cap + 1):
                for v in eigen_basis(j + 1, w, wdeg, "plain", n + 1):
                    p = necklace_project(v, wdeg)
                    if p:
                        vs.append(p)
        vecs[n] = vs
    return vecs


def _weight_of(lab):
    if isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[1], tuple):
        return len(lab[1])
    return len(lab)


def _split_by_order(vecs, reduced):
    """Split weight-homogeneous vectors by weight - degree (preserved by a strict m)."""
    out = {}
    for n, vs in vecs.items():
        for v in vs:
            lab = v[0] if reduced else next(iter(v))
            out.setdefault(_weight_of(lab) - n, {}).setdefault(n, []).append(v)
    return out


def _order(which, n, k):
    """Order of a degree-n cochain in strand k = weight - degree.

    0-forms (bar, cyclic) have order = weight, 1-forms one less.
    """
    w = n + k
    return w - 1 if which in ("dual", "adjoint") else w


def _decompose(W, S, which, cap, jrange, by_order):
    wdeg = S.wdeg
    reduced = which != "cyclic"
    T = HodgeTable(W.theory)
    T.totals = {n: W.cohomology(n) for n in W.degrees}
    T.exact = {n: W.exact.get(n, False) for n in W.degrees}
    spanned = {n: 0 for n in W.basis}
    summands = {}
    leaks = {}
    for j in jrange:
        vecs = _summand_vectors(W, j, wdeg, which, cap)
        R, subs = restrict(W, vecs, "%s_j%d" % (W.theory, j), reduced)
        summands[j] = R
        if not R.info["invariant"]:
            T.block_diagonal = False
            leaks[j] = R.info["leaks"]
        for n in subs:
            spanned[n] += subs[n].dim
        if by_order and R.info["invariant"]:
            for k, vk in _split_by_order(vecs, reduced).items():
                Rk, _ = restrict(W, {n: vk.get(n, []) for n in W.basis}, None, reduced)
                for n in W.degrees:
                    if n in Rk.d and n - 1 in Rk.d and (vk.get(n) or Rk.cohomology(n)):
                        T.dims[(n, j, _order(which, n, k))] = Rk.cohomology(n)
        else:
            for n in W.degrees:
                if n in R.d and n - 1 in R.d:
                    T.dims[(n, j)] = R.cohomology(n)
    # eigenspaces for distinct eigenvalues are independent, so counting suffices
    complete = all(spanned[n] == len(W.basis[n]) for n in W.basis)
    T.info.update({"complete_splitting": complete, "leaks": leaks, "cap": cap,
                   "summands": summands})
    T.block_diagonal = T.block_diagonal and complete
    return T


def decompose_hochschild(S, window=None, cap=8, which="dual", by_order=None):
    """HodgeTable of the bar (e(j)), dual Hochschild (ẽ(j)) or adjoint complex."""
    _require_cinf(S)
    if which == "bar":
        W = bar_differential(S, window, cap)
    elif which in ("dual", "adjoint"):
        W = hochschild_b(S, window, cap, which)
    else:
        raise ValueError("which must be 'bar', 'dual' or 'adjoint'")
    if by_order is None:
        by_order = S.is_strict
    return _decompose(W, S, which, cap, range(0, cap + 1), by_order)


# cyclic

def gamma_strip_vectors(S, T, j):
    """Γ_j inside the Tsygan window: columns Q̃_j, Q_j, Q̃_{j-1}, ..., Q_1, Q̃_0.

    Column 2i carries the ẽ(j-i) summand of Theta-words, column 2i+1 the
    e(j-i) summand of bar words.  The width is 2j+1 (Q_0 vanishes).
    """
    wdeg = S.wdeg
    vecs = {}
    for n in T.basis:
        vs = []
        for c in range(0, 2 * j + 1):
            i, odd = divmod(c, 2)
            jj = j - i
            cc = tsygan_cap(T.cap, c)
            D = n + 1 - c
            if D < 1:
                continue
            for w in range(1, cc + 1):
                for p, v in eigen_pairs(jj, w, wdeg, "plain" if odd else "tilde", D):
                    vs.append(((c, p), LinComb({(c, t): a for t, a in v.items()})))
        vecs[n] = vs
    return vecs


def gamma_strip(S, T, j):
    R, subs = restrict(T, gamma_strip_vectors(S, T, j), "gamma_%d" % j, True)
    R.info["width"] = 2 * j + 1
    return R, subs


def decompose_cyclic(S, window=None, cap=8, model="coinvariant", by_order=None):
    _require_cinf(S)
    if by_order is None:
        by_order = S.is_strict
    if model == "coinvariant":
        W = cyclic_window(S, window, cap)
        return _decompose(W, S, "cyclic", cap, range(0, cap), by_order)
    if model == "tsygan":
        if S.unit is None:
            raise NotUnital("the Tsygan model of the splitting needs a unit")
        T = tsygan_window(S, window, cap)
        H = HodgeTable("tsygan")
        H.totals = {n: T.cohomology(n) for n in T.degrees}
        H.exact = {n: T.exact.get(n, False) for n in T.degrees}
        spanned = {n: 0 for n in T.basis}
        strips = {}
        for j in range(0, cap):
            R, subs = gamma_strip(S, T, j)
            strips[j] = R
            if not R.info["invariant"]:
                H.block_diagonal = False
            for n in subs:
                spanned[n] += subs[n].dim
            for n in T.degrees:
                if n in R.d and n - 1 in R.d:
                    H.dims[(n, j)] = R.cohomology(n)
        complete = all(spanned[n] == len(T.basis[n]) for n in T.basis)
        H.block_diagonal = H.block_diagonal and complete
        H.info.update({"complete_splitting": complete, "strips": strips, "cap": cap})
        return H
    raise ValueError("model must be 'coinvariant' or 'tsygan'")


# decomposed long exact sequences

def _embed(sub):
    return RationalMatrix.from_columns(sub.ambient_dim, sub.basis)


def _coords(sub, M):
    """Matrix of M (landing in sub) in sub's echelon coordinates."""
    cols = []
    for c in M.columns():
        cols.append({k: a for k, a in enumerate(sub.coordinates(c)) if a})
    return RationalMatrix.from_columns(sub.dim, cols)


def _two_column_maps(S, T, T2, n):
    """Shift, projection onto columns 0-1, and the connecting map (y0, y1) -> N y1."""
    wdeg = S.wdeg
    out = {}
    tgt = {lab: k for k, lab in enumerate(T.basis[n])}
    if n - 2 in T.basis:
        cols = []
        for c, w in T.basis[n - 2]:
            lab = (c + 2, w)
            cols.append({tgt[lab]: 1} if lab in tgt else {})
        out["S"] = RationalMatrix.from_columns(len(T.basis[n]), cols)
    idx2 = {lab: k for k, lab in enumerate(T2.basis[n])}
    out["I"] = RationalMatrix.from_columns(
        len(T2.basis[n]), [{idx2[lab]: 1} if lab in idx2 else {} for lab in T.basis[n]])
    if n - 1 in T.basis:
        low = {lab: k for k, lab in enumerate(T.basis[n - 1])}
        cols = []
        for c, w in T2.basis[n]:
            col = {}
            if c == 1:
                for t, a in act_N({w: 1}, wdeg).items():
                    if (0, t) in low:
                        col[low[(0, t)]] = a
            cols.append(col)
        out["B"] = RationalMatrix.from_columns(len(T.basis[n - 1]), cols)
    return out


def _restricted_maps(S, T, T2, strips, pairs, j, n):
    """S, I, B of the periodicity sequence restricted to summand j."""
    full = _two_column_maps(S, T, T2, n)
    src_sub, tgt_sub = strips[j][1], strips[j + 1][1]
    psub = pairs[j + 1][1]
    out = {}
    if "S" in full:
        out["S"] = _coords(tgt_sub[n], full["S"] @ _embed(src_sub[n - 2]))
    out["I"] = _coords(psub[n], full["I"] @ _embed(tgt_sub[n]))
    if "B" in full:
        out["B"] = _coords(src_sub[n - 1], full["B"] @ _embed(psub[n]))
    return out


def _periodicity_summands(S, window, cap, jrange):
    """Γ_j strips, and for each j the two-column quotient (Q̃_j -> Q_j) of Γ_j."""
    degs = _degrees(window)
    # negative degrees are zero for connective inputs; they give the first nodes
    degs = list(range(min(min(degs), 0) - 2, max(degs) + 1))
    T = tsygan_window(S, degs, cap)
    T2 = tsygan_window(S, degs, cap, max_column=1)
    strips = {}
    pairs = {}
    for j in range(min(jrange), max(jrange) + 2):
        strips[j] = gamma_strip(S, T, j)
        vecs = {n: [(lab, v) for lab, v in gamma_strip_vectors(S, T2, j)[n] if lab[0] <= 1]
                for n in T2.basis}
        pairs[j] = restrict(T2, vecs, "pair_%d" % j, True)
    return T, T2, strips, pairs, degs


def _m1_cohomology(S, window, cap):
    """H(V*) from the linear part of m alone: weight-one words, b(x) = -m_1(x)."""
    from .homcomplex import _assemble, hochschild_word
    wdeg = S.wdeg
    return _assemble("m1", lambda n: [(g,) for g in range(len(wdeg)) if wdeg[g] == n + 1],
                     lambda w: hochschild_word(S, w, 1), _degrees(window), cap, lambda n: True)


def verify_decomposed_les(S, window=None, cap=8, kind="periodicity", jrange=None):
    """Rank bookkeeping for the Hodge pieces of the cyclic sequences.

    periodicity: HC_(j)^{n-2} -> HC_(j+1)^n -> HH_(j+1)^n -> HC_(j)^{n-1}, all j.
    harrison: the j = 0 case, where HC_(0) is H(V*) computed from m_1.
    normalised: per j, the normalised subcomplex, full complex and field.
    """
    _require_cinf(S)
    if S.unit is None:
        raise NotUnital("the decomposed sequences need a unit")
    if kind == "normalised":
        return _normalised_les(S, window, cap, jrange)
    if kind == "harrison":
        jrange = [0]
    elif jrange is None:
        jrange = range(0, cap - 1)
    T, T2, strips, pairs, degs = _periodicity_summands(S, window, cap, jrange)
    Hfull = hochschild_b(S, degs, cap, "dual")
    report = {"kind": kind, "passed": True, "per_j": {}}
    for j in jrange:
        R = _les_report(strips[j][0], pairs[j + 1][0],
                        lambda n, j=j: _restricted_maps(S, T, T2, strips, pairs, j, n),
                        degs, strips[j + 1][0])
        # the pair (Q̃_{j+1} -> Q_{j+1}) computes HH_(j+1) since Q_{j+1} is acyclic
        hh, _ = restrict(Hfull, _summand_vectors(Hfull, j + 1, S.wdeg, "dual", cap), None, True)
        for r in R["rows"]:
            n = r["degree"]
            r["HH_direct"] = hh.cohomology(n)
            r["pair_matches_HH"] = r["HH_direct"] == r["HH_n"]
            if r["exact"] and not r["pair_matches_HH"]:
                R["passed"] = False
        report["per_j"][j] = R
        report["passed"] = report["passed"] and R["passed"]
    if kind == "harrison":
        M = _m1_cohomology(S, degs, cap)
        G0 = strips[0][0]
        cmp = {n: (M.cohomology(n), G0.cohomology(n)) for n in M.degrees if n in G0.degrees}
        report["H_Vstar"] = {n: a for n, (a, b) in cmp.items()}
        report["H_Vstar_matches_strip"] = all(a == b for a, b in cmp.values())
        report["passed"] = report["passed"] and report["H_Vstar_matches_strip"]
        report["rows"] = report["per_j"][0]["rows"]
    return report


def harrison_I_behaviour(S, window=None, cap=8):
    """Per degree i: is I: HCHarr^i -> HHarr^i injective / surjective."""
    rep = verify_decomposed_les(S, window, cap, "harrison")
    out = {}
    for r in rep["rows"]:
        i = r["degree"]
        out[i] = {"injective": r["rank_I"] == r["HC_n"], "surjective": r["rank_I"] == r["HH_n"],
                  "HCHarr": r["HC_n"], "HHarr": r["HH_n"], "rank_I": r["rank_I"],
                  "exact": r["exact"]}
    return out


def _normalised_les(S, window, cap, jrange):
    if not S.is_minimal:
        raise NotMinimal("the split sequence is stated for minimal structures")
    degs = _degrees(window)
    K = trivial_field()
    C = cyclic_window(S, degs, cap)
    CK = cyclic_window(K, degs, cap)
    u = S.unit
    report = {"kind": "normalised", "passed": True, "per_j": {}}
    for j in (jrange if jrange is not None else range(0, cap)):
        vecs = _summand_vectors(C, j, S.wdeg, "cyclic", cap)
        full, fsubs = restrict(C, vecs)
        sub, ssubs = restrict(C, {n: [v for v in vs if all(u not in w for w in v)]
                                  for n, vs in vecs.items()})
        kv = _summand_vectors(CK, j, K.wdeg, "cyclic", cap)
        fld, ksubs = restrict(CK, kv)
        rows = []
        for n in C.degrees:
            if n not in full.d or n - 1 not in full.d:
                continue
            iota = _coords(fsubs[n], _embed(ssubs[n]))
            kidx = {w: k for k, w in enumerate(CK.basis[n])}
            cols = []
            for w in C.basis[n]:
                cols.append({kidx[(0,) * len(w)]: 1} if all(x == u for x in w) else {})
            pi_full = RationalMatrix.from_columns(len(CK.basis[n]), cols)
            pi = _coords(ksubs[n], pi_full @ _embed(fsubs[n]))
            hn, hc, hk = sub.cohomology(n), full.cohomology(n), fld.cohomology(n)
            ri = induced_rank(iota, kernel(sub.d[n]), _coboundaries(full, n))
            rp = induced_rank(pi, kernel(full.d[n]), _coboundaries(fld, n))
            split = ri == hn and rp == hk and hc == ri + rp
            rows.append({"degree": n, "HC_norm": hn, "HC": hc, "HC_field": hk,
                         "rank_iota": ri, "rank_pi": rp, "split": split,
                         "exact": C.exact.get(n, False)})
            if C.exact.get(n) and not split:
                report["passed"] = False
        report["per_j"][j] = {"rows": rows}
    return report
