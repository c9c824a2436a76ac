"""Word-level identity checks shared by the CLI, the demos and the tests.

Every identity is an equality of operators on a space of words, checked
as a matrix identity (per content block for the spectral ones, on each
basis word for the differential ones).
"""
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, lcm

import numpy as np

from .cyclicshuffle import (_as_int64, _matmul_exact, act_N, act_z, block_idempotents,
                            block_operators, block_tilde_idempotents, shuffle_s)
from .gradedspace import LinComb, enumerate_words
from .homcomplex import adjoint_word, hochschild_word
from .inftystruct import Report

BIG = 10 ** 6


def _words(degrees, n):
    return [LinComb({w: 1}) for w in enumerate_words(degrees, n)]


def _s(x, degrees, variant="plain"):
    """s, with s = id on the empty word."""
    out = LinComb({(): x[()]}) if () in x else LinComb()
    rest = LinComb({w: c for w, c in x.items() if w})
    return out + shuffle_s(rest, degrees, variant) if rest else out


def _by_weight(op, x, degrees):
    out = LinComb()
    for n in x.weights():
        out.add(op(x.weight_part(n), degrees))
    return out


def _N(x, degrees):
    return _by_weight(act_N, x, degrees)


def _one_minus_z(x, degrees):
    return x - _by_weight(act_z, x, degrees)


def _primitive_matrix(P, den):
    """(Q, D) with P / den = Q / D and gcd(D, entries of Q) = 1."""
    g = reduce(gcd, (int(x) for x in P.flat), int(den))
    if den < 0:
        g = -g
    Q = np.array([[int(x) // g for x in row] for row in P], dtype=object)
    return _as_int64(Q), int(den) // g


def _eq(a, b):
    return bool(np.array_equal(np.asarray(a, dtype=object), np.asarray(b, dtype=object)))


def _block_check(content, degrees):
    """The identities on one block of words with fixed letter content."""
    n = len(content)
    ops = block_operators(content, degrees)
    S, St, Z, N = ops["s"], ops["s_tilde"], ops["z"], ops["N"]
    m = len(ops["words"])
    eye = np.eye(m, dtype=np.int64)
    nums, dens = block_idempotents(content, degrees)
    E = [_primitive_matrix(P, d) for P, d in zip(nums, dens)]
    tn, tdens = block_tilde_idempotents(content, degrees)
    Et = [_primitive_matrix(P, d) for P, d in zip(tn, tdens)]
    mul = _matmul_exact
    ok = {}
    # P_n = prod_{r<n}(s - 2^r), so (s - 2^n) P_n is nu_n(s) up to the scalar d_n
    ok["nu_n(s)=0"] = not mul(S - (2 ** n) * eye, nums[n]).any()
    L = reduce(lcm, (D for _, D in E), 1)
    total = sum(Q.astype(object) * (L // D) for Q, D in E)
    ok["sum_e"] = _eq(total, eye.astype(object) * L)
    orth = True
    for i, (Qi, Di) in enumerate(E):
        for j, (Qj, Dj) in enumerate(E):
            prod = mul(Qi, Qj)
            want = Qi.astype(object) * Dj if i == j else np.zeros((m, m), dtype=object)
            orth = orth and _eq(prod, want)
    ok["orthogonal"] = orth
    ok["2s~N=Ns"] = _eq(2 * mul(St, N), mul(N, S))
    ok["s(1-z)=(1-z)s~"] = _eq(mul(S, eye - Z), mul(eye - Z, St))
    good = True
    for j in range(0, n):
        Qt, Dt = Et[j]
        Q1, D1 = E[j + 1]
        good = good and _eq(mul(Qt, N).astype(object) * D1, mul(N, Q1).astype(object) * Dt)
    ok["e~N=Ne"] = good
    good = True
    for j in range(0, n + 1):
        Q, D = E[j]
        lhs = mul(Q, eye - Z).astype(object)
        if j < n:
            Qt, Dt = Et[j]
            rhs = mul(eye - Z, Qt).astype(object) * D
            good = good and _eq(lhs * Dt, rhs)
        else:
            good = good and not lhs.any()
    ok["e(1-z)=(1-z)e~"] = good
    return ok


def spectral_identities(degrees, max_weight=6):
    """Minimal polynomial, idempotent and intertwining identities for s, z, N.

    Per weight n: nu_n(s) = prod_{i=0..n}(s - 2^i) = 0, sum_j e(j) = id,
    e(i)e(j) = delta_ij e(i), 2 s~ N = N s, s(1-z) = (1-z)s~,
    e~(j)N = N e(j+1) and e(j)(1-z) = (1-z)e~(j) (with e~(n) = 0).
    All operators preserve the multiset of letters, so each identity is an
    exact integer matrix identity on every content block.
    """
    degrees = tuple(degrees)
    rep = Report("spectral", info={"degrees": list(degrees), "rows": []})
    names = ("nu_n(s)=0", "sum_e", "orthogonal", "2s~N=Ns", "s(1-z)=(1-z)s~",
             "e~N=Ne", "e(1-z)=(1-z)e~")
    for n in range(1, max_weight + 1):
        ok = {k: True for k in names}
        first = {}
        for content in combinations_with_replacement(range(len(degrees)), n):
            for k, v in _block_check(content, degrees).items():
                if not v and ok[k]:
                    ok[k] = False
                    first[k] = list(content)
        rep.info["rows"].append({"weight": n, **ok})
        for k, v in ok.items():
            if not v:
                rep.fail(identity=k, weight=n, content=first[k])
    return rep


def differential_identities(S, max_weight=4, identities=None):
    """bN = -Nb', b'(1-z) = -(1-z)b, s b' = b' s, s~ b = b s~ and s̄ ad(m) = ad(m) s̄."""
    wdeg = S.wdeg
    names = identities or ("bN=-Nb'", "b'(1-z)=-(1-z)b", "sb'=b's", "s~b=bs~", "s̄ad=ads̄")
    rep = Report("differential", info={"structure": S.name, "rows": []})

    def b(x):
        out = LinComb()
        for w, c in x.items():
            out.add(hochschild_word(S, w, BIG), c)
        return out

    def bp(x):
        return S.apply(x, BIG)

    def ad(x):
        out = LinComb()
        for k, c in x.items():
            out.add(adjoint_word(S, k, BIG), c)
        return out

    def sbar(x):
        out = LinComb()
        for (g, u), c in x.items():
            for t, a in _s(LinComb({u: 1}), wdeg).items():
                out.add_term((g, t), a * c)
        return out

    for n in range(1, max_weight + 1):
        ok = {k: True for k in names}
        first = {}
        for x in _words(wdeg, n):
            checks = {
                "bN=-Nb'": lambda: b(_N(x, wdeg)) + _N(bp(x), wdeg),
                "b'(1-z)=-(1-z)b": lambda: bp(_one_minus_z(x, wdeg)) + _one_minus_z(b(x), wdeg),
                "sb'=b's": lambda: _s(bp(x), wdeg) - bp(shuffle_s(x, wdeg)),
                "s~b=bs~": lambda: _s_tilde(b(x), wdeg) - b(shuffle_s(x, wdeg, "tilde")),
            }
            for k, f in checks.items():
                if k in ok and ok[k] and f():
                    ok[k] = False
                    first[k] = [S.wbasis.names[g] for g in next(iter(x))]
        if "s̄ad=ads̄" in ok:
            for g in range(len(wdeg)):
                for x in _words(wdeg, n - 1) if n > 1 else [LinComb({(): 1})]:
                    xi = LinComb({(g, w): c for w, c in x.items()})
                    if sbar(ad(xi)) != ad(sbar(xi)):
                        ok["s̄ad=ads̄"] = False
        row = {"weight": n, **ok}
        rep.info["rows"].append(row)
        for k, v in ok.items():
            if not v:
                rep.fail(identity=k, weight=n, witness=first.get(k))
    return rep


def _s_tilde(x, degrees):
    out = LinComb()
    for w, c in x.items():
        if len(w) == 1:
            out.add_term(w, c)
        elif w:
            out.add(shuffle_s(LinComb({w: 1}), degrees, "tilde"), c)
    return out
