"""Cyclic operators, necklaces, the modified shuffle operator and its idempotents.

z moves the first letter of a word to the end with the Koszul sign.
s = (concatenation) o (shuffle coproduct); its eigenvalues on weight n are
2^1..2^n and e(j) are the Lagrange projectors onto them.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

import numpy as np

from .errors import EmptyWord
from .exactlin import (RationalMatrix, _P, _modp_rref, _primitive, int_kernel, matmul_modp,
                       qnorm, rank_and_kernel, reconstruct_rows)
from .gradedspace import LinComb, as_lincomb, enumerate_words


def _degs(degrees):
    return tuple(degrees.degrees if hasattr(degrees, "degrees") else degrees)


def rotate(w, k, degrees):
    """z^k on a word: the first k letters move to the end."""
    n = len(w)
    if n == 0:
        return w, 1
    k %= n
    if k == 0:
        return w, 1
    a = sum(degrees[x] for x in w[:k])
    b = sum(degrees[x] for x in w[k:])
    return w[k:] + w[:k], (-1 if (a * b) & 1 else 1)


def _homog(x):
    x = as_lincomb(x)
    x.weight()
    return x


def act_z(x, degrees):
    degrees = _degs(degrees)
    x = _homog(x)
    out = LinComb()
    for w, c in x.items():
        r, s = rotate(w, 1, degrees)
        out.add_term(r, s * c)
    return out


def act_N(x, degrees):
    degrees = _degs(degrees)
    x = _homog(x)
    out = LinComb()
    for w, c in x.items():
        for k in range(max(len(w), 1)):
            r, s = rotate(w, k, degrees)
            out.add_term(r, s * c)
    return out


def one_minus_z(x, degrees):
    x = as_lincomb(x)
    return x - act_z(x, degrees)


def partial_norm(w, k, degrees):
    """(1 + z + ... + z^{k-1}) on a single word, as a LinComb."""
    out = LinComb()
    for i in range(k):
        r, s = rotate(w, i, degrees)
        out.add_term(r, s)
    return out


# shuffle operator

def shuffle_word(w, degrees):
    """s on one word: sum over subsets S of x_S x_{S^c} with Koszul signs."""
    states = [((), (), 0, 0)]
    for x in w:
        d = degrees[x]
        nxt = []
        for front, back, odd, bdeg in states:
            nxt.append((front + (x,), back, odd + d * bdeg, bdeg))
            nxt.append((front, back + (x,), odd, bdeg + d))
        states = nxt
    out = {}
    for front, back, odd, _ in states:
        key = front + back
        out[key] = out.get(key, 0) + (-1 if odd & 1 else 1)
    return {k: v for k, v in out.items() if v}


def shuffle_s(x, degrees, variant="plain"):
    degrees = _degs(degrees)
    x = as_lincomb(x)
    out = LinComb()
    for w, c in x.items():
        if len(w) == 0:
            raise EmptyWord("s is applied to words of weight >= 1")
        if variant == "tilde":
            for t, a in shuffle_word(w[1:], degrees).items():
                out.add_term(w[:1] + t, a * c)
        else:
            for t, a in shuffle_word(w, degrees).items():
                out.add_term(t, a * c)
    return out


def s_bar(xi, degrees):
    """Apply s to every value of a derivation cochain (dict generator -> LinComb)."""
    return {g: shuffle_s(v, degrees) for g, v in xi.items()}


# idempotents, block by content

def _lagrange_den(j, n):
    d = 1
    for r in range(n + 1):
        if r != j:
            d *= (2 ** j - 2 ** r)
    return d


_SAFE = 1 << 62


def _matmul_exact(a, b):
    """Integer matrix product in int64 when safe, else Python ints."""
    if a.dtype != object and b.dtype != object:
        bound = int(np.abs(a).sum(axis=1).max(initial=0)) * int(np.abs(b).max(initial=0))
        if bound < _SAFE:
            return a @ b
    return a.astype(object) @ b.astype(object)


def _as_int64(K):
    """int64 copy of an object integer array when its entries fit, else K itself."""
    if K.size and int(np.abs(K).max()) >= (1 << 62):
        return K
    return K.astype(np.int64)


@lru_cache(maxsize=None)
def _content_block(content, degrees):
    """Words with this sorted content and the integer matrix of s on them."""
    words = tuple(sorted(set(permutations(content))))
    index = {w: i for i, w in enumerate(words)}
    m = len(words)
    S = np.zeros((m, m), dtype=np.int64)
    cols = []
    for col, w in enumerate(words):
        sw = shuffle_word(w, degrees)
        cols.append({index[t]: a for t, a in sw.items()})
        for t, a in sw.items():
            S[index[t], col] += a
    return words, index, S, tuple(cols)


def _block(w, degrees):
    return _content_block(tuple(sorted(w)), degrees)


@lru_cache(maxsize=None)
def block_idempotents(content, degrees):
    """Integer numerators P_j and denominators d_j with e_n(j) = P_j / d_j on a content block."""
    n = len(content)
    words, index, S, _ = _content_block(content, degrees)
    eye = np.eye(len(words), dtype=np.int64)
    nums = []
    for j in range(n + 1):
        P = eye
        for r in range(n + 1):
            if r != j:
                P = _matmul_exact(P, S - (2 ** r) * eye)
        nums.append(P)
    return nums, [_lagrange_den(j, n) for j in range(n + 1)]


@lru_cache(maxsize=200000)
def _e_tail(j, tail, degrees):
    n = len(tail)
    words, index, _, cols = _block(tail, degrees)
    v = {index[tail]: 1}
    for r in range(n + 1):
        if r == j:
            continue
        lam = 2 ** r
        nv = {}
        for i, a in v.items():
            for k, b in cols[i].items():
                nv[k] = nv.get(k, 0) + a * b
            nv[i] = nv.get(i, 0) - lam * a
        v = {k: a for k, a in nv.items() if a}
    den = _lagrange_den(j, n)
    return tuple((words[i], qnorm(Fraction(a, den))) for i, a in v.items())


def e_word(j, w, degrees, variant="plain"):
    """e(j) (or ẽ(j)) applied to a single word, as a dict word -> rational."""
    if variant == "tilde":
        if not w:
            raise EmptyWord("ẽ needs weight >= 1")
        head, tail = w[:1], w[1:]
    else:
        head, tail = (), w
    if j > len(tail) or j < 0:
        return {}
    return {head + t: a for t, a in _e_tail(j, tail, degrees)}


def apply_e(j, x, degrees, variant="plain"):
    degrees = _degs(degrees)
    x = as_lincomb(x)
    out = LinComb()
    for w, c in x.items():
        for t, a in e_word(j, w, degrees, variant).items():
            out.add_term(t, a * c)
    return out


def idempotent_e(j, weight, degrees, variant="plain", degree=None):
    """Matrix of e_n(j) (or ẽ_{n-1}(j)) on enumerate_words(weight) order."""
    degrees = _degs(degrees)
    if weight < 1:
        raise EmptyWord("weight must be >= 1")
    words = enumerate_words(degrees, weight, degree)
    index = {w: i for i, w in enumerate(words)}
    cols = []
    for w in words:
        cols.append({index[t]: a for t, a in e_word(j, w, degrees, variant).items()})
    return RationalMatrix.from_columns(len(words), cols)


def block_operators(content, degrees):
    """Integer matrices of s, s̃, z and N on the words of one content block."""
    degrees = _degs(degrees)
    content = tuple(sorted(content))
    words, index, S, _ = _content_block(content, degrees)
    m = len(words)
    St = np.zeros((m, m), dtype=np.int64)
    Z = np.zeros((m, m), dtype=np.int64)
    N = np.zeros((m, m), dtype=np.int64)
    for c, w in enumerate(words):
        for t, a in shuffle_s({w: 1}, degrees, "tilde").items():
            St[index[t], c] += a
        r, sg = rotate(w, 1, degrees)
        Z[index[r], c] += sg
        for t, a in act_N({w: 1}, degrees).items():
            N[index[t], c] += a
    return {"words": words, "s": S.copy(), "s_tilde": St, "z": Z, "N": N}


def block_tilde_idempotents(content, degrees):
    """Numerators and denominators of ẽ(j) on a content block (head letter fixed)."""
    degrees = _degs(degrees)
    content = tuple(sorted(content))
    words, index, _, _ = _content_block(content, degrees)
    n = len(content)
    m = len(words)
    nums = [np.zeros((m, m), dtype=object) for _ in range(n)]
    for c, w in enumerate(words):
        tail = tuple(sorted(w[1:]))
        twords, tindex, _, _ = _content_block(tail, degrees)
        tn, _ = block_idempotents(tail, degrees)
        col = tindex[w[1:]]
        for j in range(n):
            P = tn[j]
            for i in np.nonzero(P[:, col])[0]:
                nums[j][index[w[:1] + twords[i]], c] += int(P[i, col])
    return nums, [_lagrange_den(j, n - 1) for j in range(n)]


def operator_matrix(fn, src, tgt=None):
    """Matrix of a word -> LinComb function from basis src into basis tgt.

    Terms outside tgt raise KeyError, so the caller notices leakage.
    """
    tgt = src if tgt is None else tgt
    index = {w: i for i, w in enumerate(tgt)}
    cols = []
    for w in src:
        img = fn(w)
        cols.append({index[t]: a for t, a in img.items()})
    return RationalMatrix.from_columns(len(tgt), cols)


def s_matrix(weight, degrees, variant="plain", degree=None):
    degrees = _degs(degrees)
    words = enumerate_words(degrees, weight, degree)
    return operator_matrix(lambda w: shuffle_s({w: 1}, degrees, variant), words)


def z_matrix(weight, degrees, degree=None):
    degrees = _degs(degrees)
    words = enumerate_words(degrees, weight, degree)
    return operator_matrix(lambda w: act_z({w: 1}, degrees), words)


def N_matrix(weight, degrees, degree=None):
    degrees = _degs(degrees)
    words = enumerate_words(degrees, weight, degree)
    return operator_matrix(lambda w: act_N({w: 1}, degrees), words)


@lru_cache(maxsize=None)
def _block_spectrum(content, degrees):
    """Reduced eigenbases of s on a content block, all j at once.

    The projector numerators prod_{r != j}(S - 2^r) are formed mod p from
    the powers of S, their row spaces reduced mod p, lifted to Q and each
    vector checked exactly against S v = 2^j v.  Since s is diagonalizable,
    verified independent eigenvectors with total count = block size are
    complete.  Any failure falls back to exact kernels.
    """
    words, index, S, _ = _content_block(content, degrees)
    n, m = len(content), len(words)
    out = {}
    powers = [np.eye(m, dtype=np.int64)]
    for _ in range(n):
        powers.append(matmul_modp(powers[-1], S))
    for j in range(n + 1):
        coeffs = [1]
        for r in range(n + 1):
            if r != j:
                c = -(2 ** r)
                coeffs = [a + c * b for a, b in zip([0] + coeffs, coeffs + [0])]
        P = np.zeros((m, m), dtype=np.int64)
        for k, c in enumerate(coeffs):
            if c:
                P = (P + (c % _P) * powers[k] % _P) % _P
        R, piv = _modp_rref(P.T.copy())
        rows = reconstruct_rows(R)
        if rows is None:
            return None
        out[j] = list(zip(piv, rows))
    if sum(len(v) for v in out.values()) != m:
        return None
    for j, pairs in out.items():
        if not pairs:
            continue
        K = np.zeros((m, len(pairs)), dtype=object)
        for k, (_, v) in enumerate(pairs):
            for i, x in _primitive(v).items():
                K[i, k] = x
        A = S - (2 ** j) * np.eye(m, dtype=np.int64)
        if np.any(_matmul_exact(A, _as_int64(K))):
            return None
    return out


@lru_cache(maxsize=None)
def _block_eigvecs(j, content, degrees):
    """Primitive integer basis of ker(s - 2^j) on a content block.

    Entries are (pivot word, pivot coefficient, vector); distinct vectors
    vanish at each other's pivots.
    """
    words, index, S, _ = _content_block(content, degrees)
    if j > len(content):
        return ()
    spec = _block_spectrum(content, degrees)
    if spec is not None:
        pairs = spec[j]
    else:
        pairs = int_kernel(S - (2 ** j) * np.eye(len(words), dtype=np.int64))
    out = []
    for f, v in pairs:
        v = _primitive(v)
        out.append((words[f], v[f], tuple((words[i], a) for i, a in sorted(v.items()))))
    return tuple(out)


def _contents(degrees, weight, degree):
    """Sorted letter multisets of the given weight (and total degree)."""
    out = []
    for c in combinations_with_replacement(range(len(degrees)), weight):
        if degree is None or sum(degrees[x] for x in c) == degree:
            out.append(c)
    return out


@lru_cache(maxsize=4096)
def _eigen_blocks(j, weight, degrees, variant, degree):
    """(pivot word, pivot coeff, vector) triples for the image of e(j) or ẽ(j)."""
    out = []
    if variant == "tilde":
        if weight < 1:
            return ()
        for h in range(len(degrees)):
            rest = None if degree is None else degree - degrees[h]
            for c in _contents(degrees, weight - 1, rest):
                for piv, a0, vec in _block_eigvecs(j, c, degrees):
                    out.append(((h,) + piv, a0, tuple(((h,) + t, a) for t, a in vec)))
    else:
        for c in _contents(degrees, weight, degree):
            out.extend(_block_eigvecs(j, c, degrees))
    out.sort(key=lambda e: e[0])
    return tuple(out)


def eigen_basis(j, weight, degrees, variant="plain", degree=None):
    """Basis (list of LinComb) of the image of e(j) on words of this weight/degree.

    The image of e(j) is the 2^j-eigenspace of s, found block by block
    (s preserves the multiset of letters), so each vector lives in one block.
    """
    blocks = _eigen_blocks(j, weight, tuple(_degs(degrees)), variant, degree)
    return [LinComb(dict(vec)) for _, _, vec in blocks]


def eigen_pairs(j, weight, degrees, variant="plain", degree=None):
    """Like eigen_basis, but as (pivot word, vector with 1 at the pivot).

    Distinct vectors vanish at each other's pivots, so the list is already
    in reduced echelon form.
    """
    blocks = _eigen_blocks(j, weight, tuple(_degs(degrees)), variant, degree)
    return [(piv, LinComb({t: Fraction(a, a0) for t, a in vec})) for piv, a0, vec in blocks]


def eigen_dim(j, weight, degrees, variant="plain", degree=None):
    return len(eigen_basis(j, weight, degrees, variant, degree))


# necklaces

def necklace(w, degrees):
    """(representative, sign) with w = sign * representative in the coinvariants.

    The representative is the lexicographically least rotation; (None, 0)
    when the orbit identifies w with -w.
    """
    n = len(w)
    if n <= 1:
        return w, 1
    best = None
    best_sign = 0
    for k in range(n):
        r, s = rotate(w, k, degrees)
        if best is None or r < best:
            best, best_sign = r, s
        elif r == best and s != best_sign:
            return None, 0
    # a sign clash can also hide behind an earlier minimum
    for k in range(n):
        r, s = rotate(w, k, degrees)
        if r == best and s != best_sign:
            return None, 0
    return best, best_sign


def necklace_project(x, degrees):
    degrees = _degs(degrees)
    x = as_lincomb(x)
    out = LinComb()
    for w, c in x.items():
        r, s = necklace(w, degrees)
        if r is not None:
            out.add_term(r, s * c)
    return out


def necklace_basis(degrees, weight, degree=None):
    """Canonical nonzero necklace representatives in lex order."""
    degrees = _degs(degrees)
    out = []
    for w in enumerate_words(degrees, weight, degree):
        r, s = necklace(w, degrees)
        if r == w and s == 1:
            out.append(w)
    return out
