"""Independent reference computations for the tests.

Nothing here imports the engine's linear algebra or operators: ranks use a
plain Fraction elimination, brackets and rotations are recoded.
"""
from fractions import Fraction
from itertools import product


def exact_rank(rows):
    """Rank of a list of dense rows (any numbers) by Gaussian elimination over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def dict_rank(vectors):
    """Rank of a list of {key: coeff} vectors."""
    keys = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return exact_rank(rows)


def same_span(A, B):
    ra, rb = dict_rank(A), dict_rank(B)
    return ra == rb == dict_rank(list(A) + list(B))


# classical Hochschild homology of a finite dimensional algebra

def hochschild_chain_dims(mult, dim, top):
    """dim HH_n(A) for n <= top, from the chain complex A^{(n+1)} with the classical b.

    mult[(i, j)] = {k: c} are structure constants; HH^n(A, A*) is its dual.
    """
    def b_matrix(n):
        src = list(product(range(dim), repeat=n + 1))
        tgt = list(product(range(dim), repeat=n))
        index = {t: i for i, t in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for c, a in enumerate(src):
            for i in range(n):
                for k, v in mult.get((a[i], a[i + 1]), {}).items():
                    t = a[:i] + (k,) + a[i + 2:]
                    rows[index[t]][c] += (-1) ** i * v
            for k, v in mult.get((a[n], a[0]), {}).items():
                t = (k,) + a[1:n]
                rows[index[t]][c] += (-1) ** n * v
        return rows

    ranks = {n: exact_rank(b_matrix(n)) if n > 0 else 0 for n in range(0, top + 2)}
    return {n: dim ** (n + 1) - ranks[n] - ranks[n + 1] for n in range(0, top + 1)}


def truncated_poly_mult(k):
    return {(a, b): {a + b: 1} for a in range(k) for b in range(k) if a + b < k}


# free Lie algebras

def graded_bracket(x, y, degrees):
    out = {}
    for u, a in x.items():
        du = sum(degrees[g] for g in u)
        for v, b in y.items():
            dv = sum(degrees[g] for g in v)
            out[u + v] = out.get(u + v, 0) + a * b
            sg = -1 if (du * dv) % 2 == 0 else 1
            out[v + u] = out.get(v + u, 0) + sg * a * b
    return {k: c for k, c in out.items() if c}


def lie_monomials(degrees, n):
    """All right-normed brackets [a1, [a2, ... a_n]] as {word: coeff}."""
    r = len(degrees)
    out = []
    for letters in product(range(r), repeat=n):
        x = {(letters[-1],): 1}
        for g in reversed(letters[:-1]):
            x = graded_bracket({(g,): 1}, x, degrees)
        if x:
            out.append(x)
    return out


def mobius(n):
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    return -res if m > 1 else res


def witt(r, n):
    return sum(mobius(d) * r ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


# cyclic words

def canonical_rotation(w, degrees):
    """(least rotation, sign) or (None, 0) when the word is its own negative."""
    n = len(w)
    best, sign = None, 0
    for k in range(max(n, 1)):
        a = sum(degrees[g] for g in w[:k])
        b = sum(degrees[g] for g in w[k:])
        r = w[k:] + w[:k]
        s = -1 if (a * b) % 2 else 1
        if best is None or r < best:
            best, sign = r, s
    for k in range(n):
        a = sum(degrees[g] for g in w[:k])
        b = sum(degrees[g] for g in w[k:])
        if w[k:] + w[:k] == best and (-1 if (a * b) % 2 else 1) != sign:
            return None, 0
    return best, sign


def project_necklaces(x, degrees):
    out = {}
    for w, c in x.items():
        r, s = canonical_rotation(w, degrees)
        if r is not None:
            out[r] = out.get(r, 0) + s * c
    return {k: v for k, v in out.items() if v}


def harrison_vectors(degrees, weight):
    """Theta-words (x; Lie monomial) spanning the Harrison cochains of this weight."""
    out = []
    if weight < 2:
        return out
    for g in range(len(degrees)):
        for y in lie_monomials(degrees, weight - 1):
            out.append({(g,) + w: c for w, c in y.items()})
    return out


def cyclic_harrison_vectors(degrees, weight):
    """Necklaces of products u v of two Lie monomials."""
    out = []
    for a in range(1, weight):
        for u in lie_monomials(degrees, a):
            for v in lie_monomials(degrees, weight - a):
                prod = {}
                for p, c in u.items():
                    for q, d in v.items():
                        prod[p + q] = prod.get(p + q, 0) + c * d
                y = project_necklaces(prod, degrees)
                if y:
                    out.append(y)
    return out
