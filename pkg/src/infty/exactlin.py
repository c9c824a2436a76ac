"""Exact sparse linear algebra over the rationals.

Matrices act on column vectors; a vector is a dict index -> rational
with no zero values.  Elimination is fraction-free on integer rows.
"""
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .errors import AmbientMismatch, CompositionNonzero

_P = 2147483647


def qnorm(x):
    """Return an int when x is an integral Fraction."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def vec_add(u, v, c=1):
    """u + c*v as a new dict."""
    out = dict(u)
    for k, a in v.items():
        b = out.get(k, 0) + c * a
        if b:
            out[k] = qnorm(b)
        else:
            out.pop(k, None)
    return out


def vec_scale(v, c):
    if not c:
        return {}
    return {k: qnorm(c * a) for k, a in v.items()}


class RationalMatrix:
    """Sparse rows x cols matrix of rationals."""

    __slots__ = ("rows", "cols", "_data", "_tcache")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        data = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError((i, j))
                if v:
                    data.setdefault(i, {})[j] = qnorm(Fraction(v)) if not isinstance(v, int) else v
        self._data = data

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from a list of column vectors (dicts)."""
        m = cls(rows, len(columns))
        data = m._data
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not 0 <= i < rows:
                    raise IndexError((i, j))
                if v:
                    data.setdefault(i, {})[j] = qnorm(v)
        return m

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, ent)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return {(i, j): v for i, r in self._data.items() for j, v in r.items()}

    def row(self, i):
        return dict(self._data.get(i, {}))

    def row_dicts(self):
        return [self._data.get(i, {}) for i in range(self.rows)]

    def columns(self):
        cols = [dict() for _ in range(self.cols)]
        for i, r in self._data.items():
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def column(self, j):
        return {i: r[j] for i, r in self._data.items() if j in r}

    def nnz(self):
        return sum(len(r) for r in self._data.values())

    def is_zero(self):
        return not self._data

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in self._data.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self):
        t = RationalMatrix(self.cols, self.rows)
        for i, r in self._data.items():
            for j, v in r.items():
                t._data.setdefault(j, {})[i] = v
        return t

    T = property(transpose)

    def _column_dicts(self):
        cache = getattr(self, "_tcache", None)
        if cache is None or cache[0] is not self._data:
            cols = {}
            for i, r in self._data.items():
                for j, v in r.items():
                    cols.setdefault(j, {})[i] = v
            cache = (self._data, cols)
            self._tcache = cache
        return cache[1]

    def apply(self, vec):
        """Matrix times a sparse vector."""
        cols = self._column_dicts()
        out = {}
        for j, a in vec.items():
            col = cols.get(j)
            if col and a:
                for i, v in col.items():
                    out[i] = out.get(i, 0) + a * v
        return {i: qnorm(x) for i, x in out.items() if x}

    def __matmul__(self, other):
        if isinstance(other, dict):
            return self.apply(other)
        if self.cols != other.rows:
            raise AmbientMismatch("shape %s @ %s" % (self.shape, other.shape))
        out = RationalMatrix(self.rows, other.cols)
        od = other._data
        for i, r in self._data.items():
            acc = {}
            for k, a in r.items():
                orow = od.get(k)
                if orow:
                    for j, b in orow.items():
                        acc[j] = acc.get(j, 0) + a * b
            acc = {j: qnorm(v) for j, v in acc.items() if v}
            if acc:
                out._data[i] = acc
        return out

    def _combine(self, other, c):
        if self.shape != other.shape:
            raise AmbientMismatch("shape %s vs %s" % (self.shape, other.shape))
        out = RationalMatrix(self.rows, self.cols)
        out._data = {i: dict(r) for i, r in self._data.items()}
        for i, r in other._data.items():
            nr = vec_add(out._data.get(i, {}), r, c)
            if nr:
                out._data[i] = nr
            else:
                out._data.pop(i, None)
        return out

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        out = RationalMatrix(self.rows, self.cols)
        if c:
            out._data = {i: vec_scale(r, c) for i, r in self._data.items()}
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self.nnz()))

    def __repr__(self):
        return "RationalMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz())

    def select(self, rows=None, cols=None):
        """Submatrix on the given row and column index lists."""
        rows = list(range(self.rows)) if rows is None else list(rows)
        cols = list(range(self.cols)) if cols is None else list(cols)
        cpos = {c: k for k, c in enumerate(cols)}
        out = RationalMatrix(len(rows), len(cols))
        for k, i in enumerate(rows):
            r = self._data.get(i)
            if not r:
                continue
            nr = {cpos[j]: v for j, v in r.items() if j in cpos}
            if nr:
                out._data[k] = nr
        return out

    @staticmethod
    def block(blocks):
        """Assemble a block matrix from a grid; None means zero block."""
        heights = []
        for brow in blocks:
            h = next((b.rows for b in brow if b is not None), None)
            heights.append(h)
        widths = []
        for c in range(len(blocks[0])):
            w = next((brow[c].cols for brow in blocks if brow[c] is not None), None)
            widths.append(w)
        if None in heights or None in widths:
            raise ValueError("block grid has an all-empty row or column")
        out = RationalMatrix(sum(heights), sum(widths))
        r0 = 0
        for bi, brow in enumerate(blocks):
            c0 = 0
            for bj, b in enumerate(brow):
                if b is not None:
                    if b.shape != (heights[bi], widths[bj]):
                        raise AmbientMismatch("block shape mismatch")
                    for i, r in b._data.items():
                        dst = out._data.setdefault(r0 + i, {})
                        for j, v in r.items():
                            dst[c0 + j] = v
                c0 += widths[bj]
            r0 += heights[bi]
        return out

    def rank(self):
        return rank(self)


# elimination core

def _primitive(row):
    """Scale a rational sparse row to a primitive integer row."""
    den = 1
    for v in row.values():
        if type(v) is not int:
            den = lcm(den, Fraction(v).denominator)
    if den != 1:
        row = {k: int(v * den) for k, v in row.items()}
    return _divide_content(row)


def _divide_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _reduce_by(r, p, c):
    """Eliminate column c from r using pivot row p (both integer)."""
    a = p[c]
    b = r[c]
    g = gcd(a, b)
    a //= g
    b //= g
    if a == 1:
        out = dict(r)
    elif a == -1:
        out = {k: -v for k, v in r.items()}
    else:
        out = {k: a * v for k, v in r.items()}
    for k, v in p.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            del out[k]
    return _divide_content(out) if out else out


def _echelon(rows):
    """Fraction-free echelon form.  Returns dict pivot column -> integer row."""
    piv = {}
    for row in sorted((r for r in rows if r), key=len):
        r = _primitive(row)
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                piv[c] = r
                break
            # keep the entry of smaller bit-length as the pivot
            if abs(r[c]).bit_length() < abs(p[c]).bit_length():
                piv[c], r = r, p
                p = piv[c]
            r = _reduce_by(r, p, c)
    return piv


def _rref(rows):
    """Reduced echelon basis: list of (pivot, row) with pivot entry 1, sorted by pivot."""
    piv = _echelon(rows)
    order = sorted(piv, reverse=True)
    for idx, c in enumerate(order):
        p = piv[c]
        for c2 in order[idx + 1:]:
            q = piv[c2]
            if c in q:
                piv[c2] = _reduce_by(q, p, c)
    out = []
    for c in sorted(piv):
        p = piv[c]
        a = p[c]
        out.append((c, {k: qnorm(Fraction(v, a)) for k, v in p.items()}))
    return out


def rank(M):
    if isinstance(M, RationalMatrix):
        rows = M.row_dicts() if M.rows <= M.cols else M.transpose().row_dicts()
    else:
        rows = list(M)
    return len(_echelon(rows))


class Subspace:
    """Subspace of Q^ambient_dim held in reduced echelon form."""

    __slots__ = ("ambient_dim", "_rref")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        vecs = []
        for v in vectors:
            if isinstance(v, (list, tuple)):
                if len(v) != ambient_dim:
                    raise AmbientMismatch("vector length %d != %d" % (len(v), ambient_dim))
                v = {i: x for i, x in enumerate(v) if x}
            elif v and max(v) >= ambient_dim:
                raise AmbientMismatch("index %d outside ambient %d" % (max(v), ambient_dim))
            vecs.append(v)
        self._rref = _rref(vecs)

    @classmethod
    def _from_reduced(cls, ambient_dim, pairs):
        """pairs (c, v): v[c] = 1 and every other vector vanishes at c."""
        S = cls(ambient_dim)
        S._rref = list(pairs)
        return S

    @property
    def dim(self):
        return len(self._rref)

    @property
    def basis(self):
        return [dict(r) for _, r in self._rref]

    @property
    def pivots(self):
        return [c for c, _ in self._rref]

    def dense_basis(self):
        out = []
        for _, r in self._rref:
            row = [0] * self.ambient_dim
            for k, v in r.items():
                row[k] = v
            out.append(row)
        return out

    def reduce(self, v):
        """Remainder of v after elimination against the basis."""
        r = dict(v)
        for c, p in self._rref:
            a = r.get(c)
            if a:
                for k, x in p.items():
                    b = r.get(k, 0) - a * x
                    if b:
                        r[k] = b
                    else:
                        del r[k]
        return {k: qnorm(x) for k, x in r.items()}

    def contains(self, v):
        if isinstance(v, (list, tuple)):
            v = {i: x for i, x in enumerate(v) if x}
        return not self.reduce(v)

    def coordinates(self, v):
        """Coordinates of an element of the subspace in the echelon basis."""
        if self.reduce(v):
            raise ValueError("vector not in subspace")
        return [v.get(c, 0) for c, _ in self._rref]

    def from_coordinates(self, coords):
        out = {}
        for a, (_, p) in zip(coords, self._rref):
            if a:
                out = vec_add(out, p, a)
        return out

    def __add__(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("ambient %d vs %d" % (self.ambient_dim, other.ambient_dim))
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return subspace_equal(self, other)

    def __repr__(self):
        return "Subspace(dim=%d in Q^%d)" % (self.dim, self.ambient_dim)


def subspace_equal(A, B):
    if A.ambient_dim != B.ambient_dim:
        raise AmbientMismatch("ambient %d vs %d" % (A.ambient_dim, B.ambient_dim))
    if A.dim != B.dim:
        return False
    return all(B.contains(v) for v in A.basis) and all(A.contains(v) for v in B.basis)


def _ratrecon(a, p=_P):
    """Rational reconstruction of a mod p, or None."""
    bound = int((p // 2) ** 0.5)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _modp_rref(A, p=_P):
    """Reduced echelon form mod p of an int64 array; returns (R, pivot columns)."""
    A = A % p
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if len(rows):
            A[rows, c:] = (A[rows, c:] - col[rows, None] * A[r, c:]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _modular_kernel(M):
    """Kernel of M via elimination mod p, verified exactly; None if not certified."""
    den = 1
    for r in M._data.values():
        for v in r.values():
            if type(v) is not int:
                den = lcm(den, Fraction(v).denominator)
    A = np.zeros((M.rows, M.cols), dtype=np.int64)
    for i, r in M._data.items():
        for j, v in r.items():
            A[i, j] = int(v * den) % _P
    R, pivots = _modp_rref(A)
    pset = set(pivots)
    kern = []
    for f in range(M.cols):
        if f in pset:
            continue
        v = {f: 1}
        for k, c in enumerate(pivots):
            a = int(R[k, f])
            if a:
                q = _ratrecon(-a % _P)
                if q is None:
                    return None
                v[c] = qnorm(q)
        kern.append((f, v))
    if kern and not _kills(M, den, [v for _, v in kern]):
        return None
    return M.cols - len(kern), kern


def _kills(M, den, vecs):
    """Exact check that M annihilates every vector."""
    A = np.zeros((M.rows, M.cols), dtype=object)
    amax = 0
    for i, r in M._data.items():
        for j, v in r.items():
            x = int(v * den)
            A[i, j] = x
            amax = max(amax, abs(x))
    K = np.zeros((M.cols, len(vecs)), dtype=object)
    kmax = 0
    for k, v in enumerate(vecs):
        for j, x in _primitive(v).items():
            K[j, k] = x
            kmax = max(kmax, abs(x))
    if amax * kmax * max(M.cols, 1) < (1 << 62):
        prod = A.astype(np.int64) @ K.astype(np.int64)
    else:
        prod = A @ K
    return not np.any(prod)


def matmul_modp(X, Y, p=_P):
    """X @ Y mod p for entries in [0, p), exact through 16-bit limbs in float64."""
    X = np.asarray(X, dtype=np.int64) % p
    Y = np.asarray(Y, dtype=np.int64) % p
    x1, x0 = (X >> 16).astype(np.float64), (X & 0xFFFF).astype(np.float64)
    y1, y0 = (Y >> 16).astype(np.float64), (Y & 0xFFFF).astype(np.float64)
    # each product < 2^32, sums stay below 2^53 for inner size < 2^21
    hh = (x1 @ y1).astype(np.int64) % p
    mid = ((x1 @ y0).astype(np.int64) + (x0 @ y1).astype(np.int64)) % p
    ll = (x0 @ y0).astype(np.int64) % p
    sh = (1 << 16) % p
    return ((hh * sh % p) * sh + mid * sh + ll) % p


def reconstruct_rows(R, p=_P):
    """Rational rows from rows mod p, or None when reconstruction fails."""
    out = []
    for row in R:
        v = {}
        for k in np.nonzero(row)[0]:
            q = _ratrecon(int(row[k]), p)
            if q is None:
                return None
            v[int(k)] = qnorm(q)
        out.append(v)
    return out


def int_kernel(A):
    """Reduced kernel pairs (f, v) of an int64 matrix, certified exactly.

    Same route as the modular kernel but without the sparse round trip;
    falls back to exact elimination when reconstruction fails.
    """
    m, n = A.shape
    R, pivots = _modp_rref(A.copy())
    pset = set(pivots)
    free = [f for f in range(n) if f not in pset]
    kern = []
    ok = True
    for f in free:
        v = {f: 1}
        for k in np.nonzero(R[:, f])[0]:
            q = _ratrecon(-int(R[k, f]) % _P)
            if q is None:
                ok = False
                break
            v[pivots[k]] = qnorm(q)
        if not ok:
            break
        kern.append((f, v))
    if ok and kern:
        K = np.zeros((n, len(kern)), dtype=object)
        for k, (_, v) in enumerate(kern):
            for j, x in _primitive(v).items():
                K[j, k] = x
        kmax = int(np.abs(K).max()) if K.size else 0
        amax = int(np.abs(A).max(initial=0))
        if amax * kmax * max(n, 1) < (1 << 62):
            ok = not np.any(A @ K.astype(np.int64))
        else:
            ok = not np.any(A.astype(object) @ K)
    if ok:
        return kern
    M = RationalMatrix(m, n)
    M._data = {i: {k: int(A[i, k]) for k in np.nonzero(A[i])[0]} for i in range(m) if A[i].any()}
    return list(rank_and_kernel(M)[1]._rref)


def rank_and_kernel(M):
    """Rank of M and its (right) kernel as a Subspace of Q^cols."""
    if M.rows and M.cols and M.rows * M.cols <= 250000 and M.nnz() * 8 > M.rows * M.cols:
        res = _modular_kernel(M)
        if res is not None:
            return res[0], Subspace._from_reduced(M.cols, res[1])
    red = _rref(M.row_dicts())
    pivots = {c for c, _ in red}
    free = [j for j in range(M.cols) if j not in pivots]
    kern = []
    for f in free:
        v = {f: 1}
        for c, p in red:
            a = p.get(f)
            if a:
                v[c] = qnorm(-a)
        kern.append((f, v))
    return len(red), Subspace._from_reduced(M.cols, kern)


def kernel(M):
    return rank_and_kernel(M)[1]


def column_space(M):
    return Subspace(M.rows, [c for c in M.columns() if c])


def image_of(M, S):
    """Image of the subspace S under M."""
    return Subspace(M.rows, [M.apply(v) for v in S.basis])


def cohomology_dim(d_in, d_out):
    """dim ker(d_out) - rank(d_in) for C^{n-1} -> C^n -> C^{n+1}."""
    if d_in.rows != d_out.cols:
        raise AmbientMismatch("d_in lands in dim %d but d_out starts at %d" % (d_in.rows, d_out.cols))
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzero("d_out . d_in != 0")
    return d_in.rows - rank(d_out) - rank(d_in)


def induced_rank(f, Z, B):
    """Rank of the map induced by f from Z into (target)/B."""
    if Z.ambient_dim != f.cols or B.ambient_dim != f.rows:
        raise AmbientMismatch("induced_rank dimensions")
    imgs = [f.apply(v) for v in Z.basis]
    return Subspace(f.rows, imgs + B.basis).dim - B.dim
