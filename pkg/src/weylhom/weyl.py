"""The divided-power presentation of Weyl modules: box maps, weight-space
quotients with semistandard basis, straightening, and evaluation of phi_T."""

import os
from functools import lru_cache
from math import comb

import numpy as np

from . import _kernels
from .combinatorics import (Partition, Tableau, Weight, enumerate_rsst,
                            enumerate_sst, kostka)
from .errors import InvalidInputError, ResourceCapError
from .modp import check_prime, _binom_mod

DEFAULT_MAX_DIM = 200000


def get_max_dim():
    """Ambient-monomial cap; WEYLHOM_MAX_DIM overrides the default."""
    v = os.environ.get("WEYLHOM_MAX_DIM")
    if v is None:
        return DEFAULT_MAX_DIM
    try:
        return int(v)
    except ValueError:
        raise InvalidInputError("WEYLHOM_MAX_DIM must be an integer, got %r" % v)


class FormalSum:
    """Sparse linear combination of monomials of D(mu)_alpha.

    Coefficients are integers; they are reduced mod p when p is given and are
    kept exact otherwise (callers reduce on use).
    """

    def __init__(self, mu, alpha, p=None, terms=None):
        self.mu = mu
        self.alpha = alpha
        self.p = p
        self.terms = {}
        if terms:
            for T, c in terms.items():
                self.add(T, c)

    def add(self, T, c):
        if p := self.p:
            c = c % p
        if T.row_sums != self.mu.padded(T.n) or T.col_sums != self.alpha.padded(T.n):
            raise InvalidInputError("monomial %r does not live in D(%s)_(%s)" %
                                    (T, self.mu, self.alpha))
        c = self.terms.get(T, 0) + c
        if self.p:
            c %= self.p
        if c:
            self.terms[T] = c
        else:
            self.terms.pop(T, None)

    def raw(self):
        return {T.matrix: c for T, c in self.terms.items()}

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FormalSum) and self.mu == other.mu
                and self.alpha == other.alpha and self.terms == other.terms)

    def __repr__(self):
        return "FormalSum(%s, %s, p=%r, %r)" % (self.mu, self.alpha, self.p, self.terms)


class WeylVector:
    """Element of Delta(mu)_alpha in the semistandard basis."""

    def __init__(self, mu, alpha, p, coeffs=None):
        check_prime(p)
        self.mu = mu
        self.alpha = alpha
        self.p = p
        self.coeffs = {}
        for T, c in (coeffs or {}).items():
            c %= p
            if not c:
                continue
            if not T.is_semistandard():
                raise InvalidInputError("WeylVector key is not semistandard: %r" % (T,))
            self.coeffs[T] = c

    def is_zero(self):
        return not self.coeffs

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __eq__(self, other):
        return (isinstance(other, WeylVector) and self.mu == other.mu
                and self.alpha == other.alpha and self.p == other.p
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "WeylVector(%s, %s, p=%d, %r)" % (self.mu, self.alpha, self.p, self.coeffs)


# ---------------------------------------------------------------------------
# box maps


def weight_after_box(mu, s, t, n):
    """The weight mu(s,t) = (mu_1, ..., mu_s + t, mu_{s+1} - t, ..., mu_n)."""
    parts = list(mu.padded(n))
    if not (1 <= s <= n - 1):
        raise InvalidInputError("need 1 <= s <= n-1, got s=%d" % s)
    if not (1 <= t <= parts[s]):
        raise InvalidInputError("need 1 <= t <= mu_{s+1}=%d, got t=%d" % (parts[s], t))
    parts[s - 1] += t
    parts[s] -= t
    return Weight(parts)


def _compositions_bounded(total, bounds):
    """All tuples y with 0 <= y_i <= bounds_i and sum(y) = total."""
    out = []
    y = [0] * len(bounds)

    def rec(i, rem):
        if i == len(bounds):
            if rem == 0:
                out.append(tuple(y))
            return
        tail = sum(bounds[i + 1:])
        for v in range(max(0, rem - tail), min(rem, bounds[i]) + 1):
            y[i] = v
            rec(i + 1, rem - v)
            y[i] = 0

    rec(0, total)
    return out


def _box_apply_raw(mat, s, t):
    """Integer-coefficient image of one monomial under the (s,t) box map.

    mat has row sums mu(s,t); comultiply t units out of slot s and multiply
    them into slot s+1 with divided-power coefficients.
    """
    n = len(mat)
    si = s - 1
    x = mat[si]
    b = mat[si + 1]
    out = {}
    for y in _compositions_bounded(t, x):
        coeff = 1
        for j in range(n):
            if y[j]:
                coeff *= comb(b[j] + y[j], y[j])
        new = list(mat)
        new[si] = tuple(u - v for u, v in zip(x, y))
        new[si + 1] = tuple(u + v for u, v in zip(b, y))
        key = tuple(new)
        out[key] = out.get(key, 0) + coeff
    return out


def box_apply(mu, s, t, monomial, p=None):
    """Image in D(mu) of a monomial of D(mu(s,t)) under the box map."""
    n = monomial.n
    target = weight_after_box(mu, s, t, n)
    if monomial.row_sums != target.entries:
        raise InvalidInputError("monomial row sums %r != mu(s,t) = %s" %
                                (monomial.row_sums, target))
    alpha = Weight(monomial.col_sums)
    raw = _box_apply_raw(monomial.matrix, s, t)
    fs = FormalSum(mu, alpha, p=p)
    for m, c in raw.items():
        fs.add(Tableau(m), c)
    return fs


# ---------------------------------------------------------------------------
# relation-space straightening contexts


def count_rsst(row_sums, col_sums):
    """Number of nonnegative integer matrices with the given margins."""
    rows = tuple(row_sums)
    n = len(col_sums)

    @lru_cache(maxsize=None)
    def rec(i, colrem):
        if i == len(rows):
            return 1
        need = rows[i]
        total = 0
        y = [0] * n

        def go(j, rem):
            nonlocal total
            if j == n:
                if rem == 0:
                    total += rec(i + 1, tuple(a - b for a, b in zip(colrem, y)))
                return
            tail = sum(colrem[j + 1:])
            for v in range(max(0, rem - tail), min(rem, colrem[j]) + 1):
                y[j] = v
                go(j + 1, rem - v)
                y[j] = 0

        go(0, need)
        return total

    return rec(0, tuple(col_sums))


class StraightenContext:
    """Echelonized relation space of D(mu)_alpha with semistandard coordinates.

    Monomials are indexed in canonical (row-major lexicographic) order; pivot
    selection prefers non-semistandard coordinates, so every non-semistandard
    monomial acquires an expression in the semistandard basis.
    """

    def __init__(self, mu, alpha, p, max_dim=None):
        check_prime(p)
        if mu.size != alpha.size:
            raise InvalidInputError("shape/weight size mismatch: |%s| != |%s|" % (mu, alpha))
        self.mu = mu
        self.alpha = alpha
        self.p = p
        n = alpha.n
        cap = get_max_dim() if max_dim is None else max_dim
        D = count_rsst(mu.padded(n), alpha.entries)
        if D > cap:
            raise ResourceCapError(
                "ambient monomial count %d exceeds cap %d for D(%s)_(%s)" % (D, cap, mu, alpha),
                size=D, cap=cap)
        self.monomials = enumerate_rsst(mu, alpha)
        self.index = {T.matrix: i for i, T in enumerate(self.monomials)}
        sst_flags = [T.is_semistandard() for T in self.monomials]
        self.sst = [T for T, f in zip(self.monomials, sst_flags) if f]
        nonsst_idx = [i for i, f in enumerate(sst_flags) if not f]
        sst_idx = [i for i, f in enumerate(sst_flags) if f]
        perm = nonsst_idx + sst_idx
        K = len(sst_idx)
        B = len(nonsst_idx)

        # accumulate relation rows block by block, eliminating as we go
        R = np.zeros((0, D), dtype=np.int64)
        m = mu.length
        for s in range(1, m):
            for t in range(1, mu.parts[s] + 1):
                src = weight_after_box(mu, s, t, n)
                rows = []
                for g in _enumerate_margin_matrices(src.entries, alpha.entries, n):
                    img = _box_apply_raw(g, s, t)
                    row = np.zeros(D, dtype=np.int64)
                    nonzero = False
                    for mkey, c in img.items():
                        c %= p
                        if c:
                            row[self.index[mkey]] = c
                            nonzero = True
                    if nonzero:
                        rows.append(row)
                if rows:
                    block = np.array(rows, dtype=np.int64)[:, perm]
                    stacked = np.vstack([R, block]) if R.size else block
                    R, _ = _kernels.rref_mod(stacked, p)
        if R.size == 0:
            R = np.zeros((0, D), dtype=np.int64)
        Rfull, pivots = _kernels.rref_mod(R, p)
        rank = Rfull.shape[0]
        K_expected = len(self.sst)
        assert D - rank == K_expected, \
            "relation rank %d inconsistent with Kostka %d (D=%d)" % (rank, K_expected, D)
        assert pivots == list(range(B)), "semistandard monomial became a pivot"
        # row i expresses nonsst_idx[i] in semistandard coordinates
        self.reduction = (-Rfull[:, B:]) % p
        self._nonsst_pos = {self.monomials[i].matrix: k for k, i in enumerate(nonsst_idx)}
        self._sst_pos = {self.monomials[i].matrix: k for k, i in enumerate(sst_idx)}
        self.rank = rank

    @property
    def dim(self):
        return len(self.sst)

    def straighten_terms(self, raw_terms):
        K = len(self.sst)
        vec = np.zeros(K, dtype=np.int64)
        for mkey, c in raw_terms.items():
            c %= self.p
            if not c:
                continue
            if mkey in self._sst_pos:
                vec[self._sst_pos[mkey]] += c
            elif mkey in self._nonsst_pos:
                vec = (vec + c * self.reduction[self._nonsst_pos[mkey]])
            else:
                raise InvalidInputError("monomial %r is not in D(%s)_(%s)" %
                                        (mkey, self.mu, self.alpha))
        vec %= self.p
        return WeylVector(self.mu, self.alpha, self.p,
                          {S: int(v) for S, v in zip(self.sst, vec) if v})


def _enumerate_margin_matrices(row_sums, col_sums, n):
    """Matrices with arbitrary (not necessarily decreasing) row margins, sorted."""
    from .combinatorics import _enumerate_matrices
    return _enumerate_matrices(tuple(row_sums), tuple(col_sums), n, False, False)


def weight_space(mu, alpha, p, max_dim=None):
    """Build the straightening context for Delta(mu)_alpha over F_p."""
    return StraightenContext(mu, alpha, p, max_dim=max_dim)


def straighten(ctx, x):
    """Reduce a FormalSum to its semistandard representative in ctx's weight space."""
    if x.mu != ctx.mu or x.alpha != ctx.alpha:
        raise InvalidInputError("formal sum (%s, %s) does not match context (%s, %s)" %
                                (x.mu, x.alpha, ctx.mu, ctx.alpha))
    return ctx.straighten_terms(x.raw())


# ---------------------------------------------------------------------------
# the two-row identity and phi_T


def two_row_identity(T, p):
    """Rewrite a two-row tableau with no letter 1 left in the second row.

    Valid when a_1 + b_1 <= nu_1; the complementary case is [T] = 0.
    """
    check_prime(p)
    n = T.n
    rs = T.row_sums
    if any(rs[2:]):
        raise InvalidInputError("two_row_identity requires a two-row tableau")
    nu = Partition(rs[:2]) if rs[0] >= rs[1] else None
    if nu is None:
        raise InvalidInputError("row sums %r are not a two-row partition" % (rs,))
    a = T.matrix[0]
    b = T.matrix[1]
    if a[0] + b[0] > nu.parts[0]:
        raise InvalidInputError("a1 + b1 > nu1: [T] = 0; no identity applies")
    alpha = Weight(T.col_sums)
    out = FormalSum(nu, alpha, p=p)
    sign = (-1) ** b[0]
    for k in _compositions_bounded(b[0], a[1:]):
        coeff = sign
        for s in range(1, n):
            coeff *= _binom_mod(b[s] + k[s - 1], b[s], p)
        row1 = (a[0] + b[0],) + tuple(a[s] - k[s - 1] for s in range(1, n))
        row2 = (0,) + tuple(b[s] + k[s - 1] for s in range(1, n))
        mat = [row1, row2] + [(0,) * n] * (n - 2)
        out.add(Tableau(mat), coeff)
    return out


def apply_phi(T, x, ctx):
    """Evaluate phi_T on an element x of D(alpha) and straighten the result.

    For each slot j the content x_j is comultiplied along column j of the
    matrix of T (splittings into pieces of sizes a_1j, ..., a_nj); the pieces
    are multiplied row-wise with divided-power coefficients.
    """
    total = phi_raw(T, x)
    return ctx.straighten_terms(total)


def phi_raw(T, x):
    """The pre-straightening formal sum of phi_T(x), as {matrix: integer coeff}."""
    n = T.n
    alpha = Weight(T.col_sums)
    if tuple(x.mu.padded(n)) != alpha.entries:
        raise InvalidInputError("x has slot degrees %s but T has column sums %s" %
                                (x.mu, alpha))
    A = T.matrix
    total = {}
    for X, cx in x.terms.items():
        partial = {tuple(((0,) * n) for _ in range(n)): cx}
        for j in range(n):
            content = X.matrix[j]
            sizes = [A[i][j] for i in range(n)]
            splits = _column_splits(content, sizes)
            nxt = {}
            for rows, c in partial.items():
                for pieces, in_rows in splits:
                    coeff = c
                    new_rows = list(rows)
                    for i, piece in enumerate(pieces):
                        if not any(piece):
                            continue
                        old = new_rows[i]
                        for ell in range(n):
                            if piece[ell]:
                                coeff *= comb(old[ell] + piece[ell], piece[ell])
                        new_rows[i] = tuple(o + q for o, q in zip(old, piece))
                    key = tuple(new_rows)
                    nxt[key] = nxt.get(key, 0) + coeff
            partial = nxt
        for rows, c in partial.items():
            total[rows] = total.get(rows, 0) + c
    return {k: v for k, v in total.items() if v}


@lru_cache(maxsize=4096)
def _column_splits_cached(content, sizes):
    """All splittings of a content vector into pieces of prescribed sizes."""
    n = len(content)
    results = []

    def rec(i, remaining, pieces):
        if i == len(sizes):
            if not any(remaining):
                results.append((tuple(pieces), None))
            return
        for y in _compositions_bounded(sizes[i], remaining):
            rec(i + 1, tuple(a - b for a, b in zip(remaining, y)), pieces + [y])

    rec(0, content, [])
    return tuple(results)


def _column_splits(content, sizes):
    return _column_splits_cached(tuple(content), tuple(sizes))
