"""Hom_G(Delta(lambda), Delta(mu)) over F_p.

A hom vector is an element of Delta(mu)_lambda written over the semistandard
basis SST_lambda(mu); it induces a module homomorphism iff its image under
every (s,t) condition map vanishes in Delta(mu)_{lambda(s,t)}.  The conditions
are evaluated through the column-pairing functionals, so the ambient monomial
basis of the target weight spaces is never materialized.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .combinatorics import Partition, Tableau, Weight, dominates, enumerate_sst
from .errors import InvalidInputError
from .modp import check_prime, _binom_mod
from .pairing import PairingContext
from .weyl import (StraightenContext, FormalSum, _compositions_bounded,
                   weight_after_box, _box_apply_raw, count_rsst, get_max_dim)


class HomVector:
    """Dense coefficient vector over the canonical ordering of SST_lambda(mu)."""

    def __init__(self, lam, mu, p, coeffs, basis=None):
        check_prime(p)
        self.lam = lam
        self.mu = mu
        self.p = p
        if basis is None:
            basis = enumerate_sst(mu, Weight(lam.padded(lam.length)))
        self.basis = basis
        coeffs = np.asarray(coeffs, dtype=np.int64) % p
        if coeffs.shape != (len(basis),):
            raise InvalidInputError("coefficient vector length %d != basis size %d" %
                                    (coeffs.size, len(basis)))
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs.any()

    def support(self):
        return [(T, int(c)) for T, c in zip(self.basis, self.coeffs) if c]

    def __eq__(self, other):
        return (isinstance(other, HomVector) and self.lam == other.lam
                and self.mu == other.mu and self.p == other.p
                and np.array_equal(self.coeffs, other.coeffs))

    def __repr__(self):
        return "HomVector(%s -> %s, p=%d, %s)" % (self.lam, self.mu, self.p,
                                                  self.coeffs.tolist())


@dataclass
class HomSpaceResult:
    dim: int
    basis: list
    diagnostics: dict = field(default_factory=dict)


def _box_image_raw(mat, s, t, p, n):
    """Image of phi_T under the (s,t) condition map, as {matrix: coeff mod p}.

    Sum over t-vectors (t_1..t_n) with sum t and t_i <= a_{i,s+1}, moving t_i
    units of column s+1 to column s in row i, with coefficient
    prod_i C(a_{is} + t_i, t_i).
    """
    si = s - 1
    col_next = [mat[i][si + 1] for i in range(n)]
    out = {}
    for tv in _compositions_bounded(t, col_next):
        coeff = 1
        for i in range(n):
            if tv[i]:
                coeff = coeff * _binom_mod(mat[i][si] + tv[i], tv[i], p) % p
                if not coeff:
                    break
        if not coeff:
            continue
        new = []
        for i in range(n):
            row = list(mat[i])
            row[si] += tv[i]
            row[si + 1] -= tv[i]
            new.append(tuple(row))
        key = tuple(new)
        out[key] = (out.get(key, 0) + coeff) % p
    return {k: v for k, v in out.items() if v}


def box_image_formula(T, s, t, p):
    """Public wrapper of the condition-map formula, returning a FormalSum."""
    check_prime(p)
    n = T.n
    lam = Weight(T.col_sums)
    if not (1 <= s <= n - 1):
        raise InvalidInputError("need 1 <= s <= n-1, got s=%d" % s)
    if not (1 <= t <= lam.entries[s]):
        raise InvalidInputError("need 1 <= t <= lambda_{s+1}=%d, got t=%d" % (lam.entries[s], t))
    mu = Partition(sorted((x for x in T.row_sums if x), reverse=True))
    if T.row_sums != mu.padded(n):
        raise InvalidInputError("row sums %r are not a partition shape" % (T.row_sums,))
    raw = _box_image_raw(T.matrix, s, t, p, n)
    target = weight_after_box(lam, s, t, n)
    fs = FormalSum(mu, target, p=p)
    for m, c in raw.items():
        fs.add(Tableau(m), c)
    return fs


def _condition_blocks(lam, mu, p, base, max_dim=None):
    """Yield ((s,t), block) with block[i] = pairing coordinates of the (s,t)
    image of the i-th basis tableau."""
    n = lam.length
    for s in range(1, n):
        for t in range(1, lam.parts[s] + 1):
            target = weight_after_box(lam, s, t, n)
            ctx = PairingContext(mu, target, p, max_dim=max_dim)
            images = [_box_image_raw(T.matrix, s, t, p, n) for T in base]
            block = ctx.eval_rows(images)
            yield (s, t), block


def hom_space(lam, mu, p, max_dim=None):
    """Basis and dimension of Hom_G(Delta(lambda), Delta(mu)) over F_p."""
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    if not dominates(lam, mu):
        return HomSpaceResult(dim=0, basis=[], diagnostics={"dominance": False})
    n = lam.length
    if n == 0:
        # both partitions empty: Hom is the scalars
        return HomSpaceResult(dim=1, basis=[], diagnostics={})
    lam_w = Weight(lam.padded(n))
    base = enumerate_sst(mu, lam_w)
    K0 = len(base)
    if K0 == 0:
        return HomSpaceResult(dim=0, basis=[], diagnostics={})
    diagnostics = {}
    blocks = []
    for (s, t), block in _condition_blocks(lam, mu, p, base, max_dim=max_dim):
        diagnostics[(s, t)] = block.shape[1]
        if block.any():
            blocks.append(block.T)  # conditions as rows over the K0 unknowns
    if blocks:
        cond = np.vstack(blocks)
        null = _kernels.nullspace_mod(cond, p)
    else:
        null = np.eye(K0, dtype=np.int64)
    vectors = [HomVector(lam, mu, p, null[i], basis=base) for i in range(null.shape[0])]
    return HomSpaceResult(dim=len(vectors), basis=vectors, diagnostics=diagnostics)


def build_psi(lam, mu, p):
    """The all-ones vector over SST_lambda(mu)."""
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    n = max(lam.length, 1)
    base = enumerate_sst(mu, Weight(lam.padded(n)))
    return HomVector(lam, mu, p, np.ones(len(base), dtype=np.int64), basis=base)


def is_hom(v, max_dim=None):
    """True iff every (s,t) condition image of v straightens to zero."""
    if v.is_zero():
        return True
    lam, mu, p = v.lam, v.mu, v.p
    n = lam.length
    support = v.support()
    for s in range(1, n):
        for t in range(1, lam.parts[s] + 1):
            target = weight_after_box(lam, s, t, n)
            ctx = PairingContext(mu, target, p, max_dim=max_dim)
            combined = {}
            for T, c in support:
                for m, coeff in _box_image_raw(T.matrix, s, t, p, n).items():
                    combined[m] = (combined.get(m, 0) + c * coeff) % p
            combined = {m: c for m, c in combined.items() if c}
            if not ctx.is_relation(combined):
                return False
    return True


# ---------------------------------------------------------------------------
# independent oracle


def _transfer_raw(mat, i, u, p, n, lower):
    """Divided-power raising (E_i^(u)) or lowering (F_i^(u)) on one monomial.

    Transfers u units between letters i and i+1 (1-based) distributed over the
    slots, with coefficient prod_k C(a_{k,target} + u_k, u_k).
    """
    src = i if lower else i + 1   # 0-based column index of the source letter
    dst = i + 1 if lower else i
    src -= 1
    dst -= 1
    avail = [mat[k][src] for k in range(n)]
    out = {}
    for uv in _compositions_bounded(u, avail):
        coeff = 1
        for k in range(n):
            if uv[k]:
                coeff = coeff * _binom_mod(mat[k][dst] + uv[k], uv[k], p) % p
                if not coeff:
                    break
        if not coeff:
            continue
        new = []
        for k in range(n):
            row = list(mat[k])
            row[src] -= uv[k]
            row[dst] += uv[k]
            new.append(tuple(row))
        key = tuple(new)
        out[key] = (out.get(key, 0) + coeff) % p
    return {k: v for k, v in out.items() if v}


class _ModuleData:
    """All weight spaces of one Weyl module, with straightening contexts."""

    def __init__(self, shape, n, r, p, max_dim):
        self.shape = shape
        self.ctx = {}
        self.basis_index = {}
        for alpha in _all_weights(n, r):
            ctx = StraightenContext(shape, Weight(alpha), p, max_dim=max_dim)
            if ctx.dim:
                self.ctx[alpha] = ctx

    def dim(self, alpha):
        ctx = self.ctx.get(alpha)
        return ctx.dim if ctx else 0

    def operator_matrix(self, alpha, beta, i, u, p, lower):
        """Matrix of the (i,u) transfer from weight alpha to weight beta."""
        src_ctx = self.ctx.get(alpha)
        dst_ctx = self.ctx.get(beta)
        da = src_ctx.dim if src_ctx else 0
        db = dst_ctx.dim if dst_ctx else 0
        M = np.zeros((db, da), dtype=np.int64)
        if not da or not db:
            return M
        n = len(alpha)
        pos = {S: k for k, S in enumerate(dst_ctx.sst)}
        for a, T in enumerate(src_ctx.sst):
            img = _transfer_raw(T.matrix, i, u, p, n, lower)
            w = dst_ctx.straighten_terms(img)
            for S, c in w.coeffs.items():
                M[pos[S], a] = c
        return M


def _all_weights(n, r):
    """All compositions of r into n parts, sorted."""
    out = []
    cur = [0] * n

    def rec(i, rem):
        if i == n - 1:
            cur[i] = rem
            out.append(tuple(cur))
            cur[i] = 0
            return
        for v in range(rem + 1):
            cur[i] = v
            rec(i + 1, rem - v)
            cur[i] = 0

    if n:
        rec(0, r)
    return out


def hom_dim_oracle(lam, mu, p, max_r=6, max_n=3, max_dim=None):
    """Brute-force dim of Hom_G(Delta(lambda), Delta(mu)): weight-preserving
    maps commuting with every adjacent divided-power raising and lowering
    operator, built entirely from relation-space straightening contexts."""
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    r = lam.size
    n = max(lam.length, mu.length, 1)
    if r > max_r or n > max_n:
        raise InvalidInputError("oracle caps exceeded: r=%d (max %d), n=%d (max %d)" %
                                (r, max_r, n, max_n))
    cap = get_max_dim() if max_dim is None else max_dim
    L = _ModuleData(lam, n, r, p, cap)
    M = _ModuleData(mu, n, r, p, cap)

    weights = [w for w in _all_weights(n, r) if L.dim(w) and M.dim(w)]
    if not weights:
        return 0
    offset = {}
    total = 0
    for w in weights:
        offset[w] = total
        total += L.dim(w) * M.dim(w)

    def unknown(w, row_mu, col_lam):
        # X_w has shape (dim mu_w, dim lam_w), row-major
        return offset[w] + row_mu * L.dim(w) + col_lam

    rows = []
    ops = [(i, u, lower) for i in range(1, n) for u in range(1, r + 1)
           for lower in (False, True)]
    weights_L = [w for w in _all_weights(n, r) if L.dim(w)]
    for alpha in weights_L:
        for (i, u, lower) in ops:
            beta = list(alpha)
            if lower:
                beta[i - 1] -= u
                beta[i] += u
            else:
                beta[i - 1] += u
                beta[i] -= u
            if min(beta) < 0:
                continue
            beta = tuple(beta)
            if beta not in offset and alpha not in offset:
                continue  # both X_alpha and X_beta vanish identically
            OL = L.operator_matrix(alpha, beta, i, u, p, lower)
            OM = M.operator_matrix(alpha, beta, i, u, p, lower)
            da, db = L.dim(alpha), L.dim(beta)
            ea, eb = M.dim(alpha), M.dim(beta)
            # X_beta . OL - OM . X_alpha = 0, entrywise over (u_mu, v_lam)
            for v in range(da):
                for urow in range(eb):
                    coeffs = {}
                    if beta in offset:
                        for w_ in range(db):
                            c = int(OL[w_, v]) % p
                            if c:
                                idx = unknown(beta, urow, w_)
                                coeffs[idx] = (coeffs.get(idx, 0) + c) % p
                    if alpha in offset:
                        for z in range(ea):
                            c = int(OM[urow, z]) % p
                            if c:
                                idx = unknown(alpha, z, v)
                                coeffs[idx] = (coeffs.get(idx, 0) - c) % p
                    if any(coeffs.values()):
                        row = np.zeros(total, dtype=np.int64)
                        for idx, c in coeffs.items():
                            row[idx] = c
                        rows.append(row)
    if not rows:
        return total
    C = np.array(rows, dtype=np.int64)
    _, piv = _kernels.rref_mod(C, p)
    return total - len(piv)
