"""Hot numerical kernels: F_p Gaussian elimination and the column-pairing DP.

Two implementations are provided for each kernel: a numba @njit version and a
pure NumPy/Python fallback.  Selection is by the WEYLHOM_NUMBA environment
variable ("0"/"false"/"off" forces the fallback); if numba is not importable
the fallback is used silently.
"""

import os
from itertools import permutations

import numpy as np

from .errors import ResourceCapError

_MAX_RANK = 6          # largest ambient rank the packed DP state supports
_MAX_ENTRY = 31        # 5 bits per matrix cell
_CELLS_PER_WORD = 12   # 60 bits of each of the 3 key words


def _env_wants_numba():
    v = os.environ.get("WEYLHOM_NUMBA", "1").strip().lower()
    return v not in ("0", "false", "off", "no")


try:
    from numba import njit, types
    from numba.typed import Dict, List
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and _env_wants_numba()


# ---------------------------------------------------------------------------
# permutation tables (shared by both lanes)

_PERM_CNT = np.zeros(_MAX_RANK + 1, dtype=np.int64)
_PERMS = np.zeros((_MAX_RANK + 1, 720, _MAX_RANK), dtype=np.int64)
_SIGNS = np.zeros((_MAX_RANK + 1, 720), dtype=np.int64)
for _h in range(1, _MAX_RANK + 1):
    for _i, _perm in enumerate(permutations(range(_h))):
        _PERMS[_h, _i, :_h] = _perm
        inv = sum(1 for _a in range(_h) for _b in range(_a + 1, _h) if _perm[_a] > _perm[_b])
        _SIGNS[_h, _i] = -1 if inv % 2 else 1
    _PERM_CNT[_h] = _i + 1


def _pack_state(mat, n):
    """Pack an n x n matrix (entries < 32) into three 60-bit words."""
    w = [0, 0, 0]
    for i in range(n):
        for j in range(n):
            k = i * n + j
            w[k // _CELLS_PER_WORD] |= int(mat[i][j]) << (5 * (k % _CELLS_PER_WORD))
    return (w[0], w[1], w[2])


# ---------------------------------------------------------------------------
# pairing DP, pure-Python lane

def _pair_eval_py(heights, letters, states, n, p):
    ncols = len(heights)
    numT = len(states)
    out = np.zeros(numT, dtype=np.int64)

    init = [_pack_state(states[t], n) for t in range(numT)]
    level = dict.fromkeys(init, 0)
    levels = [level]

    # forward reachability
    for j in range(ncols):
        h = int(heights[j])
        nxt = {}
        cnt = int(_PERM_CNT[h])
        for key in levels[j]:
            for pi in range(cnt):
                w0, w1, w2 = key
                ok = True
                for pos in range(h):
                    row = int(_PERMS[h, pi, pos])
                    ell = int(letters[j][pos]) - 1
                    k = row * n + ell
                    wi = k // _CELLS_PER_WORD
                    sh = 5 * (k % _CELLS_PER_WORD)
                    if wi == 0:
                        if (w0 >> sh) & 31 == 0:
                            ok = False
                            break
                        w0 -= 1 << sh
                    elif wi == 1:
                        if (w1 >> sh) & 31 == 0:
                            ok = False
                            break
                        w1 -= 1 << sh
                    else:
                        if (w2 >> sh) & 31 == 0:
                            ok = False
                            break
                        w2 -= 1 << sh
                if ok:
                    nxt[(w0, w1, w2)] = 0
        levels.append(nxt)

    # backward accumulation of signed counts mod p
    last = levels[ncols]
    if (0, 0, 0) in last:
        last[(0, 0, 0)] = 1
    for j in range(ncols - 1, -1, -1):
        h = int(heights[j])
        cnt = int(_PERM_CNT[h])
        nxt = levels[j + 1]
        cur = levels[j]
        for key in cur:
            tot = 0
            for pi in range(cnt):
                w0, w1, w2 = key
                ok = True
                for pos in range(h):
                    row = int(_PERMS[h, pi, pos])
                    ell = int(letters[j][pos]) - 1
                    k = row * n + ell
                    wi = k // _CELLS_PER_WORD
                    sh = 5 * (k % _CELLS_PER_WORD)
                    if wi == 0:
                        if (w0 >> sh) & 31 == 0:
                            ok = False
                            break
                        w0 -= 1 << sh
                    elif wi == 1:
                        if (w1 >> sh) & 31 == 0:
                            ok = False
                            break
                        w1 -= 1 << sh
                    else:
                        if (w2 >> sh) & 31 == 0:
                            ok = False
                            break
                        w2 -= 1 << sh
                if ok:
                    v = nxt.get((w0, w1, w2), 0)
                    if v:
                        tot += v if _SIGNS[h, pi] > 0 else (p - 1) * v
            cur[key] = tot % p

    first = levels[0]
    for t in range(numT):
        out[t] = first[init[t]]
    return out


# ---------------------------------------------------------------------------
# pairing DP, numba lane

if HAS_NUMBA:
    _key_t = types.UniTuple(types.int64, 3)

    @njit(cache=True)
    def _pair_eval_nb(heights, letters, states, n, p, perms, perm_cnt, signs):
        ncols = heights.shape[0]
        numT = states.shape[0]
        out = np.zeros(numT, dtype=np.int64)

        init = np.zeros((numT, 3), dtype=np.int64)
        for t in range(numT):
            for i in range(n):
                for j in range(n):
                    k = i * n + j
                    init[t, k // 12] |= states[t, i, j] << (5 * (k % 12))

        levels = List()
        lvl0 = Dict.empty(_key_t, types.int64)
        for t in range(numT):
            lvl0[(init[t, 0], init[t, 1], init[t, 2])] = 0
        levels.append(lvl0)

        for j in range(ncols):
            h = heights[j]
            cnt = perm_cnt[h]
            nxt = Dict.empty(_key_t, types.int64)
            for key in levels[j]:
                for pi in range(cnt):
                    w0 = key[0]
                    w1 = key[1]
                    w2 = key[2]
                    ok = True
                    for pos in range(h):
                        row = perms[h, pi, pos]
                        ell = letters[j, pos] - 1
                        k = row * n + ell
                        wi = k // 12
                        sh = 5 * (k % 12)
                        if wi == 0:
                            if (w0 >> sh) & 31 == 0:
                                ok = False
                                break
                            w0 -= 1 << sh
                        elif wi == 1:
                            if (w1 >> sh) & 31 == 0:
                                ok = False
                                break
                            w1 -= 1 << sh
                        else:
                            if (w2 >> sh) & 31 == 0:
                                ok = False
                                break
                            w2 -= 1 << sh
                    if ok:
                        nxt[(w0, w1, w2)] = 0
            levels.append(nxt)

        last = levels[ncols]
        zero = (np.int64(0), np.int64(0), np.int64(0))
        if zero in last:
            last[zero] = 1
        for j in range(ncols - 1, -1, -1):
            h = heights[j]
            cnt = perm_cnt[h]
            nxt = levels[j + 1]
            cur = levels[j]
            keys = np.empty((len(cur), 3), dtype=np.int64)
            ki = 0
            for key in cur:
                keys[ki, 0] = key[0]
                keys[ki, 1] = key[1]
                keys[ki, 2] = key[2]
                ki += 1
            for ki in range(keys.shape[0]):
                tot = 0
                for pi in range(cnt):
                    w0 = keys[ki, 0]
                    w1 = keys[ki, 1]
                    w2 = keys[ki, 2]
                    ok = True
                    for pos in range(h):
                        row = perms[h, pi, pos]
                        ell = letters[j, pos] - 1
                        k = row * n + ell
                        wi = k // 12
                        sh = 5 * (k % 12)
                        if wi == 0:
                            if (w0 >> sh) & 31 == 0:
                                ok = False
                                break
                            w0 -= 1 << sh
                        elif wi == 1:
                            if (w1 >> sh) & 31 == 0:
                                ok = False
                                break
                            w1 -= 1 << sh
                        else:
                            if (w2 >> sh) & 31 == 0:
                                ok = False
                                break
                            w2 -= 1 << sh
                    if ok:
                        nk = (w0, w1, w2)
                        if nk in nxt:
                            v = nxt[nk]
                            if v != 0:
                                if signs[h, pi] > 0:
                                    tot += v
                                else:
                                    tot += (p - 1) * v
                cur[(keys[ki, 0], keys[ki, 1], keys[ki, 2])] = tot % p

        first = levels[0]
        for t in range(numT):
            out[t] = first[(init[t, 0], init[t, 1], init[t, 2])]
        return out


def pair_eval(heights, letters, states, n, p):
    """Signed pairing coefficients for a batch of monomial states against one
    target column filling.

    heights: (ncols,) column heights of the shape.
    letters: (ncols, max_h) letters (1-based) of the target's columns, padded.
    states:  (numT, n, n) monomial content matrices.
    Returns (numT,) values in [0, p).
    """
    if n > _MAX_RANK:
        raise ResourceCapError("ambient rank %d exceeds kernel limit %d" % (n, _MAX_RANK))
    states = np.ascontiguousarray(states, dtype=np.int64)
    if states.size and states.max() > _MAX_ENTRY:
        raise ResourceCapError("tableau entry exceeds kernel limit %d" % _MAX_ENTRY)
    heights = np.ascontiguousarray(heights, dtype=np.int64)
    letters = np.ascontiguousarray(letters, dtype=np.int64)
    if USE_NUMBA:
        return _pair_eval_nb(heights, letters, states, n, p, _PERMS, _PERM_CNT, _SIGNS)
    return _pair_eval_py(heights, letters, states, n, p)


# ---------------------------------------------------------------------------
# F_p Gaussian elimination

def _rref_np(M, p):
    M = np.ascontiguousarray(M, dtype=np.int64) % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            M[hit] = (M[hit] - np.outer(col[hit], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


if HAS_NUMBA:
    @njit(cache=True)
    def _rref_nb(M, p):
        rows, cols = M.shape
        piv = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            sel = -1
            for i in range(r, rows):
                if M[i, c] % p != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                for j in range(cols):
                    tmp = M[r, j]
                    M[r, j] = M[sel, j]
                    M[sel, j] = tmp
            # modular inverse by Fermat
            inv = 1
            base = M[r, c] % p
            e = p - 2
            while e:
                if e & 1:
                    inv = inv * base % p
                base = base * base % p
                e >>= 1
            for j in range(cols):
                M[r, j] = M[r, j] * inv % p
            for i in range(rows):
                if i != r:
                    f = M[i, c] % p
                    if f:
                        for j in range(cols):
                            M[i, j] = (M[i, j] - f * M[r, j]) % p
            piv[r] = c
            r += 1
        return M[:r], piv[:r]


def rref_mod(M, p):
    """Reduced row echelon form of M over F_p; returns (R, pivot_columns)."""
    M = np.ascontiguousarray(M, dtype=np.int64) % p
    if M.size == 0:
        return M[:0], []
    if USE_NUMBA:
        R, piv = _rref_nb(M.copy(), p)
        return R, [int(c) for c in piv]
    return _rref_np(M, p)


def nullspace_mod(M, p):
    """Reduced-echelon basis of the right kernel of M over F_p (rows = basis)."""
    M = np.ascontiguousarray(M, dtype=np.int64)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref_mod(M, p)
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-int(R[i, f])) % p
    if basis.shape[0] > 1:
        basis, _ = rref_mod(basis, p)
    return basis


def solve_mod(A, B, p):
    """Solve A X = B over F_p for invertible square A; returns X."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    k = A.shape[0]
    aug = np.concatenate([A, B.reshape(k, -1)], axis=1)
    R, piv = rref_mod(aug, p)
    if len(piv) < k or list(piv[:k]) != list(range(k)):
        raise ValueError("matrix is singular mod %d" % p)
    return R[:k, k:]
