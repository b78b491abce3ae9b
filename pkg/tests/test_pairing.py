import numpy as np
import pytest

from weylhom import _kernels
from weylhom.combinatorics import Partition, Tableau, Weight, enumerate_rsst
from weylhom.errors import ResourceCapError
from weylhom.pairing import PairingContext
from weylhom.weyl import FormalSum, straighten, weight_space

from conftest import random_partition


def _random_weight(rng, r, n):
    cuts = sorted(rng.randint(0, r) for _ in range(n - 1))
    return Weight([b - a for a, b in zip([0] + cuts, cuts + [r])])


class TestPairingAgainstRelations:
    def test_straighten_agreement_randomized(self, rng):
        done = 0
        while done < 80:
            r = rng.randint(2, 7)
            mu = random_partition(rng, r)
            n = rng.randint(max(2, mu.length), max(4, mu.length))
            alpha = _random_weight(rng, r, n)
            monos = enumerate_rsst(mu, alpha)
            if not monos:
                continue
            p = rng.choice([2, 3, 5])
            ctx_rel = weight_space(mu, alpha, p)
            ctx_pair = PairingContext(mu, alpha, p)
            picks = rng.sample(monos, min(3, len(monos)))
            terms = {T: (rng.randint(1, p - 1) if p > 2 else 1) for T in picks}
            x = FormalSum(mu, alpha, p=p, terms=terms)
            assert straighten(ctx_rel, x) == ctx_pair.straighten_terms(x.raw())
            done += 1

    def test_relation_detection_agreement(self, rng):
        done = 0
        while done < 40:
            r = rng.randint(2, 6)
            mu = random_partition(rng, r)
            if mu.length < 2:
                continue
            n = max(mu.length, 2)
            alpha = _random_weight(rng, r, n)
            monos = enumerate_rsst(mu, alpha)
            if not monos:
                continue
            p = rng.choice([2, 3])
            from weylhom.weyl import _box_apply_raw, weight_after_box, \
                _enumerate_margin_matrices
            s = rng.randint(1, mu.length - 1)
            t = rng.randint(1, mu.parts[s])
            src = weight_after_box(mu, s, t, n)
            gens = _enumerate_margin_matrices(src.entries, alpha.entries, n)
            if not gens:
                continue
            g = rng.choice(gens)
            img = {k: v % p for k, v in _box_apply_raw(g, s, t).items() if v % p}
            ctx_pair = PairingContext(mu, alpha, p)
            assert ctx_pair.is_relation(img), (mu, alpha, s, t, g, p)
            done += 1

    def test_gram_unitriangular_diagonal(self, rng):
        # the self-pairing of a semistandard tableau is 1
        for _ in range(30):
            r = rng.randint(2, 7)
            mu = random_partition(rng, r)
            n = max(mu.length, 2)
            alpha = _random_weight(rng, r, n)
            p = rng.choice([2, 3, 5])
            ctx = PairingContext(mu, alpha, p)
            if not ctx.sst:
                continue
            G = ctx._gram()
            assert (np.diag(G) == 1).all(), (mu, alpha, p)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            PairingContext(Partition((4, 2)), Weight((2, 2, 1, 1)), 2, max_dim=0)


class TestKernelLanes:
    def test_pair_eval_lanes_agree(self, rng):
        if not _kernels.HAS_NUMBA:
            pytest.skip("numba unavailable")
        for _ in range(25):
            r = rng.randint(2, 7)
            mu = random_partition(rng, r)
            n = max(mu.length, 2)
            alpha = _random_weight(rng, r, n)
            p = rng.choice([2, 3, 5])
            ctx = PairingContext(mu, alpha, p)
            monos = enumerate_rsst(mu, alpha)
            if not monos or not ctx.sst:
                continue
            states = np.array([T.matrix for T in monos], dtype=np.int64)
            for letters in ctx.letters[:3]:
                a = _kernels._pair_eval_py(ctx.heights, letters, states, n, p)
                b = _kernels._pair_eval_nb(ctx.heights, letters, states, n, p,
                                           _kernels._PERMS, _kernels._PERM_CNT,
                                           _kernels._SIGNS)
                assert (a == b).all(), (mu, alpha, p)

    def test_rref_lanes_agree(self, rng):
        for _ in range(30):
            p = rng.choice([2, 3, 5, 7])
            rows = rng.randint(1, 8)
            cols = rng.randint(1, 8)
            M = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                         dtype=np.int64)
            R1, piv1 = _kernels._rref_np(M.copy(), p)
            R2, piv2 = _kernels.rref_mod(M.copy(), p)
            assert list(piv1) == list(piv2)
            assert (np.asarray(R1) == np.asarray(R2)).all()

    def test_nullspace_soundness(self, rng):
        for _ in range(30):
            p = rng.choice([2, 3, 5])
            rows = rng.randint(1, 7)
            cols = rng.randint(1, 7)
            M = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                         dtype=np.int64)
            N = _kernels.nullspace_mod(M, p)
            assert (M.dot(N.T) % p == 0).all()
            R, piv = _kernels.rref_mod(M, p)
            assert N.shape[0] == cols - len(piv)
