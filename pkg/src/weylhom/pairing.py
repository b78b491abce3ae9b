"""Evaluation of weight-space elements against column fillings.

Distributing each row's content of a monomial one unit per occupied column
and antisymmetrizing every column realizes D(mu) -> tensor of exterior powers
indexed by the columns of mu.  The kernel of this map is exactly the relation
space of the presentation, so the coefficient vector of an element at the
column fillings of the semistandard tableaux decides membership in the
relation space -- and recovers semistandard coordinates -- without ever
enumerating the ambient monomial basis.
"""

import numpy as np

from . import _kernels
from .combinatorics import Tableau, conjugate, enumerate_sst
from .errors import ResourceCapError
from .weyl import WeylVector, get_max_dim


class PairingContext:
    """Pairing data for one weight space Delta(mu)_alpha over F_p."""

    def __init__(self, mu, alpha, p, max_dim=None):
        self.mu = mu
        self.alpha = alpha
        self.p = p
        self.n = alpha.n
        self.sst = enumerate_sst(mu, alpha)
        cap = get_max_dim() if max_dim is None else max_dim
        if len(self.sst) > cap:
            raise ResourceCapError(
                "semistandard basis of size %d exceeds cap %d" % (len(self.sst), cap),
                size=len(self.sst), cap=cap)
        heights = conjugate(mu).parts
        self.heights = np.array(heights, dtype=np.int64)
        hmax = max(heights) if heights else 0
        # column letters of each semistandard target
        self.letters = []
        for S in self.sst:
            rows = S.expanded_rows()
            letters = np.zeros((len(heights), hmax), dtype=np.int64)
            for j, h in enumerate(heights):
                for i in range(h):
                    letters[j, i] = rows[i][j]
            self.letters.append(letters)
        self._gram_inv_t = None

    @property
    def dim(self):
        return len(self.sst)

    def eval_rows(self, terms_list):
        """Pairing coordinates for a batch of formal sums.

        terms_list: list of dicts {matrix tuple -> coefficient}.
        Returns an int64 array of shape (len(terms_list), dim); row i is the
        coefficient vector of the i-th element at the semistandard column
        fillings.  The i-th element lies in the relation space iff row i is 0.
        """
        K = len(self.sst)
        out = np.zeros((len(terms_list), K), dtype=np.int64)
        if K == 0 or not terms_list:
            return out
        # batch the distinct monomials across all inputs
        monomials = sorted({m for terms in terms_list for m in terms})
        if not monomials:
            return out
        index = {m: i for i, m in enumerate(monomials)}
        states = np.array(monomials, dtype=np.int64)
        coeff = np.zeros((len(terms_list), len(monomials)), dtype=np.int64)
        for i, terms in enumerate(terms_list):
            for m, c in terms.items():
                coeff[i, index[m]] = c % self.p
        for k in range(K):
            vals = _kernels.pair_eval(self.heights, self.letters[k], states, self.n, self.p)
            out[:, k] = coeff.dot(vals) % self.p
        return out

    def is_relation(self, terms):
        """True iff the formal sum (dict matrix->coeff) maps to 0 in Delta(mu)_alpha."""
        return not self.eval_rows([terms]).any()

    def _gram(self):
        """Pairing matrix of the semistandard basis against its own fillings."""
        basis_terms = [{S.matrix: 1} for S in self.sst]
        return self.eval_rows(basis_terms)

    def straighten_terms(self, terms):
        """Semistandard coordinates of a formal sum, via the pairing matrix."""
        if not self.sst:
            return WeylVector(self.mu, self.alpha, self.p, {})
        if self._gram_inv_t is None:
            G = self._gram()
            K = len(self.sst)
            self._gram_inv_t = _kernels.solve_mod(G.T, np.eye(K, dtype=np.int64), self.p)
        f = self.eval_rows([terms])[0]
        coords = self._gram_inv_t.dot(f) % self.p
        coeffs = {S: int(c) for S, c in zip(self.sst, coords) if c}
        return WeylVector(self.mu, self.alpha, self.p, coeffs)
