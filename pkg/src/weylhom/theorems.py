"""Hypothesis checkers for the stability, nonvanishing and Carter-Payne
criteria, plus the d_k sweep used by the stability/periodicity experiments."""

from dataclasses import dataclass, field

from .combinatorics import Weight, dominates, in_P, in_lambda_g
from .errors import InvalidInputError, ResourceCapError
from .modp import check_prime, hom_stats, lp
from .homspace import hom_space


@dataclass
class Verdict:
    applicable: bool
    failed_conditions: list = field(default_factory=list)
    prediction: str = ""

    def fail(self, label):
        self.failed_conditions.append(label)
        self.applicable = False


def check_stability(lam, mu, gamma, p):
    """Hypotheses of the stability theorem for the shift by gamma.

    Checks, with g = len(gamma), m = len(mu): lambda in P(mu); mu in
    Lambda^+(n)_g; g < m; and p^{lp(e_s)} | gamma_s for s = 1..g.
    """
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    v = Verdict(applicable=True)
    g = gamma.length
    m = mu.length
    if g == 0:
        v.prediction = "gamma = 0: dimensions trivially equal"
        return v
    if not in_P(_as_weight(lam), mu):
        v.fail("lambda not in P(mu)")
    if not in_lambda_g(mu, g):
        v.fail("mu not in Lambda^+(n)_%d" % g)
    if not g < m:
        v.fail("g = %d is not < m = %d" % (g, m))
    if v.applicable:
        stats = hom_stats(lam, mu, g)
        for s in range(1, g + 1):
            mod = p ** lp(stats.e[s - 1], p)
            if gamma.part(s) % mod:
                v.fail("gamma_%d = %d not divisible by p^lp(e_%d) = %d" %
                       (s, gamma.part(s), s, mod))
    if v.applicable:
        v.prediction = ("dim Hom(Delta(%s), Delta(%s)) = dim Hom(Delta(%s), Delta(%s))"
                        % (lam, mu, lam.add(gamma), mu.add(gamma)))
    return v


def check_nonvanishing(lam, mu, p):
    """Hypotheses of the nonvanishing theorem for psi.

    With n = len(lambda), m = len(mu): lambda dominated by mu, lambda in P(mu),
    (1) p^{lp(c_s)} | lambda_s - mu_{s+1} + 1 for s = 1..m-2 together with
    p^{lp(c'_{m-1})} | lambda_{m-1} - mu_m + 1, and
    (2) p^{lp(lambda_{s+1})} | lambda_s + 1 for s = m..n-1.
    For m = 1 the ranges of condition (1) are empty and it holds vacuously.
    """
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    v = Verdict(applicable=True)
    n = lam.length
    m = mu.length
    if not dominates(lam, mu):
        v.fail("lambda not dominated by mu")
        return v
    if not in_P(_as_weight(lam), mu):
        v.fail("lambda not in P(mu)")
    stats = hom_stats(lam, mu, max(m, 1))
    if m >= 2:
        for s in range(1, m - 1):
            mod = p ** lp(stats.c[s - 1], p)
            if (lam.part(s) - mu.part(s + 1) + 1) % mod:
                v.fail("condition (1): lambda_%d - mu_%d + 1 = %d not divisible by %d" %
                       (s, s + 1, lam.part(s) - mu.part(s + 1) + 1, mod))
        mod = p ** lp(stats.c_prime, p)
        if (lam.part(m - 1) - mu.part(m) + 1) % mod:
            v.fail("condition (1): lambda_%d - mu_%d + 1 = %d not divisible by p^lp(c') = %d" %
                   (m - 1, m, lam.part(m - 1) - mu.part(m) + 1, mod))
    for s in range(m, n):
        mod = p ** lp(lam.part(s + 1), p)
        if (lam.part(s) + 1) % mod:
            v.fail("condition (2): lambda_%d + 1 = %d not divisible by p^lp(lambda_%d) = %d" %
                   (s, lam.part(s) + 1, s + 1, mod))
    if v.applicable:
        note = " (m=1: condition (1) is vacuous)" if m <= 1 else ""
        v.prediction = "psi induces a nonzero homomorphism; dim Hom >= 1" + note
    return v


def carter_payne_witnesses(lam, mu, p):
    """All triples (i, j, q) with mu obtained from lambda by moving q boxes from
    row j up to row i subject to p^{lp(q)} | lambda_i - lambda_j + j - i + q."""
    check_prime(p)
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    n = max(lam.length, mu.length) + 1
    a = lam.padded(n)
    b = mu.padded(n)
    diffs = [bi - ai for ai, bi in zip(a, b)]
    moved = [k for k, d in enumerate(diffs) if d]
    if len(moved) != 2:
        return []
    i, j = moved
    q = diffs[i]
    if q <= 0 or diffs[j] != -q:
        return []
    i += 1
    j += 1
    if (a[i - 1] - a[j - 1] + j - i + q) % (p ** lp(q, p)):
        return []
    return [(i, j, q)]


def sweep_dk(lam, mu, nu, p, kmax, max_dim=None):
    """[d_0, ..., d_kmax] with d_k = dim Hom(Delta(lambda + k nu), Delta(mu + k nu))."""
    check_prime(p)
    if kmax < 0:
        raise InvalidInputError("kmax must be >= 0")
    out = []
    for k in range(kmax + 1):
        shift = nu.scale(k)
        try:
            out.append(hom_space(lam.add(shift), mu.add(shift), p, max_dim=max_dim).dim)
        except ResourceCapError as exc:
            raise ResourceCapError("resource cap exceeded at k=%d: %s" % (k, exc),
                                   size=exc.size, cap=exc.cap) from exc
    return out


def _as_weight(lam):
    return Weight(lam.padded(max(lam.length, 1)))
