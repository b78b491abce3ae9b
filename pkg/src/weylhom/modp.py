"""Prime-field scalars, Lucas binomials, the threshold l_p and the c/e statistics."""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError


def check_prime(p):
    """Validate p prime by trial division (inputs are small); returns p."""
    if not isinstance(p, int) or p < 2:
        raise InvalidInputError("p must be a prime integer, got %r" % (p,))
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise InvalidInputError("p = %d is not prime" % p)
        d += 1
    return p


def lp(a, p):
    """Least i with p^i > a; by convention lp(0) = 0."""
    check_prime(p)
    if a < 0:
        raise InvalidInputError("lp requires a >= 0")
    if a == 0:
        return 0
    i = 0
    q = 1
    while q <= a:
        q *= p
        i += 1
    return i


class FpScalar(int):
    """An element of F_p; behaves as its canonical representative in [0, p)."""

    def __new__(cls, value, p):
        check_prime(p)
        self = super().__new__(cls, value % p)
        self.p = p
        return self

    def __repr__(self):
        return "FpScalar(%d, p=%d)" % (int(self), self.p)


def binom_mod(a, b, p):
    """C(a, b) mod p by Lucas' theorem; 0 when b < 0 or b > a."""
    return FpScalar(_binom_mod(a, b, p), p)


@lru_cache(maxsize=1 << 18)
def _binom_mod(a, b, p):
    if b < 0 or b > a:
        return 0
    r = 1
    while a or b:
        ad = a % p
        bd = b % p
        if bd > ad:
            return 0
        # C(ad, bd) for digits < p, via a short product
        num = 1
        den = 1
        for k in range(bd):
            num = num * (ad - k) % p
            den = den * (k + 1) % p
        r = r * num * pow(den, p - 2, p) % p
        a //= p
        b //= p
    return r


@dataclass(frozen=True)
class HomStats:
    """The partial-sum defects c_s, thresholds e_1..e_g and c' statistic."""

    c: tuple
    e: tuple
    g: int
    c_prime: object  # None when len(mu) < 2


def hom_stats(lam, mu, g):
    """Compute c_s = sum_{i<=s}(mu_i - lam_i), the e-sequence for the given g, and c'."""
    if lam.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (lam, mu))
    if g < 1:
        raise InvalidInputError("g must be >= 1")
    n = max(lam.length, mu.length, g + 1)
    lp_ = lam.padded(n)
    mp_ = mu.padded(n)
    c = []
    acc = 0
    for i in range(n):
        acc += mp_[i] - lp_[i]
        c.append(acc)
    c = tuple(c)

    if g == 1:
        e = (min(lam.part(2), c[0]),)
    else:
        e = [c[0]]
        for s in range(2, g):
            e.append(max(c[s - 2], c[s - 1]))
        e.append(min(lam.part(g + 1), c[g - 1]))
        e = tuple(e)

    m = mu.length
    c_prime = min(c[m - 2], lam.part(m)) if m >= 2 else None
    return HomStats(c=c, e=e, g=g, c_prime=c_prime)
