from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from weylhom.combinatorics import Partition
from weylhom.errors import InvalidInputError
from weylhom.modp import FpScalar, binom_mod, check_prime, hom_stats, lp


class TestPrimeValidation:
    def test_accepts_primes(self):
        for p in (2, 3, 5, 7, 11, 97):
            assert check_prime(p) == p

    def test_rejects_composites(self):
        for p in (0, 1, 4, 6, 9, 91):
            with pytest.raises(InvalidInputError):
                check_prime(p)


class TestLp:
    def test_examples(self):
        assert lp(2, 3) == 1
        assert lp(3, 3) == 2
        assert lp(0, 5) == 0

    def test_definition(self):
        for p in (2, 3, 5):
            for a in range(1, 200):
                i = lp(a, p)
                assert p ** i > a >= p ** (i - 1)


class TestBinomMod:
    def test_edge_conventions(self):
        for a in range(10):
            assert binom_mod(a, 0, 5) == 1
        assert binom_mod(3, 5, 5) == 0
        assert binom_mod(3, -1, 5) == 0

    def test_examples(self):
        assert binom_mod(5, 3, 3) == 1
        assert binom_mod(10, 4, 3) == 0

    def test_scalar_type(self):
        s = binom_mod(5, 3, 3)
        assert isinstance(s, FpScalar)
        assert s.p == 3

    def test_lucas_agrees_with_integers(self):
        for p in (2, 3, 5, 7):
            for a in range(41):
                for b in range(41):
                    assert int(binom_mod(a, b, p)) == (comb(a, b) % p if b <= a else 0)

    @given(st.integers(0, 500), st.integers(0, 60), st.integers(0, 40),
           st.sampled_from([2, 3, 5, 7]))
    @settings(max_examples=300, deadline=None)
    def test_shift_invariance(self, a, b, dmult, p):
        # p^lp(b) | d implies C(a+d, b) = C(a, b) mod p
        d = dmult * p ** lp(b, p)
        assert binom_mod(a + d, b, p) == binom_mod(a, b, p)

    def test_consecutive_divisibility(self):
        # p divides all of C(a+1,1),...,C(a+b,b) iff p^lp(b) | a+1
        for p in (2, 3, 5):
            for a in range(31):
                for b in range(1, 31):
                    all_div = all(binom_mod(a + j, j, p) == 0 for j in range(1, b + 1))
                    assert all_div == ((a + 1) % p ** lp(b, p) == 0), (p, a, b)

    def test_vandermonde(self):
        from itertools import product
        for p in (2, 3, 5):
            for s in (2, 3):
                for parts in product(range(6), repeat=s):
                    a = sum(parts)
                    for t in range(a + 2):
                        acc = 0
                        for tv in _compositions(t, s):
                            term = 1
                            for ai, ti in zip(parts, tv):
                                term = term * binom_mod(ai, ti, p) % p
                            acc = (acc + term) % p
                        assert acc == binom_mod(a, t, p), (parts, t, p)

    def test_alternating_identity(self):
        # sum_j (-1)^(c-j) C(a+j,j) C(b,c-j) = C(a-b+c,c), over Z and mod p
        for a in range(0, 21, 4):
            for b in range(0, a + 1, 3):
                for c in range(11):
                    acc = sum((-1) ** (c - j) * comb(a + j, j) * comb(b, c - j)
                              for j in range(c + 1))
                    expected = comb(a - b + c, c) if c <= a - b + c else 0
                    assert acc == expected, (a, b, c)
                    for p in (2, 3, 5):
                        assert acc % p == binom_mod(a - b + c, c, p)


def _compositions(total, s):
    if s == 1:
        return [(total,)]
    out = []
    for v in range(total + 1):
        for rest in _compositions(total - v, s - 1):
            out.append((v,) + rest)
    return out


class TestHomStats:
    def test_known_triples(self):
        s = hom_stats(Partition((20, 14, 4, 4, 4, 4)), Partition((24, 16, 10)), 2)
        assert s.e == (4, 4)
        assert s.c[0] == 4
        s = hom_stats(Partition((11, 10, 7, 3, 3)), Partition((14, 10, 7, 3)), 3)
        assert s.e == (3, 3, 3)
        s = hom_stats(Partition((4, 3, 2, 2)), Partition((5, 5, 1)), 2)
        assert s.e == (1, 2)

    def test_c_definition(self):
        lam = Partition((2, 2, 1))
        mu = Partition((4, 1))
        s = hom_stats(lam, mu, 1)
        assert s.c[:3] == (2, 1, 0)

    def test_c_prime(self):
        s = hom_stats(Partition((20, 14, 4, 4, 4, 4)), Partition((24, 16, 10)), 2)
        assert s.c_prime == 4  # min(c_2, lam_3) = min(6, 4)
        s = hom_stats(Partition((2, 1)), Partition((3,)), 1)
        assert s.c_prime is None  # len(mu) = 1

    def test_g1_shifted_pair(self):
        # e_1 = min(lam_2, c_1) = 3 for the shifted acceptance pair
        s = hom_stats(Partition((11, 10, 7, 3, 3)), Partition((14, 10, 7, 3)), 1)
        assert s.e == (3,)
