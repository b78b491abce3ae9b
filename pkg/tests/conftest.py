import random

import pytest

from weylhom.combinatorics import Partition, Weight


def partitions_of(r, max_len=None, max_part=None):
    """All partitions of r, optionally bounded in length and largest part."""
    max_len = r if max_len is None else max_len
    max_part = r if max_part is None else max_part
    out = []

    def rec(rem, mx, pre):
        if rem == 0:
            out.append(Partition(pre))
            return
        if len(pre) == max_len:
            return
        for x in range(min(rem, mx), 0, -1):
            rec(rem - x, x, pre + [x])

    rec(r, max_part, [])
    return out


def weights_of(r, n):
    """All compositions of r into n parts."""
    out = []
    cur = [0] * n

    def rec(i, rem):
        if i == n - 1:
            cur[i] = rem
            out.append(Weight(cur))
            cur[i] = 0
            return
        for v in range(rem + 1):
            cur[i] = v
            rec(i + 1, rem - v)
            cur[i] = 0

    if n:
        rec(0, r)
    return out


def random_partition(rng, r):
    parts = []
    rem = r
    while rem:
        x = rng.randint(1, rem)
        parts.append(x)
        rem -= x
    return Partition(sorted(parts, reverse=True))


@pytest.fixture
def rng():
    return random.Random(20260823)
