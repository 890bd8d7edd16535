import random

import pytest

from bentgraph.boolfn import BooleanFunction, from_truth_table


@pytest.fixture
def AND():
    return from_truth_table(2, "0001")


@pytest.fixture
def bent4():
    """x1x2 + x3x4."""
    return BooleanFunction(4, tuple(((x >> 3) & (x >> 2) & 1) ^ ((x >> 1) & x & 1) for x in range(16)))


def all_functions(n):
    size = 1 << n
    for t in range(1 << size):
        yield BooleanFunction(n, tuple((t >> (size - 1 - i)) & 1 for i in range(size)))


def random_tables(n, count, seed):
    rng = random.Random(seed)
    size = 1 << n
    for _ in range(count):
        bits = rng.getrandbits(size)
        yield BooleanFunction(n, tuple((bits >> i) & 1 for i in range(size)))
