import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from simplegames.games import TableGame  # noqa: E402


def all_tables(n):
    """Every simple game on n players."""
    size = 1 << n
    for bits in range(1 << size):
        yield TableGame(n, frozenset(m for m in range(size) if bits >> m & 1))


def random_tables(n, count, seed):
    rng = random.Random(seed)
    size = 1 << n
    for _ in range(count):
        yield TableGame(n, frozenset(m for m in range(size) if rng.random() < 0.5))


@pytest.fixture
def rng():
    return random.Random(20261019)
