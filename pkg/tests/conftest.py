import random

import pytest

from teachdim.automata import Dfa


def rand_dfa(rng: random.Random, k: int) -> Dfa:
    """Arbitrary labeled machine: start 0, uniform edges and accept mask.
    Not necessarily minimal or canonical."""
    return Dfa(
        k,
        0,
        tuple(rng.randrange(k) for _ in range(k)),
        tuple(rng.randrange(k) for _ in range(k)),
        frozenset(q for q in range(k) if rng.random() < 0.5),
    )


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
