import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from platkit.braids import BraidWord, free_reduce
from platkit.plats import Plat, plat_closure

CORPUS_25 = (6, -5, -4, 3, 2, 2, 3, -4, -5, -6, -6, -5, -4, -3, -2, -2, -3,
             -4, 5, 6, 6, 5, -4, -3, 2)
CORPUS_33 = (-2, -3, -4, -5, -5, 4, 3, -2, -1, -1, 2, -3, -4, 5, 5, 4, 3,
             -2, 1, 1, -2, -3, 4, -5, -5, -4, 3, 2, -1, -1, -2, -3, -4)


def random_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    length = rng.randint(0, max_len)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                    for _ in range(length))
    return free_reduce(BraidWord(strands, letters))


def random_plat(rng: random.Random, strands: int, max_len: int) -> Plat:
    return plat_closure(random_word(rng, strands, max_len))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
