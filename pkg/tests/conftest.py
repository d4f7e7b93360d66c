import random

import pytest

from hamfp import make_standard_g2


@pytest.fixture
def std2():
    return make_standard_g2([2, 1])


@pytest.fixture
def std4():
    return make_standard_g2([3, 2, 1])


def sample_exponents(rng: random.Random, n: int, hi: int = 30) -> list[int]:
    """Distinct positive exponents for a standard dataset in dimension 2n."""
    return rng.sample(range(1, hi), n // 2 + 1)
