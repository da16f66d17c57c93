import random

import pytest

from skewdiag import ASQ, GF2, GF3, GF4, HF, HQ, QQ

EXACT_RINGS = (QQ, HQ, GF2, GF3, GF4, ASQ)


@pytest.fixture
def rng():
    return random.Random(0)


def ring_kwargs(ring):
    """Keep rational-function entries small for the char-2 quaternions."""
    return {"degree": 1} if ring is ASQ else {}
