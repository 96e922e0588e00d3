import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperlap import core

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

CORPUS_SEED = 2024


@pytest.fixture(scope="session")
def corpus():
    return core.random_corpus(CORPUS_SEED, 200, max_n=8, max_m=10)


@pytest.fixture(scope="session")
def inputs_corpus():
    return core.random_corpus(CORPUS_SEED + 1, 100, max_n=7, max_m=8, only_inputs=True)


@st.composite
def hypergraphs(draw, max_n=6, max_m=6, only_inputs=False, balanced=False):
    """Valid random instances driven by a drawn seed (keeps shrinking cheap)."""
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(1, max_m))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return core.random_hypergraph(rng, n, m, only_inputs=only_inputs, balanced=balanced)
