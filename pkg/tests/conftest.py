import numpy as np
import pytest

from cnenergy.graph import Graph


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    p = rng.uniform(0.1, 0.9) if p is None else p
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
