import json
from pathlib import Path

import numpy as np
import pytest

from shared.complexes import named_complex, new_complex, new_graph, restrict
from shared.config import get_settings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("SRSQ_COUNTEREXAMPLE_DIR", str(tmp_path / "counterexamples"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def load_fixture():
    return lambda name: json.loads((FIXTURES / name).read_text())


@pytest.fixture
def pentagon():
    return named_complex("pentagon")


@pytest.fixture
def rp2():
    return named_complex("rp2")


@pytest.fixture
def four_path():
    return named_complex("four_path")


@pytest.fixture
def random_complexes():
    """Seeded complexes of mixed dimension on at most six vertices, no ghosts."""
    rng = np.random.default_rng(7)
    out = []
    for _ in range(25):
        n = int(rng.integers(2, 7))
        faces = []
        for _ in range(int(rng.integers(1, 5))):
            size = int(rng.integers(1, min(n, 4) + 1))
            faces.append(sorted(rng.choice(np.arange(1, n + 1), size=size, replace=False).tolist()))
        delta = new_complex(n, faces, allow_ghost_vertices=True)
        out.append(restrict(delta, delta.used_vertices).complex)
    return out


@pytest.fixture
def random_graphs():
    """Seeded graphs on one to eight vertices."""
    rng = np.random.default_rng(11)
    out = []
    for _ in range(40):
        n = int(rng.integers(1, 9))
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4]
        out.append(new_graph(n, edges))
    return out
