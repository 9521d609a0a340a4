import random
from pathlib import Path

import pytest

from nbjordan.graphs import Graph
from nbjordan.smallgraphs import (
    connected_min_degree2,
    masks_to_graph,
    random_connected_graph,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"

CORPUS_SEED = 7
CORPUS_RANDOM_COUNT = 100


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

def complete(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )

def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(
        a + b, [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)]
    )


def data_lines(name: str) -> list[str]:
    path = DATA_DIR / name
    if not path.exists():
        pytest.skip(f"data file {name} not present")
    return path.read_text().splitlines()


@pytest.fixture(scope="session")
def corpus():
    """All connected min-degree-2 graphs with n <= 6 plus 100 seeded random
    connected graphs with n <= 8."""
    graphs = []
    for n in range(3, 7):
        graphs.extend(masks_to_graph(m) for m in connected_min_degree2(n))
    rng = random.Random(CORPUS_SEED)
    graphs.extend(
        random_connected_graph(rng, n_max=8) for _ in range(CORPUS_RANDOM_COUNT)
    )
    return graphs
