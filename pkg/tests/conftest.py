import pathlib

import pytest

from domenergy.graphs import Graph

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fig2_tree() -> Graph:
    """The 10-vertex caterpillar used as the second worked example.

    Vertices 0..9 stand for a..j: a spine b-d-e-f-g-h-i with pendants a, c at b
    and j at g.
    """
    return Graph.from_edges(
        10,
        [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (6, 9)],
    )


@pytest.fixture(scope="session")
def alkane_csv_text() -> str:
    return (DATA_DIR / "alkanes_synthetic.csv").read_text(encoding="utf-8")
