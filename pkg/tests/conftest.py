from __future__ import annotations

import pytest

from tricrit.fixtures import all_fixtures
from tricrit.search import enumerate_graphs, pool_config


@pytest.fixture(scope="session")
def fx():
    return all_fixtures()


@pytest.fixture(scope="session")
def pool7():
    """Hereditary survivors (connected planar 3-colorable) up to 7 vertices."""
    return enumerate_graphs(pool_config(7)).levels


@pytest.fixture(scope="session")
def unpruned6():
    """Every unlabeled graph up to 6 vertices, one canonical string each."""
    from tricrit.search import SearchConfig

    cfg = SearchConfig(
        n=6,
        connected=False,
        biconnected=False,
        min_degree2=False,
        min_edges=False,
        triangle_bounds=False,
        planar_incremental=False,
        three_colorable=False,
    )
    return enumerate_graphs(cfg).levels
