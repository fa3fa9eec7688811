"""The shipped fixture catalog, loaded from the packaged edge-list files."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .errors import PreconditionError
from .graph import Graph, parse_edgelist

FIXTURE_NAMES = (
    "k3",
    "p3",
    "c4",
    "c5",
    "c6",
    "k4",
    "k5",
    "k33",
    "diamond",
    "bowtie",
    "fan5",
    "fan6",
    "w4",
    "oct",
    "twok4",
)


def fixture_path(name: str):
    return resources.files(__package__) / "fixtures" / f"{name.lower()}.el"


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Graph:
    key = name.lower()
    if key not in FIXTURE_NAMES:
        raise PreconditionError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return parse_edgelist(fixture_path(key).read_text())


def all_fixtures() -> dict[str, Graph]:
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
