from __future__ import annotations

import pytest

from tricrit.errors import PreconditionError
from tricrit.planar import faces, is_planar
from tricrit.triangulations import triangulations

# simple planar triangulation class counts
KNOWN = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50}


@pytest.mark.parametrize("n,count", sorted(KNOWN.items()))
def test_counts(n, count):
    assert len(triangulations(n)) == count


def test_everything_generated_is_a_triangulation():
    for n in (6, 7, 8):
        for g in triangulations(n):
            assert g.m == 3 * n - 6
            ok, emb = is_planar(g)
            assert ok
            assert all(f.degree == 3 for f in faces(g, emb))
            assert g.min_degree() >= 3


def test_rejects_tiny():
    with pytest.raises(PreconditionError):
        triangulations(3)
