from __future__ import annotations

import json
import os
import random
import subprocess
import sys

import numpy as np

from tricrit._kernels import count_colorings, enumerate_partitions
from tricrit.graph import build_graph


def test_enumerate_partitions_direct(fx):
    fan5 = fx["fan5"]
    out = np.full((10, 5), -1, np.int8)
    fixed = np.full(5, -1, np.int8)
    found, hit = enumerate_partitions(fan5.masks, 5, fixed, 0, 10, out)
    assert found == 1 and hit == 0

    c5 = fx["c5"]
    out = np.full((10, 5), -1, np.int8)
    found, hit = enumerate_partitions(c5.masks, 5, fixed, 0, 10, out)
    assert found == 5 and hit == 0
    found, hit = enumerate_partitions(c5.masks, 5, fixed, 0, 3, out)
    assert found == 3 and hit == 1


def test_count_colorings_direct(fx):
    assert count_colorings(fx["k3"].masks, 3, 3) == 6
    assert count_colorings(fx["c5"].masks, 5, 3) == 30
    assert count_colorings(fx["c5"].masks, 5, 2) == 0
    assert count_colorings(fx["k4"].masks, 4, 4) == 24
    assert count_colorings(build_graph(0, []).masks, 0, 3) == 1


def test_pure_path_matches_numba_for_backtracking():
    rng = random.Random(13)
    sample = []
    for _ in range(20):
        n = rng.randint(1, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        sample.append([n, edges])
    code = (
        "import json, sys\n"
        "import numpy as np\n"
        "from tricrit.graph import build_graph\n"
        "from tricrit._kernels import USING_NUMBA, count_colorings, enumerate_partitions\n"
        "out = []\n"
        "for n, edges in json.loads(sys.stdin.read()):\n"
        "    g = build_graph(n, [tuple(e) for e in edges])\n"
        "    fixed = np.full(n, -1, np.int8)\n"
        "    buf = np.full((3**max(n-1,0)+1, n), -1, np.int8)\n"
        "    found, _ = enumerate_partitions(g.masks, n, fixed, 0, buf.shape[0], buf)\n"
        "    out.append([int(count_colorings(g.masks, n, 3)), int(found)])\n"
        "print(json.dumps({'numba': USING_NUMBA, 'out': out}))\n"
    )
    env = dict(os.environ, TRICRIT_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-c", code],
        input=json.dumps(sample),
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    pure = json.loads(proc.stdout)
    assert pure["numba"] is False
    here = []
    for n, edges in sample:
        g = build_graph(n, [tuple(e) for e in edges])
        fixed = np.full(n, -1, np.int8)
        buf = np.full((3 ** max(n - 1, 0) + 1, n), -1, np.int8)
        found, _ = enumerate_partitions(g.masks, n, fixed, 0, buf.shape[0], buf)
        here.append([int(count_colorings(g.masks, n, 3)), int(found)])
    assert pure["out"] == here
