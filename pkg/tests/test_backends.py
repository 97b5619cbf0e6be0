import random
from array import array

import pytest

import exkh._cubecore_py as pure
from exkh.cube import BACKEND

compiled = pytest.importorskip(
    "exkh._cubecore", reason="compiled kernel not built"
)


def test_backend_reports_compiled():
    assert BACKEND == "compiled"


def test_kernels_agree_on_random_joins():
    rng = random.Random(2718)
    for _ in range(40):
        n = rng.randint(0, 9)
        m = rng.randint(1, 2 * n + 1)
        j0 = array("i", [rng.randrange(m) for _ in range(4 * n)])
        j1 = array("i", [rng.randrange(m) for _ in range(4 * n)])
        assert compiled.circle_counts_all(n, m, j0, j1) == pure.circle_counts_all(
            n, m, j0, j1
        )


def test_kernels_agree_on_corpus(small_corpus):
    from exkh.resolution import _join_arrays

    for entry in small_corpus:
        d = entry.diagram()
        m, j0, j1 = _join_arrays(d)
        assert compiled.circle_counts_all(d.n, m, j0, j1) == pure.circle_counts_all(
            d.n, m, j0, j1
        )
