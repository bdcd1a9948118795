import itertools
import math

import pytest

from verlinde_abelian import _kernels_py, kernels


def test_backend_name_is_known():
    assert kernels.BACKEND in ("python", "cython")
    assert kernels.BACKEND in kernels.IMPLEMENTATIONS


@pytest.mark.parametrize("args", [(1, 1, 1, 5), (2, 1, 3, 5), (0, 0, 0, 4), (-3, 7, 2, 9), (5, 0, 5, 1)])
def test_coordinate_count_matches_definition(backend, args):
    a, b, c, d = args
    expected = sum(
        1 for x in range(d) for y in range(d) if (a * x - b * y) % d == 0 and (c * y - b * x) % d == 0
    )
    assert backend.count_coordinate_solutions(a, b, c, d) == expected


@pytest.mark.parametrize("args", [(1, 1, 1, 2), (1, 0, 1, 2), (2, 1, 3, 3), (0, 1, 0, 3)])
def test_pair_count_is_fourth_power_of_coordinate_count(backend, args):
    assert backend.count_pair_solutions_direct(*args) == backend.count_coordinate_solutions(*args) ** 4


@pytest.mark.parametrize("n,vec", [(1, (0, 0, 0, 0)), (3, (1, 0, 0, 0)), (6, (1, 2, 3, 4)), (5, (-1, 7, 0, 2))])
def test_histogram_matches_enumeration(backend, n, vec):
    hist = backend.order_phase_histogram(n, *vec)
    expected = [0] * ((n + 1) * n)
    for x in itertools.product(range(n), repeat=4):
        g = math.gcd(n, *x)
        expected[g * n + sum(c * xi for c, xi in zip(vec, x)) % n] += 1
    assert hist == expected
    assert sum(hist) == n**4


def test_backends_agree():
    impls = list(kernels.IMPLEMENTATIONS.values())
    for impl in impls[1:]:
        for args in [(3, -2, 5, 7), (4, 6, 9, 12)]:
            assert impl.count_coordinate_solutions(*args) == _kernels_py.count_coordinate_solutions(*args)
        assert impl.order_phase_histogram(9, 1, 3, 0, 2) == _kernels_py.order_phase_histogram(9, 1, 3, 0, 2)


def test_environment_forces_pure_python():
    import os
    import subprocess
    import sys

    env = dict(os.environ, VERLINDE_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from verlinde_abelian import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env,
    )
    assert proc.stdout.strip() == "python"
