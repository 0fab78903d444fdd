"""Compiled and pure-Python kernels must agree, including on overflow."""

from array import array

import pytest
from hypothesis import given

from hyperzagreb import _kernels, _pykernels

from conftest import graphs

ckernels = pytest.importorskip("hyperzagreb._ckernels")

BACKENDS = [pytest.param(_pykernels, id="python"), pytest.param(ckernels, id="cython")]


def star_csr(leaves: int):
    indptr = array("q", [0])
    indptr.extend(range(leaves, 2 * leaves + 1))
    indices = array("q", range(1, leaves + 1))
    indices.extend([0] * leaves)
    return indptr, indices


@given(graphs(max_vertices=16))
def test_backends_agree(g):
    indptr, indices = g._csr
    assert ckernels.index_sums(indptr, indices) == _pykernels.index_sums(indptr, indices)
    assert list(ckernels.neighbor_degree_sums(indptr, indices)) == _pykernels.neighbor_degree_sums(indptr, indices)


@pytest.mark.parametrize("backend", BACKENDS)
def test_star_below_limit_is_exact(backend):
    k = 2**20
    m1v, m1e, m2, f, hm = backend.index_sums(*star_csr(k))
    assert (m1v, m1e) == (k * k + k, k * k + k)
    assert m2 == k * k
    assert f == k**3 + k
    assert hm == k * (k + 1) ** 2


@pytest.mark.parametrize("backend", BACKENDS)
def test_star_overflow_raises(backend):
    # F = k^3 + k exceeds 2**63 - 1 once k > 2**21 - 1
    with pytest.raises(OverflowError):
        backend.index_sums(*star_csr(2**21 + 1))


def test_selected_backend_is_compiled_when_available():
    assert _kernels.BACKEND_NAME in ("cython", "python")
    if _kernels.compiled_backend is not None:
        assert _kernels.index_sums is ckernels.index_sums


def test_environment_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, HYPERZAGREB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hyperzagreb; print(hyperzagreb.BACKEND_NAME)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"
