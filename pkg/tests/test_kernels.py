import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from oracles import connected_graphs
from treenorm import _kernels, _pykernels
from treenorm.graph import Graph

try:
    from treenorm import _ckernels as compiled
except ImportError:
    compiled = None
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@st.composite
def any_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")


def test_pure_python_override():
    env = dict(os.environ, TREENORM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from treenorm import _kernels; print(_kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
@given(any_graphs())
def test_all_pairs_parity(g):
    indptr, indices = g.csr
    assert list(compiled.all_pairs(g.n, indptr, indices)) == _pykernels.all_pairs(g.n, indptr, indices)


@needs_compiled
@given(any_graphs())
def test_ecc_norm_parity(g):
    indptr, indices = g.csr
    fast = compiled.ecc_norm(g.n, indptr, indices)
    slow = _pykernels.ecc_norm(g.n, indptr, indices)
    if slow is None:
        assert fast is None
    else:
        assert tuple(map(list, fast)) == slow


@needs_compiled
@pytest.mark.parametrize("n", range(1, 8))
def test_prufer_parity(n):
    assert compiled.prufer_class_codes(n) == _pykernels.prufer_class_codes(n)


@given(connected_graphs(max_n=10))
def test_connected_never_none(g):
    indptr, indices = g.csr
    assert _kernels.ecc_norm(g.n, indptr, indices) is not None
