import importlib
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from apseq import _kernels_py, kernels
from apseq.exactnum import GaussianRational
from apseq.linalg import ExactMatrix, Vector

try:
    from apseq import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))
seqs = st.lists(fracs, min_size=1, max_size=16)


def naive_rows(values, depth):
    rows = [list(values)]
    for _ in range(depth):
        r = rows[-1]
        rows.append([r[i + 1] - r[i] for i in range(len(r) - 1)])
    return rows


@given(seqs)
def test_python_rows_match_naive(values):
    depth = len(values) - 1
    assert _kernels_py.difference_rows(values, depth) == naive_rows(values, depth)
    assert _kernels_py.leading_column(values) == [r[0] for r in naive_rows(values, depth)]


@needs_compiled
@given(seqs, st.data())
def test_backends_agree_exact(values, data):
    h = data.draw(st.integers(0, len(values) - 1))
    assert compiled.difference_rows(values, h) == _kernels_py.difference_rows(values, h)
    assert compiled.leading_column(values) == _kernels_py.leading_column(values)
    assert compiled.direct_difference(values, h) == _kernels_py.direct_difference(values, h)
    n = data.draw(st.integers(0, 40))
    assert compiled.newton_eval(values, n) == _kernels_py.newton_eval(values, n)


@needs_compiled
@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=14), st.floats(1e-12, 1e-3))
def test_backends_agree_float(values, tol):
    depth = len(values) - 1
    a = compiled.difference_rows_float(values, depth)
    b = _kernels_py.difference_rows_float(values, depth)
    assert a == b
    for order in range(1, depth + 1):
        assert compiled.float_row_vanishes(values, a[order], order, tol) == \
            _kernels_py.float_row_vanishes(values, b[order], order, tol)


@needs_compiled
def test_backends_agree_on_group_elements():
    mats = [ExactMatrix([[k, 1], [0, GaussianRational(k, 1)]]) for k in range(6)]
    vecs = [Vector([k, k * k]) for k in range(6)]
    for values in (mats, vecs):
        assert compiled.difference_rows(values, 3) == _kernels_py.difference_rows(values, 3)
        assert compiled.direct_difference(values, 2) == _kernels_py.direct_difference(values, 2)


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    if compiled is not None:
        assert kernels.BACKEND == "compiled"


def test_pure_python_env_forces_fallback():
    env = dict(os.environ, APSEQ_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import apseq.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs():
    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--length", "30", "--repeat", "1", "--number", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "difference_rows/int" in out.stdout
