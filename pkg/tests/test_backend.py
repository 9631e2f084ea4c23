import os
import subprocess
import sys

import pytest
import sympy
from hypothesis import given, strategies as st

from cevconic import _backend, _purekernel

compiled = _backend.load()
have_compiled = compiled is not _purekernel
big = st.integers(-10**30, 10**30)
vec = st.tuples(big, big, big)
mat = st.tuples(*([big] * 9))

needs_compiled = pytest.mark.skipif(not have_compiled, reason="compiled kernel not built")


def test_backend_reported():
    assert _backend.BACKEND in ("compiled", "python")
    assert set(_backend.NAMES) <= set(dir(_purekernel))


@needs_compiled
@given(vec, vec)
def test_vector_ops_agree(p, q):
    for name in ("cross", "dot"):
        assert getattr(compiled, name)(p, q) == getattr(_purekernel, name)(p, q)
    assert compiled.canon(p) == _purekernel.canon(p)
    assert compiled.canon3(*p) == _purekernel.canon3(*p)


@needs_compiled
@given(mat, mat, vec)
def test_matrix_ops_agree(m, n, p):
    for name in ("matmul", "rawmatmul", "congruence"):
        assert getattr(compiled, name)(m, n) == getattr(_purekernel, name)(m, n)
    for name in ("adjugate", "transpose", "matdet"):
        assert getattr(compiled, name)(m) == getattr(_purekernel, name)(m)
    assert compiled.matvec(m, p) == _purekernel.matvec(m, p)
    assert compiled.quad(m, p) == _purekernel.quad(m, p)
    assert compiled.bilinear(m, p, p) == _purekernel.bilinear(m, p, p)


rows = st.lists(st.tuples(*([st.integers(-6, 6)] * 6)), min_size=1, max_size=6)


@given(rows)
def test_nullspace_matches_sympy(rs):
    ns = _purekernel.nullspace(rs, 6)
    expected = sympy.Matrix(rs).nullspace()
    assert len(ns) == len(expected)
    m = sympy.Matrix(rs)
    for v in ns:
        assert m * sympy.Matrix(v) == sympy.zeros(len(rs), 1)
        assert any(v)
    if ns:
        assert sympy.Matrix([list(v) for v in ns]).rank() == len(ns)
    if have_compiled:
        assert compiled.nullspace(rs, 6) == ns


def test_pure_fallback_selected_by_env():
    env = {**os.environ, "CEVCONIC_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", "import cevconic; print(cevconic.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
