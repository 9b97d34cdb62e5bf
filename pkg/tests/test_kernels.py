"""Backend parity: the compiled kernels must match the pure-Python twins."""
import math
import random

import pytest

import minconic._kernels as kernels
import minconic._kernels._py as py

sp = pytest.importorskip("minconic._kernels._speedups")


def rand_vec(rng, span=10.0):
    return tuple(rng.uniform(-span, span) for _ in range(3))


def close(a, b, rel=1e-12):
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) <= rel * scale or abs(a - b) < 1e-300


def assert_vec_close(u, v, rel=1e-12):
    for a, b in zip(u, v):
        assert close(a, b, rel), (u, v)


def test_backend_is_reported():
    assert kernels.BACKEND in ("c", "python")


def test_vector_primitives_match():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = rand_vec(rng), rand_vec(rng), rand_vec(rng)
        assert_vec_close(sp.cross(a, b), py.cross(a, b))
        assert close(sp.dot3(a, b), py.dot3(a, b))
        assert close(sp.det3(a, b, c), py.det3(a, b, c))
        assert close(sp.norm3(a), py.norm3(a))


def test_solve3_matches():
    rng = random.Random(8)
    for _ in range(200):
        a, b, c = rand_vec(rng), rand_vec(rng), rand_vec(rng)
        if abs(py.det3(a, b, c)) < 1e-6:
            continue
        r = rand_vec(rng)
        got_x, got_d = sp.solve3(a, b, c, r)
        want_x, want_d = py.solve3(a, b, c, r)
        assert_vec_close(got_x, want_x, rel=1e-9)
        assert close(got_d, want_d)


def test_diag_triangle_matches():
    rng = random.Random(9)
    for _ in range(200):
        pts = [rand_vec(rng) for _ in range(4)]
        got = sp.diag_triangle(*pts)
        want = py.diag_triangle(*pts)
        for u, v in zip(got[:3], want[:3]):
            assert_vec_close(u, v)
        assert close(got[3], want[3], rel=1e-9) or (got[3] < 1e-12 and want[3] < 1e-12)


def test_conic_from_pencil_matches():
    rng = random.Random(10)
    for _ in range(200):
        pts = [rand_vec(rng) for _ in range(4)]
        tri = py.diag_triangle(*pts)[:3]
        s = rng.uniform(-5.0, 5.0)
        assert_vec_close(sp.conic_from_pencil(*tri, s), py.conic_from_pencil(*tri, s))


def test_conic_from_five_points_matches():
    rng = random.Random(11)
    for _ in range(100):
        pts = [rand_vec(rng) for _ in range(5)]
        got, got_extra = sp.conic_from_five_points(*pts)
        want, want_extra = py.conic_from_five_points(*pts)
        assert_vec_close(got, want, rel=1e-9)
        assert_vec_close(got_extra, want_extra, rel=1e-9)


def test_symmetric_helpers_match():
    rng = random.Random(12)
    for _ in range(200):
        m = tuple(rng.uniform(-10.0, 10.0) for _ in range(6))
        v = rand_vec(rng)
        assert_vec_close(sp.sym_adjugate(m), py.sym_adjugate(m))
        assert close(sp.sym_det(m), py.sym_det(m))
        assert close(sp.sym_eval(m, v), py.sym_eval(m, v))


def test_exact_integer_inputs_agree_exactly():
    # on small-integer data every product is exact in both backends
    rng = random.Random(13)
    for _ in range(50):
        pts = [tuple(float(rng.randint(-9, 9)) for _ in range(3)) for _ in range(4)]
        got = sp.diag_triangle(*pts)
        want = py.diag_triangle(*pts)
        for u, v in zip(got[:3], want[:3]):
            assert u == tuple(v)


def test_pure_python_env_flag(tmp_path):
    import os
    import subprocess
    import sys

    code = "import minconic; print(minconic.BACKEND)"
    env = dict(os.environ, MINCONIC_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "python"
