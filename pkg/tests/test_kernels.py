import os
import subprocess
import sys

import frobw
from frobw import kernels


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert frobw.BACKEND == kernels.BACKEND


def test_pure_python_override():
    env = dict(os.environ, FROBW_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import frobw; print(frobw.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"


def test_insert_row_contract():
    from frobw import _kernels_py

    rows, piv, supp = [], [], []
    assert _kernels_py.insert_row([0, 2, 4], rows, piv, supp) == 1
    assert rows == [[0, 1, 2]]
    assert _kernels_py.insert_row([0, 3, 6], rows, piv, supp) == -1
    assert _kernels_py.insert_row([1, 1, 0], rows, piv, supp) == 0
    # reduced: the new row's pivot column is cleared elsewhere
    assert rows[0][0] == 0
