import os
import subprocess
import sys

import pytest

from symrep import kernels
from symrep.graph import complete, cycle, path
from symrep.patterns import enumerate_copies, pattern_order


def _backend_in_subprocess(env_value):
    env = dict(os.environ, SYMREP_PURE_PYTHON=env_value)
    out = subprocess.run(
        [sys.executable, "-c", "import symrep.kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    return out.stdout.strip()


def test_env_forces_fallback():
    assert _backend_in_subprocess("1") == "python"
    assert _backend_in_subprocess("0") in ("cython", "python")


def test_wide_inputs_use_python_path():
    # 70 vertices: beyond the 64-bit compiled kernel
    fam = enumerate_copies(cycle(70), path(3))
    assert len(fam) == 70
    size, _ = kernels.min_weighted_hitting([1] * 70, list(fam.masks))
    assert size == 24  # ceil(70 / 3): every window of 3 consecutive vertices needs a hit


@pytest.mark.skipif("cython" not in kernels.available_backends(), reason="extension not built")
def test_compiled_kernel_rejects_wide_input():
    ck = kernels.available_backends()["cython"]
    with pytest.raises(ValueError):
        ck.copy_masks(list(cycle(70).rows), list(path(3).rows), pattern_order(path(3)))
    with pytest.raises(ValueError):
        ck.branch_and_bound([1] * 65, [1], 1, 1)


@pytest.mark.parametrize("backend", sorted(kernels.available_backends()))
def test_first_only_stops_early(backend):
    masks = kernels.copy_masks(complete(8).rows, path(3).rows, pattern_order(path(3)), first_only=True, backend=backend)
    assert len(masks) == 1
