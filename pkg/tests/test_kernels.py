import os
import subprocess
import sys

import pytest

from nablasym import _pykernels as py
from nablasym import combinat as cb
from nablasym import kernels
from nablasym.parking import dyck_paths

cy = pytest.importorskip("nablasym._ckernels")


@pytest.mark.parametrize("n", range(1, 7))
def test_pf_histograms_agree(n):
    for a in dyck_paths(n):
        assert py.pf_path_histogram(a) == cy.pf_path_histogram(a)


@pytest.mark.parametrize("n", range(1, 6))
def test_hhl_histograms_agree(n):
    for mu in cb.enumerate_partitions(n):
        assert py.hhl_histogram(mu) == cy.hhl_histogram(mu)


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, NABLASYM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from nablasym import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
