import math

import numpy as np
import pytest

import symmono


def test_combinatorics():
    assert [list(p) for p in symmono.enumerate_partitions(3)] == [[1, 1, 1], [2, 1], [3]]
    assert symmono.irrep_dim([3, 2]) == 5
    assert symmono.weyl_dim([2, 1], 3) == 8
    assert symmono.kronecker([3, 2, 1], [3, 2, 1], [3, 2, 1]) == 5
    assert symmono.littlewood_richardson([3, 2, 1], [2, 1], [2, 1]) == 2
    assert symmono.character([3, 1], [2, 2]) == -1
    # three-row rectangle: 2 (3n)! / (n! (n+1)! (n+2)!), above 2**32 for n = 10
    assert symmono.irrep_dim([10] * 3) == 2 * math.factorial(30) // (math.factorial(10) * math.factorial(11) * math.factorial(12))
    assert isinstance(symmono.irrep_dim([12, 11, 10]), int)


def test_entropy():
    assert symmono.renyi_entropy([2 / 3, 1 / 3], 0.5) == pytest.approx(0.9581441056060677, rel=1e-12)


def test_states():
    s = symmono.State("w:3")
    assert s.dims == [2, 2, 2]
    assert s.schmidt_spectrum("1|23") == pytest.approx([2 / 3, 1 / 3])
    assert len(s.digest) == 16
    t = symmono.State.from_amplitudes([2, 2], [math.sqrt(0.3), 0, 0, math.sqrt(0.7)])
    assert np.allclose(np.abs(t.amplitudes) ** 2, [0.3, 0, 0, 0.7])
    with pytest.raises(ValueError):
        symmono.State("random:2,0")


def test_estimate_ghz():
    r = symmono.estimate("ghz:2,3", alpha=0.5, n_max=3)
    assert r["sequence"][1][1] == pytest.approx(0.32535507341)
    assert r["E_interval"][0] <= 1.0 <= r["E_interval"][1]
    assert symmono.closed_upper_bound(symmono.State("ghz:2,3"), 0.5) == pytest.approx(1.0)
    assert symmono.closed_lower_bound(symmono.State("ghz:2,3"), 0.5) == pytest.approx(1.0)
    lim = symmono.estimate("ghz:2,3", alpha=None, n_max=2)
    assert lim["alpha"] == "limit1"
    with pytest.raises(RuntimeError):
        symmono.estimate("ghz:2,3", n_max=9)


def test_lower_functional_unit_tensor():
    r = symmono.lower_functional("unit:2,3", 0.75, budget=2)
    assert r["F"] == pytest.approx(2.0)


def test_gmean():
    a = np.diag([4.0, 1.0])
    b = np.diag([1.0, 9.0])
    g = symmono.gmean(a, b, 0.5)
    assert np.allclose(g, np.diag([2.0, 3.0]))


def test_cli_and_verify():
    code, out, err = symmono.run_cli(["verify", "--suite", "coefficients"])
    assert code == 0
    assert '"all_pass": true' in out
    checks = symmono.verify("coefficients")
    assert checks and all(c["pass"] for c in checks)
    assert "axioms" in symmono.suite_names()
    assert symmono.run_cli(["verify", "--suite", ""])[0] == 2
