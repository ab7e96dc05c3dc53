import math
import os

import pytest

import glauber

DATA = os.environ.get("GLAUBER_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))
RC = {"family": "rc", "q": 2.0, "mu": 1.0}


def triangle():
    return glauber.parse_graph("3 3\n0 1\n1 2\n0 2")


def test_graph_roundtrip():
    g = glauber.Graph(3, [(0, 1), (1, 2)])
    assert (g.n, g.m) == (3, 2)
    assert g.edges == [(0, 1), (1, 2)]
    assert glauber.parse_graph(g.to_text()).edges == g.edges
    assert glauber.load_graph(os.path.join(DATA, "graphs", "c3.txt")).m == 3


def test_partition_functions():
    assert glauber.log_partition(triangle(), RC) == pytest.approx(math.log(28))
    k2 = glauber.Graph(2, [(0, 1)])
    assert glauber.log_partition(k2, {"family": "interlace", "x": 2, "y": 3}) == pytest.approx(math.log(13))
    assert glauber.log_weight(triangle(), {"family": "tutte", "x": 3, "y": 2}, []) == pytest.approx(math.log(4))
    pi = glauber.stationary(k2, RC)
    assert pi == pytest.approx([2 / 3, 1 / 3])
    assert glauber.lambda_of({"family": "interlace", "x": 2, "y": 3}) == pytest.approx((0.25, 4.0))


def test_sampling_is_seeded():
    a = glauber.sample(triangle(), RC, steps=5000, seed=7)
    b = glauber.sample(triangle(), RC, steps=5000, seed=7)
    assert a == b
    assert len(a["samples"]) == 4500
    assert 0.0 <= a["acceptance_rate"] <= 1.0
    assert glauber.sample(triangle(), RC, steps=0)["samples"] == []


def test_verification_reports():
    k2 = glauber.Graph(2, [(0, 1)])
    uniform = {"family": "rc", "q": 1.0, "mu": 1.0}
    c = glauber.congestion(k2, uniform)
    assert c["congestion"]["rho"] == pytest.approx(1.0)
    assert c["congestion"]["pass"]
    m = glauber.mixing(k2, uniform)
    assert m["mixing"]["tau"] == 1
    assert glauber.width(glauber.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))["width"] == 2

    p3 = glauber.Graph(3, [(0, 1), (1, 2)])
    assert glauber.check_multiplicativity(p3, {"family": "rc", "q": 4.0, "mu": 1.0})["pass"]
    bad = glauber.check_multiplicativity(p3, {"family": "rc", "q": 4.0, "mu": 1.0}, lam=1.0)
    assert not bad["pass"]
    assert bad["witness"] is not None


def test_errors():
    with pytest.raises(glauber.ParseError):
        glauber.parse_graph("2 1\n0 0")
    with pytest.raises(glauber.ModelError):
        glauber.log_partition(triangle(), {"family": "rc", "q": -1, "mu": 1})
    with pytest.raises(glauber.CapExceeded):
        glauber.congestion(glauber.Graph(12, [(i, i + 1) for i in range(11)]), RC)
