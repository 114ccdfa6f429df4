import math
import os

import numpy as np
import pytest

import mapel


def test_g1_solve_matches_published_value():
    g1 = mapel.paper_fixture("g1")
    cfg = mapel.SolverConfig()
    cfg.delta = 0.1
    r = mapel.solve(g1, cfg)
    assert r.status == "Converged"
    assert abs(r.objective_bps_hz - 4.655) <= 0.01
    assert r.upper_bound_bps_hz - r.objective_bps_hz <= -math.log2(0.9) + 1e-9
    assert mapel.weighted_throughput(g1, r.p_star) == pytest.approx(r.objective_bps_hz, rel=1e-6)


def test_network_from_numpy_and_sinr():
    g = np.array([[1.0, 0.1], [0.1, 1.0]])
    net = mapel.Network(g, np.full(2, 0.01), np.ones(2), np.ones(2))
    assert net.size == 2
    assert np.allclose(net.weights, [0.5, 0.5])
    s = mapel.sinr(net, np.ones(2))
    assert np.allclose(s, 1.0 / 0.11)
    assert mapel.maxmin_sinr(net).min_sinr == pytest.approx(1.0 / 0.11, rel=1e-9)


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        mapel.Network(np.array([[0.0]]), np.ones(1), np.ones(1), np.ones(1))


def test_feasibility_and_projection():
    blocked = mapel.Network(np.ones((2, 2)), np.full(2, 0.01), np.ones(2), np.ones(2),
                            np.full(2, math.log2(3)))
    report = mapel.check_feasibility(blocked)
    assert not report.feasible
    assert report.spectral_radius_b == pytest.approx(2.0)

    one = mapel.Network(np.ones((1, 1)), np.ones(1), np.ones(1), np.ones(1))
    assert mapel.project(one, np.ones(1)).lambda_ == pytest.approx(2.0)


def test_random_network_is_seeded_and_oracle_agrees():
    a = mapel.random_network(2, seed=7)
    b = mapel.random_network(2, seed=7)
    assert np.array_equal(a.gains, b.gains)
    cfg = mapel.SolverConfig()
    cfg.delta = 0.01
    r = mapel.solve(a, cfg)
    grid = mapel.grid_search(a, 201)
    assert r.objective_bps_hz >= grid.objective_bps_hz - 0.02
    assert grid.objective_bps_hz <= r.upper_bound_bps_hz + 1e-6


def test_instance_round_trip():
    path = os.path.join(os.environ["MAPEL_FIXTURE_DIR"], "g2.json")
    net = mapel.load_instance(path)
    assert np.array_equal(net.gains, mapel.paper_fixture("g2").gains)
    assert "gains" in mapel.dump_instance(net)
