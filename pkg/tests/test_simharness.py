import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose

import ginipca as gp
from ginipca.simharness import DEFAULT_SEED


def test_mse_is_the_mean_squared_difference():
    assert gp.mse(np.array([1.0, 2.0]), np.array([3.0, -2.0])) == 10.0
    assert gp.mse(np.array([4.0]), np.array([4.0])) == 0.0


def test_default_seed_is_stable():
    assert DEFAULT_SEED == 20240816
    assert gp.SimConfig(rho=np.eye(2), theta_grid=(1.0,)).seed == DEFAULT_SEED


def test_repair_returns_a_valid_matrix_untouched(rho_strong, caplog):
    with caplog.at_level(logging.WARNING, logger="ginipca.simharness"):
        out = gp.repair_correlation(rho_strong)
    assert np.array_equal(out, rho_strong)
    assert caplog.text == ""


def test_repair_uses_the_requested_triangle(caplog):
    asym = np.array([[1.0, 0.5], [0.3, 1.0]])
    with caplog.at_level(logging.WARNING, logger="ginipca.simharness"):
        low = gp.repair_correlation(asym, rule="lower")
        up = gp.repair_correlation(asym, rule="upper")
    assert low[0, 1] == low[1, 0] == 0.3
    assert up[0, 1] == up[1, 0] == 0.5
    assert "asymmetric" in caplog.text


def test_repair_projects_an_indefinite_matrix(rho_mixed, caplog):
    bad = rho_mixed.copy()
    bad[1, 3] = 1.0
    with caplog.at_level(logging.WARNING, logger="ginipca.simharness"):
        out = gp.repair_correlation(bad, rule="upper")
    assert "positive semidefinite" in caplog.text
    assert_allclose(np.diag(out), np.ones(4))
    assert_allclose(out, out.T, atol=1e-14)
    assert np.linalg.eigvalsh(out).min() >= -1e-10
    # The lower triangle carries rho_24 = 0 and needs no projection.
    assert np.array_equal(gp.repair_correlation(bad, rule="lower"), rho_mixed)


def test_repair_rejects_a_bad_diagonal():
    with pytest.raises(gp.ParameterError):
        gp.repair_correlation(np.array([[0.9, 0.1], [0.1, 1.0]]))


def test_repair_rejects_unknown_rules(rho_strong):
    with pytest.raises(gp.ParameterError):
        gp.repair_correlation(rho_strong, rule="sideways")


def test_sample_mvn_is_reproducible(rho_strong):
    a = gp.sample_mvn(rho_strong, 200, 7)
    b = gp.sample_mvn(rho_strong, 200, 7)
    c = gp.sample_mvn(rho_strong, 200, 8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert a.shape == (200, 4)


def test_sample_mvn_hits_the_target_correlations(rho_strong):
    draw = gp.sample_mvn(rho_strong, 4000, 11)
    assert_allclose(np.corrcoef(draw, rowvar=False), rho_strong, atol=0.08)


def test_sample_mvn_rejects_asymmetric_input(rho_strong):
    bad = rho_strong.copy()
    bad[0, 1] = 0.1
    with pytest.raises(gp.ParameterError):
        gp.sample_mvn(bad, 50, 1)


def test_contaminate_scales_exactly_one_row(rho_strong):
    X = gp.sample_mvn(rho_strong, 30, 3)
    dirty = gp.contaminate(X, 5.0, 4)
    assert np.array_equal(dirty[4], 5.0 * X[4])
    mask = np.ones(30, dtype=bool)
    mask[4] = False
    assert np.array_equal(dirty[mask], X[mask])


def test_contaminate_with_theta_one_is_an_identity_copy(rho_strong):
    X = gp.sample_mvn(rho_strong, 25, 3)
    dirty = gp.contaminate(X, 1.0, 2)
    assert dirty is not X
    assert np.array_equal(dirty, X)
    dirty[0, 0] = 99.0
    assert X[0, 0] != 99.0


def test_contaminate_validates_its_arguments(rho_strong):
    X = gp.sample_mvn(rho_strong, 20, 3)
    with pytest.raises(gp.ParameterError):
        gp.contaminate(X, 0.5, 0)
    with pytest.raises(gp.ParameterError):
        gp.contaminate(X, 2.0, 20)


def test_config_validation():
    eye = np.eye(3)
    with pytest.raises(gp.DimensionError):
        gp.SimConfig(rho=np.ones((2, 3)), theta_grid=(1.0,))
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=())
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(0.5,))
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(1.0,), nus=(1.0,))
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(1.0,), nus=(), include_variance=False)
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(1.0,), n_obs=9)
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(1.0,), axes_tracked=4)
    with pytest.raises(gp.ParameterError):
        gp.SimConfig(rho=eye, theta_grid=(1.0,), asymmetry_rule="diagonal")


def test_config_normalizes_and_echoes_its_fields(rho_strong):
    cfg = gp.SimConfig(rho=rho_strong, theta_grid=[1, 11], n_obs=50, nus=[2], seed=9.0)
    assert cfg.rho == tuple(map(tuple, rho_strong.tolist()))
    assert cfg.theta_grid == (1.0, 11.0)
    assert cfg.nus == (2.0,)
    assert cfg.seed == 9
    echo = cfg.echo()
    assert echo["n_obs"] == 50
    assert echo["seed"] == 9
    assert echo["asymmetry_rule"] == "lower"


def test_uncontaminated_grid_reports_zero_error(rho_strong):
    cfg = gp.SimConfig(rho=rho_strong, theta_grid=(1.0,), n_obs=80, nus=(2.0,), seed=9)
    rep = gp.run_algorithm1(cfg)
    for method in ("gini_2", "variance"):
        assert np.all(rep.mse_eigen[method] == 0.0)
        assert np.all(rep.mse_act[method] == 0.0)
        assert np.all(rep.mse_rct[method] == 0.0)
        assert np.all(rep.mse_act_std[method] == 0.0)
        assert np.all(rep.mse_rct_std[method] == 0.0)


def test_report_layout_and_rmse(rho_strong):
    cfg = gp.SimConfig(
        rho=rho_strong, theta_grid=(1.0, 41.0, 81.0), n_obs=60, nus=(2.0, 4.0), seed=5
    )
    rep = gp.run_algorithm1(cfg)
    assert rep.replications == 3
    assert sorted(rep.mse_eigen) == ["gini_2", "gini_4", "variance"]
    for method, values in rep.mse_eigen.items():
        assert values.shape == (4,)
        assert_allclose(rep.rmse_eigen[method], np.sqrt(values), rtol=1e-12)
        assert rep.mse_act[method].shape == (cfg.axes_tracked,)
    assert rep.config_echo == cfg.echo()
    as_dict = rep.to_dict()
    assert as_dict["replications"] == 3
    assert isinstance(as_dict["mse_eigen"]["variance"], list)


def test_worker_count_does_not_change_the_report(rho_strong):
    cfg = gp.SimConfig(
        rho=rho_strong, theta_grid=(1.0, 26.0, 51.0), n_obs=60, nus=(2.0,), seed=12
    )
    solo = gp.run_algorithm1(cfg, jobs=1)
    pooled = gp.run_algorithm1(cfg, jobs=2)
    assert solo.to_dict() == pooled.to_dict()


def test_contamination_hurts_the_variance_method_more(rho_mixed):
    cfg = gp.SimConfig(
        rho=rho_mixed, theta_grid=tuple(range(1, 1000, 100)), n_obs=200, nus=(2.0,), seed=2
    )
    rep = gp.run_algorithm1(cfg)
    assert rep.mse_eigen["variance"][0] > rep.mse_eigen["gini_2"][0]
