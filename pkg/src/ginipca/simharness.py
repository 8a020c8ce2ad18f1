"""Monte Carlo contamination benchmark.

For every contamination factor theta, one fresh multivariate normal sample
is drawn, one random row is multiplied by theta, and every method is fitted
on both the clean and the contaminated sample. The report aggregates the
squared deviations of eigen shares, absolute contributions and relative
contributions, all measured in percent.

Each theta owns an independent counter-based RNG stream keyed by (seed,
theta index), so results are byte-identical regardless of how many worker
processes execute the grid.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field

import numpy as np

from .diagnostics import act, rct
from .errors import DimensionError, GiniPcaError, NumericError, ParameterError
from .pipeline import fit_classic_pca, fit_gini_pca, method_label

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240816


@dataclass(frozen=True)
class SimConfig:
    """Settings of the contamination benchmark.

    rho is the target correlation matrix (repaired per asymmetry_rule when
    needed), theta_grid the contamination grid, nus the Gini orders to fit next
    to the variance baseline, and axes_tracked how many leading axes enter
    the contribution aggregates.
    """

    rho: tuple
    theta_grid: tuple
    n_obs: int = 500
    nus: tuple = (2.0, 4.0, 6.0)
    include_variance: bool = True
    seed: int = DEFAULT_SEED
    axes_tracked: int = 2
    asymmetry_rule: str = "lower"

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=np.float64)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DimensionError(f"rho must be square, got shape {rho.shape}")
        theta_grid = tuple(float(t) for t in self.theta_grid)
        if not theta_grid:
            raise ParameterError("theta grid is empty")
        if min(theta_grid) < 1.0:
            raise ParameterError(f"thetas must be >= 1, got {min(theta_grid):g}")
        nus = tuple(float(v) for v in self.nus)
        if any(v <= 1.0 for v in nus):
            raise ParameterError("every nu must exceed 1")
        if not nus and not self.include_variance:
            raise ParameterError("no methods to benchmark")
        if self.n_obs < 10:
            raise ParameterError(f"n_obs must be at least 10, got {self.n_obs}")
        if not 1 <= self.axes_tracked <= rho.shape[0]:
            raise ParameterError(
                f"axes_tracked must be in [1, {rho.shape[0]}], got {self.axes_tracked}"
            )
        if self.asymmetry_rule not in ("lower", "upper"):
            raise ParameterError(
                f"asymmetry_rule must be lower or upper, got {self.asymmetry_rule!r}"
            )
        object.__setattr__(self, "rho", tuple(map(tuple, rho.tolist())))
        object.__setattr__(self, "theta_grid", theta_grid)
        object.__setattr__(self, "nus", nus)
        object.__setattr__(self, "seed", int(self.seed))

    def echo(self):
        """JSON-ready dict restating every setting."""
        return {
            "rho": [list(row) for row in self.rho],
            "theta_grid": list(self.theta_grid),
            "n_obs": self.n_obs,
            "nus": list(self.nus),
            "include_variance": self.include_variance,
            "seed": self.seed,
            "axes_tracked": self.axes_tracked,
            "asymmetry_rule": self.asymmetry_rule,
        }


@dataclass(frozen=True)
class SimReport:
    """Aggregated benchmark results, keyed by method label.

    mse_eigen[m][k] is the mean over theta of the squared deviation of axis
    k's share (percentage points squared); rmse_eigen is its square root.
    mse_act[m][k] averages the squared ACT deviations (in percent) over
    observations and theta for each tracked axis, and mse_act_std is the
    standard deviation over observations of the per-observation means.
    mse_rct mirrors mse_act for the relative contributions.
    """

    mse_eigen: dict
    rmse_eigen: dict
    mse_act: dict
    mse_act_std: dict
    mse_rct: dict
    mse_rct_std: dict
    replications: int
    config_echo: dict = field(default_factory=dict)

    def to_dict(self):
        """JSON-ready dict with plain lists and deterministic structure."""
        def as_lists(table):
            return {m: list(map(float, v)) for m, v in table.items()}

        return {
            "config": self.config_echo,
            "replications": self.replications,
            "mse_eigen": as_lists(self.mse_eigen),
            "rmse_eigen": as_lists(self.rmse_eigen),
            "mse_act": as_lists(self.mse_act),
            "mse_act_std": as_lists(self.mse_act_std),
            "mse_rct": as_lists(self.mse_rct),
            "mse_rct_std": as_lists(self.mse_rct_std),
        }


def repair_correlation(rho, rule="lower"):
    """Build a symmetric positive semidefinite correlation matrix from rho.

    rule picks the winning triangle when rho is not symmetric. If the
    symmetrized matrix is not positive semidefinite, it is replaced by the
    nearest correlation matrix (alternating projections, tolerance 1e-10);
    both repairs are logged because they change the experiment.
    """
    m = np.asarray(rho, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"rho must be square, got shape {m.shape}")
    if rule not in ("lower", "upper"):
        raise ParameterError(f"rule must be lower or upper, got {rule!r}")
    if not np.allclose(np.diag(m), 1.0, atol=1e-12):
        raise ParameterError("correlation matrix must have a unit diagonal")
    tri = np.tril(m, -1) if rule == "lower" else np.triu(m, 1).T
    sym = tri + tri.T + np.eye(m.shape[0])
    if not np.array_equal(sym, m):
        log.warning("rho is asymmetric; keeping its %s triangle", rule)
    if np.linalg.eigvalsh(sym).min() >= -1e-10:
        return sym
    log.warning(
        "rho is not positive semidefinite; projecting to the nearest "
        "correlation matrix"
    )
    return _nearest_correlation(sym)


def _nearest_correlation(a, tol=1e-10, max_iter=500):
    """Alternating projections onto the PSD cone and the unit-diagonal set."""
    y = a.copy()
    correction = np.zeros_like(a)
    for _ in range(max_iter):
        r = y - correction
        w, v = np.linalg.eigh(r)
        x = (v * np.clip(w, 0.0, None)) @ v.T
        x = 0.5 * (x + x.T)
        correction = x - r
        y_next = x.copy()
        np.fill_diagonal(y_next, 1.0)
        if float(np.abs(y_next - y).max()) < tol:
            return y_next
        y = y_next
    raise NumericError(
        f"nearest-correlation projection did not converge in {max_iter} steps"
    )


def _factor(rho):
    """Lower-triangular-ish factor L with L @ L.T = rho, PSD inputs only."""
    try:
        return np.linalg.cholesky(rho)
    except np.linalg.LinAlgError:
        w, v = np.linalg.eigh(rho)
        if w.min() < -1e-8:
            raise ParameterError(
                "correlation matrix is not positive semidefinite; repair it first"
            ) from None
        return v * np.sqrt(np.clip(w, 0.0, None))


def sample_mvn(rho, n_obs, seed):
    """Draw n_obs rows from N(0, rho) on a counter-based stream keyed by seed.

    Identical (rho, n_obs, seed) triples produce bitwise identical draws on
    every platform.
    """
    rho = np.asarray(rho, dtype=np.float64)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"rho must be square, got shape {rho.shape}")
    if n_obs < 1:
        raise ParameterError(f"n_obs must be positive, got {n_obs}")
    scale = max(1.0, float(np.abs(rho).max()))
    if float(np.abs(rho - rho.T).max()) > 1e-12 * scale:
        raise ParameterError("rho must be symmetric; use repair_correlation first")
    factor = _factor(rho)
    rng = np.random.Generator(np.random.Philox(key=seed))
    return rng.standard_normal((int(n_obs), rho.shape[0])) @ factor.T


def contaminate(X, theta, row):
    """Return a copy of X with one observation row multiplied by theta."""
    values = np.array(getattr(X, "values", X), dtype=np.float64)
    if values.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {values.shape}")
    if not 0 <= int(row) < values.shape[0]:
        raise ParameterError(
            f"row {row} out of range for {values.shape[0]} observations"
        )
    if not float(theta) >= 1.0:
        raise ParameterError(f"theta must be >= 1, got {theta}")
    values[int(row)] *= float(theta)
    return values


def mse(observed, reference):
    """Mean squared deviation between two equal-shaped arrays."""
    o = np.asarray(observed, dtype=np.float64)
    r = np.asarray(reference, dtype=np.float64)
    if o.shape != r.shape:
        raise DimensionError(f"shape mismatch: {o.shape} vs {r.shape}")
    return float(np.mean((o - r) ** 2))


def _methods(config):
    labels = []
    if config.include_variance:
        labels.append(("variance", None))
    labels.extend((f"gini_{nu:g}", nu) for nu in config.nus)
    return labels


def _theta_key(seed, theta_index):
    # 128-bit Philox key: seed in the high word, theta index in the low one
    return ((seed % (1 << 64)) << 64) + theta_index


def _run_theta(rho, factor, config, theta_index):
    """Squared deviations contributed by one point of the theta grid."""
    theta = config.theta_grid[theta_index]
    n = config.n_obs
    k = factor.shape[0]
    rng = np.random.Generator(np.random.Philox(key=_theta_key(config.seed, theta_index)))
    clean = rng.standard_normal((n, k)) @ factor.T
    row = int(rng.integers(0, n))
    dirty = clean.copy()
    dirty[row] *= theta

    axes = config.axes_tracked
    out = {}
    for label, nu in _methods(config):
        fit = fit_classic_pca if nu is None else (lambda x, v=nu: fit_gini_pca(x, v))
        try:
            ref = fit(clean)
            con = fit(dirty)
        except GiniPcaError as exc:
            raise type(exc)(f"theta={theta:g} (index {theta_index}): {exc}") from exc
        d_share = con.eigen.shares - ref.eigen.shares
        d_act = 100.0 * (act(con)[:, :axes] - act(ref)[:, :axes])
        d_rct = 100.0 * (rct(con)[:, :axes] - rct(ref)[:, :axes])
        out[label] = (d_share * d_share, d_act * d_act, d_rct * d_rct)
    return out


def run_algorithm1(config, jobs=1):
    """Run the contamination benchmark over the whole theta grid.

    jobs > 1 distributes theta points over worker processes; aggregation
    happens in fixed grid order either way, so the report is identical for
    any job count.
    """
    rho = repair_correlation(np.asarray(config.rho), config.asymmetry_rule)
    factor = _factor(rho)
    indices = range(len(config.theta_grid))

    if jobs <= 1:
        results = [_run_theta(rho, factor, config, i) for i in indices]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_run_theta, *zip(*((rho, factor, config, i) for i in indices)))
            )

    reps = len(config.theta_grid)
    labels = [label for label, _ in _methods(config)]
    mse_eigen, rmse_eigen = {}, {}
    mse_act, mse_act_std = {}, {}
    mse_rct, mse_rct_std = {}, {}
    for label in labels:
        share_sq = np.sum(np.stack([r[label][0] for r in results]), axis=0) / reps
        act_sq = np.sum(np.stack([r[label][1] for r in results]), axis=0) / reps
        rct_sq = np.sum(np.stack([r[label][2] for r in results]), axis=0) / reps
        mse_eigen[label] = share_sq
        rmse_eigen[label] = np.sqrt(share_sq)
        mse_act[label] = act_sq.mean(axis=0)
        mse_act_std[label] = act_sq.std(axis=0)
        mse_rct[label] = rct_sq.mean(axis=0)
        mse_rct_std[label] = rct_sq.std(axis=0)
    return SimReport(
        mse_eigen=mse_eigen,
        rmse_eigen=rmse_eigen,
        mse_act=mse_act,
        mse_act_std=mse_act_std,
        mse_rct=mse_rct,
        mse_rct_std=mse_rct_std,
        replications=reps,
        config_echo=config.echo(),
    )
