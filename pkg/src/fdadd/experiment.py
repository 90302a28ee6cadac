"""Configuration-driven sweep runner for the double-descent experiments.

A sweep repeatedly generates (or re-splits) a dataset, fits the regression
at every basis count in a grid, records the test MSE against the noiseless
signal, and applies the configured selection methods.  Results are keyed by
(replicate, k) and sorted before serialization, so output is identical for
any thread count.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .basis import BasisSpec, design_matrix, gram_matrix
from .datagen import (
    Dataset,
    GpParams,
    ScenarioConfig,
    default_config,
    gen_scenario,
    replicate_config,
)
from .errors import ConfigError, InvalidInputError
from .functionalize import LongitudinalSample, fit_coefficients
from .regression import (
    FonFFit,
    SonFFit,
    fonf_fit,
    predict_curve,
    sonf_design,
    sonf_fit,
    sonf_predict,
)
from .selection import caic_select, cv_select

__all__ = [
    "RealDataConfig",
    "SweepConfig",
    "SweepRecord",
    "MethodRecord",
    "SweepResult",
    "FiveNumber",
    "KSummary",
    "MethodSummary",
    "Summary",
    "sweep_config_from_json",
    "test_mse_sonf",
    "test_mse_fonf",
    "run_sweep",
    "summarize",
    "marker_k",
    "emit_outputs",
    "load_config_file",
]

_SPLINE = "natural-cubic-spline"
_METHODS = ("cv", "caic", "fixed")


@dataclass(frozen=True)
class RealDataConfig:
    """Paths and split size for a sweep over user-supplied CSV data."""

    x_path: str
    y_path: str
    train_size: int

    def __post_init__(self):
        if self.train_size < 1:
            raise ConfigError(f"train_size must be >= 1, got {self.train_size}")


@dataclass(frozen=True)
class SweepConfig:
    """Everything a sweep needs: the data source, the grid, and the methods."""

    scenario_cfg: ScenarioConfig | None = None
    data: RealDataConfig | None = None
    k_grid: tuple[int, ...] = tuple(range(4, 51))
    replicates: int = 50
    methods: tuple[str, ...] = ("cv", "caic", "fixed")
    fixed_k: int = 50
    other_k: int = 10
    cv_folds: int = 5
    caic_extra: tuple[int, ...] = (2, 3)
    seed: int = 0
    threads: int = 1
    out_dir: str | None = None

    def __post_init__(self):
        if (self.scenario_cfg is None) == (self.data is None):
            raise ConfigError("exactly one of scenario_cfg and data must be set")
        grid = tuple(int(k) for k in self.k_grid)
        if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigError("k_grid must be non-empty and strictly increasing")
        if grid[0] < 2:
            raise ConfigError("k_grid entries must be >= 2 (natural-spline minimum)")
        object.__setattr__(self, "k_grid", grid)
        if self.replicates < 1:
            raise ConfigError(f"replicates must be >= 1, got {self.replicates}")
        methods = tuple(self.methods)
        unknown = [m for m in methods if m not in _METHODS]
        if unknown or len(set(methods)) != len(methods):
            raise ConfigError(f"methods must be distinct members of {_METHODS}, got {methods}")
        object.__setattr__(self, "methods", methods)
        if "fixed" in methods and self.fixed_k not in grid:
            raise ConfigError(f"fixed_k={self.fixed_k} must be in the k grid")
        if self.other_k < 2:
            raise ConfigError(f"other_k must be >= 2, got {self.other_k}")
        if self.cv_folds < 2:
            raise ConfigError(f"cv_folds must be >= 2, got {self.cv_folds}")
        extra = tuple(sorted(int(k) for k in self.caic_extra))
        if any(k < 2 for k in extra):
            raise ConfigError("caic_extra entries must be >= 2")
        object.__setattr__(self, "caic_extra", extra)
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class SweepRecord:
    replicate: int
    k: int
    mse: float


@dataclass(frozen=True)
class MethodRecord:
    replicate: int
    method: str
    chosen_k: int
    mse: float


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    records: tuple[SweepRecord, ...]
    method_records: tuple[MethodRecord, ...]


# ---------------------------------------------------------------------------
# Config document parsing
# ---------------------------------------------------------------------------

_GP_KEYS = {"theta", "h"}
_DATA_KEYS = {"x", "y", "train_size"}
_SCENARIO_KEYS = {
    "scenario",
    "n_train",
    "n_test",
    "m_x",
    "m_y",
    "gp_x",
    "gp_beta",
    "noise_sd",
    "domain",
    "latent_grid_size",
    "response_grid_size",
    "center_per_curve",
}
_SWEEP_KEYS = {
    "data",
    "k_grid",
    "k_min",
    "k_max",
    "replicates",
    "methods",
    "fixed_k",
    "other_k",
    "cv_folds",
    "caic_extra",
    "seed",
    "threads",
    "out_dir",
}


def _reject_unknown(doc: dict, allowed: set, where: str):
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError(f"unknown {where} keys: {', '.join(unknown)}")


def _parse_gp(doc, name) -> GpParams:
    if not isinstance(doc, dict):
        raise ConfigError(f"{name} must be an object with theta and h")
    _reject_unknown(doc, _GP_KEYS, name)
    try:
        return GpParams(float(doc["theta"]), float(doc["h"]))
    except KeyError as exc:
        raise ConfigError(f"{name} is missing key {exc}") from None
    except InvalidInputError as exc:
        raise ConfigError(f"{name}: {exc}") from None


def sweep_config_from_json(doc: dict, base_dir: str | Path = ".") -> SweepConfig:
    """Build a SweepConfig from a parsed JSON document.

    Unknown keys are rejected at every nesting level.  Relative data paths
    resolve against ``base_dir``.
    """
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    _reject_unknown(doc, _SCENARIO_KEYS | _SWEEP_KEYS, "config")

    scenario = doc.get("scenario")
    data_doc = doc.get("data")
    if (scenario is None) == (data_doc is None):
        raise ConfigError("config must set exactly one of 'scenario' and 'data'")

    scenario_cfg = None
    data_cfg = None
    if scenario is not None:
        overrides = {}
        for key in ("n_train", "n_test", "m_x", "m_y", "latent_grid_size", "response_grid_size"):
            if key in doc:
                overrides[key] = int(doc[key])
        if "noise_sd" in doc:
            overrides["noise_sd"] = float(doc["noise_sd"])
        if "domain" in doc:
            dom = doc["domain"]
            if not (isinstance(dom, (list, tuple)) and len(dom) == 2):
                raise ConfigError("domain must be a two-element array [a, b]")
            overrides["domain"] = (float(dom[0]), float(dom[1]))
        if "center_per_curve" in doc:
            overrides["center_per_curve"] = bool(doc["center_per_curve"])
        if "gp_x" in doc:
            overrides["gp_x"] = _parse_gp(doc["gp_x"], "gp_x")
        if "gp_beta" in doc:
            overrides["gp_beta"] = _parse_gp(doc["gp_beta"], "gp_beta")
        try:
            scenario_cfg = default_config(str(scenario), **overrides)
        except (InvalidInputError, TypeError) as exc:
            raise ConfigError(f"invalid scenario settings: {exc}") from None
    else:
        for key in _SCENARIO_KEYS - {"scenario"}:
            if key in doc:
                raise ConfigError(f"key {key!r} requires a 'scenario' config")
        if not isinstance(data_doc, dict):
            raise ConfigError("data must be an object with x, y and train_size")
        _reject_unknown(data_doc, _DATA_KEYS, "data")
        try:
            data_cfg = RealDataConfig(
                x_path=str(Path(base_dir) / data_doc["x"]),
                y_path=str(Path(base_dir) / data_doc["y"]),
                train_size=int(data_doc["train_size"]),
            )
        except KeyError as exc:
            raise ConfigError(f"data is missing key {exc}") from None

    if "k_grid" in doc and ("k_min" in doc or "k_max" in doc):
        raise ConfigError("set either k_grid or k_min/k_max, not both")
    if "k_grid" in doc:
        grid = tuple(int(k) for k in doc["k_grid"])
    else:
        k_min = int(doc.get("k_min", 4))
        default_max = 120 if scenario == "fig1-demo" else 50
        k_max = int(doc.get("k_max", default_max))
        if k_max < k_min:
            raise ConfigError(f"k_max must be >= k_min, got {k_min}..{k_max}")
        grid = tuple(range(k_min, k_max + 1))

    kwargs = dict(scenario_cfg=scenario_cfg, data=data_cfg, k_grid=grid)
    for key in ("replicates", "fixed_k", "other_k", "cv_folds", "seed", "threads"):
        if key in doc:
            kwargs[key] = int(doc[key])
    if "methods" in doc:
        kwargs["methods"] = tuple(str(m) for m in doc["methods"])
    if "caic_extra" in doc:
        kwargs["caic_extra"] = tuple(int(k) for k in doc["caic_extra"])
    if "out_dir" in doc:
        kwargs["out_dir"] = str(doc["out_dir"])
    return SweepConfig(**kwargs)


# ---------------------------------------------------------------------------
# Test MSE
# ---------------------------------------------------------------------------


def test_mse_sonf(fit: SonFFit, subjects, x_data=None) -> float:
    """Mean squared prediction error against the subjects' noiseless signals.

    ``x_data`` may carry pre-functionalized predictors (matching fit.spec_x)
    to avoid refitting them.
    """
    if not subjects:
        raise InvalidInputError("empty test set")
    if x_data is None:
        x_data = [fit_coefficients(s.x, fit.spec_x) for s in subjects]
    errs = [sonf_predict(fit, d) - s.signal for d, s in zip(x_data, subjects)]
    return float(np.mean(np.square(errs)))


def test_mse_fonf(fit: FonFFit, subjects, x_data=None) -> float:
    """Pooled squared error of predicted curves at each subject's y times."""
    if not subjects:
        raise InvalidInputError("empty test set")
    if x_data is None:
        x_data = [fit_coefficients(s.x, fit.spec_x) for s in subjects]
    sq = []
    for d, s in zip(x_data, subjects):
        pred = predict_curve(fit, d, s.y.times)
        sq.append(np.square(pred - s.y_signal))
    return float(np.mean(np.concatenate(sq)))


# ---------------------------------------------------------------------------
# Per-replicate sweeps
# ---------------------------------------------------------------------------


def _ks_needed(cfg: SweepConfig) -> list[int]:
    ks = set(cfg.k_grid)
    if "caic" in cfg.methods:
        ks.update(cfg.caic_extra)
    return sorted(ks)


def _apply_methods(cfg, rep, n_cv, mse_by_k, caic_candidates, cv_loss) -> list[MethodRecord]:
    out = []
    for method in cfg.methods:
        if method == "fixed":
            chosen = cfg.fixed_k
        elif method == "cv":
            chosen = cv_select(
                n_cv, cfg.k_grid, cv_loss, folds=cfg.cv_folds, seed=rep
            ).chosen_k
        else:
            chosen = caic_select(caic_candidates).chosen_k
        out.append(MethodRecord(replicate=rep, method=method, chosen_k=chosen, mse=mse_by_k[chosen]))
    return out


def _sonf_replicate(cfg: SweepConfig, ds: Dataset, rep: int):
    domain = (float(ds.grid[0]), float(ds.grid[-1]))
    y = np.array([s.y for s in ds.train])
    n = len(ds.train)
    mse_by_k, rss_by_k, z_by_k = {}, {}, {}
    for k in _ks_needed(cfg):
        spec = BasisSpec(_SPLINE, k, domain)
        gram = gram_matrix(spec)
        train_x = [fit_coefficients(s.x, spec) for s in ds.train]
        z = sonf_design(train_x, gram)
        coef = sonf_fit(z, y)
        fit = SonFFit(spec_x=spec, coef=coef, gram_x=gram)
        mse_by_k[k] = test_mse_sonf(fit, ds.test)
        rss_by_k[k] = float(np.sum(np.square(y - z @ coef)))
        z_by_k[k] = z

    def cv_loss(train_idx, test_idx, k):
        z = z_by_k[k]
        coef = sonf_fit(z[train_idx], y[train_idx])
        return float(np.mean(np.square(z[test_idx] @ coef - y[test_idx])))

    caic_candidates = [(k, rss_by_k[k], k, n) for k in sorted(rss_by_k)]
    methods = _apply_methods(cfg, rep, n, mse_by_k, caic_candidates, cv_loss)
    return mse_by_k, methods


def _fonf_replicate(cfg: SweepConfig, ds: Dataset, rep: int):
    scen = cfg.scenario_cfg.scenario
    domain = (float(ds.grid[0]), float(ds.grid[-1]))
    n = len(ds.train)
    mse_by_k, rss_by_k = {}, {}

    if scen == "C":
        # Response-basis sweep: the predictor side is fixed at other_k.
        spec_x = BasisSpec(_SPLINE, cfg.other_k, domain)
        gram_x = gram_matrix(spec_x)
        train_x = [fit_coefficients(s.x, spec_x) for s in ds.train]
        test_x = [fit_coefficients(s.x, spec_x) for s in ds.test]
        z = sonf_design(train_x, gram_x)
        v_by_k, gram_y_by_k = {}, {}
        m_y = cfg.scenario_cfg.m_y
        for k in _ks_needed(cfg):
            spec_y = BasisSpec(_SPLINE, k, domain)
            gram_y = gram_matrix(spec_y)
            train_y = [fit_coefficients(s.y, spec_y) for s in ds.train]
            v = np.stack([d.coeffs for d in train_y])
            coef = fonf_fit(z, v, gram_y)
            fit = FonFFit(spec_x=spec_x, spec_y=spec_y, coef=coef, gram_x=gram_x, gram_y=gram_y)
            mse_by_k[k] = test_mse_fonf(fit, ds.test, x_data=test_x)
            # cAIC on this axis scores how well the response basis
            # functionalizes the observed response curves.
            rss = 0.0
            for s, d in zip(ds.train, train_y):
                resid = s.y.values - design_matrix(spec_y, s.y.times) @ d.coeffs
                rss += float(resid @ resid)
            rss_by_k[k] = rss
            v_by_k[k] = v
            gram_y_by_k[k] = gram_y

        def cv_loss(train_idx, test_idx, k):
            spec_y = gram_y_by_k[k].spec
            coef = fonf_fit(z[train_idx], v_by_k[k][train_idx], gram_y_by_k[k])
            fit = FonFFit(
                spec_x=spec_x, spec_y=spec_y, coef=coef, gram_x=gram_x, gram_y=gram_y_by_k[k]
            )
            sq = []
            for i in test_idx:
                pred = predict_curve(fit, train_x[i], ds.train[i].y.times)
                sq.append(np.square(pred - ds.train[i].y.values))
            return float(np.mean(np.concatenate(sq)))

        caic_candidates = [(k, rss_by_k[k], k, n * m_y) for k in sorted(rss_by_k)]
    else:
        # Predictor-basis sweep (scenario D): the response side is fixed.
        spec_y = BasisSpec(_SPLINE, cfg.other_k, domain)
        gram_y = gram_matrix(spec_y)
        train_y = [fit_coefficients(s.y, spec_y) for s in ds.train]
        v = np.stack([d.coeffs for d in train_y])
        z_by_k, fit_by_k, train_x_by_k = {}, {}, {}
        for k in _ks_needed(cfg):
            spec_x = BasisSpec(_SPLINE, k, domain)
            gram_x = gram_matrix(spec_x)
            train_x = [fit_coefficients(s.x, spec_x) for s in ds.train]
            z = sonf_design(train_x, gram_x)
            coef = fonf_fit(z, v, gram_y)
            fit = FonFFit(spec_x=spec_x, spec_y=spec_y, coef=coef, gram_x=gram_x, gram_y=gram_y)
            mse_by_k[k] = test_mse_fonf(fit, ds.test)
            resid = v - z @ coef
            rss_by_k[k] = float(np.trace(resid @ gram_y.entries @ resid.T))
            z_by_k[k] = z
            fit_by_k[k] = fit
            train_x_by_k[k] = train_x

        def cv_loss(train_idx, test_idx, k):
            base = fit_by_k[k]
            coef = fonf_fit(z_by_k[k][train_idx], v[train_idx], gram_y)
            fit = replace(base, coef=coef)
            sq = []
            for i in test_idx:
                pred = predict_curve(fit, train_x_by_k[k][i], ds.train[i].y.times)
                sq.append(np.square(pred - ds.train[i].y.values))
            return float(np.mean(np.concatenate(sq)))

        caic_candidates = [(k, rss_by_k[k], k, n) for k in sorted(rss_by_k)]

    methods = _apply_methods(cfg, rep, n, mse_by_k, caic_candidates, cv_loss)
    return mse_by_k, methods


def _curvefit_replicate(cfg: SweepConfig, ds: Dataset, rep: int):
    domain = (float(ds.grid[0]), float(ds.grid[-1]))
    sample = ds.train[0]
    n_pts = len(sample)
    mse_by_k, rss_by_k = {}, {}
    for k in _ks_needed(cfg):
        spec = BasisSpec(_SPLINE, k, domain)
        datum = fit_coefficients(sample, spec)
        pred = design_matrix(spec, ds.grid) @ datum.coeffs
        mse_by_k[k] = float(np.mean(np.square(pred - ds.truth)))
        resid = sample.values - design_matrix(spec, sample.times) @ datum.coeffs
        rss_by_k[k] = float(resid @ resid)

    def cv_loss(train_idx, test_idx, k):
        spec = BasisSpec(_SPLINE, k, domain)
        sub = LongitudinalSample(times=sample.times[train_idx], values=sample.values[train_idx])
        datum = fit_coefficients(sub, spec)
        pred = design_matrix(spec, sample.times[test_idx]) @ datum.coeffs
        return float(np.mean(np.square(pred - sample.values[test_idx])))

    caic_candidates = [(k, rss_by_k[k], k, n_pts) for k in sorted(rss_by_k)]
    methods = _apply_methods(cfg, rep, n_pts, mse_by_k, caic_candidates, cv_loss)
    return mse_by_k, methods


def _split_real_data(subjects, train_size: int, seed: int, rep: int):
    if train_size >= len(subjects):
        raise ConfigError(
            f"train_size={train_size} must be smaller than the {len(subjects)} subjects"
        )
    rng = np.random.default_rng(np.random.SeedSequence(entropy=(int(seed), int(rep))))
    perm = rng.permutation(len(subjects))
    train = tuple(subjects[i] for i in perm[:train_size])
    test = tuple(subjects[i] for i in perm[train_size:])
    return train, test


def _replicate_worker(cfg: SweepConfig, base: Dataset | None, rep: int):
    if cfg.data is not None:
        train, test = _split_real_data(base.train, cfg.data.train_size, cfg.seed, rep)
        ds = replace(base, train=train, test=test)
    else:
        ds = gen_scenario(replicate_config(cfg.scenario_cfg, cfg.seed, rep))
    if ds.kind == "sonf":
        mse_by_k, methods = _sonf_replicate(cfg, ds, rep)
    elif ds.kind == "fonf":
        mse_by_k, methods = _fonf_replicate(cfg, ds, rep)
    else:
        mse_by_k, methods = _curvefit_replicate(cfg, ds, rep)
    records = [SweepRecord(replicate=rep, k=k, mse=mse_by_k[k]) for k in cfg.k_grid]
    return records, methods


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Execute all replicates of a sweep; deterministic for a given seed."""
    base = None
    if cfg.data is not None:
        from .dataio import load_sonf_csv

        base = load_sonf_csv(cfg.data.x_path, cfg.data.y_path)

    reps = range(cfg.replicates)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            outputs = list(pool.map(lambda r: _replicate_worker(cfg, base, r), reps))
    else:
        outputs = [_replicate_worker(cfg, base, r) for r in reps]

    records = [rec for recs, _ in outputs for rec in recs]
    methods = [m for _, ms in outputs for m in ms]
    records.sort(key=lambda r: (r.replicate, r.k))
    methods.sort(key=lambda m: (m.replicate, m.method))
    return SweepResult(config=cfg, records=tuple(records), method_records=tuple(methods))


# ---------------------------------------------------------------------------
# Summaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiveNumber:
    vmin: float
    q1: float
    median: float
    q3: float
    vmax: float


def _five_number(values) -> FiveNumber:
    q = np.percentile(np.asarray(values, dtype=np.float64), [0, 25, 50, 75, 100])
    return FiveNumber(*map(float, q))


@dataclass(frozen=True)
class KSummary:
    k: int
    count: int
    mean: float
    stats: FiveNumber


@dataclass(frozen=True)
class MethodSummary:
    method: str
    count: int
    mean_mse: float
    mse_stats: FiveNumber
    chosen_k_stats: FiveNumber


@dataclass(frozen=True)
class Summary:
    per_k: tuple[KSummary, ...]
    per_method: tuple[MethodSummary, ...]


def summarize(result: SweepResult) -> Summary:
    """Aggregate a sweep into per-k MSE statistics and per-method tables."""
    if not result.records:
        raise InvalidInputError("cannot summarize an empty result")
    per_k = []
    by_k: dict[int, list[float]] = {}
    for rec in result.records:
        by_k.setdefault(rec.k, []).append(rec.mse)
    for k in sorted(by_k):
        vals = by_k[k]
        per_k.append(
            KSummary(k=k, count=len(vals), mean=float(np.mean(vals)), stats=_five_number(vals))
        )
    per_method = []
    by_method: dict[str, list[MethodRecord]] = {}
    for rec in result.method_records:
        by_method.setdefault(rec.method, []).append(rec)
    for method in sorted(by_method):
        recs = by_method[method]
        mses = [r.mse for r in recs]
        ks = [r.chosen_k for r in recs]
        per_method.append(
            MethodSummary(
                method=method,
                count=len(recs),
                mean_mse=float(np.mean(mses)),
                mse_stats=_five_number(mses),
                chosen_k_stats=_five_number(ks),
            )
        )
    return Summary(per_k=tuple(per_k), per_method=tuple(per_method))


def marker_k(cfg: SweepConfig) -> int:
    """Grid position of the expected interpolation threshold, for plotting."""
    if cfg.data is not None:
        return cfg.data.train_size
    scen = cfg.scenario_cfg
    if scen.scenario == "B":
        return scen.m_x
    if scen.scenario == "fig1-demo":
        return scen.m_x
    return scen.n_train


def load_config_file(path: str | Path) -> SweepConfig:
    """Read and validate a JSON sweep configuration file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    return sweep_config_from_json(doc, base_dir=path.parent)


# ---------------------------------------------------------------------------
# Output files
# ---------------------------------------------------------------------------

_F = ".17g"  # round-trip exact float format


def _write_csv(path: Path, header: list[str], rows):
    import csv

    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise InvalidInputError(f"cannot write {path}: {exc}") from None


def emit_outputs(result: SweepResult, summary: Summary, out_dir: str | Path) -> list[Path]:
    """Write records.csv, methods.csv, summary.csv and curve.svg.

    The curve plots log10 of the per-k median MSE with a vertical marker at
    the scenario's interpolation threshold.
    """
    from .svgplot import line_chart

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    records_path = out / "records.csv"
    _write_csv(
        records_path,
        ["replicate", "k", "mse"],
        ([r.replicate, r.k, format(r.mse, _F)] for r in result.records),
    )

    methods_path = out / "methods.csv"
    _write_csv(
        methods_path,
        ["replicate", "method", "chosen_k", "mse"],
        ([m.replicate, m.method, m.chosen_k, format(m.mse, _F)] for m in result.method_records),
    )

    summary_path = out / "summary.csv"
    rows = []
    for ks in summary.per_k:
        s = ks.stats
        rows.append(
            ["mse_by_k", str(ks.k), ks.count]
            + [format(v, _F) for v in (ks.mean, s.vmin, s.q1, s.median, s.q3, s.vmax)]
        )
    for ms in summary.per_method:
        s = ms.mse_stats
        rows.append(
            ["method_mse", ms.method, ms.count]
            + [format(v, _F) for v in (ms.mean_mse, s.vmin, s.q1, s.median, s.q3, s.vmax)]
        )
        c = ms.chosen_k_stats
        mean_k = float(np.mean([r.chosen_k for r in result.method_records if r.method == ms.method]))
        rows.append(
            ["chosen_k", ms.method, ms.count]
            + [format(v, _F) for v in (mean_k, c.vmin, c.q1, c.median, c.q3, c.vmax)]
        )
    _write_csv(summary_path, ["section", "key", "count", "mean", "min", "q1", "median", "q3", "max"], rows)

    points = [
        (float(ks.k), math.log10(max(ks.stats.median, 1e-300))) for ks in summary.per_k
    ]
    svg = line_chart(
        [("median MSE", points)],
        title="Test MSE vs number of basis functions",
        x_label="number of basis functions",
        y_label="log10 median MSE",
        marker_x=float(marker_k(result.config)),
    )
    svg_path = out / "curve.svg"
    try:
        svg_path.write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot write {svg_path}: {exc}") from None
    return [records_path, methods_path, summary_path, svg_path]
