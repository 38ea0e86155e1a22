"""Reproducible experiment runner.

Experiments are described by a flat JSON config (kind, dimensions, radial
laws, sample count, seed, ...).  Sampling is split into fixed-size blocks of
draws; block b of arm a always consumes the substream keyed by (seed, a, b),
so the pooled sample is bit-identical no matter how many worker shards
process the blocks or in which order they finish.  Reports are emitted as
schema-stable JSON (byte-identical across reruns of the same config+seed)
and as CSV holding the raw per-draw statistics for external plotting.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import densities, ensembles, girko, matcore, stats
from .densities import CauchyParams, TDistParams
from .ensembles import (
    EnsembleSpec,
    FixedShell,
    GaussianEntries,
    PartitionSpec,
    RadialLaw,
    RngStream,
    TwoShellMixture,
    UniformBall,
)

BLOCK = 64  # draws per substream; fixed so pooled output never depends on shard count

KINDS = ("universality", "exactness", "girko", "girko-stable", "identities", "complex")
DENSITY_KINDS = ("universal-real", "universal-complex", "matrix-t", "girko")


class ConfigError(ValueError):
    """Config rejected; the message names the offending field."""


# ---------------------------------------------------------------------------
# config


def parse_radial(desc) -> RadialLaw:
    """Parse a radial law descriptor.

    Accepted forms: "gaussian", "shell:R", "ball:R", "two-shell:r1,r2,w".
    """
    if isinstance(desc, (GaussianEntries, FixedShell, UniformBall, TwoShellMixture)):
        return desc
    if not isinstance(desc, str):
        raise ConfigError(f"radial: expected a descriptor string, got {desc!r}")
    name, _, arg = desc.partition(":")
    try:
        if name == "gaussian" and not arg:
            return GaussianEntries()
        if name == "shell":
            return FixedShell(float(arg))
        if name == "ball":
            return UniformBall(float(arg))
        if name == "two-shell":
            r1, r2, w = (float(x) for x in arg.split(","))
            return TwoShellMixture(r1, r2, w)
    except (ValueError, ensembles.InvalidLaw) as exc:
        raise ConfigError(f"radial: bad descriptor {desc!r} ({exc})") from exc
    raise ConfigError(f"radial: unknown law {desc!r}")


def radial_label(law: RadialLaw) -> str:
    if isinstance(law, GaussianEntries):
        return "gaussian"
    if isinstance(law, FixedShell):
        return f"shell:{law.r0:g}"
    if isinstance(law, UniformBall):
        return f"ball:{law.R:g}"
    return f"two-shell:{law.r1:g},{law.r2:g},{law.w:g}"


@dataclass
class ExperimentConfig:
    kind: str
    seed: int
    m: int = 2
    n: int = 1
    radial: tuple[RadialLaw, ...] = (GaussianEntries(),)
    b_columns: tuple[int, ...] | None = None
    u: tuple[float, ...] = ()
    alpha: int = 2
    scale: float = 0.5
    samples: int = 20000
    shards: int = 1
    out: str | None = None
    format: str = "json"
    significance: float = 1e-3
    max_mn: int = 12

    def echo(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "m": self.m,
            "n": self.n,
            "radial": [radial_label(r) for r in self.radial],
            "b_columns": list(self.b_columns) if self.b_columns else None,
            "u": list(self.u),
            "alpha": self.alpha,
            "scale": self.scale,
            "samples": self.samples,
            "shards": self.shards,
            "significance": self.significance,
            "max_mn": self.max_mn,
        }


def _take(raw: dict, key: str, kind, default=None, required: bool = False):
    if key not in raw:
        if required:
            raise ConfigError(f"{key}: required field is missing")
        return default
    try:
        return kind(raw[key])
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{key}: {exc}") from exc


def parse_config(raw: dict) -> ExperimentConfig:
    """Validate a flat config dict; errors name the offending field."""
    if not isinstance(raw, dict):
        raise ConfigError("config: expected a JSON object with flat keys")
    unknown = set(raw) - {
        "kind", "seed", "m", "n", "radial", "b_columns", "u", "alpha", "scale",
        "samples", "shards", "out", "format", "significance", "max_mn",
    }
    if unknown:
        raise ConfigError(f"{sorted(unknown)[0]}: unknown field")
    kind = _take(raw, "kind", str, required=True)
    if kind not in KINDS:
        raise ConfigError(f"kind: must be one of {KINDS}, got {kind!r}")
    seed = _take(raw, "seed", int, required=(kind != "identities"), default=0)
    cfg = ExperimentConfig(kind=kind, seed=seed)
    cfg.m = _take(raw, "m", int, cfg.m)
    cfg.n = _take(raw, "n", int, cfg.n)
    if cfg.m < 1:
        raise ConfigError(f"m: must be >= 1, got {cfg.m}")
    if cfg.n < 0:
        raise ConfigError(f"n: must be >= 0, got {cfg.n}")
    laws = raw.get("radial", ["gaussian"])
    if isinstance(laws, str):
        laws = [laws]
    cfg.radial = tuple(parse_radial(d) for d in laws)
    if "b_columns" in raw:
        cfg.b_columns = tuple(int(c) for c in raw["b_columns"])
    cfg.u = tuple(float(x) for x in raw.get("u", ()))
    cfg.alpha = _take(raw, "alpha", int, cfg.alpha)
    cfg.scale = _take(raw, "scale", float, cfg.scale)
    cfg.samples = _take(raw, "samples", int, cfg.samples)
    cfg.shards = _take(raw, "shards", int, cfg.shards)
    cfg.out = _take(raw, "out", str, cfg.out)
    cfg.format = _take(raw, "format", str, cfg.format)
    cfg.significance = _take(raw, "significance", float, cfg.significance)
    cfg.max_mn = _take(raw, "max_mn", int, cfg.max_mn)
    if cfg.shards < 1:
        raise ConfigError(f"shards: must be >= 1, got {cfg.shards}")
    if kind != "identities" and cfg.samples < 35 * cfg.shards:
        raise ConfigError(f"samples: must be >= 35 * shards = {35 * cfg.shards}, got {cfg.samples}")
    if cfg.format not in ("json", "csv", "both"):
        raise ConfigError(f"format: must be json, csv or both, got {cfg.format!r}")
    if not 0.0 < cfg.significance < 1.0:
        raise ConfigError(f"significance: must lie in (0,1), got {cfg.significance}")
    if kind in ("girko", "girko-stable") and len(cfg.u) != cfg.n:
        raise ConfigError(f"u: needs {cfg.n} entries to match n, got {len(cfg.u)}")
    if kind == "girko-stable" and cfg.alpha not in (1, 2):
        raise ConfigError(f"alpha: only 1 and 2 are supported, got {cfg.alpha}")
    if kind == "exactness" and cfg.n != 1:
        raise ConfigError(f"n: exactness compares components to the Cauchy law and needs n = 1, got {cfg.n}")
    if kind == "universality" and len(cfg.radial) < 2:
        raise ConfigError("radial: universality needs at least two laws to compare")
    return cfg


# ---------------------------------------------------------------------------
# report


@dataclass
class RunReport:
    config: dict
    entries: list = field(default_factory=list)
    resamples: int = 0
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    wall_time_s: float = 0.0  # console only; excluded from emitted files

    @property
    def passed(self) -> bool:
        return all(e.get("passed", False) for e in self.entries)

    @property
    def failing(self) -> list[str]:
        return [e["name"] for e in self.entries if not e.get("passed", False)]

    def payload(self) -> dict:
        return {
            "config": self.config,
            "entries": self.entries,
            "n_entries": len(self.entries),
            "n_failed": len(self.failing),
            "passed": self.passed,
            "resamples": self.resamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=2, sort_keys=True) + "\n"


def _ks_entry(name: str, report: stats.KsReport) -> dict:
    entry = {
        "kind": "ks2" if report.n2 is not None else "ks1",
        "n": report.n,
        "name": name,
        "p_value": report.p_value,
        "passed": report.passed,
        "statistic": report.statistic,
        "threshold": report.threshold,
    }
    if report.n2 is not None:
        entry["n2"] = report.n2
    return entry


def _residual_entry(name: str, value: float, tolerance: float) -> dict:
    return {
        "kind": "residual",
        "name": name,
        "passed": bool(value < tolerance),
        "tolerance": tolerance,
        "value": value,
    }


# ---------------------------------------------------------------------------
# sharded sampling


def _pool_size(shards: int, blocks: int) -> int:
    cap = os.environ.get("RMTLAB_THREADS")
    cap = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(shards, cap, blocks))


def _pooled_rows(cfg: ExperimentConfig, arm: int, draw_one) -> tuple[np.ndarray, int]:
    """Collect cfg.samples draws of draw_one(gen) -> (row, resamples).

    Block b of this arm always uses the substream (seed, arm << 32 | b);
    workers only decide who executes a block, never what it contains.
    """
    n = cfg.samples
    blocks = (n + BLOCK - 1) // BLOCK
    out: list = [None] * blocks
    rejected = [0] * blocks

    def work(b: int) -> None:
        gen = RngStream(cfg.seed, (arm << 32) | b).generator()
        count = min(BLOCK, n - b * BLOCK)
        rows = []
        rej = 0
        for _ in range(count):
            row, r = draw_one(gen)
            rows.append(row)
            rej += r
        out[b] = np.asarray(rows)
        rejected[b] = rej

    workers = _pool_size(cfg.shards, blocks)
    if workers <= 1:
        for b in range(blocks):
            work(b)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, range(blocks)))
    return np.concatenate(out, axis=0), sum(rejected)


# ---------------------------------------------------------------------------
# suites


def _run_identities(cfg: ExperimentConfig, report: RunReport) -> None:
    report.columns = ["m", "n", "gamma_residual", "norm_consistency", "det_consistency"]
    for m in range(1, cfg.max_mn + 1):
        for n in range(1, cfg.max_mn + 1):
            gamma_res = densities.gamma_identity_residual(m, n)
            consistency = abs(
                math.exp(densities.log_universal_real_norm(m, n))
                * densities.selberg_Z_integral(m, n)
                - 1.0
            )
            # det-power integral times Gaussian determinant integral must
            # reproduce the plain Gaussian normalization pi^{m(m+n)/2}
            det_res = abs(
                math.log(densities.gaussian_detn_integral(m, n))
                + math.log(densities.selberg_Z_integral(m, n))
                - 0.5 * m * (m + n) * densities.LOG_PI
            )
            report.entries.append(
                _residual_entry(f"gamma-identity:m={m},n={n}", gamma_res, 1e-10)
            )
            report.entries.append(
                _residual_entry(f"norm-consistency:m={m},n={n}", consistency, 1e-12)
            )
            report.entries.append(
                _residual_entry(f"det-consistency:m={m},n={n}", det_res, 1e-10)
            )
            report.rows.append([m, n, gamma_res, consistency, det_res])
    for m in range(1, cfg.max_mn + 1):
        v = densities.ortho_volume(m)
        report.entries.append(
            {
                "kind": "positivity",
                "name": f"rotation-volume:m={m}",
                "passed": bool(math.isfinite(v) and v > 0.0),
                "value": v,
            }
        )


def _run_exactness(cfg: ExperimentConfig, report: RunReport) -> None:
    spec = EnsembleSpec(m=cfg.m, n=1, field="real", radial=cfg.radial[0])
    part = PartitionSpec(cfg.b_columns) if cfg.b_columns else PartitionSpec.leading(cfg.m)

    def draw(gen):
        Z, rej = ensembles.sample_z(spec, part, gen)
        return Z[:, 0], rej

    rows, rej = _pooled_rows(cfg, 0, draw)
    report.resamples += rej
    report.columns = [f"z{i + 1}" for i in range(cfg.m)]
    report.rows = rows.tolist()
    threshold = cfg.significance / cfg.m
    cdf = lambda x: densities.cauchy_cdf(x)  # noqa: E731
    for i in range(cfg.m):
        ks = stats.ks_one_sample(rows[:, i], cdf, threshold=threshold)
        report.entries.append(_ks_entry(f"component-z{i + 1}-vs-cauchy", ks))


def _universality_statistics(cfg: ExperimentConfig, field: str) -> tuple[np.ndarray, int, list[str]]:
    """Per-arm draws of (log det gram statistic, first entry statistic)."""
    part = PartitionSpec(cfg.b_columns) if cfg.b_columns else PartitionSpec.leading(cfg.m)
    arms = []
    total_rej = 0
    for a, law in enumerate(cfg.radial):
        spec = EnsembleSpec(m=cfg.m, n=cfg.n, field=field, radial=law)

        def draw(gen, spec=spec):
            Z, rej = ensembles.sample_z(spec, part, gen)
            gram = np.eye(spec.m) + Z @ Z.conj().T
            t_stat = matcore.spd_logdet(gram)
            z11 = Z[0, 0]
            first = abs(z11) ** 2 if field == "complex" else z11
            return (t_stat, first), rej

        rows, rej = _pooled_rows(cfg, a, draw)
        total_rej += rej
        arms.append(rows)
    return arms, total_rej, [radial_label(r) for r in cfg.radial]


def _run_universality(cfg: ExperimentConfig, report: RunReport) -> None:
    arms, rej, labels = _universality_statistics(cfg, "real")
    report.resamples += rej
    report.columns = ["radial", "logdet_gram", "z11"]
    for label, rows in zip(labels, arms):
        report.rows.extend([label, *r] for r in rows.tolist())
    pairs = [(i, j) for i in range(len(arms)) for j in range(i + 1, len(arms))]
    threshold = cfg.significance / (2 * len(pairs))
    for i, j in pairs:
        for col, statname in ((0, "logdet-gram"), (1, "entry-z11")):
            ks = stats.ks_two_sample(arms[i][:, col], arms[j][:, col], threshold=threshold)
            report.entries.append(_ks_entry(f"{statname}:{labels[i]}-vs-{labels[j]}", ks))


def _run_complex(cfg: ExperimentConfig, report: RunReport) -> None:
    arms, rej, labels = _universality_statistics(cfg, "complex")
    report.resamples += rej
    report.columns = ["radial", "logdet_gram", "abs_z11_sq"]
    for label, rows in zip(labels, arms):
        report.rows.extend([label, *r] for r in rows.tolist())
    n_tests = 0
    if cfg.m == 1 and cfg.n == 1:
        n_tests += len(arms)
    pairs = [(i, j) for i in range(len(arms)) for j in range(i + 1, len(arms))]
    n_tests += 2 * len(pairs)
    threshold = cfg.significance / max(1, n_tests)
    if cfg.m == 1 and cfg.n == 1:
        # |z|^2 has the exact CDF s/(1+s)
        for label, rows in zip(labels, arms):
            ks = stats.ks_one_sample(rows[:, 1], lambda s: s / (1.0 + s), threshold=threshold)
            report.entries.append(_ks_entry(f"modulus-sq-cdf:{label}", ks))
    for i, j in pairs:
        for col, statname in ((0, "logdet-gram"), (1, "modulus-sq")):
            ks = stats.ks_two_sample(arms[i][:, col], arms[j][:, col], threshold=threshold)
            report.entries.append(_ks_entry(f"{statname}:{labels[i]}-vs-{labels[j]}", ks))


def _run_girko(cfg: ExperimentConfig, report: RunReport) -> None:
    beta = girko.beta_euclidean(cfg.u)
    arms = []
    labels = [radial_label(r) for r in cfg.radial]
    for a, law in enumerate(cfg.radial):
        spec = girko.LinearSystemSpec(m=cfg.m, n=cfg.n, u=cfg.u, radial=law)

        def draw(gen, spec=spec):
            z, rej = girko.sample_solution(spec, gen)
            return z, rej

        rows, rej = _pooled_rows(cfg, a, draw)
        report.resamples += rej
        arms.append(rows)
    report.columns = ["radial"] + [f"z{i + 1}" for i in range(cfg.m)]
    for label, rows in zip(labels, arms):
        report.rows.extend([label, *r] for r in rows.tolist())
    pairs = [(i, j) for i in range(len(arms)) for j in range(i + 1, len(arms))]
    n_tests = len(arms) * (2 if cfg.m >= 2 else 1) + len(pairs)
    threshold = cfg.significance / n_tests
    cauchy_beta = CauchyParams(0.0, beta)
    for label, rows in zip(labels, arms):
        ks = stats.ks_one_sample(rows[:, 0], lambda x: densities.cauchy_cdf(x, cauchy_beta), threshold=threshold)
        report.entries.append(_ks_entry(f"z1-vs-cauchy-width-{beta:g}:{label}", ks))
        if cfg.m >= 2:
            ratio = rows[:, 0] / rows[:, 1]
            ks = stats.ks_one_sample(ratio, densities.cauchy_cdf, threshold=threshold)
            report.entries.append(_ks_entry(f"ratio-z1-z2-vs-cauchy:{label}", ks))
    for i, j in pairs:
        ks = stats.ks_two_sample(arms[i][:, 0], arms[j][:, 0], threshold=threshold)
        report.entries.append(_ks_entry(f"z1:{labels[i]}-vs-{labels[j]}", ks))


def _run_girko_stable(cfg: ExperimentConfig, report: RunReport) -> None:
    law = girko.StableLaw(alpha=cfg.alpha, c=cfg.scale)
    beta = girko.beta_alpha(cfg.u, cfg.alpha)

    def draw(gen):
        z, rej = girko.sample_stable_system(cfg.m, cfg.n, cfg.u, law, gen)
        return z, rej

    rows, rej = _pooled_rows(cfg, 0, draw)
    report.resamples += rej
    report.columns = [f"z{i + 1}" for i in range(cfg.m)]
    report.rows = rows.tolist()
    if cfg.alpha == 2:
        # closed form available: quadrature must agree with the Cauchy law
        grid = np.linspace(-3.0 * beta, 3.0 * beta, 10)
        worst = max(
            abs(girko.girko_stable_density(float(x), law, beta)
                - math.exp(densities.cauchy_logpdf(float(x), CauchyParams(0.0, beta))))
            for x in grid
        )
        report.entries.append(_residual_entry("quadrature-vs-cauchy-grid", worst, 1e-6))
        cdf = lambda x: densities.cauchy_cdf(x, CauchyParams(0.0, beta))  # noqa: E731
    else:
        cdf = lambda x: girko.girko_stable_cdf(x, law, beta)  # noqa: E731
    ks = stats.ks_one_sample(rows[:, 0], cdf, threshold=cfg.significance)
    report.entries.append(_ks_entry(f"z1-vs-stable-solution-cdf-beta-{beta:g}", ks))


_SUITES = {
    "identities": _run_identities,
    "exactness": _run_exactness,
    "universality": _run_universality,
    "complex": _run_complex,
    "girko": _run_girko,
    "girko-stable": _run_girko_stable,
}


def run(cfg: ExperimentConfig) -> RunReport:
    """Execute the configured suite.  Suite errors land in the report."""
    report = RunReport(config=cfg.echo())
    started = time.perf_counter()
    try:
        _SUITES[cfg.kind](cfg, report)
    except Exception as exc:  # propagate into the report, never crash the harness
        report.entries.append(
            {"kind": "error", "name": f"suite-error:{type(exc).__name__}", "passed": False, "detail": str(exc)}
        )
    report.wall_time_s = time.perf_counter() - started
    return report


# ---------------------------------------------------------------------------
# emission


def emit(report: RunReport, fmt: str, out: str) -> list[str]:
    """Write the report; returns the paths written.

    JSON is schema-stable with fixed key order and excludes wall time, so
    identical config+seed reproduces identical bytes.  CSV holds the raw
    per-draw statistics, one row per draw.
    """
    paths = []
    base = out[:-5] if out.endswith(".json") else out
    if fmt in ("json", "both"):
        path = base + ".json"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        paths.append(path)
    if fmt in ("csv", "both"):
        path = base + ".csv"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(",".join(report.columns) + "\n")
            for row in report.rows:
                fh.write(",".join(str(v) for v in row) + "\n")
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# density evaluation


def _parse_point(kind: str, at):
    if kind == "universal-complex":
        arr = np.asarray(at, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 2:
            raise ConfigError("at: complex points use [re, im] pairs, e.g. [[[0.1, 0.2]]]")
        return arr[..., 0] + 1j * arr[..., 1]
    return np.asarray(at, dtype=float)


def density_value(kind: str, params: dict, at) -> float:
    """Evaluate one of the closed-form log densities at a point."""
    if kind == "universal-real":
        return densities.log_universal_real(_parse_point(kind, at))
    if kind == "universal-complex":
        return densities.log_universal_complex(_parse_point(kind, at))
    if kind == "matrix-t":
        Z = np.atleast_2d(np.asarray(at, dtype=float))
        m, n = Z.shape
        p = TDistParams(
            M=np.asarray(params.get("M", np.zeros((m, n))), dtype=float),
            Sigma=np.asarray(params.get("Sigma", np.eye(m)), dtype=float),
            Omega=np.asarray(params.get("Omega", np.eye(n)), dtype=float),
            q=float(params.get("q", 1.0)),
        )
        return densities.log_matrix_t(Z, p)
    if kind == "girko":
        u = np.asarray(params.get("u", ()), dtype=float)
        return girko.girko_logdensity(np.asarray(at, dtype=float), u)
    raise ConfigError(f"kind: must be one of {DENSITY_KINDS}, got {kind!r}")


# ---------------------------------------------------------------------------
# entry point


def _summarize(report: RunReport, stream=None) -> None:
    stream = stream or sys.stdout
    for e in report.entries:
        mark = "pass" if e.get("passed") else "FAIL"
        if e["kind"].startswith("ks"):
            detail = f"D={e['statistic']:.5f} p={e['p_value']:.3e} (threshold {e['threshold']:.1e})"
        elif e["kind"] == "residual":
            detail = f"residual={e['value']:.3e} (tolerance {e['tolerance']:.1e})"
        elif e["kind"] == "error":
            detail = e.get("detail", "")
        else:
            detail = f"value={e.get('value')}"
        print(f"[{mark}] {e['name']}: {detail}", file=stream)
    verdict = "PASS" if report.passed else "FAIL"
    print(
        f"{verdict}: {len(report.entries) - len(report.failing)}/{len(report.entries)} checks"
        f" in {report.wall_time_s:.2f} s, {report.resamples} resamples",
        file=stream,
    )


def _cmd_run(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 2
    for key in ("seed", "shards", "out", "format"):
        value = getattr(args, key)
        if value is not None:
            raw[key] = value
    try:
        cfg = parse_config(raw)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    report = run(cfg)
    _summarize(report)
    if cfg.out:
        try:
            for path in emit(report, cfg.format, cfg.out):
                print(f"wrote {path}")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 2
    if not report.passed:
        for name in report.failing:
            print(f"failed: {name}", file=sys.stderr)
        return 1
    return 0


def _cmd_identities(args) -> int:
    cfg = ExperimentConfig(kind="identities", seed=0, max_mn=args.max)
    report = run(cfg)
    _summarize(report)
    if args.out:
        for path in emit(report, args.format, args.out):
            print(f"wrote {path}")
    return 0 if report.passed else 1


def _cmd_density(args) -> int:
    try:
        params = json.loads(args.params) if args.params else {}
        at = json.loads(args.at)
        logp = density_value(args.kind, params, at)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps({"at": at, "density": math.exp(logp), "kind": args.kind, "log_density": logp},
                     sort_keys=True))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rmtlab",
        description="Sample rotationally invariant random-matrix ensembles and "
        "verify the universal laws of B^-1 X and of random linear systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment described by a JSON config")
    p_run.add_argument("config", help="path to the flat JSON experiment config")
    p_run.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_run.add_argument("--shards", type=int, default=None, help="override the worker shard count")
    p_run.add_argument("--out", default=None, help="report path stem")
    p_run.add_argument("--format", choices=["json", "csv", "both"], default=None)
    p_run.set_defaults(fn=_cmd_run)

    p_id = sub.add_parser("identities", help="check the exact gamma-product identities")
    p_id.add_argument("--max", type=int, default=12, help="largest m and n in the grid")
    p_id.add_argument("--out", default=None, help="report path stem")
    p_id.add_argument("--format", choices=["json", "csv", "both"], default="json")
    p_id.set_defaults(fn=_cmd_identities)

    p_den = sub.add_parser("density", help="evaluate a closed-form density at a point")
    p_den.add_argument("--kind", required=True, choices=list(DENSITY_KINDS))
    p_den.add_argument("--params", default="", help="inline JSON parameters")
    p_den.add_argument("--at", required=True, help="evaluation point as inline JSON")
    p_den.set_defaults(fn=_cmd_density)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
