"""Command-line front end.

Examples::

    su2walk --mode line --theta 45 --angle-unit deg --steps 100 --out line.csv
    su2walk --mode sweep-theta --theta-grid 5:85:10 --angle-unit deg --steps 100 --out sweep.csv
    su2walk --mode mixing --theta 15 --angle-unit deg --vertices 101 --horizon 20200 --out mix.csv
    su2walk --config run.cfg --steps 200

A config file holds ``key=value`` lines using the long flag names; flags given
on the command line override it.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from su2walk.coin import CoinParams
from su2walk.cycle import (
    DEFAULT_EPSILON,
    mixing_time,
    n_log_n,
    parity_warning,
    time_averaged,
    tv_distance,
    tv_trace,
    uniform,
)
from su2walk.envelope import EnvelopeModel, analytic_variance, envelope_density
from su2walk.errors import DomainError, ResourceError
from su2walk.statistics import asymmetry, distribution, entropy, mean, variance
from su2walk.walk import InitialCondition, evolve

MODES = ("line", "cycle", "sweep-theta", "sweep-eta", "mixing", "envelope")
EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2

_PI_EXPR = re.compile(r"^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    return f"{float(x):.12g}"


def parse_angle(text: str, unit: str) -> float:
    """Angle in radians from a number in ``unit`` or a radian expression like ``5pi/12``."""
    text = text.strip()
    m = _PI_EXPR.match(text)
    if m:
        if unit != "rad":
            raise UsageError(f"angle {text!r} uses pi but --angle-unit is {unit}")
        coef = m.group(1)
        coef = -1.0 if coef == "-" else float(coef) if coef not in ("", "+") else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return coef * math.pi / den
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"angle must be finite, got {text!r}")
    return math.radians(value) if unit == "deg" else value


def parse_grid(text: str, unit: str) -> list[float]:
    """``start:stop:step`` inclusive of ``stop``, returned in radians."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    start, stop, stride = (parse_angle(p, unit) for p in parts)
    if stride <= 0 or stop < start:
        raise UsageError(f"grid {text!r} is empty or has a non-positive step")
    count = int(math.floor((stop - start) / stride + 1e-9)) + 1
    return [start + k * stride for k in range(count)]


@dataclass
class RunConfig:
    mode: str
    coin: CoinParams
    init: InitialCondition
    angle_unit: str = "rad"
    steps: int | None = None
    vertices: int | None = None
    horizon: int | None = None
    epsilon: float = DEFAULT_EPSILON
    theta_grid: list[float] | None = None
    eta_grid: list[float] | None = None
    out: str | None = None
    jobs: int | None = None

    def require(self, *names):
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            flags = ", ".join("--" + n.replace("_", "-") for n in missing)
            raise UsageError(f"mode {self.mode} requires {flags}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="su2walk", description="Discrete-time quantum walks with an SU(2) coin.")
    p.add_argument("--config", help="key=value file; command-line flags override it")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--xi")
    p.add_argument("--theta")
    p.add_argument("--zeta")
    p.add_argument("--angle-unit", choices=("deg", "rad"))
    p.add_argument("--steps", type=int)
    p.add_argument("--vertices", type=int)
    p.add_argument("--horizon", type=int,
                   help="averaging horizon T (cycle) or search cap t_max (mixing)")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--init", help="basis0, basis1, symmetric or custom:a_re,a_im,b_re,b_im")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--theta-grid", help="start:stop:step in the chosen angle unit")
    p.add_argument("--eta-grid", help="start:stop:step in the chosen angle unit")
    p.add_argument("--jobs", type=int, help="worker threads for sweeps")
    return p


def read_config_file(path: str) -> list[str]:
    """Turn ``key=value`` lines into the equivalent flag list."""
    argv = []
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        argv += ["--" + key.replace("_", "-"), value]
    return argv


def parse_config(argv: list[str] | None) -> RunConfig:
    parser = build_parser()
    cli = parser.parse_args(argv)
    merged = vars(cli)
    if cli.config:
        from_file = vars(parser.parse_args(read_config_file(cli.config)))
        merged = {k: (v if v is not None else from_file.get(k)) for k, v in merged.items()}
    ns = argparse.Namespace(**merged)
    if ns.mode is None:
        raise UsageError("--mode is required")
    unit = ns.angle_unit or "rad"
    angle = lambda v: 0.0 if v is None else parse_angle(v, unit)  # noqa: E731
    try:
        coin = CoinParams(angle(ns.xi), angle(ns.theta), angle(ns.zeta))
        init = InitialCondition.parse(ns.init or "symmetric")
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    for name in ("steps", "vertices", "horizon", "jobs"):
        v = getattr(ns, name)
        if v is not None and v < (0 if name == "steps" else 1):
            raise UsageError(f"--{name} must be {'non-negative' if name == 'steps' else 'positive'}")
    epsilon = DEFAULT_EPSILON if ns.epsilon is None else ns.epsilon
    if not (0.0 < epsilon <= 1.0):
        raise UsageError("--epsilon must lie in (0, 1]")
    return RunConfig(
        mode=ns.mode,
        coin=coin,
        init=init,
        angle_unit=unit,
        steps=ns.steps,
        vertices=ns.vertices,
        horizon=ns.horizon,
        epsilon=epsilon,
        theta_grid=parse_grid(ns.theta_grid, unit) if ns.theta_grid else None,
        eta_grid=parse_grid(ns.eta_grid, unit) if ns.eta_grid else None,
        out=ns.out,
        jobs=ns.jobs,
    )


def _write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([r if isinstance(r, (int, np.integer)) else fmt(r) for r in row])
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


def _summary(**fields) -> str:
    return " ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in fields.items())


def _run_line(cfg):
    cfg.require("steps")
    dist = distribution(evolve(cfg.init, cfg.coin, cfg.steps))
    rows = zip(dist.positions.tolist(), dist.probabilities)
    line = _summary(mode="line", steps=cfg.steps, sigma2=variance(dist),
                    entropy_bits=entropy(dist), mean=mean(dist), asymmetry=asymmetry(dist))
    return ["position", "probability"], rows, line


def _run_cycle(cfg):
    cfg.require("vertices")
    n = cfg.vertices
    horizon = cfg.horizon or n_log_n(max(n, 2))
    avg = time_averaged(cfg.init, cfg.coin, n, horizon)
    rows = zip(range(n), avg.probabilities)
    probs = avg.probabilities
    q = probs[probs > 0]
    line = _summary(mode="cycle", vertices=n, horizon=horizon,
                    tv_to_uniform=tv_distance(avg, uniform(n)),
                    entropy_bits=float(-np.dot(q, np.log2(q))))
    return ["vertex", "probability"], rows, line


def _sweep_point(cfg, coin):
    dist = distribution(evolve(cfg.init, coin, cfg.steps))
    return variance(dist) / cfg.steps**2, entropy(dist), mean(dist)


def _run_sweep_theta(cfg):
    cfg.require("steps", "theta_grid")
    if cfg.steps < 1:
        raise UsageError("--steps must be positive for sweeps")
    coins = [CoinParams(cfg.coin.xi, t, cfg.coin.zeta) for t in cfg.theta_grid]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        results = list(pool.map(lambda c: _sweep_point(cfg, c), coins))
    rows = [(math.degrees(t), c, h) for t, (c, h, _) in zip(cfg.theta_grid, results)]
    best = max(rows, key=lambda r: r[2])
    line = _summary(mode="sweep-theta", steps=cfg.steps, points=len(rows),
                    max_entropy_theta_deg=best[0], max_entropy_bits=best[2])
    return ["theta_deg", "c_theta", "entropy_bits"], rows, line


def _run_sweep_eta(cfg):
    cfg.require("steps", "eta_grid")
    if cfg.steps < 1:
        raise UsageError("--steps must be positive for sweeps")
    coins = [CoinParams(eta, cfg.coin.theta, 0.0) for eta in cfg.eta_grid]
    with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        results = list(pool.map(lambda c: _sweep_point(cfg, c), coins))
    rows = [(math.degrees(e), c, h, m) for e, (c, h, m) in zip(cfg.eta_grid, results)]
    line = _summary(mode="sweep-eta", steps=cfg.steps, points=len(rows),
                    theta_deg=math.degrees(cfg.coin.theta))
    return ["eta_deg", "c_theta", "entropy_bits", "mean"], rows, line


def _run_mixing(cfg):
    cfg.require("vertices")
    n = cfg.vertices
    t_max = cfg.horizon or 200 * n
    trace = tv_trace(cfg.init, cfg.coin, n, t_max)
    result = mixing_time(cfg.init, cfg.coin, n, cfg.epsilon, t_max)
    rows = zip(range(1, t_max + 1), trace)
    fields = dict(mode="mixing", vertices=n, epsilon=cfg.epsilon, t_max=t_max,
                  mixing_time=result.time if result.mixed else "not-mixed",
                  tv_at_t_max=float(trace[-1]))
    line = _summary(**fields)
    if result.warning:
        print(f"warning: {result.warning}", file=sys.stderr)
    return ["T", "tv_distance"], rows, line


def _run_envelope(cfg):
    cfg.require("steps")
    if cfg.steps < 1:
        raise UsageError("--steps must be positive for envelope mode")
    theta = cfg.coin.theta
    coin = CoinParams(0.0, theta, 0.0)
    dist = distribution(evolve(cfg.init, coin, cfg.steps))
    model = EnvelopeModel(theta, cfg.steps)
    env = envelope_density(model, dist.positions.astype(float))
    rows = zip(dist.positions.tolist(), dist.probabilities, env)
    try:
        closed = analytic_variance(theta, cfg.steps)
        quad = analytic_variance(theta, cfg.steps, method="quadrature")
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    line = _summary(mode="envelope", steps=cfg.steps, sigma2=variance(dist),
                    sigma2_closed=closed, sigma2_quadrature=quad, k_constant=model.k_constant)
    return ["position", "probability", "envelope"], rows, line


_RUNNERS = {
    "line": _run_line,
    "cycle": _run_cycle,
    "sweep-theta": _run_sweep_theta,
    "sweep-eta": _run_sweep_eta,
    "mixing": _run_mixing,
    "envelope": _run_envelope,
}


def run(cfg: RunConfig) -> int:
    header, rows, line = _RUNNERS[cfg.mode](cfg)
    rows = list(rows)
    if cfg.out:
        _write_csv(cfg.out, header, rows)
    print(line)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except UsageError as exc:
        print(f"su2walk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"su2walk: resource error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (DomainError, OSError) as exc:
        print(f"su2walk: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
