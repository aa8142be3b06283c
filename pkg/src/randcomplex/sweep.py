"""Monte Carlo sweep harness: frozen CSV schema, summaries, SVG plots.

Each (n, p, trial) cell generates one complex and runs every configured
check on that same sample, so per-trial outcomes can be cross-tabulated.
Sweeps report; they never assert.  The CSV is byte-identical across
reruns of the same config (wall times are only recorded on request,
since timing would break that contract).
"""

from __future__ import annotations

import csv
import json
import math
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ConfigError, EmptyInput, MissingColumn

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

CSV_COLUMNS = ["n", "p", "trial", "seed", "f2", "check", "outcome", "detail", "ms"]
WORKERS_ENV = "RANDCOMPLEX_WORKERS"

KNOWN_CHECKS = ("h1_gf2", "h1_gfq", "sc_certify", "sparse3", "link_stats", "snf")


@dataclass(frozen=True)
class SweepConfig:
    seed: int
    n_grid: tuple
    p_grids: dict  # n -> tuple of exact decimal strings
    trials: int
    checks: tuple  # check spec strings, e.g. "sparse3(0.15,6)"
    out: str
    summary: str | None = None
    workers: int = 1
    record_timing: bool = False


def parse_check(spec: str):
    """Split a check spec like 'sparse3(0.15,6)' into (name, args)."""
    m = re.fullmatch(r"([a-z0-9_]+)(?:\(([^)]*)\))?", spec.strip())
    if not m:
        raise ConfigError(f"unparseable check spec {spec!r}")
    name, raw = m.group(1), m.group(2)
    args = tuple(s.strip() for s in raw.split(",")) if raw else ()
    if name not in KNOWN_CHECKS:
        raise ConfigError(f"unknown check {name!r}; known: {', '.join(KNOWN_CHECKS)}")
    if name == "h1_gfq":
        if len(args) != 1 or not args[0].isdigit():
            raise ConfigError(f"h1_gfq needs one integer argument, got {spec!r}")
    elif name == "sparse3":
        if len(args) != 2:
            raise ConfigError(f"sparse3 needs (eps, m), got {spec!r}")
    elif args:
        raise ConfigError(f"check {name!r} takes no arguments, got {spec!r}")
    return name, args


def load_config(path) -> SweepConfig:
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"bad TOML: {exc}") from exc
    return config_from_dict(raw)


def config_from_dict(raw: dict) -> SweepConfig:
    try:
        seed = int(raw["seed"])
        n_grid = tuple(int(n) for n in raw["n"])
        trials = int(raw["trials"])
        checks = tuple(raw["checks"])
        out = raw["out"]
    except KeyError as exc:
        raise ConfigError(f"missing config key {exc.args[0]!r}") from None
    if not n_grid:
        raise ConfigError("n grid is empty")
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    if not checks:
        raise ConfigError("checks list is empty")
    for c in checks:
        parse_check(c)

    p_spec = raw.get("p")
    if not isinstance(p_spec, dict) or not (
        "values" in p_spec or "parametric" in p_spec
    ):
        raise ConfigError("config needs a [p] table with 'values' or 'parametric'")
    p_grids = {}
    for n in n_grid:
        ps = []
        for v in p_spec.get("values", ()):
            ps.append(str(v))
        for pair in p_spec.get("parametric", ()):
            c, a = float(pair[0]), float(pair[1])
            ps.append(repr(min(1.0, max(0.0, c * n**a))))
        if not ps:
            raise ConfigError("p grid is empty")
        p_grids[n] = tuple(ps)

    workers = int(raw.get("workers", 1))
    return SweepConfig(
        seed=seed,
        n_grid=n_grid,
        p_grids=p_grids,
        trials=trials,
        checks=checks,
        out=out,
        summary=raw.get("summary"),
        workers=workers,
        record_timing=bool(raw.get("record_timing", False)),
    )


def wilson_interval(successes: int, trials: int, z: float = 1.96):
    """Wilson 95% score interval for a binomial proportion."""
    if trials == 0:
        return (0.0, 1.0)
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (
        z
        * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
        / denom
    )
    return (max(0.0, center - half), min(1.0, center + half))


# ---------------------------------------------------------------------------
# per-trial execution


def _run_checks(n: int, p_str: str, trial: int, seed: int, checks, record_timing):
    from .randgen import RngSpec, gen_Y

    Y = gen_Y(n, p_str, RngSpec(seed=seed, trial=trial))
    rows = []
    for spec in checks:
        name, args = parse_check(spec)
        t0 = time.perf_counter()
        try:
            outcome, detail = _one_check(Y, n, name, args)
        except Exception as exc:  # a failed check is a row, never an abort
            outcome, detail = "error", f"{type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - t0) * 1000) if record_timing else 0
        rows.append(
            [str(n), p_str, str(trial), str(seed), str(Y.f2), name, outcome, detail, str(ms)]
        )
    return rows


def _one_check(Y, n: int, name: str, args) -> tuple[str, str]:
    from .homology import betti, h1_integral
    from .pi1 import certify_simply_connected
    from .density import check_sparse3

    if name == "h1_gf2":
        b1 = betti(Y, "gf2").b1
        return str(b1 == 0).lower(), f"b1={b1}"
    if name == "h1_gfq":
        b1 = betti(Y, f"gfq:{args[0]}").b1
        return str(b1 == 0).lower(), f"b1={b1}"
    if name == "sc_certify":
        cert = certify_simply_connected(Y)
        return str(cert.certified).lower(), f"failing_pairs={len(cert.failing_pairs)}"
    if name == "sparse3":
        v = check_sparse3(Y, args[0], int(args[1]))
        if v.sparse:
            return "true", ""
        return "false", "witness=" + _face_list_str(v.witness)
    if name == "link_stats":
        u, v = n - 1, n
        hit = Y.has_face(1, u, v) and Y.has_face(2, u, v)
        return str(hit).lower(), f"pair=({u},{v})"
    # snf: recorded, never asserted
    rank, torsion = h1_integral(Y)
    return str(len(torsion)), f"rank={rank};torsion=" + ",".join(map(str, torsion))


def _face_list_str(faces) -> str:
    return ";".join("-".join(map(str, t)) for t in faces)


def _cell_task(args):
    return _run_checks(*args)


# ---------------------------------------------------------------------------
# the sweep driver


def run_sweep(cfg: SweepConfig) -> dict:
    """Run all cells, write the CSV (and optional JSON summary).

    Per-trial check failures cannot abort the sweep: every completed
    row is written.  Returns the summary dict.
    """
    workers = int(os.environ.get(WORKERS_ENV, cfg.workers))
    tasks = []
    for n in cfg.n_grid:
        for p_str in cfg.p_grids[n]:
            for trial in range(cfg.trials):
                tasks.append((n, p_str, trial, cfg.seed, cfg.checks, cfg.record_timing))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_cell = list(pool.map(_cell_task, tasks, chunksize=4))
    else:
        per_cell = [_run_checks(*t) for t in tasks]

    with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(CSV_COLUMNS)
        for rows in per_cell:
            writer.writerows(rows)

    summary = summarize(per_cell)
    if cfg.summary:
        with open(cfg.summary, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return summary


def summarize(per_cell) -> dict:
    """Per-(n, p, check) success frequencies with Wilson 95% intervals."""
    tally: dict = {}
    for rows in per_cell:
        for n, p, _trial, _seed, _f2, check, outcome, _detail, _ms in rows:
            if outcome not in ("true", "false"):
                continue
            key = (n, p, check)
            succ, tot = tally.get(key, (0, 0))
            tally[key] = (succ + (outcome == "true"), tot + 1)
    out = {}
    for (n, p, check), (succ, tot) in sorted(tally.items()):
        lo, hi = wilson_interval(succ, tot)
        out[f"n={n},p={p},check={check}"] = {
            "successes": succ,
            "trials": tot,
            "frequency": succ / tot,
            "wilson_low": lo,
            "wilson_high": hi,
        }
    return out


# ---------------------------------------------------------------------------
# plotting


def plot(csv_path, out_path, checks=None) -> None:
    """Frequency-vs-p curves, one series per (n, check), with vertical
    guides at 2*ln(n)/n and sqrt(3*ln(n)/n).  Natural logarithms."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(csv_path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInput(f"{csv_path} is empty") from None
        for col in ("n", "p", "check", "outcome"):
            if col not in header:
                raise MissingColumn(f"{csv_path} lacks column {col!r}")
        idx = {c: header.index(c) for c in header}
        tally: dict = {}
        for row in reader:
            check = row[idx["check"]]
            if checks and check not in checks:
                continue
            outcome = row[idx["outcome"]]
            if outcome not in ("true", "false"):
                continue
            key = (int(row[idx["n"]]), check, float(row[idx["p"]]))
            succ, tot = tally.get(key, (0, 0))
            tally[key] = (succ + (outcome == "true"), tot + 1)
    if not tally:
        raise EmptyInput(f"{csv_path} has no plottable rows")

    series: dict = {}
    for (n, check, p), (succ, tot) in sorted(tally.items()):
        series.setdefault((n, check), []).append((p, succ / tot))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for (n, check), pts in sorted(series.items()):
        xs, ys = zip(*pts)
        ax.plot(xs, ys, marker="o", label=f"n={n} {check}")
    for n in sorted({n for n, _ in series}):
        ax.axvline(2 * math.log(n) / n, linestyle=":", color="gray")
        ax.axvline(math.sqrt(3 * math.log(n) / n), linestyle="--", color="gray")
    ax.set_xlabel("p")
    ax.set_ylabel("success frequency")
    ax.set_ylim(-0.05, 1.05)
    ax.legend(fontsize=8)
    ax.set_title("guides: 2 ln(n)/n (dotted), sqrt(3 ln(n)/n) (dashed)")
    fig.tight_layout()
    fig.savefig(out_path, format="svg")
    plt.close(fig)


# ---------------------------------------------------------------------------
# exploration: the face-addition process


def h1_vanishing_face_count(n: int, seed: int) -> int:
    """Number of faces at which b1 over GF(2) first hits zero when the
    triangles arrive one at a time in uniform-random order.

    Exploration only; nothing is asserted about the value.
    """
    from .randgen import RngSpec, face_process_order

    order = face_process_order(n, RngSpec(seed=seed, purpose="process"))
    f1 = n * (n - 1) // 2
    target = f1 - (n - 1)  # rank d2 needed for b1 = 0 on a full skeleton
    edge_index = {}
    for i, e in enumerate(
        (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
    ):
        edge_index[e] = i
    pivots: dict = {}
    rank = 0
    for count, (a, b, c) in enumerate(order, start=1):
        r = (
            (1 << edge_index[(a, b)])
            | (1 << edge_index[(a, c)])
            | (1 << edge_index[(b, c)])
        )
        while r:
            low = r & (-r)
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                rank += 1
                break
            r ^= p
        if rank >= target:
            return count
    return len(order)
