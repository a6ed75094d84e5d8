"""Command-line front end: single-point reports, parameter sweeps, sudden-
change queries, and the oracle verification suites.

Exit statuses: 0 success, 1 usage error, 2 unphysical input, 3 verification
failure.

The closed-form measures depend only on the magnitudes |c_i|, so `point`,
`tsc`, and `sweep` accept any triple with |c_i| <= 1 (the paper's figure
parameter sets are often not physical density matrices).  Whether the
literal signed triple is a physical state is reported in every output, and
any oracle computation (which needs the actual state) rejects unphysical
triples with exit status 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib.metadata import version as _pkg_version

import numpy as np

from . import verify
from .correlations import chsh_bmax, geometric_discord, min_AI, min_AII, min_variational
from .dynamics import classify, sum_min, sum_regime
from .states import UnphysicalStateError, XStateParams, require_physical
from .unruh import UnruhPoint, closed_form_AI, closed_form_AII, oracle_bloch, reduce_AI, reduce_AII

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNPHYSICAL = 2
EXIT_VERIFY = 3

CSV_HEADER = "c1,c2,c3,w,T,side,N,D,Bmax,regime,t_sc,method,oracle_delta"
ALL_SIDES = ("AI", "AII", "SUM")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fmt(v) -> str:
    """12-significant-digit rendering; empty string for None."""
    if v is None:
        return ""
    return f"{v:.12g}"


def _parse_triple(text: str) -> XStateParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--c expects three comma-separated values, got {text!r}")
    try:
        c = [float(s) for s in parts]
    except ValueError as e:
        raise UsageError(str(e))
    try:
        return XStateParams(*c)
    except ValueError as e:
        raise UnphysicalStateError(str(e))


def _parse_range(text: str) -> list[float]:
    """'v' | 'v1,v2,...' | 'start:stop:count[:log|lin]'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise UsageError(f"range spec must be start:stop:count[:log|lin], got {text!r}")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as e:
            raise UsageError(str(e))
        scale = parts[3] if len(parts) == 4 else "lin"
        if count < 1:
            raise UsageError("range count must be >= 1")
        if count == 1:
            return [start]
        if scale == "log":
            if start <= 0 or stop <= 0:
                raise UsageError("log range endpoints must be positive")
            return list(np.geomspace(start, stop, count))
        if scale == "lin":
            return list(np.linspace(start, stop, count))
        raise UsageError(f"unknown range scale {scale!r}")
    try:
        return [float(s) for s in text.split(",")]
    except ValueError as e:
        raise UsageError(str(e))


def _load_config(path: str | None) -> dict:
    """key=value config file, '#' comments; flags take precedence."""
    if path is None:
        return {}
    cfg = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {raw.rstrip()}")
            key, val = (s.strip() for s in line.split("=", 1))
            cfg[key] = val
    return cfg


def _resolve(flag_value, config: dict, key: str, default):
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


# ----------------------------------------------------------------------
# point

def _point_report(p: XStateParams, u: UnruhPoint, side: str, oracle: bool) -> dict:
    label = classify(p, side)
    t_sc = None
    if label.case == "ii_sudden":
        t_sc = label.t_sc * u.w  # classify computes at w = 1; T_sc scales with w
    b = closed_form_AI(p, u) if side == "AI" else closed_form_AII(p, u)
    n = min_AI(p, u) if side == "AI" else min_AII(p, u)
    oracle_delta = None
    method = "closed_form"
    if oracle:
        require_physical(p)
        cf = b
        orc = oracle_bloch(p, u, side)
        channel_dev = max(
            float(np.max(np.abs(cf.x - orc.x))),
            float(np.max(np.abs(cf.y - orc.y))),
            float(np.max(np.abs(cf.T - orc.T))),
        )
        rho = reduce_AI(p, u) if side == "AI" else reduce_AII(p, u)
        var_dev = abs(n - min_variational(rho))
        oracle_delta = max(channel_dev, var_dev)
        method = "closed_form+oracle"
    return {
        "c1": p.c1, "c2": p.c2, "c3": p.c3,
        "w": u.w, "T_unruh": u.T_unruh, "side": side,
        "N": n, "D": geometric_discord(b), "Bmax": chsh_bmax(b),
        "regime": label.case, "t_sc": t_sc,
        "state_physical": p.is_physical,
        "method": method, "oracle_delta": oracle_delta,
    }


def cmd_point(args) -> int:
    cfg = _load_config(args.config)
    p = _parse_triple(args.c)
    w = float(_resolve(args.w, cfg, "w", 1.0))
    temp = float(_resolve(args.T, cfg, "T", 1.0))
    side = _resolve(args.side, cfg, "side", "AI")
    if side not in ("AI", "AII"):
        raise UsageError(f"--side must be AI or AII, got {side!r}")
    report = _point_report(p, UnruhPoint(w=w, T_unruh=temp), side, args.oracle)
    print(json.dumps(report, indent=2))
    return EXIT_OK


# ----------------------------------------------------------------------
# tsc

def cmd_tsc(args) -> int:
    cfg = _load_config(args.config)
    p = _parse_triple(args.c)
    w = float(_resolve(args.w, cfg, "w", 1.0))
    side = _resolve(args.side, cfg, "side", "AI")
    if side not in ("AI", "AII"):
        raise UsageError(f"--side must be AI or AII, got {side!r}")
    label = classify(p, side)
    if label.case == "ii_sudden":
        print(f"regime ii_sudden: T_sc = {_fmt(label.t_sc * w)}")
    elif label.case == "ii_smooth" and label.boundary:
        print("regime ii_smooth (degenerate boundary, T_sc diverges)")
    else:
        print(f"regime {label.case.replace('_', ' ')}, no sudden change")
    return EXIT_OK


# ----------------------------------------------------------------------
# sweep

# Presets bake in the parameter sets of the source figures.  T grids are
# log-spaced over [0.01, 100] (w = 1) unless listed explicitly.
_DEFAULT_T = "0.01:100:120:log"
PRESETS = {
    "fig1-red": {"c": "1,0.9,0.5", "sides": "AI"},
    "fig1-blue": {"c": "0.9,0.85,1", "sides": "AI"},
    "fig3": {"c1": "0.5:1:11", "c2": "0.5:1:11", "c3": "0.5", "sides": "AI",
             "T": "0.1,1,20"},
    "fig4": {"c1": "0.8", "c2": "-0.8", "c3": "0.8", "sides": "AI"},
    "fig5": {"c1": "0.8", "c2": "-0.8", "c3": "0.8", "sides": "AI"},
    "fig6-red": {"c": "1,0.9,0.5", "sides": "AII"},
    "fig6-blue": {"c": "0.9,0.55,1", "sides": "AII"},
    "fig8-red": {"c": "1,0.9,0.5", "sides": "SUM"},
    "fig8-blue": {"c": "0.9,0.85,1", "sides": "SUM"},
    "fig8-yellow": {"c": "0.9,0.5,1", "sides": "SUM"},
}


def _sweep_row(task) -> tuple:
    side, temp, c1, c2, c3, w, oracle = task
    p = XStateParams(c1, c2, c3)
    u = UnruhPoint(w=w, T_unruh=temp)
    oracle_delta = None
    method = "closed_form"
    if side == "SUM":
        n, reg = sum_min(p, u)
        d = bmax = None
        regime = reg.case
        t_sc = reg.t_sc
    else:
        b = closed_form_AI(p, u) if side == "AI" else closed_form_AII(p, u)
        n = min_AI(p, u) if side == "AI" else min_AII(p, u)
        d = geometric_discord(b)
        bmax = chsh_bmax(b)
        label = classify(p, side)
        regime = label.case
        t_sc = label.t_sc * w if label.t_sc is not None else None
        if oracle and p.is_physical:
            orc = oracle_bloch(p, u, side)
            channel_dev = max(
                float(np.max(np.abs(b.x - orc.x))),
                float(np.max(np.abs(b.y - orc.y))),
                float(np.max(np.abs(b.T - orc.T))),
            )
            rho = reduce_AI(p, u) if side == "AI" else reduce_AII(p, u)
            var_dev = abs(n - min_variational(rho))
            oracle_delta = max(channel_dev, var_dev)
            method = "closed_form+oracle"
    return (c1, c2, c3, w, temp, side, n, d, bmax, regime, t_sc, method, oracle_delta)


def _render_row(row) -> str:
    c1, c2, c3, w, temp, side, n, d, bmax, regime, t_sc, method, delta = row
    fields = [_fmt(c1), _fmt(c2), _fmt(c3), _fmt(w), _fmt(temp), side,
              _fmt(n), _fmt(d), _fmt(bmax), regime, _fmt(t_sc), method, _fmt(delta)]
    return ",".join(fields)


def cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    preset = dict(PRESETS[args.preset]) if args.preset else {}
    if args.preset and args.preset not in PRESETS:
        raise UsageError(f"unknown preset {args.preset!r}")

    def pick(flag, key, default):
        if flag is not None:
            return flag
        if key in preset:
            return preset[key]
        if key in cfg:
            return cfg[key]
        return default

    c_spec = pick(args.c, "c", None)
    if c_spec is not None:
        p0 = _parse_triple(c_spec)
        c1s, c2s, c3s = [p0.c1], [p0.c2], [p0.c3]
    else:
        c1_spec = pick(args.c1, "c1", None)
        c2_spec = pick(args.c2, "c2", None)
        c3_spec = pick(args.c3, "c3", None)
        if None in (c1_spec, c2_spec, c3_spec):
            raise UsageError("give --c or all of --c1/--c2/--c3 (or a preset)")
        c1s, c2s, c3s = (_parse_range(s) for s in (c1_spec, c2_spec, c3_spec))
    for name, vals in (("c1", c1s), ("c2", c2s), ("c3", c3s)):
        for v in vals:
            if abs(v) > 1 + 1e-12:
                raise UnphysicalStateError(f"|{name}| must be <= 1, got {v}")

    w = float(pick(args.w, "w", 1.0))
    temps = _parse_range(str(pick(args.T, "T", _DEFAULT_T)))
    sides = str(pick(args.sides, "sides", "AI")).split(",")
    for s in sides:
        if s not in ALL_SIDES:
            raise UsageError(f"unknown side {s!r}")
    workers = int(pick(args.workers, "workers", 1))
    oracle = bool(args.oracle)

    tasks = sorted(
        (side, temp, c1, c2, c3, w, oracle)
        for side in sides for temp in temps
        for c1 in c1s for c2 in c2s for c3 in c3s
    )
    if not tasks:
        raise UsageError("empty sweep")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, tasks))
    else:
        rows = [_sweep_row(t) for t in tasks]
    rows.sort(key=lambda r: (r[5], r[4], r[0], r[1], r[2]))

    lines = [
        f"# unruhmin sweep v{_pkg_version('unruhmin')}",
        f"# preset={args.preset or ''}",
        f"# w={_fmt(w)} sides={','.join(sides)} oracle={oracle}",
        f"# T_points={len(temps)} c_points={len(c1s) * len(c2s) * len(c3s)}",
        CSV_HEADER,
    ]
    lines.extend(_render_row(r) for r in rows)
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


# ----------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    if args.draws < 1:
        raise UsageError(f"--draws must be >= 1, got {args.draws}")
    report = verify.run_all(seed=args.seed, draws=args.draws)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["passed"] else EXIT_VERIFY


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unruhmin",
                     description="MIN, geometric discord, and CHSH for two-qubit "
                                 "X-states through the fermionic Unruh channel.")
    sub = parser.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("point", help="single-point JSON report")
    pt.add_argument("--c", required=True, help="c1,c2,c3")
    pt.add_argument("--w", type=float, default=None)
    pt.add_argument("--T", type=float, default=None, help="Unruh temperature")
    pt.add_argument("--side", default=None, choices=("AI", "AII"))
    pt.add_argument("--oracle", action="store_true")
    pt.add_argument("--config", default=None)
    pt.set_defaults(func=cmd_point)

    ts = sub.add_parser("tsc", help="regime and sudden-change temperature")
    ts.add_argument("--c", required=True, help="c1,c2,c3")
    ts.add_argument("--w", type=float, default=None)
    ts.add_argument("--side", default=None, choices=("AI", "AII"))
    ts.add_argument("--config", default=None)
    ts.set_defaults(func=cmd_tsc)

    sw = sub.add_parser("sweep", help="CSV parameter sweep")
    sw.add_argument("--preset", default=None, choices=sorted(PRESETS))
    sw.add_argument("--c", default=None, help="fixed c1,c2,c3")
    sw.add_argument("--c1", default=None, help="value or start:stop:count")
    sw.add_argument("--c2", default=None)
    sw.add_argument("--c3", default=None)
    sw.add_argument("--w", type=float, default=None)
    sw.add_argument("--T", default=None, help="start:stop:count[:log|lin] or list")
    sw.add_argument("--sides", default=None, help="comma subset of AI,AII,SUM")
    sw.add_argument("--oracle", action="store_true")
    sw.add_argument("--workers", type=int, default=None)
    sw.add_argument("--config", default=None)
    sw.add_argument("--out", required=True, help="output path, '-' for stdout")
    sw.set_defaults(func=cmd_sweep)

    vf = sub.add_parser("verify", help="run the oracle suites")
    vf.add_argument("--seed", type=int, default=12345)
    vf.add_argument("--draws", type=int, default=200)
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"unruhmin: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except UnphysicalStateError as e:
        print(f"unruhmin: unphysical input: {e}", file=sys.stderr)
        return EXIT_UNPHYSICAL


if __name__ == "__main__":
    sys.exit(main())
