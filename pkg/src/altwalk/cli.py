"""
Command-line front end.

Subcommands ``evolve``, ``sweep``, ``scan``, ``disorder`` and ``coherence``
write their table (CSV by default, JSON with ``--format json``) plus a
``manifest.json`` into ``--out-dir``. ``--from-manifest`` re-runs a recorded
invocation and reproduces its data files byte for byte.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from altwalk import __version__
from altwalk.disorder import DisorderKind, DisorderSpec, DisorderTarget
from altwalk.evolution import WalkParams
from altwalk.experiments import (
    SweepGrid,
    angle_grid,
    coherence_series,
    disorder_ensemble,
    line_scan,
    run_series,
    sweep,
)
from altwalk.lattice_state import COIN_ONE, COIN_PLUS, COIN_PLUS_Y, COIN_ZERO, CoinState
from altwalk.observables import DEFAULT_DIM_CAP

__all__ = ["parse_angle", "parse_coin", "format_float", "main"]

OUT_DIR_ENV = "ALTWALK_OUT_DIR"

ANGLE_GRAMMAR = (
    "an angle is decimal radians (e.g. 2.3876), '0', or a multiple of pi such as "
    "'pi', '-pi/4', '19pi/25', '19*pi/25', '2.5pi'"
)

_PI_RE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi(?:\s*/\s*(\d+))?$", re.IGNORECASE)

_COINS = {"zero": COIN_ZERO, "one": COIN_ONE, "plus": COIN_PLUS, "plus-y": COIN_PLUS_Y}

_DEFAULT_STEPS = {"evolve": 100, "sweep": 40, "scan": 100, "disorder": 100, "coherence": 40}

_TABLE_COLUMNS = {
    "series": ("t", "p0", "p_bar"),
    "grid": ("phi_x", "phi_y", "p_bar"),
    "coherence": ("t", "c_norm"),
}


def parse_angle(text: str) -> float:
    """Parse decimal radians or a rational multiple of pi."""
    s = text.strip()
    m = _PI_RE.match(s)
    if m:
        sign, num, den = m.groups()
        value = float(num) * math.pi if num else math.pi
        if den is not None:
            if int(den) == 0:
                raise ValueError(f"cannot parse angle {text!r}: zero denominator")
            value /= int(den)
        return -value if sign == "-" else value
    try:
        value = float(s)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}; {ANGLE_GRAMMAR}") from None
    if not math.isfinite(value):
        raise ValueError(f"cannot parse angle {text!r}; {ANGLE_GRAMMAR}")
    return value


def parse_coin(text: str) -> CoinState:
    """Named coin (zero, one, plus, plus-y) or ``a0,a1`` in Python complex syntax."""
    key = text.strip().lower()
    if key in _COINS:
        return _COINS[key]
    parts = key.split(",")
    if len(parts) != 2:
        raise ValueError(f"coin must be one of {sorted(_COINS)} or 'a0,a1', got {text!r}")
    try:
        a0, a1 = (complex(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse coin amplitudes {text!r}") from None
    return CoinState(a0, a1).validate()


def format_float(v: float) -> str:
    return "nan" if math.isnan(v) else f"{v:.17g}"


def _write_table(out_dir: Path, name: str, rows: list[tuple], fmt: str) -> Path:
    columns = _TABLE_COLUMNS[name]
    if fmt == "csv":
        path = out_dir / f"{name}.csv"
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(str(v) if isinstance(v, int) else format_float(v) for v in row))
        path.write_text("\n".join(lines) + "\n")
    else:
        path = out_dir / f"{name}.json"
        records = [
            {c: (None if isinstance(v, float) and math.isnan(v) else v) for c, v in zip(columns, row)}
            for row in rows
        ]
        path.write_text(json.dumps({"columns": list(columns), "rows": records}, indent=1) + "\n")
    return path


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--steps", type=int, help="number of walk steps (horizon)")
    common.add_argument("--phi-x", default="0", help="phase-gate angle before the x move")
    common.add_argument("--phi-y", default="0", help="phase-gate angle before the y move")
    common.add_argument("--coin", default="plus-y", help="zero | one | plus | plus-y | a0,a1")
    common.add_argument("--step-base", type=int, choices=(0, 1), default=1)
    common.add_argument("--disorder", choices=[k.value for k in DisorderKind])
    common.add_argument("--epsilon", type=float)
    common.add_argument("--target", choices=[k.value for k in DisorderTarget])
    common.add_argument("--trials", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--grid-n", type=int)
    common.add_argument("--dim-cap", type=int)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out-dir", default=None)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(prog="altwalk", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--from-manifest", metavar="PATH", help="re-run a recorded manifest.json")
    parser.add_argument(
        "--manifest-out-dir", metavar="DIR", help="output directory for --from-manifest (default: beside it)"
    )
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("evolve", parents=[common], help="P0 and running P-bar series for one walk")
    sub.add_parser("sweep", parents=[common], help="P-bar over a phi_x x phi_y grid")
    sub.add_parser("scan", parents=[common], help="P-bar along phi_x with phi_y = 0")
    sub.add_parser("disorder", parents=[common], help="trial-averaged series with phase disorder")
    sub.add_parser("coherence", parents=[common], help="coherence-norm series")
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    cmd = args.command
    disordered = args.disorder not in (None, "none")
    if args.trials is not None and cmd != "disorder":
        parser.error(f"--trials is only valid for the 'disorder' subcommand, not {cmd!r}")
    if cmd == "disorder" and not disordered:
        parser.error("'disorder' needs --disorder time|position|both")
    if not disordered:
        for flag in ("epsilon", "seed", "target"):
            if getattr(args, flag) is not None:
                parser.error(f"--{flag} requires --disorder time|position|both")
    if args.grid_n is not None and cmd not in ("sweep", "scan"):
        parser.error("--grid-n is only valid for 'sweep' and 'scan'")
    if args.dim_cap is not None and cmd != "coherence":
        parser.error("--dim-cap is only valid for 'coherence'")
    if cmd in ("sweep", "scan") and (args.phi_x != "0" or args.phi_y != "0"):
        parser.error(f"'{cmd}' sets the angles itself; drop --phi-x/--phi-y")
    if args.steps is not None and args.steps < 0:
        parser.error("--steps must be >= 0")
    if args.trials is not None and args.trials < 1:
        parser.error("--trials must be >= 1")
    if args.grid_n is not None and args.grid_n < 1:
        parser.error("--grid-n must be >= 1")


def _resolve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> dict:
    """Normalize parsed flags into the manifest's parameter block."""
    cmd = args.command
    try:
        phi_x = parse_angle(args.phi_x)
        phi_y = parse_angle(args.phi_y)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        parse_coin(args.coin)
    except ValueError as exc:
        parser.error(str(exc))
    steps = _DEFAULT_STEPS[cmd] if args.steps is None else args.steps
    disordered = args.disorder not in (None, "none")
    params = {
        "steps": steps,
        "phi_x": args.phi_x,
        "phi_x_radians": phi_x,
        "phi_y": args.phi_y,
        "phi_y_radians": phi_y,
        "coin": args.coin,
        "step_index_base": args.step_base,
        "disorder": {
            "kind": args.disorder or "none",
            "epsilon": (0.01 if args.epsilon is None else args.epsilon) if disordered else 0.0,
            "seed": (0 if args.seed is None else args.seed) if disordered else 0,
            "target": args.target or DisorderTarget.PHI_X_ONLY.value,
        },
        "format": args.format,
        "workers": args.workers,
    }
    if cmd in ("sweep", "scan"):
        params["grid_n"] = 50 if args.grid_n is None else args.grid_n
    if cmd == "disorder":
        params["n_trials"] = 100 if args.trials is None else args.trials
    if cmd == "coherence":
        params["dim_cap"] = DEFAULT_DIM_CAP if args.dim_cap is None else args.dim_cap
    return params


def _walk_params(p: dict) -> WalkParams:
    d = p["disorder"]
    return WalkParams(
        steps=p["steps"],
        phi_x=parse_angle(p["phi_x"]),
        phi_y=parse_angle(p["phi_y"]),
        initial_coin=parse_coin(p["coin"]),
        step_index_base=p["step_index_base"],
        disorder=DisorderSpec(d["kind"], d["epsilon"], d["seed"], d["target"]),
    )


def _execute(cmd: str, p: dict, out_dir: Path) -> tuple[list[Path], str]:
    """Run one command; returns written files and a one-line summary."""
    fmt = p["format"]
    wp = _walk_params(p)
    if cmd == "evolve":
        recs = run_series(wp)
        rows = [(r.t, r.p0, r.p_bar) for r in recs]
        summary = f"P0({recs[-1].t}) = {format_float(recs[-1].p0)}, P-bar = {format_float(recs[-1].p_bar)}"
        return [_write_table(out_dir, "series", rows, fmt)], summary
    if cmd == "sweep":
        angles = angle_grid(p["grid_n"])
        values = sweep(SweepGrid(angles, angles, wp.steps), wp, p["workers"])
        rows = [(px, py, float(values[i, j])) for i, px in enumerate(angles) for j, py in enumerate(angles)]
        return [_write_table(out_dir, "grid", rows, fmt)], f"max P-bar = {format_float(float(values.max()))}"
    if cmd == "scan":
        scan = line_scan(angle_grid(p["grid_n"]), wp.steps, wp, p["workers"])
        rows = [(px, 0.0, v) for px, v in scan.rows()]
        k = scan.argmax_index
        summary = (
            f"argmax phi_x = {format_float(scan.argmax_phi)} "
            f"(= {2 * k}pi/{p['grid_n']}), P-bar = {format_float(scan.max_value)}"
        )
        return [_write_table(out_dir, "grid", rows, fmt)], summary
    if cmd == "disorder":
        d = p["disorder"]
        ens = disorder_ensemble(
            wp.replace(disorder=DisorderSpec()),
            d["kind"],
            d["epsilon"],
            p["n_trials"],
            d["seed"],
            d["target"],
            p["workers"],
        )
        rows = [(r.t, r.p0, r.p_bar) for r in ens.records()]
        return [_write_table(out_dir, "series", rows, fmt)], f"mean P-bar({wp.steps}) = {format_float(rows[-1][2])}"
    if cmd == "coherence":
        series = coherence_series(wp, wp.steps, p["dim_cap"])
        return [_write_table(out_dir, "coherence", series, fmt)], f"C({wp.steps}) = {format_float(series[-1][1])}"
    raise ValueError(f"unknown command {cmd!r}")


def _run(cmd: str, params: dict, out_dir: Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    try:
        files, summary = _execute(cmd, params, out_dir)
    except ValueError as exc:
        print(f"altwalk {cmd}: error: {exc}", file=sys.stderr)
        return 1
    manifest = {
        "command": cmd,
        "tool_version": __version__,
        "parameters": params,
        "outputs": [f.name for f in files],
        "duration_seconds": time.perf_counter() - start,
    }
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(summary)
    for f in files:
        print(f"wrote {f}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.from_manifest:
        if args.command is not None:
            parser.error("--from-manifest cannot be combined with a subcommand")
        try:
            manifest = json.loads(Path(args.from_manifest).read_text())
            cmd, params = manifest["command"], manifest["parameters"]
        except (OSError, ValueError, KeyError) as exc:
            parser.error(f"cannot read manifest {args.from_manifest!r}: {exc}")
        out_dir = Path(args.manifest_out_dir or Path(args.from_manifest).parent)
        return _run(cmd, params, out_dir)
    if args.command is None:
        parser.error("a subcommand is required (evolve, sweep, scan, disorder, coherence)")
    _validate(parser, args)
    params = _resolve(parser, args)
    out_dir = Path(args.out_dir or os.environ.get(OUT_DIR_ENV) or ".")
    return _run(args.command, params, out_dir)


if __name__ == "__main__":
    sys.exit(main())
