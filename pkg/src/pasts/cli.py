"""``pasts`` command line: scalar quantities, CSV grids and the validation suite.

Every value printed here comes straight from a library call; the CLI only
parses, dispatches and formats.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import __version__
from .analytics import UndefinedMomentError, mandel_q, mean_photon, normalization, pnd_pasts_distribution, wigner_pasts
from .decoherence import NoFiniteThreshold, evolved_wigner, threshold_added, threshold_subtracted
from .fock_oracle import DEFAULT_DIM
from .gaussianity import fidelity, fidelity_ratio
from .states import ChannelSpec, StateSpec

EXIT_OK, EXIT_VALIDATION, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3
MAX_GRID_POINTS = 10**7
DEFAULT_GRID = "-3:3:61"

SCALAR_KINDS = ("norm", "mean", "q", "threshold", "threshold-sub", "fidelity", "ratio")
GRID_KINDS = ("wigner", "wigner-evolved", "pnd")


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    min_re: float
    max_re: float
    n_re: int
    min_im: float
    max_im: float
    n_im: int

    def __post_init__(self):
        bounds = (self.min_re, self.max_re, self.min_im, self.max_im)
        if not all(math.isfinite(b) for b in bounds):
            raise InputError("grid bounds must be finite")
        if self.n_re < 1 or self.n_im < 1:
            raise InputError("grid sizes must be positive")
        if self.n_re * self.n_im > MAX_GRID_POINTS:
            raise InputError(f"grid has {self.n_re * self.n_im} points; the limit is {MAX_GRID_POINTS}")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """``min:max:n`` for both axes, or ``min:max:n,min:max:n`` for re then im."""
        parts = text.split(",")
        if len(parts) not in (1, 2):
            raise InputError(f"bad grid {text!r}; expected min:max:n[,min:max:n]")
        axes = []
        for part in parts:
            fields = part.split(":")
            if len(fields) != 3:
                raise InputError(f"bad grid axis {part!r}; expected min:max:n")
            try:
                axes.append((float(fields[0]), float(fields[1]), int(fields[2])))
            except ValueError:
                raise InputError(f"bad grid axis {part!r}") from None
        re_ax, im_ax = axes[0], axes[-1]
        return cls(re_ax[0], re_ax[1], re_ax[2], im_ax[0], im_ax[1], im_ax[2])

    def axis(self, which: str) -> np.ndarray:
        if which == "re":
            return np.linspace(self.min_re, self.max_re, self.n_re)
        return np.linspace(self.min_im, self.max_im, self.n_im)


@dataclass(frozen=True)
class RunConfig:
    state: StateSpec
    channel: ChannelSpec | None = None
    grid: GridSpec = field(default_factory=lambda: GridSpec.parse(DEFAULT_GRID))
    oracle_dim: int = DEFAULT_DIM
    output_path: str | None = None
    quick: bool = False
    n_max: int | None = None

    def __post_init__(self):
        if self.oracle_dim < 2:
            raise InputError("--oracle-dim must be at least 2")
        if self.n_max is not None and self.n_max < 0:
            raise InputError("--n-max must be >= 0")


# --- argument handling --------------------------------------------------------

_CONFIG_KEYS = {
    "lambda": "lam",
    "nc": "n_c",
    "m": "m",
    "N": "N",
    "kt": "kt",
    "grid": "grid",
    "oracle_dim": "oracle_dim",
    "oracle-dim": "oracle_dim",
    "out": "out",
    "quick": "quick",
    "n_max": "n_max",
    "n-max": "n_max",
}

_DEFAULTS = {
    "lam": 0.0,
    "n_c": 0.0,
    "m": 0,
    "N": 0.0,
    "kt": None,
    "grid": DEFAULT_GRID,
    "oracle_dim": DEFAULT_DIM,
    "out": None,
    "quick": False,
    "n_max": None,
}


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    # every default is None so a flag only overrides --config when actually given
    p.add_argument("--lambda", dest="lam", type=float, default=None, help="squeezing parameter (>= 0)")
    p.add_argument("--nc", dest="n_c", type=float, default=None, help="seed thermal mean photon number")
    p.add_argument("--m", type=int, default=None, help="number of added photons")
    p.add_argument("--N", type=float, default=None, help="bath mean photon number")
    p.add_argument("--kt", type=float, default=None, help="dimensionless decay time kappa*t")
    p.add_argument("--grid", default=None, help=f"min:max:n[,min:max:n] (default {DEFAULT_GRID})")
    p.add_argument("--oracle-dim", dest="oracle_dim", type=int, default=None, help="Fock truncation for oracle checks")
    p.add_argument("--n-max", dest="n_max", type=int, default=None, help="fixed photon-number cutoff for pnd")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--config", default=None, help="JSON file with any of the above; flags take precedence")
    p.add_argument("--quick", action="store_true", default=None, help="validate: skip master-equation checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pasts", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _common_flags()
    helps = {
        "norm": "normalization of the photon-added state",
        "mean": "mean photon number",
        "q": "Mandel Q parameter",
        "pnd": "photon-number distribution as CSV",
        "wigner": "Wigner function on a grid as CSV",
        "wigner-evolved": "Wigner function after the thermal channel as CSV",
        "threshold": "decay time ending origin negativity (photon added)",
        "threshold-sub": "the same for the photon-subtracted state",
        "fidelity": "overlap fidelity with the seed state",
        "ratio": "added/subtracted fidelity ratio",
        "validate": "run the analytic-vs-oracle check suite",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def _load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise InputError(f"config {path} must hold a JSON object")
    out = {}
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            raise InputError(f"unknown config key {key!r}")
        out[_CONFIG_KEYS[key]] = value
    return out


def resolve_options(args: argparse.Namespace) -> dict:
    """Defaults, then the config file, then explicit flags."""
    opts = dict(_DEFAULTS)
    if args.config:
        opts.update(_load_config_file(args.config))
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


def make_config(opts: dict, need_channel: bool = False) -> RunConfig:
    m = opts["m"]
    if isinstance(m, float) and m.is_integer():
        m = int(m)
    state = StateSpec(float(opts["lam"]), float(opts["n_c"]), m)
    channel = None
    if need_channel:
        if opts["kt"] is None:
            raise InputError("--kt is required")
        channel = ChannelSpec(float(opts["N"]), float(opts["kt"]))
    grid = opts["grid"]
    if isinstance(grid, str):
        grid = GridSpec.parse(grid)
    elif isinstance(grid, dict):
        grid = GridSpec(**grid)
    else:
        raise InputError("grid must be a string or an object")
    return RunConfig(state, channel, grid, int(opts["oracle_dim"]), opts["out"], bool(opts["quick"]), opts["n_max"])


# --- output -----------------------------------------------------------------


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _meta_line(kind: str, cfg: RunConfig) -> str:
    meta = {"kind": kind, "version": __version__, "state": asdict(cfg.state)}
    if cfg.channel is not None:
        meta["channel"] = asdict(cfg.channel)
    if kind != "pnd":
        meta["grid"] = asdict(cfg.grid)
    elif cfg.n_max is not None:
        meta["n_max"] = cfg.n_max
    return "# meta: " + json.dumps(meta, sort_keys=True) + "\n"


def evaluate_grid(func: Callable[[np.ndarray], np.ndarray], grid: GridSpec, workers: int | None = None) -> np.ndarray:
    """``func`` on every grid point; rows are fixed ``re``, columns run over ``im``.

    Rows are farmed out to a thread pool; ``map`` keeps them in order.
    """
    re_ax, im_ax = grid.axis("re"), grid.axis("im")
    workers = workers or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda x: np.asarray(func(x + 1j * im_ax), dtype=float), re_ax))
    return np.vstack(rows)


def wigner_csv(kind: str, cfg: RunConfig) -> str:
    if kind == "wigner":
        func = lambda a: wigner_pasts(a, cfg.state)  # noqa: E731
    else:
        func = lambda a: evolved_wigner(a, cfg.state, cfg.channel)  # noqa: E731
    values = evaluate_grid(func, cfg.grid)
    re_ax, im_ax = cfg.grid.axis("re"), cfg.grid.axis("im")
    lines = [_meta_line(kind, cfg), "re,im,w\n"]
    for i, x in enumerate(re_ax):
        sx = fmt(x)
        lines.extend(f"{sx},{fmt(y)},{fmt(w)}\n" for y, w in zip(im_ax, values[i]))
    return "".join(lines)


def pnd_csv(cfg: RunConfig) -> str:
    p = pnd_pasts_distribution(cfg.state, cfg.n_max)
    lines = [_meta_line("pnd", cfg), "n,p\n"]
    lines.extend(f"{n},{fmt(v)}\n" for n, v in enumerate(p))
    return "".join(lines)


def scalar_record(kind: str, opts: dict) -> dict:
    """JSON-ready ``{kind, inputs, value}`` record for a scalar command."""
    message = None
    if kind == "threshold":
        N = float(opts["N"])
        inputs = {"N": N}
        value = threshold_added(N)
    elif kind == "threshold-sub":
        N, lam, n_c = float(opts["N"]), float(opts["lam"]), float(opts["n_c"])
        inputs = {"N": N, "lambda": lam, "nc": n_c}
        try:
            value = threshold_subtracted(N, n_c, lam)
        except NoFiniteThreshold as exc:
            value, message = None, str(exc)
    else:
        cfg = make_config(opts)
        s = cfg.state
        inputs = {"lambda": s.lam, "nc": s.n_c, "m": s.m}
        func = {
            "norm": normalization,
            "mean": mean_photon,
            "q": mandel_q,
            "fidelity": fidelity,
            "ratio": fidelity_ratio,
        }[kind]
        value = func(s)
    record = {"kind": kind, "inputs": inputs, "value": value}
    if message is not None:
        record["message"] = message
    return record


def run_validate(opts: dict) -> int:
    from .validation import ValidationConfig, run_suite

    cfg = make_config(opts)
    vcfg = ValidationConfig(state=cfg.state, oracle_dim=cfg.oracle_dim, quick=cfg.quick)
    results = run_suite(vcfg, echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VALIDATION if failed else EXIT_OK


def _glue_grid(argv: list[str]) -> list[str]:
    # "--grid -3:3:61" would otherwise read the negative bound as a flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--grid":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--grid={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_grid(sys.argv[1:] if argv is None else list(argv)))
    kind = args.command
    try:
        opts = resolve_options(args)
        if kind == "validate":
            return run_validate(opts)
        if kind in SCALAR_KINDS:
            _emit(json.dumps(scalar_record(kind, opts)) + "\n", opts["out"])
            return EXIT_OK
        cfg = make_config(opts, need_channel=(kind == "wigner-evolved"))
        text = pnd_csv(cfg) if kind == "pnd" else wigner_csv(kind, cfg)
        _emit(text, cfg.output_path)
        return EXIT_OK
    except OSError as exc:
        print(f"pasts: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, TypeError, UndefinedMomentError) as exc:
        print(f"pasts: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
