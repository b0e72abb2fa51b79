"""Command-line interface.

Subcommands: fourier, conv-check, power-exact, spread-prob, approx-eig,
projection-law, small-ball, trace-moment, weingarten, dims, verify-all.

Each run writes one JSON object (schema: experiment, params,
estimate{mean_re, mean_im, stderr}, pass, bound, n_samples, seed, workers,
elapsed_ms) to --out or stdout.  Exit codes: 0 on PASS or informational,
2 on FAIL, 1 on usage errors.  A flat "key = value" config file can preset
any flag; explicit flags win.  --sweep "name=v1,v2,..." repeats the run over
one numeric parameter and emits CSV instead.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time
from dataclasses import dataclass, fields
from typing import Optional

from .branching import LRCache, power_word_fourier_exact
from .errors import HypothesisError, ParseError, WordMeasuresError
from .experiments import (
    Report,
    mc_approx_eigenvectors,
    mc_convolution_identity,
    mc_fourier,
    mc_projection_law,
    mc_small_ball,
    mc_spread_failure,
    mc_trace_moment,
    mc_weingarten_crosscheck,
)
from .partitions import DominantWeight, Partition, dim_hook_content, dim_weyl
from .weingarten import MonomialSpec
from .words import parse_word

__all__ = ["ExperimentConfig", "run_cli", "main"]

_INT_KEYS = {"n", "ell", "M", "m", "samples", "seed", "workers"}
_FLOAT_KEYS = {"beta", "gamma", "eps", "delta"}
_STR_KEYS = {"word", "word2", "lambda", "metric", "out", "cache", "monomial", "sweep"}
_BOOL_KEYS = {"force"}


@dataclass
class ExperimentConfig:
    """All experiment knobs, merged from config file and flags."""

    n: Optional[int] = None
    word: Optional[str] = None
    word2: Optional[str] = None
    lam: Optional[str] = None
    ell: Optional[int] = None
    beta: Optional[float] = None
    gamma: Optional[float] = None
    eps: Optional[float] = None
    delta: Optional[float] = None
    M: Optional[int] = None
    m: Optional[int] = None
    samples: int = 10_000
    seed: int = 0
    workers: int = 1
    metric: str = "geodesic"
    out: Optional[str] = None
    cache: Optional[str] = None
    force: bool = False
    sweep: Optional[str] = None
    monomial: Optional[str] = None

    def require(self, *names: str):
        for name in names:
            attr = "lam" if name == "lambda" else name
            if getattr(self, attr) is None:
                raise UsageError(f"missing required option --{name}")


class UsageError(Exception):
    pass


def _parse_config_file(path: str) -> dict:
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key in _INT_KEYS:
                values[key] = int(val)
            elif key in _FLOAT_KEYS:
                values[key] = float(val)
            elif key in _BOOL_KEYS:
                values[key] = val.lower() in ("1", "true", "yes", "on")
            elif key in _STR_KEYS:
                values[key] = val
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordmeasures",
        description="Exact kernels and Monte Carlo experiments for word "
        "measures on unitary groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = [
        ("fourier", "empirical character mean over random word values"),
        ("conv-check", "Fourier coefficient of a concatenation vs. the product rule"),
        ("power-exact", "exact Fourier coefficient of the power word x^ell"),
        ("spread-prob", "probability that a word value fails to be spread"),
        ("approx-eig", "probability of simultaneous approximate eigenvectors"),
        ("projection-law", "projection-norm law of a uniform unit vector"),
        ("small-ball", "word-measure mass of a small ball at the identity"),
        ("trace-moment", "moments of |tr w| against the factorial bound"),
        ("weingarten", "matrix-entry monomial mean vs. the exact Weingarten sum"),
        ("dims", "exact dimension of an irreducible representation"),
        ("verify-all", "run the aggregated property suite"),
    ]
    for name, helptext in commands:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--word", type=str, default=None)
        p.add_argument("--word2", type=str, default=None)
        p.add_argument("--lambda", dest="lam", type=str, default=None)
        p.add_argument("--ell", type=int, default=None)
        p.add_argument("--beta", type=float, default=None)
        p.add_argument("--gamma", type=float, default=None)
        p.add_argument("--eps", type=float, default=None)
        p.add_argument("--delta", type=float, default=None)
        p.add_argument("--M", type=int, default=None)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--metric", type=str, default=None, choices=["hs", "geodesic"])
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--cache", type=str, default=None)
        p.add_argument("--config", type=str, default=None)
        p.add_argument("--force", action="store_true", default=None)
        p.add_argument("--sweep", type=str, default=None)
        p.add_argument("--monomial", type=str, default=None)
    return parser


def _merge_config(args: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig()
    file_values = _parse_config_file(args.config) if args.config else {}
    for key, val in file_values.items():
        setattr(cfg, "lam" if key == "lambda" else key, val)
    for f in fields(ExperimentConfig):
        flag_val = getattr(args, f.name, None)
        if flag_val is not None:
            setattr(cfg, f.name, flag_val)
    return cfg


def _parse_weight(cfg: ExperimentConfig) -> DominantWeight:
    cfg.require("lambda", "n")
    text = cfg.lam.strip()
    if "@n=" in text:
        w = DominantWeight.parse(text)
        if w.n != cfg.n:
            raise UsageError(f"--lambda has rank {w.n} but --n is {cfg.n}")
        return w
    if not (text.startswith("[") and text.endswith("]")):
        raise UsageError(f"--lambda must be '[...]' or '[...]@n=k', got {text!r}")
    body = text[1:-1].strip()
    try:
        vals = [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise UsageError(f"bad --lambda {text!r}") from exc
    if len(vals) == cfg.n:
        return DominantWeight(cfg.n, vals)
    if all(v >= 0 for v in vals):
        return Partition(vals).to_weight(cfg.n)
    raise UsageError(
        f"--lambda with negative entries must have exactly n={cfg.n} entries"
    )


def _parse_monomial(cfg: ExperimentConfig) -> MonomialSpec:
    cfg.require("m")
    if cfg.monomial is None:
        ones = tuple([1] * cfg.m)
        return MonomialSpec(m=cfg.m, F1=ones, F2=ones, H1=ones, H2=ones)
    groups = cfg.monomial.split(";")
    if len(groups) != 4:
        raise UsageError("--monomial must be 'F1;F2;H1;H2' with comma lists")
    maps = []
    for grp in groups:
        maps.append(tuple(int(x) for x in grp.split(",")))
    if any(len(t) != cfg.m for t in maps):
        raise UsageError(f"--monomial maps must all have length m={cfg.m}")
    return MonomialSpec(m=cfg.m, F1=maps[0], F2=maps[1], H1=maps[2], H2=maps[3])


def _exact_result(experiment: str, params: dict, value, elapsed_ms: float, cfg) -> Report:
    return Report(
        experiment=experiment,
        params=params,
        mean=complex(float(value)),
        stderr=0.0,
        passed=True,
        bound=None,
        n_samples=0,
        seed=cfg.seed,
        workers=cfg.workers,
        elapsed_ms=elapsed_ms,
    )


def _dispatch(command: str, cfg: ExperimentConfig):
    cache = LRCache(cfg.cache) if cfg.cache else None
    if command == "fourier":
        cfg.require("word", "n")
        lam = _parse_weight(cfg)
        word = parse_word(cfg.word)
        return mc_fourier(word, cfg.n, lam, cfg.samples, cfg.seed, cfg.workers)
    if command == "conv-check":
        cfg.require("word", "n")
        lam = _parse_weight(cfg)
        w1 = parse_word(cfg.word)
        w2 = parse_word(cfg.word2) if cfg.word2 else w1
        return mc_convolution_identity(
            w1, w2, cfg.n, lam, cfg.samples, cfg.seed, cfg.workers
        )
    if command == "power-exact":
        cfg.require("ell", "n")
        lam = _parse_weight(cfg)
        t0 = time.perf_counter()
        value = power_word_fourier_exact(lam, cfg.ell, cache=cache)
        params = {"lambda": lam.encode(), "n": cfg.n, "ell": cfg.ell, "exact": str(value)}
        return _exact_result(
            "power-exact", params, value, (time.perf_counter() - t0) * 1000.0, cfg
        )
    if command == "spread-prob":
        cfg.require("word", "n", "beta", "eps")
        return mc_spread_failure(
            parse_word(cfg.word),
            cfg.n,
            cfg.beta,
            cfg.eps,
            cfg.samples,
            cfg.seed,
            cfg.workers,
            force=cfg.force,
        )
    if command == "approx-eig":
        cfg.require("word", "n", "m", "eps")
        return mc_approx_eigenvectors(
            parse_word(cfg.word),
            cfg.n,
            cfg.m,
            cfg.eps,
            cfg.samples,
            cfg.seed,
            cfg.workers,
            force=cfg.force,
        )
    if command == "projection-law":
        cfg.require("m", "n", "eps")
        return mc_projection_law(
            cfg.m, cfg.n, cfg.eps, cfg.samples, cfg.seed, cfg.workers
        )
    if command == "small-ball":
        cfg.require("word", "n", "delta")
        return mc_small_ball(
            parse_word(cfg.word),
            cfg.n,
            cfg.delta,
            cfg.metric,
            cfg.samples,
            cfg.seed,
            cfg.workers,
        )
    if command == "trace-moment":
        cfg.require("word", "n", "M")
        return mc_trace_moment(
            parse_word(cfg.word), cfg.n, cfg.M, cfg.samples, cfg.seed, cfg.workers
        )
    if command == "weingarten":
        cfg.require("m", "n")
        spec = _parse_monomial(cfg)
        return mc_weingarten_crosscheck(
            cfg.m, cfg.n, spec, cfg.samples, cfg.seed, cfg.workers
        )
    if command == "dims":
        lam = _parse_weight(cfg)
        t0 = time.perf_counter()
        value = dim_weyl(lam)
        params = {"lambda": lam.encode(), "n": cfg.n, "exact": str(value)}
        if lam.is_partition():
            params["hook_content"] = str(dim_hook_content(lam.to_partition(), cfg.n))
        return _exact_result(
            "dims", params, value, (time.perf_counter() - t0) * 1000.0, cfg
        )
    if command == "verify-all":
        from .verify import run_all

        t0 = time.perf_counter()
        results = run_all(
            progress=lambda name, ok: print(
                f"{name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr
            )
        )
        failures = [name for name, ok in results if not ok]
        return Report(
            experiment="verify-all",
            params={"checks": len(results), "failures": failures},
            mean=complex(len(results) - len(failures)),
            stderr=0.0,
            passed=not failures,
            bound=None,
            n_samples=0,
            seed=cfg.seed,
            workers=cfg.workers,
            elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        )
    raise UsageError(f"unknown command {command!r}")


_SWEEPABLE = _INT_KEYS | _FLOAT_KEYS


def _run_sweep(command: str, cfg: ExperimentConfig, spec: str) -> tuple[str, int]:
    """Run the experiment once per value of one parameter; emit CSV."""
    if "=" not in spec:
        raise UsageError("--sweep must look like 'name=v1,v2,...'")
    key, _, body = spec.partition("=")
    key = key.strip()
    if key not in _SWEEPABLE:
        raise UsageError(f"--sweep parameter must be numeric, got {key!r}")
    attr = "lam" if key == "lambda" else key
    conv = int if key in _INT_KEYS else float
    values = [conv(v) for v in body.split(",")]
    buf = io.StringIO()
    buf.write(f"{key},mean_re,mean_im,stderr,pass,bound,n_samples,seed,workers\n")
    code = 0
    for v in values:
        setattr(cfg, attr, v)
        result = _dispatch(command, cfg)
        d = result.to_json_dict()
        est = d["estimate"]
        row = [
            repr(v),
            repr(est["mean_re"]),
            repr(est["mean_im"]),
            repr(est["stderr"]),
            "" if d["pass"] is None else str(d["pass"]).lower(),
            "" if d["bound"] is None else repr(d["bound"]),
            str(d["n_samples"]),
            str(d["seed"]),
            str(d["workers"]),
        ]
        buf.write(",".join(row) + "\n")
        if d["pass"] is False:
            code = 2
    return buf.getvalue(), code


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help; map its usage-error exit (2) to 1
        return 0 if exc.code == 0 else 1
    try:
        cfg = _merge_config(args)
        if cfg.sweep:
            text, code = _run_sweep(args.command, cfg, cfg.sweep)
        else:
            result = _dispatch(args.command, cfg)
            for note in getattr(result, "notes", ()):
                print(f"note: {note}", file=sys.stderr)
            d = result.to_json_dict()
            text = json.dumps(d, sort_keys=True) + "\n"
            code = 2 if d["pass"] is False else 0
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WordMeasuresError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
