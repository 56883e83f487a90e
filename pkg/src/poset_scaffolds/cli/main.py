"""
Command-line front end.

Each subcommand reads its inputs, runs one pipeline and writes the result in
the text formats of ``poset_scaffolds.formats`` to --out or stdout. Library
errors are reported as one line on stderr with exit status 1; bad arguments
exit with status 2.
"""

import argparse
import logging
import sys
from typing import List, Optional, Union

from pydantic import ValidationError

from ..config import settings
from ..exceptions import ScaffoldError
from ..formats import (
    format_colimit,
    format_grank,
    format_limit,
    format_points,
    format_scaffold,
    read_hasse,
    read_interval,
    read_module_rep,
    read_qr_complex,
    write_text,
)
from ..limits.grank import colimit_over, final_scaffold_of, generalized_rank, initial_scaffold_of, limit_over
from ..modules.labeled import QrComplex, order_oracle
from ..modules.representation import ModuleRep, validate_rep
from ..posets.grid import GridInterval
from ..posets.poset import Poset
from ..scaffolds.grid import betti1_support
from .bench import run_bench
from .config import RunConfig

logger = logging.getLogger(__name__)

Ambient = Union[Poset, GridInterval]


def _ambient(config: RunConfig) -> Optional[Ambient]:
    if config.hasse is not None:
        Q = read_hasse(config.hasse)
        logger.info(f"Loaded poset with {len(Q)} elements and {len(Q.hasse_edges)} edges")
        return Q
    if config.interval is not None:
        Q = read_interval(config.interval)
        if config.validate_inputs:
            Q.validate()
        logger.info(f"Loaded d={Q.d} interval with {len(Q.minima)} minima ({Q.form} form)")
        return Q
    return None


def _module(config: RunConfig, Q: Optional[Ambient]) -> Union[QrComplex, ModuleRep]:
    if config.complex is not None:
        C = read_qr_complex(config.complex, config.field)
        if config.validate_inputs and Q is not None:
            C.check(order_oracle(Q))
        logger.info(f"Loaded complex of total rank {C.total_rank} over F_{C.field.p}")
        return C
    M = read_module_rep(config.rep, config.field)
    if config.validate_inputs and not validate_rep(M):
        raise ScaffoldError(f"{config.rep}: structure maps do not compose")
    logger.info(f"Loaded representation on {len(M.elements)} elements over F_{M.field.p}")
    return M


def _emit(config: RunConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        write_text(config.out, text)
        logger.info(f"Wrote {config.out}")


def cmd_scaffold(config: RunConfig) -> int:
    Q = _ambient(config)
    if config.command == "final-scaffold":
        P = final_scaffold_of(Q, config.grid_algo)
    else:
        P = initial_scaffold_of(Q, config.grid_algo)
    _emit(config, format_scaffold(P))
    return 0


def cmd_limit(config: RunConfig) -> int:
    Q = _ambient(config)
    L, P = limit_over(_module(config, Q), Q, config.grid_algo, config.threads)
    logger.info(f"Limit of dimension {L.dim} over a scaffold of {len(P)} elements")
    _emit(config, format_limit(L))
    return 0


def cmd_colimit(config: RunConfig) -> int:
    Q = _ambient(config)
    C, P = colimit_over(_module(config, Q), Q, config.grid_algo, config.threads)
    logger.info(f"Colimit of dimension {C.dim} over a scaffold of {len(P)} elements")
    _emit(config, format_colimit(C))
    return 0


def cmd_grank(config: RunConfig) -> int:
    Q = _ambient(config)
    report = generalized_rank(_module(config, Q), Q, algo=config.grid_algo, threads=config.threads)
    _emit(config, format_grank(report))
    return 0


def cmd_betti1_support(config: RunConfig) -> int:
    Q = read_interval(config.interval)
    points = betti1_support(Q.minima, config.grid_algo)
    logger.info(f"First Betti support: {len(points)} points from {len(Q.minima)} generators")
    _emit(config, format_points(points))
    return 0


def cmd_bench(config: RunConfig) -> int:
    frame = run_bench(config)
    if config.out is None:
        logger.info("\n" + frame.to_string(index=False))
    return 0


def cmd_validate(config: RunConfig) -> int:
    Q = _ambient(config)
    lines = []
    if isinstance(Q, Poset):
        lines.append(f"poset {len(Q)} elements {len(Q.hasse_edges)} edges connected={Q.is_connected()}")
    elif isinstance(Q, GridInterval):
        Q.validate()
        lines.append(f"interval d={Q.d} minima {len(Q.minima)} finite={Q.is_finite()}")
    if config.complex is not None or config.rep is not None:
        source = _module(config, Q)
        if isinstance(source, QrComplex):
            lines.append(f"complex rank {source.total_rank} field {source.field.p}")
        else:
            lines.append(f"rep elements {len(source.elements)} total_dim {source.total_dim()}")
    _emit(config, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="poset-scaffolds",
        description="Minimal initial and final scaffolds, limits, colimits and generalized ranks",
    )
    ap.add_argument("--log-level", default=None, help="Override the configured log level")
    sub = ap.add_subparsers(dest="command", required=True)

    def inputs(p: argparse.ArgumentParser, module: bool) -> None:
        p.add_argument("--hasse", help="Poset in Hasse text format")
        p.add_argument("--interval", help="Grid interval in text format")
        if module:
            p.add_argument("--complex", help="(Q,r)-complex in text format")
            p.add_argument("--rep", help="Module representation in text format")
            p.add_argument("--field", type=int, help="Prime modulus, overriding the file header")
            p.add_argument("--threads", type=int, default=None, help="Worker threads for fiber computations")
        p.add_argument("--algo", default="auto", choices=["auto", "general", "sweep", "joins"])
        p.add_argument("--out", help="Output file (default: stdout)")
        p.add_argument("--skip-validate", action="store_true", help="Skip input validation")

    for name, help_text in (
        ("scaffold", "Initial scaffold of a poset or grid interval"),
        ("final-scaffold", "Final scaffold of a poset or finite grid interval"),
    ):
        s = sub.add_parser(name, help=help_text)
        inputs(s, module=False)
        s.set_defaults(func=cmd_scaffold)

    for name, func, help_text in (
        ("limit", cmd_limit, "Presection basis of the limit"),
        ("colimit", cmd_colimit, "Quotient basis of the colimit"),
        ("grank", cmd_grank, "Generalized rank over a connected poset or interval"),
    ):
        s = sub.add_parser(name, help=help_text)
        inputs(s, module=True)
        s.set_defaults(func=func)

    b1 = sub.add_parser("betti1-support", help="First Betti support of the ideal of the interval's minima")
    b1.add_argument("--interval", required=True)
    b1.add_argument("--algo", default="auto", choices=["auto", "sweep", "joins"])
    b1.add_argument("--out")
    b1.set_defaults(func=cmd_betti1_support)

    bench = sub.add_parser("bench", help="Benchmark scaffold sizes and limit timings")
    bench.add_argument("--family", default="random3d", choices=["random3d", "u4", "limit2d"])
    bench.add_argument("--sizes", type=int, nargs="+", help="Number of minima (or k for u4)")
    bench.add_argument("--rank", type=int, default=20, help="Total rank of random complexes")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--field", type=int)
    bench.add_argument("--threads", type=int, default=None)
    bench.add_argument("--algo", default="auto", choices=["auto", "sweep", "joins"])
    bench.add_argument("--out", help="CSV path (default: <bench_dir>/<family>.csv)")
    bench.set_defaults(func=cmd_bench)

    v = sub.add_parser("validate", help="Validate input files and report their sizes")
    inputs(v, module=True)
    v.set_defaults(func=cmd_validate)
    return ap


def make_config(args: argparse.Namespace) -> RunConfig:
    values = {
        key: value
        for key, value in vars(args).items()
        if key not in ("func", "log_level", "skip_validate") and value is not None
    }
    values["validate_inputs"] = not getattr(args, "skip_validate", False)
    return RunConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)

    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        config = make_config(args)
    except ValidationError as exc:
        ap.error("; ".join(err["msg"] for err in exc.errors()))

    try:
        return args.func(config)
    except ScaffoldError as exc:
        logger.error(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
