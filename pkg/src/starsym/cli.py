from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from starsym import betti, generators
from starsym.config import Config
from starsym.constant import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESOURCE_LIMIT,
    EXIT_USAGE,
)
from starsym.core import StarParams
from starsym.enum import OutputFormat
from starsym.exc import (
    ConfigurationError,
    ResourceLimitError,
    StarsymException,
    VerificationError,
)
from starsym.render import (
    betti_output,
    generators_output,
    invariants_output,
    verification_output,
)
from starsym.util.logger import error, success
from starsym.verify import run_verification


def _params(args: argparse.Namespace) -> StarParams:
    return StarParams(s=args.s, c=args.c, m=args.m, delta=args.delta)


def cmd_gens(args: argparse.Namespace, cfg: Config) -> tuple[str, int]:
    params = _params(args)
    enumerate_ = (
        generators.enumerate_module_generators
        if args.module
        else generators.enumerate_generators
    )
    gens = enumerate_(params, limit=cfg.limit, threads=cfg.threads)
    return generators_output(gens, params, args.module, args.format), EXIT_OK


def cmd_invariants(args: argparse.Namespace, cfg: Config) -> tuple[str, int]:
    params = _params(args)
    output = invariants_output(
        params,
        mu=generators.mu(params),
        sdefect=generators.sdefect(params),
        regularity=betti.regularity(params),
        degrees=generators.degree_histogram(params),
        fmt=args.format,
    )
    return output, EXIT_OK


def cmd_betti(args: argparse.Namespace, cfg: Config) -> tuple[str, int]:
    if args.closed:
        table = betti.closed_betti_table(_params(args))
    else:
        table = betti.betti_table(
            _params(args), partition_limit=cfg.partition_limit, threads=cfg.threads
        )
    return betti_output(table, args.format), EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config) -> tuple[str, int]:
    report = run_verification(
        args.max_s, args.max_m, seed=args.seed, limits=cfg.oracle, threads=cfg.threads
    )
    # the report is printed even when it carries a counterexample
    sys.stdout.write(verification_output(report, args.format))
    report.raise_for_mismatch()
    success("All {} cells agree with the oracle", len(report.cells))
    return "", EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, Config], tuple[str, int]]] = {
    "gens": cmd_gens,
    "invariants": cmd_invariants,
    "betti": cmd_betti,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(OutputFormat),
        default=OutputFormat.TEXT,
    )
    common.add_argument("--threads", type=int, help="worker threads (default: STARSYM_THREADS)")
    common.add_argument("--debug", action="store_true", default=None)
    common.add_argument("--silent", action="store_true", default=None)
    common.add_argument("--log-file", type=Path)

    star = argparse.ArgumentParser(add_help=False)
    star.add_argument("--s", type=int, required=True, help="number of forms")
    star.add_argument("--c", type=int, required=True, help="codimension")
    star.add_argument("--m", type=int, required=True, help="symbolic power")
    star.add_argument("--delta", type=int, default=1, help="common degree of the forms")

    ap = argparse.ArgumentParser(
        prog="starsym",
        description="Exact invariants of symbolic powers of star configurations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gens = sub.add_parser("gens", parents=[common, star], help="list minimal generators")
    gens.add_argument(
        "--module", action="store_true", help="only generators of I^(m) / I^m"
    )
    gens.add_argument("--limit", type=int, help="enumeration cap (default: STARSYM_LIMIT)")

    sub.add_parser(
        "invariants", parents=[common, star], help="mu, symbolic defect, regularity, degrees"
    )

    betti_cmd = sub.add_parser("betti", parents=[common, star], help="graded Betti table")
    betti_cmd.add_argument("--partition-limit", type=int)
    betti_cmd.add_argument(
        "--closed", action="store_true", help="use only the closed strand formulas"
    )

    verify = sub.add_parser("verify", parents=[common], help="check formulas against the oracle")
    verify.add_argument("--max-s", type=int, required=True)
    verify.add_argument("--max-m", type=int, required=True)
    verify.add_argument("--seed", type=int, help="sample large monomial spaces with this seed")
    return ap


def _config(args: argparse.Namespace) -> Config:
    overrides = {
        "limit": getattr(args, "limit", None),
        "partition_limit": getattr(args, "partition_limit", None),
        "threads": args.threads,
        "silent": args.silent,
        "debug": args.debug,
        "log_file": args.log_file,
    }
    return Config(**{k: v for k, v in overrides.items() if v is not None})


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        cfg = _config(args)
        output, code = COMMANDS[args.command](args, cfg)
    except (ConfigurationError, ValidationError) as e:
        error("Invalid arguments: {}", e)
        return EXIT_USAGE
    except ResourceLimitError as e:
        error("Resource limit: {}", e)
        return EXIT_RESOURCE_LIMIT
    except VerificationError as e:
        error("Verification failed: {}", e)
        return EXIT_MISMATCH
    except StarsymException as e:
        error("{}: {}", type(e).__name__, e)
        return EXIT_USAGE
    sys.stdout.write(output)
    return code


def run() -> None:
    sys.exit(main())
