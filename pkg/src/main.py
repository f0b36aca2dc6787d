#!/usr/bin/env python3
"""
quif5 - Main Entry Point

Command line front end: reads a problem file, runs one computation and
prints the result as text or schema-versioned JSON. Exit codes: 0 ok,
1 usage, 2 parse, 3 semantic, 4 computation, 5 oracle mismatch.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from .bench import run_bench
from .buchberger import buchberger_stdbasis
from .config_utils import get_setting, load_config
from .errors import OracleMismatch, QuiF5Error, UsageError
from .f5 import F5Result, f5_certificate, f5_stdbasis, verify_witness
from .loewy import loewy_report, minimal_generators
from .oracle import (loewy_dims_from_filtration, module_echelon, radical_filtration,
                     verify_standard_basis)
from .problem import Problem

logger = logging.getLogger(__name__)

COMMANDS = ("algebra", "stdbasis", "f5", "loewy", "mingens", "oracle", "bench")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage errors as UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print schema-versioned JSON")
    common.add_argument("--config", help="path to config.yaml")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

    problem_opts = argparse.ArgumentParser(add_help=False)
    problem_opts.add_argument("file", help="problem file (.qv)")
    problem_opts.add_argument("--degree-cap", type=int, help="cap for automatic nilpotency detection")
    problem_opts.add_argument("--oracle-check", action="store_true",
                              help="compare against the linear-algebra oracle (exit 5 on mismatch)")

    parser = _ArgumentParser(prog="quif5", description="Signed standard bases over basic algebras")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.add_parser("algebra", parents=[common, problem_opts], help="standard monomials and dimension")
    sub.add_parser("stdbasis", parents=[common, problem_opts], help="Buchberger-style standard basis")
    sub.add_parser("f5", parents=[common, problem_opts], help="signed standard basis with F5")
    sub.add_parser("loewy", parents=[common, problem_opts], help="Loewy layers (negdeglex)")
    sub.add_parser("mingens", parents=[common, problem_opts], help="minimal generating set")
    sub.add_parser("oracle", parents=[common, problem_opts], help="dense linear-algebra ground truth")
    bench = sub.add_parser("bench", parents=[common], help="Buchberger vs F5 on random instances")
    bench.add_argument("--count", type=int, help="number of instances")
    bench.add_argument("--seed", type=int, help="random seed")
    bench.add_argument("--csv", help="write per-instance rows to this CSV file")
    return parser


def setup_logging(config: Dict[str, Any], override: Optional[str] = None):
    level_name = (override or get_setting(config, "logging.level", "INFO")).upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        raise UsageError(f"unknown log level '{level_name}'")
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = get_setting(config, "logging.file")
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def _load(args, config) -> Problem:
    cap = args.degree_cap if args.degree_cap is not None else get_setting(config, "algebra.degree_cap", 64)
    try:
        return Problem.from_file(args.file, degree_cap=cap)
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror or e}") from e


def _run_f5(problem: Problem, config) -> F5Result:
    problem.require_module()
    result = f5_stdbasis(problem.generators,
                         keep_witnesses=bool(get_setting(config, "f5.keep_witnesses", False)),
                         check_invariants=bool(get_setting(config, "f5.check_invariants", False)),
                         sig_vertices=problem.sig_vertices)
    for sig, witness in result.witnesses.items():
        if not verify_witness(witness, sig, problem.generators):
            raise OracleMismatch(f"syzygy witness for {sig} does not check out")
    return result


def _check_basis(problem: Problem, polys, max_dim: int, what: str):
    if not verify_standard_basis(problem.module, problem.generators, polys, max_dim):
        raise OracleMismatch(f"{what} disagrees with the oracle")
    logger.info(f"✅ {what} agrees with the oracle")


def cmd_algebra(problem: Problem, args, config) -> Dict[str, Any]:
    return problem.algebra.to_dict()


def cmd_stdbasis(problem: Problem, args, config) -> Dict[str, Any]:
    problem.require_module()
    basis, stats = buchberger_stdbasis(problem.generators)
    if args.oracle_check:
        _check_basis(problem, basis, get_setting(config, "oracle.max_dim", 512), "Buchberger basis")
    return {"basis": [str(g) for g in basis], "stats": stats.to_dict()}


def cmd_f5(problem: Problem, args, config) -> Dict[str, Any]:
    result = _run_f5(problem, config)
    if args.oracle_check:
        _check_basis(problem, result.polys, get_setting(config, "oracle.max_dim", 512), "F5 basis")
        if f5_certificate(result):
            raise OracleMismatch("F5 criterion certificate fails")
    return result.to_dict()


def _radical_dims(problem: Problem, config) -> List[int]:
    return radical_filtration(problem.module, problem.generators, get_setting(config, "oracle.max_dim", 512))


def cmd_loewy(problem: Problem, args, config) -> Dict[str, Any]:
    report = loewy_report(_run_f5(problem, config))
    if args.oracle_check:
        expected = loewy_dims_from_filtration(_radical_dims(problem, config))
        if report["loewy_dims"] != expected:
            raise OracleMismatch(f"Loewy dims {report['loewy_dims']} but the oracle says {expected}")
    return report


def cmd_mingens(problem: Problem, args, config) -> Dict[str, Any]:
    gens = minimal_generators(_run_f5(problem, config))
    if args.oracle_check:
        dims = _radical_dims(problem, config)
        head = dims[0] - (dims[1] if len(dims) > 1 else 0)
        if len(gens) != head:
            raise OracleMismatch(f"{len(gens)} minimal generators but dim M/Rad(M) = {head}")
    return {"minimal_generators": [str(g) for g in gens], "count": len(gens)}


def cmd_oracle(problem: Problem, args, config) -> Dict[str, Any]:
    problem.require_module()
    max_dim = get_setting(config, "oracle.max_dim", 512)
    out = module_echelon(problem.module, problem.generators, max_dim).to_dict()
    out["radical_dims"] = radical_filtration(problem.module, problem.generators, max_dim)
    return out


def cmd_bench(args, config) -> Dict[str, Any]:
    report = run_bench(
        count=args.count if args.count is not None else get_setting(config, "bench.count", 200),
        seed=args.seed if args.seed is not None else get_setting(config, "bench.seed", 0),
        threshold=get_setting(config, "bench.zero_reduction_threshold", 0.8),
        max_dim=get_setting(config, "oracle.max_dim", 512),
        csv_path=args.csv or get_setting(config, "bench.csv"),
    )
    out = report.to_dict()
    out["_table"] = report.format_table()
    if report.failures:
        out["_mismatch"] = True
    return out


HANDLERS = {
    "algebra": cmd_algebra,
    "stdbasis": cmd_stdbasis,
    "f5": cmd_f5,
    "loewy": cmd_loewy,
    "mingens": cmd_mingens,
    "oracle": cmd_oracle,
}


def format_text(command: str, result: Dict[str, Any]) -> str:
    if command == "algebra":
        return (f"dim {result['dim']}\nN {result['nilpotency']}\n"
                f"stdmon {result['stdmon_count']}: {', '.join(result['stdmon'])}")
    if command == "bench":
        return result["_table"]
    lines = []
    for key, value in result.items():
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {item}" for item in value)
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {v}" for k, v in value.items())
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}")
        config = load_config(args.config)
        setup_logging(config, args.log_level)

        if args.command == "bench":
            result = cmd_bench(args, config)
        else:
            problem = _load(args, config)
            result = HANDLERS[args.command](problem, args, config)

        if args.json:
            doc = {"schema_version": get_setting(config, "output.schema_version", 1), "command": args.command}
            doc.update({k: v for k, v in result.items() if not k.startswith("_")})
            print(json.dumps(doc, indent=2))
        else:
            print(format_text(args.command, result))
        if result.get("_mismatch"):
            raise OracleMismatch("some bench instances disagree with the oracle")
        return 0
    except QuiF5Error as e:
        print(f"quif5: error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.critical(f"Fatal error: {e}", exc_info=True)
        return 1


if __name__ == '__main__':
    sys.exit(main())
