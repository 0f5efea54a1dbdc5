"""Command-line front-end: batch solving, run comparison, exhaustive
enumeration, format conversion, and serving the HTTP API.

Exit codes: 0 success, 2 argument errors, 3 parse errors, 4 solver
contract errors, 5 enumeration refusal. stdout carries only payloads;
diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .errors import (ContractError, EnumerationLimitError, IntegrityError,
                     NotFoundError, ObjectiveError, ParseError, SchemaError)
from .instance_io import RunStore, load_instance_file, write_instance_text
from .model import Instance, ObjectiveSpec
from .pareto import brute_force_front, coverage
from .runs import execute_run
from .solvers import SolverConfig

EXIT_ARGS = 2
EXIT_PARSE = 3
EXIT_SOLVER = 4
EXIT_ENUMERATION = 5


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(payload: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(payload)
    else:
        Path(output).write_text(payload)


def _front_json(vectors: List[tuple]) -> str:
    return json.dumps([list(v) for v in sorted(vectors)],
                      separators=(",", ":")) + "\n"


def _load_instance(path: str) -> Instance:
    return load_instance_file(path)


def _build_config(args: argparse.Namespace) -> SolverConfig:
    overrides = {}
    for attr in ("population_size", "crossover_kind", "crossover_probability",
                 "mutation_probability", "mutation_kind", "elite_fraction",
                 "neighborhood", "weight_count", "initial_temperature",
                 "cooling_factor", "chain_length", "archive_capacity"):
        value = getattr(args, attr, None)
        if value is not None:
            overrides[attr] = value
    return SolverConfig(method=args.method, budget=args.budget,
                        rng_seed=args.seed, **overrides)


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    try:
        spec = ObjectiveSpec.parse(args.objectives)
        config = _build_config(args)
    except (ObjectiveError, ContractError) as exc:
        _diag(str(exc))
        return EXIT_ARGS
    if spec.needs_due_dates() and not inst.has_due_dates():
        _diag(f"instance {inst.name!r} has no due dates; objectives {spec} need them")
        return EXIT_ARGS
    record = execute_run(inst, spec, config)
    if args.store is not None:
        RunStore(args.store).save_run(record)
        _diag(f"run {record.run_id} saved to {args.store}")
    _emit(_front_json([snap.vector for snap in record.solutions]), args.output)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    records = [_read_run_file(Path(path)) for path in args.runs]
    first = records[0]
    for record in records[1:]:
        if record.objectives.names != first.objectives.names:
            _diag("runs use different objective selections")
            return EXIT_ARGS
        if record.instance_name != first.instance_name:
            _diag("runs cover different instances")
            return EXIT_ARGS
    fronts = [[snap.vector for snap in record.solutions] for record in records]
    ids = [record.run_id for record in records]
    lines = ["coverer\t" + "\t".join(ids)]
    for i, a in enumerate(fronts):
        row = [f"{coverage(a, b):.3f}" for b in fronts]
        lines.append(ids[i] + "\t" + "\t".join(row))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _read_run_file(path: Path):
    from .instance_io import record_from_doc
    if not path.is_file():
        raise NotFoundError(f"no run file at {path}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise IntegrityError(f"{path} is not valid JSON: {exc.msg}") from None
    return record_from_doc(doc)


def cmd_enumerate(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    try:
        spec = ObjectiveSpec.parse(args.objectives)
    except ObjectiveError as exc:
        _diag(str(exc))
        return EXIT_ARGS
    if spec.needs_due_dates() and not inst.has_due_dates():
        _diag(f"instance {inst.name!r} has no due dates; objectives {spec} need them")
        return EXIT_ARGS
    front = brute_force_front(inst, spec, limit=args.limit)
    _emit(_front_json(list(front)), args.output)
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    source = Path(args.input)
    target = Path(args.output)
    fmt = target.suffix.lower().lstrip(".")
    if fmt not in ("json", "jss", "fsp"):
        _diag(f"unknown output format {target.suffix!r}")
        return EXIT_ARGS
    if target.exists() and not args.force:
        _diag(f"{target} exists; pass --force to overwrite")
        return EXIT_ARGS
    inst = _load_instance(str(source))
    try:
        text = write_instance_text(inst, fmt)
    except ContractError as exc:
        _diag(str(exc))
        return EXIT_ARGS
    if fmt != "json" and any(job.due is not None or job.release
                             for job in inst.jobs):
        _diag("release/due dates are dropped by this format")
    target.write_text(text)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        _diag(f"listen address {args.listen!r} is not host:port")
        return EXIT_ARGS
    app = create_app(args.store, max_workers=args.workers)
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shopfront",
        description="Multi-objective shop-scheduling workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run one configured solver")
    solve.add_argument("--instance", required=True, help="instance file path")
    solve.add_argument("--method", required=True)
    solve.add_argument("--budget", required=True, type=int)
    solve.add_argument("--objectives", required=True,
                       help="comma-separated: cmax,csum,tmax,u")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--store", help="persist the run record under this directory")
    solve.add_argument("--output", help="write the front here instead of stdout")
    solve.add_argument("--population", dest="population_size", type=int)
    solve.add_argument("--crossover", dest="crossover_kind")
    solve.add_argument("--crossover-probability", dest="crossover_probability",
                       type=float)
    solve.add_argument("--mutation", dest="mutation_kind")
    solve.add_argument("--mutation-probability", dest="mutation_probability",
                       type=float)
    solve.add_argument("--elite-fraction", dest="elite_fraction", type=float)
    solve.add_argument("--neighborhood", dest="neighborhood")
    solve.add_argument("--weights", dest="weight_count", type=int)
    solve.add_argument("--initial-temperature", dest="initial_temperature",
                       type=float)
    solve.add_argument("--cooling-factor", dest="cooling_factor", type=float)
    solve.add_argument("--chain-length", dest="chain_length", type=int)
    solve.add_argument("--archive-capacity", dest="archive_capacity", type=int)
    solve.set_defaults(handler=cmd_solve)

    compare = sub.add_parser("compare", help="pairwise coverage of saved runs")
    compare.add_argument("runs", nargs="+", help="two or more run record files")
    compare.add_argument("--output")
    compare.set_defaults(handler=cmd_compare)

    enumerate_ = sub.add_parser("enumerate", help="exact front by enumeration")
    enumerate_.add_argument("--instance", required=True)
    enumerate_.add_argument("--objectives", required=True)
    enumerate_.add_argument("--limit", type=int, default=100000)
    enumerate_.add_argument("--output")
    enumerate_.set_defaults(handler=cmd_enumerate)

    convert = sub.add_parser("convert", help="rewrite an instance in another format")
    convert.add_argument("input")
    convert.add_argument("output")
    convert.add_argument("--force", action="store_true")
    convert.set_defaults(handler=cmd_convert)

    serve = sub.add_parser("serve", help="serve the HTTP API")
    serve.add_argument("--store", required=True)
    serve.add_argument("--listen", default="127.0.0.1:8080")
    serve.add_argument("--workers", type=int)
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "compare" and len(args.runs) < 2:
        _diag("compare needs at least two run files")
        return EXIT_ARGS
    try:
        return args.handler(args)
    except NotFoundError as exc:
        _diag(str(exc))
        return EXIT_ARGS
    except (ParseError, SchemaError, IntegrityError) as exc:
        _diag(str(exc))
        return EXIT_PARSE
    except EnumerationLimitError as exc:
        _diag(str(exc))
        return EXIT_ENUMERATION
    except ContractError as exc:
        _diag(str(exc))
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
