"""The ``bench`` command line: run experiments, generate instances, convert
formats.

Exit codes: 0 success, 2 usage error, 1 runtime failure.
"""

from __future__ import annotations

import argparse
import sys

from .. import generators as gen
from ..core import Graph
from ..errors import GraphError
from ..io import (
    read_csv,
    read_dimacs_color,
    read_dimacs_sp,
    sparse6_decode,
    sparse6_encode,
    graph6_decode,
    graph6_encode,
    write_csv,
    write_dimacs_color,
    write_dimacs_sp,
    write_dot,
)
from .harness import (
    EXPERIMENTS,
    ExperimentPlan,
    run_experiment,
    write_memory_csv,
    write_time_csv,
)

_GENERATORS = {
    "complete": gen.complete_graph,
    "ring": gen.ring_graph,
    "star": gen.star_graph,
    "wheel": gen.wheel_graph,
    "grid": gen.grid_graph,
    "hypercube": gen.hypercube_graph,
    "gnp": gen.gnp,
    "gnm": gen.gnm,
    "barabasi_albert": gen.barabasi_albert,
    "watts_strogatz": gen.watts_strogatz,
    "kleinberg": gen.kleinberg,
    "rmat": gen.rmat,
    "random_regular": gen.random_regular,
    "random_bipartite": gen.random_bipartite,
    "rmfgen": gen.rmfgen,
    "washington": gen.washington_level,
}

_SEEDED = {
    "gnp",
    "gnm",
    "barabasi_albert",
    "watts_strogatz",
    "kleinberg",
    "rmat",
    "random_regular",
    "random_bipartite",
    "rmfgen",
    "washington",
}

# convention defaults so the common sweeps need only a size parameter
_MODEL_DEFAULTS = {
    "rmat": dict(gen.GRAPH500),
    "barabasi_albert": {"m0": 20, "m": 10},
    "gnp": {"p": 0.1},
    "rmfgen": {"cmin": 1, "cmax": 100},
    "washington": {"cmin": 1, "cmax": 10**4},
}


def _coerce(value: str):
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        pass
    if value in ("true", "True"):
        return True
    if value in ("false", "False"):
        return False
    return value


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise GraphError(f"parameter {pair!r} is not of the form key=value")
        key, value = pair.split("=", 1)
        params[key] = _coerce(value)
    return params


def _write_graph(g: Graph, fmt: str, out) -> None:
    if fmt == "dimacs-sp":
        write_dimacs_sp(g, out)
    elif fmt == "dimacs-edge":
        write_dimacs_color(g, out)
    elif fmt == "csv":
        write_csv(g, out)
    elif fmt == "graph6":
        out.write(graph6_encode(g) + "\n")
    elif fmt == "sparse6":
        out.write(sparse6_encode(g) + "\n")
    elif fmt == "dot":
        write_dot(g, out)
    else:
        raise GraphError(f"unknown output format {fmt!r}")


def _read_graph(fmt: str, stream, directed: bool) -> Graph:
    if fmt == "dimacs-sp":
        return read_dimacs_sp(stream)
    if fmt == "dimacs-edge":
        return read_dimacs_color(stream)
    if fmt == "csv":
        return read_csv(stream, directed=directed)
    if fmt == "graph6":
        return graph6_decode(stream.read())
    if fmt == "sparse6":
        return sparse6_decode(stream.read())
    raise GraphError(f"unknown input format {fmt!r}")


def _cmd_run(args) -> int:
    plan = ExperimentPlan(
        experiment=args.experiment,
        family=args.family,
        sizes=[int(s) for s in args.sizes.split(",")] if args.sizes else [],
        repetitions=args.reps,
        seed=args.seed,
        backend=args.backend,
        input_path=args.input,
    )
    rows = run_experiment(plan)
    with _open_out(args.out) as out:
        if plan.experiment == "memory":
            write_memory_csv(rows, out)
        else:
            write_time_csv(rows, out)
    return 0


def _cmd_generate(args) -> int:
    try:
        builder = _GENERATORS[args.model]
    except KeyError:
        raise GraphError(f"unknown generator model {args.model!r}") from None
    params = dict(_MODEL_DEFAULTS.get(args.model, {}))
    params.update(_parse_params(args.params))
    if args.model in _SEEDED:
        params.setdefault("seed", args.seed)
    result = builder(**params)
    if isinstance(result, tuple):  # flow generators return (graph, source, sink)
        g, s, t = result
        print(f"source={s} sink={t}", file=sys.stderr)
    else:
        g = result
    with _open_out(args.out) as out:
        _write_graph(g, args.format, out)
    return 0


def _cmd_convert(args) -> int:
    with _open_in(args.infile) as stream:
        g = _read_graph(args.from_format, stream, args.directed)
    with _open_out(args.out) as out:
        _write_graph(g, args.to_format, out)
    return 0


class _open_out:
    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path in (None, "-"):
            return sys.stdout
        self.fh = open(self.path, "w", encoding="ascii")
        return self.fh

    def __exit__(self, *exc):
        if self.fh:
            self.fh.close()
        return False


class _open_in:
    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path in (None, "-"):
            return sys.stdin
        self.fh = open(self.path, "r", encoding="ascii")
        return self.fh

    def __exit__(self, *exc):
        if self.fh:
            self.fh.close()
        return False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Graph algorithm benchmark harness: run timing sweeps, "
        "generate instances, convert formats.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a timing or memory experiment")
    run.add_argument("--experiment", required=True, choices=EXPERIMENTS)
    run.add_argument("--family", required=True)
    run.add_argument("--sizes", default="", help="comma-separated size sweep")
    run.add_argument("--reps", type=int, default=10)
    run.add_argument("--seed", type=int, default=1)
    run.add_argument("--backend", choices=("adjacency", "csr"), default="adjacency")
    run.add_argument("--input", default=None, help="DIMACS sp file for --family file")
    run.add_argument("--out", default=None, help="CSV output path (default stdout)")
    run.set_defaults(func=_cmd_run)

    generate = sub.add_parser("generate", help="write a generated instance")
    generate.add_argument("model", choices=sorted(_GENERATORS))
    generate.add_argument("params", nargs="*", help="key=value generator parameters")
    generate.add_argument("--seed", type=int, default=1)
    generate.add_argument(
        "--format",
        default="dimacs-sp",
        choices=("dimacs-sp", "dimacs-edge", "csv", "graph6", "sparse6", "dot"),
    )
    generate.add_argument("--out", default=None)
    generate.set_defaults(func=_cmd_generate)

    convert = sub.add_parser("convert", help="transcode between graph formats")
    convert.add_argument(
        "--from",
        dest="from_format",
        required=True,
        choices=("dimacs-sp", "dimacs-edge", "csv", "graph6", "sparse6"),
    )
    convert.add_argument(
        "--to",
        dest="to_format",
        required=True,
        choices=("dimacs-sp", "dimacs-edge", "csv", "graph6", "sparse6", "dot"),
    )
    convert.add_argument("--in", dest="infile", default=None)
    convert.add_argument("--out", default=None)
    convert.add_argument(
        "--directed", action="store_true", help="read CSV input as directed"
    )
    convert.set_defaults(func=_cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError, TypeError) as exc:
        print(f"bench: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
