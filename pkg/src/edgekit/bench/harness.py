"""Measurement harness for the internal algorithm and backend comparisons.

Protocol per (family, size) cell: build the instance (untimed), snapshot a
monotonic clock, run the algorithm, snapshot again; repeat over the
declared seeds and report mean and sample standard deviation.  Timing
covers the algorithm only, never input parsing or graph construction, and
all measured work runs on the calling thread.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field

from .. import generators as gen
from ..centrality import pagerank
from ..csr import csr_copy_of
from ..flow import max_flow
from ..matching import edmonds_max_cardinality
from ..memory import bytes_per_edge
from ..rng import new_rng
from ..shortest_paths import dijkstra
from ..spanning import mst

GRAPH_FAMILIES = ("gnp", "barabasi_albert", "rmat", "file")
FLOW_FAMILIES = (
    "wide-wash",
    "long-wash",
    "flat-genrmf",
    "square-genrmf",
    "wide-genrmf",
    "long-genrmf",
)
EXPERIMENTS = ("dijkstra", "pagerank", "mst", "maxflow", "backend_bundle", "memory", "noop")
TIME_HEADER = "family;nodes;edges;algorithm;backend;time_ms;time_std_ms"
MEMORY_HEADER = "family;nodes;edges;algorithm;backend;bytes_per_edge"


@dataclass
class ExperimentPlan:
    experiment: str
    family: str
    sizes: list[int]
    repetitions: int = 10
    seed: int = 1
    backend: str = "adjacency"
    input_path: str | None = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if self.backend not in ("adjacency", "csr"):
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass
class Measurement:
    family: str
    nodes: int
    edges: int
    algorithm: str
    backend: str
    time_ms: float = 0.0
    time_std_ms: float = 0.0
    bytes_per_edge: float | None = None
    samples: list[float] = field(default_factory=list, repr=False)


def _build_graph(family: str, size: int, seed: int, weighted: bool, directed: bool):
    if family == "gnp":
        g = gen.gnp(size, 0.1, seed)
    elif family == "barabasi_albert":
        g = gen.barabasi_albert(20, 10, size, seed)
    elif family == "rmat":
        p = gen.GRAPH500
        g = gen.rmat(
            size, p["edge_factor"], p["a"], p["b"], p["c"], p["d"], seed,
            directed=directed, dedupe=not directed,
        )
    else:
        raise ValueError(f"unknown graph family {family!r}")
    if weighted:
        g = gen.with_uniform_integer_weights(g, 1, 100, seed + 7919)
    return g


def _build_flow_instance(family: str, size: int, seed: int):
    shape, kind = family.split("-")
    if kind == "wash":
        return gen.washington_family(shape, size, seed=seed)
    return gen.rmfgen_family(shape, size, seed=seed)


def _select_backend(g, backend: str):
    if backend == "csr":
        csr, payloads, _ = csr_copy_of(g)
        return csr
    return g


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return (time.perf_counter() - start) * 1000.0


def _row(plan, size, nodes, edges, algorithm, samples) -> Measurement:
    mean = statistics.fmean(samples)
    std = statistics.stdev(samples) if len(samples) > 1 else 0.0
    return Measurement(
        plan.family, nodes, edges, algorithm, plan.backend, mean, std, samples=samples
    )


def run_experiment(plan: ExperimentPlan) -> list[Measurement]:
    """Execute the plan and return one row per (size, algorithm) cell."""
    if plan.experiment == "memory":
        return memory_experiment(plan)
    if plan.family == "file" or plan.input_path:
        return _run_on_file(plan)
    rows: list[Measurement] = []
    for size in plan.sizes:
        rows.extend(_run_cell(plan, size))
    return rows


def _run_cell(plan: ExperimentPlan, size: int) -> list[Measurement]:
    seeds = [plan.seed + i for i in range(plan.repetitions)]
    if plan.experiment == "maxflow":
        per_alg: dict[str, list[float]] = {
            a: [] for a in ("push_relabel", "dinic", "edmonds_karp")
        }
        nodes = edges = 0
        for s in seeds:
            g, src, dst = _build_flow_instance(plan.family, size, s)
            g = _select_backend(g, plan.backend)
            nodes, edges = g.vertex_count, g.edge_count
            for alg in per_alg:
                per_alg[alg].append(
                    _timed(lambda: max_flow(g, src, dst, algorithm=alg))
                )
        return [_row(plan, size, nodes, edges, a, t) for a, t in per_alg.items()]

    weighted = plan.experiment in ("dijkstra", "mst", "backend_bundle")
    directed = plan.experiment == "pagerank" and plan.family == "rmat"

    if plan.experiment == "mst":
        algs = ("prim", "kruskal", "boruvka")
        per_alg = {a: [] for a in algs}
        nodes = edges = 0
        for s in seeds:
            g = _select_backend(_build_graph(plan.family, size, s, weighted, directed), plan.backend)
            nodes, edges = g.vertex_count, g.edge_count
            for a in algs:
                per_alg[a].append(_timed(lambda: mst(g, algorithm=a)))
        return [_row(plan, size, nodes, edges, a, t) for a, t in per_alg.items()]

    samples: list[float] = []
    nodes = edges = 0
    for s in seeds:
        g = _select_backend(_build_graph(plan.family, size, s, weighted, directed), plan.backend)
        nodes, edges = g.vertex_count, g.edge_count
        source = next(iter(g.vertices()), None)
        if plan.experiment == "dijkstra":
            samples.append(_timed(lambda: dijkstra(g, source)))
        elif plan.experiment == "pagerank":
            samples.append(
                _timed(lambda: pagerank(g, damping=0.85, max_iterations=20, tolerance=1e-16))
            )
        elif plan.experiment == "backend_bundle":
            samples.append(
                _timed(
                    lambda: (mst(g, "prim"), dijkstra(g, source), edmonds_max_cardinality(g))
                )
            )
        elif plan.experiment == "noop":
            samples.append(_timed(lambda: None))
        else:
            raise ValueError(f"unknown experiment {plan.experiment!r}")
    return [_row(plan, size, nodes, edges, plan.experiment, samples)]


def _run_on_file(plan: ExperimentPlan) -> list[Measurement]:
    """Road-network mode: one graph from disk, ten random source vertices."""
    from ..io import read_dimacs_sp

    if not plan.input_path:
        raise ValueError("file family needs input_path")
    with open(plan.input_path, "r", encoding="ascii") as fh:
        g = read_dimacs_sp(fh)
    g = _select_backend(g, plan.backend)
    verts = g.vertex_list()
    rng = new_rng(plan.seed)
    sources = [verts[int(rng.integers(0, len(verts)))] for _ in range(plan.repetitions)]
    if plan.experiment == "dijkstra":
        samples = [_timed(lambda: dijkstra(g, s)) for s in sources]
    elif plan.experiment == "pagerank":
        samples = [
            _timed(lambda: pagerank(g, 0.85, 20, 1e-16)) for _ in range(plan.repetitions)
        ]
    else:
        raise ValueError(f"experiment {plan.experiment!r} has no file mode")
    return [_row(plan, 0, g.vertex_count, g.edge_count, plan.experiment, samples)]


def memory_experiment(plan: ExperimentPlan) -> list[Measurement]:
    """Analytic bytes/edge for both backends on each instance."""
    rows: list[Measurement] = []
    for size in plan.sizes:
        g = _build_graph(plan.family, size, plan.seed, weighted=False, directed=False)
        csr, _, _ = csr_copy_of(g)
        for backend, graph in (("adjacency", g), ("csr", csr)):
            rows.append(
                Measurement(
                    plan.family,
                    graph.vertex_count,
                    graph.edge_count,
                    "memory",
                    backend,
                    bytes_per_edge=bytes_per_edge(graph),
                )
            )
    return rows


def write_time_csv(rows: list[Measurement], out) -> None:
    out.write(TIME_HEADER + "\n")
    for r in rows:
        out.write(
            f"{r.family};{r.nodes};{r.edges};{r.algorithm};{r.backend};"
            f"{r.time_ms:.6f};{r.time_std_ms:.6f}\n"
        )


def write_memory_csv(rows: list[Measurement], out) -> None:
    out.write(MEMORY_HEADER + "\n")
    for r in rows:
        out.write(
            f"{r.family};{r.nodes};{r.edges};{r.algorithm};{r.backend};"
            f"{r.bytes_per_edge:.6f}\n"
        )
