"""
Scaling benchmark.

Sweeps graph sizes and execution modes, timing the generation loop only
(graph generation, population initialisation and satellite handshakes are
excluded), and renders the rows as CSV. A second sweep measures the mean
subtree-slice size PAO moves, the quantity behind the operator's cost.
"""

import asyncio
import csv
import io
import logging
import math
import sys
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import Field

from app.core.exceptions import InvalidParameterError
from app.dist.central import central_serve
from app.dist.satellite import satellite_serve
from app.dist.transport import MemoryNetwork
from app.models.graph import WeightedGraph
from app.schemas.base import BaseSchema
from app.schemas.ea import EaConfig, SolveReport
from app.schemas.graph import DegreeConstraint
from app.services import nde
from app.services.engine import solve_local
from app.services.generator import generate_random_graph
from app.services.operators import kruskal_constrained
from app.services.rng import Xoshiro256StarStar, splitmix64

logger = logging.getLogger(__name__)

DEFAULT_SIZES = (64, 128, 256, 512, 1024, 2048, 4096)
SCALING_HEADER = ["mode", "satellites", "workers", "n", "iterations", "avg_iter_s", "speedup", "final_weight"]
SLICE_HEADER = ["n", "prunes", "mean_slice", "sqrt_n", "ratio"]


class BenchRow(BaseSchema):
    '''One (mode, satellites, n) measurement of a sweep'''
    mode: str = Field(description="local | distributed")
    satellites: int = Field(ge=0)
    workers: int = Field(ge=1, description="Worker threads per process")
    n: int
    iterations: int = Field(ge=0, description="Timed generations, warm-up excluded")
    avg_iter_s: float = Field(ge=0.0)
    speedup: float = 1.0
    final_weight: int
    best_parents: List[int] = Field(default_factory=list, exclude=True)


class SliceRow(BaseSchema):
    '''Mean subtree-slice size over uniform prunes of one tree'''
    n: int
    prunes: int
    mean_slice: float
    sqrt_n: float
    ratio: float


class BenchSettings(BaseSchema):
    '''Parameters shared by every run of a sweep'''
    sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_SIZES))
    modes: List[str] = Field(default_factory=lambda: ["local", "dist:1", "dist:4", "dist:8"])
    dmax: int = Field(default=3, ge=2)
    population_size: int = Field(default=16, ge=2)
    trials_per_tree: Optional[int] = Field(default=None, ge=1)
    iterations: int = Field(default=1000, ge=1)
    warmup: int = Field(default=100, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    avg_degree: float = Field(default=8.0, gt=0.0)
    threads: int = Field(default=1, ge=1)
    transport: str = Field(default="tcp", pattern="^(tcp|memory)$")


def parse_mode(mode: str) -> Tuple[str, int]:
    """'local' -> ('local', 0); 'dist:N' -> ('distributed', N)"""
    if mode == "local":
        return "local", 0
    kind, sep, count = mode.partition(":")
    if kind == "dist" and sep and count.isdigit() and int(count) >= 1:
        return "distributed", int(count)
    raise InvalidParameterError(f"unknown bench mode {mode!r}; expected 'local' or 'dist:N'")


def bench_density(n: int, avg_degree: float) -> float:
    return min(1.0, avg_degree / (n - 1))


def bench_graph(n: int, params: BenchSettings) -> WeightedGraph:
    return generate_random_graph(n, bench_density(n, params.avg_degree), splitmix64(params.seed ^ n))


def bench_config(params: BenchSettings) -> EaConfig:
    return EaConfig(
        dmax=params.dmax,
        population_size=params.population_size,
        trials_per_tree=params.trials_per_tree,
        max_iterations=params.warmup + params.iterations,
        warmup_iterations=params.warmup,
        master_seed=params.seed,
    )


async def _run_distributed(g: WeightedGraph, cfg: EaConfig, satellites: int, params: BenchSettings) -> SolveReport:
    if params.transport == "memory":
        network = MemoryNetwork()
        endpoint = f"bench-{g.n}-{satellites}"
        tasks: List[asyncio.Task] = []

        def start_satellites(bound: str) -> None:
            for _ in range(satellites):
                tasks.append(asyncio.create_task(satellite_serve(bound, params.threads, network)))

        try:
            report = await central_serve(g, cfg, endpoint, satellites, network=network, on_listening=start_satellites)
        finally:
            results = await asyncio.gather(*tasks, return_exceptions=True)
        for result in results:
            if isinstance(result, BaseException):
                raise result
        return report

    processes: List[asyncio.subprocess.Process] = []
    spawned: List[asyncio.Task] = []

    async def spawn(bound: str) -> None:
        for _ in range(satellites):
            processes.append(await asyncio.create_subprocess_exec(
                sys.executable, "-m", "app.cli", "satellite",
                "--connect", bound, "--threads", str(params.threads),
            ))

    def start_processes(bound: str) -> None:
        spawned.append(asyncio.create_task(spawn(bound)))

    try:
        report = await central_serve(g, cfg, "127.0.0.1:0", satellites, on_listening=start_processes)
    finally:
        await asyncio.gather(*spawned, return_exceptions=True)
        for process in processes:
            try:
                await asyncio.wait_for(process.wait(), timeout=10)
            except asyncio.TimeoutError:
                logger.warning(f"Satellite process {process.pid} did not exit; killing it")
                process.kill()
                await process.wait()
    return report


async def run_bench(params: BenchSettings) -> List[BenchRow]:
    """Run every (size, mode) pair of the sweep; rows come back with speedups filled in"""
    modes = [parse_mode(mode) for mode in params.modes]
    cfg = bench_config(params)
    rows: List[BenchRow] = []
    for n in params.sizes:
        if n < 2:
            raise InvalidParameterError(f"bench size must be at least 2, got {n}")
        g = bench_graph(n, params)
        for mode, satellites in modes:
            logger.info(f"Bench n={n} mode={mode} satellites={satellites}")
            if mode == "local":
                report = await solve_local(g, cfg, threads=params.threads)
            else:
                report = await _run_distributed(g, cfg, satellites, params)
            rows.append(BenchRow(
                mode=mode,
                satellites=satellites,
                workers=params.threads,
                n=n,
                iterations=report.timed_iterations,
                avg_iter_s=report.avg_iter_s,
                final_weight=report.best_weight,
                best_parents=report.best_parents,
            ))
    return with_speedups(rows)


def with_speedups(rows: Sequence[BenchRow]) -> List[BenchRow]:
    """Baseline per n is its dist:1 row when present, otherwise its local row"""
    baselines: Dict[int, float] = {}
    for row in rows:
        if row.mode == "distributed" and row.satellites == 1:
            baselines[row.n] = row.avg_iter_s
    for row in rows:
        if row.mode == "local":
            baselines.setdefault(row.n, row.avg_iter_s)

    result = []
    for row in rows:
        baseline = baselines.get(row.n)
        if baseline is None or row.avg_iter_s <= 0.0:
            speedup = 1.0
        else:
            speedup = baseline / row.avg_iter_s
        result.append(row.model_copy(update={"speedup": speedup}))
    return result


def _format(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _render(header: List[str], records: Iterable[List]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for record in records:
        writer.writerow([_format(value) for value in record])
    return buffer.getvalue()


def emit_scaling_csv(rows: Iterable[BenchRow]) -> str:
    ordered = sorted(rows, key=lambda r: (r.mode, r.satellites, r.n))
    return _render(SCALING_HEADER, ([getattr(row, name) for name in SCALING_HEADER] for row in ordered))


def measure_slice_sizes(n: int, prunes: int = 100_000, seed: int = 0, dmax: int = 3, avg_degree: float = 8.0) -> SliceRow:
    """Mean size of the subtree slice for uniformly drawn prune indices of a constrained Kruskal tree"""
    if n < 2:
        raise InvalidParameterError("slice measurement needs n >= 2")
    if prunes < 1:
        raise InvalidParameterError("prunes must be at least 1")
    g = generate_random_graph(n, bench_density(n, avg_degree), splitmix64(seed ^ n))
    tree = kruskal_constrained(g, DegreeConstraint(dmax=min(dmax, n - 1)), seed)
    rng = Xoshiro256StarStar(splitmix64(seed + n))
    total = 0
    for _ in range(prunes):
        total += nde.subtree_range(tree, 1 + rng.below(n - 1)).size
    mean_slice = total / prunes
    sqrt_n = math.sqrt(n)
    return SliceRow(n=n, prunes=prunes, mean_slice=mean_slice, sqrt_n=sqrt_n, ratio=mean_slice / sqrt_n)


def emit_slice_csv(rows: Iterable[SliceRow]) -> str:
    ordered = sorted(rows, key=lambda r: r.n)
    return _render(SLICE_HEADER, ([getattr(row, name) for name in SLICE_HEADER] for row in ordered))
