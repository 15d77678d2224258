"""
Command-line entry point: python -m app.cli <command> [options]

Exit codes: 0 success, 1 usage or parameter error, 2 runtime error,
3 verification failure. Errors are reported on stderr.
"""

import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import InvalidParameterError, SolverError, VerificationFailedError
from app.core.logging import setup_logging
from app.dist.central import central_serve
from app.dist.satellite import satellite_serve
from app.schemas.ea import EaConfig, SolveReport
from app.schemas.graph import DegreeConstraint
from app.services.bench import (
    BenchRow,
    BenchSettings,
    emit_scaling_csv,
    emit_slice_csv,
    measure_slice_sizes,
    run_bench,
)
from app.services.engine import solve_local
from app.services.generator import generate_random_graph
from app.services.graph_io import load_graph, write_graph
from app.services.verify import CheckStatus, VerifyOptions, assert_verified, run_verify

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_RUNTIME = 2
EXIT_VERIFY = 3


def _int_list(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _str_list(ctx, param, value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [part.strip() for part in value.split(",") if part.strip()]


def run_options(f):
    """Options shared by solve and central"""
    options = [
        click.option("--graph", "graph_path", required=True, type=click.Path(dir_okay=False), help="Edge-list file"),
        click.option("--dmax", required=True, type=int, help="Maximum node degree"),
        click.option("--pop", "population_size", type=int, default=None, help="Population size"),
        click.option("--trials", "trials_per_tree", type=int, default=None, help="PAO trials per tree (default ceil(sqrt(n)))"),
        click.option("--iters", "max_iterations", type=int, default=1000, show_default=True, help="Generations to run"),
        click.option("--warmup", "warmup_iterations", type=int, default=0, show_default=True, help="Untimed leading generations"),
        click.option("--target", "target_weight", type=int, default=None, help="Stop once the best weight reaches this"),
        click.option("--seed", "master_seed", type=int, default=0, show_default=True, help="Master seed"),
        click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Write a one-row scaling CSV"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def build_config(dmax, population_size, trials_per_tree, max_iterations, warmup_iterations, target_weight, master_seed) -> EaConfig:
    values = dict(
        dmax=dmax,
        trials_per_tree=trials_per_tree,
        max_iterations=max_iterations,
        warmup_iterations=warmup_iterations,
        target_weight=target_weight,
        master_seed=master_seed,
    )
    if population_size is not None:
        values["population_size"] = population_size
    return EaConfig(**values)


def report_run(report: SolveReport, workers: int, csv_path: Optional[str]) -> None:
    click.echo(f"final weight: {report.best_weight}")
    click.echo(f"iterations: {report.iterations}")
    click.echo(f"avg_iter_s: {report.avg_iter_s:.6g}")
    click.echo(f"acceptance_rate: {report.acceptance_rate:.6g}")
    if csv_path:
        row = BenchRow(
            mode=report.mode,
            satellites=report.satellites,
            workers=workers,
            n=report.n,
            iterations=report.timed_iterations,
            avg_iter_s=report.avg_iter_s,
            final_weight=report.best_weight,
        )
        Path(csv_path).write_text(emit_scaling_csv([row]), encoding="utf-8")
        logger.info(f"Wrote {csv_path}")


@click.group()
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL")
def cli(log_level: Optional[str]) -> None:
    """Degree-constrained spanning tree solver on the Node-Depth Encoding"""
    setup_logging(log_level or settings.LOG_LEVEL)


@cli.command()
@click.option("--nodes", "n", required=True, type=int, help="Node count")
@click.option("--density", required=True, type=float, help="Edge density in (0, 1]")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def gen(n: int, density: float, seed: int, out_path: str) -> None:
    """Write a random connected graph"""
    g = generate_random_graph(n, density, seed)
    write_graph(g, out_path)
    click.echo(f"wrote {out_path}: n={g.n}, {g.edge_count} edges")


@cli.command()
@run_options
@click.option("--threads", default=1, show_default=True, type=int, help="Worker threads")
def solve(graph_path, dmax, population_size, trials_per_tree, max_iterations, warmup_iterations,
          target_weight, master_seed, csv_path, threads) -> None:
    """Run the solver in this process"""
    cfg = build_config(dmax, population_size, trials_per_tree, max_iterations, warmup_iterations, target_weight, master_seed)
    g = load_graph(graph_path)
    report = asyncio.run(solve_local(g, cfg, threads=threads))
    report_run(report, threads, csv_path)


@cli.command()
@run_options
@click.option("--listen", default=None, help="HOST:PORT to listen on (default NDE_BIND)")
@click.option("--satellites", required=True, type=click.IntRange(min=1), help="Satellites to wait for")
def central(graph_path, dmax, population_size, trials_per_tree, max_iterations, warmup_iterations,
            target_weight, master_seed, csv_path, listen, satellites) -> None:
    """Coordinate a distributed run"""
    cfg = build_config(dmax, population_size, trials_per_tree, max_iterations, warmup_iterations, target_weight, master_seed)
    g = load_graph(graph_path)
    endpoint = listen or settings.NDE_BIND
    report = asyncio.run(central_serve(g, cfg, endpoint, satellites))
    report_run(report, max(report.satellite_workers, default=1), csv_path)


@cli.command()
@click.option("--connect", "endpoint", default=None, help="Central HOST:PORT (default NDE_BIND)")
@click.option("--threads", default=1, show_default=True, type=click.IntRange(min=1))
def satellite(endpoint: Optional[str], threads: int) -> None:
    """Serve PAO trials for a Central until it shuts down"""
    asyncio.run(satellite_serve(endpoint or settings.NDE_BIND, threads))


@cli.command()
@click.option("--sizes", callback=_int_list, default="64,128,256,512,1024,2048,4096", show_default=True)
@click.option("--modes", callback=_str_list, default="local,dist:1,dist:4,dist:8", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Scaling CSV (stdout if omitted)")
@click.option("--iters", "iterations", default=1000, show_default=True, type=int, help="Timed generations")
@click.option("--warmup", default=100, show_default=True, type=int)
@click.option("--dmax", default=3, show_default=True, type=int)
@click.option("--pop", "population_size", default=16, show_default=True, type=int)
@click.option("--trials", "trials_per_tree", default=None, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--threads", default=1, show_default=True, type=int, help="Worker threads per process")
@click.option("--avg-degree", default=8.0, show_default=True, type=float, help="Average node degree of bench graphs")
@click.option("--transport", type=click.Choice(["tcp", "memory"]), default="tcp", show_default=True)
@click.option("--slice-sizes", callback=_int_list, default=None, help="Also measure mean slice size for these n")
@click.option("--prunes", default=100_000, show_default=True, type=int)
@click.option("--slice-csv", "slice_csv_path", type=click.Path(dir_okay=False), default=None)
def bench(sizes, modes, csv_path, iterations, warmup, dmax, population_size, trials_per_tree, seed,
          threads, avg_degree, transport, slice_sizes, prunes, slice_csv_path) -> None:
    """Sweep sizes and modes, emitting the scaling CSV"""
    params = BenchSettings(
        sizes=sizes, modes=modes, dmax=dmax, population_size=population_size,
        trials_per_tree=trials_per_tree, iterations=iterations, warmup=warmup, seed=seed,
        avg_degree=avg_degree, threads=threads, transport=transport,
    )
    rows = asyncio.run(run_bench(params))
    text = emit_scaling_csv(rows)
    if csv_path:
        Path(csv_path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {len(rows)} rows to {csv_path}")
    else:
        click.echo(text, nl=False)

    if slice_sizes:
        slice_rows = [measure_slice_sizes(n, prunes=prunes, seed=seed, dmax=dmax, avg_degree=avg_degree) for n in slice_sizes]
        slice_text = emit_slice_csv(slice_rows)
        if slice_csv_path:
            Path(slice_csv_path).write_text(slice_text, encoding="utf-8")
        else:
            click.echo(slice_text, nl=False)


@cli.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(dir_okay=False))
@click.option("--dmax", required=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--iters", "ea_iterations", default=500, show_default=True, type=int)
def verify(graph_path: str, dmax: int, seed: int, ea_iterations: int) -> None:
    """Run the invariant and oracle suite on one instance"""
    g = load_graph(graph_path)
    c = DegreeConstraint(dmax=dmax)
    results = asyncio.run(run_verify(g, c, VerifyOptions(seed=seed, ea_iterations=ea_iterations)))
    for result in results:
        click.echo(str(result))
    passed = sum(r.status == CheckStatus.PASSED for r in results)
    click.echo(f"{passed}/{len(results)} checks passed")
    assert_verified(results)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="nde", standalone_mode=False)
    except click.ClickException as e:
        click.echo(f"Error: {e.format_message()}", err=True)
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted", err=True)
        return EXIT_USAGE
    except ValidationError as e:
        click.echo(f"Error: invalid parameters\n{e}", err=True)
        return EXIT_USAGE
    except InvalidParameterError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except VerificationFailedError as e:
        click.echo(f"Verification failed: {e}", err=True)
        return EXIT_VERIFY
    except (SolverError, OSError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_RUNTIME
    except ValueError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
