"""Command-line interface.

Exit codes: 0 success (a budget-limited exact run still exits 0), 1 usage
errors, 2 unreadable or invalid input data, 3 internal invariant failures.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from pathlib import Path

import click

from .bench import BenchConfig, CSV_HEADER, format_csv, format_pretty, run_grid
from .bounds import diameter_bound, trivial_bound
from .errors import AlgorithmError, GraphError
from .exact import BRUTE_FORCE_MAX_N, SearchLimits, brute_force_geodetic, exact_geodetic
from .generate import (FAMILIES, GenSpec, SCHEMES, benchmark_grid,
                       edge_count_for_density, generate)
from .graph import Graph, parse_edge_list, write_edge_list
from .greedy import greedy_geodetic
from .ilp import export_ilp
from .intervals import all_pairs_distances, closure, interval_table, is_geodetic
from .local import locally_greedy_geodetic
from .bitset import mask_of

ALGORITHMS = ("exact", "brute", "greedy", "greedy-addone", "locally-greedy",
              "bounds", "all")


class UsageError(click.UsageError):
    exit_code = 1


class DataError(click.ClickException):
    exit_code = 2


class InternalError(click.ClickException):
    exit_code = 3


@contextmanager
def _translated_errors():
    """Map package exceptions onto the documented exit codes."""
    try:
        yield
    except GraphError as exc:
        raise DataError(str(exc)) from exc
    except AlgorithmError as exc:
        raise InternalError(str(exc)) from exc


def _load_graph(path: str, one_based: bool) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    with _translated_errors():
        return parse_edge_list(text, one_based=one_based, strict=True)


@click.group()
def cli():
    """Geodetic number solvers, graph generators, and benchmarks."""


@cli.command(name="generate")
@click.option("--family", type=click.Choice([f.lower() for f in FAMILIES]),
              required=True, help="Random graph family.")
@click.option("--n", "n", type=int, required=True, help="Vertex count.")
@click.option("--density", type=float, default=None,
              help="Edge density in (0, 1]; exclusive with --edges.")
@click.option("--edges", "edges", type=int, default=None,
              help="Exact edge count; exclusive with --density.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--ws-rewire-prob", type=float, default=0.05, show_default=True,
              help="Rewire probability for the WS family.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default="-",
              help="Output file; '-' writes to stdout.")
def generate_cmd(family, n, density, edges, seed, ws_rewire_prob, output):
    """Generate a seeded random connected graph as an edge list."""
    if (density is None) == (edges is None):
        raise UsageError("give exactly one of --density or --edges")
    with _translated_errors():
        if edges is None:
            edges = edge_count_for_density(n, density)
        spec = GenSpec(family=family.upper(), n=n, m_target=edges, seed=seed,
                       ws_rewire_prob=ws_rewire_prob)
        g = generate(spec)
    text = write_edge_list(g)
    if output == "-":
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)
    click.echo(f"n={g.n} m={g.m} seed={seed}", err=True)


def _solve_lines(g: Graph, algorithm: str, limits: SearchLimits | None) -> list[str]:
    lines = []

    def fmt(name: str, value: str, seconds: float, note: str) -> str:
        return f"{name:<16}{value:>8}  {seconds:10.6f}s  {note}"

    run_exact = algorithm in ("exact", "all")
    run_brute = algorithm == "brute"
    run_greedy = algorithm in ("greedy", "all")
    run_addone = algorithm in ("greedy-addone", "all")
    run_local = algorithm in ("locally-greedy", "all")
    if run_brute:
        if g.n > BRUTE_FORCE_MAX_N:
            raise UsageError(
                f"brute force is capped at n={BRUTE_FORCE_MAX_N} (got n={g.n}); "
                "use the exact algorithm instead")
        res = brute_force_geodetic(g)
        lines.append(fmt(res.algorithm, str(res.value), res.seconds, "optimal"))
    if run_exact:
        res = exact_geodetic(g, limits)
        if res.optimal:
            lines.append(fmt(res.algorithm, str(res.value), res.seconds, "optimal"))
        else:
            lines.append(fmt(res.algorithm, f"<={res.value}", res.seconds,
                             "budget exhausted, upper bound"))
    if run_greedy:
        res = greedy_geodetic(g)
        lines.append(fmt(res.algorithm, str(res.value), res.seconds, "upper bound"))
    if run_addone:
        res = greedy_geodetic(g, add_one=True)
        lines.append(fmt(res.algorithm, str(res.value), res.seconds, "upper bound"))
    if run_local:
        res = locally_greedy_geodetic(g)
        lines.append(fmt(res.algorithm, str(res.value), res.seconds, "upper bound"))
    if algorithm == "bounds":
        dist = all_pairs_distances(g)
        lines.append(f"{'trivial-bound':<16}{trivial_bound(g):>8}")
        lines.append(f"{'diameter-bound':<16}{diameter_bound(dist):>8}")
    return lines


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-a", "--algorithm", type=click.Choice(ALGORITHMS), default="all",
              show_default=True)
@click.option("--time-budget", type=float, default=None,
              help="Wall-clock cap in seconds for the exact search.")
@click.option("--node-budget", type=int, default=None,
              help="Search node cap for the exact search.")
@click.option("--one-based", is_flag=True, help="Vertex ids in the file start at 1.")
def solve(graph_file, algorithm, time_budget, node_budget, one_based):
    """Run solvers on an edge-list graph and print their values."""
    g = _load_graph(graph_file, one_based)
    limits = None
    if time_budget is not None or node_budget is not None:
        with _translated_errors():
            limits = SearchLimits(time_budget=time_budget, node_budget=node_budget)
    with _translated_errors():
        for line in _solve_lines(g, algorithm, limits):
            click.echo(line)


@cli.command()
@click.option("--scheme", type=click.Choice(sorted(SCHEMES)), default="standard",
              show_default=True)
@click.option("--family", "families", type=click.Choice([f.lower() for f in FAMILIES]),
              multiple=True, help="Repeatable; default is all three families.")
@click.option("--seed-base", type=int, default=0, show_default=True)
@click.option("--max-n", type=int, default=None,
              help="Keep only grid cells with n at most this.")
@click.option("--exact-max-n", type=int, default=30, show_default=True,
              help="Run the exact solver only at or below this size.")
@click.option("--exact-time-budget", type=float, default=None,
              help="Opt the exact solver in on every cell with this budget.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker processes; row order stays deterministic.")
@click.option("--timing/--no-timing", default=True, show_default=True,
              help="Write wall-clock columns; disable for byte-reproducible CSV.")
@click.option("--pretty", is_flag=True, help="Also print an aligned table.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True,
              help="CSV output path.")
def bench(scheme, families, seed_base, max_n, exact_max_n, exact_time_budget,
          jobs, timing, pretty, output):
    """Run the benchmark grid and write one CSV row per cell."""
    family_tuple = tuple(f.upper() for f in families) if families else FAMILIES
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    with _translated_errors():
        specs = benchmark_grid(scheme, families=family_tuple, seed_base=seed_base)
        if max_n is not None:
            specs = [s for s in specs if s.n <= max_n]
        config = BenchConfig(exact_max_n=exact_max_n,
                             exact_time_budget=exact_time_budget,
                             include_timing=timing)
        records = run_grid(specs, config, jobs=jobs)
    Path(output).write_text(format_csv(records, include_timing=timing))
    if pretty:
        click.echo(format_pretty(records, include_timing=timing), nl=False)
    click.echo(f"wrote {len(records)} rows to {output}", err=True)


@cli.command(name="export-ilp")
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Output path; defaults to the graph name with an .lp suffix.")
@click.option("--one-based", is_flag=True, help="Vertex ids in the file start at 1.")
def export_ilp_cmd(graph_file, output, one_based):
    """Write the 0-1 program for a graph in LP format."""
    g = _load_graph(graph_file, one_based)
    if output is None:
        output = str(Path(graph_file).with_suffix(".lp"))
    with _translated_errors():
        text = export_ilp(g)
    Path(output).write_text(text)
    click.echo(f"wrote {output}", err=True)


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("vertices", type=int, nargs=-1, required=True)
@click.option("--one-based", is_flag=True, help="Vertex ids start at 1, set included.")
def verify(graph_file, vertices, one_based):
    """Check whether a vertex set is geodetic for the given graph."""
    g = _load_graph(graph_file, one_based)
    vs = [v - 1 for v in vertices] if one_based else list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} out of range for n={g.n}")
    with _translated_errors():
        table = interval_table(all_pairs_distances(g))
        members = mask_of(vs)
        covered = closure(table, members)
        verdict = "geodetic" if is_geodetic(table, members) else "not geodetic"
    click.echo(f"{verdict}: closure covers {covered.bit_count()} of {g.n} vertices")


def main(argv: list[str] | None = None) -> int:
    """Console entry point with the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 130
    return 0


if __name__ == "__main__":
    sys.exit(main())
