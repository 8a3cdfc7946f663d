# app/cli.py

from __future__ import annotations

import functools
import random
import sys
from typing import Any, Dict, Iterator, List, Optional, Sequence

import click
from pydantic import BaseModel, Field, ValidationError

from app.services.bounds import bound_table
from app.services.cliques import clique_vector, count_cliques
from app.services.closure import closure
from app.services.constructions import CONSTRUCTIONS, dominating_join, lookup_construction
from app.services.cores import core
from app.services.cycles import (
    PathWitness,
    circumference,
    kopylov_lemma_check,
    lemma_requirement,
    longest_path_vertices,
    maximal_path,
)
from app.services.errors import BudgetExceeded, Graph6ParseError, ParameterError, TheoremViolation
from app.services.graph import Graph
from app.services.graph6 import from_graph6, to_graph6
from app.services.property_suite import random_property_suite
from app.services.report_format import FORMATS, model_payload, render_record, render_reports, render_table
from app.services.structure import is_2connected
from app.services.sweep import SweepSpec, sweep
from app.services.verify import THEOREMS, verify
from app.utils.budget import Budget
from app.utils.env_utils import configure_logging, default_task_budget, default_workers, load_defaults

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliConfig(BaseModel):
    """Resolved settings for one invocation."""

    command: str
    workers: int = Field(ge=1)
    budget_seconds: Optional[float] = Field(default=None, gt=0)
    output_format: str = "tsv"
    input_source: str = "arg"
    progress: bool = False
    include_timing: bool = True

    def budget(self) -> Optional[Budget]:
        return Budget(self.budget_seconds) if self.budget_seconds else None


# ---------------------------
# Helpers
# ---------------------------

def _config(ctx: click.Context) -> CliConfig:
    return ctx.find_object(CliConfig)


def _fail(ctx: click.Context, message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    ctx.exit(code)


def handle_errors(fn):
    """Translate domain errors into the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except (ParameterError, Graph6ParseError) as e:
            _fail(ctx, str(e), EXIT_USAGE)
        except BudgetExceeded as e:
            _fail(ctx, str(e), EXIT_BUDGET)
        except TheoremViolation as e:
            if e.counterexample:
                click.echo(f"counterexample: {e.counterexample}", err=True)
            _fail(ctx, str(e), EXIT_VIOLATION)

    return wrapper


def _read_graphs(ctx: click.Context, graph6: Optional[str]) -> Iterator[tuple[str, Graph]]:
    if graph6 is not None:
        yield graph6, from_graph6(graph6)
        return
    _config(ctx).input_source = "stdin"
    for line in click.get_text_stream("stdin"):
        text = line.strip()
        if text:
            yield text, from_graph6(text)


def _emit_rows(ctx: click.Context, rows: List[Dict[str, Any]]) -> None:
    fmt = _config(ctx).output_format
    if fmt != "json":
        rows = [{k: (",".join(map(str, v)) if isinstance(v, (list, tuple)) else v) for k, v in r.items()} for r in rows]
    click.echo(render_table(rows, fmt, list(rows[0]) if rows else None), nl=False)


def _parse_range(text: Optional[str]) -> Optional[tuple[int, int]]:
    """"5:9", "5..9" or "5"."""
    if text is None:
        return None
    for sep in (":", ".."):
        if sep in text:
            lo, hi = text.split(sep, 1)
            break
    else:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ParameterError(f"Bad range '{text}'; expected LO:HI")


# ---------------------------
# Commands
# ---------------------------

@click.group()
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Output format.")
@click.option("--workers", type=int, default=None, help="Worker processes for enumeration.")
@click.option("--budget", type=float, default=None, help="Time budget per task, seconds.")
@click.option("--log-level", default=None, help="Logging level (default from CLIQUEBOUND_LOG_LEVEL).")
@click.option("--progress", is_flag=True, help="Show a progress bar for sweeps.")
@click.option("--no-timing", is_flag=True, help="Leave elapsed out of reports so equal runs print identically.")
@click.pass_context
def cli(ctx, fmt, workers, budget, log_level, progress, no_timing):
    """Exact clique-count bounds for graphs without long cycles or paths."""
    try:
        configure_logging(log_level)
        defaults = load_defaults()
        ctx.obj = CliConfig(
            command=ctx.invoked_subcommand or "",
            workers=workers if workers is not None else default_workers(),
            budget_seconds=budget if budget is not None else default_task_budget(),
            output_format=fmt or defaults.get("output_format", "tsv"),
            progress=progress,
            include_timing=not no_timing,
        )
    except ValidationError as e:
        _fail(ctx, e.errors()[0]["msg"], EXIT_USAGE)
    except ParameterError as e:
        _fail(ctx, str(e), EXIT_USAGE)


@cli.command()
@click.argument("kind", type=click.Choice(sorted(CONSTRUCTIONS) + ["dominating-join"]))
@click.argument("params", nargs=-1)
@click.pass_context
@handle_errors
def construct(ctx, kind, params):
    """Print the graph6 code of a named construction.

    dominating-join reads graph6 (argument or stdin) instead of integers.
    """
    if kind == "dominating-join":
        for _, g in _read_graphs(ctx, params[0] if params else None):
            click.echo(to_graph6(dominating_join(g)))
        return
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise ParameterError(f"construct {kind} takes integer parameters, got {' '.join(params)}")
    click.echo(to_graph6(lookup_construction(kind, values)))


@cli.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("s", type=int)
@click.pass_context
@handle_errors
def bound(ctx, n, k, s):
    """Every bound that applies to (n, k, s)."""
    rows = bound_table(n, k, s)
    click.echo(render_table(rows, _config(ctx).output_format, list(rows[0])), nl=False)


@cli.command()
@click.argument("graph6", required=False)
@click.option("-s", "s", type=int, default=None, help="Only count K_s.")
@click.pass_context
@handle_errors
def count(ctx, graph6, s):
    """Clique counts of graph6 input."""
    rows = []
    for text, g in _read_graphs(ctx, graph6):
        if s is not None:
            rows.append({"graph6": text, "s": s, "count": count_cliques(g, s)})
        else:
            vec = clique_vector(g)
            rows.append({"graph6": text, "n": g.n, "edges": g.edge_count,
                         "clique_number": vec.clique_number, "counts": list(vec.counts)})
    _emit_rows(ctx, rows)


@cli.command("circumference")
@click.argument("graph6", required=False)
@click.pass_context
@handle_errors
def circumference_cmd(ctx, graph6):
    """Longest cycle and longest path of graph6 input."""
    budget = _config(ctx).budget()
    rows = [
        {"graph6": text, "circumference": circumference(g, budget),
         "longest_path_vertices": longest_path_vertices(g, budget), "two_connected": is_2connected(g)}
        for text, g in _read_graphs(ctx, graph6)
    ]
    _emit_rows(ctx, rows)


@cli.command("core")
@click.argument("graph6", required=False)
@click.option("--alpha", type=int, required=True, help="Delete vertices of degree <= alpha.")
@click.pass_context
@handle_errors
def core_cmd(ctx, graph6, alpha):
    """(alpha+1)-core of graph6 input, with the deletion trace."""
    rows = []
    for text, g in _read_graphs(ctx, graph6):
        result = core(g, alpha)
        rows.append({"graph6": text, "alpha": alpha, "core": result.vertices.members(),
                     "trace": [f"{v}:{d}" for v, d in result.trace]})
    _emit_rows(ctx, rows)


@cli.command("closure")
@click.argument("graph6", required=False)
@click.option("-k", "k", type=int, required=True, help="Cycle length threshold.")
@click.pass_context
@handle_errors
def closure_cmd(ctx, graph6, k):
    """k-closure of graph6 input, one graph6 line per graph."""
    budget = _config(ctx).budget()
    for _, g in _read_graphs(ctx, graph6):
        click.echo(to_graph6(closure(g, k, budget)))


@cli.command("lemma-check")
@click.argument("graph6", required=False)
@click.option("--path", "path", default=None, help="Comma-separated path vertices; default a random maximal path.")
@click.option("--seed", type=int, default=1, help="Seed for the random maximal path.")
@click.pass_context
@handle_errors
def lemma_check(ctx, graph6, path, seed):
    """Check the path-degree lemma on 2-connected graph6 input."""
    rng = random.Random(seed)
    rows = []
    holds = True
    for text, g in _read_graphs(ctx, graph6):
        if path:
            try:
                p = PathWitness(vertices=tuple(int(v) for v in path.split(",")))
            except (ValueError, ValidationError) as e:
                raise ParameterError(f"Bad path '{path}': {e}")
        else:
            if not is_2connected(g):
                raise ParameterError("The path-degree lemma needs a 2-connected graph")
            p = maximal_path(g, rng)
        ok = kopylov_lemma_check(g, p)
        holds = holds and ok
        rows.append({"graph6": text, "path": list(p.vertices), "m": p.m,
                     "required_cycle": lemma_requirement(g, p), "holds": ok})
    _emit_rows(ctx, rows)
    if not holds:
        ctx.exit(EXIT_VIOLATION)


@cli.command("verify")
@click.argument("theorem", type=click.Choice(sorted(THEOREMS)))
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.argument("s", type=int, required=False)
@click.pass_context
@handle_errors
def verify_cmd(ctx, theorem, n, k, s):
    """Exhaustively check one theorem at (n, k, s)."""
    cfg = _config(ctx)
    report = verify(theorem, n, k, s, cfg.workers, cfg.budget())
    click.echo(render_reports([report], cfg.output_format, cfg.include_timing), nl=False)


@cli.command("sweep")
@click.option("--theorem", "theorems", multiple=True, type=click.Choice(sorted(THEOREMS)),
              help="Theorem id; repeatable. Default: all.")
@click.option("--n-range", default=None, help="LO:HI inclusive.")
@click.option("--k-range", default=None, help="LO:HI inclusive.")
@click.option("--s-range", default=None, help="LO:HI inclusive.")
@click.pass_context
@handle_errors
def sweep_cmd(ctx, theorems, n_range, k_range, s_range):
    """Run verifiers over a parameter grid; omitted ranges use the default grid."""
    cfg = _config(ctx)
    grid = load_defaults()["default_sweep"]
    reports = []
    for theorem in theorems or sorted(THEOREMS):
        spec = SweepSpec.of(
            theorems=(theorem,),
            n_range=_parse_range(n_range) or tuple(grid[theorem]["n_range"]),
            k_range=_parse_range(k_range) or tuple(grid[theorem]["k_range"]),
            s_range=_parse_range(s_range) or tuple(grid[theorem]["s_range"]),
        )
        reports.extend(sweep(spec, cfg.workers, cfg.budget_seconds, cfg.progress))
    click.echo(render_reports(reports, cfg.output_format, cfg.include_timing), nl=False)


@cli.command("properties")
@click.option("--seed", type=int, default=None)
@click.option("--samples", type=int, default=None)
@click.pass_context
@handle_errors
def properties_cmd(ctx, seed, samples):
    """Seeded random property suite for the lemma, closures and cores."""
    cfg = _config(ctx)
    suite_defaults = load_defaults()["property_suite"]
    report = random_property_suite(
        seed if seed is not None else suite_defaults["seed"],
        samples if samples is not None else suite_defaults["samples"],
    )
    if cfg.output_format == "json":
        click.echo(render_record(model_payload(report), "json"), nl=False)
    else:
        rows = [{"property": name, "checks": n,
                 "failures": sum(f.property == name for f in report.failures)}
                for name, n in report.checks.items()]
        click.echo(render_table(rows, cfg.output_format, ["property", "checks", "failures"]), nl=False)
    for f in report.failures:
        click.echo(f"failure: {f.property} {f.graph6} {f.witness}", err=True)
    if not report.ok:
        ctx.exit(EXIT_VIOLATION)


# ---------------------------
# Entry point
# ---------------------------

def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="cliquebound", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_VIOLATION
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
