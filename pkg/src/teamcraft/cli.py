"""Command-line front end; thin composition of the library operations.

Exit codes: 0 success, 1 error, 2 infeasible instance.
"""

from __future__ import annotations

import json
import sys

import click

from . import assembly as asm
from . import metrics as mx
from .assignment import assign_roles
from .errors import BoundExceeded, Infeasible, TeamCraftError
from .feasibility import check_role_coverage
from .io import (
    SolveConfig,
    load_config,
    read_scores_csv,
    solution_document,
    write_solution_json,
)
from .model import ScoreMatrix, TeamAssembly
from .pipeline import ASSEMBLY_METHODS, solve

EXIT_ERROR = 1
EXIT_INFEASIBLE = 2

CONFIG_ENVVAR = "TEAMCRAFT_CONFIG"


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _base_config(config_path, roles, n, method, seed, rule3_strict, bound) -> SolveConfig:
    if config_path:
        cfg = load_config(config_path)
    else:
        cfg = SolveConfig(roles=tuple(roles) if roles else ("IN", "DE", "AN", "IM", "TE", "CO"))
    updates: dict = {}
    if roles:
        updates["roles"] = tuple(roles)
    if n is not None:
        updates["n"] = n
    if method is not None:
        updates["method"] = method
    if seed is not None:
        updates["seed"] = seed
    if rule3_strict is not None:
        updates["rule3_strict"] = rule3_strict
    if bound is not None:
        updates["exhaustive_bound"] = bound
    return SolveConfig.from_dict({**cfg.to_dict(), **updates})


def _roles_option(f):
    return click.option(
        "--roles",
        callback=lambda ctx, param, v: tuple(x.strip() for x in v.split(",")) if v else None,
        help="Comma-separated role codes, in column order (e.g. IN,DE,IM,CO).",
    )(f)


def _config_option(f):
    return click.option(
        "--config",
        "config_path",
        envvar=CONFIG_ENVVAR,
        type=click.Path(exists=True, dir_okay=False),
        help=f"JSON config file (env {CONFIG_ENVVAR}).",
    )(f)


@click.group()
def main():
    """Team construction from participant-by-role skill scores."""


@main.command()
@click.argument("scores_path", type=click.Path(exists=True, dir_okay=False))
@_roles_option
@_config_option
@click.option("--teams", "n", type=int, default=None, help="Number of teams.")
@click.option("--strict-coverage", is_flag=True, help="Require more than n holders per role.")
def validate(scores_path, roles, config_path, n, strict_coverage):
    """Check that the instance admits a valid team construction."""
    try:
        cfg = _base_config(config_path, roles, n, None, None, None, None)
        matrix = read_scores_csv(scores_path, cfg.roles)
        report = check_role_coverage(matrix, cfg.n, strict=strict_coverage)
    except TeamCraftError as exc:
        _fail(str(exc), EXIT_ERROR)
    click.echo(f"participants: {matrix.p}  roles: {matrix.r}  teams: {cfg.n}")
    for role, count in report.per_role_coverage.items():
        click.echo(f"  {role}: {count} positive-score holders")
    if report.feasible:
        click.echo("feasible")
    else:
        for violation in report.violations:
            click.echo(f"infeasible (rule {violation.rule}): {violation.detail}")
        sys.exit(EXIT_INFEASIBLE)


@main.command()
@click.argument("scores_path", type=click.Path(exists=True, dir_okay=False))
@_roles_option
@_config_option
@click.option("--teams", "n", type=int, default=None)
@click.option("--method", type=click.Choice(ASSEMBLY_METHODS), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--bound", type=int, default=None, help="Exhaustive enumeration bound on p.")
def assemble(scores_path, roles, config_path, n, method, seed, bound):
    """Produce a team assembly without assigning roles."""
    try:
        cfg = _base_config(config_path, roles, n, method, seed, None, bound)
        matrix = read_scores_csv(scores_path, cfg.roles)
        from .pipeline import assemble as run_assemble

        a = run_assemble(matrix, cfg)
    except BoundExceeded as exc:
        _fail(f"{exc} (raise with --bound)", EXIT_ERROR)
    except Infeasible as exc:
        _fail(str(exc), EXIT_INFEASIBLE)
    except TeamCraftError as exc:
        _fail(str(exc), EXIT_ERROR)
    click.echo(json.dumps({"assembly": list(a.assignment), "n": a.n}))


@main.command()
@click.argument("scores_path", type=click.Path(exists=True, dir_okay=False))
@_roles_option
@_config_option
@click.option("--assembly", "assembly_spec", required=True,
              help="Comma-separated team ids per participant, e.g. 1,1,2,2.")
def assign(scores_path, roles, config_path, assembly_spec):
    """Optimal role assignment for a given assembly."""
    try:
        cfg = _base_config(config_path, roles, None, None, None, None, None)
        matrix = read_scores_csv(scores_path, cfg.roles)
        ids = tuple(int(x) for x in assembly_spec.split(","))
        a = TeamAssembly(ids, max(ids))
        ra, team_scores = assign_roles(matrix, a)
    except Infeasible as exc:
        _fail(str(exc), EXIT_INFEASIBLE)
    except (TeamCraftError, ValueError) as exc:
        _fail(str(exc), EXIT_ERROR)
    click.echo(json.dumps({"roles": list(ra.assignment), "team_scores": team_scores}))


@main.command(name="solve")
@click.argument("scores_path", type=click.Path(exists=True, dir_okay=False))
@_roles_option
@_config_option
@click.option("--teams", "n", type=int, default=None)
@click.option("--method", type=click.Choice(ASSEMBLY_METHODS), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--relax-rule3", is_flag=True, help="Warn instead of failing on zero-score roles.")
@click.option("--with-labels", is_flag=True, help="Attach display labels to the output.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the solution JSON here.")
def solve_cmd(scores_path, roles, config_path, n, method, seed, relax_rule3, with_labels, output):
    """Full pipeline: feasibility, assembly, role assignment, metrics."""
    try:
        cfg = _base_config(
            config_path, roles, n, method, seed,
            False if relax_rule3 else None, None,
        )
        matrix = read_scores_csv(scores_path, cfg.roles)
        solution = solve(matrix, cfg)
    except Infeasible as exc:
        rule = f" (rule {exc.rule})" if exc.rule else ""
        _fail(f"infeasible{rule}: {exc}", EXIT_INFEASIBLE)
    except TeamCraftError as exc:
        _fail(str(exc), EXIT_ERROR)
    document = solution_document(
        matrix, solution.assembly, solution.roles, cfg,
        solution.report, with_labels=with_labels,
    )
    if output:
        write_solution_json(document, output)
        click.echo(f"wrote {output}")
    for team in document["teams"]:
        members = ", ".join(
            f"{m['id']}:{m['role']}" for m in team["members"]
        )
        click.echo(
            f"team {team['id']}: score {team['team_score']} "
            f"capacity {team['capacity']} [{members}]"
        )
    if not output:
        click.echo(json.dumps(document, sort_keys=True, indent=2))


@main.command()
@click.argument("scores_path", type=click.Path(exists=True, dir_okay=False))
@_roles_option
@_config_option
@click.option("--teams", "n", type=int, default=2)
@click.option("--methods", default="draft,maxcap,random,exhaustive-average",
              help="Comma-separated subset of draft,maxcap,random,exhaustive-average.")
@click.option("--seed", type=int, default=None)
@click.option("--bound", type=int, default=None, help="Exhaustive enumeration bound on p.")
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table")
def compare(scores_path, roles, config_path, n, methods, seed, bound, fmt):
    """Benchmark assembly methods against each other."""
    method_list = [m.strip() for m in methods.split(",") if m.strip()]
    try:
        cfg = _base_config(config_path, roles, n, None, seed, None, bound)
        matrix = read_scores_csv(scores_path, cfg.roles)
        reports = mx.compare_methods(
            matrix,
            method_list,
            n=cfg.n,
            seed=cfg.seed,
            exhaustive_bound=cfg.exhaustive_bound,
            mc_epsilon=cfg.mc.epsilon,
            mc_max_samples=cfg.mc.max_samples,
        )
    except BoundExceeded as exc:
        _fail(f"{exc} (raise with --bound)", EXIT_ERROR)
    except Infeasible as exc:
        _fail(str(exc), EXIT_INFEASIBLE)
    except TeamCraftError as exc:
        _fail(str(exc), EXIT_ERROR)
    renderers = {"table": mx.render_table, "json": mx.render_json, "csv": mx.render_csv}
    click.echo(renderers[fmt](reports))


@main.command()
@click.argument("assembly_spec")
def encode(assembly_spec):
    """Compact binary code of a two-team assembly (e.g. 2,2,1,1)."""
    try:
        ids = tuple(int(x) for x in assembly_spec.split(","))
        a = TeamAssembly(ids, 2, allow_empty_teams=True)
        e = asm.encode_assembly(a)
    except (TeamCraftError, ValueError) as exc:
        _fail(str(exc), EXIT_ERROR)
    click.echo(json.dumps({"code": e.code, "bits": e.bits(), "p": e.p}))


@main.command()
@click.argument("code", type=int)
@click.option("--participants", "p", type=int, required=True)
def decode(code, p):
    """Assembly vector for a compact binary code."""
    try:
        a = asm.decode_assembly(asm.AssemblyEncoding(code, p))
    except TeamCraftError as exc:
        _fail(str(exc), EXIT_ERROR)
    click.echo(json.dumps({"assembly": list(a.assignment), "n": a.n}))


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8571)
@click.option("--data-dir", default="teamcraft-sessions",
              help="Directory for persisted sessions.")
@click.option("--ui-dir", default=None, type=click.Path(exists=True, file_okay=False),
              help="Static directory to serve the browser UI from.")
def serve(host, port, data_dir, ui_dir):
    """Run the what-if HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(data_dir, ui_dir), host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
