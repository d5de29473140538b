"""Comparison statistics: capacities, scores, spread, percentage deltas.

Internal values keep full precision; display formatting mirrors the five
significant figures used in the published comparison (e.g. +2.0821%).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from . import assembly as asm
from .assignment import assign_roles
from .errors import InvalidInput, Unsupported
from .model import ScoreMatrix, TeamAssembly, team_capacity

#: Assembly methods understood by the comparison harness.
COMPARE_METHODS = ("draft", "maxcap", "random", "exhaustive-average")


@dataclass(frozen=True)
class TeamStats:
    capacity: float
    team_score: float
    member_capacity_sigma: float


@dataclass(frozen=True)
class AssemblyReport:
    """Per-method comparison row.

    ``cross_team`` holds team-1-vs-team-2 percentage deltas (n=2 only);
    ``baseline_deltas`` holds per-team capacity deltas against the
    averaged-balanced reference capacity, keyed by baseline name.
    """

    method: str
    per_team: tuple[TeamStats, ...]
    cross_team: dict[str, float] = field(default_factory=dict)
    baseline_deltas: dict[str, tuple[float, ...]] = field(default_factory=dict)
    samples: int | None = None
    converged: bool | None = None


def within_team_sigma(s: ScoreMatrix, a: TeamAssembly, t: int) -> float:
    """Population standard deviation of member capacities of team ``t``."""
    caps = [sum(s.row(i)) for i in a.members(t)]
    mean = sum(caps) / len(caps)
    return math.sqrt(sum((c - mean) ** 2 for c in caps) / len(caps))


def pct_delta(x: float, ref: float) -> float:
    """Percentage difference (x/ref - 1) * 100."""
    if ref <= 0:
        raise InvalidInput("reference value must be positive")
    return (x / ref - 1) * 100


def format_pct(value: float) -> str:
    """Five-significant-figure display form, e.g. +2.0821% / -31.645%."""
    return f"{'+' if value >= 0 else '-'}{abs(value):#.5g}%"


def assembly_report(
    s: ScoreMatrix,
    a: TeamAssembly,
    method: str = "draft",
    team_scores: dict[int, int] | None = None,
    reference_capacity: float | None = None,
) -> AssemblyReport:
    """Report for one concrete assembly with optimal role assignment."""
    if team_scores is None:
        _, team_scores = assign_roles(s, a)
    per_team = tuple(
        TeamStats(
            capacity=team_capacity(s, a, t),
            team_score=team_scores[t],
            member_capacity_sigma=within_team_sigma(s, a, t),
        )
        for t in range(1, a.n + 1)
    )
    cross = {}
    if a.n == 2:
        cross["capacity_pct_delta"] = pct_delta(
            per_team[0].capacity, per_team[1].capacity
        )
        cross["score_pct_delta"] = pct_delta(
            per_team[0].team_score, per_team[1].team_score
        )
    baselines = {}
    if reference_capacity is not None:
        baselines["averaged-balanced"] = tuple(
            pct_delta(ts.capacity, reference_capacity) for ts in per_team
        )
    return AssemblyReport(method, per_team, cross, baselines)


def compare_methods(
    s: ScoreMatrix,
    methods: list[str],
    n: int = 2,
    seed: int = 0,
    exhaustive_bound: int = asm.EXHAUSTIVE_BOUND,
    mc_epsilon: float = 0.01,
    mc_max_samples: int = 100_000,
) -> list[AssemblyReport]:
    """Run each assembly method and tabulate capacity / sigma / score."""
    for m in methods:
        if m not in COMPARE_METHODS:
            raise Unsupported(f"unknown comparison method {m!r}")
        if m != "draft" and n != 2:
            raise Unsupported(f"method {m!r} is defined for two teams")

    # The averaged-balanced capacity equals half the matrix total exactly,
    # so the reference never needs the enumeration itself.
    reference = s.total() / 2 if n == 2 else None

    reports = []
    for m in methods:
        if m == "draft":
            a = asm.snake_draft(s, n)
            reports.append(assembly_report(s, a, m, reference_capacity=reference))
        elif m == "maxcap":
            a = asm.max_capacity_team1(s, n)
            reports.append(assembly_report(s, a, m, reference_capacity=reference))
        elif m == "random":
            mc = asm.random_assembly_mc(
                s, epsilon=mc_epsilon, max_samples=mc_max_samples, seed=seed
            )
            reports.append(
                _mean_report(
                    m,
                    mc.mean_capacities,
                    mc.mean_team_scores,
                    mc.mean_member_sigmas,
                    reference,
                    samples=mc.samples,
                    converged=mc.converged,
                )
            )
        else:  # exhaustive-average
            stats = asm.averaged_balanced_stats(s, bound=exhaustive_bound)
            reports.append(
                _mean_report(
                    m,
                    stats.mean_capacities,
                    stats.mean_team_scores,
                    stats.mean_member_sigmas,
                    reference,
                    samples=stats.assemblies,
                )
            )
    return reports


def _mean_report(
    method, capacities, scores, sigmas, reference, samples=None, converged=None
) -> AssemblyReport:
    per_team = tuple(
        TeamStats(capacities[t], scores[t], sigmas[t]) for t in range(len(capacities))
    )
    cross = {}
    if len(per_team) == 2:
        cross["capacity_pct_delta"] = pct_delta(capacities[0], capacities[1])
        cross["score_pct_delta"] = pct_delta(scores[0], scores[1])
    baselines = {}
    if reference is not None:
        baselines["averaged-balanced"] = tuple(
            pct_delta(c, reference) for c in capacities
        )
    return AssemblyReport(method, per_team, cross, baselines, samples, converged)


def reports_to_dicts(reports: list[AssemblyReport]) -> list[dict]:
    rows = []
    for rep in reports:
        row: dict = {"method": rep.method}
        for t, ts in enumerate(rep.per_team, start=1):
            row[f"team{t}_capacity"] = ts.capacity
            row[f"team{t}_sigma"] = ts.member_capacity_sigma
            row[f"team{t}_score"] = ts.team_score
        row.update(rep.cross_team)
        for name, deltas in rep.baseline_deltas.items():
            for t, d in enumerate(deltas, start=1):
                row[f"team{t}_capacity_vs_{name}"] = d
        if rep.samples is not None:
            row["samples"] = rep.samples
        if rep.converged is not None:
            row["converged"] = rep.converged
        rows.append(row)
    return rows


def render_json(reports: list[AssemblyReport]) -> str:
    return json.dumps(reports_to_dicts(reports), sort_keys=True, indent=2)


def render_csv(reports: list[AssemblyReport]) -> str:
    rows = reports_to_dicts(reports)
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def render_table(reports: list[AssemblyReport]) -> str:
    rows = reports_to_dicts(reports)
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [[_fmt_cell(row.get(c, "")) for c in columns] for row in rows]
    widths = [
        max(len(c), *(len(line[i]) for line in cells)) if cells else len(c)
        for i, c in enumerate(columns)
    ]
    header = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
    sep = "  ".join("-" * w for w in widths)
    body = "\n".join("  ".join(v.ljust(w) for v, w in zip(line, widths)) for line in cells)
    return "\n".join([header, sep, body]) if cells else header


def _fmt_cell(value) -> str:
    if isinstance(value, bool) or value == "":
        return str(value)
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)
