"""Composition of the solve pipeline: feasibility, assembly, roles, metrics."""

from __future__ import annotations

from dataclasses import dataclass

from . import assembly as asm
from .assignment import assign_roles
from .errors import Infeasible, Unsupported
from .feasibility import check_role_coverage
from .io import SolveConfig
from .metrics import AssemblyReport, assembly_report
from .model import RoleAssignment, ScoreMatrix, TeamAssembly

ASSEMBLY_METHODS = ("draft", "maxcap", "random", "exhaustive")


@dataclass(frozen=True)
class Solution:
    scores: ScoreMatrix
    config: SolveConfig
    assembly: TeamAssembly
    roles: RoleAssignment
    team_scores: dict[int, int]
    report: AssemblyReport
    feasibility_violations: tuple


def assemble(s: ScoreMatrix, config: SolveConfig) -> TeamAssembly:
    """Produce a team assembly with the configured method."""
    method = config.method
    if method == "draft":
        return asm.snake_draft(s, config.n)
    if method == "maxcap":
        return asm.max_capacity_team1(s, config.n)
    if method == "random":
        if config.n != 2:
            raise Unsupported("random assembly is defined for two teams")
        best = _best_random_assembly(s, config)
        return best
    if method == "exhaustive":
        if config.n != 2:
            raise Unsupported("exhaustive assembly is defined for two teams")
        a, _ = asm.best_balanced_assembly(s, bound=config.exhaustive_bound)
        return a
    raise Unsupported(f"unknown assembly method {method!r}")


def _best_random_assembly(s: ScoreMatrix, config: SolveConfig) -> TeamAssembly:
    # One uniformly drawn assembly per the configured mode; the Monte Carlo
    # *statistics* live in assembly.random_assembly_mc.
    import numpy as np

    rng = np.random.default_rng(config.seed)
    p = s.p
    if config.mc.mode == "balanced":
        half = p // 2
        count = half if p % 2 == 0 else half + int(rng.integers(0, 2))
        team2 = set(int(x) + 1 for x in rng.choice(p, size=count, replace=False))
        assignment = tuple(2 if i in team2 else 1 for i in range(1, p + 1))
    else:
        bits = rng.integers(0, 2, size=p)
        while bits.min() == bits.max():
            bits = rng.integers(0, 2, size=p)
        assignment = tuple(int(b) + 1 for b in bits)
    return TeamAssembly(assignment, 2)


def solve(s: ScoreMatrix, config: SolveConfig) -> Solution:
    """Full pipeline: feasibility gate, assembly, role assignment, metrics."""
    feasibility = check_role_coverage(s, config.n)
    if not feasibility.feasible:
        first = feasibility.violations[0]
        raise Infeasible(first.detail, rule=first.rule)
    a = assemble(s, config)
    ra, team_scores = assign_roles(s, a)
    # Averaged-balanced reference capacity is total/2 exactly for two teams.
    reference = s.total() / 2 if config.n == 2 else None
    report = assembly_report(
        s, a, config.method, team_scores, reference_capacity=reference
    )
    return Solution(s, config, a, ra, team_scores, report, feasibility.violations)
