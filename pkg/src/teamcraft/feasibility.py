"""Feasibility checks for a (score matrix, role set, team count) instance.

The counting checks mirror the construction rules: enough participants per
team to fill every role, and enough positive-score holders of each role to
cover every team. The exact check additionally verifies that a perfect
positive-score matching exists per team; the counting conditions are
necessary but not sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignment import build_cost_matrix, hungarian_assign
from .errors import Infeasible
from .model import ScoreMatrix, TeamAssembly


@dataclass(frozen=True)
class Violation:
    rule: int
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...]
    per_role_coverage: dict[str, int]

    def __post_init__(self):
        assert self.feasible == (not self.violations)


def check_team_count(p: int, r: int, n: int) -> bool:
    """True iff n teams of at least r members fit into p participants."""
    if p < 1 or r < 1 or n < 1:
        raise Infeasible("p, r and n must all be >= 1")
    return n <= p // r


def check_role_coverage(
    s: ScoreMatrix, n: int, strict: bool = False
) -> FeasibilityReport:
    """Counting feasibility: team-count bound plus per-role coverage.

    Each role needs at least ``n`` participants with a positive score, one
    per team. ``strict`` demands strictly more than ``n`` holders instead
    (the literal "exceed" reading).
    """
    p, r = s.p, s.r
    violations = []
    if not check_team_count(p, r, n):
        violations.append(
            Violation(
                rule=1,
                detail=(
                    f"{n} teams need {n * r} participants for {r} roles each "
                    f"but only {p} exist (n <= floor(p/r) = {p // r})"
                ),
            )
        )
    coverage = {}
    for j, role in enumerate(s.role_set.roles):
        holders = sum(1 for row in s.scores if row[j] > 0)
        coverage[role] = holders
        enough = holders > n if strict else holders >= n
        if not enough:
            need = "more than" if strict else "at least"
            violations.append(
                Violation(
                    rule=3,
                    detail=(
                        f"role {role} has {holders} positive-score holders; "
                        f"{need} {n} needed to cover every team"
                    ),
                )
            )
    return FeasibilityReport(not violations, tuple(violations), coverage)


def check_exact_feasibility(s: ScoreMatrix, a: TeamAssembly) -> bool:
    """True iff every team admits a perfect positive-score role matching."""
    for t in range(1, a.n + 1):
        try:
            hungarian_assign(build_cost_matrix(s, a, t))
        except Infeasible:
            return False
    return True
