"""Within-team role assignment.

The optimizer builds a square cost matrix from a team's score rows
(``alpha - score`` on role columns, zero-cost padding columns for members
beyond the role count, zero-score cells forbidden), solves it with the
Hungarian kernel, and maps padding columns back to the HELPER designation.
An exhaustive permutation search over the same rules serves as the
verification oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._kernel import solve_min_cost
from .errors import BoundExceeded, Infeasible, InvalidId, InvalidSwap
from .model import (
    HELPER,
    RoleAssignment,
    ScoreMatrix,
    Stage,
    TeamAssembly,
    rule3_violations,
    team_score,
)

#: Column label for zero-cost padding columns.
PAD = "PAD"

#: Default cap on team size for the exhaustive oracle.
BRUTE_FORCE_BOUND = 9


@dataclass(frozen=True)
class CostMatrix:
    """Square minimization form of one team's assignment problem.

    ``rows`` maps row index to participant id, ``columns`` to a role code or
    PAD. ``forbidden`` holds the (row, column) cells whose original score is
    zero; they are priced above any legal matching so the solver avoids them
    unless no legal matching exists.
    """

    costs: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...]
    columns: tuple[str, ...]
    alpha: int
    forbidden: frozenset[tuple[int, int]]

    @property
    def k(self) -> int:
        return len(self.costs)

    def big(self) -> int:
        """Cost of a forbidden cell: strictly above any legal matching."""
        return self.k * self.alpha + 1


@dataclass(frozen=True)
class TeamRoles:
    """Role designations for one team's members, plus the achieved score."""

    roles: dict[int, str]
    score: int


def build_cost_matrix(s: ScoreMatrix, a: TeamAssembly, t: int) -> CostMatrix:
    """Cost matrix for team ``t``: ``alpha - score``, padded square."""
    members = a.members(t)
    if not members:
        raise InvalidId(f"team {t} is empty")
    r = s.role_set.r
    if len(members) < r:
        raise Infeasible(
            f"team {t} has {len(members)} members but {r} roles must be filled",
            rule=1,
        )
    k = max(len(members), r)
    alpha = max(max(s.row(i)[j] for j in range(r)) for i in members)
    big = k * alpha + 1
    columns = s.role_set.roles + (PAD,) * (k - r)
    costs = []
    forbidden = set()
    for ri, i in enumerate(members):
        row = s.row(i)
        cost_row = []
        for ci in range(k):
            if ci >= r:
                cost_row.append(0)
            elif row[ci] == 0:
                cost_row.append(big)
                forbidden.add((ri, ci))
            else:
                cost_row.append(alpha - row[ci])
        costs.append(tuple(cost_row))
    return CostMatrix(tuple(costs), members, columns, alpha, frozenset(forbidden))


def hungarian_assign(c: CostMatrix) -> TeamRoles:
    """Maximum-score role assignment for one team.

    Solves the minimum-cost perfect matching of ``c``; among optimal
    matchings, returns the lexicographically smallest by (participant order,
    column index). Members matched to PAD columns become HELPER.
    """
    total, cols = solve_min_cost(c.costs)
    if any((ri, cols[ri]) in c.forbidden for ri in range(c.k)):
        raise Infeasible(
            "no role assignment avoids zero-score cells", rule=3
        )
    cols = _lexmin_matching(c.costs, total)
    roles = {}
    score = 0
    for ri, pid in enumerate(c.rows):
        col = c.columns[cols[ri]]
        if col == PAD:
            roles[pid] = HELPER
        else:
            roles[pid] = col
            score += c.alpha - c.costs[ri][cols[ri]]
    return TeamRoles(roles, score)


def optimal_team_score(s: ScoreMatrix, a: TeamAssembly, t: int) -> int:
    """Score of the optimal assignment for team ``t`` (no matching built).

    Fast path for the enumeration and Monte Carlo loops, which only need
    the value.
    """
    c = build_cost_matrix(s, a, t)
    total, cols = solve_min_cost(c.costs)
    if any((ri, cols[ri]) in c.forbidden for ri in range(c.k)):
        raise Infeasible("no role assignment avoids zero-score cells", rule=3)
    filled = sum(1 for ri in range(c.k) if c.columns[cols[ri]] != PAD)
    return filled * c.alpha - sum(
        c.costs[ri][cols[ri]] for ri in range(c.k) if c.columns[cols[ri]] != PAD
    )


def _lexmin_matching(costs, optimum: int) -> list[int]:
    """Lexicographically smallest optimal matching, row by row.

    Fixes each row to its smallest column that still admits a completion at
    the optimal total, re-solving the remaining subproblem to test each
    candidate.
    """
    k = len(costs)
    free_cols = list(range(k))
    chosen: list[int] = []
    fixed_cost = 0
    for ri in range(k):
        remaining_rows = range(ri + 1, k)
        for pos, cj in enumerate(list(free_cols)):
            candidate = fixed_cost + costs[ri][cj]
            rest_cols = free_cols[:pos] + free_cols[pos + 1 :]
            if remaining_rows:
                sub = [[costs[i][j] for j in rest_cols] for i in remaining_rows]
                sub_total, _ = solve_min_cost(sub)
                candidate += sub_total
            if candidate == optimum:
                chosen.append(cj)
                free_cols = rest_cols
                fixed_cost += costs[ri][cj]
                break
        else:  # pragma: no cover - optimum always attainable by construction
            raise AssertionError("optimal matching lost during refinement")
    return chosen


def brute_force_assign(
    s: ScoreMatrix,
    a: TeamAssembly,
    t: int,
    bound: int = BRUTE_FORCE_BOUND,
) -> TeamRoles:
    """Exhaustive maximum-score assignment for team ``t`` (oracle).

    Enumerates every injective role-to-member mapping with positive scores;
    independent of the Hungarian path. Ties resolve to the mapping whose
    member-order role vector is lexicographically smallest by column index,
    matching the optimizer's tie rule.
    """
    members = a.members(t)
    if len(members) > bound:
        raise BoundExceeded(
            f"team size {len(members)} exceeds brute-force bound {bound}"
        )
    r = s.role_set.r
    if len(members) < r:
        raise Infeasible(
            f"team {t} has {len(members)} members but {r} roles must be filled",
            rule=1,
        )
    rows = [s.row(i) for i in members]
    best_score = -1
    best_key = None
    best_holders = None
    # holders[j] = member index taking role j
    for holders in itertools.permutations(range(len(members)), r):
        score = 0
        ok = True
        for j, m in enumerate(holders):
            cell = rows[m][j]
            if cell == 0:
                ok = False
                break
            score += cell
        if not ok:
            continue
        key = _member_order_key(holders, len(members), r)
        if score > best_score or (score == best_score and key < best_key):
            best_score = score
            best_key = key
            best_holders = holders
    if best_holders is None:
        raise Infeasible("no role assignment avoids zero-score cells", rule=3)
    roles = {i: HELPER for i in members}
    for j, m in enumerate(best_holders):
        roles[members[m]] = s.role_set.roles[j]
    return TeamRoles(roles, best_score)


def _member_order_key(holders, size: int, r: int) -> tuple[int, ...]:
    # Column index per member (PADs sort after real roles), member order.
    key = [r] * size
    for j, m in enumerate(holders):
        key[m] = j
    return tuple(key)


def assign_roles(s: ScoreMatrix, a: TeamAssembly) -> tuple[RoleAssignment, dict[int, int]]:
    """Optimal initial role assignment across all teams.

    Returns the merged length-p role vector (stage INITIAL) and the score
    per team.
    """
    designations = [HELPER] * s.p
    scores: dict[int, int] = {}
    for t in range(1, a.n + 1):
        result = hungarian_assign(build_cost_matrix(s, a, t))
        for pid, role in result.roles.items():
            designations[pid - 1] = role
        scores[t] = result.score
    ra = RoleAssignment(tuple(designations), Stage.INITIAL)
    for t in range(1, a.n + 1):
        assert scores[t] == team_score(s, a, ra, t)
    return ra, scores


def apply_swap(
    ra: RoleAssignment,
    a: TeamAssembly,
    s: ScoreMatrix,
    i: int,
    j: int,
) -> tuple[RoleAssignment, list[str]]:
    """Exchange the role designations of participants ``i`` and ``j``.

    Both must belong to the same team. Swaps that leave a participant on a
    zero-score role are permitted (the discussion phase overrides the
    optimizer) but reported in the returned warning list.
    """
    if a.team_of(i) != a.team_of(j):
        raise InvalidSwap(
            f"participants {i} and {j} are on different teams"
        )
    designations = list(ra.assignment)
    designations[i - 1], designations[j - 1] = designations[j - 1], designations[i - 1]
    swapped = RoleAssignment(tuple(designations), ra.stage)
    warnings = rule3_violations(s, a, swapped, a.team_of(i))
    return swapped, warnings
