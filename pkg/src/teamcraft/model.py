"""Core value types: roster, roles, score matrix, assemblies and assignments.

Participants are identified by 1-based integer ids throughout. All types are
immutable and safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InconsistentInput, InvalidId, InvalidInput

#: Universe of role codes, in canonical column order: Investigation, Design,
#: Analysis, Implementation, Testing and Evaluation, Coordination.
ROLE_UNIVERSE = ("IN", "DE", "AN", "IM", "TE", "CO")

#: Designation for a team member who supports the team without holding a
#: role of their own; contributes 0 to the team score.
HELPER = "HELPER"


class Stage(enum.Enum):
    """Lifecycle stage of a role assignment."""

    INITIAL = "INITIAL"
    FINAL = "FINAL"


@dataclass(frozen=True)
class Roster:
    """Ordered participant ids 1..p, with optional display labels."""

    participants: tuple[int, ...]
    display_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        p = len(self.participants)
        if p < 1:
            raise InvalidInput("roster must contain at least one participant")
        if self.participants != tuple(range(1, p + 1)):
            raise InvalidInput("participant ids must be exactly 1..p in order")
        if self.display_labels is not None and len(self.display_labels) != p:
            raise InvalidInput("display_labels length must match participant count")

    @classmethod
    def of_size(cls, p: int, labels: tuple[str, ...] | None = None) -> "Roster":
        return cls(tuple(range(1, p + 1)), labels)

    @property
    def p(self) -> int:
        return len(self.participants)


@dataclass(frozen=True)
class RoleSet:
    """Ordered, duplicate-free subset of the six-role universe."""

    roles: tuple[str, ...]

    def __post_init__(self):
        if not self.roles:
            raise InvalidInput("role set must not be empty")
        if len(set(self.roles)) != len(self.roles):
            raise InvalidInput("duplicate role codes")
        for code in self.roles:
            if code not in ROLE_UNIVERSE:
                raise InvalidInput(f"unknown role code {code!r}")

    @property
    def r(self) -> int:
        return len(self.roles)

    def index(self, code: str) -> int:
        try:
            return self.roles.index(code)
        except ValueError:
            raise InvalidInput(f"role {code!r} not in role set") from None


@dataclass(frozen=True)
class ScoreMatrix:
    """p x r matrix of non-negative integer skill scores.

    Rows follow roster order (participant 1 first); columns follow the role
    set order.
    """

    scores: tuple[tuple[int, ...], ...]
    roster: Roster
    role_set: RoleSet

    def __post_init__(self):
        if len(self.scores) != self.roster.p:
            raise InvalidInput("score row count must equal roster size")
        for row in self.scores:
            if len(row) != self.role_set.r:
                raise InvalidInput("score column count must equal role count")
            for cell in row:
                if not isinstance(cell, int) or cell < 0:
                    raise InvalidInput("scores must be non-negative integers")

    @classmethod
    def from_rows(
        cls,
        rows,
        roles,
        labels: tuple[str, ...] | None = None,
    ) -> "ScoreMatrix":
        scores = tuple(tuple(int(c) for c in row) for row in rows)
        return cls(scores, Roster.of_size(len(scores), labels), RoleSet(tuple(roles)))

    @property
    def p(self) -> int:
        return self.roster.p

    @property
    def r(self) -> int:
        return self.role_set.r

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.p:
            raise InvalidId(f"participant id {i} out of range 1..{self.p}")
        return self.scores[i - 1]

    def score(self, i: int, role: str) -> int:
        return self.row(i)[self.role_set.index(role)]

    def total(self) -> int:
        return sum(sum(row) for row in self.scores)


@dataclass(frozen=True)
class TeamAssembly:
    """Length-p vector mapping each participant to a team id in 1..n.

    Every team is normally required to be non-empty. ``allow_empty_teams``
    exists only for the degenerate compact-encoding and enumeration paths
    (e.g. code 0, or p < n) where an empty team is representable; the solve
    pipeline never produces such assemblies.
    """

    assignment: tuple[int, ...]
    n: int
    allow_empty_teams: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("team count must be >= 1")
        if not self.assignment:
            raise InvalidInput("assembly must cover at least one participant")
        for t in self.assignment:
            if not isinstance(t, int) or not 1 <= t <= self.n:
                raise InvalidId(f"team id {t} out of range 1..{self.n}")
        if not self.allow_empty_teams:
            seen = set(self.assignment)
            missing = [t for t in range(1, self.n + 1) if t not in seen]
            if missing:
                raise InvalidInput(f"teams {missing} have no members")

    @property
    def p(self) -> int:
        return len(self.assignment)

    def team_of(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise InvalidId(f"participant id {i} out of range 1..{self.p}")
        return self.assignment[i - 1]

    def members(self, t: int) -> tuple[int, ...]:
        """Participant ids of team ``t``, ascending."""
        if not 1 <= t <= self.n:
            raise InvalidId(f"team id {t} out of range 1..{self.n}")
        return tuple(i + 1 for i, team in enumerate(self.assignment) if team == t)


@dataclass(frozen=True)
class RoleAssignment:
    """Length-p vector of role codes (or HELPER) per participant."""

    assignment: tuple[str, ...]
    stage: Stage = Stage.INITIAL

    def __post_init__(self):
        for code in self.assignment:
            if code != HELPER and code not in ROLE_UNIVERSE:
                raise InvalidInput(f"unknown role designation {code!r}")

    @property
    def p(self) -> int:
        return len(self.assignment)

    def role_of(self, i: int) -> str:
        if not 1 <= i <= self.p:
            raise InvalidId(f"participant id {i} out of range 1..{self.p}")
        return self.assignment[i - 1]


@dataclass(frozen=True)
class CapacityVector:
    """Per-participant capacity: the row sum of the score matrix."""

    capacities: tuple[int, ...]

    @classmethod
    def from_matrix(cls, s: ScoreMatrix) -> "CapacityVector":
        return cls(tuple(sum(row) for row in s.scores))


def participant_capacity(s: ScoreMatrix, i: int) -> int:
    """Sum of participant ``i``'s scores across all roles."""
    return sum(s.row(i))


def team_capacity(s: ScoreMatrix, a: TeamAssembly, t: int) -> int:
    """Sum of member capacities of team ``t``."""
    _check_consistent(s, a)
    return sum(participant_capacity(s, i) for i in a.members(t))


def team_score(s: ScoreMatrix, a: TeamAssembly, ra: RoleAssignment, t: int) -> int:
    """Sum of each member's score in their assigned role; HELPER counts 0."""
    _check_consistent(s, a)
    if ra.p != s.p:
        raise InconsistentInput("role assignment length must equal roster size")
    total = 0
    for i in a.members(t):
        role = ra.role_of(i)
        if role != HELPER:
            total += s.score(i, role)
    return total


def validate_role_assignment(
    s: ScoreMatrix,
    a: TeamAssembly,
    ra: RoleAssignment,
    rule3_strict: bool = True,
) -> list[str]:
    """Check the per-team role-assignment rules; returns violation messages.

    Rule 1 (every role filled once the team is large enough) and rule 2 (no
    role duplicated within a team) always fail validation; rule 3 (no role
    held with a zero score) fails only when ``rule3_strict``, otherwise it is
    reported as a warning-style message by the caller's choice.
    """
    _check_consistent(s, a)
    if ra.p != s.p:
        raise InconsistentInput("role assignment length must equal roster size")
    problems = []
    r = s.role_set.r
    for t in range(1, a.n + 1):
        members = a.members(t)
        held = [ra.role_of(i) for i in members if ra.role_of(i) != HELPER]
        dupes = {role for role in held if held.count(role) > 1}
        for role in sorted(dupes):
            problems.append(f"rule 2: role {role} held by multiple members of team {t}")
        if len(members) >= r:
            for role in s.role_set.roles:
                if role not in held:
                    problems.append(f"rule 1: role {role} unfilled in team {t}")
        if rule3_strict:
            problems.extend(rule3_violations(s, a, ra, t))
    return problems


def rule3_violations(
    s: ScoreMatrix, a: TeamAssembly, ra: RoleAssignment, t: int
) -> list[str]:
    """Messages for members of team ``t`` holding a role they scored 0 in."""
    out = []
    for i in a.members(t):
        role = ra.role_of(i)
        if role != HELPER and s.score(i, role) == 0:
            out.append(
                f"rule 3: participant {i} holds role {role} with a zero score"
            )
    return out


def _check_consistent(s: ScoreMatrix, a: TeamAssembly) -> None:
    if a.p != s.p:
        raise InconsistentInput("assembly length must equal roster size")
