"""Team construction from participant-by-role skill scores.

Turns a score matrix into balanced teams (capacity snake draft) and optimal
within-team role assignments (Hungarian algorithm on an alpha-minus-score
cost matrix), benchmarks the approach against exhaustive and random
baselines, and backs a what-if phase where humans adjust roles with live
score feedback.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .model import (
    HELPER,
    ROLE_UNIVERSE,
    CapacityVector,
    RoleAssignment,
    RoleSet,
    Roster,
    ScoreMatrix,
    Stage,
    TeamAssembly,
    participant_capacity,
    team_capacity,
    team_score,
)

__version__ = "0.1.0"

__all__ = [
    "HELPER",
    "KERNEL_BACKEND",
    "ROLE_UNIVERSE",
    "CapacityVector",
    "RoleAssignment",
    "RoleSet",
    "Roster",
    "ScoreMatrix",
    "Stage",
    "TeamAssembly",
    "participant_capacity",
    "team_capacity",
    "team_score",
    "__version__",
]
