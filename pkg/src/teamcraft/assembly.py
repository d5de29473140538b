"""Team assembly: the capacity snake draft plus comparison baselines.

Baselines cover the two-team case analyzed in the comparison harness:
max-capacity-for-team-1, uniform random sampling (Monte Carlo), and
exhaustive enumeration of balanced assemblies under the compact binary
encoding.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .assignment import optimal_team_score
from .errors import (
    BoundExceeded,
    Infeasible,
    InvalidCode,
    InvalidConfig,
    Unsupported,
)
from .model import CapacityVector, ScoreMatrix, TeamAssembly, team_capacity

#: Largest p for which exhaustive balanced enumeration is allowed by default.
EXHAUSTIVE_BOUND = 20

#: Samples between the two running-mean checkpoints of the convergence test.
MC_WINDOW = 1000


@dataclass(frozen=True)
class AssemblyEncoding:
    """Compact binary form of a two-team assembly.

    Bit i, counted from the most significant of a p-bit string, carries
    participant i+1: bit 1 puts them in team 2, bit 0 in team 1.
    """

    code: int
    p: int

    def __post_init__(self):
        if not 0 <= self.code < (1 << self.p):
            raise InvalidCode(f"code {self.code} out of range for p={self.p}")

    def bits(self) -> str:
        return format(self.code, f"0{self.p}b")


@dataclass(frozen=True)
class MonteCarloResult:
    """Running-mean summary of a random-assembly simulation."""

    samples: int
    mean_team_scores: tuple[float, float]
    mean_capacities: tuple[float, float]
    mean_member_sigmas: tuple[float, float]
    standard_error: float
    converged: bool
    skipped_infeasible: int


@dataclass(frozen=True)
class BalancedAverages:
    """Exhaustive means over every balanced two-team assembly."""

    assemblies: int
    mean_capacities: tuple[float, float]
    mean_team_scores: tuple[float, float]
    mean_member_sigmas: tuple[float, float]
    skipped_infeasible: int


def snake_draft(s: ScoreMatrix, n: int) -> TeamAssembly:
    """Capacity-ordered snake draft into ``n`` teams.

    Teams pick in order 1..n, then n..1, alternating every round; each pick
    takes the highest-capacity remaining participant (lower id on ties).
    """
    if n < 1:
        raise InvalidConfig("team count must be >= 1")
    p = s.p
    if n > p:
        raise Infeasible(f"cannot form {n} teams from {p} participants", rule=1)
    capacities = CapacityVector.from_matrix(s).capacities
    order = sorted(range(1, p + 1), key=lambda i: (-capacities[i - 1], i))
    assignment = [0] * p
    forward = list(range(1, n + 1))
    pick_round = 0
    idx = 0
    while idx < p:
        teams = forward if pick_round % 2 == 0 else forward[::-1]
        for t in teams:
            if idx >= p:
                break
            assignment[order[idx] - 1] = t
            idx += 1
        pick_round += 1
    return TeamAssembly(tuple(assignment), n)


def max_capacity_team1(s: ScoreMatrix, n: int = 2) -> TeamAssembly:
    """Most imbalanced balanced-size split: top half of capacities to team 1."""
    if n != 2:
        raise Unsupported("max-capacity baseline is defined for two teams")
    p = s.p
    if p < 2:
        raise Infeasible("two teams need at least two participants", rule=1)
    capacities = CapacityVector.from_matrix(s).capacities
    order = sorted(range(1, p + 1), key=lambda i: (-capacities[i - 1], i))
    team1 = set(order[: math.ceil(p / 2)])
    assignment = tuple(1 if i in team1 else 2 for i in range(1, p + 1))
    return TeamAssembly(assignment, 2)


def encode_assembly(a: TeamAssembly) -> AssemblyEncoding:
    """Compact binary encoding of a two-team assembly."""
    if a.n != 2:
        raise Unsupported("compact encoding is defined for two teams")
    code = 0
    for t in a.assignment:
        code = (code << 1) | (t - 1)
    return AssemblyEncoding(code, a.p)


def decode_assembly(e: AssemblyEncoding) -> TeamAssembly:
    """Inverse of :func:`encode_assembly`; accepts degenerate codes."""
    bits = e.bits()
    assignment = tuple(2 if b == "1" else 1 for b in bits)
    return TeamAssembly(assignment, 2, allow_empty_teams=True)


def same_popcount_codes(p: int, ones: int):
    """All p-bit codes with exactly ``ones`` set bits, ascending (Gosper)."""
    if ones == 0:
        yield 0
        return
    limit = 1 << p
    code = (1 << ones) - 1
    while code < limit:
        yield code
        low = code & -code
        ripple = code + low
        code = ripple | (((code ^ ripple) >> 2) // low)


def enumerate_balanced(p: int, n: int = 2, bound: int = EXHAUSTIVE_BOUND):
    """Every two-team assembly whose team sizes differ by at most one.

    Yields assemblies in ascending encoding order, each exactly once. Team
    labels are significant: an assembly and its complement are distinct.
    """
    if n != 2:
        raise Unsupported("exhaustive enumeration is defined for two teams")
    if p > bound:
        raise BoundExceeded(f"p={p} exceeds exhaustive bound {bound}")
    half = p // 2
    counts = {half, p - half}
    streams = [same_popcount_codes(p, k) for k in sorted(counts)]
    for code in heapq.merge(*streams):
        yield decode_assembly(AssemblyEncoding(code, p))


def balanced_assembly_count(p: int) -> int:
    """Number of assemblies :func:`enumerate_balanced` yields for ``p``."""
    if p % 2 == 0:
        return math.comb(p, p // 2)
    return math.comb(p, p // 2) + math.comb(p, p // 2 + 1)


def best_balanced_assembly(
    s: ScoreMatrix, bound: int = EXHAUSTIVE_BOUND
) -> tuple[TeamAssembly, tuple[int, int]]:
    """Balanced assembly maximizing the summed optimal team score.

    Exhaustive two-team baseline; ties resolve to the smallest encoding.
    Assemblies with no feasible role assignment are skipped.
    """
    best = None
    best_scores = None
    for a in enumerate_balanced(s.p, bound=bound):
        try:
            scores = (optimal_team_score(s, a, 1), optimal_team_score(s, a, 2))
        except Infeasible:
            continue
        if best is None or sum(scores) > sum(best_scores):
            best, best_scores = a, scores
    if best is None:
        raise Infeasible("no balanced assembly admits a role assignment", rule=3)
    return best, best_scores


def averaged_balanced_stats(
    s: ScoreMatrix, bound: int = EXHAUSTIVE_BOUND
) -> BalancedAverages:
    """Means over all balanced assemblies: capacity, optimal score, sigma.

    The mean capacity equals half the matrix total exactly, by complement
    symmetry. Assemblies where a team has no feasible role assignment are
    excluded from every mean (the excluded set is complement-closed, so the
    capacity identity survives).
    """
    cap_sums = [0, 0]
    score_sums = [0, 0]
    sigma_sums = [0.0, 0.0]
    count = 0
    skipped = 0
    for a in enumerate_balanced(s.p, bound=bound):
        try:
            scores = (optimal_team_score(s, a, 1), optimal_team_score(s, a, 2))
        except Infeasible:
            skipped += 1
            continue
        count += 1
        for t in (1, 2):
            cap_sums[t - 1] += team_capacity(s, a, t)
            score_sums[t - 1] += scores[t - 1]
            sigma_sums[t - 1] += _member_sigma(s, a, t)
    if count == 0:
        raise Infeasible("no balanced assembly admits a role assignment", rule=3)
    return BalancedAverages(
        assemblies=count,
        mean_capacities=(cap_sums[0] / count, cap_sums[1] / count),
        mean_team_scores=(score_sums[0] / count, score_sums[1] / count),
        mean_member_sigmas=(sigma_sums[0] / count, sigma_sums[1] / count),
        skipped_infeasible=skipped,
    )


def random_assembly_mc(
    s: ScoreMatrix,
    mode: str = "balanced",
    epsilon: float = 0.01,
    max_samples: int = 100_000,
    seed: int = 0,
    window: int = MC_WINDOW,
) -> MonteCarloResult:
    """Monte Carlo estimate of team capacity and optimal score means.

    ``balanced`` samples uniformly over assemblies whose team sizes differ
    by at most one; ``unconstrained`` draws uniform p-bit codes, redrawing
    any that leave a team empty. Each accepted assembly is scored with the
    optimal role assignment. The run converges when the running mean of the
    per-sample team score moves by less than ``epsilon`` across ``window``
    samples.
    """
    if max_samples < 1:
        raise InvalidConfig("max_samples must be >= 1")
    if mode not in ("balanced", "unconstrained"):
        raise InvalidConfig(f"unknown sampling mode {mode!r}")
    if s.p < 2:
        raise InvalidConfig("sampling needs at least two participants")
    rng = np.random.default_rng(seed)
    p = s.p
    half = p // 2

    cap_sums = [0, 0]
    score_sums = [0, 0]
    sigma_sums = [0.0, 0.0]
    stat_sum = 0  # sum over samples of (score_1 + score_2)
    stat_sq_sum = 0
    history: list[float] = []
    samples = 0
    skipped = 0
    converged = False
    attempt_cap = 10 * max_samples + 1000

    while samples < max_samples and samples + skipped < attempt_cap:
        if mode == "balanced":
            count = half if p % 2 == 0 else half + int(rng.integers(0, 2))
            team2 = rng.choice(p, size=count, replace=False)
            assignment = [1] * p
            for i in team2:
                assignment[i] = 2
        else:
            bits = rng.integers(0, 2, size=p)
            while bits.min() == bits.max():  # empty team: redraw
                bits = rng.integers(0, 2, size=p)
            assignment = [int(b) + 1 for b in bits]
        a = TeamAssembly(tuple(assignment), 2)
        try:
            scores = (optimal_team_score(s, a, 1), optimal_team_score(s, a, 2))
        except Infeasible:
            skipped += 1
            continue
        samples += 1
        for t in (1, 2):
            cap_sums[t - 1] += team_capacity(s, a, t)
            score_sums[t - 1] += scores[t - 1]
            sigma_sums[t - 1] += _member_sigma(s, a, t)
        total = scores[0] + scores[1]
        stat_sum += total
        stat_sq_sum += total * total
        history.append(stat_sum / (2 * samples))
        if samples > window and abs(history[-1] - history[-1 - window]) < epsilon:
            converged = True
            break

    if samples == 0:
        raise Infeasible("every sampled assembly was infeasible", rule=3)
    mean_total = stat_sum / samples
    if samples > 1:
        var_total = (stat_sq_sum - stat_sum * mean_total) / (samples - 1)
        standard_error = math.sqrt(max(var_total, 0.0) / samples) / 2
    else:
        standard_error = 0.0
    return MonteCarloResult(
        samples=samples,
        mean_team_scores=(score_sums[0] / samples, score_sums[1] / samples),
        mean_capacities=(cap_sums[0] / samples, cap_sums[1] / samples),
        mean_member_sigmas=(sigma_sums[0] / samples, sigma_sums[1] / samples),
        standard_error=standard_error,
        converged=converged,
        skipped_infeasible=skipped,
    )


def _member_sigma(s: ScoreMatrix, a: TeamAssembly, t: int) -> float:
    caps = [sum(s.row(i)) for i in a.members(t)]
    mean = sum(caps) / len(caps)
    return math.sqrt(sum((c - mean) ** 2 for c in caps) / len(caps))
