"""File formats: CSV score ingestion, solve configuration, solution JSON.

The CSV header is ``participant`` followed by role-code columns (an optional
``label`` column carries display names). The configured role order, not the
file's column order, decides the matrix layout. Solution documents are
canonical JSON: sorted keys, two-space indent, byte-stable across runs.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidConfig, IoError, MissingRole, ParseError
from .metrics import AssemblyReport, within_team_sigma
from .model import (
    HELPER,
    ROLE_UNIVERSE,
    RoleAssignment,
    ScoreMatrix,
    Stage,
    TeamAssembly,
    team_capacity,
    team_score,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class McConfig:
    mode: str = "balanced"
    epsilon: float = 0.01
    max_samples: int = 100_000


@dataclass(frozen=True)
class SolveConfig:
    """Everything the pipeline needs besides the score matrix."""

    roles: tuple[str, ...]
    n: int = 1
    method: str = "draft"
    seed: int = 0
    rule3_strict: bool = True
    exhaustive_bound: int = 20
    mc: McConfig = field(default_factory=McConfig)

    def __post_init__(self):
        if not self.roles or len(set(self.roles)) != len(self.roles):
            raise InvalidConfig("roles must be a nonempty list without duplicates")
        for code in self.roles:
            if code not in ROLE_UNIVERSE:
                raise InvalidConfig(f"unknown role code {code!r}")
        if self.n < 1:
            raise InvalidConfig("team count must be >= 1")

    @classmethod
    def from_dict(cls, data: dict) -> "SolveConfig":
        data = dict(data)
        mc = data.pop("mc", None)
        if mc is not None:
            data["mc"] = McConfig(**mc)
        if "roles" in data:
            data["roles"] = tuple(data["roles"])
        try:
            return cls(**data)
        except TypeError as exc:
            raise InvalidConfig(str(exc)) from None

    def to_dict(self) -> dict:
        return {
            "roles": list(self.roles),
            "n": self.n,
            "method": self.method,
            "seed": self.seed,
            "rule3_strict": self.rule3_strict,
            "exhaustive_bound": self.exhaustive_bound,
            "mc": {
                "mode": self.mc.mode,
                "epsilon": self.mc.epsilon,
                "max_samples": self.mc.max_samples,
            },
        }


def load_config(path: str | Path) -> SolveConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            return SolveConfig.from_dict(json.load(fh))
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidConfig(f"config {path} is not valid JSON: {exc}") from exc


def read_scores_csv(path: str | Path, roles) -> ScoreMatrix:
    """Read a participant x role score CSV into the configured role order.

    Role columns absent from ``roles`` are dropped with a warning; a
    configured role missing from the header is an error.
    """
    roles = tuple(roles)
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    rows = [row for row in rows if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError("file has no header row")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "participant":
        raise ParseError("first header column must be 'participant'")
    label_col = None
    col_for_role: dict[str, int] = {}
    for idx, name in enumerate(header[1:], start=1):
        if name == "label":
            label_col = idx
        elif name in ROLE_UNIVERSE:
            col_for_role[name] = idx
        else:
            raise ParseError(f"unknown column {name!r}", row=0, col=idx + 1)
    for role in roles:
        if role not in col_for_role:
            raise MissingRole(f"configured role {role} missing from {path}")
    dropped = [name for name in col_for_role if name not in roles]
    if dropped:
        log.warning("dropping unconfigured role columns: %s", ", ".join(dropped))

    data = rows[1:]
    if not data:
        raise ParseError("file has a header but no data rows")
    by_id: dict[int, tuple] = {}
    labels: dict[int, str] = {}
    for rownum, row in enumerate(data, start=1):
        if len(row) != len(header):
            raise ParseError(
                f"row has {len(row)} cells, header has {len(header)}", row=rownum
            )
        try:
            pid = int(row[0])
        except ValueError:
            raise ParseError(
                f"participant id {row[0]!r} is not an integer", row=rownum, col=1
            ) from None
        if pid in by_id:
            raise ParseError(f"duplicate participant id {pid}", row=rownum, col=1)
        cells = []
        for role in roles:
            colnum = col_for_role[role]
            raw = row[colnum].strip()
            try:
                value = int(raw)
            except ValueError:
                raise ParseError(
                    f"score {raw!r} is not an integer", row=rownum, col=colnum + 1
                ) from None
            if value < 0:
                raise ParseError(
                    f"score {value} is negative", row=rownum, col=colnum + 1
                )
            cells.append(value)
        by_id[pid] = tuple(cells)
        if label_col is not None:
            labels[pid] = row[label_col].strip()
    p = len(by_id)
    if sorted(by_id) != list(range(1, p + 1)):
        raise ParseError(f"participant ids must be exactly 1..{p}")
    ordered = tuple(by_id[i] for i in range(1, p + 1))
    label_tuple = tuple(labels[i] for i in range(1, p + 1)) if labels else None
    return ScoreMatrix.from_rows(ordered, roles, label_tuple)


def solution_document(
    s: ScoreMatrix,
    a: TeamAssembly,
    ra: RoleAssignment,
    config: SolveConfig,
    report: AssemblyReport | None = None,
    with_labels: bool = False,
) -> dict:
    """Canonical solution structure shared by files, CLI and the service."""
    teams = []
    for t in range(1, a.n + 1):
        members = []
        for i in a.members(t):
            role = ra.role_of(i)
            member = {
                "id": i,
                "role": role,
                "score": 0 if role == HELPER else s.score(i, role),
            }
            if with_labels and s.roster.display_labels is not None:
                member["label"] = s.roster.display_labels[i - 1]
            members.append(member)
        teams.append(
            {
                "id": t,
                "members": members,
                "capacity": team_capacity(s, a, t),
                "team_score": team_score(s, a, ra, t),
                "sigma": within_team_sigma(s, a, t),
            }
        )
    metrics = {"total_capacity": s.total()}
    if report:
        metrics.update(report.cross_team)
        for name, deltas in report.baseline_deltas.items():
            metrics[f"capacity_vs_{name}"] = list(deltas)
    return {
        "participants": list(s.roster.participants),
        "teams": teams,
        "assembly": list(a.assignment),
        "roles": list(ra.assignment),
        "stage": ra.stage.value,
        "config": config.to_dict(),
        "metrics": metrics,
    }


def write_solution_json(document: dict, path: str | Path) -> None:
    """Write a solution document as canonical JSON (byte-stable)."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(document, fh, sort_keys=True, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def read_solution_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise IoError(f"{path} is not valid JSON: {exc}") from exc
