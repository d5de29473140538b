"""Event-sourced session store for the what-if phase.

A session holds the solved initial role assignment plus the ordered log of
human swaps; the current assignment is always initial + log, re-derived and
verified on every load. One JSON document per session, in a data directory.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field, replace
from pathlib import Path

from .assignment import apply_swap
from .errors import InvalidId, InvalidSwap, IoError
from .io import SolveConfig
from .model import (
    RoleAssignment,
    ScoreMatrix,
    Stage,
    TeamAssembly,
    team_score,
)


@dataclass(frozen=True)
class SwapEvent:
    i: int
    j: int
    timestamp: float
    resulting_team_score: int

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "timestamp": self.timestamp,
            "resulting_team_score": self.resulting_team_score,
        }


@dataclass(frozen=True)
class Session:
    id: str
    scores: ScoreMatrix
    config: SolveConfig
    assembly: TeamAssembly
    initial: RoleAssignment
    current: RoleAssignment
    swap_log: tuple[SwapEvent, ...] = ()
    finalized: RoleAssignment | None = None
    created_at: float = field(default_factory=time.time)

    @property
    def version(self) -> int:
        """Monotonic change counter for stale-view detection."""
        return len(self.swap_log) + (1 if self.finalized else 0)

    def team_scores(self) -> dict[int, int]:
        ra = self.finalized or self.current
        return {
            t: team_score(self.scores, self.assembly, ra, t)
            for t in range(1, self.assembly.n + 1)
        }


def replay(
    scores: ScoreMatrix,
    assembly: TeamAssembly,
    initial: RoleAssignment,
    swap_log,
) -> RoleAssignment:
    """Reapply a swap log to the initial assignment."""
    current = initial
    for event in swap_log:
        current, _ = apply_swap(current, assembly, scores, event.i, event.j)
    return current


class SessionStore:
    """Persistent store; one JSON file per session under ``data_dir``."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def lock(self, session_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(session_id, threading.Lock())

    def create(
        self,
        scores: ScoreMatrix,
        config: SolveConfig,
        assembly: TeamAssembly,
        initial: RoleAssignment,
    ) -> Session:
        session = Session(
            id=uuid.uuid4().hex,
            scores=scores,
            config=config,
            assembly=assembly,
            initial=initial,
            current=initial,
        )
        self._write(session)
        return session

    def get(self, session_id: str) -> Session:
        path = self._path(session_id)
        if not path.exists():
            raise InvalidId(f"unknown session {session_id}")
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise IoError(f"cannot load session {session_id}: {exc}") from exc
        return self._from_dict(data)

    def list_ids(self) -> list[str]:
        return sorted(path.stem for path in self.data_dir.glob("*.json"))

    def append_swap(self, session_id: str, i: int, j: int) -> Session:
        with self.lock(session_id):
            session = self.get(session_id)
            if session.finalized is not None:
                raise InvalidSwap("session is finalized")
            swapped, _ = apply_swap(
                session.current, session.assembly, session.scores, i, j
            )
            t = session.assembly.team_of(i)
            event = SwapEvent(
                i=i,
                j=j,
                timestamp=time.time(),
                resulting_team_score=team_score(
                    session.scores, session.assembly, swapped, t
                ),
            )
            session = replace(
                session, current=swapped, swap_log=session.swap_log + (event,)
            )
            self._write(session)
            return session

    def finalize(self, session_id: str) -> Session:
        with self.lock(session_id):
            session = self.get(session_id)
            if session.finalized is not None:
                raise InvalidSwap("session is already finalized")
            final = RoleAssignment(session.current.assignment, Stage.FINAL)
            session = replace(session, finalized=final)
            self._write(session)
            return session

    def _path(self, session_id: str) -> Path:
        return self.data_dir / f"{session_id}.json"

    def _write(self, session: Session) -> None:
        doc = {
            "id": session.id,
            "created_at": session.created_at,
            "config": session.config.to_dict(),
            "scores": [list(row) for row in session.scores.scores],
            "labels": (
                list(session.scores.roster.display_labels)
                if session.scores.roster.display_labels
                else None
            ),
            "assembly": list(session.assembly.assignment),
            "n": session.assembly.n,
            "initial": list(session.initial.assignment),
            "current": list(session.current.assignment),
            "swap_log": [event.to_dict() for event in session.swap_log],
            "finalized": (
                list(session.finalized.assignment) if session.finalized else None
            ),
        }
        path = self._path(session.id)
        try:
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True, indent=2)
                fh.write("\n")
        except OSError as exc:
            raise IoError(f"cannot persist session {session.id}: {exc}") from exc

    def _from_dict(self, data: dict) -> Session:
        config = SolveConfig.from_dict(data["config"])
        scores = ScoreMatrix.from_rows(
            data["scores"],
            config.roles,
            tuple(data["labels"]) if data.get("labels") else None,
        )
        assembly = TeamAssembly(tuple(data["assembly"]), data["n"])
        initial = RoleAssignment(tuple(data["initial"]), Stage.INITIAL)
        swap_log = tuple(
            SwapEvent(
                i=e["i"],
                j=e["j"],
                timestamp=e["timestamp"],
                resulting_team_score=e["resulting_team_score"],
            )
            for e in data["swap_log"]
        )
        current = replay(scores, assembly, initial, swap_log)
        stored = tuple(data["current"])
        if current.assignment != stored:
            raise IoError(
                f"session {data['id']}: stored assignment does not match "
                "its swap log replay"
            )
        finalized = (
            RoleAssignment(tuple(data["finalized"]), Stage.FINAL)
            if data.get("finalized")
            else None
        )
        return Session(
            id=data["id"],
            scores=scores,
            config=config,
            assembly=assembly,
            initial=initial,
            current=current,
            swap_log=swap_log,
            finalized=finalized,
            created_at=data["created_at"],
        )
