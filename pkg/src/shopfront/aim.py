"""Interactive compromise selection by aspiration levels.

A session snapshots a nondominated front and holds one aspiration level
per objective. The levels split the front into the accepted subset (every
objective at or under its level) and its complement; tightening levels
shrinks the accepted subset until a single solution remains.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import ContractError, NotConvergedError
from .model import ObjectiveVector

FrontEntry = Tuple[str, ObjectiveVector]


@dataclass(frozen=True)
class AimSession:
    front: Tuple[FrontEntry, ...]
    levels: Tuple[int, ...]
    accepted_ids: Tuple[str, ...]
    rejected_ids: Tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def accepted_count(self) -> int:
        return len(self.accepted_ids)


def _partition(front: Sequence[FrontEntry],
               levels: Sequence[float]) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    accepted: List[str] = []
    rejected: List[str] = []
    for solution_id, vector in front:
        if all(vector[i] <= levels[i] for i in range(len(levels))):
            accepted.append(solution_id)
        else:
            rejected.append(solution_id)
    return tuple(accepted), tuple(rejected)


def start_session(front: Sequence[FrontEntry]) -> AimSession:
    """Open a session with every level at the front's worst value, so the
    whole front is initially accepted."""
    entries = tuple((str(sid), tuple(vec)) for sid, vec in front)
    if not entries:
        raise ContractError("cannot start a session on an empty front")
    k = len(entries[0][1])
    for sid, vec in entries:
        if len(vec) != k:
            raise ContractError(f"solution {sid} has vector length {len(vec)}, expected {k}")
    if len({sid for sid, _ in entries}) != len(entries):
        raise ContractError("solution ids must be unique")
    levels = tuple(max(vec[i] for _, vec in entries) for i in range(k))
    accepted, rejected = _partition(entries, levels)
    return AimSession(front=entries, levels=levels,
                      accepted_ids=accepted, rejected_ids=rejected)


def set_level(session: AimSession, objective_index: int, value: int) -> AimSession:
    """Replace the level of objective `objective_index` (1-based) and
    recompute the partition. Tightening past every point is legal; the
    accepted subset is then empty until a level is loosened."""
    if not 1 <= objective_index <= session.k:
        raise ContractError(
            f"objective index {objective_index} out of range 1..{session.k}")
    levels = list(session.levels)
    levels[objective_index - 1] = value
    accepted, rejected = _partition(session.front, levels)
    return AimSession(front=session.front, levels=tuple(levels),
                      accepted_ids=accepted, rejected_ids=rejected)


def finalize(session: AimSession) -> str:
    """Return the unique accepted solution; anything else is not converged."""
    if session.accepted_count != 1:
        raise NotConvergedError(session.accepted_count)
    return session.accepted_ids[0]


def pick_among_equals(session: AimSession, solution_id: str) -> str:
    """Break a tie the levels cannot: if every accepted solution carries the
    same vector, the caller may name the winner directly."""
    if session.accepted_count == 0:
        raise NotConvergedError(0)
    if solution_id not in session.accepted_ids:
        raise ContractError(f"solution {solution_id!r} is not in the accepted subset")
    vectors = {vec for sid, vec in session.front if sid in session.accepted_ids}
    if len(vectors) != 1:
        raise NotConvergedError(session.accepted_count)
    return solution_id
