"""Dominance algebra, nondominated archive, enumeration oracle, coverage.

Everything here minimizes. Vectors are integer tuples of equal length.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import ContractError, EnumerationLimitError
from .model import (Instance, ObjectiveSpec, ObjectiveVector, OperationSequence,
                    Schedule, decode_semi_active, evaluate)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a <= b componentwise with at least one strict <."""
    if len(a) != len(b):
        raise ContractError(f"vector length mismatch: {len(a)} vs {len(b)}")
    strict = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


def nondominated_filter(vectors: Iterable[Sequence[int]]) -> List[ObjectiveVector]:
    """Batch oracle: the vectors not dominated by any input, duplicates collapsed.

    Deliberately a transparent pairwise check. Vectors are sorted
    lexicographically first; a dominator always sorts strictly before its
    victim, so only the prefix needs scanning.
    """
    distinct = sorted(set(tuple(v) for v in vectors))
    if distinct:
        k = len(distinct[0])
        for v in distinct:
            if len(v) != k:
                raise ContractError("vectors must share one length")
    front: List[ObjectiveVector] = []
    for v in distinct:
        if not any(dominates(u, v) for u in front):
            front.append(v)
    return front


class InsertOutcome(enum.Enum):
    ADDED = "added"
    REJECTED_DOMINATED = "rejected_dominated"
    REJECTED_DUPLICATE = "rejected_duplicate"


@dataclass
class ArchiveEntry:
    vector: ObjectiveVector
    sequence: Optional[OperationSequence] = None
    schedule: Optional[Schedule] = None


class Archive:
    """Incrementally maintained set of pairwise-nondominated entries.

    Duplicate vectors collapse onto the first inserted representative.
    An optional capacity prunes the densest region but never the best
    scalar value of any objective.
    """

    def __init__(self, capacity: Optional[int] = None):
        if capacity is not None and capacity < 1:
            raise ContractError("capacity must be positive")
        self.capacity = capacity
        self.entries: List[ArchiveEntry] = []
        self._vector_set: Set[ObjectiveVector] = set()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(self.entries)

    def vectors(self) -> List[ObjectiveVector]:
        return [e.vector for e in self.entries]

    def vector_set(self) -> Set[ObjectiveVector]:
        return set(self._vector_set)

    def insert(self, vector: Sequence[int], sequence: Optional[Sequence[int]] = None,
               schedule: Optional[Schedule] = None) -> InsertOutcome:
        vec = tuple(vector)
        if self.entries and len(vec) != len(self.entries[0].vector):
            raise ContractError("vector length differs from archive entries")
        if vec in self._vector_set:
            return InsertOutcome.REJECTED_DUPLICATE
        if any(dominates(e.vector, vec) for e in self.entries):
            return InsertOutcome.REJECTED_DOMINATED
        survivors = [e for e in self.entries if not dominates(vec, e.vector)]
        removed = len(self.entries) - len(survivors)
        self.entries = survivors
        if removed:
            self._vector_set = {e.vector for e in self.entries}
        entry = ArchiveEntry(vector=vec,
                             sequence=tuple(sequence) if sequence is not None else None,
                             schedule=schedule)
        self.entries.append(entry)
        self._vector_set.add(vec)
        if self.capacity is not None and len(self.entries) > self.capacity:
            self._prune_densest()
        return InsertOutcome.ADDED

    def _prune_densest(self) -> None:
        """Drop the entry with the most neighbors inside a range/10 box per
        objective, never dropping a per-objective minimum."""
        k = len(self.entries[0].vector)
        lows = [min(e.vector[i] for e in self.entries) for i in range(k)]
        highs = [max(e.vector[i] for e in self.entries) for i in range(k)]
        radius = [(highs[i] - lows[i]) / 10.0 for i in range(k)]
        protected = set()
        for i in range(k):
            best = min(e.vector[i] for e in self.entries)
            protected.add(next(e.vector for e in self.entries
                               if e.vector[i] == best))

        def neighbor_count(entry: ArchiveEntry) -> int:
            return sum(
                1 for other in self.entries
                if other is not entry
                and all(abs(other.vector[i] - entry.vector[i]) <= radius[i]
                        for i in range(k)))

        candidates = [e for e in self.entries if e.vector not in protected]
        if not candidates:
            return
        victim = max(candidates, key=lambda e: (neighbor_count(e), e.vector))
        self.entries.remove(victim)
        self._vector_set.discard(victim.vector)


def archive_insert(arch: Archive, vector: Sequence[int],
                   sequence: Optional[Sequence[int]] = None,
                   schedule: Optional[Schedule] = None) -> InsertOutcome:
    return arch.insert(vector, sequence, schedule)


def sequence_space_size(inst: Instance) -> int:
    """Number of distinct operation sequences: (sum o_j)! / prod(o_j!)."""
    total = inst.total_operations
    count = math.factorial(total)
    for job in inst.jobs:
        count //= math.factorial(len(job.operations))
    return count


def iter_all_sequences(inst: Instance):
    """Yield every distinct permutation-with-repetition, lexicographically."""
    quotas = sorted(inst.quotas().items())
    total = inst.total_operations
    prefix: List[int] = []
    remaining: Dict[int, int] = dict(quotas)

    def rec():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for job_id in sorted(remaining):
            if remaining[job_id] == 0:
                continue
            remaining[job_id] -= 1
            prefix.append(job_id)
            yield from rec()
            prefix.pop()
            remaining[job_id] += 1

    yield from rec()


def brute_force_front(inst: Instance, spec: ObjectiveSpec,
                      limit: int) -> Set[ObjectiveVector]:
    """Exact front over the decoder's image by exhaustive enumeration."""
    count = sequence_space_size(inst)
    if count > limit:
        raise EnumerationLimitError(count, limit)
    seen: Set[ObjectiveVector] = set()
    for seq in iter_all_sequences(inst):
        seen.add(evaluate(decode_semi_active(seq, inst), inst, spec))
    return set(nondominated_filter(seen))


def coverage(covering: Iterable[Sequence[int]],
             covered: Iterable[Sequence[int]]) -> float:
    """Fraction of `covered` weakly dominated by (equal to or dominated by)
    some member of `covering`. Empty `covered` yields 1.0."""
    a = [tuple(v) for v in covering]
    b = [tuple(v) for v in covered]
    if not b:
        return 1.0
    hit = sum(1 for v in b if any(u == v or dominates(u, v) for u in a))
    return hit / len(b)
