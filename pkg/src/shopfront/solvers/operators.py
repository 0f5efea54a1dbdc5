"""Variation operators on permutations with repetition, plus rank peeling.

All four crossovers follow one scheme: a mask or window of positions is
inherited from parent 1, and the remaining holes are filled left-to-right
with parent 2's genes, skipping genes whose quota is already spent. That
fill keeps every child a valid permutation with repetition by construction.
"""
from __future__ import annotations

from collections import Counter
from typing import List, Optional, Sequence

from ..errors import ContractError
from ..model import OperationSequence, as_rng
from ..pareto import dominates
from .config import CROSSOVER_KINDS, MUTATION_KINDS


def _check_parents(p1: Sequence[int], p2: Sequence[int]) -> None:
    if len(p1) != len(p2) or Counter(p1) != Counter(p2):
        raise ContractError("parent genotypes carry different job quotas")


def _quota_fill(child: List[Optional[int]], donor: Sequence[int]) -> List[int]:
    """Fill the None holes of `child` left-to-right with the donor's genes.

    Per gene, as many donor occurrences are skipped as the child already
    holds. Occurrences sitting at already-filled child positions are
    skipped first, any deficit comes from the earliest remaining ones.
    This keeps quotas intact by construction and makes identical parents
    reproduce themselves exactly, whatever positions were inherited."""
    spent = Counter(g for g in child if g is not None)
    skip = set()
    for i, gene in enumerate(child):
        if gene is not None and spent[donor[i]] > 0:
            spent[donor[i]] -= 1
            skip.add(i)
    for i, gene in enumerate(donor):
        if not +spent:
            break
        if i not in skip and spent[gene] > 0:
            spent[gene] -= 1
            skip.add(i)
    holes = iter(i for i, g in enumerate(child) if g is None)
    for i, gene in enumerate(donor):
        if i in skip:
            continue
        pos = next(holes, None)
        if pos is None:
            break
        child[pos] = gene
    return child


def _keep_positions(p1: Sequence[int], p2: Sequence[int],
                    keep: Sequence[int]) -> OperationSequence:
    child: List[Optional[int]] = [None] * len(p1)
    for i in keep:
        child[i] = p1[i]
    return tuple(_quota_fill(child, p2))


def uobx(p1: Sequence[int], p2: Sequence[int], mask: Sequence[bool]) -> OperationSequence:
    """Uniform order-based: keep p1 where the mask is set."""
    return _keep_positions(p1, p2, [i for i, m in enumerate(mask) if m])


def obx(p1: Sequence[int], p2: Sequence[int],
        positions: Sequence[int]) -> OperationSequence:
    """Order-based: keep p1 at the sampled position subset."""
    return _keep_positions(p1, p2, sorted(positions))


def tpox(p1: Sequence[int], p2: Sequence[int], lo: int, hi: int) -> OperationSequence:
    """Two-point order: keep p1's window [lo..hi] (inclusive)."""
    return _keep_positions(p1, p2, range(lo, hi + 1))


def pmx(p1: Sequence[int], p2: Sequence[int], lo: int, hi: int) -> OperationSequence:
    """Partially mapped: keep p1's window, map p2's genes through the
    window pairing where possible, then quota-repair the leftovers."""
    size = len(p1)
    child: List[Optional[int]] = [None] * size
    quota = Counter(p1)
    for i in range(lo, hi + 1):
        child[i] = p1[i]
        quota[p1[i]] -= 1
    mapping = {p2[i]: p1[i] for i in range(lo, hi + 1)}
    for i in list(range(0, lo)) + list(range(hi + 1, size)):
        gene = p2[i]
        walked = set()
        while quota[gene] == 0 and gene in mapping and gene not in walked:
            walked.add(gene)
            gene = mapping[gene]
        if quota[gene] > 0:
            quota[gene] -= 1
            child[i] = gene
    return tuple(_quota_fill(child, p2))


def crossover(p1: Sequence[int], p2: Sequence[int], kind: str,
              rng_seed) -> OperationSequence:
    """Apply the named crossover with operator parameters drawn from the rng."""
    _check_parents(p1, p2)
    if kind not in CROSSOVER_KINDS:
        raise ContractError(f"unknown crossover kind {kind!r}")
    rng = as_rng(rng_seed)
    size = len(p1)
    if size == 1:
        return tuple(p1)
    if kind == "uobx":
        return uobx(p1, p2, [rng.random() < 0.5 for _ in range(size)])
    if kind == "obx":
        count = rng.randint(1, size - 1)
        return obx(p1, p2, rng.sample(range(size), count))
    lo = rng.randrange(size)
    hi = rng.randrange(size)
    if lo > hi:
        lo, hi = hi, lo
    if kind == "tpox":
        return tpox(p1, p2, lo, hi)
    return pmx(p1, p2, lo, hi)


def swap_move(s: Sequence[int], i: int, j: int) -> OperationSequence:
    genes = list(s)
    genes[i], genes[j] = genes[j], genes[i]
    return tuple(genes)


def shift_move(s: Sequence[int], i: int, j: int) -> OperationSequence:
    """Remove the gene at i and reinsert it so it lands at position j."""
    genes = list(s)
    gene = genes.pop(i)
    genes.insert(j, gene)
    return tuple(genes)


def mutate(s: Sequence[int], kind: str, rng_seed) -> OperationSequence:
    """One random swap or shift move; identity moves are allowed."""
    if kind not in MUTATION_KINDS:
        raise ContractError(f"unknown mutation kind {kind!r}")
    size = len(s)
    if size < 2:
        return tuple(s)
    rng = as_rng(rng_seed)
    i, j = rng.sample(range(size), 2)
    if kind == "swap":
        return swap_move(s, i, j)
    return shift_move(s, i, j)


def pareto_rank(vectors: Sequence[Sequence[int]]) -> List[int]:
    """Nondominated layer peeling: rank 1 is the nondominated layer, rank 2
    the layer after removing rank 1, and so on."""
    n = len(vectors)
    vecs = [tuple(v) for v in vectors]
    ranks = [0] * n
    remaining = list(range(n))
    rank = 1
    while remaining:
        layer = [i for i in remaining
                 if not any(dominates(vecs[j], vecs[i])
                            for j in remaining if j != i)]
        for i in layer:
            ranks[i] = rank
        remaining = [i for i in remaining if ranks[i] == 0]
        rank += 1
    return ranks
