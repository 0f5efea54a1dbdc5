import random
from collections import Counter

import pytest

from shopfront.errors import ContractError
from shopfront.solvers import crossover, mutate, pareto_rank
from shopfront.solvers.operators import shift_move, swap_move, tpox

KINDS = ("uobx", "obx", "tpox", "pmx")


def test_tpox_hand_example():
    child = tpox([1, 2, 3, 1, 2, 3], [3, 2, 1, 3, 2, 1], 2, 4)
    assert child == (3, 2, 3, 1, 2, 1)


def test_identical_parents_reproduce():
    rng = random.Random(1)
    for _ in range(300):
        quotas = {j: rng.randint(1, 3) for j in range(1, rng.randint(2, 5))}
        s = [j for j, q in quotas.items() for _ in range(q)]
        rng.shuffle(s)
        for kind in KINDS:
            assert crossover(s, s, kind, rng_seed=rng.randrange(10**9)) == tuple(s)


def test_crossover_closure_fuzz():
    rng = random.Random(2)
    for _ in range(1500):
        quotas = {j: rng.randint(1, 4) for j in range(1, rng.randint(2, 6))}
        base = [j for j, q in quotas.items() for _ in range(q)]
        p1, p2 = base[:], base[:]
        rng.shuffle(p1)
        rng.shuffle(p2)
        for kind in KINDS:
            child = crossover(p1, p2, kind, rng_seed=rng.randrange(10**9))
            assert Counter(child) == quotas, (kind, p1, p2, child)


def test_crossover_on_t2_parents():
    rng = random.Random(3)
    for _ in range(100):
        p1, p2 = [1, 2, 1, 2], [2, 1, 2, 1]
        for kind in KINDS:
            child = crossover(p1, p2, kind, rng_seed=rng.randrange(10**9))
            assert sorted(child) == [1, 1, 2, 2]


def test_crossover_determinism():
    for kind in KINDS:
        a = crossover([1, 2, 3, 1, 2, 3], [3, 2, 1, 3, 2, 1], kind, rng_seed=5)
        b = crossover([1, 2, 3, 1, 2, 3], [3, 2, 1, 3, 2, 1], kind, rng_seed=5)
        assert a == b


def test_crossover_rejects_mismatched_parents():
    with pytest.raises(ContractError):
        crossover([1, 1, 2], [1, 2, 2], "uobx", rng_seed=0)
    with pytest.raises(ContractError):
        crossover([1, 2], [1, 2, 2], "obx", rng_seed=0)
    with pytest.raises(ContractError):
        crossover([1, 2], [2, 1], "alien", rng_seed=0)


def test_swap_and_shift_moves():
    assert swap_move([1, 2, 1, 2], 1, 2) == (1, 1, 2, 2)
    assert shift_move([1, 2, 1, 2], 0, 3) == (2, 1, 2, 1)


def test_mutate_examples():
    out = mutate([1, 2, 1, 2], "swap", rng_seed=0)
    assert sorted(out) == [1, 1, 2, 2]
    # a swap of two equal genes is a legal no-op
    assert mutate([1, 1], "swap", rng_seed=0) == (1, 1)
    assert mutate([5], "shift", rng_seed=0) == (5,)


def test_mutate_closure_fuzz():
    rng = random.Random(6)
    for _ in range(2000):
        quotas = {j: rng.randint(1, 4) for j in range(1, rng.randint(2, 6))}
        s = [j for j, q in quotas.items() for _ in range(q)]
        rng.shuffle(s)
        for kind in ("swap", "shift"):
            out = mutate(s, kind, rng_seed=rng.randrange(10**9))
            assert Counter(out) == quotas


def test_pareto_rank_examples():
    assert pareto_rank([(1, 1), (2, 2), (3, 0)]) == [1, 2, 1]
    assert pareto_rank([(4, 4), (4, 4), (4, 4)]) == [1, 1, 1]
    assert pareto_rank([(1, 1), (2, 2), (3, 3)]) == [1, 2, 3]
    assert pareto_rank([]) == []


def test_pareto_rank_layers_are_nondominated():
    rng = random.Random(8)
    from shopfront.pareto import dominates
    for _ in range(50):
        vecs = [tuple(rng.randint(0, 9) for _ in range(3)) for _ in range(30)]
        ranks = pareto_rank(vecs)
        assert min(ranks) == 1
        for i, a in enumerate(vecs):
            for j, b in enumerate(vecs):
                if ranks[i] == ranks[j]:
                    assert not dominates(a, b) or a == b
                if dominates(a, b):
                    assert ranks[i] < ranks[j]
