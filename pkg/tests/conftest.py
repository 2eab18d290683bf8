import random
from fractions import Fraction

import pytest

from coxkit import CoxeterGraph, WeightFunction, rational, zeta

# weight pool used across randomized tests
WEIGHT_POOL = [
    rational(1), rational(-1),
    zeta(3), -zeta(3),
    zeta(4),
    rational(2), rational(Fraction(1, 2)),
]


@pytest.fixture
def six_vertex():
    """Balanced signed graph on six vertices with potentials (1,-1,1,-1,-1,-1)."""
    graph = CoxeterGraph(6, {(1, 2): 3, (2, 3): 3, (2, 4): 3,
                             (3, 5): 3, (4, 5): 3, (5, 6): 3})
    f = WeightFunction({(1, 2): -1, (2, 3): -1, (2, 4): 1,
                        (3, 5): -1, (4, 5): 1, (5, 6): 1})
    return graph, f


@pytest.fixture
def four_cycle():
    return CoxeterGraph.cycle(4)


def signed_four_cycle(closing: int) -> WeightFunction:
    return WeightFunction({(1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 1): closing})


def random_legal_weights(graph: CoxeterGraph, rng: random.Random) -> WeightFunction:
    return WeightFunction({(i, j): rng.choice(WEIGHT_POOL) for i, j, _ in graph.edges()})


def random_balanced_weights(graph: CoxeterGraph, rng: random.Random) -> WeightFunction:
    """Weights derived from random vertex potentials are balanced by construction."""
    potentials = {v: rng.choice(WEIGHT_POOL) for v in graph.vertices()}
    return WeightFunction({(i, j): potentials[i] / potentials[j]
                           for i, j, _ in graph.edges()})
