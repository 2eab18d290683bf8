"""Classical and generalized numbers game engines.

Firing a node negates its value and adds k(fired, neighbour) times the
old value to each neighbour, which is exactly the action of the
transposed generator matrix on the position vector. In the classical
game a move is positive when the fired value is a positive real; in the
generalized game (balanced weights, coefficients k = f * l) a move is
pseudo-positive when potential(v) * p_v is a positive real, equivalently
when the move is positive for the gauged position J p.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .cyclotomic import CyclotomicNumber, ONE, INFINITY
from .georep import EdgeCoefficients, k_coefficients, standard_generators, evaluate_word
from .graphs import CoxeterGraph, WeightFunction
from .matrices import Scalar, _as_cyc

KMap = Mapping[tuple[int, int], CyclotomicNumber]
Position = tuple[CyclotomicNumber, ...]


class MoveClass(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    PSEUDO_POSITIVE = "pseudo-positive"
    PSEUDO_NEGATIVE = "pseudo-negative"
    ZERO = "zero"
    NONREAL = "nonreal"


def unit_position(n: int) -> Position:
    return (ONE,) * n


def gauged_start(potentials: Sequence[Scalar]) -> Position:
    """The position whose gauge image is the unit position: J^-1 * 1."""
    return tuple(_as_cyc(p).inverse() for p in potentials)


def as_position(values: Sequence[Scalar]) -> Position:
    return tuple(_as_cyc(v) for v in values)


def fire(graph: CoxeterGraph, k: KMap, p: Sequence[Scalar], v: int) -> Position:
    """Fire node v: negate p_v, add k(v, u) * p_v to each neighbour u."""
    if not 1 <= v <= graph.n:
        raise IndexError(f"vertex {v} out of range 1..{graph.n}")
    p = as_position(p)
    out = list(p)
    pv = p[v - 1]
    out[v - 1] = -pv
    for u in graph.neighbors(v):
        out[u - 1] = out[u - 1] + k[(v, u)] * pv
    return tuple(out)


def move_class(p: Sequence[Scalar], v: int,
               potentials: Sequence[Scalar] | None = None) -> MoveClass:
    """Classify firing v at position p (before the move).

    Without potentials this is the classical sign of p_v; with balance
    potentials it is the sign of potential(v) * p_v (pseudo classes).
    """
    value = _as_cyc(p[v - 1])
    pseudo = potentials is not None
    if pseudo:
        value = _as_cyc(potentials[v - 1]) * value
    if value.is_zero():
        return MoveClass.ZERO
    if not value.is_real():
        return MoveClass.NONREAL
    if value.sign() > 0:
        return MoveClass.PSEUDO_POSITIVE if pseudo else MoveClass.POSITIVE
    return MoveClass.PSEUDO_NEGATIVE if pseudo else MoveClass.NEGATIVE


@dataclass(frozen=True)
class PlayRecord:
    start: Position
    moves: tuple[tuple[int, MoveClass], ...]
    positions: tuple[Position, ...]    # after each move

    @property
    def final(self) -> Position:
        return self.positions[-1] if self.positions else self.start

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.moves)

    @property
    def is_positive_sequence(self) -> bool:
        return all(c == MoveClass.POSITIVE for _, c in self.moves)

    @property
    def is_pseudo_positive_sequence(self) -> bool:
        return all(c == MoveClass.PSEUDO_POSITIVE for _, c in self.moves)


def play(graph: CoxeterGraph, k: KMap, start: Sequence[Scalar],
         word: Sequence[int],
         potentials: Sequence[Scalar] | None = None) -> PlayRecord:
    """Fold `fire` over the word, classifying each move before it is made."""
    position = as_position(start)
    moves = []
    positions = []
    for v in word:
        moves.append((v, move_class(position, v, potentials)))
        position = fire(graph, k, position, v)
        positions.append(position)
    return PlayRecord(start=as_position(start), moves=tuple(moves),
                      positions=tuple(positions))


def classical_k(graph: CoxeterGraph, ell: EdgeCoefficients | None = None) -> dict:
    return k_coefficients(graph, None, ell)


def is_reduced(graph: CoxeterGraph, word: Sequence[int],
               ell: EdgeCoefficients | None = None) -> bool:
    """A word is reduced exactly when playing it from the unit position
    makes every move positive."""
    record = play(graph, classical_k(graph, ell), unit_position(graph.n), word)
    return record.is_positive_sequence


def brute_force_is_reduced(graph: CoxeterGraph, word: Sequence[int]) -> bool:
    """Independent oracle: no group-equal word is shorter. Decides equality
    through the standard (faithful) representation; desk scale only."""
    gens = standard_generators(graph)
    target = evaluate_word(gens, word)
    if len(word) == 0:
        return True
    # breadth-first over all strictly shorter words
    identity = evaluate_word(gens, ())
    seen = {identity.key()}
    layer = [identity]
    for _ in range(len(word) - 1):
        next_layer = []
        for m in layer:
            for i in graph.vertices():
                nm = m @ gens.matrix(i)
                if nm.key() not in seen:
                    seen.add(nm.key())
                    next_layer.append(nm)
        layer = next_layer
    return target.key() not in seen


def descent_set(graph: CoxeterGraph, word: Sequence[int],
                k: KMap | None = None,
                potentials: Sequence[Scalar] | None = None) -> frozenset[int]:
    """Vertices whose (potential-corrected) coordinate is negative after
    playing the word from the unit-equivalent start."""
    if k is None:
        k = classical_k(graph)
    start = unit_position(graph.n) if potentials is None else gauged_start(potentials)
    record = play(graph, k, start, word, potentials)
    final = record.final
    out = set()
    for v in graph.vertices():
        value = final[v - 1]
        if potentials is not None:
            value = _as_cyc(potentials[v - 1]) * value
        if value.is_real() and not value.is_zero() and value.sign() < 0:
            out.add(v)
    return frozenset(out)


@dataclass(frozen=True)
class ReachResult:
    positions: frozenset
    closed: bool

    @property
    def count(self) -> int:
        return len(self.positions)


def reachable_positions(graph: CoxeterGraph, k: KMap, start: Sequence[Scalar],
                        max_count: int = 10000) -> ReachResult:
    """Breadth-first closure of the firing action; `closed` is False when the
    budget ran out (infinite group)."""
    start = as_position(start)
    seen = {start}
    frontier = [start]
    closed = True
    while frontier:
        next_frontier = []
        for p in frontier:
            for v in graph.vertices():
                q = fire(graph, k, p, v)
                if q in seen:
                    continue
                if len(seen) >= max_count:
                    closed = False
                    frontier = []
                    next_frontier = []
                    break
                seen.add(q)
                next_frontier.append(q)
            else:
                continue
            break
        frontier = next_frontier
        if not closed:
            break
    return ReachResult(positions=frozenset(seen), closed=closed)


@dataclass(frozen=True)
class GeneralizedWeightCheck:
    """Result of checking the generalized-game weight conditions:
    (1) k(i,j)k(j,i) = 4cos^2(pi/m) (>= 4 on infinite bonds),
    (2) k = f * l with f a legal weight function and l positive real,
    (3) f balanced (unit product around every cycle)."""
    ok: bool
    violations: tuple[tuple[int, str], ...]    # (condition number, message)
    f: WeightFunction | None = None
    ell: EdgeCoefficients | None = None
    potentials: tuple[CyclotomicNumber, ...] | None = None

    def by_condition(self, number: int) -> list[str]:
        return [msg for c, msg in self.violations if c == number]


def validate_generalized_weights(graph: CoxeterGraph, k: KMap) -> GeneralizedWeightCheck:
    """Check a k-assignment against the generalized-game conditions and,
    on success, return the decomposition k = f * l together with the
    balance potentials of f."""
    from .cyclotomic import two_cos

    violations: list[tuple[int, str]] = []
    directed = set(graph.directed_edges())
    for e in sorted(directed):
        if e not in k:
            violations.append((2, f"missing coefficient on {e}"))
        elif _as_cyc(k[e]).is_zero():
            violations.append((2, f"coefficient on {e} must be nonzero"))
    if violations:
        return GeneralizedWeightCheck(ok=False, violations=tuple(violations))

    for i, j, m in graph.edges():
        prod = _as_cyc(k[(i, j)]) * _as_cyc(k[(j, i)])
        if m == INFINITY:
            diff = prod - 4
            if not diff.is_real() or diff.sign() < 0:
                violations.append((1, f"k({i},{j})*k({j},{i}) below 4 on an infinite bond"))
        elif prod != two_cos(m) ** 2:
            violations.append((1, f"k({i},{j})*k({j},{i}) differs from 4cos^2(pi/{m})"))
    if violations:
        return GeneralizedWeightCheck(ok=False, violations=tuple(violations))

    # potentials along a spanning forest make l = 1 on tree edges; every
    # non-tree edge must then come out positive real.
    from .graphs import _spanning_forest
    parent, order, _, non_tree = _spanning_forest(graph)
    pot: dict[int, CyclotomicNumber] = {}
    for v in order:
        p = parent[v]
        pot[v] = ONE if p is None else pot[p] / _as_cyc(k[(p, v)])
    for (i, j) in non_tree:
        ell_ij = _as_cyc(k[(i, j)]) * pot[j] / pot[i]
        if not ell_ij.is_real() or ell_ij.sign() <= 0:
            violations.append((3, f"cycle through edge ({i},{j}) has a non-positive "
                                  f"product of phases"))
    if violations:
        return GeneralizedWeightCheck(ok=False, violations=tuple(violations))

    potentials = tuple(pot[v] for v in graph.vertices())
    f_values = {}
    ell_values = {}
    for (i, j) in directed:
        f_values[(i, j)] = pot[i] / pot[j]
        ell_values[(i, j)] = _as_cyc(k[(i, j)]) * pot[j] / pot[i]
    f = WeightFunction(f_values)
    return GeneralizedWeightCheck(ok=True, violations=(), f=f,
                                  ell=EdgeCoefficients(ell_values),
                                  potentials=potentials)


# -- the pentagon game -------------------------------------------------

@dataclass(frozen=True)
class PentagonRecord:
    start: tuple[int, ...]
    fired: tuple[int, ...]
    positions: tuple[tuple[int, ...], ...] | None
    final: tuple[int, ...]
    terminated: bool

    @property
    def steps(self) -> int:
        return len(self.fired)


def imo_pentagon_run(start: Sequence[int], max_steps: int = 100000,
                     record: bool = True) -> PentagonRecord:
    """Play the pentagon game: while some value is negative, fire the
    lowest-index negative vertex (adding it to both neighbours and
    negating it). Runs on plain integers; termination within the budget
    is reported, not assumed."""
    values = [int(v) for v in start]
    if len(values) != 5:
        raise ValueError("the pentagon game needs exactly five values")
    if sum(values) <= 0:
        raise ValueError("the sum of the starting values must be positive")
    fired = []
    trail = [tuple(values)] if record else None
    for _ in range(max_steps):
        v = next((i for i, x in enumerate(values) if x < 0), None)
        if v is None:
            break
        x = values[v]
        values[(v - 1) % 5] += x
        values[(v + 1) % 5] += x
        values[v] = -x
        fired.append(v + 1)
        if record:
            trail.append(tuple(values))
    terminated = all(x >= 0 for x in values)
    return PentagonRecord(start=tuple(int(v) for v in start), fired=tuple(fired),
                          positions=tuple(trail) if record else None,
                          final=tuple(values), terminated=terminated)
