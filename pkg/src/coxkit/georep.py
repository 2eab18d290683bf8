"""Standard and generalized geometric representation generators.

Each generator matrix differs from the identity only in its own row: the
diagonal entry is -1 and the entry toward a neighbour j is k(i,j), where
k(i,j) = l(i,j) for the standard generators and k(i,j) = f(i,j)*l(i,j)
for the generalized ones. The positive coefficients l satisfy
l(i,j)*l(j,i) = 4cos^2(pi/m(i,j)) (>= 4 on infinite bonds), so the
product k(i,j)*k(j,i) keeps that value for any legal weight function and
the Coxeter relations hold exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cyclotomic import INFINITY, CyclotomicNumber, ONE, ZERO, two_cos
from .graphs import CoxeterGraph, WeightFunction, validate_legal
from .matrices import Matrix, Scalar, _as_cyc


class EdgeCoefficients:
    """Positive real coefficients l(i,j) on the directed edges."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[tuple[int, int], Scalar]):
        object.__setattr__(self, "_values",
                           {e: _as_cyc(v) for e, v in values.items()})

    def __setattr__(self, name, value):
        raise AttributeError("EdgeCoefficients is immutable")

    @staticmethod
    def symmetric(graph: CoxeterGraph) -> "EdgeCoefficients":
        """l(i,j) = l(j,i) = 2cos(pi/m); 2 on both orientations of infinite bonds."""
        values = {}
        for i, j, m in graph.edges():
            v = CyclotomicNumber.rational(2) if m == INFINITY else two_cos(m)
            values[(i, j)] = v
            values[(j, i)] = v
        return EdgeCoefficients(values)

    @staticmethod
    def asymmetric_integers(graph: CoxeterGraph) -> "EdgeCoefficients":
        """Integer table 2/1 for m=4 and 3/1 for m=6 (larger value on the
        low-to-high orientation); other labels fall back to the symmetric
        choice, infinite bonds use 2/2."""
        values = {}
        for i, j, m in graph.edges():
            if m == 4:
                values[(i, j)], values[(j, i)] = CyclotomicNumber.rational(2), ONE
            elif m == 6:
                values[(i, j)], values[(j, i)] = CyclotomicNumber.rational(3), ONE
            elif m == INFINITY:
                values[(i, j)] = values[(j, i)] = CyclotomicNumber.rational(2)
            else:
                values[(i, j)] = values[(j, i)] = two_cos(m)
        return EdgeCoefficients(values)

    def get(self, i: int, j: int) -> CyclotomicNumber:
        return self._values[(i, j)]

    def items(self):
        return sorted(self._values.items())

    def validate(self, graph: CoxeterGraph) -> list[str]:
        """Positivity and the product constraint, exactly; empty list = ok."""
        problems = []
        for i, j, m in graph.edges():
            for (a, b) in ((i, j), (j, i)):
                if (a, b) not in self._values:
                    problems.append(f"missing coefficient on ({a},{b})")
                    continue
                v = self._values[(a, b)]
                if not v.is_real() or v.sign() <= 0:
                    problems.append(f"coefficient on ({a},{b}) is not a positive real")
        for i, j, m in graph.edges():
            if (i, j) not in self._values or (j, i) not in self._values:
                continue
            prod = self._values[(i, j)] * self._values[(j, i)]
            if m == INFINITY:
                diff = prod - 4
                if not diff.is_real() or diff.sign() < 0:
                    problems.append(f"product on infinite bond ({i},{j}) is below 4")
            elif prod != two_cos(m) ** 2:
                problems.append(f"product on ({i},{j}) differs from 4cos^2(pi/{m})")
        return problems


@dataclass(frozen=True)
class GeneratorSet:
    """Generator matrices indexed by vertex, plus the firing coefficients."""
    graph: CoxeterGraph
    matrices: tuple[Matrix, ...]
    k: dict = field(compare=False)

    def matrix(self, i: int) -> Matrix:
        return self.matrices[i - 1]

    @property
    def n(self) -> int:
        return self.graph.n


def _generator_row(graph: CoxeterGraph, i: int, k: Mapping[tuple[int, int], CyclotomicNumber]):
    def entry(r: int, c: int) -> CyclotomicNumber:
        if r != i - 1:
            return ONE if r == c else ZERO
        if c == i - 1:
            return -ONE
        j = c + 1
        return k.get((i, j), ZERO)
    return Matrix.build(graph.n, entry)


def k_coefficients(graph: CoxeterGraph,
                   f: WeightFunction | None,
                   ell: EdgeCoefficients | None = None) -> dict[tuple[int, int], CyclotomicNumber]:
    """The firing coefficients k(i,j) = f(i,j) * l(i,j) on directed edges."""
    if ell is None:
        ell = EdgeCoefficients.symmetric(graph)
    k = {}
    for i, j, _ in graph.edges():
        for (a, b) in ((i, j), (j, i)):
            v = ell.get(a, b)
            if f is not None:
                v = f.get(a, b) * v
            k[(a, b)] = v
    return k


def standard_generators(graph: CoxeterGraph,
                        ell: EdgeCoefficients | None = None) -> GeneratorSet:
    """Reflection-like generators of the (classical) geometric representation."""
    k = k_coefficients(graph, None, ell)
    mats = tuple(_generator_row(graph, i, k) for i in graph.vertices())
    return GeneratorSet(graph=graph, matrices=mats, k=k)


def generalized_generators(graph: CoxeterGraph,
                           f: WeightFunction,
                           ell: EdgeCoefficients | None = None) -> GeneratorSet:
    """Generators twisted by a legal weight function: row entry f(i,j)*l(i,j)."""
    violations = validate_legal(graph, f)
    if violations:
        raise ValueError("illegal weight function: " + "; ".join(map(str, violations)))
    k = k_coefficients(graph, f, ell)
    mats = tuple(_generator_row(graph, i, k) for i in graph.vertices())
    return GeneratorSet(graph=graph, matrices=mats, k=k)


@dataclass(frozen=True)
class RelationFailure:
    pair: tuple[int, int]
    order: object
    detail: str

    def __str__(self):
        return f"generators {self.pair} (m={self.order}): {self.detail}"


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    failures: tuple[RelationFailure, ...]
    pairs_checked: int


def verify_coxeter_relations(gens: GeneratorSet,
                             infinite_check_bound: int = 20) -> RelationReport:
    """Exact check of g_i^2 = I and (g_i g_j)^m(i,j) = I.

    Infinite bonds are falsified instead: (g_i g_j)^k != I for
    1 <= k <= infinite_check_bound.
    """
    graph = gens.graph
    failures = []
    pairs = 0
    for i in graph.vertices():
        g = gens.matrix(i)
        if not (g @ g).is_identity():
            failures.append(RelationFailure((i, i), 2, "generator is not an involution"))
    for i in graph.vertices():
        for j in graph.vertices():
            if i >= j:
                continue
            pairs += 1
            m = graph.m(i, j)
            prod = gens.matrix(i) @ gens.matrix(j)
            if m == INFINITY:
                power = Matrix.identity(graph.n)
                for k in range(1, infinite_check_bound + 1):
                    power = power @ prod
                    if power.is_identity():
                        failures.append(RelationFailure(
                            (i, j), m, f"(g_i g_j)^{k} = I on an infinite bond"))
                        break
            else:
                if not prod.power(m).is_identity():
                    failures.append(RelationFailure(
                        (i, j), m, f"(g_i g_j)^{m} is not the identity"))
    return RelationReport(ok=not failures, failures=tuple(failures), pairs_checked=pairs)


def evaluate_word(gens: GeneratorSet, word: Sequence[int]) -> Matrix:
    """Product of generator matrices; the empty word is the identity."""
    result = Matrix.identity(gens.n)
    for i in word:
        if not 1 <= i <= gens.n:
            raise IndexError(f"generator index {i} out of range 1..{gens.n}")
        result = result @ gens.matrix(i)
    return result


def words_equal_in_group(graph: CoxeterGraph,
                         w1: Sequence[int],
                         w2: Sequence[int]) -> bool:
    """Equality in the Coxeter group, decided through the faithful
    standard geometric representation."""
    gens = standard_generators(graph)
    return evaluate_word(gens, w1) == evaluate_word(gens, w2)


def gauge_from_potentials(potentials: Sequence[Scalar]) -> Matrix:
    """Diagonal change of basis from vertex potentials (all nonzero)."""
    vals = [_as_cyc(p) for p in potentials]
    if any(v.is_zero() for v in vals):
        raise ValueError("potentials must be nonzero")
    return Matrix.diagonal(vals)


def gauge_conjugate(J: Matrix, gens: GeneratorSet) -> GeneratorSet:
    """Conjugate every generator: g -> J g J^-1.

    With J built from balance-certificate potentials this carries the
    standard generators to the generalized ones.
    """
    Jinv = J.inverse()
    mats = tuple(J @ g @ Jinv for g in gens.matrices)
    k = {}
    for (i, j), v in gens.k.items():
        k[(i, j)] = J[i - 1, i - 1] * v * Jinv[j - 1, j - 1]
    return GeneratorSet(graph=gens.graph, matrices=mats, k=k)
