"""Faithfulness classification with machine-checkable certificates.

A balanced weight function makes the generalized representation a
diagonal conjugate of the standard one, hence faithful; the verdict
carries the potentials and the gauge matrix. An induced (chordless)
simply-laced cycle whose weight has finite order > 1 collapses the
restriction to that cycle's parabolic subgroup onto a finite monomial
group of order m^(c-1) * c!, hence the representation is not faithful;
the verdict carries the conjugating matrix and the monomial images,
verified entry-by-entry before being returned. A single cycle whose
weight has infinite order realizes the affine group of its size
faithfully. Everything else is honestly Unknown: the bounded probe over
products of fundamental-cycle weights records what it found, but a
finite-order product that no induced cycle realizes proves nothing.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Union

from .cyclotomic import INFINITY, CyclotomicNumber, ONE, order_of
from .georep import (
    gauge_conjugate,
    gauge_from_potentials,
    generalized_generators,
    standard_generators,
)
from .graphs import (
    Balanced,
    CoxeterGraph,
    WeightFunction,
    check_balanced,
    cycle_weight,
    fundamental_cycles,
    is_chordless,
    simple_cycles,
    validate_legal,
)
from .matrices import Matrix


def quotient_order(n: int, m: int) -> int:
    """Order m^(n-1) * n! of the monomial quotient on an n-cycle whose
    gathered weight has order m."""
    if n < 3 or m < 1:
        raise ValueError("need a cycle length n >= 3 and order m >= 1")
    return m ** (n - 1) * math.factorial(n)


@dataclass(frozen=True)
class MonomialWitness:
    """Conjugation data collapsing a weighted cycle onto monomial matrices."""
    n: int
    weight: CyclotomicNumber
    cycle_generators: tuple[Matrix, ...]   # generators of the gathered cycle
    basis_change: Matrix                   # J with J g_i J^-1 monomial
    transposition_images: tuple[Matrix, ...]
    closing_image: Matrix                  # monomial image of the closing generator

    def generators(self) -> tuple[Matrix, ...]:
        return self.transposition_images + (self.closing_image,)


def _swap_matrix(n: int, i: int) -> Matrix:
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return Matrix([[1 if c == perm[r] else 0 for c in range(n)] for r in range(n)])


def monomial_witness(n: int, a: CyclotomicNumber) -> MonomialWitness:
    """Build the witness for a cycle of length n with gathered weight a.

    The cycle carries weight a on the closing edge (n -> 1) and 1
    elsewhere; J has 1 on the diagonal, -1 below it and -a^-1 in the
    corner. The conjugates J g_i J^-1 are verified exactly before the
    witness is returned (for a = 1 the matrix J is singular, so the
    expected monomial images are verified by pattern instead).
    """
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    if a.is_zero():
        raise ValueError("cycle weight must be nonzero")
    a_inv = a.inverse()

    cycle = CoxeterGraph.cycle(n)
    weights = {(i, i + 1): ONE for i in range(1, n)}
    weights[(n, 1)] = a
    gens = generalized_generators(cycle, WeightFunction(weights)).matrices

    def j_entry(r: int, c: int):
        if r == c:
            return 1
        if r == c + 1:
            return -1
        if r == 0 and c == n - 1:
            return -a_inv
        return 0
    J = Matrix.build(n, j_entry)

    expected_swaps = tuple(_swap_matrix(n, i) for i in range(1, n))

    def corner_entry(r: int, c: int):
        if r == 0 and c == n - 1:
            return a_inv
        if r == n - 1 and c == 0:
            return a
        if r == c and 0 < r < n - 1:
            return 1
        return 0
    expected_corner = Matrix.build(n, corner_entry)

    if a != 1:
        J_inv = J.inverse()
        for i in range(n - 1):
            got = J @ gens[i] @ J_inv
            if got != expected_swaps[i]:
                raise AssertionError(f"conjugate of cycle generator {i + 1} is not the expected swap")
        got = J @ gens[n - 1] @ J_inv
        if got != expected_corner:
            raise AssertionError("conjugate of the closing generator is not the expected monomial matrix")
    else:
        # weight 1 makes J singular (det J = 1 - 1/a); check the closing
        # image is the transposition of 1 and n instead.
        perm = list(range(n))
        perm[0], perm[n - 1] = perm[n - 1], perm[0]
        swap_1n = Matrix([[1 if c == perm[r] else 0 for c in range(n)] for r in range(n)])
        if expected_corner != swap_1n:
            raise AssertionError("unexpected closing image for weight 1")

    return MonomialWitness(
        n=n,
        weight=a,
        cycle_generators=gens,
        basis_change=J,
        transposition_images=expected_swaps,
        closing_image=expected_corner,
    )


@dataclass(frozen=True)
class FaithfulBalanced:
    certificate: Balanced
    gauge: Matrix

    kind = "FaithfulBalanced"


@dataclass(frozen=True)
class NotFaithful:
    cycle: tuple[int, ...]
    weight: CyclotomicNumber
    order: int
    quotient_order: int
    witness: MonomialWitness

    kind = "NotFaithful"


@dataclass(frozen=True)
class FaithfulAffineCycle:
    n: int
    weight: CyclotomicNumber

    kind = "FaithfulAffineCycle"


@dataclass(frozen=True)
class ProbeFinding:
    """A finite-order weight seen during probing that no induced
    simply-laced cycle realizes; informational only."""
    source: str                       # "cycle" or "product"
    cycle: tuple[int, ...] | None
    exponents: tuple[int, ...] | None
    weight: CyclotomicNumber
    order: Union[int, float]


@dataclass(frozen=True)
class Unknown:
    probed: tuple[ProbeFinding, ...]

    kind = "Unknown"


FaithfulnessVerdict = Union[FaithfulBalanced, NotFaithful, FaithfulAffineCycle, Unknown]


def _usable_cycle(graph: CoxeterGraph, cycle: tuple[int, ...]) -> bool:
    """The non-faithfulness argument needs an induced cycle whose edges all
    carry label 3 (so its parabolic subgroup is the affine group of the cycle)."""
    edges_ok = all(graph.m(a, b) == 3 for a, b in zip(cycle, cycle[1:]))
    return edges_ok and is_chordless(graph, cycle)


def classify(graph: CoxeterGraph, f: WeightFunction,
             probe_bound: int = 6) -> FaithfulnessVerdict:
    """Decide faithfulness of the generalized geometric representation.

    Balanced graphs are faithful with a gauge certificate. Otherwise every
    simple cycle is inspected (shortest first) for an induced, simply-laced
    cycle whose weight has finite order > 1, which yields a NotFaithful
    verdict with a verified monomial witness. A single all-label-3 cycle
    with an infinite-order weight is faithful with affine image. Signed
    simply-laced graphs always resolve; in the remaining open regime the
    verdict is Unknown, carrying whatever the bounded probe over products
    of fundamental-cycle weights turned up.
    """
    violations = validate_legal(graph, f)
    if violations:
        raise ValueError("illegal weight function: " + "; ".join(map(str, violations)))

    certificate = check_balanced(graph, f)
    if certificate.balanced:
        gauge = gauge_from_potentials(certificate.potentials)
        conjugated = gauge_conjugate(gauge, standard_generators(graph))
        twisted = generalized_generators(graph, f)
        if any(x != y for x, y in zip(conjugated.matrices, twisted.matrices)):
            raise AssertionError("gauge certificate failed verification")
        return FaithfulBalanced(certificate=certificate, gauge=gauge)

    findings: list[ProbeFinding] = []
    for cycle in simple_cycles(graph):
        w = cycle_weight(f, cycle)
        if w == 1:
            continue
        d = order_of(w)
        if d == INFINITY:
            continue
        if _usable_cycle(graph, cycle):
            c = len(cycle) - 1
            witness = monomial_witness(c, w)
            return NotFaithful(cycle=cycle, weight=w, order=d,
                               quotient_order=quotient_order(c, d), witness=witness)
        findings.append(ProbeFinding(source="cycle", cycle=cycle, exponents=None,
                                     weight=w, order=d))

    if graph.is_single_cycle() and all(m == 3 for _, _, m in graph.edges()):
        order = graph.cycle_order()
        total = cycle_weight(f, tuple(order + [order[0]]))
        if order_of(total) == INFINITY:
            return FaithfulAffineCycle(n=graph.n, weight=total)

    findings.extend(_probe_products(graph, f, probe_bound))
    return Unknown(probed=tuple(findings))


def _probe_products(graph: CoxeterGraph, f: WeightFunction,
                    probe_bound: int, max_vectors: int = 20000) -> list[ProbeFinding]:
    """Search bounded integer combinations of fundamental-cycle weights for
    finite-order values (exponent vectors with at most 3 nonzero entries)."""
    cycles = fundamental_cycles(graph)
    weights = [cycle_weight(f, c) for c in cycles]
    findings = []
    count = 0
    exponent_values = [e for e in range(-probe_bound, probe_bound + 1) if e]
    for size in range(1, min(3, len(weights)) + 1):
        for positions in itertools.combinations(range(len(weights)), size):
            for exps in itertools.product(exponent_values, repeat=size):
                if exps[0] < 0:
                    continue  # a value and its inverse have the same order
                count += 1
                if count > max_vectors:
                    return findings
                value = ONE
                for pos, e in zip(positions, exps):
                    value = value * weights[pos] ** e
                if value == 1:
                    continue
                d = order_of(value)
                if d != INFINITY:
                    vector = [0] * len(weights)
                    for pos, e in zip(positions, exps):
                        vector[pos] = e
                    findings.append(ProbeFinding(source="product", cycle=None,
                                                 exponents=tuple(vector),
                                                 weight=value, order=d))
    return findings


# -- JSON rendering ----------------------------------------------------

def verdict_to_json(verdict: FaithfulnessVerdict) -> dict:
    from .cyclotomic import format_approx

    def scalar(x: CyclotomicNumber) -> dict:
        return {"exact": x.literal(), "approx": format_approx(x)}

    if isinstance(verdict, FaithfulBalanced):
        return {
            "kind": verdict.kind,
            "potentials": [scalar(p) for p in verdict.certificate.potentials],
            "origins": list(verdict.certificate.origins),
            "gauge": verdict.gauge.to_json_entries(),
        }
    if isinstance(verdict, NotFaithful):
        return {
            "kind": verdict.kind,
            "cycle": list(verdict.cycle),
            "cycleWeight": scalar(verdict.weight),
            "order": verdict.order,
            "quotientOrder": verdict.quotient_order,
            "witness": {
                "basisChange": verdict.witness.basis_change.to_json_entries(),
                "transpositions": [m.to_json_entries()
                                   for m in verdict.witness.transposition_images],
                "closing": verdict.witness.closing_image.to_json_entries(),
            },
        }
    if isinstance(verdict, FaithfulAffineCycle):
        return {"kind": verdict.kind, "n": verdict.n, "cycleWeight": scalar(verdict.weight)}
    if isinstance(verdict, Unknown):
        return {
            "kind": verdict.kind,
            "probed": [
                {
                    "source": p.source,
                    "cycle": list(p.cycle) if p.cycle else None,
                    "exponents": list(p.exponents) if p.exponents else None,
                    "weight": scalar(p.weight),
                    "order": "inf" if p.order == INFINITY else p.order,
                }
                for p in verdict.probed
            ],
        }
    raise TypeError(f"not a verdict: {verdict!r}")
