"""Breadth-first enumeration of exact matrix groups.

Elements are deduplicated by canonical entry keys, so collisions are
exact equality. When every generator is monomial with entries that are
powers of a fixed scalar, the enumeration runs in a compact
permutation-plus-exponents model instead of multiplying matrices.

The same monomial model converts to window notation for affine
permutations, which gives an independent combinatorial mirror of the
matrix group generated by a weighted-cycle witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .cyclotomic import INFINITY, CyclotomicNumber, ONE, order_of
from .matrices import Matrix


class MonomialMatrix:
    """One nonzero entry per row and column: row i holds base^exps[i-1] at
    column perm[i-1] (vertices 1-based)."""

    __slots__ = ("perm", "exps")

    def __init__(self, perm: Sequence[int], exps: Sequence[int]):
        perm = tuple(perm)
        exps = tuple(exps)
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        if len(exps) != n:
            raise ValueError("one exponent per row")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "MonomialMatrix":
        return MonomialMatrix(tuple(range(1, n + 1)), (0,) * n)

    def compose(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Matrix product self @ other in the compact model."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        perm = tuple(other.perm[p - 1] for p in self.perm)
        exps = tuple(self.exps[i] + other.exps[self.perm[i] - 1] for i in range(self.n))
        return MonomialMatrix(perm, exps)

    def exponent_sum(self) -> int:
        return sum(self.exps)

    def key(self, modulus: Union[int, float] = INFINITY) -> tuple:
        if modulus == INFINITY:
            return (self.perm, self.exps)
        return (self.perm, tuple(e % modulus for e in self.exps))

    def to_matrix(self, base: CyclotomicNumber) -> Matrix:
        n = self.n
        rows = [[CyclotomicNumber.rational(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][self.perm[i] - 1] = base ** self.exps[i]
        return Matrix(rows)

    def __eq__(self, other):
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.perm == other.perm and self.exps == other.exps

    def __hash__(self):
        return hash((self.perm, self.exps))

    def __repr__(self):
        return f"MonomialMatrix(perm={self.perm}, exps={self.exps})"


def monomial_from_matrix(matrix: Matrix, base: CyclotomicNumber,
                         max_power: int = 64) -> MonomialMatrix:
    """Recognize a matrix as monomial with entries that are powers of base."""
    n = matrix.size
    perm = []
    exps = []
    powers: dict = {ONE.key(): 0}
    pos, neg = ONE, ONE
    base_inv = base.inverse()
    for k in range(1, max_power + 1):
        # interleave so the smallest-magnitude exponent wins for finite orders
        pos = pos * base
        powers.setdefault(pos.key(), k)
        neg = neg * base_inv
        powers.setdefault(neg.key(), -k)
    for i in range(n):
        nonzero = [j for j in range(n) if not matrix.rows[i][j].is_zero()]
        if len(nonzero) != 1:
            raise ValueError(f"row {i + 1} is not monomial")
        j = nonzero[0]
        entry = matrix.rows[i][j]
        e = powers.get(entry.key())
        if e is None:
            raise ValueError(f"entry at ({i + 1},{j + 1}) is not a power of the base")
        perm.append(j + 1)
        exps.append(e)
    return MonomialMatrix(perm, exps)


def monomial_compose(a: MonomialMatrix, b: MonomialMatrix) -> MonomialMatrix:
    return a.compose(b)


class AffinePermutation:
    """Affine permutation in window notation: theta(i) for i = 1..n, with
    theta(i + n) = theta(i) + n and window sum n(n+1)/2."""

    __slots__ = ("window",)

    def __init__(self, window: Sequence[int]):
        window = tuple(window)
        n = len(window)
        if sum(window) != n * (n + 1) // 2:
            raise ValueError("window sum must be n(n+1)/2")
        if sorted(v % n for v in window) != list(range(n)):
            raise ValueError("window residues must cover all classes mod n")
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("AffinePermutation is immutable")

    @property
    def n(self) -> int:
        return len(self.window)

    @staticmethod
    def identity(n: int) -> "AffinePermutation":
        return AffinePermutation(tuple(range(1, n + 1)))

    def apply(self, i: int) -> int:
        n = self.n
        base = (i - 1) % n + 1
        shift = i - base
        return self.window[base - 1] + shift

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        """Function composition applying `other` first (matches the matrix
        product order of the monomial model)."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return AffinePermutation(tuple(self.apply(other.apply(i))
                                       for i in range(1, self.n + 1)))

    def __eq__(self, other):
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"AffinePermutation({list(self.window)})"


def affine_from_monomial(m: MonomialMatrix) -> AffinePermutation:
    """Window of the affine permutation matching a determinant-one monomial
    matrix: position j moves to perm^-1(j) shifted by n times its exponent."""
    if m.exponent_sum() != 0:
        raise ValueError("exponents must sum to zero")
    n = m.n
    inverse = [0] * n
    for i, p in enumerate(m.perm):
        inverse[p - 1] = i + 1
    window = tuple(inverse[j] - n * m.exps[inverse[j] - 1] for j in range(n))
    return AffinePermutation(window)


def affine_compose(a: AffinePermutation, b: AffinePermutation) -> AffinePermutation:
    return a.compose(b)


def affine_equal(a: AffinePermutation, b: AffinePermutation) -> bool:
    return a == b


@dataclass(frozen=True)
class EnumerationResult:
    closed: bool
    order: int | None
    elements: tuple
    sphere_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "closed": self.closed,
            "order": self.order,
            "explored": len(self.elements),
            "sphereSizes": list(self.sphere_sizes),
        }


def _resolve_generators(gens) -> list[Matrix]:
    matrices = list(getattr(gens, "matrices", gens))
    if not matrices:
        raise ValueError("need at least one generator")
    return matrices


def bfs_enumerate(gens, max_elements: int = 100000,
                  monomial_base: CyclotomicNumber | None = None) -> EnumerationResult:
    """Closure under right multiplication, breadth first, deduplicated by
    canonical keys.

    `monomial_base` switches to the permutation-plus-exponents model (all
    generators must be monomial in powers of that scalar); exponents are
    then tracked modulo the base's order so keys collide exactly on equal
    values.
    """
    if max_elements < 1:
        raise ValueError("max_elements must be positive")
    matrices = _resolve_generators(gens)
    n = matrices[0].size

    if monomial_base is not None:
        modulus = order_of(monomial_base)
        mono_gens = [monomial_from_matrix(m, monomial_base) for m in matrices]
        identity = MonomialMatrix.identity(n)
        key = lambda m: m.key(modulus)
    else:
        mono_gens = matrices
        identity = Matrix.identity(n)
        key = lambda m: m.key()

    seen = {key(identity)}
    elements = [identity]
    frontier = [identity]
    spheres = [1]
    closed = True
    while frontier:
        next_frontier = []
        for element in frontier:
            for g in mono_gens:
                new = element.compose(g) if monomial_base is not None else element @ g
                k = key(new)
                if k in seen:
                    continue
                if len(elements) >= max_elements:
                    closed = False
                    next_frontier = []
                    frontier = []
                    break
                seen.add(k)
                elements.append(new)
                next_frontier.append(new)
            else:
                continue
            break
        if next_frontier:
            spheres.append(len(next_frontier))
        frontier = next_frontier
        if not closed:
            break
    return EnumerationResult(
        closed=closed,
        order=len(elements) if closed else None,
        elements=tuple(elements),
        sphere_sizes=tuple(spheres),
    )


@dataclass(frozen=True)
class AffineIsoReport:
    ok: bool
    length_bound: int
    ball_sizes: tuple[int, ...]          # distinct elements among words of length <= l
    mismatches: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "lengthBound": self.length_bound,
            "ballSizes": list(self.ball_sizes),
            "mismatches": list(self.mismatches),
        }


def verify_affine_iso(n: int, a: CyclotomicNumber, word_length_bound: int) -> AffineIsoReport:
    """Three-way truncated isomorphism check for a weighted n-cycle whose
    total weight a has infinite order.

    For every word up to the length bound over the witness generators, the
    monomial-matrix product, the affine-permutation composition and the
    standard geometric representation of the affine cycle group must
    induce identical equalities between words, and therefore identical
    element counts per length.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if order_of(a) != INFINITY:
        raise ValueError("cycle weight must have infinite order")

    from .classify import monomial_witness
    from .georep import standard_generators
    from .graphs import CoxeterGraph

    witness = monomial_witness(n, a)
    matrix_gens = list(witness.generators())
    mono_gens = [monomial_from_matrix(m, a) for m in matrix_gens]
    affine_gens = [affine_from_monomial(m) for m in mono_gens]
    oracle = standard_generators(CoxeterGraph.cycle(n))
    # witness generator i < n plays the role of cycle vertex i; the closing
    # generator plays the remaining vertex n.
    oracle_gens = [oracle.matrix(i) for i in range(1, n + 1)]

    triples = [(MonomialMatrix.identity(n), AffinePermutation.identity(n),
                Matrix.identity(n))]
    seen_m: dict = {triples[0][0].key(): (triples[0][1], triples[0][2].key())}
    seen_a: dict = {triples[0][1]: triples[0][0].key()}
    seen_o: dict = {triples[0][2].key(): triples[0][0].key()}
    ball_sizes = [1]
    mismatches: list[str] = []

    current = triples
    for length in range(1, word_length_bound + 1):
        next_level = []
        for mono, aff, mat in current:
            for g_m, g_a, g_o in zip(mono_gens, affine_gens, oracle_gens):
                nm = mono.compose(g_m)
                na = aff.compose(g_a)
                no = mat @ g_o
                next_level.append((nm, na, no))
                km, ko = nm.key(), no.key()
                if km in seen_m:
                    prev_a, prev_ko = seen_m[km]
                    if prev_a != na or prev_ko != ko:
                        mismatches.append(
                            f"length {length}: matrix key reached with diverging mirrors")
                else:
                    seen_m[km] = (na, ko)
                    if na in seen_a and seen_a[na] != km:
                        mismatches.append(
                            f"length {length}: affine window collides across matrix classes")
                    if ko in seen_o and seen_o[ko] != km:
                        mismatches.append(
                            f"length {length}: oracle element collides across matrix classes")
                    seen_a.setdefault(na, km)
                    seen_o.setdefault(ko, km)
        current = next_level
        ball_sizes.append(len(seen_m))
        if not (len(seen_m) == len(seen_a) == len(seen_o)):
            mismatches.append(f"length {length}: ball sizes diverge "
                              f"({len(seen_m)}/{len(seen_a)}/{len(seen_o)})")

    return AffineIsoReport(ok=not mismatches, length_bound=word_length_bound,
                           ball_sizes=tuple(ball_sizes), mismatches=tuple(mismatches))
