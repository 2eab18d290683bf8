"""Coxeter graphs with edge labels and legal weight functions.

A Coxeter graph stores the bond labels m(i,j) >= 3 (or infinity) on its
edges; an absent pair means m = 2, i.e. commuting generators. A legal
weight function assigns a nonzero scalar to every directed edge with
f(i,j) * f(j,i) = 1. Vertices are numbered 1..n throughout the public
API.

Balance checking produces re-checkable certificates: either vertex
potentials (the potential of v is the weight of a path from v back to
the component origin, so f(i,j) = potential(i)/potential(j) on every
directed edge) or an explicit closed path whose weight differs from 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .cyclotomic import (
    INFINITY,
    CyclotomicNumber,
    ONE,
    ScalarParseError,
    parse_scalar,
)
from .matrices import Matrix, Scalar, _as_cyc

MLabel = Union[int, float]


def _check_m(m: MLabel) -> MLabel:
    if m == INFINITY:
        return INFINITY
    if not isinstance(m, int) or m < 3:
        raise ValueError(f"edge label must be an integer >= 3 or infinity, got {m!r}")
    return m


class CoxeterGraph:
    """Vertices 1..n plus labelled edges; missing pairs commute (m = 2)."""

    __slots__ = ("n", "_labels")

    def __init__(self, n: int, edges: Mapping[tuple[int, int], MLabel] | Iterable = ()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        object.__setattr__(self, "n", n)
        labels: dict[tuple[int, int], MLabel] = {}
        items = edges.items() if isinstance(edges, Mapping) else edges
        for (i, j), m in items:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad edge ({i},{j})")
            key = (min(i, j), max(i, j))
            m = _check_m(m)
            if key in labels and labels[key] != m:
                raise ValueError(f"conflicting labels on edge {key}")
            labels[key] = m
        object.__setattr__(self, "_labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("CoxeterGraph is immutable")

    @staticmethod
    def chain(n: int, m: MLabel = 3) -> "CoxeterGraph":
        return CoxeterGraph(n, {(i, i + 1): m for i in range(1, n)})

    @staticmethod
    def cycle(n: int, m: MLabel = 3) -> "CoxeterGraph":
        if n < 3:
            raise ValueError("a cycle needs at least three vertices")
        edges = {(i, i + 1): m for i in range(1, n)}
        edges[(1, n)] = m
        return CoxeterGraph(n, edges)

    def m(self, i: int, j: int) -> MLabel:
        if i == j:
            return 1
        return self._labels.get((min(i, j), max(i, j)), 2)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and (min(i, j), max(i, j)) in self._labels

    def edges(self) -> list[tuple[int, int, MLabel]]:
        return [(i, j, m) for (i, j), m in sorted(self._labels.items())]

    def directed_edges(self) -> list[tuple[int, int]]:
        out = []
        for i, j, _ in self.edges():
            out.append((i, j))
            out.append((j, i))
        return out

    def neighbors(self, v: int) -> list[int]:
        out = [j for (i, j) in self._labels if i == v] + [i for (i, j) in self._labels if j == v]
        return sorted(out)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def components(self) -> list[list[int]]:
        seen = set()
        comps = []
        for start in self.vertices():
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = [start]
            while queue:
                v = queue.pop(0)
                for u in self.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        queue.append(u)
            comps.append(sorted(comp))
        return comps

    def is_simply_laced(self) -> bool:
        return all(m == 3 for _, _, m in self.edges())

    def is_single_cycle(self) -> bool:
        """One component in which every vertex has exactly two neighbours."""
        if self.n < 3 or len(self._labels) != self.n:
            return False
        if len(self.components()) != 1:
            return False
        return all(len(self.neighbors(v)) == 2 for v in self.vertices())

    def cycle_order(self) -> list[int]:
        """Vertices of a single-cycle graph in traversal order from vertex 1."""
        if not self.is_single_cycle():
            raise ValueError("graph is not a single cycle")
        order = [1]
        prev = None
        while len(order) < self.n:
            nbrs = [u for u in self.neighbors(order[-1]) if u != prev]
            prev = order[-1]
            order.append(min(nbrs))
        return order

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.n == other.n and self._labels == other._labels

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._labels.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"CoxeterGraph(n={self.n}, edges={self.edges()})"


class WeightFunction:
    """Nonzero scalar on each directed edge; reverse orientation is the inverse."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[tuple[int, int], Scalar]):
        table: dict[tuple[int, int], CyclotomicNumber] = {}
        for (i, j), v in values.items():
            w = _as_cyc(v)
            if w.is_zero():
                raise ValueError(f"weight on ({i},{j}) must be nonzero")
            table[(i, j)] = w
        for (i, j), w in list(table.items()):
            if (j, i) not in table:
                table[(j, i)] = w.inverse()
        object.__setattr__(self, "_values", table)

    def __setattr__(self, name, value):
        raise AttributeError("WeightFunction is immutable")

    @staticmethod
    def ones(graph: CoxeterGraph) -> "WeightFunction":
        return WeightFunction({(i, j): 1 for i, j, _ in graph.edges()})

    def get(self, i: int, j: int) -> CyclotomicNumber:
        try:
            return self._values[(i, j)]
        except KeyError:
            raise KeyError(f"no weight defined on directed edge ({i},{j})") from None

    def defined(self, i: int, j: int) -> bool:
        return (i, j) in self._values

    def items(self):
        return sorted(self._values.items())

    def is_signed(self) -> bool:
        return all(w == 1 or w == -1 for _, w in self._values.items())

    def __eq__(self, other):
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self._values == other._values

    def __repr__(self):
        shown = {e: w.literal() for e, w in self.items()}
        return f"WeightFunction({shown})"


@dataclass(frozen=True)
class WeightViolation:
    edge: tuple[int, int]
    reason: str

    def __str__(self):
        return f"edge {self.edge}: {self.reason}"


def validate_legal(graph: CoxeterGraph, f: WeightFunction) -> list[WeightViolation]:
    """Check that f covers exactly the directed edges of the graph and that
    opposite orientations multiply to 1. Returns all violations (empty = ok)."""
    violations = []
    directed = set(graph.directed_edges())
    for (i, j) in sorted(directed):
        if not f.defined(i, j):
            violations.append(WeightViolation((i, j), "undefined directed edge"))
    for (i, j), w in f.items():
        if (i, j) not in directed:
            violations.append(WeightViolation((i, j), "weight on a non-edge"))
            continue
        if f.defined(j, i) and w * f.get(j, i) != 1:
            if i < j:
                violations.append(
                    WeightViolation((i, j), "product with reverse orientation is not 1"))
    return violations


@dataclass(frozen=True)
class Balanced:
    """Certificate: f(i,j) = potentials[i]/potentials[j] on every directed edge,
    with potential 1 at the lowest-index vertex of each component."""
    potentials: tuple[CyclotomicNumber, ...]
    origins: tuple[int, ...]

    @property
    def balanced(self) -> bool:
        return True

    def potential(self, v: int) -> CyclotomicNumber:
        return self.potentials[v - 1]

    def check(self, graph: CoxeterGraph, f: WeightFunction) -> bool:
        for (i, j) in graph.directed_edges():
            if f.get(i, j) * self.potential(j) != self.potential(i):
                return False
        return all(self.potential(o) == 1 for o in self.origins)


@dataclass(frozen=True)
class Unbalanced:
    """Certificate: a closed path whose weight differs from 1."""
    cycle: tuple[int, ...]
    weight: CyclotomicNumber

    @property
    def balanced(self) -> bool:
        return False

    def check(self, graph: CoxeterGraph, f: WeightFunction) -> bool:
        return cycle_weight(f, self.cycle) == self.weight and self.weight != 1


BalanceCertificate = Union[Balanced, Unbalanced]


def _spanning_forest(graph: CoxeterGraph):
    """BFS forest from the lowest-index vertex of each component.

    Returns (parent, order, origins, non_tree_edges); parent maps vertex ->
    (parent vertex, None for origins), order is the BFS visit order.
    """
    parent: dict[int, int | None] = {}
    order: list[int] = []
    origins: list[int] = []
    for start in graph.vertices():
        if start in parent:
            continue
        origins.append(start)
        parent[start] = None
        queue = [start]
        order.append(start)
        while queue:
            v = queue.pop(0)
            for u in graph.neighbors(v):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
                    queue.append(u)
    tree_edges = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    non_tree = [(i, j) for i, j, _ in graph.edges() if (i, j) not in tree_edges]
    return parent, order, origins, non_tree


def _tree_path(parent: Mapping[int, int | None], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def check_balanced(graph: CoxeterGraph, f: WeightFunction) -> BalanceCertificate:
    """Decide balance by spanning-forest potentials.

    The potential of each vertex is the weight of the tree path from the
    vertex to its component origin; the first non-tree edge that breaks
    the potential relation yields its fundamental cycle as the witness.
    """
    parent, order, origins, non_tree = _spanning_forest(graph)
    pot: dict[int, CyclotomicNumber] = {}
    for v in order:
        p = parent[v]
        if p is None:
            pot[v] = ONE
        else:
            pot[v] = f.get(v, p) * pot[p]
    for (i, j) in non_tree:
        if f.get(i, j) * pot[j] != pot[i]:
            cycle = _fundamental_cycle(parent, i, j)
            return Unbalanced(cycle=cycle, weight=cycle_weight(f, cycle))
    return Balanced(potentials=tuple(pot[v] for v in graph.vertices()),
                    origins=tuple(origins))


def _fundamental_cycle(parent, i: int, j: int) -> tuple[int, ...]:
    """Closed path using non-tree edge (i, j): j -> tree path -> i -> j."""
    pi = _tree_path(parent, i)
    pj = _tree_path(parent, j)
    seti = {v: k for k, v in enumerate(pi)}
    meet = next(k for k, v in enumerate(pj) if v in seti)
    up = pj[: meet + 1]                     # j .. meeting point
    down = pi[: seti[pj[meet]]][::-1]       # below meeting point .. i
    return tuple(up + down + [j])


def cycle_weight(f: WeightFunction, path: Sequence[int]) -> CyclotomicNumber:
    """Product of f over the directed edges of the path (closed or not)."""
    total = ONE
    for a, b in zip(path, path[1:]):
        total = total * f.get(a, b)
    return total


def fundamental_cycles(graph: CoxeterGraph) -> list[tuple[int, ...]]:
    """One closed path per non-tree edge of the BFS spanning forest."""
    parent, _, _, non_tree = _spanning_forest(graph)
    return [_fundamental_cycle(parent, i, j) for (i, j) in non_tree]


def simple_cycles(graph: CoxeterGraph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """All simple cycles as closed paths v0..vk v0, shortest first.

    Each cycle is reported once, rooted at its smallest vertex with the
    smaller neighbour second; intended for desk-scale graphs.
    """
    cycles = []
    cap = max_len if max_len is not None else graph.n

    def extend(path: list[int], root: int):
        v = path[-1]
        for u in graph.neighbors(v):
            if u == root and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path + [root]))
            elif u > root and u not in path and len(path) < cap:
                extend(path + [u], root)

    for root in graph.vertices():
        extend([root], root)
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def is_chordless(graph: CoxeterGraph, cycle: Sequence[int]) -> bool:
    """True when the closed path is an induced cycle (no edges between
    non-consecutive cycle vertices)."""
    verts = list(cycle[:-1])
    k = len(verts)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if graph.has_edge(verts[a], verts[b]):
                return False
    return True


def gather_cycle(graph: CoxeterGraph, f: WeightFunction) -> tuple[WeightFunction, Matrix]:
    """Push all the weight of a single cycle onto its closing edge.

    For the cycle 1-2-...-n-1 with weights a_1..a_n this returns the
    weight function h with h(i,i+1) = 1 and h(n,1) = a_1*...*a_n, and the
    diagonal change of basis J = diag(1, a_1, a_1 a_2, ...) satisfying
    J * g_i(f) * J^-1 = g_i(h) for the representation generators.
    """
    if not graph.is_single_cycle():
        raise ValueError("graph is not a single cycle")
    order = graph.cycle_order()
    if order != list(range(1, graph.n + 1)):
        raise ValueError("cycle vertices must be numbered consecutively around the cycle")
    n = graph.n
    prefix = [ONE]
    for i in range(1, n):
        prefix.append(prefix[-1] * f.get(i, i + 1))
    total = prefix[-1] * f.get(n, 1)
    h_values = {(i, i + 1): ONE for i in range(1, n)}
    h_values[(n, 1)] = total
    return WeightFunction(h_values), Matrix.diagonal(prefix)


# -- file format -------------------------------------------------------

class GraphParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str) -> tuple[CoxeterGraph, WeightFunction]:
    """Parse the line-oriented graph format.

    Header "vertices N", then "edge i j m=<label|inf> w=<scalar>" lines
    giving f(i, j); '#' starts a comment. Both m= and w= are optional
    (defaults: m=3, w=1).
    """
    n = None
    edges: dict[tuple[int, int], MLabel] = {}
    weights: dict[tuple[int, int], CyclotomicNumber] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise GraphParseError(line_no, "duplicate vertices header")
            try:
                n = int(parts[1])
            except (IndexError, ValueError):
                raise GraphParseError(line_no, "vertices header needs an integer") from None
        elif parts[0] == "edge":
            if n is None:
                raise GraphParseError(line_no, "edge before vertices header")
            try:
                i, j = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise GraphParseError(line_no, "edge needs two vertex numbers") from None
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise GraphParseError(line_no, f"edge ({i},{j}) out of range")
            m: MLabel = 3
            w = ONE
            for opt in parts[3:]:
                if opt.startswith("m="):
                    value = opt[2:]
                    if value in ("inf", "infinity", "oo"):
                        m = INFINITY
                    else:
                        try:
                            m = int(value)
                        except ValueError:
                            raise GraphParseError(line_no, f"bad label {value!r}") from None
                        if m < 3:
                            raise GraphParseError(line_no, "edge label must be >= 3")
                elif opt.startswith("w="):
                    try:
                        w = parse_scalar(opt[2:])
                    except ScalarParseError as exc:
                        raise GraphParseError(line_no, f"bad weight: {exc}") from None
                    if w.is_zero():
                        raise GraphParseError(line_no, "weight must be nonzero")
                else:
                    raise GraphParseError(line_no, f"unknown option {opt!r}")
            key = (min(i, j), max(i, j))
            if key in edges:
                raise GraphParseError(line_no, f"duplicate edge {key}")
            edges[key] = m
            weights[(i, j)] = w
        else:
            raise GraphParseError(line_no, f"unknown directive {parts[0]!r}")
    if n is None:
        raise GraphParseError(1, "missing vertices header")
    graph = CoxeterGraph(n, edges)
    return graph, WeightFunction(weights)


def format_graph(graph: CoxeterGraph, f: WeightFunction | None = None) -> str:
    lines = [f"vertices {graph.n}"]
    for i, j, m in graph.edges():
        label = "inf" if m == INFINITY else str(m)
        parts = [f"edge {i} {j}", f"m={label}"]
        if f is not None:
            parts.append(f"w={f.get(i, j).literal()}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def graph_to_json(graph: CoxeterGraph, f: WeightFunction | None = None) -> dict:
    edges = []
    for i, j, m in graph.edges():
        entry: dict = {"i": i, "j": j, "m": "inf" if m == INFINITY else m}
        if f is not None:
            entry["w"] = f.get(i, j).literal()
        edges.append(entry)
    return {"vertices": graph.n, "edges": edges}


def graph_from_json(data: Mapping) -> tuple[CoxeterGraph, WeightFunction]:
    n = int(data["vertices"])
    edges: dict[tuple[int, int], MLabel] = {}
    weights: dict[tuple[int, int], CyclotomicNumber] = {}
    for entry in data.get("edges", []):
        i, j = int(entry["i"]), int(entry["j"])
        m = entry.get("m", 3)
        m = INFINITY if m in ("inf", INFINITY) else int(m)
        edges[(min(i, j), max(i, j))] = m
        weights[(i, j)] = parse_scalar(str(entry.get("w", "1")))
    graph = CoxeterGraph(n, edges)
    return graph, WeightFunction(weights)
