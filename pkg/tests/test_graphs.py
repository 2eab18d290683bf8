import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxkit import (
    Balanced,
    CoxeterGraph,
    INFINITY,
    Matrix,
    Unbalanced,
    WeightFunction,
    check_balanced,
    cycle_weight,
    format_graph,
    fundamental_cycles,
    gather_cycle,
    generalized_generators,
    graph_from_json,
    graph_to_json,
    parse_graph,
    rational,
    simple_cycles,
    validate_legal,
    zeta,
)
from coxkit.graphs import GraphParseError, is_chordless

from conftest import random_legal_weights, signed_four_cycle


class TestCoxeterGraph:
    def test_missing_pair_commutes(self):
        g = CoxeterGraph(3, {(1, 2): 3})
        assert g.m(1, 2) == 3
        assert g.m(2, 1) == 3
        assert g.m(1, 3) == 2

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            CoxeterGraph(2, {(1, 1): 3})

    def test_label_below_three_rejected(self):
        with pytest.raises(ValueError):
            CoxeterGraph(2, {(1, 2): 2})

    def test_infinite_label(self):
        g = CoxeterGraph(2, {(1, 2): INFINITY})
        assert g.m(1, 2) == INFINITY

    def test_components(self):
        g = CoxeterGraph(5, {(1, 2): 3, (4, 5): 3})
        assert g.components() == [[1, 2], [3], [4, 5]]

    def test_single_cycle_detection(self):
        assert CoxeterGraph.cycle(4).is_single_cycle()
        assert not CoxeterGraph.chain(4).is_single_cycle()
        chorded = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
        assert not chorded.is_single_cycle()


class TestValidateLegal:
    def test_chain_with_reciprocal_weights(self):
        g = CoxeterGraph.chain(3)
        a, b = rational(2), zeta(3)
        f = WeightFunction({(1, 2): a, (2, 1): a.inverse(),
                            (2, 3): b, (3, 2): b.inverse()})
        assert validate_legal(g, f) == []

    def test_non_reciprocal_pair(self):
        g = CoxeterGraph.chain(2)
        f = WeightFunction.__new__(WeightFunction)
        object.__setattr__(f, "_values", {(1, 2): rational(2), (2, 1): rational(2)})
        violations = validate_legal(g, f)
        assert any("not 1" in str(v) for v in violations)

    def test_missing_reverse_orientation(self):
        g = CoxeterGraph.chain(2)
        f = WeightFunction.__new__(WeightFunction)
        object.__setattr__(f, "_values", {(1, 2): rational(2)})
        violations = validate_legal(g, f)
        assert any("undefined" in str(v) for v in violations)

    def test_weight_on_non_edge(self):
        g = CoxeterGraph(3, {(1, 2): 3})
        f = WeightFunction({(1, 2): 1, (1, 3): 2})
        violations = validate_legal(g, f)
        assert any("non-edge" in str(v) for v in violations)

    def test_zero_weight_rejected_at_construction(self):
        with pytest.raises(ValueError):
            WeightFunction({(1, 2): 0})


class TestCheckBalanced:
    def test_six_vertex_printed_potentials(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        assert isinstance(cert, Balanced)
        assert [p.literal() for p in cert.potentials] == ["1", "-1", "1", "-1", "-1", "-1"]
        assert cert.origins == (1,)
        assert cert.check(graph, f)

    def test_any_tree_is_balanced(self):
        rng = random.Random(11)
        g = CoxeterGraph(6, {(1, 2): 3, (1, 3): 3, (3, 4): 4, (3, 5): 3, (5, 6): 3})
        for _ in range(10):
            f = random_legal_weights(g, rng)
            cert = check_balanced(g, f)
            assert cert.balanced and cert.check(g, f)

    def test_unbalanced_four_cycle(self, four_cycle):
        f = signed_four_cycle(-1)
        cert = check_balanced(four_cycle, f)
        assert isinstance(cert, Unbalanced)
        assert cert.weight == -1
        assert cert.check(four_cycle, f)

    def test_potential_relation_on_every_edge(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        for (i, j) in graph.directed_edges():
            assert f.get(i, j) * cert.potential(j) == cert.potential(i)

    def test_componentwise_origins(self):
        g = CoxeterGraph(4, {(1, 2): 3, (3, 4): 3})
        f = WeightFunction({(1, 2): 2, (3, 4): zeta(3)})
        cert = check_balanced(g, f)
        assert cert.origins == (1, 3)
        assert cert.potential(1) == 1 and cert.potential(3) == 1

    def test_balanced_iff_fundamental_cycles_trivial(self, four_cycle):
        rng = random.Random(5)
        for _ in range(20):
            f = random_legal_weights(four_cycle, rng)
            cert = check_balanced(four_cycle, f)
            trivial = all(cycle_weight(f, c) == 1 for c in fundamental_cycles(four_cycle))
            assert cert.balanced == trivial


class TestCycleWeight:
    def test_four_cycle_product(self, four_cycle):
        a, b, c, d = rational(2), zeta(3), rational(-1), rational(Fraction(1, 2))
        f = WeightFunction({(1, 2): a, (2, 3): b, (3, 4): c, (4, 1): d})
        assert cycle_weight(f, (1, 2, 3, 4, 1)) == a * b * c * d

    def test_forward_backward_cancels(self):
        g = CoxeterGraph.chain(4)
        rng = random.Random(3)
        f = random_legal_weights(g, rng)
        assert cycle_weight(f, (1, 2, 3, 4, 3, 2, 1)) == 1

    def test_triangle_of_minus_ones(self):
        f = WeightFunction({(1, 2): -1, (2, 3): -1, (3, 1): -1})
        assert cycle_weight(f, (1, 2, 3, 1)) == -1

    def test_rotation_invariance_and_reversal(self, four_cycle):
        rng = random.Random(9)
        f = random_legal_weights(four_cycle, rng)
        w = cycle_weight(f, (1, 2, 3, 4, 1))
        assert cycle_weight(f, (2, 3, 4, 1, 2)) == w
        assert cycle_weight(f, (1, 4, 3, 2, 1)) == w.inverse()

    def test_non_adjacent_step_raises(self, four_cycle):
        f = signed_four_cycle(1)
        with pytest.raises(KeyError):
            cycle_weight(f, (1, 3))


class TestGatherCycle:
    def test_four_cycle_general_weights(self, four_cycle):
        a, b, c, d = rational(2), zeta(3), rational(-1), rational(Fraction(1, 2))
        f = WeightFunction({(1, 2): a, (2, 3): b, (3, 4): c, (4, 1): d})
        h, J = gather_cycle(four_cycle, f)
        assert h.get(1, 2) == 1 and h.get(2, 3) == 1 and h.get(3, 4) == 1
        assert h.get(4, 1) == a * b * c * d
        assert J == Matrix.diagonal([1, a, a * b, a * b * c])
        # conjugation contract
        gen_f = generalized_generators(four_cycle, f)
        gen_h = generalized_generators(four_cycle, h)
        Jinv = J.inverse()
        for x, y in zip(gen_f.matrices, gen_h.matrices):
            assert J @ x @ Jinv == y

    def test_trivial_weights_give_identity(self, four_cycle):
        f = WeightFunction.ones(four_cycle)
        h, J = gather_cycle(four_cycle, f)
        assert h == f
        assert J.is_identity()

    def test_signs_cancel_to_balanced(self, four_cycle):
        f = WeightFunction({(1, 2): -1, (2, 3): -1, (3, 4): 1, (4, 1): 1})
        h, _ = gather_cycle(four_cycle, f)
        assert h.get(4, 1) == 1
        assert check_balanced(four_cycle, h).balanced

    def test_gathered_cycle_weight_is_preserved(self, four_cycle):
        rng = random.Random(2)
        f = random_legal_weights(four_cycle, rng)
        h, _ = gather_cycle(four_cycle, f)
        assert validate_legal(four_cycle, h) == []
        path = (1, 2, 3, 4, 1)
        assert cycle_weight(h, path) == cycle_weight(f, path)

    def test_rejects_non_cycle(self):
        with pytest.raises(ValueError):
            gather_cycle(CoxeterGraph.chain(4), WeightFunction.ones(CoxeterGraph.chain(4)))


class TestFundamentalCycles:
    def test_tree_has_none(self):
        assert fundamental_cycles(CoxeterGraph.chain(5)) == []

    def test_single_cycle_has_one(self):
        cycles = fundamental_cycles(CoxeterGraph.cycle(5))
        assert len(cycles) == 1
        assert len(cycles[0]) == 6  # closed path over 5 edges

    def test_chorded_cycle_has_two(self):
        g = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
        cycles = fundamental_cycles(g)
        assert len(cycles) == 2  # |E| - |V| + components

    def test_cycles_are_closed_walks(self):
        g = CoxeterGraph(5, {(1, 2): 3, (2, 3): 3, (3, 1): 3, (3, 4): 3, (4, 5): 3, (5, 3): 3})
        for cycle in fundamental_cycles(g):
            assert cycle[0] == cycle[-1]
            for a, b in zip(cycle, cycle[1:]):
                assert g.has_edge(a, b)


class TestSimpleCycles:
    def test_counts_on_chorded_square(self):
        g = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
        cycles = simple_cycles(g)
        lengths = sorted(len(c) - 1 for c in cycles)
        assert lengths == [3, 3, 4]  # two triangles and the square

    def test_chordless_filter(self):
        g = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
        square = next(c for c in simple_cycles(g) if len(c) == 5)
        triangle = next(c for c in simple_cycles(g) if len(c) == 4)
        assert not is_chordless(g, square)
        assert is_chordless(g, triangle)


class TestFileFormat:
    def test_round_trip(self, six_vertex):
        graph, f = six_vertex
        text = format_graph(graph, f)
        graph2, f2 = parse_graph(text)
        assert graph2 == graph
        assert f2 == f

    def test_defaults_and_comments(self):
        text = """
        # a chain
        vertices 3
        edge 1 2            # unlabeled edge, weight 1
        edge 2 3 m=4 w=1/2*zeta(3)
        """
        graph, f = parse_graph(text)
        assert graph.m(1, 2) == 3
        assert graph.m(2, 3) == 4
        assert f.get(1, 2) == 1
        assert f.get(2, 3) == rational(Fraction(1, 2)) * zeta(3)
        assert f.get(3, 2) == (rational(Fraction(1, 2)) * zeta(3)).inverse()

    def test_infinite_label_round_trip(self):
        text = "vertices 2\nedge 1 2 m=inf w=-1\n"
        graph, f = parse_graph(text)
        assert graph.m(1, 2) == INFINITY
        assert format_graph(graph, f) == text

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(GraphParseError) as exc:
            parse_graph("vertices 2\nedge 1 5\n")
        assert "line 2" in str(exc.value)
        with pytest.raises(GraphParseError) as exc:
            parse_graph("edge 1 2\n")
        assert "line 1" in str(exc.value)
        with pytest.raises(GraphParseError) as exc:
            parse_graph("vertices 2\nedge 1 2 w=0.5\n")
        assert "line 2" in str(exc.value)

    def test_json_mirror(self, six_vertex):
        graph, f = six_vertex
        data = graph_to_json(graph, f)
        graph2, f2 = graph_from_json(data)
        assert graph2 == graph and f2 == f
        assert data["vertices"] == 6
        assert data["edges"][0] == {"i": 1, "j": 2, "m": 3, "w": "-1"}


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=3, max_value=6), st.randoms(use_true_random=False))
def test_cycle_weight_rotation_property(n, pyrandom):
    graph = CoxeterGraph.cycle(n)
    f = random_legal_weights(graph, pyrandom)
    path = list(range(1, n + 1)) + [1]
    w = cycle_weight(f, path)
    for r in range(1, n):
        rotated = path[r:-1] + path[: r + 1]
        assert cycle_weight(f, tuple(rotated)) == w
    assert cycle_weight(f, tuple(reversed(path))) == w.inverse()
