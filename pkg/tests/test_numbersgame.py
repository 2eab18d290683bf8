import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxkit import (
    CoxeterGraph,
    INFINITY,
    Matrix,
    MoveClass,
    WeightFunction,
    brute_force_is_reduced,
    check_balanced,
    classical_k,
    descent_set,
    fire,
    gauged_start,
    imo_pentagon_run,
    is_reduced,
    k_coefficients,
    move_class,
    play,
    rational,
    reachable_positions,
    unit_position,
    validate_generalized_weights,
    words_equal_in_group,
    zeta,
)
from coxkit.numbersgame import as_position

from conftest import random_balanced_weights, signed_four_cycle


@pytest.fixture
def a2():
    return CoxeterGraph.chain(2)


@pytest.fixture
def a3():
    return CoxeterGraph.chain(3)


class TestFire:
    def test_basic_move(self, a2):
        assert fire(a2, classical_k(a2), unit_position(2), 1) == as_position([-1, 2])

    def test_isolated_vertex_flips_sign(self):
        g = CoxeterGraph(1)
        assert fire(g, {}, as_position([7]), 1) == as_position([-7])

    def test_involution(self, a2):
        k = classical_k(a2)
        p = as_position([1, 1])
        assert fire(a2, k, fire(a2, k, p, 1), 1) == p

    def test_out_of_range(self, a2):
        with pytest.raises(IndexError):
            fire(a2, classical_k(a2), unit_position(2), 3)

    def test_matches_transposed_generator_action(self, a3):
        from coxkit import standard_generators
        gens = standard_generators(a3)
        k = classical_k(a3)
        p = as_position([2, -1, Fraction(1, 3)])
        for v in (1, 2, 3):
            assert fire(a3, k, p, v) == gens.matrix(v).transpose().apply(p)

    @settings(max_examples=25, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_involution_property(self, rng):
        graph = CoxeterGraph.cycle(4)
        f = random_balanced_weights(graph, rng)
        k = k_coefficients(graph, f)
        p = as_position([rng.randint(-3, 3) for _ in range(4)])
        for v in range(1, 5):
            assert fire(graph, k, fire(graph, k, p, v), v) == p


class TestMoveClass:
    def test_classical_positive(self):
        assert move_class(as_position([3, 0]), 1) == MoveClass.POSITIVE

    def test_zero_is_neither(self):
        assert move_class(as_position([0, 5]), 1) == MoveClass.ZERO

    def test_negative(self):
        assert move_class(as_position([-2, 5]), 1) == MoveClass.NEGATIVE

    def test_pseudo_positive_with_potentials(self):
        # potentials (1, -1): firing at value -1 is pseudo-positive
        assert move_class(as_position([1, -1]), 2, potentials=as_position([1, -1])) \
            == MoveClass.PSEUDO_POSITIVE

    def test_nonreal(self):
        assert move_class(as_position([zeta(3), 1]), 1) == MoveClass.NONREAL


class TestPlay:
    def test_longest_word_of_a2(self, a2):
        record = play(a2, classical_k(a2), unit_position(2), (1, 2, 1))
        assert record.final == as_position([-1, -1])
        assert record.is_positive_sequence
        assert [c for _, c in record.moves] == [MoveClass.POSITIVE] * 3

    def test_empty_word(self, a2):
        record = play(a2, classical_k(a2), unit_position(2), ())
        assert record.final == unit_position(2)
        assert record.is_positive_sequence  # vacuously

    def test_fire_twice_goes_back(self, a2):
        record = play(a2, classical_k(a2), unit_position(2), (1, 1))
        assert record.final == unit_position(2)
        assert [c for _, c in record.moves] == [MoveClass.POSITIVE, MoveClass.NEGATIVE]

    def test_positions_track_moves(self, a2):
        k = classical_k(a2)
        record = play(a2, k, unit_position(2), (1, 2))
        assert record.positions[0] == fire(a2, k, unit_position(2), 1)
        assert record.positions[1] == fire(a2, k, record.positions[0], 2)


class TestIsReduced:
    def test_examples(self, a2):
        assert is_reduced(a2, (1, 2, 1))
        assert not is_reduced(a2, (1, 1))
        assert not is_reduced(a2, (1, 2, 1, 2))  # equals (2,1) in the group

    def test_brute_force_agrees_on_small_words(self, a2, a3):
        for graph in (a2, a3):
            alphabet = list(graph.vertices())
            for length in range(0, 5):
                for word in itertools.product(alphabet, repeat=length):
                    assert is_reduced(graph, word) == brute_force_is_reduced(graph, word), word

    def test_brute_force_agrees_with_multiple_bonds(self):
        graph = CoxeterGraph(3, {(1, 2): 4, (2, 3): 3})
        for length in range(0, 5):
            for word in itertools.product((1, 2, 3), repeat=length):
                assert is_reduced(graph, word) == brute_force_is_reduced(graph, word), word

    def test_brute_force_agrees_on_four_vertices(self):
        graph = CoxeterGraph.chain(4)
        for length in range(0, 5):
            for word in itertools.product((1, 2, 3, 4), repeat=length):
                assert is_reduced(graph, word) == brute_force_is_reduced(graph, word), word


class TestDescentSet:
    def test_identity_has_no_descents(self, a2):
        assert descent_set(a2, ()) == frozenset()

    def test_longest_word_descends_everywhere(self, a2):
        assert descent_set(a2, (1, 2, 1)) == frozenset({1, 2})

    def test_single_generator(self, a2):
        assert descent_set(a2, (1,)) == frozenset({1})

    def test_descent_iff_shortening(self, a3):
        # v is a descent of w exactly when w*v is shorter
        for word in itertools.product((1, 2, 3), repeat=4):
            descents = descent_set(a3, word)
            for v in a3.vertices():
                shorter = not is_reduced(a3, tuple(word) + (v,))
                reduced_word = is_reduced(a3, word)
                if reduced_word:
                    assert (v in descents) == shorter

    def test_generalized_matches_classical(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        k = k_coefficients(graph, f)
        for word in [(), (1,), (1, 2), (3, 5, 3), (2, 4, 2, 5)]:
            gen = descent_set(graph, word, k=k, potentials=cert.potentials)
            classical = descent_set(graph, word)
            assert gen == classical


class TestReachablePositions:
    def test_a2_has_six(self, a2):
        result = reachable_positions(a2, classical_k(a2), unit_position(2))
        assert result.closed and result.count == 6

    def test_a3_has_24(self, a3):
        result = reachable_positions(a3, classical_k(a3), unit_position(3))
        assert result.closed and result.count == 24

    def test_infinite_bond_exhausts_budget(self):
        graph = CoxeterGraph(2, {(1, 2): INFINITY})
        result = reachable_positions(graph, classical_k(graph), unit_position(2),
                                     max_count=50)
        assert not result.closed

    def test_generalized_game_reaches_the_same_count(self):
        # weighted chain, balanced: the generalized game from the gauged
        # start is in bijection with the group too
        graph = CoxeterGraph.chain(3)
        f = WeightFunction({(1, 2): 2, (2, 3): Fraction(1, 2)})
        cert = check_balanced(graph, f)
        k = k_coefficients(graph, f)
        result = reachable_positions(graph, k, gauged_start(cert.potentials))
        assert result.closed and result.count == 24

    def test_position_word_coherence(self, a2):
        """Words reach the same position exactly when they are group-equal."""
        k = classical_k(a2)
        words = [w for length in range(5) for w in itertools.product((1, 2), repeat=length)]
        for w1, w2 in itertools.combinations(words, 2):
            same_pos = play(a2, k, unit_position(2), w1).final == \
                play(a2, k, unit_position(2), w2).final
            assert same_pos == words_equal_in_group(a2, w1, w2)


class TestGaugeEquivariance:
    def test_six_vertex(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        J = Matrix.diagonal(cert.potentials)
        kg = k_coefficients(graph, f)
        kc = classical_k(graph)
        rng = random.Random(12)
        for _ in range(25):
            p = as_position([rng.randint(-4, 4) for _ in range(6)])
            v = rng.randint(1, 6)
            assert J.apply(fire(graph, kg, p, v)) == fire(graph, kc, J.apply(p), v)

    def test_pseudo_positive_iff_positive_after_gauge(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        J = Matrix.diagonal(cert.potentials)
        rng = random.Random(13)
        for _ in range(25):
            p = as_position([rng.choice([-2, -1, 1, 2]) for _ in range(6)])
            v = rng.randint(1, 6)
            pseudo = move_class(p, v, potentials=cert.potentials)
            classical = move_class(J.apply(p), v)
            pairs = {MoveClass.PSEUDO_POSITIVE: MoveClass.POSITIVE,
                     MoveClass.PSEUDO_NEGATIVE: MoveClass.NEGATIVE}
            assert pairs[pseudo] == classical

    def test_pseudo_positive_sequences_are_reduced_words(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        k = k_coefficients(graph, f)
        start = gauged_start(cert.potentials)
        for word in [(1, 2, 1), (2, 3, 5), (1, 1), (4, 5, 4, 5)]:
            record = play(graph, k, start, word, potentials=cert.potentials)
            assert record.is_pseudo_positive_sequence == is_reduced(graph, word)


class TestValidateGeneralizedWeights:
    def test_classical_symmetric_ok(self, four_cycle):
        check = validate_generalized_weights(four_cycle, classical_k(four_cycle))
        assert check.ok
        assert all(p == 1 for p in check.potentials)
        assert all(w == 1 for _, w in check.f.items())

    def test_signed_balanced_ok(self, six_vertex):
        graph, f = six_vertex
        check = validate_generalized_weights(graph, k_coefficients(graph, f))
        assert check.ok
        assert [p.literal() for p in check.potentials] == ["1", "-1", "1", "-1", "-1", "-1"]
        assert check.f == f

    def test_sign_product_minus_one_fails_condition_3(self, four_cycle):
        k = k_coefficients(four_cycle, signed_four_cycle(-1))
        check = validate_generalized_weights(four_cycle, k)
        assert not check.ok
        assert check.by_condition(3)

    def test_wrong_product_fails_condition_1(self, a2):
        k = {(1, 2): rational(2), (2, 1): rational(2)}
        check = validate_generalized_weights(a2, k)
        assert not check.ok
        assert check.by_condition(1)

    def test_missing_coefficient_fails_condition_2(self, a2):
        check = validate_generalized_weights(a2, {(1, 2): rational(1)})
        assert not check.ok
        assert check.by_condition(2)

    def test_recovers_decomposition(self, six_vertex):
        graph, f = six_vertex
        k = k_coefficients(graph, f)
        check = validate_generalized_weights(graph, k)
        for (i, j), value in k.items():
            assert check.f.get(i, j) * check.ell.get(i, j) == value
        assert check.ell.validate(graph) == []

    def test_infinite_bond_with_twist_is_accepted(self):
        # k = -2 / -2 on an infinite bond: product 4, phases balanced (tree);
        # the returned split k = f * l need not be the one used to build k,
        # but it must be legal with positive real l
        graph = CoxeterGraph(2, {(1, 2): INFINITY})
        f = WeightFunction({(1, 2): -1})
        k = k_coefficients(graph, f)
        check = validate_generalized_weights(graph, k)
        assert check.ok
        assert check.f.get(1, 2) * check.f.get(2, 1) == 1
        for edge in ((1, 2), (2, 1)):
            assert check.f.get(*edge) * check.ell.get(*edge) == k[edge]
            assert check.ell.get(*edge).sign() > 0


class TestPentagon:
    def test_already_nonnegative(self):
        record = imo_pentagon_run([1, 1, 1, 1, 1])
        assert record.terminated and record.steps == 0

    def test_single_firing(self):
        record = imo_pentagon_run([-1, 2, 2, 2, 2])
        assert record.fired == (1,)
        assert record.final == (1, 1, 2, 2, 1)
        assert record.terminated

    def test_lowest_index_tie_break(self):
        record = imo_pentagon_run([-1, -1, 3, 3, 3])
        assert record.fired[0] == 1

    def test_positions_recorded(self):
        record = imo_pentagon_run([-1, 2, 2, 2, 2])
        assert record.positions == ((-1, 2, 2, 2, 2), (1, 1, 2, 2, 1))

    def test_random_sweep_terminates(self):
        rng = random.Random(99)
        for _ in range(300):
            while True:
                start = [rng.randint(-9, 9) for _ in range(5)]
                if sum(start) > 0:
                    break
            record = imo_pentagon_run(start, record=False)
            assert record.terminated, start

    def test_nonpositive_sum_rejected(self):
        with pytest.raises(ValueError):
            imo_pentagon_run([-1, -1, -1, -1, 1])

    def test_wrong_size_rejected(self):
        with pytest.raises(ValueError):
            imo_pentagon_run([1, 2, 3])
