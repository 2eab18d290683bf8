import random

import pytest

from coxkit import (
    CoxeterGraph,
    EdgeCoefficients,
    INFINITY,
    Matrix,
    WeightFunction,
    check_balanced,
    evaluate_word,
    gauge_conjugate,
    gauge_from_potentials,
    generalized_generators,
    rational,
    standard_generators,
    two_cos,
    verify_coxeter_relations,
    words_equal_in_group,
    zeta,
)

from conftest import random_balanced_weights, random_legal_weights


def weighted_chain(a, b):
    graph = CoxeterGraph.chain(3)
    return graph, WeightFunction({(1, 2): a, (2, 3): b})


class TestStandardGenerators:
    def test_chain_middle_row(self):
        gens = standard_generators(CoxeterGraph.chain(3))
        assert [v.literal() for v in gens.matrix(2).rows[1]] == ["1", "-1", "1"]

    def test_single_vertex(self):
        gens = standard_generators(CoxeterGraph(1))
        assert gens.matrix(1) == Matrix([[-1]])

    def test_asymmetric_integer_table(self):
        graph = CoxeterGraph(2, {(1, 2): 4})
        gens = standard_generators(graph, EdgeCoefficients.asymmetric_integers(graph))
        assert gens.matrix(1)[0, 1] == 2
        assert gens.matrix(2)[1, 0] == 1
        graph6 = CoxeterGraph(2, {(1, 2): 6})
        gens6 = standard_generators(graph6, EdgeCoefficients.asymmetric_integers(graph6))
        assert gens6.matrix(1)[0, 1] == 3

    def test_rows_differ_from_identity_only_in_own_row(self):
        gens = standard_generators(CoxeterGraph.cycle(4))
        for i in range(1, 5):
            m = gens.matrix(i)
            for r in range(4):
                if r == i - 1:
                    continue
                for c in range(4):
                    assert m[r, c] == (1 if r == c else 0)


class TestGeneralizedGenerators:
    def test_weighted_chain_rows(self):
        # with weights a, b the middle generator row is (1/a, -1, b)
        a, b = rational(2), zeta(3)
        graph, f = weighted_chain(a, b)
        gens = generalized_generators(graph, f)
        w1, w2, w3 = gens.matrices
        assert w1 == Matrix([[-1, a, 0], [0, 1, 0], [0, 0, 1]])
        assert w2 == Matrix([[1, 0, 0], [a.inverse(), -1, b], [0, 0, 1]])
        assert w3 == Matrix([[1, 0, 0], [0, 1, 0], [0, b.inverse(), -1]])

    def test_unit_weights_give_standard(self):
        graph = CoxeterGraph.chain(3)
        assert generalized_generators(graph, WeightFunction.ones(graph)).matrices \
            == standard_generators(graph).matrices

    def test_six_vertex_row(self, six_vertex):
        graph, f = six_vertex
        gens = generalized_generators(graph, f)
        assert [v.literal() for v in gens.matrix(2).rows[1]] == \
            ["-1", "-1", "-1", "1", "0", "0"]

    def test_illegal_weights_rejected(self):
        graph = CoxeterGraph.chain(2)
        broken = WeightFunction.__new__(WeightFunction)
        object.__setattr__(broken, "_values", {(1, 2): rational(2), (2, 1): rational(2)})
        with pytest.raises(ValueError):
            generalized_generators(graph, broken)

    def test_k_products_keep_cosine_value(self):
        graph = CoxeterGraph(3, {(1, 2): 4, (2, 3): 5})
        rng = random.Random(0)
        f = random_legal_weights(graph, rng)
        gens = generalized_generators(graph, f)
        assert gens.k[(1, 2)] * gens.k[(2, 1)] == two_cos(4) ** 2
        assert gens.k[(2, 3)] * gens.k[(3, 2)] == two_cos(5) ** 2


class TestCoxeterRelations:
    def test_weighted_chain_all_relations(self):
        graph, f = weighted_chain(rational(2), zeta(3))
        assert verify_coxeter_relations(generalized_generators(graph, f)).ok

    def test_braid_relation_exactly(self):
        gens = standard_generators(CoxeterGraph.chain(2))
        prod = gens.matrix(1) @ gens.matrix(2)
        assert prod.power(3).is_identity()

    def test_infinite_bond_never_closes_up_to_bound(self):
        graph = CoxeterGraph(2, {(1, 2): INFINITY})
        report = verify_coxeter_relations(standard_generators(graph),
                                          infinite_check_bound=20)
        assert report.ok

    def test_detects_wrong_label(self):
        # claim m=4 on a braid-3 pair: relation must fail
        graph3 = CoxeterGraph.chain(2)
        graph4 = CoxeterGraph(2, {(1, 2): 4})
        gens = standard_generators(graph3)
        fake = type(gens)(graph=graph4, matrices=gens.matrices, k=gens.k)
        report = verify_coxeter_relations(fake)
        assert not report.ok

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_dihedral_orders(self, m):
        graph = CoxeterGraph(2, {(1, 2): m}) if m >= 3 else CoxeterGraph(2)
        gens = standard_generators(graph)
        prod = gens.matrix(1) @ gens.matrix(2)
        assert prod.power(m).is_identity()
        for e in range(1, m):
            assert not prod.power(e).is_identity()


class TestWords:
    def test_empty_word_is_identity(self):
        gens = standard_generators(CoxeterGraph.chain(3))
        assert evaluate_word(gens, ()).is_identity()

    def test_involution(self):
        gens = standard_generators(CoxeterGraph.chain(3))
        assert evaluate_word(gens, (2, 2)).is_identity()

    def test_braid_words_agree(self):
        graph = CoxeterGraph.chain(2)
        gens = standard_generators(graph)
        assert evaluate_word(gens, (1, 2, 1)) == evaluate_word(gens, (2, 1, 2))
        assert words_equal_in_group(graph, (1, 2, 1), (2, 1, 2))

    def test_distinct_generators_differ(self):
        assert not words_equal_in_group(CoxeterGraph.chain(2), (1,), (2,))

    def test_commuting_pair(self):
        graph = CoxeterGraph(2)  # m = 2
        assert words_equal_in_group(graph, (1, 2, 1, 2), ())

    def test_index_out_of_range(self):
        gens = standard_generators(CoxeterGraph.chain(2))
        with pytest.raises(IndexError):
            evaluate_word(gens, (3,))

    def test_equality_is_an_equivalence_consistent_with_concatenation(self):
        graph = CoxeterGraph.chain(3)
        rng = random.Random(8)
        words = [tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 5)))
                 for _ in range(12)]
        for w in words:
            assert words_equal_in_group(graph, w, w)
        for w1 in words:
            for w2 in words:
                if words_equal_in_group(graph, w1, w2):
                    assert words_equal_in_group(graph, w2, w1)
                    # right-concatenation preserves equality
                    assert words_equal_in_group(graph, w1 + (1,), w2 + (1,))
                    for w3 in words:
                        if words_equal_in_group(graph, w2, w3):
                            assert words_equal_in_group(graph, w1, w3)


class TestGauge:
    def test_six_vertex_conjugation(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        J = gauge_from_potentials(cert.potentials)
        assert J == Matrix.diagonal([1, -1, 1, -1, -1, -1])
        std = standard_generators(graph)
        gen = generalized_generators(graph, f)
        conj = gauge_conjugate(J, std)
        assert conj.matrices == gen.matrices

    def test_identity_potentials_do_nothing(self):
        graph = CoxeterGraph.chain(3)
        std = standard_generators(graph)
        conj = gauge_conjugate(gauge_from_potentials([1, 1, 1]), std)
        assert conj.matrices == std.matrices

    def test_weighted_chain_gauge(self):
        a, b = rational(2), zeta(3)
        graph, f = weighted_chain(a, b)
        cert = check_balanced(graph, f)
        J = gauge_from_potentials(cert.potentials)
        conj = gauge_conjugate(J, standard_generators(graph))
        assert conj.matrices == generalized_generators(graph, f).matrices

    def test_zero_potential_rejected(self):
        with pytest.raises(ValueError):
            gauge_from_potentials([1, 0, 1])

    def test_conjugate_updates_k(self, six_vertex):
        graph, f = six_vertex
        cert = check_balanced(graph, f)
        J = gauge_from_potentials(cert.potentials)
        conj = gauge_conjugate(J, standard_generators(graph))
        gen = generalized_generators(graph, f)
        assert conj.k == gen.k


class TestGaugeInvarianceProperty:
    def test_random_balanced_graphs(self):
        rng = random.Random(42)
        shapes = [
            CoxeterGraph.chain(4),
            CoxeterGraph.cycle(4),
            CoxeterGraph.cycle(5),
            CoxeterGraph(5, {(1, 2): 3, (2, 3): 3, (2, 4): 3, (4, 5): 3}),
            CoxeterGraph(4, {(1, 2): 4, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3}),
        ]
        for graph in shapes:
            for _ in range(3):
                f = random_balanced_weights(graph, rng)
                cert = check_balanced(graph, f)
                assert cert.balanced
                J = gauge_from_potentials(cert.potentials)
                conj = gauge_conjugate(J, standard_generators(graph))
                gen = generalized_generators(graph, f)
                assert conj.matrices == gen.matrices

    def test_generalized_relations_hold_for_any_legal_weights(self):
        rng = random.Random(7)
        graph = CoxeterGraph(4, {(1, 2): 3, (2, 3): 4, (3, 4): 3, (4, 1): 3})
        for _ in range(5):
            f = random_legal_weights(graph, rng)
            assert verify_coxeter_relations(generalized_generators(graph, f)).ok


class TestEdgeCoefficients:
    def test_symmetric_validates(self):
        graph = CoxeterGraph(3, {(1, 2): 4, (2, 3): INFINITY})
        assert EdgeCoefficients.symmetric(graph).validate(graph) == []

    def test_asymmetric_validates(self):
        graph = CoxeterGraph(3, {(1, 2): 4, (2, 3): 6})
        assert EdgeCoefficients.asymmetric_integers(graph).validate(graph) == []

    def test_bad_product_reported(self):
        graph = CoxeterGraph(2, {(1, 2): 4})
        bad = EdgeCoefficients({(1, 2): 1, (2, 1): 1})
        assert any("differs" in p for p in bad.validate(graph))

    def test_nonpositive_reported(self):
        graph = CoxeterGraph(2, {(1, 2): 3})
        bad = EdgeCoefficients({(1, 2): -1, (2, 1): -1})
        assert any("positive" in p for p in bad.validate(graph))

    def test_infinite_bond_product_floor(self):
        graph = CoxeterGraph(2, {(1, 2): INFINITY})
        low = EdgeCoefficients({(1, 2): 1, (2, 1): 1})
        assert any("below 4" in p for p in low.validate(graph))
        ok = EdgeCoefficients({(1, 2): rational(3), (2, 1): rational(2)})
        assert ok.validate(graph) == []
