"""Geometric representations: standard and weight-twisted generators.

Each generator differs from the identity in one row. A legal weight
function twists the off-diagonal entries without disturbing the Coxeter
relations, and when the weights are balanced the twisted generators are
a diagonal conjugate of the standard ones.
"""
from coxkit import (
    CoxeterGraph,
    EdgeCoefficients,
    WeightFunction,
    check_balanced,
    evaluate_word,
    gauge_conjugate,
    gauge_from_potentials,
    generalized_generators,
    standard_generators,
    rational,
    verify_coxeter_relations,
    words_equal_in_group,
    zeta,
)

chain = CoxeterGraph.chain(3)
weights = WeightFunction({(1, 2): rational(2), (2, 3): zeta(3)})

print("twisted generators of the weighted chain (weights 2 and zeta(3)):")
gens = generalized_generators(chain, weights)
for v in chain.vertices():
    print(f"generator {v}:")
    print(gens.matrix(v).pretty())

report = verify_coxeter_relations(gens)
print("\nall Coxeter relations hold exactly:", report.ok)

# the gauge: potentials from the balance certificate conjugate the
# standard generators onto the twisted ones
cert = check_balanced(chain, weights)
J = gauge_from_potentials(cert.potentials)
conjugated = gauge_conjugate(J, standard_generators(chain))
print("J sigma_i J^-1 == omega_i for every i:",
      conjugated.matrices == gens.matrices)

# the standard representation is faithful, so it decides word equality
print("\nbraid relation in the group:",
      words_equal_in_group(chain, (1, 2, 1), (2, 1, 2)))
print("(1,2,1,2,1,2) is the identity on a commuting pair:",
      words_equal_in_group(CoxeterGraph(2), (1, 2, 1, 2), ()))

# asymmetric integer coefficients keep every entry rational on m=4,6 bonds
square = CoxeterGraph(2, {(1, 2): 4})
integer_gens = standard_generators(square, EdgeCoefficients.asymmetric_integers(square))
print("\nm=4 bond with the integer table:")
print(integer_gens.matrix(1).pretty())
print(integer_gens.matrix(2).pretty())
print("(g1 g2)^4 = identity:",
      (integer_gens.matrix(1) @ integer_gens.matrix(2)).power(4).is_identity())
