"""Monomial matrices, window notation, and the affine mirror.

When a single cycle carries a weight of infinite order, the witness
generators land in an infinite monomial group. Composing them in the
permutation-plus-exponents model, reading off affine windows, and
multiplying in the standard representation of the affine cycle group
all tell the same story, word for word.
"""
from coxkit import (
    CoxeterGraph,
    affine_compose,
    affine_from_monomial,
    bfs_enumerate,
    monomial_compose,
    monomial_from_matrix,
    monomial_witness,
    rational,
    standard_generators,
    verify_affine_iso,
)

a = rational(2)
witness = monomial_witness(4, a)
print("monomial image of the closing generator (weight 2 on the 4-cycle):")
print(witness.closing_image.pretty())

mono = monomial_from_matrix(witness.closing_image, a)
print("\nas permutation + exponents:", mono)
print("its affine window:", affine_from_monomial(mono).window)

swap = monomial_from_matrix(witness.transposition_images[0], a)
print("first transposition window:", affine_from_monomial(swap).window)

product = monomial_compose(mono, swap)
print("\ncomposition in the compact model matches matrix multiplication:",
      product.to_matrix(a) == witness.closing_image @ witness.transposition_images[0])
print("and the affine mirror is a homomorphism:",
      affine_from_monomial(product)
      == affine_compose(affine_from_monomial(mono), affine_from_monomial(swap)))

report = verify_affine_iso(3, rational(2), 5)
print("\nthree-way agreement on all words to length 5 (n=3, weight 2):", report.ok)
print("distinct elements per word length:", list(report.ball_sizes))

# contrast: a finite-order weight collapses to a finite group
finite = bfs_enumerate(monomial_witness(4, rational(-1)).generators(),
                       max_elements=1000, monomial_base=rational(-1))
print("\nweight -1 instead: group closes at order", finite.order)
infinite = bfs_enumerate(witness.generators(), max_elements=500, monomial_base=a)
print("weight 2: budget of 500 exhausted, closed =", infinite.closed)
