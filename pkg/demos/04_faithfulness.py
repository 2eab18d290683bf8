"""Faithfulness verdicts and their certificates.

Three decidable regimes, one honest Unknown:
  balanced weights        -> faithful, certified by a gauge;
  finite-order cycle      -> not faithful, certified by a monomial quotient;
  infinite-order cycle    -> faithful with affine image (single cycles);
  everything else         -> Unknown, with whatever the probe found.
"""
from coxkit import (
    CoxeterGraph,
    WeightFunction,
    bfs_enumerate,
    classify,
    rational,
    verdict_to_json,
    zeta,
)

cycle = CoxeterGraph.cycle(4)

# balanced: the signs cancel around the cycle
balanced = WeightFunction({(1, 2): -1, (2, 3): -1, (3, 4): 1, (4, 1): 1})
verdict = classify(cycle, balanced)
print("signs -1,-1,+1,+1:", verdict.kind)
print("  potentials:", [p.literal() for p in verdict.certificate.potentials])

# unbalanced with finite order: the representation collapses
signed = WeightFunction({(1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 1): -1})
verdict = classify(cycle, signed)
print("\nsigns +1,+1,+1,-1:", verdict.kind)
print("  cycle:", verdict.cycle, " weight:", verdict.weight,
      " order:", verdict.order)
print("  predicted quotient order:", verdict.quotient_order)
result = bfs_enumerate(verdict.witness.generators(), max_elements=1000,
                       monomial_base=verdict.weight)
print("  enumerated order:", result.order, " closed:", result.closed)
print("  conjugating matrix:")
print(verdict.witness.basis_change.pretty())

# infinite order: faithful with affine image
affine = WeightFunction({(1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 1): 2})
verdict = classify(cycle, affine)
print("\nweights 1,1,1,2:", verdict.kind,
      f"(cycle length {verdict.n}, weight {verdict.weight})")

# a root-of-unity weight of order three
thirds = WeightFunction({(1, 2): zeta(3), (2, 3): 1, (3, 4): 1, (4, 1): 1})
verdict = classify(cycle, thirds)
print("\nweight zeta(3) on one edge:", verdict.kind,
      f"order {verdict.order}, quotient {verdict.quotient_order}")

# the open regime: unbalanced, but no finite-order cycle weight
chorded = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
free = WeightFunction({(1, 2): 2, (2, 3): 1, (3, 4): 4, (4, 1): 1, (1, 3): 1})
verdict = classify(chorded, free)
print("\nchorded square with cycle weights 2 and 4:", verdict.kind)
print(verdict_to_json(verdict))
