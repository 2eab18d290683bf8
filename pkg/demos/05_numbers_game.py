"""The numbers game: firing, reduced words, descents, and the gauge.

Positions correspond to group elements; a word is reduced exactly when
playing it from the unit position keeps every move positive. Balanced
weights define the generalized game, which the gauge maps move-for-move
onto the classical one.
"""
from coxkit import (
    CoxeterGraph,
    Matrix,
    WeightFunction,
    check_balanced,
    classical_k,
    descent_set,
    fire,
    gauged_start,
    is_reduced,
    k_coefficients,
    play,
    reachable_positions,
    unit_position,
)

a2 = CoxeterGraph.chain(2)
k = classical_k(a2)

record = play(a2, k, unit_position(2), (1, 2, 1))
print("playing 1 2 1 on the two-generator chain:")
for (v, cls), pos in zip(record.moves, record.positions):
    print(f"  fire {v}: {cls.value:9s} -> ({', '.join(x.literal() for x in pos)})")
print("reduced:", is_reduced(a2, (1, 2, 1)))
print("descents of the final element:", sorted(descent_set(a2, (1, 2, 1))))

print("\nfiring twice undoes itself:",
      play(a2, k, unit_position(2), (1, 1)).final == unit_position(2))
print("1 2 1 2 is not reduced:", is_reduced(a2, (1, 2, 1, 2)))

print("\nreachable positions = group order:")
for n, graph in ((2, a2), (3, CoxeterGraph.chain(3))):
    reach = reachable_positions(graph, classical_k(graph), unit_position(n))
    print(f"  chain of {n}: {reach.count} positions (closed: {reach.closed})")

# the generalized game on the six-vertex signed graph
graph, f = CoxeterGraph(6, {(1, 2): 3, (2, 3): 3, (2, 4): 3,
                            (3, 5): 3, (4, 5): 3, (5, 6): 3}), \
    WeightFunction({(1, 2): -1, (2, 3): -1, (2, 4): 1,
                    (3, 5): -1, (4, 5): 1, (5, 6): 1})
cert = check_balanced(graph, f)
kg = k_coefficients(graph, f)
start = gauged_start(cert.potentials)
print("\ngeneralized game on the signed six-vertex graph")
print("start (gauge image is the unit position):",
      [x.literal() for x in start])
record = play(graph, kg, start, (1, 2, 5), potentials=cert.potentials)
for (v, cls), pos in zip(record.moves, record.positions):
    print(f"  fire {v}: {cls.value:16s} -> ({', '.join(x.literal() for x in pos)})")
print("pseudo-positive throughout:", record.is_pseudo_positive_sequence)
print("matches reducedness of the word:", is_reduced(graph, (1, 2, 5)))

# the gauge intertwines the two games
J = Matrix.diagonal(cert.potentials)
p = start
for v in (1, 2, 5):
    left = J.apply(fire(graph, kg, p, v))
    right = fire(graph, classical_k(graph), J.apply(p), v)
    assert left == right
    p = fire(graph, kg, p, v)
print("J(fire_generalized(p)) == fire_classical(Jp) along the whole play: True")
