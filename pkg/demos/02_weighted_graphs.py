"""Weighted Coxeter graphs: legality, balance certificates, gathering.

A weight function assigns a nonzero scalar to each directed edge with
reciprocal values on opposite orientations. Balance (every closed path
has weight 1) is decided with a re-checkable certificate either way.
"""
from coxkit import (
    CoxeterGraph,
    WeightFunction,
    check_balanced,
    cycle_weight,
    format_graph,
    fundamental_cycles,
    gather_cycle,
    parse_graph,
    rational,
    validate_legal,
    zeta,
)

# the balanced signed graph on six vertices
graph, f = parse_graph("""
vertices 6
edge 1 2 w=-1
edge 2 3 w=-1
edge 2 4 w=1
edge 3 5 w=-1
edge 4 5 w=1
edge 5 6 w=1
""")
print(format_graph(graph, f))
print("legal:", validate_legal(graph, f) == [])

cert = check_balanced(graph, f)
print("balanced:", cert.balanced)
print("potentials:", [p.literal() for p in cert.potentials])
print("certificate re-checks:", cert.check(graph, f))

# flip one sign and the certificate becomes an offending cycle
f_bad = WeightFunction({(1, 2): -1, (2, 3): -1, (2, 4): 1,
                        (3, 5): -1, (4, 5): -1, (5, 6): 1})
bad = check_balanced(graph, f_bad)
print("\nafter flipping edge (4,5):")
print("balanced:", bad.balanced)
print("offending cycle:", bad.cycle, "with weight", bad.weight)

# cycle weight gathering: push everything onto the closing edge
cycle = CoxeterGraph.cycle(4)
weights = WeightFunction({(1, 2): rational(2), (2, 3): zeta(3),
                          (3, 4): rational(-1), (4, 1): rational(1)})
h, J = gather_cycle(cycle, weights)
print("\ngathering the 4-cycle weights onto the closing edge:")
print("h(1,2) h(2,3) h(3,4):", h.get(1, 2), h.get(2, 3), h.get(3, 4))
print("h(4,1):", h.get(4, 1))
print("change of basis J:")
print(J.pretty())
print("total weight is preserved:",
      cycle_weight(weights, (1, 2, 3, 4, 1)) == cycle_weight(h, (1, 2, 3, 4, 1)))

print("\nfundamental cycles of a chorded square:")
chorded = CoxeterGraph(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3, (1, 3): 3})
for c in fundamental_cycles(chorded):
    print("  ", c)
