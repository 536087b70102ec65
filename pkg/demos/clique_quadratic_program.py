"""The simplex quadratic program recovers the clique number of a graph.

Run: python demos/clique_quadratic_program.py
"""

from fractions import Fraction

from esslab import Graph, max_clique, modified_adjacency_value, motzkin_straus_value, scaled_simplex_value

graphs = {
    "path on 4 vertices": Graph.path(4),
    "5-cycle": Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    "K4 plus a pendant": Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]),
    "empty on 3 vertices": Graph.empty(3),
}

for name, g in graphs.items():
    d = max_clique(g).max_clique_size
    value = motzkin_straus_value(g)
    print(f"{name}: clique number {d}, program maximum {value} = 1 - 1/{1 / (1 - value)}")
    print(f"  non-edges 1/4, edges 3/4: {modified_adjacency_value(g, Fraction(1, 4), Fraction(3, 4))}")
    print(f"  total mass 2: {scaled_simplex_value(g, Fraction(2))}")
