# The 9-vertex graph whose 5-coloring flip graph is connected.
#
# Run: python demos/01_counterexample.py

from collections import Counter

from homcx import build_flip_graph, chromatic_number, components, enumerate_homs
from homcx.counterexample import classify, format_grid, parse_grid, verify_paper
from homcx.graph import complete, counterexample_g9

g = counterexample_g9()
print(f"{g.n} vertices, {g.m} edges")

# corners 1..4 form a clique; the centre sees only the four midpoints
r = chromatic_number(g)
print("chi =", r.chi, " clique lower bound:", [v + 1 for v in r.lower_bound_clique])

homs = enumerate_homs(g, complete(5))
print("5-colorings:", len(homs))  # 120 corner signatures x 34

# each coloring falls in exactly one class
kinds = Counter(classify(c).kind for c in homs)
print("kinds:", dict(kinds))

# one of the template squares, drawn as 3x3 grids
square = [c for c in homs if classify(c).name == "h1234a"]
for c in square:
    print("  ", format_grid(c))

fg = build_flip_graph(homs)
rep = components(fg)
print("flip graph:", len(fg), "vertices,", fg.edge_count, "edges,",
      rep.component_count, "component(s)")

# two-colored cell notation: the edge 132 514 42{3,5}
a, b = parse_grid("132 514 423"), parse_grid("132 514 425")
print(classify(a).name, "--", classify(b).name, ":", fg.is_edge(a, b))

print()
print(verify_paper().summary())
