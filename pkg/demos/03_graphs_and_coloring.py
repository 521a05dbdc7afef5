# Graph generators, DIMACS round trips and exact chromatic numbers.

from homcx import chromatic_number, count_homs, parse_graph, serialize
from homcx.graph import complete, cycle, kneser, path

petersen = kneser(5, 2)
print(serialize(petersen))
assert parse_graph(serialize(petersen)) == petersen

for name, g in [("K5", complete(5)), ("C5", cycle(5)), ("C6", cycle(6)),
                ("P4", path(4)), ("KG(5,2)", petersen), ("KG(6,2)", kneser(6, 2))]:
    r = chromatic_number(g)
    print(f"{name:8} n={g.n:2} m={g.m:2} chi={r.chi} (clique {len(r.lower_bound_clique)}, DSATUR {r.dsatur_bound})")

# chromatic polynomial values at small k, as homomorphism counts into Kk
print("colorings of C5:", [count_homs(cycle(5), complete(k)) for k in range(1, 6)])
