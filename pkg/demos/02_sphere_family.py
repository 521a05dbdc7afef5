# Hom(K2, Kn) is a sphere of dimension n-2. Check it with GF(2) homology.
#
# Homology over GF(2) can disprove connectivity but not certify
# homotopy connectivity; treat the Betti numbers as evidence only.

from homcx import betti_gf2, build_flip_graph, components, enumerate_cells, enumerate_homs
from homcx.graph import complete

for n in (2, 3, 4, 5):
    fp = enumerate_cells(complete(2), complete(n))
    rep = betti_gf2(fp)
    print(f"Hom(K2,K{n}): cells per dim {list(rep.cell_counts)}, euler {rep.euler_characteristic}, "
          f"betti {list(rep.betti_gf2)}")

# b0 always agrees with the number of flip-graph components
homs = enumerate_homs(complete(2), complete(2))
print("Hom(K2,K2) components:", components(build_flip_graph(homs)).component_count)

# the subdivision gets big quickly: simplices per dimension for K5
rep = betti_gf2(enumerate_cells(complete(2), complete(5)))
print("order complex of Hom(K2,K5):", list(rep.simplex_counts))
