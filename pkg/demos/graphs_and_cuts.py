"""
Graphs, graph6 records and minimum vertex cuts
==============================================

Graphs are stored as one Python int per vertex (a neighbour bitset), so the
same code handles 10 vertices or 1000.
"""

from egcert import components, degree_stats, min_vertex_cut, parse_graph6, write_graph6
from egcert.named import cycle, petersen, two_k4_sharing_vertex

# --- reading and writing graph6 ---
k4 = parse_graph6(b"C~")
print(k4, k4.edges())
print("Petersen as graph6:", write_graph6(petersen()).decode())

star = parse_graph6(b"D?{")
print("D?{ decodes to", star.edges())

# --- degrees and components ---
stats = degree_stats(petersen())
print("Petersen degrees:", stats.min_deg, stats.max_deg)
print("C5 minus {0, 2}:", components(cycle(5), {0, 2}))

# --- minimum cuts and complete neighbourhood components ---
# A component D of G - S is a CNC of x in S when x sees every vertex of D.
ca = min_vertex_cut(two_k4_sharing_vertex())
print("two K4s glued at 0: cut", set(ca.cut), "components", [set(c) for c in ca.components])
for x in ca.cut:
    print(f"  CNCs of {x}:", ca.cncs_of(x))

ca = min_vertex_cut(petersen())
print("Petersen: kappa =", ca.kappa, "cut", sorted(ca.cut), "c =", ca.c)
for x in sorted(ca.cut):
    print(f"  {x}: CNC of components {ca.cncs_of(x)}, non-CNC of {ca.non_cncs_of(x)}")

# bitsets make large graphs no different
big = cycle(200)
print("C200 connectivity:", min_vertex_cut(big).kappa)
