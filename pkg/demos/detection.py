"""
Cycles and induced paths
========================

Fixed-length cycles (chords allowed), chordless cycles, induced paths and
the cycle spectrum, on a few classical cubic graphs.
"""

from egcert import (
    cycle_spectrum,
    find_c4,
    find_cycle_of_length,
    is_pk_free,
    longest_induced_path,
    power_of_two_cycle,
    shortest_induced_cycle_at_least,
)
from egcert.named import complete, heawood, path, petersen

for name, g in [("K4", complete(4)), ("Petersen", petersen()), ("Heawood", heawood())]:
    print(f"{name}: n={g.n} m={g.edge_count}")
    print("  4-cycle:", find_c4(g))
    print("  8-cycle:", find_cycle_of_length(g, 8))
    print("  cycle lengths:", sorted(cycle_spectrum(g)))
    print("  shortest chordless cycle of length >= 5:", shortest_induced_cycle_at_least(g, 5))
    length, p = longest_induced_path(g, g.n)
    print("  longest induced path:", length, p)
    print("  P5-free:", is_pk_free(g, 5), " P8-free:", is_pk_free(g, 8))
    print("  smallest power-of-two cycle:", power_of_two_cycle(g))

# stop_at makes the path search return as soon as it has enough vertices
print(longest_induced_path(path(30), 8))
