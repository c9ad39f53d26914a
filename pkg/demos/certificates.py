"""
Certificates: 4-cycle, 8-cycle or induced path
==============================================

For a graph with minimum degree at least 3, ``eg_witness`` returns a 4-cycle,
an 8-cycle, or an induced path on 8 vertices; ``p5_witness`` returns a
4-cycle or an induced path on 5 vertices.  Each witness is re-checked by an
independent verifier, and the trace records which step of the case analysis
produced it and the adjacency facts it relied on.
"""

from pathlib import Path

from egcert import (
    MinDegree,
    eg_witness,
    p5_witness,
    parse_graph6,
    verify_witness,
)
from egcert.named import cycle, petersen

BRANCHES = Path(__file__).resolve().parent.parent / "tests" / "data" / "branches.txt"


def show(name, g):
    for fn in (eg_witness, p5_witness):
        w, trace = fn(g)
        print(f"{name} / {fn.__name__}: {w.kind.value} {list(w.vertices)} "
              f"verified={verify_witness(g, w)}")
        for e in trace.events:
            bound = " ".join(f"{k}={v}" for k, v in e.bind.items())
            print(f"    {e.claim:<20} {e.case:<40} {bound}")
        assert trace.replay(g) == []


show("Petersen", petersen())

# the branch corpus holds one small graph per step of the case analysis
if BRANCHES.exists():
    for line in BRANCHES.read_text().splitlines()[1:4]:
        g6, claim, case = line.split(" ", 2)
        show(f"{claim} {case}", parse_graph6(g6.encode()))

# graphs below minimum degree 3 are rejected up front
try:
    eg_witness(cycle(9))
except MinDegree as exc:
    print("C9:", exc)

# traces are plain JSON
w, trace = eg_witness(petersen())
print(trace.to_json()[:200], "...")
