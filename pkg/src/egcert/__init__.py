"""Certificate-producing checks for 4-cycles, 8-cycles and induced paths in
graphs of minimum degree at least 3.

Every extractor returns a witness that has been re-checked by an independent
verifier, together with a trace of the argument steps that produced it.
"""

from .detect import (
    cycle_spectrum,
    find_c4,
    find_cycle_of_length,
    is_cycle,
    is_induced_path,
    is_pk_free,
    longest_induced_path,
    power_of_two_cycle,
    shortest_induced_cycle_at_least,
)
from .enumeration import (
    OrderTooLarge,
    SweepConfig,
    SweepReport,
    canonical_form,
    generate_nonisomorphic,
    is_canonical,
    sweep,
)
from .graph import (
    CompleteGraph,
    CutAnalysis,
    DegreeStats,
    Disconnected,
    Graph,
    ParseError,
    components,
    degree_stats,
    induced_subgraph,
    is_connected,
    min_vertex_cut,
    parse_edgelist,
    parse_graph6,
    read_graph6_lines,
    write_edgelist,
    write_graph6,
)
from .oracle import brute_force_witness_exists
from .theorem1 import p5_witness
from .theorem2 import eg_witness
from .witness import (
    ExtractionTrace,
    InternalInvariant,
    MinDegree,
    TraceEvent,
    Witness,
    WitnessKind,
    check_witness,
    cut_analysis_cnc,
    reduce_cycle,
    verify_witness,
)

__version__ = "0.1.0"
