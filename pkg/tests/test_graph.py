from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egcert.graph import (
    CompleteGraph,
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
from egcert.named import complete, complete_bipartite, cycle, path, petersen, two_k4_sharing_vertex

import oracles


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


# --- graph6 ---------------------------------------------------------------

def test_graph6_examples_against_reference_decoder():
    for rec in (b"D?{", b"C~", b"@", b"IheA@GUAo"):
        g = parse_graph6(rec)
        n, edges = oracles.decode_graph6(rec)
        assert g.n == n
        assert set(g.edges()) == edges
        assert write_graph6(g) == rec


def test_d_question_brace_is_a_star():
    # data bits 000000 111100: positions 6..9 in column order are (0,4)..(3,4)
    g = parse_graph6(b"D?{")
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_k4_and_singleton():
    assert parse_graph6(b"C~") == complete(4)
    g = parse_graph6(b"@")
    assert (g.n, g.edge_count) == (1, 0)
    assert parse_graph6(b"?").n == 0


def test_header_is_stripped():
    assert parse_graph6(b">>graph6<<C~") == complete(4)


@pytest.mark.parametrize("rec, offset", [
    (b"C}\x01", 2),      # byte outside 63..126
    (b"C~~", 2),         # trailing garbage
    (b"D?", 2),          # ends early
    (b"~?", 0),          # truncated long prefix
    (b"B`", 1),          # n=2 uses one bit; the other five must be zero
])
def test_parse_errors_name_the_offset(rec, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(rec)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_long_form_length_prefix():
    g = cycle(70)
    rec = write_graph6(g)
    assert rec[:1] == b"~"
    assert parse_graph6(rec) == g
    n, edges = oracles.decode_graph6(rec)
    assert n == 70 and set(g.edges()) == edges


def test_read_lines_reports_line_number():
    lines = [b"C~", b"", b"D?{", b"C}\x01"]
    it = read_graph6_lines(lines)
    assert next(it) == complete(4)
    assert next(it).n == 5
    with pytest.raises(ParseError, match="line 4"):
        next(it)


@given(graphs(max_n=20))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip(g):
    rec = write_graph6(g)
    assert parse_graph6(rec) == g
    n, edges = oracles.decode_graph6(rec)
    assert n == g.n and set(g.edges()) == edges


# --- edge lists -------------------------------------------------------------

def test_edgelist_round_trip_and_comments():
    text = "# K4\n4 6\n0 1\n0 2 # first\n0 3\n1 2\n1 3\n2 3\n"
    g = parse_edgelist(text)
    assert g == complete(4)
    assert parse_edgelist(write_edgelist(petersen())) == petersen()


@pytest.mark.parametrize("text", ["", "4\n", "3 1\n0 5\n", "3 2\n0 1\n", "2 1\n1 1\n", "2 1\na b\n"])
def test_edgelist_errors(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


# --- structure -------------------------------------------------------------

@given(graphs())
@settings(max_examples=100, deadline=None)
def test_constructor_invariants(g):
    g.validate()
    assert 2 * g.edge_count == sum(g.degree(v) for v in range(g.n))
    for v in range(g.n):
        assert not g.has_edge(v, v)


def test_from_edges_rejects_loops():
    with pytest.raises(Exception):
        Graph.from_edges(3, [(1, 1)])


def test_degree_stats():
    k4 = degree_stats(complete(4))
    assert (k4.min_deg, k4.max_deg) == (3, 3)
    p8 = degree_stats(path(8))
    assert (p8.min_deg, p8.max_deg) == (1, 2)
    assert p8.degree_sequence == (1, 1, 2, 2, 2, 2, 2, 2)
    pet = degree_stats(petersen())
    assert (pet.min_deg, pet.max_deg) == (3, 3)
    empty = degree_stats(Graph.from_edges(0, []))
    assert (empty.min_deg, empty.max_deg, empty.degree_sequence) == (0, 0, ())


def test_components_examples():
    assert components(complete(4)) == [frozenset(range(4))]
    c5 = cycle(5)
    assert components(c5, {0}) == [frozenset({1, 2, 3, 4})]
    assert components(c5, {0, 2}) == [frozenset({1}), frozenset({3, 4})]


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    assert (len(comps) <= 1) == is_connected(g)


def test_induced_subgraph_examples():
    k3, order = induced_subgraph(complete(4), {0, 1, 2})
    assert k3 == complete(3) and order == [0, 1, 2]
    sub, order = induced_subgraph(cycle(5), {0, 1, 3})
    assert order == [0, 1, 3] and sub.edges() == [(0, 1)]
    outer, _ = induced_subgraph(petersen(), range(5))
    assert outer == cycle(5)


# --- minimum vertex cut -----------------------------------------------------------

def test_min_cut_examples():
    ca = min_vertex_cut(cycle(5))
    assert (ca.kappa, ca.c) == (2, 2)
    ca = min_vertex_cut(two_k4_sharing_vertex())
    assert ca.cut == {0} and ca.c == 2
    assert ca.cnc[(0, 0)] and ca.cnc[(0, 1)]
    assert min_vertex_cut(petersen()).kappa == 3


def test_min_cut_matches_brute_force_on_named_graphs():
    for g in (cycle(5), petersen(), complete_bipartite(3, 3), two_k4_sharing_vertex()):
        ca = min_vertex_cut(g)
        want = oracles.min_cut(g.n, g.edges())
        assert tuple(sorted(ca.cut)) == want
        nb = oracles.adjacency(g.n, g.edges())
        assert list(ca.components) == oracles.component_sets(g.n, nb, set(want))


def test_min_cut_errors():
    with pytest.raises(CompleteGraph):
        min_vertex_cut(complete(5))
    with pytest.raises(Disconnected):
        min_vertex_cut(Graph.from_edges(4, [(0, 1), (2, 3)]))


@given(graphs(max_n=10, min_n=3))
@settings(max_examples=150, deadline=None)
def test_min_cut_is_minimum_and_lex_first(g):
    if not is_connected(g) or g.is_complete():
        return
    ca = min_vertex_cut(g)
    assert tuple(sorted(ca.cut)) == oracles.min_cut(g.n, g.edges())
    assert len(components(g, ca.cut)) == ca.c >= 2
    for (x, i), flag in ca.cnc.items():
        assert flag == all(g.has_edge(x, v) for v in ca.components[i])
    assert set(ca.cnc) == {(x, i) for x in ca.cut for i in range(ca.c)}


def test_flow_path_agrees_with_brute_force():
    # force the max-flow fallback by disabling the subset search
    for g in (petersen(), complete_bipartite(3, 3), cycle(6), complete_bipartite(4, 5)):
        assert min_vertex_cut(g, brute_force_limit=0).cut == min_vertex_cut(g).cut


def test_min_cut_beyond_brute_force_limit():
    # K5,6 has connectivity 5, above the subset-search limit
    g = complete_bipartite(5, 6)
    ca = min_vertex_cut(g)
    assert ca.cut == frozenset(range(5))
    assert tuple(sorted(ca.cut)) == oracles.min_cut(g.n, g.edges())


def test_large_graph_beyond_64_vertices():
    g = cycle(100)
    assert g.degree(99) == 2 and g.has_edge(0, 99)
    ca = min_vertex_cut(g)
    assert ca.cut == {0, 2}
    assert write_graph6(parse_graph6(write_graph6(g))) == write_graph6(g)


def test_relabel():
    g = path(3).relabel([2, 0, 1])
    # new vertex i is old vertex order[i]: old path 0-1-2 becomes 1-2-0
    assert g.edges() == [(0, 2), (1, 2)]


def test_every_subset_smaller_than_cut_leaves_graph_connected():
    g = petersen()
    k = min_vertex_cut(g).kappa
    for s in combinations(range(g.n), k - 1):
        assert len(components(g, s)) == 1
