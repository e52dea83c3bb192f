import pytest
from hypothesis import given, strategies as st

from sdke import (
    GraphError,
    build_graph,
    connected_components,
    delete_edge,
    disjoint_union,
    export_dot,
    induced_subgraph,
    parse_edge_list,
    serialize_edge_list,
)
from fixtures import cycle_graph, label_matching, path_graph, posy12, POSY12_M, ladder8


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2
    assert g.edges == ((0, 1),)
    assert g.adjacency == ((1,), (0,))


def test_build_ladder8_from_labels():
    g = ladder8()
    assert g.n == 8
    assert g.num_edges == 10
    assert g.labels == (1, 2, 3, 4, 5, 6, 7, 8)


def test_build_rejects_loop():
    with pytest.raises(GraphError, match="loop"):
        build_graph(3, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError, match="outside"):
        build_graph(2, [(0, 2)])


def test_build_duplicate_strict_vs_permissive():
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(3, [(0, 1), (1, 0)])
    g = build_graph(3, [(0, 1), (1, 0)], dedupe=True)
    assert g.edges == ((0, 1),)


def test_induced_identity():
    g = cycle_graph(4)
    h = induced_subgraph(g, range(4))
    assert h.n == g.n and h.edges == g.edges


def test_induced_empty():
    assert induced_subgraph(cycle_graph(4), []).n == 0


def test_induced_posy12_pendant_pair_is_k2():
    h = induced_subgraph(posy12(), {10, 11})
    assert h.n == 2 and h.edges == ((0, 1),)
    assert h.labels == (10, 11)


def test_induced_rejects_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(cycle_graph(4), {0, 9})


def test_induced_edge_count_matches_brute_force():
    g = posy12()
    for s in ({0, 1, 2}, {0, 2, 4, 6, 8}, set(range(7))):
        h = induced_subgraph(g, s)
        expect = sum(1 for u in s for v in s if u < v and g.has_edge(u, v))
        assert h.num_edges == expect


def test_delete_edge():
    g = delete_edge(build_graph(2, [(0, 1)]), (0, 1))
    assert g.n == 2 and g.num_edges == 0
    p = delete_edge(cycle_graph(4), (0, 1))
    assert p.num_edges == 3
    with pytest.raises(GraphError):
        delete_edge(p, (0, 1))


def test_delete_edge_posy12_cut():
    g = delete_edge(posy12(), (8, 10))
    assert g.num_edges == posy12().num_edges - 1
    assert not g.has_edge(8, 10)


def test_parse_k2():
    g = parse_edge_list("2 1\n0 1\n")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_comments_and_blanks():
    g = parse_edge_list("# a comment\n\n3 2\n0 1\n# another\n1 2\n")
    assert g.n == 3 and g.num_edges == 2


def test_serialize_c4_canonical():
    assert serialize_edge_list(cycle_graph(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize("text,match", [
    ("2 1\n0 2\n", "outside"),
    ("2 2\n0 1\n", "declares"),
    ("2 1\nx y\n", "malformed"),
    ("not a header", "header"),
    ("", "header"),
])
def test_parse_errors(text, match):
    with pytest.raises(GraphError, match=match):
        parse_edge_list(text)


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(0, 8), st.integers(0, 8))
            .map(lambda e: (min(e), max(e)))
            .filter(lambda e: e[0] != e[1] and e[1] < n)))))
def test_parse_serialize_roundtrip(case):
    n, edges = case
    g = build_graph(n, sorted(edges))
    assert parse_edge_list(serialize_edge_list(g)) == g


def test_connected_components():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    comps = connected_components(g)
    assert sorted(sorted(c) for c in comps) == [[0, 1, 2], [3, 4]]


def test_export_dot_plain():
    text = export_dot(build_graph(2, [(0, 1)]))
    assert "0 -- 1;" in text and text.startswith("graph G {")


def test_export_dot_matching_styled():
    g = build_graph(2, [(0, 1)])
    from sdke import maximum_matching
    text = export_dot(g, matching=maximum_matching(g))
    assert "0 -- 1 [style=bold, color=red];" in text


def test_export_dot_partition_colors():
    from sdke import sd_ke_partition
    g = posy12()
    part = sd_ke_partition(g, label_matching(g, POSY12_M))
    text = export_dot(g, partition=part)
    assert 'fillcolor=lightblue' in text  # KE vertices 10, 11
    assert text.count('fillcolor=gray85') == 10
