import io
import math

import pytest
from hypothesis import given

from oracles import connected_graphs, floyd_warshall, trees
from treenorm.constructions import fixture, path, star
from treenorm.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    ParseError,
    add_edge,
    all_pairs_distances,
    bfs_distances,
    is_connected,
    is_tree,
    non_edges,
    parse_edge_list,
    serialize_edge_list,
)


class TestGraph:
    def test_from_edges_normalises(self):
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edges() == [(0, 1), (0, 2)]
        assert g.adjacency == ((1, 2), (0,), (0,))

    @pytest.mark.parametrize("n, edges", [
        (0, []),
        (2, [(0, 0)]),
        (2, [(0, 2)]),
        (2, [(0, 1), (1, 0)]),
    ])
    def test_invalid(self, n, edges):
        with pytest.raises(GraphError):
            Graph.from_edges(n, edges)

    def test_relabel(self):
        g = path(4).relabel([2, 0, 3, 1])
        assert g.edges() == [(0, 2), (0, 3), (1, 3)]
        with pytest.raises(GraphError):
            path(3).relabel([0, 0, 1])

    def test_degree_and_has_edge(self):
        s = star(5)
        assert s.degree(0) == 4 and s.degree(3) == 1
        assert s.has_edge(3, 0) and not s.has_edge(1, 2)


class TestEdgeList:
    def test_single_vertex(self):
        assert serialize_edge_list(Graph.from_edges(1, [])) == "1\n"

    def test_star3(self):
        assert serialize_edge_list(star(3)) == "3\n0 1\n0 2\n"

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a comment\n\n4\n# inner\n0 1\n2 1\n\n3 2\n")
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_file_object(self):
        assert parse_edge_list(io.StringIO("2\n0 1\n")).edges() == [(0, 1)]

    @pytest.mark.parametrize("text, line", [
        ("x\n", 1),
        ("3\n0 1 2\n", 2),
        ("3\n0  1\n", 2),
        ("3\n0\t1\n", 2),
        ("3\n-1 2\n", 2),
        ("3\n0 1\n0 3\n", 3),
        ("3\n1 1\n", 2),
        ("3\n0 1\n1 0\n", 3),
        ("0\n", 1),
    ])
    def test_malformed_reports_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")

    def test_missing_count(self):
        with pytest.raises(ParseError):
            parse_edge_list("# only a comment\n")

    @pytest.mark.parametrize("fig", ["fig1", "fig2_tree", "fig2_plus_edge", "fig3"])
    def test_fixture_round_trip(self, fig):
        g = fixture(fig)
        text = serialize_edge_list(g)
        assert parse_edge_list(text) == g
        assert serialize_edge_list(parse_edge_list(text)) == text

    @given(connected_graphs(max_n=9))
    def test_round_trip(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g


class TestDistances:
    def test_fig1_from_v3(self):
        d = bfs_distances(fixture("fig1"), 2)
        assert (d[0], d[4], d[6]) == (2, 2, 3)

    def test_path_from_end(self):
        assert bfs_distances(path(5), 0) == [0, 1, 2, 3, 4]

    def test_unreachable_is_infinite(self):
        d = bfs_distances(Graph.from_edges(3, [(0, 1)]), 0)
        assert d[:2] == [0, 1] and math.isinf(d[2])

    def test_source_out_of_range(self):
        with pytest.raises(GraphError):
            bfs_distances(path(3), 3)

    def test_small_matrices(self):
        assert all_pairs_distances(path(3)).max() == 2
        dm = all_pairs_distances(fixture("fig1"))
        assert dm.max() == 4 and dm[0, 4] == 4
        s = all_pairs_distances(star(6))
        assert all(s[u, v] == 2 for u in range(1, 6) for v in range(1, 6) if u != v)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            all_pairs_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))

    @given(connected_graphs(max_n=10))
    def test_matches_floyd_warshall(self, g):
        dm = all_pairs_distances(g)
        ref = floyd_warshall(g)
        assert [list(dm.row(v)) for v in range(g.n)] == ref

    @given(connected_graphs(max_n=9))
    def test_metric(self, g):
        dm = all_pairs_distances(g)
        r = range(g.n)
        assert all(dm[v, v] == 0 for v in r)
        assert all(dm[u, v] == dm[v, u] for u in r for v in r)
        assert all(dm[u, w] <= dm[u, v] + dm[v, w] for u in r for v in r for w in r)


class TestStructure:
    def test_is_tree(self):
        assert is_tree(fixture("fig2_tree"))
        assert not is_tree(fixture("fig2_plus_edge"))
        assert is_tree(Graph.from_edges(1, []))
        assert not is_tree(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]))

    def test_add_edge(self):
        assert add_edge(fixture("fig2_tree"), 0, 4) == fixture("fig2_plus_edge")
        with pytest.raises(GraphError):
            add_edge(path(2), 0, 1)
        with pytest.raises(GraphError):
            add_edge(path(2), 1, 1)
        tri = add_edge(path(3), 0, 2)
        assert tri.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_add_edge_leaves_input(self):
        p = path(3)
        add_edge(p, 0, 2)
        assert p.edges() == [(0, 1), (1, 2)]

    @given(trees(max_n=9))
    def test_non_edges_complement(self, t):
        ne = list(non_edges(t))
        assert len(ne) + t.edge_count == t.n * (t.n - 1) // 2
        assert not any(t.has_edge(u, v) for u, v in ne)

    @given(connected_graphs(max_n=9))
    def test_connected(self, g):
        assert is_connected(g)
