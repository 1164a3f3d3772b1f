import random
from itertools import combinations

import pytest

from truemper.graph import (EdgeListParseError, Graph, biconnected_blocks,
                            components, find_claw, find_diamond,
                            format_edge_list, from_graph6, induced_subgraph,
                            is_clique_graph, is_connected, is_hole_graph,
                            is_triangle_free, parse_edge_list)

from util import all_graphs, is_isomorphic, random_graph

C5 = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
K4 = Graph.from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


class TestFromEdgeList:
    def test_cycle_degrees(self):
        assert all(C5.degree(v) == 2 for v in range(5))

    def test_empty_graph(self):
        g = Graph.from_edge_list(0, [])
        assert g.n == 0 and g.m == 0

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edge_list(3, [(0, 1), (0, 1)])
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edge_list(3, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edge_list(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edge_list(3, [(0, 3)])


class TestInducedSubgraph:
    def test_k4_to_triangle(self):
        sub, idmap = induced_subgraph(K4, {0, 1, 2})
        assert sub.n == 3 and sub.m == 3
        assert idmap == (0, 1, 2)

    def test_c5_to_path(self):
        sub, _ = induced_subgraph(C5, {0, 1, 2})
        assert sub.m == 2 and sorted(sub.degree(v) for v in range(3)) == [1, 1, 2]

    def test_empty_selection(self):
        sub, idmap = induced_subgraph(C5, set())
        assert sub.n == 0 and idmap == ()

    def test_full_selection_identity(self):
        for g in (C5, K4):
            sub, idmap = induced_subgraph(g, range(g.n))
            assert sub == g and idmap == tuple(range(g.n))

    def test_tags_carried(self):
        g = C5.with_tags(["a", None, "b", None, None])
        sub, _ = induced_subgraph(g, {0, 2, 3})
        assert sub.tags == ("a", "b", None)


class TestConnectivity:
    def test_two_disjoint_edges(self):
        g = Graph.from_edge_list(4, [(0, 1), (2, 3)])
        assert len(components(g)) == 2
        assert not is_connected(g)

    def test_c6_connected(self):
        g = Graph.from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
        assert components(g) == [set(range(6))]

    def test_empty_graph_components(self):
        assert components(Graph.from_edge_list(0, [])) == []

    def test_components_partition_nodes(self):
        rng = random.Random(2)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9), 0.25)
            comps = components(g)
            seen = set()
            for c in comps:
                assert not (c & seen)
                seen |= c
            assert seen == set(range(g.n))


class TestBiconnectedBlocks:
    def test_path(self):
        g = Graph.from_edge_list(3, [(0, 1), (1, 2)])
        assert set(biconnected_blocks(g)) == {frozenset({(0, 1)}),
                                              frozenset({(1, 2)})}

    def test_c4_single_block(self):
        g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        blocks = biconnected_blocks(g)
        assert len(blocks) == 1 and len(blocks[0]) == 4

    def test_two_triangles_sharing_a_node(self):
        g = Graph.from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        assert len(biconnected_blocks(g)) == 2

    def test_blocks_partition_edges(self):
        rng = random.Random(3)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), 0.3)
            blocks = biconnected_blocks(g)
            union = set()
            for b in blocks:
                assert not (b & union)
                union |= b
            assert union == set(g.edges())

    def test_block_membership_matches_cycles(self):
        # two nodes share a block iff they are adjacent or lie on a common
        # (not necessarily induced) cycle; brute-forced via simple paths
        def on_common_cycle(g, u, v):
            if g.has_edge(u, v):
                return True
            paths = []

            def walk(cur, target, seen, path):
                if cur == target:
                    paths.append(tuple(path))
                    return
                for w in g.neighbors(cur):
                    if w not in seen:
                        walk(w, target, seen | {w}, path + [w])

            walk(u, v, {u}, [u])
            for p1, p2 in combinations(paths, 2):
                if set(p1) & set(p2) == {u, v}:
                    return True
            return False

        rng = random.Random(4)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 7), 0.35)
            blocks = biconnected_blocks(g)
            node_sets = []
            for b in blocks:
                ns = set()
                for a, c in b:
                    ns |= {a, c}
                node_sets.append(ns)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    together = any(u in ns and v in ns for ns in node_sets)
                    assert together == on_common_cycle(g, u, v)


class TestSmallPredicates:
    def test_c4_is_hole(self):
        assert is_hole_graph(Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
        assert not is_hole_graph(K4)
        assert not is_hole_graph(Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))

    def test_clique_predicate(self):
        assert is_clique_graph(K4)
        assert is_clique_graph(Graph.from_edge_list(1, []))
        assert is_clique_graph(Graph.from_edge_list(0, []))
        assert not is_clique_graph(C5)

    def test_triangle_free(self):
        assert is_triangle_free(C5)
        assert not is_triangle_free(K4)

    def test_diamond_found(self):
        dia = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert find_diamond(dia) == frozenset({0, 1, 2, 3})
        assert find_diamond(K4) is None  # K4 has no induced diamond

    def test_claw_found(self):
        claw = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert find_claw(claw) == frozenset({0, 1, 2, 3})
        assert find_claw(C5) is None

    def test_finders_match_brute_force(self):
        def brute(g, shape):
            for quad in combinations(range(g.n), 4):
                sub, _ = induced_subgraph(g, quad)
                degs = sorted(sub.degree(v) for v in range(4))
                if shape == "diamond" and degs == [2, 2, 3, 3]:
                    return True
                if shape == "claw" and degs == [1, 1, 1, 3]:
                    return True
            return False

        rng = random.Random(5)
        for _ in range(80):
            g = random_graph(rng, rng.randint(4, 10), rng.choice([0.2, 0.5, 0.8]))
            assert (find_diamond(g) is not None) == brute(g, "diamond")
            assert (find_claw(g) is not None) == brute(g, "claw")


class TestEdgeListFormat:
    def test_round_trip(self):
        text = format_edge_list(C5)
        g = parse_edge_list(text)
        assert g == C5

    def test_comments_and_whitespace(self):
        text = "# a five-cycle\n5 5\n0 1\n1 2  # chord-free\n2 3\n3 4\n0 4\n"
        assert parse_edge_list(text) == C5

    def test_parse_error_carries_line_number(self):
        with pytest.raises(EdgeListParseError) as err:
            parse_edge_list("2 1\n0 two\n")
        assert err.value.line == 2
        with pytest.raises(EdgeListParseError) as err:
            parse_edge_list("2 2\n0 1\n")
        assert err.value.line == 1

    def test_wrong_edge_count(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("3 1\n0 1\n1 2\n")


class TestGraph6:
    def test_k4(self):
        assert from_graph6("C~") == K4

    def test_c5(self):
        assert is_isomorphic(from_graph6("Dhc"), C5)

    def test_header_prefix(self):
        assert from_graph6(">>graph6<<C~") == K4


class TestNodeSequences:
    def test_paths(self):
        from truemper.graph import is_chordless_path_sequence, is_path_sequence
        assert is_path_sequence(C5, [0, 1, 2])
        assert is_chordless_path_sequence(C5, [0, 1, 2])
        assert not is_path_sequence(C5, [0, 2])
        assert not is_path_sequence(C5, [0, 1, 0])
        assert is_path_sequence(K4, [0, 1, 2, 3])
        assert not is_chordless_path_sequence(K4, [0, 1, 2, 3])

    def test_cycles(self):
        from truemper.graph import is_chordless_cycle_sequence
        assert is_chordless_cycle_sequence(C5, [0, 1, 2, 3, 4])
        assert is_chordless_cycle_sequence(K4, [0, 1, 2])
        assert not is_chordless_cycle_sequence(K4, [0, 1, 2, 3])
        dia = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert not is_chordless_cycle_sequence(dia, [2, 0, 3, 1])


def test_every_small_graph_round_trips_through_text():
    for g in all_graphs(4):
        assert parse_edge_list(format_edge_list(g)) == g
