import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    all_connected_graphs_brute,
    brute_canonical,
    floyd_warshall,
    random_connected_edges,
)
from rubble.errors import (
    DisconnectedError,
    MalformedError,
    OutOfRangeError,
    SelfLoopError,
    TooLargeError,
)
from rubble.graphs import (
    Graph,
    canonical_form,
    distances,
    from_edge_json,
    from_edge_list,
    parse_graph6,
    to_edge_json,
    write_graph6,
)


class TestFromEdgeList:
    def test_k2(self):
        g = from_edge_list(2, [(0, 1)])
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_p3(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.degree(1) == 2

    def test_disconnected(self):
        with pytest.raises(DisconnectedError):
            from_edge_list(4, [(0, 1), (2, 3)])

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            from_edge_list(2, [(0, 0), (0, 1)])

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            from_edge_list(2, [(0, 2)])
        with pytest.raises(OutOfRangeError):
            from_edge_list(0, [])

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            from_edge_list(65, [(i, i + 1) for i in range(64)])

    def test_duplicate_edges_merge(self):
        g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_edge_json_round_trip(self):
        g = from_edge_list(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])
        doc = to_edge_json(g)
        assert from_edge_json(json.dumps(doc)) == g


class TestGraph6:
    # expected records computed with networkx's encoder as an independent oracle
    def test_k2_record(self):
        assert write_graph6(from_edge_list(2, [(0, 1)])) == "A_"
        assert parse_graph6("A_").edges() == [(0, 1)]

    def test_p3_record(self):
        p3 = from_edge_list(3, [(0, 1), (1, 2)])
        assert write_graph6(p3) == "Bg"
        assert parse_graph6("Bg").edges() == [(0, 1), (1, 2)]

    def test_matches_networkx_encoder(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randrange(2, 12)
            edges = random_connected_edges(rng, n)
            g = from_edge_list(n, edges)
            ng = nx.Graph()
            ng.add_nodes_from(range(n))
            ng.add_edges_from(edges)
            expected = (
                nx.to_graph6_bytes(ng, nodes=sorted(ng), header=False).strip().decode()
            )
            assert write_graph6(g) == expected
            assert parse_graph6(expected).adj == g.adj

    def test_header_prefix_accepted(self):
        assert parse_graph6(">>graph6<<A_").n == 2

    def test_truncated_record(self):
        with pytest.raises(MalformedError):
            parse_graph6("B")

    def test_trailing_garbage(self):
        with pytest.raises(MalformedError):
            parse_graph6("A__")

    def test_bad_byte(self):
        with pytest.raises(MalformedError):
            parse_graph6("A\t")

    def test_nonzero_padding(self):
        # P_3's record with its lowest padding bit forced on ('g' -> 'h')
        bad = "B" + chr(ord("g") + 1)
        with pytest.raises(MalformedError):
            parse_graph6(bad)

    def test_long_form_rejected(self):
        with pytest.raises(TooLargeError):
            parse_graph6("~??~?????")

    def test_disconnected_record(self):
        rec = nx.to_graph6_bytes(nx.empty_graph(3), header=False).strip().decode()
        with pytest.raises(DisconnectedError):
            parse_graph6(rec)

    def test_write_too_large(self):
        big = from_edge_list(63, [(i, i + 1) for i in range(62)])
        with pytest.raises(TooLargeError):
            write_graph6(big)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_round_trip(self, data):
        n = data.draw(st.integers(1, 14))
        rng = random.Random(data.draw(st.integers(0, 2**30)))
        g = from_edge_list(n, random_connected_edges(rng, n) if n > 1 else [])
        assert parse_graph6(write_graph6(g)).adj == g.adj


class TestDistances:
    def test_complete(self):
        g = from_edge_list(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        table = distances(g)
        assert table.diameter == 1
        assert all(
            table.dist[i][j] == (0 if i == j else 1) for i in range(5) for j in range(5)
        )

    def test_p4_diameter(self):
        assert distances(from_edge_list(4, [(0, 1), (1, 2), (2, 3)])).diameter == 3

    def test_against_floyd_warshall(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randrange(1, 9)
            edges = random_connected_edges(rng, n) if n > 1 else []
            g = from_edge_list(n, edges)
            expected = floyd_warshall(n, edges)
            table = distances(g)
            assert [list(r) for r in table.dist] == expected

    def test_symmetry_and_triangle(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randrange(2, 9)
            g = from_edge_list(n, random_connected_edges(rng, n))
            d = distances(g).dist
            for i in range(n):
                assert d[i][i] == 0
                for j in range(n):
                    assert d[i][j] == d[j][i]
                    for k in range(n):
                        assert d[i][j] <= d[i][k] + d[k][j]


class TestCanonicalForm:
    def test_relabelings_agree(self):
        a = from_edge_list(3, [(0, 1), (1, 2)])
        b = from_edge_list(3, [(0, 2), (1, 2)])  # same path, middle vertex 2
        assert canonical_form(a) == canonical_form(b)

    def test_path_vs_triangle(self):
        p3 = from_edge_list(3, [(0, 1), (1, 2)])
        k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert canonical_form(p3) != canonical_form(k3)

    def test_four_vertex_classes(self):
        reference = all_connected_graphs_brute(4)
        assert len(reference) == 6
        forms = {canonical_form(from_edge_list(4, edges)) for edges in reference}
        assert len(forms) == 6

    def test_matches_brute_force_minimum(self):
        # same minimal bit string as the permutation-scan oracle
        for n in range(1, 6):
            for edges in all_connected_graphs_brute(n):
                g = from_edge_list(n, edges)
                packed = canonical_form(g)
                bits = brute_canonical(n, edges)
                acc = 0
                for b in bits:
                    acc = acc << 1 | b
                nbits = n * (n - 1) // 2
                nbytes = (nbits + 7) // 8
                acc <<= nbytes * 8 - nbits
                assert packed == bytes([n]) + acc.to_bytes(nbytes, "big")

    def test_invariant_under_random_permutations(self):
        rng = random.Random(5)
        for n in (4, 5, 7, 8):
            edges = random_connected_edges(rng, n)
            base = canonical_form(from_edge_list(n, edges))
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                shuffled = [(perm[u], perm[v]) for u, v in edges]
                assert canonical_form(from_edge_list(n, shuffled)) == base

    def test_distinguishes_nonisomorphic(self):
        # all 5-vertex classes are pairwise distinguished
        forms = [
            canonical_form(from_edge_list(5, edges))
            for edges in all_connected_graphs_brute(5)
        ]
        assert len(set(forms)) == len(forms) == 21

    def test_too_large(self):
        g = from_edge_list(9, [(i, i + 1) for i in range(8)])
        with pytest.raises(TooLargeError):
            canonical_form(g)


class TestGraphType:
    def test_immutability_and_hash(self):
        g = from_edge_list(2, [(0, 1)])
        assert hash(g) == hash(from_edge_list(2, [(0, 1)]))

    def test_label_lookup(self):
        g = from_edge_list(2, [(0, 1)], labels=["(1,1)", "(1,2)"])
        assert g.vertex_by_label("(1,2)") == 1
        assert g.vertex_by_label("0") == 0
        with pytest.raises(OutOfRangeError):
            g.vertex_by_label("(9,9)")

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(Exception):
            Graph(2, (2, 0))
