import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropfan import (
    EdgeSet,
    Graph,
    complement,
    components,
    graph_rank,
    induced_subgraph,
    is_complete_multipartite,
    parse_graph,
    spanning_forest,
)

from conftest import all_graphs


# ---------------------------------------------------------------------------
# Independent oracles


def nx_graph(g: Graph, s: EdgeSet) -> nx.Graph:
    h = nx.Graph()
    h.add_edges_from(s.edges)
    return h


def is_forest(edges) -> bool:
    if not edges:
        return True
    return nx.is_forest(nx.Graph(list(edges)))


def rank_oracle(g: Graph, s: EdgeSet) -> int:
    """Definitional rank: the largest forest inside s, via networkx."""
    edges = s.edges
    for size in range(len(edges), -1, -1):
        for sub in itertools.combinations(edges, size):
            if is_forest(sub):
                return size
    return 0


def multipartite_oracle_partition(g: Graph) -> bool:
    """Non-adjacency must be an equivalence relation (transitivity is the
    only part at stake)."""
    for a, b, c in itertools.permutations(g.labels, 3):
        if not g.has_edge(a, b) and not g.has_edge(b, c) and g.has_edge(a, c):
            return False
    return True


def multipartite_oracle_extension(g: Graph) -> bool:
    """Every edge extends: for an edge ij and any other vertex k, ik or jk."""
    for (i, j) in g.edges:
        for k in g.labels:
            if k in (i, j):
                continue
            if not g.has_edge(i, k) and not g.has_edge(j, k):
                return False
    return True


# ---------------------------------------------------------------------------
# Parsing


def test_parse_triangle():
    g = parse_graph("2-3\n2-4\n3-4")
    assert g.labels == (2, 3, 4)
    assert g.edges == ((2, 3), (2, 4), (3, 4))


def test_parse_rejects_loop():
    with pytest.raises(ValueError, match="loop"):
        parse_graph("2-2")


def test_parse_rejects_duplicate():
    with pytest.raises(ValueError, match="duplicate"):
        parse_graph("2-3\n3-2")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError, match="malformed"):
        parse_graph("2-3\nnot an edge")


def test_parse_labeled_k4():
    text = "2-3\n2-4\n2-5\n3-4\n3-5\n4-5"
    assert parse_graph(text) == Graph.complete([2, 3, 4, 5])


def test_parse_isolated_vertices():
    g = parse_graph("vertices: 7 9\n2-3")
    assert g.labels == (2, 3, 7, 9)
    assert g.edges == ((2, 3),)


# ---------------------------------------------------------------------------
# Rank, forests, components


def test_rank_disconnected_flat(k4):
    s = k4.edge_set([(2, 3), (4, 5)])
    assert graph_rank(k4, s) == 2


def test_rank_empty(k4):
    assert graph_rank(k4, k4.empty_edge_set()) == 0


def test_rank_connected_flat(k4):
    assert graph_rank(k4, k4.edge_set([(2, 3), (2, 4), (3, 4)])) == 2


def test_spanning_forest_triangle():
    g = parse_graph("2-3\n2-4\n3-4")
    forest = spanning_forest(g, g.full_edge_set())
    assert forest.edges == ((2, 3), (2, 4))
    h = nx.Graph(list(forest.edges))
    assert nx.is_forest(h)
    assert all(
        not nx.is_forest(nx.Graph(list(forest.edges) + [e]))
        for e in g.edges
        if e not in forest.edges
    )


def test_spanning_forest_fixes_forests(k4):
    s = k4.edge_set([(2, 3), (4, 5)])
    assert spanning_forest(k4, s) == s


def test_spanning_forest_k4_is_spanning_tree(k4):
    forest = spanning_forest(k4, k4.full_edge_set())
    assert len(forest) == 3 == rank_oracle(k4, k4.full_edge_set())


def test_components(k4):
    assert components(k4, k4.edge_set([(2, 3), (4, 5)])) == [(2, 3), (4, 5)]
    assert components(k4, k4.empty_edge_set()) == []
    assert components(k4, k4.edge_set([(2, 3), (3, 4)])) == [(2, 3, 4)]


def test_rank_against_definitional_oracle():
    for g in all_graphs((2, 3, 4, 5)):
        for mask in range(1 << len(g.edges)):
            s = EdgeSet(g, mask)
            assert graph_rank(g, s) == rank_oracle(g, s)


@settings(max_examples=200)
@given(data=st.data())
def test_rank_equals_forest_size(data):
    labels = tuple(range(2, 2 + data.draw(st.integers(3, 6))))
    pool = list(itertools.combinations(labels, 2))
    edges = tuple(sorted(data.draw(st.sets(st.sampled_from(pool)))))
    g = Graph(labels, edges)
    mask = data.draw(st.integers(0, (1 << len(edges)) - 1))
    s = EdgeSet(g, mask)
    assert graph_rank(g, s) == len(spanning_forest(g, s))


# ---------------------------------------------------------------------------
# Equal ranks iff a common spanning forest


def test_equal_rank_iff_common_spanning_forest():
    g = Graph.complete([2, 3, 4, 5])
    full = g.full_edge_set()
    for mask in range(1 << len(g.edges)):
        s = EdgeSet(g, mask)
        if len(s) > 6:
            continue
        equal_rank = graph_rank(g, s) == graph_rank(g, full)
        shares = any(
            nx.is_forest(nx.Graph(list(sub)))
            and len(sub) == graph_rank(g, full)
            and all(e in s.edges for e in sub)
            for sub in itertools.combinations(g.edges, graph_rank(g, full))
        )
        assert equal_rank == shares


# ---------------------------------------------------------------------------
# Complete multipartiteness


def test_k4_is_multipartite(k4):
    assert is_complete_multipartite(k4) == (True, None)


def test_k4_minus_two_adjacent_edges_is_not(gamma_obstruction):
    ok, witness = is_complete_multipartite(gamma_obstruction)
    assert not ok
    assert witness == (3, 4, 5)


def test_star_is_multipartite():
    g = Graph.from_edges([(2, 4), (2, 5)])
    assert is_complete_multipartite(g)[0]


def test_three_characterizations_agree_exhaustively():
    for nv in (1, 2, 3, 4, 5, 6):
        for g in all_graphs(tuple(range(2, 2 + nv))):
            a = is_complete_multipartite(g)[0]
            b = multipartite_oracle_partition(g)
            c = multipartite_oracle_extension(g)
            assert a == b == c, g


def test_multipartite_complement_is_cluster_graph():
    for g in all_graphs((2, 3, 4, 5)):
        if not is_complete_multipartite(g)[0]:
            continue
        comp = complement(g)
        # each component of the complement must be a clique
        for block in components(comp, comp.full_edge_set()):
            for a, b in itertools.combinations(block, 2):
                assert comp.has_edge(a, b)


# ---------------------------------------------------------------------------
# Helpers


def test_induced_subgraph(k4):
    h = induced_subgraph(k4, [3, 4, 5])
    assert h == Graph.complete([3, 4, 5])


def test_dot_export(k4):
    dot = k4.to_dot()
    assert dot.splitlines()[1] == '  "2" -- "3";'
    assert dot.count("--") == 6


def test_edge_set_ops(k4):
    a = k4.edge_set([(2, 3), (4, 5)])
    b = k4.edge_set([(2, 3)])
    assert b <= a and b < a
    assert (a - b).edges == ((4, 5),)
    assert (a & b) == b
    assert (a | b) == a
    assert (2, 3) in b and (4, 5) not in b
