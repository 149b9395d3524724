from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acolor.families import (
    complete,
    complete_bipartite,
    cycle,
    cyclic_turan,
    dicycle,
    disjoint_cycles,
    matching_orientation,
    path,
    transitive_tournament,
)
from acolor.graph import (
    CycleWitness,
    MultiDigraph,
    MultiGraph,
    bidirect,
    butterfly_contract,
    contract_tree,
    degeneracy,
    delete_vertex,
    double,
    find_cycle,
    find_directed_cut,
    induced_subgraph,
    subdivide,
)


@st.composite
def hosts(draw, max_n=8, directed=None):
    n = draw(st.integers(0, max_n))
    if directed is None:
        directed = draw(st.booleans())
    pairs = st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
    raw = draw(st.lists(pairs, max_size=3 * n)) if n >= 2 else []
    edges = [(u, v) for u, v in raw if u != v]
    return MultiDigraph(n, edges) if directed else MultiGraph(n, edges)


def nx_has_cycle(host, S):
    """Independent check: does host[S] contain a (directed) cycle?"""
    G = nx.MultiDiGraph() if host.directed else nx.MultiGraph()
    G.add_nodes_from(S)
    G.add_edges_from((u, v) for u, v in host.edges if u in S and v in S)
    if host.directed:
        return not nx.is_directed_acyclic_graph(G)
    return len(S) > 0 and not nx.is_forest(G)


class TestTypes:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            MultiGraph(2, [(1, 1)])
        with pytest.raises(ValueError):
            MultiDigraph(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            MultiGraph(2, [(0, 2)])

    def test_multiplicity_kept(self):
        g = MultiGraph(2, [(0, 1), (1, 0)])
        assert g.mult(0, 1) == 2 and not g.is_simple

    def test_witness_rejects_repeats(self):
        with pytest.raises(ValueError):
            CycleWitness((0, 1, 0), False)


class TestFindCycle:
    def test_directed_triangle(self):
        assert find_cycle(dicycle(3), [0, 1, 2]) == CycleWitness((0, 1, 2), True)

    def test_transitive_tournament_acyclic(self):
        assert find_cycle(transitive_tournament(4)) is None

    def test_bigon(self):
        w = find_cycle(MultiGraph(2, [(0, 1), (0, 1)]), [0, 1])
        assert w == CycleWitness((0, 1), False)
        assert w.is_valid_in(MultiGraph(2, [(0, 1), (0, 1)]))

    def test_simple_edge_is_not_a_cycle(self):
        assert find_cycle(MultiGraph(2, [(0, 1)])) is None

    def test_digon(self):
        assert find_cycle(MultiDigraph(2, [(0, 1), (1, 0)])).length == 2

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            find_cycle(complete(3), [0, 5])

    def test_restricted_to_subset(self):
        assert find_cycle(complete(4), [0, 1]) is None
        assert set(find_cycle(complete(4), [1, 2, 3]).vertices) == {1, 2, 3}

    @settings(max_examples=150, deadline=None)
    @given(hosts())
    def test_matches_exhaustive_subsets(self, host):
        for r in range(host.n + 1):
            for S in combinations(range(host.n), r):
                w = find_cycle(host, S)
                assert (w is not None) == nx_has_cycle(host, set(S))
                if w is not None:
                    assert set(w.vertices) <= set(S)
                    assert w.is_valid_in(host)

    def test_deterministic(self):
        g = complete(6)
        assert find_cycle(g) == find_cycle(MultiGraph(6, reversed(g.edges)))


class TestInduced:
    def test_k4_to_k3(self):
        sub, index = induced_subgraph(complete(4), [0, 2, 3])
        assert sub == complete(3)
        assert index == {0: 0, 2: 1, 3: 2}

    def test_turan_class_is_independent(self):
        sub, _ = induced_subgraph(cyclic_turan(2, 3), [0, 1])
        assert sub == MultiDigraph(2, [])

    def test_identity(self):
        d = matching_orientation(3)
        assert induced_subgraph(d, range(d.n))[0] == d

    def test_multiplicity_preserved(self):
        g = MultiGraph(3, [(0, 1), (0, 1), (1, 2)])
        assert induced_subgraph(g, [0, 1])[0] == MultiGraph(2, [(0, 1), (0, 1)])

    @settings(max_examples=60, deadline=None)
    @given(hosts(), st.data())
    def test_composes(self, host, data):
        S = data.draw(st.sets(st.integers(0, max(host.n - 1, 0)), max_size=host.n)) if host.n else set()
        sub, index = induced_subgraph(host, S)
        T = data.draw(st.sets(st.integers(0, max(sub.n - 1, 0)), max_size=sub.n)) if sub.n else set()
        back = {new: old for old, new in index.items()}
        twice, _ = induced_subgraph(sub, T)
        assert twice == induced_subgraph(host, {back[t] for t in T})[0]


class TestDeleteVertex:
    def test_triangle(self):
        assert delete_vertex(complete(3), 1)[0] == complete(2)

    def test_digon(self):
        assert delete_vertex(dicycle(2), 0)[0] == MultiDigraph(1, [])

    def test_dn_second_class(self):
        d3 = matching_orientation(3)
        sub, _ = delete_vertex(d3, 4)
        assert sub.n == 5
        assert len(sub.arcs) == 6
        matching = [a for a in d3.arcs if a[1] == a[0] + 3 and a[1] != 4]
        assert len(matching) == 2

    def test_range(self):
        with pytest.raises(IndexError):
            delete_vertex(complete(3), 3)


class TestContractTree:
    def test_path_with_pendants_gives_bigon(self):
        # path a-b-c = 0-1-2, pendant edges a-d and c-d with d = 3
        g = MultiGraph(4, [(0, 1), (1, 2), (0, 3), (2, 3)])
        h, index = contract_tree(g, [0, 1, 2])
        assert h == MultiGraph(2, [(0, 1), (0, 1)])
        assert index[0] == index[1] == index[2] == 0 and index[3] == 1

    def test_c6_to_c4(self):
        h, _ = contract_tree(cycle(6), [0, 1, 2])
        assert nx.is_isomorphic(_nx(h), _nx(cycle(4)))

    def test_single_vertex_identity(self):
        g = complete(4)
        assert contract_tree(g, [2])[0] == g

    def test_not_a_tree(self):
        with pytest.raises(ValueError):
            contract_tree(complete(3), [0, 1, 2])
        with pytest.raises(ValueError):
            contract_tree(path(4), [0, 2])

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 6), st.data())
    def test_inverts_subdivision(self, n, data):
        H = data.draw(st.sampled_from([complete(n), cycle(n), complete_bipartite(2, n - 2) if n > 3 else complete(n)]))
        edge = data.draw(st.sampled_from(H.edges))
        times = data.draw(st.integers(1, 3))
        G = subdivide(H, edge, times)
        inner = list(range(H.n, H.n + times))
        # contract the inner path together with one endpoint
        back, _ = contract_tree(G, [edge[0]] + inner)
        assert back.simplify() == H


def _nx(g):
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


class TestButterfly:
    def test_path(self):
        d = MultiDigraph(3, [(0, 1), (1, 2)])
        assert butterfly_contract(d, (0, 1))[0] == MultiDigraph(2, [(0, 1)])

    def test_triangle_to_digon(self):
        h, _ = butterfly_contract(dicycle(3), (1, 2))
        assert h == MultiDigraph(2, [(0, 1), (1, 0)])

    def test_not_contractible(self):
        d = MultiDigraph(4, [(0, 1), (0, 2), (3, 1)])
        with pytest.raises(ValueError):
            butterfly_contract(d, (0, 1))


class TestDirectedCut:
    def test_transitive(self):
        X, S = find_directed_cut(transitive_tournament(3))
        assert X == {0}
        assert set(S) == {(0, 1), (0, 2)}

    def test_strong(self):
        assert find_directed_cut(dicycle(3)) is None

    def test_two_cycles(self):
        X, S = find_directed_cut(disjoint_cycles(2, 3, directed=True))
        assert X == {0, 1, 2} and S == ()

    @settings(max_examples=150, deadline=None)
    @given(hosts(directed=True))
    def test_agrees_with_strong_connectivity(self, d):
        G = nx.DiGraph()
        G.add_nodes_from(range(d.n))
        G.add_edges_from(d.arcs)
        cut = find_directed_cut(d)
        strong = d.n == 0 or nx.is_strongly_connected(G)
        assert (cut is None) == strong
        if cut is not None:
            X, S = cut
            assert 0 < len(X) < d.n
            assert not any(u not in X and v in X for u, v in d.arcs)
            assert set(S) == {(u, v) for u, v in d.arcs if u in X and v not in X}


def brute_degeneracy(g, multiplicity=True):
    best = 0
    for r in range(1, g.n + 1):
        for S in combinations(range(g.n), r):
            S = set(S)
            deg = [sum(g.mult(v, w) if multiplicity else 1 for w in g.neighbors(v) if w in S) for v in S]
            best = max(best, min(deg))
    return best


class TestDegeneracy:
    def test_forest(self):
        assert degeneracy(path(5))[0] == 1

    def test_k5(self):
        assert degeneracy(complete(5))[0] == 4

    def test_k33(self):
        assert degeneracy(complete_bipartite(3, 3))[0] == 3

    def test_multiplicity_flag(self):
        g = MultiGraph(2, [(0, 1), (0, 1)])
        assert degeneracy(g)[0] == 2
        assert degeneracy(g, multiplicity=False)[0] == 1

    @settings(max_examples=100, deadline=None)
    @given(hosts(directed=False))
    def test_order_certificate_and_brute_force(self, g):
        for mult in (True, False):
            d, order = degeneracy(g, multiplicity=mult)
            assert sorted(order) == list(range(g.n))
            pos = {v: i for i, v in enumerate(order)}
            for v in range(g.n):
                later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
                assert sum(g.mult(v, w) if mult else 1 for w in later) <= d
            assert d == brute_degeneracy(g, mult)


class TestBidirectDouble:
    def test_k2(self):
        assert bidirect(complete(2)) == MultiDigraph(2, [(0, 1), (1, 0)])
        assert double(complete(2)) == MultiGraph(2, [(0, 1), (0, 1)])

    def test_c3(self):
        assert len(bidirect(cycle(3)).arcs) == 6
        assert len(double(cycle(3)).edges) == 6

    def test_edgeless(self):
        assert bidirect(MultiGraph(3)) == MultiDigraph(3)
        assert double(MultiGraph(3)) == MultiGraph(3)

    def test_rejects_multigraph(self):
        with pytest.raises(ValueError):
            double(MultiGraph(2, [(0, 1), (0, 1)]))
