import random

import numpy as np
import pytest

from supergraph import (
    ArityMismatch,
    InvalidParameter,
    Partition,
    SimpleGraph,
    SizeMismatch,
    commuting_graph,
    complete_graph,
    compressed_graph,
    conjugacy_partition,
    connected_components,
    cyclic,
    dihedral,
    generalized_join,
    generalized_quaternion,
    greatest_partition,
    is_complete,
    is_connected,
    is_spanning_subgraph,
    least_partition,
    order_partition,
    star_graph,
    super_graph,
    twin_canonical_form,
)


def _random_graph(rng, n, p=0.4):
    return SimpleGraph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def _random_partition(rng, n):
    k = rng.randint(1, n)
    blocks = {}
    for v in range(n):
        blocks.setdefault(rng.randrange(k), []).append(v)
    return Partition(n, blocks.values())


def test_basic_constructions():
    assert complete_graph(3).edge_count == 3
    assert complete_graph(1).edge_count == 0
    s = star_graph(3)  # path on 3 vertices
    assert s.degree(0) == 2
    assert sorted(s.degrees()) == [1, 1, 2]
    with pytest.raises(InvalidParameter):
        star_graph(1)
    with pytest.raises(InvalidParameter):
        complete_graph(0)


def test_from_adjacency_validation():
    with pytest.raises(InvalidParameter):
        SimpleGraph.from_adjacency([[0, 1], [0, 0]])
    with pytest.raises(InvalidParameter):
        SimpleGraph.from_adjacency([[1, 0], [0, 0]])
    g = SimpleGraph.from_adjacency([[0, 1], [1, 0]])
    assert g.edges() == [(0, 1)]


def test_commuting_graph_abelian_is_complete():
    assert is_complete(commuting_graph(cyclic(4)))


def test_commuting_graph_d6():
    g = commuting_graph(dihedral(3))
    assert g.degree(3) == 1  # a reflection commutes with e only
    assert g.neighbors(3) == [0]
    for grp in (dihedral(5), generalized_quaternion(2)):
        cg = commuting_graph(grp)
        assert cg.degree(grp.identity) == grp.order - 1


def _example_path():
    # three vertices, single edge between the last two
    return SimpleGraph(3, [(1, 2)]), Partition(3, [[0, 1], [2]])


def test_super_graph_worked_example():
    graph, part = _example_path()
    sup = super_graph(graph, part)
    assert is_complete(sup) and sup.n == 3


def test_super_graph_extreme_relations():
    rng = random.Random(7)
    for _ in range(20):
        g = _random_graph(rng, rng.randint(1, 8))
        assert super_graph(g, least_partition(g.n)) == g
        assert is_complete(super_graph(g, greatest_partition(g.n)))


def test_super_graph_invariants_random():
    rng = random.Random(11)
    for _ in range(30):
        g = _random_graph(rng, rng.randint(2, 9))
        p = _random_partition(rng, g.n)
        sup = super_graph(g, p)
        assert is_spanning_subgraph(g, sup)
        for block in p.blocks:
            assert is_complete(sup.induced_subgraph(block))


def test_super_graph_size_mismatch():
    g = complete_graph(3)
    with pytest.raises(SizeMismatch):
        super_graph(g, least_partition(4))


def test_compressed_graph_worked_example():
    graph, part = _example_path()
    comp = compressed_graph(graph, part)
    assert comp.n == 2 and comp.edges() == [(0, 1)]
    # the original graph is disconnected although the compressed graph is
    # connected; one block induces a disconnected subgraph, so the converse
    # connectivity criterion does not apply
    assert not is_connected(graph)
    assert is_connected(comp)
    assert not is_connected(graph.induced_subgraph(part.blocks[0]))


def test_compressed_graph_least_is_identity():
    rng = random.Random(3)
    g = _random_graph(rng, 7)
    assert compressed_graph(g, least_partition(7)) == g


def test_compressed_graph_d6_order_is_star():
    d6 = dihedral(3)
    comp = compressed_graph(commuting_graph(d6), order_partition(d6))
    assert comp.edges() == [(0, 1), (0, 2)]
    assert comp.labels[0] == "{e}"


def test_generalized_join_is_usual_join_for_k2():
    g1 = SimpleGraph(2, [(0, 1)])
    g2 = SimpleGraph(3, [(0, 1)])
    join = generalized_join(complete_graph(2), [g1, g2])
    expected = {(0, 1), (2, 3)} | {(i, j) for i in (0, 1) for j in (2, 3, 4)}
    assert set(join.edges()) == expected


def test_generalized_join_star_example():
    join = generalized_join(
        star_graph(3), [complete_graph(1), complete_graph(2), complete_graph(3)]
    )
    assert join.n == 6
    assert join.edge_count == 9  # 0+1+3 internal, 1*2+1*3 across


def test_generalized_join_edgeless_is_disjoint_union():
    parts = [complete_graph(2), complete_graph(3)]
    join = generalized_join(SimpleGraph(2), parts)
    assert join.edge_count == 1 + 3
    assert len(connected_components(join)) == 2


def test_generalized_join_arity():
    with pytest.raises(ArityMismatch):
        generalized_join(star_graph(3), [complete_graph(1)])


def test_join_of_cliques_equals_super_graph_blockwise():
    rng = random.Random(23)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(2, 9))
        p = _random_partition(rng, g.n)
        sup = super_graph(g, p)
        join = generalized_join(
            compressed_graph(g, p), [complete_graph(s) for s in p.sizes]
        )
        perm = [v for block in p.blocks for v in block]
        assert sup.induced_subgraph(perm) == join


def test_connectivity():
    assert is_connected(complete_graph(1))
    assert not is_connected(SimpleGraph(2))
    join = generalized_join(
        star_graph(3), [SimpleGraph(2), complete_graph(2), SimpleGraph(1)]
    )
    assert is_connected(join)
    with pytest.raises(InvalidParameter):
        is_connected(SimpleGraph(0))


def test_connectivity_of_compressed_graph_random():
    rng = random.Random(5)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(2, 9))
        p = _random_partition(rng, g.n)
        comp = compressed_graph(g, p)
        if is_connected(g):
            assert is_connected(comp)
        if is_connected(comp) and all(
            is_connected(g.induced_subgraph(b)) for b in p.blocks
        ):
            assert is_connected(g)


def test_spanning_subgraph():
    g = complete_graph(3)
    assert is_spanning_subgraph(g, g)
    path = SimpleGraph(3, [(0, 1), (1, 2)])
    assert is_spanning_subgraph(path, g)
    assert not is_spanning_subgraph(g, path)
    with pytest.raises(SizeMismatch):
        is_spanning_subgraph(g, complete_graph(4))


def test_conjugacy_super_spans_order_super():
    for grp in (dihedral(4), dihedral(6), generalized_quaternion(3)):
        base = commuting_graph(grp)
        dc = super_graph(base, conjugacy_partition(grp))
        do = super_graph(base, order_partition(grp))
        assert is_spanning_subgraph(dc, do)


def test_twin_form_complete_graph():
    form = twin_canonical_form(complete_graph(5))
    assert form.sizes == (5,)
    assert form.edges == ()
    assert form.describe() == "K_5"


def test_twin_form_q8_conjugacy_super():
    q8 = generalized_quaternion(2)
    built = super_graph(commuting_graph(q8), conjugacy_partition(q8))
    explicit = generalized_join(star_graph(4), [complete_graph(2)] * 4)
    assert twin_canonical_form(built) == twin_canonical_form(explicit)
    assert twin_canonical_form(built).describe() == "K_{1,3}[K_2, K_2, K_2, K_2]"


def test_twin_form_d12_q12_cross_family():
    d12 = dihedral(6)
    q12 = generalized_quaternion(3)
    f1 = twin_canonical_form(super_graph(commuting_graph(d12), conjugacy_partition(d12)))
    f2 = twin_canonical_form(super_graph(commuting_graph(q12), conjugacy_partition(q12)))
    assert f1 == f2
    # the common form: dominant pair joined to two separate cliques
    assert f1.describe() == "K_{1,2}[K_2, K_4, K_6]"


def test_twin_form_distinguishes_different_joins():
    a = generalized_join(star_graph(3), [complete_graph(s) for s in (1, 2, 3)])
    b = generalized_join(star_graph(3), [complete_graph(s) for s in (2, 2, 2)])
    assert twin_canonical_form(a) != twin_canonical_form(b)


def test_twin_form_invariant_under_relabeling():
    rng = random.Random(17)
    for _ in range(25):
        k = rng.randint(1, 4)
        template = _random_graph(rng, k, 0.5)
        sizes = [rng.randint(1, 3) for _ in range(k)]
        join = generalized_join(template, [complete_graph(s) for s in sizes])
        perm = list(range(join.n))
        rng.shuffle(perm)
        shuffled = join.induced_subgraph(perm)
        assert twin_canonical_form(join) == twin_canonical_form(shuffled)


def test_json_round_trip_and_dot():
    g = SimpleGraph(3, [(0, 2), (0, 1)], labels=["e", "a", "b"])
    assert g.to_json_dict() == {
        "n": 3,
        "edges": [[0, 1], [0, 2]],
        "labels": ["e", "a", "b"],
    }
    assert SimpleGraph.from_json(g.to_json()) == g
    dot = g.to_dot()
    assert dot == (
        "graph G {\n"
        '  0 [label="e"];\n'
        '  1 [label="a"];\n'
        '  2 [label="b"];\n'
        "  0 -- 1;\n"
        "  0 -- 2;\n"
        "}\n"
    )


def test_adjacency_and_laplacian_matrices():
    g = star_graph(4)
    a = g.adjacency_matrix()
    lap = g.laplacian_matrix()
    assert a.sum() == 2 * g.edge_count
    assert np.array_equal(lap, np.diag([3, 1, 1, 1]) - a)
    assert lap.sum() == 0
