from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from brute import edge_set, max_clique, max_stable
from kfold.families import (
    Family,
    FamilyParams,
    GenericGraph,
    InvalidParamsError,
    adjacent,
    all_params,
    alpha,
    antiweb,
    delete_vertex,
    delete_vertex_with_map,
    is_web_subgraph,
    lex_product_with_clique,
    materialize,
    omega,
    stable_seq,
    web,
)

C5 = materialize(web(5, 2))


@st.composite
def family_params(draw, n_max=40):
    n = draw(st.integers(2, n_max))
    p = draw(st.integers(1, n // 2))
    fam = draw(st.sampled_from(list(Family)))
    return FamilyParams(fam, n, p)


def test_adjacency_examples():
    assert adjacent(web(8, 3), 0, 3)
    assert not adjacent(web(8, 3), 0, 1)
    assert adjacent(antiweb(8, 3), 0, 1)
    with pytest.raises(IndexError):
        adjacent(web(8, 3), 0, 8)


@pytest.mark.parametrize("n,p", [(3, 2), (5, 0), (1, 1)])
def test_invalid_params_rejected(n, p):
    with pytest.raises(InvalidParamsError):
        web(n, p)


def test_alpha_omega_examples():
    assert alpha(antiweb(10, 3)) == 3
    assert alpha(web(8, 3)) == 3
    assert omega(web(8, 3)) == 2


def test_alpha_omega_match_brute_force():
    for params in all_params(12):
        edges = edge_set(params.n, params.p, params.family.value)
        assert max_stable(params.n, edges) == alpha(params), params
        assert max_clique(params.n, edges) == omega(params), params


def test_materialize_matches_definition():
    for params in all_params(14):
        assert set(materialize(params).edges()) == edge_set(params.n, params.p, params.family.value)


def test_stable_seq_examples():
    assert stable_seq(web(8, 3), 0) == (0, 1, 2)
    assert stable_seq(antiweb(10, 3), 0) == (0, 4, 7)
    assert stable_seq(antiweb(10, 3), 3) == (3, 7, 0)


def test_stable_seqs_are_maximum_stable_sets():
    for params in all_params(40):
        g = materialize(params)
        for i in range(params.n):
            seq = stable_seq(params, i)
            assert len(set(seq)) == len(seq) == alpha(params)
            assert g.is_stable(seq)


def test_antiweb_seq_circular_distance():
    for params in all_params(40, [Family.ANTIWEB]):
        n, p = params.n, params.p
        for i in range(n):
            for a, b in combinations(stable_seq(params, i), 2):
                assert p <= abs(a - b) <= n - p


@pytest.mark.parametrize(
    "inner,outer,expected",
    [
        ((5, 2), (5, 2), True),
        ((5, 1), (10, 2), True),
        # 8*2 = 16 < 7*3 = 21; W(7,2) has a triangle, W(8,3) does not
        ((7, 2), (8, 3), False),
    ],
)
def test_trotter_examples(inner, outer, expected):
    assert is_web_subgraph(inner, outer) is expected


def test_trotter_is_about_induced_copies():
    assert not is_web_subgraph((4, 2), (4, 1))
    assert materialize(web(4, 2)).is_subgraph_of(materialize(web(4, 1)))


def _embeds(inner, outer):
    """Brute-force search for an induced copy of ``inner`` inside ``outer``."""
    gi, go = materialize(inner), materialize(outer)
    order = sorted(range(inner.n), key=lambda v: -bin(gi.neighbors[v]).count("1"))
    image = {}

    def extend(idx):
        if idx == len(order):
            return True
        v = order[idx]
        used = set(image.values())
        for w in range(outer.n):
            if w in used:
                continue
            if all(go.adjacent(w, image[u]) == gi.adjacent(v, u) for u in image):
                image[v] = w
                if extend(idx + 1):
                    return True
                del image[v]
        return False

    return extend(0)


def test_trotter_matches_induced_embedding():
    for outer in all_params(9, [Family.WEB]):
        for inner in all_params(outer.n, [Family.WEB]):
            expected = _embeds(inner, outer)
            assert is_web_subgraph((inner.n, inner.p), (outer.n, outer.p)) == expected, (inner, outer)


def test_materialize_examples():
    assert C5.edge_count == 5
    assert all(bin(m).count("1") == 2 for m in C5.neighbors)
    for p in range(1, 8):
        g = materialize(web(2 * p, p))
        assert g.edge_count == p
        assert all(bin(m).count("1") == 1 for m in g.neighbors)
    assert materialize(antiweb(6, 1)).edge_count == 0


def test_delete_vertex_examples():
    p4 = delete_vertex(C5, 0)
    assert p4.vertex_count == 4 and p4.edge_count == 3
    e5 = delete_vertex(materialize(antiweb(6, 1)), 2)
    assert e5.vertex_count == 5 and e5.edge_count == 0
    g, mapping = delete_vertex_with_map(materialize(antiweb(8, 3)), 0)
    assert g.vertex_count == 7 and mapping == tuple(range(1, 8))
    assert g.is_subgraph_of(materialize(antiweb(7, 3)))
    with pytest.raises(IndexError):
        delete_vertex(C5, 5)


def test_deletion_preserves_alpha_omega():
    for params in all_params(12):
        if params.p == 1:
            continue
        edges = edge_set(params.n, params.p, params.family.value)
        for v in range(params.n):
            g = delete_vertex(materialize(params), v)
            e = set(g.edges())
            assert max_stable(g.vertex_count, e) == alpha(params)
            assert max_clique(g.vertex_count, e) == omega(params)


def test_lex_product_examples():
    assert lex_product_with_clique(C5, 1) == C5
    assert lex_product_with_clique(GenericGraph(1, (0,)), 3).edge_count == 3
    g = lex_product_with_clique(C5, 2)
    assert g.vertex_count == 10 and g.edge_count == 25


def test_lex_product_alpha():
    for params in all_params(8):
        for k in (1, 2, 3):
            g = lex_product_with_clique(materialize(params), k)
            assert max_stable(g.vertex_count, set(g.edges())) == alpha(params)


@given(family_params())
def test_complementary_families(params):
    other = FamilyParams(Family.ANTIWEB if params.is_web else Family.WEB, params.n, params.p)
    assert materialize(params).complement() == materialize(other)


@given(family_params(n_max=20), st.data())
def test_adjacency_symmetric_irreflexive(params, data):
    i = data.draw(st.integers(0, params.n - 1))
    j = data.draw(st.integers(0, params.n - 1))
    assert adjacent(params, i, j) == adjacent(params, j, i)
    assert not adjacent(params, i, i)


def test_generic_graph_validation():
    with pytest.raises(ValueError):
        GenericGraph(2, (0b10, 0))
    with pytest.raises(ValueError):
        GenericGraph.from_edges(2, [(0, 0)])
