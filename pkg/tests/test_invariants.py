import pytest

from graphhom.invariants import (
    InvariantParams,
    chromatic_count,
    closed_form,
    eval_del_con,
    g_polynomials,
    specialization,
    yamada_state_sum,
)
from graphhom.laurent import ONE, X, Y, ZERO, BivariateLaurent, evaluate
from graphhom.multigraph import (
    Multigraph,
    bigon,
    bouquet_graph,
    build,
    cycle_graph,
    multiedge_graph,
    tree_graph,
    triangle,
)

P = BivariateLaurent

ROWS = {
    "tutte": specialization("tutte"),
    "chromatic": specialization("chromatic"),
    "flow": specialization("flow"),
    "yamada": specialization("yamada"),
    "negami": specialization("negami"),
}

FAMILY = {
    "tree": tree_graph,
    "bouquet": bouquet_graph,
    "multiedge": multiedge_graph,
    "cycle": cycle_graph,
}


def wedge(H, K):
    """Join H and K by identifying vertex 0 of both."""
    offset = H.vertex_count - 1

    def remap(v):
        return 0 if v == 0 else v + offset

    edges = H.edges + tuple((remap(u), remap(v)) for u, v in K.edges)
    return Multigraph(H.vertex_count + K.vertex_count - 1, edges)


def test_state_sum_examples():
    assert yamada_state_sum(build(0, [])) == ONE
    assert yamada_state_sum(bigon()) == X * Y - 1
    assert yamada_state_sum(tree_graph(1)) == ZERO
    assert yamada_state_sum(bouquet_graph(1)) == X * Y - 1
    assert yamada_state_sum(build(1, [])) == X


def test_state_sum_disjoint_union_multiplies():
    # two disjoint loops on separate vertices
    G = build(2, [(0, 0), (1, 1)])
    assert yamada_state_sum(G) == (X * Y - 1) ** 2


def test_g_polynomials_examples():
    g_tilde, g = g_polynomials(bigon())
    assert g_tilde == P({(3, 1): 1, (2, 0): -1})
    assert g == P(
        {(1, 0): 1, (2, 0): 2, (3, 0): 1, (0, 1): 1, (1, 1): 3, (2, 1): 3, (3, 1): 1}
    )
    assert g_polynomials(build(0, [])) == (ONE, ONE)
    assert g_polynomials(build(1, [])) == (X, P({(0, 0): 1, (1, 0): 1}))


def test_g_tilde_has_nonnegative_exponents(corpus):
    for G in corpus[::7]:
        assert not g_polynomials(G)[0].has_negative_exponents()


def test_eval_del_con_base_cases():
    yam = ROWS["yamada"]
    assert eval_del_con(tree_graph(1), yam) == ZERO
    assert eval_del_con(bouquet_graph(1), yam) == X * Y - 1
    assert eval_del_con(bigon(), ROWS["tutte"]) == X + Y
    assert eval_del_con(build(1, []), yam) == X
    assert eval_del_con(build(0, []), yam) == ONE


def test_eval_del_con_matches_state_sum_on_samples():
    yam = ROWS["yamada"]
    for G in (bigon(), triangle(), bouquet_graph(3), multiedge_graph(3), tree_graph(3)):
        assert eval_del_con(G, yam) == yamada_state_sum(G)


def test_chromatic_row_known_values():
    chrom = ROWS["chromatic"]
    assert eval_del_con(build(1, []), chrom) == X
    assert eval_del_con(tree_graph(1), chrom) == X * X - X
    assert eval_del_con(triangle(), chrom) == P({(3, 0): 1, (2, 0): -3, (1, 0): 2})
    assert eval_del_con(bouquet_graph(1), chrom) == ZERO


def test_flow_row_known_values():
    flow = ROWS["flow"]
    assert eval_del_con(triangle(), flow) == X - 1
    assert eval_del_con(tree_graph(2), flow) == ZERO


def test_closed_form_examples():
    assert closed_form("tree", 3, ROWS["tutte"]) == P({(3, 0): 1})
    assert closed_form("multiedge", 2, ROWS["yamada"]) == X * Y - 1
    assert closed_form("multiedge", 2, ROWS["yamada"]) == yamada_state_sum(bigon())
    assert closed_form("cycle", 3, ROWS["chromatic"]) == P({(3, 0): 1, (2, 0): -3, (1, 0): 2})
    with pytest.raises(ValueError):
        closed_form("tree", 0, ROWS["tutte"])
    with pytest.raises(ValueError):
        closed_form("star", 2, ROWS["tutte"])


def test_closed_form_n1_collapses_to_base_cases():
    for row in ROWS.values():
        assert closed_form("tree", 1, row) == row.d
        assert closed_form("bouquet", 1, row) == row.e
        assert closed_form("multiedge", 1, row) == row.d
        assert closed_form("cycle", 1, row) == row.e


@pytest.mark.parametrize("kind", sorted(FAMILY))
@pytest.mark.parametrize("name", sorted(ROWS))
def test_closed_form_matches_recursion(kind, name):
    for n in range(1, 5):
        G = FAMILY[kind](n)
        assert closed_form(kind, n, ROWS[name]) == eval_del_con(G, ROWS[name])


def test_specialization_rows():
    yam = ROWS["yamada"]
    assert (yam.a, yam.b, yam.c, yam.d, yam.e) == (
        ONE,
        -X.inverse(),
        X.inverse(),
        ZERO,
        X * Y - 1,
    )
    tut = ROWS["tutte"]
    assert (tut.a, tut.b, tut.c, tut.d, tut.e) == (ONE, ONE, ONE, X, Y)
    flow = ROWS["flow"]
    assert (flow.a, flow.b, flow.c, flow.d, flow.e) == (ONE, P.from_int(-1), ONE, ZERO, X - 1)
    chrom = ROWS["chromatic"]
    assert (chrom.a, chrom.b, chrom.c, chrom.d, chrom.e) == (
        P.from_int(-1),
        ONE,
        X.inverse(),
        X * X - X,
        ZERO,
    )
    neg = ROWS["negami"]
    assert (neg.a, neg.b, neg.c, neg.d, neg.e) == (X, Y, ONE, X + Y, X + Y)
    neg_minus = specialization("negami", negami_t=-1)
    assert (neg_minus.c, neg_minus.d, neg_minus.e) == (P.from_int(-1), Y - X, -X - Y)


def test_specialization_errors():
    with pytest.raises(ValueError):
        specialization("jones")
    with pytest.raises(ValueError):
        specialization("negami", negami_t=2)
    with pytest.raises(ValueError):
        specialization("negami", negami_t=0)


def test_invariant_params_requires_unit_c():
    with pytest.raises(ValueError):
        InvariantParams(ONE, ONE, X + 1, X, Y)
    with pytest.raises(ValueError):
        InvariantParams(ONE, ONE, 2 * X, X, Y)


def test_chromatic_count_examples():
    assert chromatic_count(triangle(), 3) == 6
    assert chromatic_count(tree_graph(1), 2) == 2
    assert chromatic_count(bouquet_graph(1), 5) == 0
    assert chromatic_count(build(0, []), 4) == 1
    assert chromatic_count(build(2, []), 3) == 9


def test_chromatic_count_limits():
    with pytest.raises(ValueError):
        chromatic_count(triangle(), 9)
    with pytest.raises(ValueError):
        chromatic_count(build(9, []), 2)
    with pytest.raises(ValueError):
        chromatic_count(triangle(), -1)


def test_chromatic_row_matches_brute_force_on_samples():
    chrom = ROWS["chromatic"]
    for G in (triangle(), bigon(), tree_graph(3), build(3, [(0, 1), (0, 1), (1, 2)])):
        poly = eval_del_con(G, chrom)
        for lam in range(6):
            assert evaluate(poly, lam, 0) == chromatic_count(G, lam)


@pytest.mark.parametrize("name", sorted(ROWS))
def test_wedge_multiplicativity(name):
    row = ROWS[name]
    pairs = [
        (tree_graph(1), tree_graph(1)),
        (bigon(), bouquet_graph(1)),
        (triangle(), bigon()),
        (tree_graph(2), bouquet_graph(2)),
    ]
    for H, K in pairs:
        assert eval_del_con(wedge(H, K), row) == row.c * eval_del_con(H, row) * eval_del_con(
            K, row
        )


def test_deletion_contraction_axiom_for_state_sum():
    from graphhom.multigraph import classify_edge, reduce

    for G in (bigon(), triangle(), multiedge_graph(3)):
        h = yamada_state_sum(G)
        for e in range(G.edge_count):
            if classify_edge(G, e) != "ordinary":
                continue
            contracted = yamada_state_sum(reduce(G, e, "contract"))
            deleted = yamada_state_sum(reduce(G, e, "delete"))
            assert h == contracted - X.inverse() * deleted
