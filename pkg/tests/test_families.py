import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4 import families, perms
from og4.errors import CapExceeded, PreconditionFailed
from og4.families import Graph


def to_nx(G: Graph):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


# -- C_r(v, s) and the lexicographic product ----------------------------------------


def test_cr_vs_smallest():
    G = families.build_cr_vs(3, 2, 1)
    assert G.vertex_count == 6 and G.out_valency() == {2} and G.is_connected()


def test_cr_vs_arcs():
    G = families.build_cr_vs(4, 2, 2)
    assert G.vertex_count == 16 and G.out_valency() == {2}
    for u, w in G.arcs():
        (i, x), (j, y) = G.labels[u], G.labels[w]
        assert j == (i + 1) % 4 and y[1:] == x[:-1]


def test_cr_vs_cap():
    with pytest.raises(CapExceeded):
        families.build_cr_vs(3, 10, 6)


@pytest.mark.parametrize("args", [(2, 2, 1), (3, 1, 1), (3, 2, 0)])
def test_cr_vs_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        families.build_cr_vs(*args)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_underlying_cr_2_1_is_lex(r):
    und = families.underlying_graph(families.build_cr_vs(r, 2, 1))
    lex = families.build_lex_c_r_2k1(r)
    phi = families.find_isomorphism(und, lex)
    assert phi is not None
    assert {tuple(sorted((phi[u], phi[v]))) for u, v in und.edges()} == set(lex.edges())
    assert nx.is_isomorphic(to_nx(und), to_nx(lex))


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 6), st.integers(1, 4))
def test_cr_2_s_underlying_is_4_valent_connected_transitive(r, s):
    G = families.build_cr_vs(r, 2, s)
    und = families.underlying_graph(G)
    assert und.valency() == {4} and und.is_connected()
    assert G.orientation_preserved()
    if s <= r:
        assert G.vertex_orbit_count() == 1


def test_lex_examples():
    g3, g4, g5 = (families.build_lex_c_r_2k1(r) for r in (3, 4, 5))
    assert g3.n == 6 and g3.valency() == {4}
    assert g4.n == 8 and g4.valency() == {4} and g4.is_bipartite()
    assert not g5.is_bipartite() and g5.girth() == 4
    assert nx.girth(to_nx(g5)) == 4


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10**6))
def test_isomorphism_agrees_with_networkx(n, seed):
    G1 = nx.gnp_random_graph(n, 0.4, seed=seed)
    G2 = nx.gnp_random_graph(n, 0.4, seed=seed + 1)
    a = Graph.from_edges(n, G1.edges())
    b = Graph.from_edges(n, G2.edges())
    relabel = list(range(n))[::-1]
    c = Graph.from_edges(n, [(relabel[u], relabel[v]) for u, v in G1.edges()])
    assert families.is_isomorphic(a, b) == nx.is_isomorphic(G1, G2)
    assert families.is_isomorphic(a, c)


def test_isomorphism_size_limit():
    big = families.build_lex_c_r_2k1(101)
    with pytest.raises(CapExceeded):
        families.find_isomorphism(big, big)


# -- affine constructions ----------------------------------------------------------


def test_unoriented_affine_certificate(aff_un_3_5):
    c = aff_un_3_5
    assert c.valid
    assert all(c.conditions.values())
    assert c.checks["X_i_equals_minus_2_n_r_minus_i"] and c.checks["X_independent"]
    assert (c.socle.k, c.socle.r, c.quotient["classification"]) == (4, 5, "UnorientedCycle")


def test_oriented_affine_certificate(aff_or_5_3):
    c = aff_or_5_3
    assert c.valid
    assert c.checks["X_spans_N"] and c.checks["reduced_matrix_nonsingular"]
    assert c.quotient["graph"]["stabilizer_order"] == 8
    assert (c.socle.k, c.socle.r, c.quotient["classification"]) == (3, 3, "OrientedCycle")


def test_oriented_affine_3_4():
    c = families.construct_aff_oriented(3, 4)
    assert c.valid and c.socle.k == 4 and c.graph.vertex_count == 324


def test_algebraic_mode_matches_graph_mode(aff_un_3_5):
    alg = families.construct_aff_unoriented(3, 5, mode="algebraic")
    assert alg.mode == "algebraic" and alg.graph is None
    assert alg.conditions == aff_un_3_5.conditions
    assert alg.quotient["algebraic"] == aff_un_3_5.quotient["algebraic"]


@pytest.mark.parametrize(
    "args,hypothesis",
    [
        ((3, 13), "p is a primitive root modulo r"),
        ((7, 5), "p < r"),
        ((3, 9), "p and r are distinct odd primes"),
        ((2, 5), "p and r are distinct odd primes"),
        ((5, 5), "p and r are distinct odd primes"),
    ],
)
def test_unoriented_affine_preconditions(args, hypothesis):
    with pytest.raises(PreconditionFailed) as info:
        families.construct_aff_unoriented(*args)
    assert info.value.hypothesis == hypothesis


@pytest.mark.parametrize(
    "args,hypothesis",
    [((3, 5), "p does not divide r-2"), ((4, 3), "p is an odd prime"), ((2, 3), "p is an odd prime"), ((3, 2), "r > 2")],
)
def test_oriented_affine_preconditions(args, hypothesis):
    with pytest.raises(PreconditionFailed) as info:
        families.construct_aff_oriented(*args)
    assert info.value.hypothesis == hypothesis


def test_p_divides_r_minus_2_detail():
    with pytest.raises(PreconditionFailed) as info:
        families.construct_aff_oriented(3, 5)
    assert "p divides r-2" in info.value.detail


# -- wreath constructions ----------------------------------------------------------


@pytest.mark.parametrize("r", [3, 4, 9])
def test_unoriented_wreath(A5, r):
    c = families.construct_nonabelian_unoriented(r, A5)
    assert c.valid and c.socle.k == 2 * r and c.quotient["classification"] == "UnorientedCycle"


def test_unoriented_wreath_psl(PSL27):
    assert families.construct_nonabelian_unoriented(3, PSL27).valid


def test_unoriented_wreath_preconditions(A5):
    from og4.elements import SimpleGroupT

    # swapping a and b leaves |a| = 3
    swapped = SimpleGroupT("A5", A5.carrier, A5.b, A5.a, A5.aut_group)
    with pytest.raises(PreconditionFailed) as info:
        families.construct_nonabelian_unoriented(3, swapped)
    assert info.value.hypothesis == "|a| = 2"
    with pytest.raises(PreconditionFailed):
        families.construct_nonabelian_unoriented(2, A5)
    # b of order 5 with ab of order 3 passes; a of order 2 and b = ab-order clash fails
    a = A5.a
    b = next(
        x for x in A5.elements()
        if perms.order(x) == 5 and perms.order(perms.compose(a, x)) == 5
        and perms.PermGroup([a, x]).order() == 60
    )
    clash = SimpleGroupT("A5", A5.carrier, a, b, A5.aut_group)
    with pytest.raises(PreconditionFailed) as info:
        families.construct_nonabelian_unoriented(3, clash)
    assert info.value.hypothesis == "|ab| differs from |a| and |b|"


def test_oriented_wreath_24(nonab_or_24):
    c = nonab_or_24
    assert c.valid
    for key in ["phi1_matches_display", "phi2_matches_display", "phis_involutions", "phis_commute",
                "sigma_order_3", "sigma_cycles_phis", "phi0_g_is_phi1", "phi1_g_is_phi2", "table_rows_match"]:
        assert c.checks[key], key
    assert c.socle.k == 24 and c.quotient["classification"] == "OrientedCycle"


def test_oriented_wreath_24_psl(PSL27):
    assert families.construct_nonabelian_oriented_24(PSL27).valid


def test_oriented_wreath_needs_b_of_order_3(PSL27):
    from og4.elements import SimpleGroupT

    b7 = perms.compose(PSL27.a, PSL27.b)
    T = SimpleGroupT("PSL2(7)", PSL27.carrier, PSL27.a, b7, PSL27.aut_group)
    with pytest.raises(PreconditionFailed) as info:
        families.construct_nonabelian_oriented_24(T)
    assert info.value.hypothesis == "|b| = 3"


# -- certificates ------------------------------------------------------------------


@pytest.mark.parametrize("fixture", ["aff_un_3_5", "aff_or_5_3", "nonab_un_3", "nonab_or_24"])
def test_certificate_json_round_trip(fixture, request):
    c = request.getfixturevalue(fixture)
    data = json.loads(json.dumps(c.to_json()))
    assert data["valid"]
    gens = data["generators"]
    assert families.element_from_json(gens["g"]) == c.g
    assert [families.element_from_json(x) for x in gens["S"]] == list(c.S_gens)


@pytest.mark.parametrize("fixture", ["aff_un_3_5", "nonab_or_24"])
def test_certificates_are_reproducible(fixture, request, A5):
    c = request.getfixturevalue(fixture)
    again = (
        families.construct_aff_unoriented(3, 5) if fixture == "aff_un_3_5"
        else families.construct_nonabelian_oriented_24(A5)
    )
    assert again.to_json() == c.to_json()
