import pytest

from og4 import families
from og4.errors import BasicsViolation, NeitherPattern
from og4.perms import PermGroup
from og4.quotients import (
    OG4,
    ORIENTED,
    UNORIENTED,
    NormalSubgroupSpec,
    algebraic_cycle_certificate,
    check_quotient_basics,
    count_unoriented_cyclic_quotients,
    quotient_graph,
    socle_bound,
    socle_parameters,
)


@pytest.fixture(scope="module")
def un_report(aff_un_3_5):
    return quotient_graph(aff_un_3_5.graph, aff_un_3_5.instance.normal_spec())


@pytest.fixture(scope="module")
def or_report(aff_or_5_3):
    return quotient_graph(aff_or_5_3.graph, aff_or_5_3.instance.normal_spec())


def test_trivial_normal_subgroup_gives_graph_itself(aff_un_3_5):
    rep = quotient_graph(aff_un_3_5.graph, NormalSubgroupSpec([]))
    assert rep.classification == OG4
    assert len(rep.blocks) == 405


def test_unoriented_affine_quotient(un_report):
    assert (un_report.classification, un_report.r) == (UNORIENTED, 5)
    assert un_report.semiregular
    assert un_report.normal_order == 81
    assert un_report.kernel_order == 81
    assert PermGroup(un_report.block_actions).order() == 10


def test_oriented_affine_quotient(or_report):
    assert (or_report.classification, or_report.r) == (ORIENTED, 3)
    assert PermGroup(or_report.block_actions).order() == 3
    # oriented: the kernel is N times the vertex stabilizer
    assert or_report.kernel_order == or_report.normal_order * or_report.stabilizer_order


@pytest.mark.parametrize("rep_name", ["un_report", "or_report"])
def test_cycle_quotient_is_connected_two_regular(rep_name, request):
    rep = request.getfixturevalue(rep_name)
    deg = {}
    for a, b in rep.quotient_edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    assert set(deg.values()) == {2}
    assert len(rep.quotient_edges) == rep.r
    assert all(c["passed"] for c in rep.checks)


def test_vertex_perm_seeds_match_element_seeds(aff_un_3_5, un_report):
    from og4.quotients import element_action

    G = aff_un_3_5.graph
    seeds = [element_action(G, x) for x in aff_un_3_5.N_gens]
    rep = quotient_graph(G, NormalSubgroupSpec(seeds))
    assert rep.blocks.blocks == un_report.blocks.blocks
    assert rep.classification == UNORIENTED


def test_basics_unoriented(un_report, aff_un_3_5):
    out = check_quotient_basics(un_report, aff_un_3_5.graph)
    assert out == {"semiregular": True, "stabilizer_order": 2}


def test_basics_oriented(or_report, aff_or_5_3):
    out = check_quotient_basics(or_report, aff_or_5_3.graph)
    assert out["stabilizer_fixes_blocks"]


def test_basics_negative_control(or_report, aff_or_5_3):
    n = aff_or_5_3.graph.vertex_count
    bo = or_report.blocks.block_of
    u = next(v for v in range(1, n) if bo[v] == 1)
    w = next(v for v in range(1, n) if bo[v] == 2)
    fake = list(range(n))
    fake[u], fake[w] = w, u
    with pytest.raises(BasicsViolation):
        check_quotient_basics(or_report, aff_or_5_3.graph, extra_stabilizer_actions=[fake])


# -- algebraic certificates --------------------------------------------------------


def test_algebraic_unoriented_wreath(nonab_un_3):
    q = nonab_un_3.quotient["algebraic"]
    assert q["classification"] == UNORIENTED and q["r"] == 3
    assert q["SgS_split"] == [2, 2] and q["Sg^-1S_split"] == [2, 2]


def test_algebraic_oriented_wreath(nonab_or_24):
    q = nonab_or_24.quotient["algebraic"]
    assert q["classification"] == ORIENTED and q["r"] == 3


def test_graph_and_algebraic_modes_agree(aff_un_3_5, aff_or_5_3):
    assert aff_un_3_5.checks["modes_agree"]
    assert aff_or_5_3.checks["modes_agree"]


def test_neither_pattern_when_g_in_SN(aff_un_3_5):
    inst = aff_un_3_5.instance
    with pytest.raises(NeitherPattern):
        algebraic_cycle_certificate(inst.group_spec(), inst.S_gens, inst.n, inst.normal_spec())


@pytest.mark.parametrize("r,lengths", [(3, [3]), (9, [9, 3]), (27, [27, 9, 3])])
def test_divisor_quotients(A5, r, lengths):
    inst = families.construct_nonabelian_unoriented(r, A5).instance
    rows = count_unoriented_cyclic_quotients(inst)
    assert [length for _, length, _ in rows] == lengths
    assert all(c.classification == UNORIENTED for _, _, c in rows)


# -- socle bounds ------------------------------------------------------------------


@pytest.mark.parametrize(
    "r,oriented,abelian,case,bound",
    [(5, False, True, "2.ii", 4), (3, True, True, "1(b).ii", 3), (3, False, False, "2.i", 6), (3, True, False, "1(b).i", 24)],
)
def test_socle_bound_table(r, oriented, abelian, case, bound):
    assert socle_bound(r, oriented, abelian) == (case, bound)


def test_socle_parameters_of_constructions(aff_un_3_5, nonab_un_3, nonab_or_24):
    for c, (k, r, case) in [(aff_un_3_5, (4, 5, "2.ii")), (nonab_un_3, (6, 3, "2.i")), (nonab_or_24, (24, 3, "1(b).i"))]:
        s = c.socle
        assert (s.k, s.r, s.case) == (k, r, case)
        assert s.equality and s.within_bound


def test_socle_bound_violation_is_reported():
    s = socle_parameters("Z3", 9, 5, False, True)
    assert not s.within_bound and not s.equality
