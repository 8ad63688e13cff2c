"""Normal quotients of coset graphs.

Two routes are provided.  In graph mode the N-orbits are computed on a
materialized graph and the quotient is classified directly.  In algebraic
mode only the double cosets SgS and Sg^-1S are inspected: their images in
G/N decide whether the quotient is an oriented or an unoriented cycle and
how long it is, without building any graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import perms
from .coset import OrientedGraph, canonical, double_coset
from .elements import PermElement, small_group_closure
from .errors import BasicsViolation, NeitherPattern, OG4Error
from .perms import OrbitPartition, PermGroup

K1, K2, OG4 = "K1", "K2", "OG4"
ORIENTED, UNORIENTED = "OrientedCycle", "UnorientedCycle"


@dataclass
class NormalSubgroupSpec:
    """A normal subgroup given by generators.

    ``closure_mode`` is ``"as-given"`` (the generators already span a normal
    subgroup, which is checked) or ``"normal-closure"``.  Seeds are group
    elements, or vertex permutations for graphs built without coset data.

    For algebraic mode, ``quotient_map`` sends an element of G to its image
    in a quotient G/N0 with N0 contained in this subgroup, and
    ``image_kernel`` lists images generating the subgroup modulo N0.
    """

    seed_generators: list
    closure_mode: str = "as-given"
    name: str = "N"
    quotient_map: Callable | None = None
    image_kernel: list = field(default_factory=list)

    def enumerate(self, G_gens: Sequence = (), cap: int = 10**6):
        """(generators, element set) of the subgroup; checks normality."""
        gens = list(self.seed_generators)
        if not gens:
            return [], None
        while True:
            elems = small_group_closure(gens, cap=cap)
            missing = [
                conj for h in G_gens for x in gens
                if (conj := h.inverse() * x * h) not in elems
            ]
            if not missing:
                return gens, elems
            if self.closure_mode != "normal-closure":
                raise OG4Error(f"{self.name} is not normalized by the given generators of G")
            gens.append(missing[0])


@dataclass
class QuotientReport:
    blocks: OrbitPartition
    quotient_edges: list
    quotient_arcs: list
    classification: str
    r: int | None
    oriented: bool | None
    kernel_order: int | None
    semiregular: bool
    stabilizer_order: int
    normal_order: int
    block_actions: list = field(repr=False, default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def is_cycle(self) -> bool:
        return self.classification in (ORIENTED, UNORIENTED)

    def to_json(self) -> dict:
        return {
            "blocks": [[v + 1 for v in b] for b in self.blocks.blocks],
            "classification": self.classification,
            "r": self.r,
            "oriented": self.oriented,
            "kernel_order": self.kernel_order,
            "semiregular": self.semiregular,
            "stabilizer_order": self.stabilizer_order,
            "checks": self.checks,
        }


def _union_find_blocks(n: int, seed_block: Sequence[int], actions: Sequence[Sequence[int]]) -> OrbitPartition:
    """Finest partition invariant under ``actions`` with ``seed_block`` inside one part."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []
    first = seed_block[0]
    for v in seed_block[1:]:
        pending.append((first, v))
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for h in actions:
            pending.append((h[x], h[y]))
    groups: dict[int, list] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    blocks = sorted((tuple(b) for b in groups.values()), key=lambda b: b[0])
    return OrbitPartition(tuple(blocks), {v: i for i, b in enumerate(blocks) for v in b})


def element_action(graph: OrientedGraph, x) -> tuple:
    """The permutation of vertices induced by right multiplication by ``x``."""
    return tuple(graph.coset_index[canonical(rep * x, graph.S_elements)[0]] for rep in graph.representatives)


def _base_orbit(graph: OrientedGraph, gens: Sequence) -> list:
    seen = {0}
    queue = [0]
    for v in queue:
        rep = graph.representatives[v]
        for x in gens:
            w = graph.coset_index[canonical(rep * x, graph.S_elements)[0]]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def quotient_graph(graph: OrientedGraph, N: NormalSubgroupSpec) -> QuotientReport:
    n = graph.vertex_count
    actions = graph.generator_actions
    seeds = N.seed_generators
    checks = []
    if seeds and isinstance(seeds[0], tuple):
        vertex_perms = [tuple(s) for s in seeds]
        G = PermGroup(actions, degree=n)
        if N.closure_mode == "normal-closure":
            NG = perms.normal_closure(G, vertex_perms)
        else:
            NG = PermGroup(vertex_perms, degree=n)
            if not NG.is_normalized_by(actions):
                raise OG4Error(f"{N.name} is not normal")
        normal_order = NG.order()
        base_block = perms.orbit([0], NG.generators).blocks[0]
    elif seeds:
        gens, elems = N.enumerate(graph.group_generators)
        normal_order = len(elems)
        base_block = _base_orbit(graph, gens)
    else:
        normal_order = 1
        base_block = (0,)
    blocks = _union_find_blocks(n, list(base_block), actions)
    sizes = {len(b) for b in blocks.blocks}
    semiregular = sizes == {normal_order}
    checks.append({"name": "blocks_equal_size", "passed": len(sizes) == 1})

    bo = blocks.block_of
    q_arcs = sorted({(bo[u], bo[v]) for u, v in graph.arcs() if bo[u] != bo[v]})
    q_edges = sorted({(min(a, b), max(a, b)) for a, b in q_arcs})
    internal = sum(1 for u, v in graph.arcs() if bo[u] == bo[v])
    m = len(blocks)
    block_actions = [tuple(bo[h[b[0]]] for b in blocks.blocks) for h in actions]

    stab = graph.stabilizer_order()
    group_order = n * stab
    image_order = PermGroup(block_actions, degree=m).order() if m > 1 else 1
    kernel_order = group_order // image_order

    degree = Counter()
    for a, b in q_edges:
        degree[a] += 1
        degree[b] += 1
    valencies = {degree[i] for i in range(m)}
    r = None
    oriented = None
    if m == 1:
        cls = K1
    elif m == 2:
        cls = K2
    elif valencies == {2} and _connected(m, q_edges):
        r = m
        out_counts = Counter(a for a, _ in q_arcs)
        by_arcs = all(out_counts[i] == 1 for i in range(m))
        if image_order == r:
            oriented = True
        elif image_order == 2 * r:
            oriented = False
        else:
            raise OG4Error(f"group on a {r}-cycle quotient has order {image_order}")
        checks.append({"name": "arc_direction_agrees", "passed": by_arcs == oriented})
        cls = ORIENTED if oriented else UNORIENTED
    elif valencies == set(graph.valency()) and internal == 0:
        cls = OG4
    else:
        raise OG4Error(f"quotient with valencies {sorted(valencies)} fits no known class")
    checks.append({"name": "valency_divides_4", "passed": all(4 % v == 0 for v in valencies if v)})
    return QuotientReport(
        blocks, q_edges, q_arcs, cls, r, oriented, kernel_order, semiregular, stab,
        normal_order, block_actions, checks,
    )


def _connected(m, edges) -> bool:
    adj = {i: [] for i in range(m)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == m


def check_quotient_basics(report: QuotientReport, graph: OrientedGraph, extra_stabilizer_actions: Sequence = ()) -> dict:
    """Assert the structural consequences of a cycle quotient.

    Unoriented: N is semiregular and the vertex stabilizer has order 2.
    Oriented: the vertex stabilizer fixes every N-orbit.  Extra vertex
    permutations may be passed as additional stabilizer elements.
    """
    if not report.is_cycle:
        raise ValueError("the quotient is not a cycle")
    if report.oriented is False:
        if not report.semiregular:
            raise BasicsViolation("N is not semiregular", counterexample=report.blocks.blocks[0])
        if report.stabilizer_order != 2:
            raise BasicsViolation(f"|G_alpha| = {report.stabilizer_order}, expected 2")
        return {"semiregular": True, "stabilizer_order": 2}
    actions = [element_action(graph, s) for s in graph.stabilizer_generators]
    actions += [tuple(x) for x in extra_stabilizer_actions]
    bo = report.blocks.block_of
    for h in actions:
        if h[0] != 0:
            raise BasicsViolation("element does not fix the base vertex", counterexample=h)
        for b in report.blocks.blocks:
            if bo[h[b[0]]] != bo[b[0]]:
                raise BasicsViolation("stabilizer element moves an N-orbit", counterexample=h)
    return {"stabilizer_fixes_blocks": True, "stabilizer_order": report.stabilizer_order}


# -- algebraic mode --------------------------------------------------------------


@dataclass
class CycleCertificate:
    classification: str
    r: int
    sgs_split: list
    sginvs_split: list

    @property
    def oriented(self) -> bool:
        return self.classification == ORIENTED

    def to_json(self) -> dict:
        return {
            "classification": self.classification,
            "r": self.r,
            "oriented": self.oriented,
            "SgS_split": self.sgs_split,
            "Sg^-1S_split": self.sginvs_split,
        }


def algebraic_cycle_certificate(G_spec, S_gens: Sequence, g, N_spec: NormalSubgroupSpec) -> CycleCertificate:
    """Classify the quotient by the positions of SgS and Sg^-1S among SN-cosets.

    Oriented when each double coset lies in a single SN-coset (two distinct
    ones); unoriented when both split evenly over the same two SN-cosets.
    """
    q = N_spec.quotient_map
    if q is None:
        raise ValueError("algebraic mode needs a quotient map")
    e = g.identity()
    S = small_group_closure(list(S_gens) or [e])
    G_bar = small_group_closure([q(x) for x in G_spec.generators])
    H_bar = small_group_closure([q(s) for s in S] + list(N_spec.image_kernel))
    if not H_bar <= G_bar:
        raise ValueError("image of SN is not inside the image of G")

    def coset(x):
        xb = q(x)
        return min((h * xb).key() for h in H_bar)

    base = coset(e)
    forward = Counter(coset(x) for x in double_coset(S, g))
    backward = Counter(coset(x) for x in double_coset(S, g.inverse()))
    r = len(G_bar) // len(H_bar)
    sizes = (sorted(forward.values()), sorted(backward.values()))
    if base in forward or base in backward:
        raise NeitherPattern("SgS meets SN itself")
    if len(forward) == 1 and len(backward) == 1 and forward.keys() != backward.keys():
        return CycleCertificate(ORIENTED, r, sizes[0], sizes[1])
    if (
        len(forward) == 2
        and forward.keys() == backward.keys()
        and len(set(forward.values())) == 1
        and len(set(backward.values())) == 1
    ):
        return CycleCertificate(UNORIENTED, r, sizes[0], sizes[1])
    raise NeitherPattern(f"SgS split {sizes[0]}, Sg^-1S split {sizes[1]}")


def divisor_quotient_spec(inst, d: int) -> NormalSubgroupSpec:
    """N extended by the order-d subgroup of the rotation part.

    The rotation σ has order r, so ⟨σ^(r/d)⟩ has order d and the quotient
    cycle has length r/d.
    """
    r = inst.r
    if r % d:
        raise ValueError(f"{d} does not divide {r}")
    rot = PermElement(perms.power(inst.sigma, r // d))
    return NormalSubgroupSpec([], "as-given", f"M_{d}", quotient_map=inst.top_image, image_kernel=[rot])


def count_unoriented_cyclic_quotients(inst) -> list:
    """(d, cycle length, certificate) for each proper divisor d of r, d != r/2."""
    r = inst.r
    out = []
    for d in range(1, r):
        if r % d or 2 * d == r:
            continue
        spec = divisor_quotient_spec(inst, d)
        cert = algebraic_cycle_certificate(inst.group_spec(), inst.S_gens, inst.g, spec)
        if cert.classification != UNORIENTED or cert.r != r // d:
            raise OG4Error(f"M_{d} gave {cert.classification}({cert.r}), expected an unoriented {r // d}-cycle")
        out.append((d, r // d, cert))
    return out


# -- socle bounds ------------------------------------------------------------------


@dataclass(frozen=True)
class SocleParameters:
    T: str
    k: int
    r: int
    case: str
    bound: int
    equality: bool

    @property
    def within_bound(self) -> bool:
        return self.k <= self.bound

    def to_json(self) -> dict:
        return {"T": self.T, "k": self.k, "r": self.r, "case": self.case,
                "bound": self.bound, "equality": self.equality}


def socle_bound(r: int, oriented: bool, abelian: bool) -> tuple[str, int]:
    if oriented:
        return ("1(b).ii", r) if abelian else ("1(b).i", r * 2**r)
    return ("2.ii", r - 1) if abelian else ("2.i", 2 * r)


def socle_parameters(T: str, k: int, r: int, oriented: bool, abelian: bool) -> SocleParameters:
    case, bound = socle_bound(r, oriented, abelian)
    return SocleParameters(T, k, r, case, bound, k == bound)
