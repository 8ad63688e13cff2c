"""Graph families and the four group constructions.

``build_cr_vs`` and ``build_lex_c_r_2k1`` produce small explicit graphs.  The
``construct_*`` functions build a group G, a subgroup S and an element g,
check the four coset-graph conditions and classify the normal quotient by N,
returning a ``ConstructionCertificate``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from . import perms
from .coset import (
    GroupSpec,
    OrientedGraph,
    arc_orbit_count,
    build_coset_graph,
    oriented_s_arc_parameter,
    verify_core_free,
    verify_generates,
    verify_index_two,
    verify_not_reversing,
    vertex_cap,
)
from .elements import AffineElement, PermElement, SimpleGroupT, WreathElement
from .errors import CapExceeded, OG4Error, PreconditionFailed
from .fp import (
    antidiagonal,
    companion_matrix,
    cyclic_permutation_matrix,
    diagonal_sign,
    exhaustive_irreducibility,
    is_irreducible,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    rank,
    repunit_poly,
    vec_mat,
    EXHAUSTIVE_LIMIT,
)
from .quotients import (
    NormalSubgroupSpec,
    algebraic_cycle_certificate,
    check_quotient_basics,
    quotient_graph,
    socle_parameters,
)
from .strips import compute_X_elements, full_product_certificate, generation_witness

GRAPH_CAP = 10**6


# -- explicit graphs ---------------------------------------------------------------


@dataclass
class Graph:
    """A simple undirected graph as sorted adjacency tuples."""

    adj: tuple
    labels: tuple = ()

    @property
    def n(self) -> int:
        return len(self.adj)

    @classmethod
    def from_edges(cls, n: int, edges, labels=()):
        nb = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            nb[u].add(v)
            nb[v].add(u)
        return cls(tuple(tuple(sorted(x)) for x in nb), tuple(labels))

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def valency(self) -> set:
        return {len(x) for x in self.adj}

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_bipartite(self) -> bool:
        colour = [-1] * self.n
        for start in range(self.n):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return False
        return True

    def girth(self) -> float:
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            for u in queue:
                for w in self.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best


def build_cr_vs(r: int, v: int, s: int) -> OrientedGraph:
    """The digraph C_r(v, s) on Z_r × Z_v^s.

    (i, x) -> (i+1, (y, x_1, ..., x_{s-1})) for every y in Z_v.  Vertex
    (i, x) has index ``i * v**s + sum(x_k * v**(s-k))``.  The generator
    actions are the rotation i -> i+1 and, for each layer L, the map adding 1
    to every coordinate x_k with i - k + 1 = L (mod r).
    """
    if v < 2 or r < 3 or s < 1:
        raise ValueError("need v >= 2, r >= 3, s >= 1")
    count = r * v**s
    if count > GRAPH_CAP:
        raise CapExceeded(f"{count} vertices exceed {GRAPH_CAP}")
    tuples = list(product(range(v), repeat=s))
    pos = {x: k for k, x in enumerate(tuples)}
    block = len(tuples)

    def idx(i, x):
        return (i % r) * block + pos[x]

    labels = [(i, x) for i in range(r) for x in tuples]
    out = [[idx(i + 1, (y,) + x[:-1]) for y in range(v)] for i, x in labels]
    rotation = [idx(i + 1, x) for i, x in labels]
    actions = [rotation]
    for L in range(r):
        flip = []
        for i, x in labels:
            y = tuple((c + 1) % v if (i - k) % r == L else c for k, c in enumerate(x))
            flip.append(idx(i, y))
        actions.append(flip)
    graph = OrientedGraph.from_out_lists(out, actions)
    graph.representatives = []
    graph.labels = labels
    return graph


def underlying_graph(graph: OrientedGraph) -> Graph:
    """Forget orientations and merge each arc with its reverse."""
    return Graph.from_edges(graph.vertex_count, graph.arcs(), getattr(graph, "labels", ()))


def build_lex_c_r_2k1(r: int) -> Graph:
    """C_r[2.K_1]: vertices (i, a) with (i, a) ~ (i±1, b) for all a, b."""
    if r < 3:
        raise ValueError("r must be at least 3")
    labels = [(i, a) for i in range(r) for a in range(2)]
    edges = [(2 * i + a, 2 * ((i + 1) % r) + b) for i in range(r) for a in range(2) for b in range(2)]
    return Graph.from_edges(2 * r, edges, labels)


def find_isomorphism(G1: Graph, G2: Graph, limit: int = 200):
    """A vertex bijection carrying G1 onto G2, or None (backtracking search)."""
    if G1.n != G2.n or G1.n > limit:
        if G1.n > limit:
            raise CapExceeded(f"isomorphism search limited to {limit} vertices")
        return None
    if sorted(map(len, G1.adj)) != sorted(map(len, G2.adj)) or len(G1.edges()) != len(G2.edges()):
        return None
    n = G1.n
    adj2 = [set(x) for x in G2.adj]
    # visit G1 in BFS order so each new vertex has an already-mapped neighbour
    order = []
    seen = set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for u in queue:
            order.append(u)
            for w in G1.adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    mapping = {}
    used = set()

    def extend(k):
        if k == n:
            return True
        u = order[k]
        mapped_nbrs = [mapping[w] for w in G1.adj[u] if w in mapping]
        if mapped_nbrs:
            cands = set.intersection(*(adj2[x] for x in mapped_nbrs)) - used
        else:
            cands = set(range(n)) - used
        for c in sorted(cands):
            if len(G2.adj[c]) != len(G1.adj[u]):
                continue
            if any((mapping[w] in adj2[c]) != (w in G1.adj[u]) for w in mapping):
                continue
            mapping[u] = c
            used.add(c)
            if extend(k + 1):
                return True
            del mapping[u]
            used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    return find_isomorphism(G1, G2) is not None


# -- certificates --------------------------------------------------------------------


def element_to_json(x) -> dict:
    if isinstance(x, AffineElement):
        return {"kind": "affine", "p": x.p, "n": list(x.n), "M": [list(r) for r in x.M]}
    if isinstance(x, WreathElement):
        return {"kind": "wreath", "x": [[i + 1 for i in t] for t in x.x], "top": [i + 1 for i in x.top]}
    if isinstance(x, PermElement):
        return {"kind": "perm", "images": [i + 1 for i in x.perm]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def element_from_json(d: dict):
    kind = d["kind"]
    if kind == "affine":
        return AffineElement(d["p"], d["n"], d["M"])
    if kind == "wreath":
        return WreathElement([[i - 1 for i in t] for t in d["x"]], [i - 1 for i in d["top"]])
    if kind == "perm":
        return PermElement([i - 1 for i in d["images"]])
    raise ValueError(f"unknown element kind {kind!r}")


@dataclass
class ConstructionCertificate:
    family: str
    parameters: dict
    T: str
    G_gens: list
    S_gens: list
    N_gens: list
    g: object
    n: object
    named: dict
    conditions: dict
    generation_strategy: str
    quotient: dict
    socle: object
    checks: dict
    mode: str
    timings: dict = field(default_factory=dict)
    graph: OrientedGraph | None = field(default=None, repr=False)
    instance: object = field(default=None, repr=False)

    @property
    def valid(self) -> bool:
        return all(self.conditions.values()) and all(self.checks.values()) and self.socle.equality

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "parameters": self.parameters,
            "T": self.T,
            "mode": self.mode,
            "generators": {
                "G": [element_to_json(x) for x in self.G_gens],
                "S": [element_to_json(x) for x in self.S_gens],
                "N": [element_to_json(x) for x in self.N_gens],
                "g": element_to_json(self.g),
                "n": element_to_json(self.n),
            },
            "named": {k: element_to_json(v) for k, v in self.named.items()},
            "conditions": self.conditions,
            "generation_strategy": self.generation_strategy,
            "quotient": self.quotient,
            "socle": self.socle.to_json(),
            "checks": self.checks,
            "valid": self.valid,
        }


def _require(ok: bool, hypothesis: str, detail: str = ""):
    if not ok:
        raise PreconditionFailed(hypothesis, detail)


def _condition_outcomes(G_gens, S_gens, g, G_spec):
    core_free, _ = verify_core_free(G_gens, S_gens)
    gen_ok, strategy = verify_generates(G_spec, S_gens, g)
    return {
        "core_free": core_free,
        "not_reversing": verify_not_reversing(S_gens, g),
        "index_two": verify_index_two(S_gens, g),
        "generates": gen_ok,
    }, strategy


def _graph_checks(graph: OrientedGraph, report, expected_vertices: int) -> dict:
    return {
        "vertex_count": graph.vertex_count == expected_vertices,
        "four_valent": graph.valency() == {4} and graph.out_valency() == {2} and graph.in_valency() == {2},
        "connected": graph.is_connected(),
        "vertex_transitive": graph.vertex_orbit_count() == 1,
        "edge_transitive": graph.edge_orbit_count() == 1,
        "two_arc_orbits": arc_orbit_count(graph) == 2,
        "orientation_preserved": graph.orientation_preserved(),
    }


# -- affine constructions ------------------------------------------------------------


@dataclass
class AffineInstance:
    family: str
    p: int
    r: int
    k: int
    G_gens: list
    S_gens: list
    N_gens: list
    g: AffineElement
    n: AffineElement
    expected_order: int

    def group_spec(self) -> GroupSpec:
        return GroupSpec(self.G_gens, expected_order=self.expected_order)

    def linear_image(self, x: AffineElement) -> AffineElement:
        return AffineElement._raw(x.p, (0,) * x.dim, x.M)

    def normal_spec(self) -> NormalSubgroupSpec:
        return NormalSubgroupSpec(list(self.N_gens), "as-given", "N", quotient_map=self.linear_image)


def _basis_translations(p, k):
    return [AffineElement.translation(tuple(int(j == i) for j in range(k)), p) for i in range(k)]


def _affine_quotient(inst: AffineInstance, use_graph: bool, expected_vertices: int, checks: dict):
    """Quotient by the translation subgroup: algebraic always, graph when allowed."""
    alg = algebraic_cycle_certificate(inst.group_spec(), inst.S_gens, inst.g, inst.normal_spec())
    quotient = {"algebraic": alg.to_json()}
    graph = None
    if use_graph:
        graph, _ = build_coset_graph(inst.G_gens, inst.S_gens, inst.g)
        report = quotient_graph(graph, inst.normal_spec())
        checks.update(_graph_checks(graph, report, expected_vertices))
        basics = check_quotient_basics(report, graph)
        checks["quotient_basics"] = bool(basics)
        s_arc = oriented_s_arc_parameter(graph)
        quotient["graph"] = report.to_json()
        quotient["graph"]["s_arc_parameter"] = s_arc
        checks["modes_agree"] = (report.classification == alg.classification and report.r == alg.r)
        checks["stabilizer_is_S"] = report.stabilizer_order == len(graph.S_elements)
    quotient["classification"] = alg.classification
    quotient["r"] = alg.r
    quotient["oriented"] = alg.oriented
    return quotient, graph


def construct_aff_unoriented(p: int, r: int, mode: str = "auto") -> ConstructionCertificate:
    """G = Z_p^(r-1) ⋊ <σ, φ> with σ the companion matrix of X^(r-1)+...+1
    and φ the negated anti-diagonal; g = e_1·σ, S = <φ>."""
    _require(is_prime(p) and is_prime(r) and p != r and p % 2 and r % 2,
             "p and r are distinct odd primes", f"p={p}, r={r}")
    _require(p < r, "p < r", f"p={p}, r={r}")
    _require(is_primitive_root(p, r), "p is a primitive root modulo r", f"{p} has order {_order_text(p, r)} mod {r}")
    t0 = time.perf_counter()
    k = r - 1
    f = repunit_poly(p, k)
    sigma = companion_matrix(f)
    phi = antidiagonal(p, k, -1)
    e = _basis_translations(p, k)
    sig_el, phi_el = AffineElement.linear(sigma), AffineElement.linear(phi)
    n = e[0]
    g = n * sig_el
    inst = AffineInstance("aff-unoriented", p, r, k, [n, sig_el, phi_el], [phi_el], e, g, n, p**k * 2 * r)

    checks = {
        "sigma_order_r": sigma.order() == r,
        "phi_involution": (phi @ phi).is_identity() and not phi.is_identity(),
        "phi_inverts_sigma": phi.inverse() @ sigma @ phi == sigma.inverse(),
        "f_irreducible": is_irreducible(f),
    }
    if p**k <= EXHAUSTIVE_LIMIT:
        checks["sigma_irreducible_exhaustive"] = exhaustive_irreducibility([sigma])
    # powers of g and the elements X_i = s g^i s g^i
    # g^i = (n_i, σ^i) with n_i = n + n σ^-1 + ... + n σ^-(i-1)
    n_i = []
    acc = [0] * k
    gi = g.identity()
    ok_powers = True
    for i in range(1, r + 1):
        acc = [(a + b) % p for a, b in zip(acc, vec_mat(n.n, (sigma ** -(i - 1)).rows, p))]
        gi = gi * g
        ok_powers &= gi.n == tuple(acc) and gi.M == (sigma ** i).rows
        n_i.append(tuple(acc))
    checks["g_powers"] = ok_powers
    X = []
    for i in range(1, r):
        gi = g**i
        X.append(phi_el * gi * phi_el * gi)
    checks["X_in_N"] = all(x.is_translation() for x in X)
    checks["X_i_equals_minus_2_n_r_minus_i"] = all(
        X[i - 1].n == tuple(-2 * c % p for c in n_i[r - i - 1]) for i in range(1, r)
    )
    checks["X_independent"] = rank([x.n for x in X], p) == k
    t_setup = time.perf_counter() - t0

    conditions, strategy = _condition_outcomes(inst.G_gens, inst.S_gens, g, inst.group_spec())
    expected_vertices = p**k * r
    use_graph = _use_graph(mode, expected_vertices)
    quotient, graph = _affine_quotient(inst, use_graph, expected_vertices, checks)
    if graph is not None:
        checks["stabilizer_order_2"] = quotient["graph"]["stabilizer_order"] == 2
    socle = socle_parameters(f"Z{p}", k, quotient["r"], quotient["oriented"], True)
    return ConstructionCertificate(
        "aff-unoriented", {"p": p, "r": r}, f"Z{p}", inst.G_gens, inst.S_gens, e, g, n,
        {"sigma": sig_el, "phi": phi_el}, conditions, strategy, quotient, socle, checks,
        "graph" if graph is not None else "algebraic",
        {"setup": t_setup, "total": time.perf_counter() - t0}, graph, inst,
    )


def _order_text(p, r):
    try:
        return str(multiplicative_order(p, r))
    except OG4Error:
        return "undefined"


def _use_graph(mode: str, expected_vertices: int) -> bool:
    if mode == "graph":
        return True
    if mode == "algebraic":
        return False
    return expected_vertices <= vertex_cap()


def construct_aff_oriented(p: int, r: int, mode: str = "auto") -> ConstructionCertificate:
    """G = (Z_p^r ⋊ <φ_1..φ_r>) ⋊ <σ> with σ the cyclic permutation matrix,
    φ_i the sign change in coordinate i; g = e_r·σ, S = <φ_1..φ_r>."""
    _require(r >= 3, "r > 2", f"r={r}")
    _require(is_prime(p) and p % 2 == 1, "p is an odd prime", f"p={p}")
    _require((r - 2) % p != 0, "p does not divide r-2", f"p divides r-2: {p} | {r - 2}")
    t0 = time.perf_counter()
    k = r
    sigma = cyclic_permutation_matrix(p, r)
    phis = [diagonal_sign(p, r, i) for i in range(r)]
    e = _basis_translations(p, r)
    sig_el = AffineElement.linear(sigma)
    phi_els = [AffineElement.linear(m) for m in phis]
    n = e[r - 1]
    g = n * sig_el
    inst = AffineInstance("aff-oriented", p, r, k, [e[0], *phi_els, sig_el], phi_els, e, g, n, p**r * 2**r * r)

    gr = g**r
    checks = {
        "sigma_order_r": sigma.order() == r,
        "phi_cycled_by_sigma": all(
            sigma.inverse() @ phis[i] @ sigma == phis[(i + 1) % r] for i in range(r)
        ),
        "g_r_all_ones": gr.is_translation() and gr.n == (1,) * r,
    }
    X = [phi * gr * phi for phi in phi_els]
    checks["X_spans_N"] = rank([x.n for x in X], p) == r
    reduced = [[r - 2] + [0] * (r - 1)] + [[2] + [-2 if j == i else 0 for j in range(1, r)] for i in range(1, r)]
    checks["reduced_matrix_nonsingular"] = rank(reduced, p) == r
    if p**r <= EXHAUSTIVE_LIMIT:
        checks["module_irreducible_exhaustive"] = exhaustive_irreducibility([sigma, *phis])
    t_setup = time.perf_counter() - t0

    conditions, strategy = _condition_outcomes(inst.G_gens, inst.S_gens, g, inst.group_spec())
    expected_vertices = p**r * r
    use_graph = _use_graph(mode, expected_vertices)
    quotient, graph = _affine_quotient(inst, use_graph, expected_vertices, checks)
    if graph is not None:
        checks["stabilizer_order_2_to_r"] = quotient["graph"]["stabilizer_order"] == 2**r
        checks["s_arc_equals_r"] = quotient["graph"]["s_arc_parameter"] == r
    socle = socle_parameters(f"Z{p}", k, quotient["r"], quotient["oriented"], True)
    named = {"sigma": sig_el, **{f"phi{i + 1}": x for i, x in enumerate(phi_els)}}
    return ConstructionCertificate(
        "aff-oriented", {"p": p, "r": r}, f"Z{p}", inst.G_gens, inst.S_gens, e, g, n, named,
        conditions, strategy, quotient, socle, checks,
        "graph" if graph is not None else "algebraic",
        {"setup": t_setup, "total": time.perf_counter() - t0}, graph, inst,
    )


# -- wreath constructions ------------------------------------------------------------


@dataclass
class WreathInstance:
    family: str
    T: SimpleGroupT
    m: int
    r: int
    G_gens: list
    S_gens: list
    g: WreathElement
    n: WreathElement
    sigma: tuple
    top_generators: list
    s: WreathElement | None = None
    phis: list = field(default_factory=list)

    def top_image(self, x: WreathElement) -> PermElement:
        return PermElement(x.top)

    def base_factor(self, t) -> WreathElement:
        e = self.T.identity
        return WreathElement([t] + [e] * (self.m - 1))

    def group_spec(self) -> GroupSpec:
        return GroupSpec(
            self.G_gens,
            top=lambda x: x.top,
            top_generators=self.top_generators,
            socle_certificate=lambda: full_product_certificate(generation_witness(self)),
        )

    def normal_spec(self) -> NormalSubgroupSpec:
        return NormalSubgroupSpec([], "as-given", "N", quotient_map=self.top_image)


def _check_T(T: SimpleGroupT):
    a, b = T.a, T.b
    _require(perms.order(a) == 2, "|a| = 2", f"|a| = {perms.order(a)}")
    _require(T.carrier.order() == perms.PermGroup([a, b]).order(), "T = <a, b>")


def construct_nonabelian_unoriented(r: int, T: SimpleGroupT) -> ConstructionCertificate:
    """G = T^(2r) ⋊ <σ, φ> with σ = (1..r)(r+1..2r), φ reversing 1..2r,
    n = (a, b, 1, ..., 1, b, a), g = nσ and S = <φ>."""
    _require(r >= 3, "r >= 3", f"r={r}")
    _check_T(T)
    a, b = T.a, T.b
    oa, ob = perms.order(a), perms.order(b)
    oab, oba = perms.order(perms.compose(a, b)), perms.order(perms.compose(b, a))
    _require(ob >= 3, "|b| >= 3", f"|b| = {ob}")
    _require(oab not in (oa, ob), "|ab| differs from |a| and |b|", f"|ab| = {oab}")
    _require(oba not in (oa, ob), "|ba| differs from |a| and |b|", f"|ba| = {oba}")
    t0 = time.perf_counter()
    m = 2 * r
    e = T.identity
    sigma = tuple([(i + 1) % r for i in range(r)] + [r + (i + 1) % r for i in range(r)])
    phi = tuple(m - 1 - i for i in range(m))
    sig_el = WreathElement.top_only(sigma, T.degree)
    phi_el = WreathElement.top_only(phi, T.degree)
    n = WreathElement([a, b] + [e] * (m - 4) + [b, a])
    g = n * sig_el
    G_gens = [WreathElement([a] + [e] * (m - 1)), WreathElement([b] + [e] * (m - 1)), sig_el, phi_el]
    inst = WreathInstance("nonab-unoriented", T, m, r, G_gens, [phi_el], g, n, sigma, [sigma, phi], s=phi_el)

    checks = {
        "phi_involution": perms.order(phi) == 2,
        "sigma_order_r": perms.order(sigma) == r,
        "phi_inverts_sigma": perms.conjugate(sigma, phi) == perms.inverse(sigma),
        "n_fixed_by_s": n.conj(phi_el) == n,
        "sgsg_nontrivial": not (phi_el * g * phi_el * g).is_identity(),
    }
    X = compute_X_elements(inst)
    checks["X_elements_match_display"] = _x_display_matches(T, r, X)
    t_setup = time.perf_counter() - t0

    conditions, strategy = _condition_outcomes(G_gens, [phi_el], g, inst.group_spec())
    alg = algebraic_cycle_certificate(inst.group_spec(), [phi_el], g, inst.normal_spec())
    checks["split_two_two"] = alg.sgs_split == [2, 2] and alg.sginvs_split == [2, 2]
    quotient = {"algebraic": alg.to_json(), "classification": alg.classification, "r": alg.r,
                "oriented": alg.oriented, "kernel": "N (semiregular, |G_alpha| = 2)"}
    socle = socle_parameters(T.name, m, alg.r, alg.oriented, False)
    named = {"sigma": sig_el, "phi": phi_el, "s": phi_el}
    return ConstructionCertificate(
        "nonab-unoriented", {"r": r, "T": T.name}, T.name, G_gens, [phi_el], [G_gens[0], G_gens[1]],
        g, n, named, conditions, strategy, quotient, socle, checks, "algebraic",
        {"setup": t_setup, "total": time.perf_counter() - t0}, None, inst,
    )


def _x_display_matches(T: SimpleGroupT, r: int, X) -> bool:
    """Compare X_1, X_2 with their closed forms (words in a, b)."""
    one = ["1"]
    if r == 3:
        x1 = ["a", "ba", "b", "a", "b", "ab"]
        x2 = ["ab", "b", "bab", "aba", "ba", "ab2"]
    else:
        x1 = ["a", "ba", "b"] + one * (r - 3) + ["a"] + one * (r - 3) + ["b", "ab"]
        x2 = ["a", "ba2", "bab", "b"] + one * (r - 4) + ["aba", "a"] + one * (r - 4) + ["b", "ab2"]
    want = [tuple(T.evaluate(w) for w in x1), tuple(T.evaluate(w) for w in x2)]
    return list(X.tuples) == want


PHI0_24 = "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)"
RHO_24 = "(2,4,8)(3,5,7)(10,12,16)(11,13,15)(18,20,24)(19,21,23)"
PHI1_24 = "(1,4)(2,3)(5,8)(6,7)(9,12)(10,11)(13,16)(14,15)(17,20)(18,19)(21,24)(22,23)"
PHI2_24 = "(1,8)(2,7)(3,6)(4,5)(9,16)(10,15)(11,14)(12,13)(17,24)(18,23)(19,22)(20,21)"
N_24 = "a a a a 1 1 1 1 b b b b 1 1 1 1 b b b b 1 1 1 1"

# Entries of X_0, ..., X_5 as words in a and b, coordinate by coordinate.
TABLE_24 = [
    "b b^{-1} b^{-1} b b b^{-1} b^{-1} b a a a a a a a a b b^{-1} b^{-1} b b b^{-1} b^{-1} b",
    "b b b^{-1} b^{-1} b^{-1} b^{-1} b b b^a b b^{-1} (b^{-1})^a (b^{-1})^a b^{-1} b b^a a^b a a a^b a^b a a a^b",
    "a^{b^2} a^b a a^b a^b a a^b a^{b^2} b^a b b b^a (b^{-1})^a b^{-1} b^{-1} (b^{-1})^a b^{ab} b^a b b b^{-1} b^{-1} (b^{-1})^a (b^{-1})^{ab}",
    "b^{ab^2} (b^{-1})^{ab} (b^{-1})^a b^{ab} b b^{-1} b^{-1} b a^{b^2a} a^{b^2} a^b a^{ba} a a a^b a^{ba} b^{ab} (b^{-1})^a b^{-1} b b b^{-1} (b^{-1})^a b^{ab}",
    "b^{ab^2} b^{ab} (b^{-1})^a (b^{-1})^{ab} b^{-1} b^{-1} b b b^{ab^2a} b b^{-1} (b^{-1})^{aba} b^{-1} b^{-1} b b^{aba} a^{b^2ab} a^{ba} a^b a^{b^3} a^{b^2} a a a^{bab}",
    "a^{b^2ab^2} a^{bab} a a^{bab} a^{b^2} a a^{b^2} a^{b^4} b^{ab^2a} b b b^{aba} b^{-1} b^{-1} b^{-1} (b^{-1})^{aba} b^{ab^2ab} b^{aba} b b b^{-1} b^{-1} b^{-1} (b^{-1})^{abab}",
]


def table_24_rows(T: SimpleGroupT) -> list:
    return [tuple(T.evaluate(w) for w in row.split()) for row in TABLE_24]


def construct_nonabelian_oriented_24(T: SimpleGroupT) -> ConstructionCertificate:
    """G = T^24 ⋊ (<φ_0, φ_1, φ_2> ⋊ <σ>) with σ = ρθ, g = nσ, S = <φ_0, φ_1, φ_2>."""
    _check_T(T)
    _require(perms.order(T.b) == 3, "|b| = 3", f"|b| = {perms.order(T.b)}")
    t0 = time.perf_counter()
    m, r = 24, 3
    a, b, e = T.a, T.b, T.identity
    phi0 = perms.from_cycles(PHI0_24, m)
    rho = perms.from_cycles(RHO_24, m)
    theta = tuple((i + 8) % m for i in range(m))
    sigma = perms.compose(rho, theta)
    phi1 = perms.conjugate(phi0, rho)
    phi2 = perms.conjugate(phi0, perms.power(rho, 2))
    phis = [phi0, phi1, phi2]
    letters = {"a": a, "b": b, "1": e}
    n = WreathElement([letters[c] for c in N_24.split()])
    tops = [WreathElement.top_only(x, T.degree) for x in phis]
    sig_el = WreathElement.top_only(sigma, T.degree)
    g = n * sig_el
    G_gens = [WreathElement([a] + [e] * (m - 1)), WreathElement([b] + [e] * (m - 1)), *tops, sig_el]
    inst = WreathInstance("nonab-oriented-24", T, m, r, G_gens, tops, g, n, sigma, [*phis, sigma], phis=tops)

    checks = {
        "phi1_matches_display": phi1 == perms.from_cycles(PHI1_24, m),
        "phi2_matches_display": phi2 == perms.from_cycles(PHI2_24, m),
        "phis_involutions": all(perms.order(x) == 2 for x in phis),
        "phis_commute": all(perms.compose(x, y) == perms.compose(y, x) for x in phis for y in phis),
        "rho_cycles_phis": perms.conjugate(phi2, rho) == phi0,
        "rho_commutes_theta": perms.compose(rho, theta) == perms.compose(theta, rho),
        "theta_commutes_phis": all(perms.compose(theta, x) == perms.compose(x, theta) for x in phis),
        "sigma_order_3": perms.order(sigma) == 3,
        "sigma_cycles_phis": all(perms.conjugate(phis[i], sigma) == phis[(i + 1) % 3] for i in range(3)),
        "phi0_g_is_phi1": tops[0].conj(g) == tops[1],
        "phi1_g_is_phi2": tops[1].conj(g) == tops[2],
        "S_semiregular_three_orbits": [len(bl) for bl in perms.orbit(range(m), phis).blocks] == [8, 8, 8],
    }
    X = compute_X_elements(inst)
    checks["table_rows_match"] = list(X.tuples) == table_24_rows(T)
    t_setup = time.perf_counter() - t0

    conditions, strategy = _condition_outcomes(G_gens, tops, g, inst.group_spec())
    alg = algebraic_cycle_certificate(inst.group_spec(), tops, g, inst.normal_spec())
    quotient = {"algebraic": alg.to_json(), "classification": alg.classification, "r": alg.r,
                "oriented": alg.oriented}
    socle = socle_parameters(T.name, m, alg.r, alg.oriented, False)
    named = {"sigma": sig_el, "phi0": tops[0], "phi1": tops[1], "phi2": tops[2]}
    return ConstructionCertificate(
        "nonab-oriented-24", {"T": T.name}, T.name, G_gens, tops, [G_gens[0], G_gens[1]],
        g, n, named, conditions, strategy, quotient, socle, checks, "algebraic",
        {"setup": t_setup, "total": time.perf_counter() - t0}, None, inst,
    )
