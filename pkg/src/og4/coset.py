"""Coset graphs Cos(G, S, g) and the four conditions that make them
connected, 4-valent and G-oriented.

Vertices are right cosets Sx.  G acts by right multiplication and the arc
Sx -> Sy is present iff yx^-1 lies in SgS, so the out-neighbours of Sx are
the cosets Sgsx (s in S).  A coset is stored by its canonical
representative: the element of Sx with the smallest ``key()``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import perms
from .elements import small_group_closure
from .errors import CapExceeded, Inconclusive, NotFourValent
from .perms import PermGroup

DEFAULT_VERTEX_CAP = 10**6
S_CAP = 2**16
ARC_CAP = 10**7


def vertex_cap() -> int:
    env = os.environ.get("OG4_CAP_VERTICES")
    return int(env) if env else DEFAULT_VERTEX_CAP


@dataclass
class OrientedGraph:
    """A finite digraph with a group acting on it through ``generator_actions``.

    Lists are 0-based; ``out_neighbors[v]`` and ``in_neighbors[v]`` are sorted.
    """

    vertex_count: int
    out_neighbors: list
    in_neighbors: list
    generator_actions: list
    representatives: list = field(default_factory=list, repr=False)
    stabilizer_generators: list = field(default_factory=list, repr=False)
    group_generators: list = field(default_factory=list, repr=False)
    S_elements: list = field(default_factory=list, repr=False)
    coset_index: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_out_lists(cls, out: Sequence[Sequence[int]], generator_actions: Sequence[Sequence[int]] = ()):
        n = len(out)
        ins = [[] for _ in range(n)]
        for u, vs in enumerate(out):
            for v in vs:
                ins[v].append(u)
        return cls(n, [tuple(sorted(v)) for v in out], [tuple(sorted(v)) for v in ins],
                   [tuple(h) for h in generator_actions])

    def arcs(self):
        """Oriented arcs (u, v)."""
        return [(u, v) for u, vs in enumerate(self.out_neighbors) for v in vs]

    def edges(self):
        """Undirected edges as sorted pairs, each listed once."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs()})

    def neighbors(self, v):
        return sorted(set(self.out_neighbors[v]) | set(self.in_neighbors[v]))

    def valency(self) -> set:
        return {len(self.neighbors(v)) for v in range(self.vertex_count)}

    def out_valency(self) -> set:
        return {len(x) for x in self.out_neighbors}

    def in_valency(self) -> set:
        return {len(x) for x in self.in_neighbors}

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = [False] * self.vertex_count
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.out_neighbors[u] + self.in_neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.vertex_count

    def orientation_preserved(self) -> bool:
        arcs = set(self.arcs())
        return all((h[u], h[v]) in arcs for h in self.generator_actions for u, v in arcs)

    def vertex_orbit_count(self) -> int:
        return len(perms.orbit(range(self.vertex_count), self.generator_actions))

    def edge_orbit_count(self) -> int:
        edges = self.edges()
        index = {e: i for i, e in enumerate(edges)}
        images = []
        for h in self.generator_actions:
            images.append(tuple(index[tuple(sorted((h[u], h[v])))] for u, v in edges))
        return len(perms.orbit(range(len(edges)), images))

    def stabilizer_order(self) -> int:
        """Order of the stabilizer of vertex 0 in the group generated by the actions."""
        if self.stabilizer_generators:
            return len(small_group_closure(self.stabilizer_generators, cap=S_CAP))
        if self.representatives:
            return 1
        G = PermGroup(self.generator_actions, degree=self.vertex_count, base=[0])
        return G.order() // len(G.transversals[0]) if G.base else 1


def canonical(x, S_elems):
    """(key, representative) of the coset Sx."""
    best = (x.key(), x)
    for s in S_elems:
        if s.is_identity():
            continue
        y = s * x
        k = y.key()
        if k < best[0]:
            best = (k, y)
    return best


def build_coset_graph(G_gens: Sequence, S_gens: Sequence, g, cap: int | None = None):
    """Build Cos(<G_gens>, <S_gens>, g).  Returns (graph, base vertex 0).

    Vertices are numbered in breadth-first order from S under right
    multiplication by ``G_gens``.  Only those generators drive the search, so
    a disconnected coset graph still yields every coset; connectivity is a
    separate property of the result.
    """
    cap = vertex_cap() if cap is None else cap
    if not G_gens:
        raise ValueError("need group generators")
    e = G_gens[0].identity()
    S_elems = sorted(small_group_closure(list(S_gens) or [e], cap=S_CAP), key=lambda x: x.key())

    k0, r0 = canonical(e, S_elems)
    index = {k0: 0}
    reps = [r0]
    parent = [None]
    actions = [[] for _ in G_gens]
    # Schreier elements all lie in S; once they generate S nothing new can appear
    schreier = set()
    need_schreier = len(S_elems) > 1
    queue = 0
    while queue < len(reps):
        x = reps[queue]
        for gi, h in enumerate(G_gens):
            y = x * h
            k, rep = canonical(y, S_elems)
            w = index.get(k)
            if w is None:
                w = len(reps)
                if w >= cap:
                    raise CapExceeded(f"more than {cap} cosets")
                index[k] = w
                reps.append(rep)
                parent.append((queue, gi))
                s_el = rep * y.inverse() if need_schreier and rep != y else None
            else:
                s_el = reps[w] * y.inverse() if need_schreier else None
            if s_el is not None and not s_el.is_identity() and s_el not in schreier:
                schreier.add(s_el)
                need_schreier = len(small_group_closure(list(schreier), cap=S_CAP)) < len(S_elems)
            actions[gi].append(w)
        queue += 1
    n = len(reps)
    if n == 1:
        raise NotFourValent("S equals G: the coset graph has a single vertex")

    base_out = sorted({index[canonical(g * s, S_elems)[0]] for s in S_elems})
    if len(base_out) < 2:
        raise NotFourValent(f"SgS meets only {len(base_out)} coset(s) of S")
    out = [None] * n
    out[0] = tuple(base_out)
    for v in range(1, n):
        u, gi = parent[v]
        act = actions[gi]
        out[v] = tuple(sorted(act[w] for w in out[u]))
    ins = [[] for _ in range(n)]
    for u in range(n):
        for w in out[u]:
            ins[w].append(u)
    graph = OrientedGraph(
        n,
        out,
        [tuple(sorted(x)) for x in ins],
        [tuple(a) for a in actions],
        representatives=reps,
        stabilizer_generators=sorted(schreier, key=lambda x: x.key()),
        group_generators=list(G_gens),
        S_elements=S_elems,
        coset_index=index,
    )
    return graph, 0


# -- the four conditions ----------------------------------------------------------


def _elements(S_gens, e, cap=S_CAP):
    return small_group_closure(list(S_gens) or [e], cap=cap)


def verify_core_free(G_gens: Sequence, S_gens: Sequence):
    """(True, None) when S contains no nontrivial normal subgroup of G,
    otherwise (False, s) with s a nontrivial element of the core.

    The core is the largest subset of S closed under conjugation by the
    generators of G, found by repeatedly discarding elements whose conjugate
    leaves the current set.
    """
    e = G_gens[0].identity()
    core = set(_elements(S_gens, e))
    inverses = [h.inverse() for h in G_gens]
    changed = True
    while changed:
        changed = False
        for s in list(core):
            if any(hi * s * h not in core for h, hi in zip(G_gens, inverses)):
                core.discard(s)
                changed = True
    core.discard(e)
    if core:
        return False, min(core, key=lambda x: x.key())
    return True, None


def double_coset(S_elems, x) -> set:
    return {s * x * t for s in S_elems for t in S_elems}


def verify_not_reversing(S_gens: Sequence, g) -> bool:
    S = _elements(S_gens, g.identity())
    return g.inverse() not in double_coset(S, g)


def verify_index_two(S_gens: Sequence, g) -> bool:
    S = _elements(S_gens, g.identity())
    gi = g.inverse()
    inter = sum(1 for s in S if gi * s * g in S)
    return len(S) == 2 * inter


@dataclass
class GroupSpec:
    """What is known about G for the generation check.

    ``expected_order`` enables closure enumeration.  For wreath-type groups,
    ``top`` maps an element to its image in the permutation quotient,
    ``top_generators`` generate that quotient and ``socle_certificate``
    returns a strip certificate proving N ≤ <S, g>.
    """

    generators: list
    expected_order: int | None = None
    top: Callable | None = None
    top_generators: list | None = None
    socle_certificate: Callable | None = None
    closure_cap: int = 10**6


def verify_generates(G_spec: GroupSpec, S_gens: Sequence, g):
    """(passed, strategy) for <S, g> = G."""
    gens = list(S_gens) + [g]
    if G_spec.expected_order is not None and G_spec.expected_order <= G_spec.closure_cap:
        size = len(small_group_closure(gens, cap=G_spec.closure_cap))
        return size == G_spec.expected_order, "closure"
    if G_spec.top is not None and G_spec.top_generators and G_spec.socle_certificate is not None:
        target = PermGroup(G_spec.top_generators)
        images = [G_spec.top(x) for x in gens]
        images = [x for x in images if not perms.is_identity(x)]
        if not images:
            return False, "top+strips"
        H = PermGroup(images, degree=target.degree)
        onto = H.order() == target.order() and all(t in H for t in G_spec.top_generators)
        if not onto:
            return False, "top+strips"
        return bool(G_spec.socle_certificate().certified), "top+strips"
    raise Inconclusive("neither closure enumeration nor a socle certificate applies")


# -- arc statistics ----------------------------------------------------------------


def arc_orbit_count(graph: OrientedGraph, generator_actions: Sequence | None = None) -> int:
    """Number of orbits on arcs of the underlying graph (each edge gives two)."""
    actions = graph.generator_actions if generator_actions is None else generator_actions
    arcs = []
    for u in range(graph.vertex_count):
        for v in graph.neighbors(u):
            arcs.append((u, v))
    index = {a: i for i, a in enumerate(arcs)}
    seen = [False] * len(arcs)
    orbits = 0
    for start in range(len(arcs)):
        if seen[start]:
            continue
        orbits += 1
        seen[start] = True
        stack = [arcs[start]]
        while stack:
            u, v = stack.pop()
            for h in actions:
                j = index[(h[u], h[v])]
                if not seen[j]:
                    seen[j] = True
                    stack.append(arcs[j])
    return orbits


def _oriented_arc_orbit_size(graph, actions, s, limit):
    v = 0
    arc = [v]
    for _ in range(s):
        v = graph.out_neighbors[v][0]
        arc.append(v)
    start = tuple(arc)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for h in actions:
            b = tuple(h[x] for x in a)
            if b not in seen:
                seen.add(b)
                if len(seen) > limit:
                    raise CapExceeded(f"more than {limit} oriented arcs")
                queue.append(b)
    return len(seen)


def oriented_s_arc_parameter(graph: OrientedGraph, generator_actions: Sequence | None = None) -> int:
    """Largest s such that the group is transitive on oriented s-arcs.

    For out-valency v the group is then regular on them and |G_α| = v^s;
    that equality is checked against the stabilizer order.
    """
    actions = graph.generator_actions if generator_actions is None else generator_actions
    (v,) = graph.out_valency()
    stab = graph.stabilizer_order()
    n = graph.vertex_count
    if v == 1:
        if stab != 1:
            raise AssertionError("out-valency 1 with a nontrivial stabilizer")
        return 0
    s = 0
    while stab % v ** (s + 1) == 0:
        count = n * v ** (s + 1)
        if count > ARC_CAP:
            raise CapExceeded(f"{count} oriented {s + 1}-arcs exceed {ARC_CAP}")
        if _oriented_arc_orbit_size(graph, actions, s + 1, count) != count:
            break
        s += 1
    if stab != v**s:
        raise AssertionError(f"|G_alpha| = {stab} but s = {s}")
    return s


# -- exports --------------------------------------------------------------------


def edge_list(graph: OrientedGraph) -> str:
    """One line per edge ``u v +`` (u -> v) or ``u v -`` (v -> u), 1-based, u < v."""
    arcs = set(graph.arcs())
    lines = []
    for u, v in graph.edges():
        lines.append(f"{u + 1} {v + 1} {'+' if (u, v) in arcs else '-'}")
    return "\n".join(lines) + "\n"


def to_dot(graph: OrientedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v + 1};" for v in range(graph.vertex_count)]
    lines += [f"  {u + 1} -> {v + 1};" for u, v in graph.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: OrientedGraph) -> dict:
    return {
        "vertices": graph.vertex_count,
        "out": [[w + 1 for w in x] for x in graph.out_neighbors],
        "in": [[w + 1 for w in x] for x in graph.in_neighbors],
        "generators": [[x + 1 for x in h] for h in graph.generator_actions],
    }
