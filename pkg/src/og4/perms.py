"""Permutations as image tuples, plus the small amount of permutation group
machinery the rest of the package needs: orbits, a Schreier-Sims stabilizer
chain, normal closures and kernels of induced actions.

A permutation of degree ``n`` is a tuple ``p`` with ``p[x]`` the image of
``x``.  Products are read left to right: ``compose(p, q)`` first applies
``p`` and then ``q``, so exponent notation ``x^g`` is simply ``g[x]`` and
conjugation ``h^g`` means ``g^-1 h g``.  Points are 0-based internally; the
string helpers speak 1-based cycle notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .errors import CapExceeded, NotAHomomorphism

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """Return the permutation x -> q(p(x))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(h: Perm, g: Perm) -> Perm:
    """h^g = g^-1 h g."""
    # (g^-1 h g)(g(x)) = g(h(x))
    out = [0] * len(h)
    for x, hx in enumerate(h):
        out[g[x]] = g[hx]
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def order(p: Perm) -> int:
    from math import lcm

    seen = [False] * len(p)
    result = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        result = lcm(result, length)
    return result


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")


def from_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as ``"(1,2)(3,4)"``.

    Cycles may be separated by ``·`` or whitespace; entries by commas or
    spaces.
    """
    images = list(range(degree))
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(t) - 1 for t in re.split(r"[,\s]+", body.strip()) if t]
        for i, x in enumerate(pts):
            images[x] = pts[(i + 1) % len(pts)]
    check_perm(images)
    return tuple(images)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``p`` (0-based), each starting at its least point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_string(p: Perm) -> str:
    """1-based cycle notation; ``"()"`` for the identity."""
    parts = ["(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles(p)]
    return "".join(parts) or "()"


def brute_force_closure(gens: Iterable[Perm], degree: int | None = None, cap: int = 10**6) -> set[Perm]:
    """All elements of <gens> by breadth-first multiplication (test oracle)."""
    gens = list(gens)
    if degree is None:
        degree = len(gens[0])
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeds {cap}")
        frontier = nxt
    return seen


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: dict

    def __len__(self):
        return len(self.blocks)


def orbit(points: Iterable[int], gens: Sequence[Perm]) -> OrbitPartition:
    """Partition the orbits of ``gens`` that meet ``points``.

    Blocks are sorted ascending and ordered by their least point.
    """
    block_of: dict[int, int] = {}
    raw = []
    for start in sorted(set(points)):
        if start in block_of:
            continue
        idx = len(raw)
        block_of[start] = idx
        members = [start]
        for x in members:
            for g in gens:
                y = g[x]
                if y not in block_of:
                    block_of[y] = idx
                    members.append(y)
        raw.append(members)
    blocks = sorted((tuple(sorted(b)) for b in raw), key=lambda b: b[0])
    block_of = {x: i for i, b in enumerate(blocks) for x in b}
    return OrbitPartition(tuple(blocks), block_of)


class _Level:
    __slots__ = ("point", "gens", "trans", "inv", "checked")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Perm] = []
        self.trans: dict[int, Perm] = {}
        self.inv: dict[int, Perm] = {}
        self.checked: set[tuple[int, int]] = set()


class PermGroup:
    """A permutation group with a base and strong generating set.

    The base starts with ``base`` (if given) and is otherwise extended by the
    first point moved by the element that needs a new level.
    """

    def __init__(self, generators: Iterable[Perm], degree: int | None = None, base: Sequence[int] = ()):
        generators = [tuple(g) for g in generators]
        if degree is None:
            if not generators:
                raise ValueError("degree required for an empty generator list")
            degree = len(generators[0])
        for g in generators:
            if len(g) != degree:
                raise ValueError("generators of unequal degree")
        self.degree = degree
        self.generators = generators
        self._levels: list[_Level] = [_Level(b) for b in base]
        self._schreier_sims()

    # -- construction -----------------------------------------------------

    def _first_moved(self, g: Perm) -> int:
        used = {lev.point for lev in self._levels}
        for x, y in enumerate(g):
            if x != y and x not in used:
                return x
        raise AssertionError("element fixes every point outside the base")

    def _place(self, g: Perm, upto: int) -> None:
        """Add strong generator ``g`` to levels 0..upto (extending the base)."""
        if upto == len(self._levels):
            self._levels.append(_Level(self._first_moved(g)))
        for lev in self._levels[: upto + 1]:
            lev.gens.append(g)

    def _extend_orbit(self, lev: _Level) -> None:
        if not lev.trans:
            lev.trans[lev.point] = identity(self.degree)
            lev.inv[lev.point] = lev.trans[lev.point]
        queue = list(lev.trans)
        for pt in queue:
            u = lev.trans[pt]
            for h in lev.gens:
                q = h[pt]
                if q not in lev.trans:
                    lev.trans[q] = compose(u, h)
                    lev.inv[q] = inverse(lev.trans[q])
                    queue.append(q)

    def _sift_from(self, g: Perm, start: int) -> tuple[Perm, int]:
        for j in range(start, len(self._levels)):
            lev = self._levels[j]
            pt = g[lev.point]
            if pt not in lev.trans:
                return g, j
            if pt != lev.point:
                g = compose(g, lev.inv[pt])
        return g, len(self._levels)

    def _schreier_sims(self) -> None:
        for g in self.generators:
            if is_identity(g):
                continue
            # deepest level whose base point prefix g fixes
            depth = 0
            while depth < len(self._levels) and g[self._levels[depth].point] == self._levels[depth].point:
                depth += 1
            self._place(g, depth)
        i = len(self._levels) - 1
        while i >= 0:
            lev = self._levels[i]
            self._extend_orbit(lev)
            restart = None
            for pt in list(lev.trans):
                u = lev.trans[pt]
                for k, h in enumerate(lev.gens):
                    if (pt, k) in lev.checked:
                        continue
                    lev.checked.add((pt, k))
                    s = compose(compose(u, h), lev.inv[h[pt]])
                    if is_identity(s):
                        continue
                    residue, j = self._sift_from(s, i + 1)
                    if not is_identity(residue):
                        self._place(residue, j)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    # -- queries ------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self._levels]

    @property
    def strong_generators(self) -> list[Perm]:
        return list(self._levels[0].gens) if self._levels else []

    @property
    def transversals(self) -> list[dict[int, Perm]]:
        return [dict(lev.trans) for lev in self._levels]

    def order(self) -> int:
        return prod(len(lev.trans) for lev in self._levels)

    def sift(self, g: Perm) -> Perm:
        return self._sift_from(tuple(g), 0)[0]

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        return is_identity(self.sift(g))

    __contains__ = contains

    def level_stabilizer_generators(self, depth: int) -> list[Perm]:
        """Strong generators of the pointwise stabilizer of the first ``depth`` base points."""
        if depth >= len(self._levels):
            return []
        return list(self._levels[depth].gens)

    def elements(self, cap: int = 10**6):
        """Enumerate all elements as products of transversal elements."""
        if self.order() > cap:
            raise CapExceeded(f"group of order {self.order()} exceeds {cap}")
        elems = [identity(self.degree)]
        for lev in reversed(self._levels):
            elems = [compose(x, u) for u in lev.trans.values() for x in elems]
        return elems

    def orbits(self) -> OrbitPartition:
        return orbit(range(self.degree), self.generators)

    def is_normalized_by(self, gens: Iterable[Perm]) -> bool:
        return all(conjugate(h, x) in self for h in self.generators for x in gens)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()}, base={self.base})"


def schreier_sims(gens: Sequence[Perm], base: Sequence[int] = ()) -> PermGroup:
    if not gens:
        raise ValueError("need at least one generator")
    return PermGroup(gens, base=base)


def normal_closure(G: PermGroup, seeds: Iterable[Perm], cap: int = 10**7) -> PermGroup:
    """Smallest subgroup of G normalized by G's generators and containing seeds."""
    gens = [tuple(s) for s in seeds if not is_identity(s)]
    H = PermGroup(gens, degree=G.degree)
    queue = list(gens)
    while queue:
        h = queue.pop()
        for x in G.generators:
            c = conjugate(h, x)
            if c not in H:
                gens.append(c)
                H = PermGroup(gens, degree=G.degree)
                if H.order() > cap:
                    raise CapExceeded(f"normal closure exceeds order {cap}")
                queue.append(c)
    return H


def action_kernel(G: PermGroup, induced_images: Sequence[Perm]) -> PermGroup:
    """Kernel of the action defined by sending ``G.generators[i]`` to ``induced_images[i]``.

    The graph of the map is built as a group on the disjoint union of the two
    domains; it is a homomorphism exactly when that group projects injectively
    onto G, i.e. has the same order.  The kernel is the pointwise stabilizer of
    the image points.
    """
    if len(induced_images) != len(G.generators):
        raise ValueError("one image per generator required")
    n = G.degree
    m = len(induced_images[0]) if induced_images else 0
    joined = [tuple(g) + tuple(n + x for x in img) for g, img in zip(G.generators, induced_images)]
    if not joined:
        return PermGroup([], degree=n)
    H = PermGroup(joined, base=range(n, n + m))
    if H.order() != G.order():
        raise NotAHomomorphism(f"graph of the map has order {H.order()}, expected {G.order()}")
    kernel_gens = [k[:n] for k in H.level_stabilizer_generators(m)]
    return PermGroup(kernel_gens, degree=n)


def induced_group_order(images: Sequence[Perm]) -> int:
    if not images:
        return 1
    return PermGroup(images).order()
