"""Subdirect products of T^m and the strip test that certifies a subgroup is
all of T^m.

A subdirect subgroup H of T^m (T nonabelian simple) is a direct product of
full strips with disjoint supports.  Two coordinates i, j lie in a common
strip only if some automorphism ψ satisfies ``π_i(h)^ψ = π_j(h)`` for every
h in H, and it is enough to test the generators of H.  So H = T^m exactly
when H is subdirect and no pair of coordinates is linked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import perms
from .elements import SimpleGroupT, WreathElement
from .errors import NotInN
from .perms import PermGroup


@dataclass(frozen=True)
class SubdirectWitness:
    """Generators of a subgroup of T^m, each a length-m tuple of T-elements."""

    tuples: tuple
    T: SimpleGroupT
    labels: tuple = ()

    def __post_init__(self):
        tuples = tuple(tuple(tuple(t) for t in x) for x in self.tuples)
        object.__setattr__(self, "tuples", tuples)
        if len({len(x) for x in tuples}) > 1:
            raise ValueError("all tuples must have the same arity")

    @property
    def m(self) -> int:
        return len(self.tuples[0]) if self.tuples else 0

    @classmethod
    def from_elements(cls, elements: Sequence[WreathElement], T: SimpleGroupT, labels=()) -> "SubdirectWitness":
        for k, x in enumerate(elements):
            if not x.in_base():
                name = labels[k] if k < len(labels) else f"#{k}"
                raise NotInN(f"{name} has nontrivial top component {perms.cycle_string(x.top)}")
        return cls(tuple(x.x for x in elements), T, tuple(labels))


def project(w: SubdirectWitness, i: int) -> list:
    """i-th coordinates (1-based) of the witness generators."""
    if not 1 <= i <= w.m:
        raise IndexError(f"coordinate {i} outside 1..{w.m}")
    return [x[i - 1] for x in w.tuples]


def is_subdirect(w: SubdirectWitness) -> bool:
    if not w.tuples:
        return False
    order = w.T.order()
    for i in range(1, w.m + 1):
        gens = [t for t in project(w, i) if not perms.is_identity(t)]
        if not gens or PermGroup(gens).order() != order:
            return False
    return True


def strip_link(w: SubdirectWitness, i: int, j: int):
    """An element ψ of the automorphism overgroup with π_i(x)^ψ = π_j(x) for
    every generator x, or None.  Coordinates are 1-based."""
    if i == j:
        raise ValueError("coordinates must differ")
    xi, xj = project(w, i), project(w, j)
    if any(perms.order(s) != perms.order(t) for s, t in zip(xi, xj)):
        return None
    candidates = [w.T.identity] + w.T.automorphisms()
    for psi in candidates:
        if all(perms.conjugate(s, psi) == t for s, t in zip(xi, xj)):
            return psi
    return None


@dataclass
class StripCertificate:
    subdirect: bool
    links: list = field(default_factory=list)  # (i, j, psi) with 1-based i < j

    @property
    def verdict(self) -> str:
        return "Certified" if self.subdirect and not self.links else "Refuted"

    @property
    def certified(self) -> bool:
        return self.verdict == "Certified"

    def to_json(self) -> dict:
        return {
            "subdirect": self.subdirect,
            "links": [
                {"i": i, "j": j, "psi": [x + 1 for x in psi]} for i, j, psi in self.links
            ],
            "verdict": self.verdict,
        }


def full_product_certificate(w: SubdirectWitness, stop_at_first: bool = True) -> StripCertificate:
    sub = is_subdirect(w)
    cert = StripCertificate(sub)
    for i in range(1, w.m + 1):
        for j in range(i + 1, w.m + 1):
            psi = strip_link(w, i, j)
            if psi is not None:
                cert.links.append((i, j, psi))
                if stop_at_first:
                    return cert
    return cert


# -- the elements used by the generation arguments ------------------------------


def compute_X_elements(inst) -> SubdirectWitness:
    """The explicit elements of N ∩ <S, g> used to prove generation.

    For the unoriented family these are X_1 = g^s g and X_2 = (g^2)^s g^2;
    for the 24-coordinate oriented family they are X_i = X_0^(g^i), i = 0..5,
    with X_0 = φ_0 · φ_0^(g^3).
    """
    g = inst.g
    if inst.family == "nonab-unoriented":
        s = inst.s
        g2 = g * g
        xs = [g.conj(s) * g, g2.conj(s) * g2]
        labels = ["X1", "X2"]
    elif inst.family == "nonab-oriented-24":
        phi0 = inst.phis[0]
        x = phi0 * phi0.conj(g**3)
        xs = []
        for _ in range(6):
            xs.append(x)
            x = x.conj(g)
        labels = [f"X{i}" for i in range(6)]
    else:
        raise ValueError(f"no X elements for family {inst.family!r}")
    return SubdirectWitness.from_elements(xs, inst.T, labels)


def generation_witness(inst) -> SubdirectWitness:
    """Generators of a subgroup of N ∩ <S, g> suitable for the strip test.

    The X elements are closed up under conjugation by g and the generators of
    S until every coordinate projection is onto T.  Every element produced
    lies in N ∩ <S, g>, which is normalized by <S, g>.
    """
    base = compute_X_elements(inst)
    elems = [WreathElement(x) for x in base.tuples]
    labels = list(base.labels)
    conjugators = [("g", inst.g)] + [(f"s{k}", s) for k, s in enumerate(inst.S_gens)]
    seen = set(elems)
    frontier = list(zip(elems, labels))
    w = SubdirectWitness.from_elements(elems, inst.T, labels)
    while not is_subdirect(w) and frontier:
        nxt = []
        for x, lab in frontier:
            for name, c in conjugators:
                y = x.conj(c)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    labels.append(f"{lab}^{name}")
                    nxt.append((y, labels[-1]))
        frontier = nxt
        w = SubdirectWitness.from_elements(elems, inst.T, labels)
    return w
