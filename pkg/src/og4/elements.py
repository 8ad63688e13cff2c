"""Structured group elements and the simple groups used as wreath factors.

Three element kinds share one small protocol (``*``, ``inverse()``,
``is_identity()``, ``key()`` and ``identity()``):

* ``PermElement`` wraps a permutation tuple.
* ``AffineElement`` is ``n·M`` with ``n`` a row vector over F_p (a translation)
  and ``M`` an invertible matrix acting by ``v -> v @ M``.
* ``WreathElement`` is ``x·p`` with ``x`` a tuple of T-elements and ``p`` a
  permutation of the coordinates; ``p`` moves coordinate ``i`` to ``p[i]``.

All products are read left to right, as for permutations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import perms
from .errors import CapExceeded, NotPrime
from .fp import FpMatrix, FpVector, identity_rows, is_prime, mat_inv, mat_mul, vec_mat
from .perms import PermGroup, compose, inverse


class PermElement:
    __slots__ = ("perm", "_hash")

    def __init__(self, perm: Sequence[int]):
        self.perm = tuple(perm)
        self._hash = hash(self.perm)

    def __mul__(self, other: "PermElement") -> "PermElement":
        return PermElement(compose(self.perm, other.perm))

    def inverse(self) -> "PermElement":
        return PermElement(inverse(self.perm))

    def is_identity(self) -> bool:
        return perms.is_identity(self.perm)

    def identity(self) -> "PermElement":
        return PermElement(range(len(self.perm)))

    def key(self):
        return self.perm

    def __eq__(self, other):
        return isinstance(other, PermElement) and self.perm == other.perm

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PermElement({perms.cycle_string(self.perm)})"


# -- affine ---------------------------------------------------------------------


@lru_cache(maxsize=1 << 20)
def _vm(v: tuple, M: tuple, p: int) -> tuple:
    return vec_mat(v, M, p)


class AffineElement:
    """The element n·M of F_p^k ⋊ GL_k(p).

    ``(n, M)(m, L) = (n + m @ M^-1, M L)`` and a translation ``v`` conjugated by
    ``(n, M)`` becomes ``v @ M``.
    """

    __slots__ = ("p", "n", "M", "_hash")

    def __init__(self, p: int, n: Sequence[int], M: Sequence[Sequence[int]]):
        self.p = p
        self.n = tuple(x % p for x in n)
        self.M = tuple(tuple(x % p for x in row) for row in M)
        if len(self.M) != len(self.n):
            raise ValueError("translation and matrix dimensions differ")
        self._hash = hash((self.n, self.M))

    @classmethod
    def _raw(cls, p, n, M):
        obj = cls.__new__(cls)
        obj.p, obj.n, obj.M = p, n, M
        obj._hash = hash((n, M))
        return obj

    @classmethod
    def translation(cls, v: FpVector | Sequence[int], p: int | None = None) -> "AffineElement":
        if isinstance(v, FpVector):
            p, v = v.p, v.entries
        return cls(p, v, identity_rows(len(v)))

    @classmethod
    def linear(cls, M: FpMatrix) -> "AffineElement":
        return cls(M.p, (0,) * M.dim, M.rows)

    @property
    def dim(self):
        return len(self.n)

    @property
    def translation_part(self) -> FpVector:
        return FpVector(self.p, self.n)

    @property
    def linear_part(self) -> FpMatrix:
        return FpMatrix(self.p, self.M)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        if self.p != other.p or len(self.n) != len(other.n):
            raise ValueError("dimension or modulus mismatch")
        p = self.p
        if any(other.n):
            m = _vm(other.n, mat_inv(self.M, p), p)
            n = tuple([(a + b) % p for a, b in zip(self.n, m)])
        else:
            n = self.n
        return AffineElement._raw(p, n, mat_mul(self.M, other.M, p))

    def inverse(self) -> "AffineElement":
        p = self.p
        n = _vm(tuple(-x % p for x in self.n), self.M, p)
        return AffineElement._raw(p, n, mat_inv(self.M, p))

    def __pow__(self, k: int) -> "AffineElement":
        return _power(self, k)

    def is_identity(self) -> bool:
        return not any(self.n) and self.M == identity_rows(len(self.n))

    def is_translation(self) -> bool:
        return self.M == identity_rows(len(self.n))

    def identity(self) -> "AffineElement":
        k = len(self.n)
        return AffineElement._raw(self.p, (0,) * k, identity_rows(k))

    def key(self):
        return (self.M, self.n)

    def __eq__(self, other):
        return isinstance(other, AffineElement) and self.n == other.n and self.M == other.M

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AffineElement(p={self.p}, n={self.n}, M={self.M})"


# -- wreath -----------------------------------------------------------------------


class WreathElement:
    """The element x·p of T^m ⋊ S_m.

    ``(x, p)(y, q) = (x_j * y_{p(j)}, p then q)``; conjugating a pure tuple by a
    pure permutation ``p`` moves coordinate ``i`` to ``p[i]``.
    """

    __slots__ = ("x", "top", "_hash")

    def __init__(self, x: Sequence[Sequence[int]], top: Sequence[int] | None = None):
        self.x = tuple(tuple(t) for t in x)
        self.top = tuple(top) if top is not None else tuple(range(len(self.x)))
        if len(self.top) != len(self.x):
            raise ValueError("arity mismatch between tuple and top permutation")
        self._hash = hash((self.x, self.top))

    @classmethod
    def _raw(cls, x, top):
        obj = cls.__new__(cls)
        obj.x, obj.top = x, top
        obj._hash = hash((x, top))
        return obj

    @classmethod
    def top_only(cls, top: Sequence[int], t_degree: int) -> "WreathElement":
        e = tuple(range(t_degree))
        return cls((e,) * len(top), top)

    @property
    def arity(self):
        return len(self.x)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if len(self.x) != len(other.x):
            raise ValueError("arity mismatch")
        p = self.top
        y = other.x
        x = tuple(compose(xj, y[p[j]]) for j, xj in enumerate(self.x))
        return WreathElement._raw(x, compose(p, other.top))

    def inverse(self) -> "WreathElement":
        p = self.top
        pinv = inverse(p)
        x = tuple(inverse(self.x[pinv[k]]) for k in range(len(p)))
        return WreathElement._raw(x, pinv)

    def __pow__(self, k: int) -> "WreathElement":
        return _power(self, k)

    def conj(self, by: "WreathElement") -> "WreathElement":
        """self^by = by^-1 · self · by."""
        return by.inverse() * self * by

    def in_base(self) -> bool:
        return perms.is_identity(self.top)

    def is_identity(self) -> bool:
        return self.in_base() and all(perms.is_identity(t) for t in self.x)

    def identity(self) -> "WreathElement":
        m = len(self.x)
        e = tuple(range(len(self.x[0])))
        return WreathElement._raw((e,) * m, tuple(range(m)))

    def key(self):
        return (self.top, self.x)

    def __eq__(self, other):
        return isinstance(other, WreathElement) and self.x == other.x and self.top == other.top

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WreathElement(x={self.x}, top={perms.cycle_string(self.top)})"


def _power(x, k: int):
    if k < 0:
        x, k = x.inverse(), -k
    result = x.identity()
    base = x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def conj(h, g):
    """h^g = g^-1 h g for any element kind."""
    return g.inverse() * h * g


# -- simple groups ----------------------------------------------------------------


@dataclass(frozen=True)
class SimpleGroupT:
    """A simple group given as a permutation group with a distinguished
    generating pair (a, b) and an overgroup inducing Aut(T) by conjugation."""

    name: str
    carrier: PermGroup
    a: tuple
    b: tuple
    aut_group: PermGroup

    @property
    def degree(self):
        return self.carrier.degree

    @property
    def identity(self):
        return tuple(range(self.degree))

    def order(self) -> int:
        return self.carrier.order()

    def mul(self, *xs):
        out = self.identity
        for x in xs:
            out = compose(out, x)
        return out

    def elements(self) -> list:
        return self._elements

    def automorphisms(self) -> list:
        """Elements of the overgroup; each acts on T by conjugation."""
        return self._automorphisms

    @cached_property
    def _elements(self):
        return self.carrier.elements()

    @cached_property
    def _automorphisms(self):
        return self.aut_group.elements()

    def evaluate(self, word: str) -> tuple:
        """Evaluate a word in a and b.

        Accepts juxtaposition, integer exponents (``b2``, ``b^2``, ``b^{-1}``),
        a postfix ``-`` for inversion, parentheses, and conjugation written as
        an exponent that is itself a word (``b^{ab^2}`` means ``(ab^2)^-1 b ab^2``).
        """
        return _WordParser(self, word).parse()


class _WordParser:
    def __init__(self, T: SimpleGroupT, text: str):
        self.T = T
        self.s = re.sub(r"\s+", "", text)
        self.i = 0

    def parse(self):
        out = self.word(end=None)
        if self.i != len(self.s):
            raise ValueError(f"unexpected {self.s[self.i:]!r} in word")
        return out

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else None

    def word(self, end):
        out = self.T.identity
        while self.peek() is not None and self.peek() != end:
            out = compose(out, self.factor())
        return out

    def atom(self):
        c = self.peek()
        if c in ("a", "b"):
            self.i += 1
            return self.T.a if c == "a" else self.T.b
        if c == "1":
            self.i += 1
            return self.T.identity
        if c == "(":
            self.i += 1
            x = self.word(end=")")
            self.i += 1
            return x
        raise ValueError(f"bad word near {self.s[self.i:]!r}")

    def integer(self):
        m = re.match(r"-?\d+", self.s[self.i :])
        if not m:
            return None
        self.i += m.end()
        return int(m.group())

    def factor(self):
        x = self.atom()
        while True:
            c = self.peek()
            if c is not None and c.isdigit():
                x = perms.power(x, self.integer())
            elif c == "-":
                self.i += 1
                x = inverse(x)
            elif c == "^":
                self.i += 1
                if self.peek() == "{":
                    self.i += 1
                    start = self.i
                    k = self.integer()
                    if k is not None and self.peek() == "}":
                        self.i += 1
                        x = perms.power(x, k)
                    else:
                        self.i = start
                        w = self.word(end="}")
                        self.i += 1
                        x = perms.conjugate(x, w)
                else:
                    k = self.integer()
                    if k is not None:
                        x = perms.power(x, k)
                    else:
                        x = perms.conjugate(x, self.atom())
            else:
                return x


def _projective_action(p: int, M: Sequence[Sequence[int]]) -> tuple:
    """Permutation of the projective line induced by v -> v M on row vectors.

    Point z in 0..p-1 is [z : 1]; point p is [1 : 0].
    """

    def index(x, y):
        if y % p == 0:
            return p
        return x * pow(y, -1, p) % p

    pts = [(z, 1) for z in range(p)] + [(1, 0)]
    return tuple(
        index(x * M[0][0] + y * M[1][0], x * M[0][1] + y * M[1][1]) for x, y in pts
    )


def _nonsquare(p: int) -> int:
    return next(c for c in range(2, p) if pow(c, (p - 1) // 2, p) == p - 1)


def make_psl2(p: int) -> SimpleGroupT:
    """PSL_2(p) on the p+1 points of the projective line, with Aut = PGL_2(p)."""
    if not is_prime(p) or p < 5:
        raise NotPrime(f"PSL_2(p) needs a prime p >= 5, got {p}")
    a = _projective_action(p, ((0, 1), (-1, 0)))
    b = _projective_action(p, ((0, 1), (-1, 1)))
    carrier = PermGroup([a, b])
    delta = _projective_action(p, ((_nonsquare(p), 0), (0, 1)))
    aut = PermGroup([a, b, delta])
    return SimpleGroupT(f"PSL2({p})", carrier, a, b, aut)


def make_a5() -> SimpleGroupT:
    """A_5 on 5 points with a of order 2, b of order 3 and ab of order 5."""
    from itertools import permutations

    evens = [q for q in permutations(range(5)) if _is_even(q)]
    invols = sorted(q for q in evens if perms.order(q) == 2)
    threes = sorted(q for q in evens if perms.order(q) == 3)
    a, b = next((x, y) for x in invols for y in threes if perms.order(compose(x, y)) == 5)
    carrier = PermGroup([a, b])
    aut = PermGroup([a, b, (1, 0, 2, 3, 4)])
    return SimpleGroupT("A5", carrier, a, b, aut)


def _is_even(q) -> bool:
    return sum(len(c) - 1 for c in perms.cycles(q)) % 2 == 0


# -- closures ---------------------------------------------------------------------


def small_group_closure(gens: Iterable, cap: int = 10**6) -> frozenset:
    """Every element of the group generated by ``gens`` (all of one kind)."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    kinds = {type(g) for g in gens}
    if len(kinds) != 1:
        raise TypeError("generators must all be of one element kind")
    e = gens[0].identity()
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > cap:
            raise CapExceeded(f"closure exceeds {cap} elements")
        frontier = nxt
    return frozenset(seen)
