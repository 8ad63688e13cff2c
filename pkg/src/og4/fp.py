"""Linear algebra and polynomials over a prime field F_p, and a handful of
elementary number theory helpers.

Vectors are row vectors and matrices act on the right (``v @ M``), matching
how conjugation by a linear map is written on the translation subgroup.
Residues are always stored in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import NotCoprime, NotMonic, TooLarge

EXHAUSTIVE_LIMIT = 10**6

Matrix = tuple  # tuple of row tuples


# -- raw tuple helpers (hot paths) --------------------------------------------


@lru_cache(maxsize=64)
def identity_rows(k: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


@lru_cache(maxsize=1 << 16)
def mat_mul(A: Matrix, B: Matrix, p: int) -> Matrix:
    cols = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols) for row in A)


@lru_cache(maxsize=1 << 16)
def mat_inv(A: Matrix, p: int) -> Matrix:
    k = len(A)
    aug = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(A)]
    for c in range(k):
        piv = next((r for r in range(c, k) if aug[r][c] % p), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular mod p")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[k:]) for row in aug)


def vec_mat(v: Sequence[int], A: Matrix, p: int) -> tuple:
    k = len(A[0])
    out = [0] * k
    for x, row in zip(v, A):
        if x:
            for j in range(k):
                out[j] += x * row[j]
    return tuple(y % p for y in out)


def row_echelon(rows: Iterable[Sequence[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form of the span of ``rows`` (nonzero rows only)."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for v in rows:
        w = _reduce(list(v), basis, pivots, p)
        if any(w):
            _insert(w, basis, pivots, p)
    return basis


def _reduce(w, basis, pivots, p):
    for b, c in zip(basis, pivots):
        if w[c]:
            f = w[c]
            w = [(x - f * y) % p for x, y in zip(w, b)]
    return w


def _insert(w, basis, pivots, p):
    c = next(i for i, x in enumerate(w) if x)
    inv = pow(w[c], -1, p)
    w = [x * inv % p for x in w]
    for i, b in enumerate(basis):
        if b[c]:
            f = b[c]
            basis[i] = [(x - f * y) % p for x, y in zip(b, w)]
    basis.append(w)
    pivots.append(c)


def rank(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(row_echelon(rows, p))


# -- value types ----------------------------------------------------------------


@dataclass(frozen=True)
class FpVector:
    p: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(x % self.p for x in self.entries))

    @property
    def dim(self):
        return len(self.entries)

    def __add__(self, other):
        return FpVector(self.p, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return FpVector(self.p, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return FpVector(self.p, tuple(-a for a in self.entries))

    def scale(self, c: int):
        return FpVector(self.p, tuple(c * a for a in self.entries))

    def __matmul__(self, M: "FpMatrix"):
        return FpVector(self.p, vec_mat(self.entries, M.rows, self.p))

    def is_zero(self):
        return not any(self.entries)

    @classmethod
    def basis(cls, p: int, k: int, i: int) -> "FpVector":
        """Standard basis vector e_i (0-based ``i``)."""
        return cls(p, tuple(int(j == i) for j in range(k)))


@dataclass(frozen=True)
class FpMatrix:
    p: int
    rows: Matrix

    def __post_init__(self):
        rows = tuple(tuple(x % self.p for x in row) for row in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self):
        return len(self.rows)

    @classmethod
    def identity(cls, p: int, k: int) -> "FpMatrix":
        return cls(p, identity_rows(k))

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.dim != other.dim:
            raise ValueError("dimension or modulus mismatch")
        return FpMatrix(self.p, mat_mul(self.rows, other.rows, self.p))

    def __add__(self, other):
        return FpMatrix(self.p, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c):
        return FpMatrix(self.p, tuple(tuple(c * a for a in r) for r in self.rows))

    def inverse(self) -> "FpMatrix":
        return FpMatrix(self.p, mat_inv(self.rows, self.p))

    def __pow__(self, k: int) -> "FpMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = FpMatrix.identity(self.p, self.dim)
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_identity(self):
        return self.rows == identity_rows(self.dim)

    def is_invertible(self):
        return rank(self.rows, self.p) == self.dim

    def order(self, limit: int = 10**6) -> int:
        x = self
        for n in range(1, limit + 1):
            if x.is_identity():
                return n
            x = x @ self
        raise ValueError("order exceeds limit")

    def evaluate(self, f: "FpPoly") -> "FpMatrix":
        """f(M) by Horner's rule."""
        acc = FpMatrix(self.p, tuple((0,) * self.dim for _ in range(self.dim)))
        one = FpMatrix.identity(self.p, self.dim)
        for c in reversed(f.coeffs):
            acc = acc @ self + one.scale(c)
        return acc


# -- polynomials ------------------------------------------------------------------


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p with coefficients listed from the constant term up."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        c = [x % self.p for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @classmethod
    def X(cls, p):
        return cls(p, (0, 1))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly(self.p, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return FpPoly(self.p, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return FpPoly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return FpPoly(self.p, tuple(out))

    def __divmod__(self, other):
        if not other.coeffs:
            raise ZeroDivisionError
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FpPoly(p, ()), self
        quot = [0] * (dq + 1)
        inv = pow(other.coeffs[-1], -1, p)
        for shift in range(dq, -1, -1):
            c = rem[shift + len(other.coeffs) - 1] * inv % p
            quot[shift] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * y) % p
        return FpPoly(p, tuple(quot)), FpPoly(p, tuple(rem))

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def is_zero(self):
        return not self.coeffs

    def monic(self):
        inv = pow(self.coeffs[-1], -1, self.p)
        return FpPoly(self.p, tuple(c * inv for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms)


def poly_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def poly_powmod(base: FpPoly, e: int, mod: FpPoly) -> FpPoly:
    result = FpPoly(base.p, (1,)) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def repunit_poly(p: int, degree: int) -> FpPoly:
    """X^degree + ... + X + 1."""
    return FpPoly(p, (1,) * (degree + 1))


def companion_matrix(f: FpPoly) -> FpMatrix:
    """Companion matrix with 1s on the subdiagonal and the negated
    coefficients c_0..c_{k-1} of ``f`` down the last column."""
    if f.degree < 1 or not f.is_monic():
        raise NotMonic(f"companion matrix needs a monic polynomial of degree >= 1, got {f}")
    k = f.degree
    rows = []
    for i in range(k):
        row = [0] * k
        if i > 0:
            row[i - 1] = 1
        row[k - 1] = -f.coeffs[i]
        rows.append(tuple(row))
    return FpMatrix(f.p, tuple(rows))


def is_irreducible(f: FpPoly) -> bool:
    """Ben-Or test: f has no factor of degree i <= deg/2, via gcd with X^(p^i) - X."""
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    if f.degree == 1:
        return True
    X = FpPoly.X(f.p)
    h = X
    for _ in range(f.degree // 2):
        h = poly_powmod(h, f.p, f)
        if poly_gcd(f, h - X).degree > 0:
            return False
    return True


# -- number theory ----------------------------------------------------------------


def multiplicative_order(p: int, r: int) -> int:
    """Least l >= 1 with p^l = 1 mod r."""
    if r < 1:
        raise ValueError("modulus must be positive")
    if gcd(p, r) != 1:
        raise NotCoprime(f"gcd({p}, {r}) != 1")
    if r == 1:
        return 1
    x = p % r
    k = 1
    while x != 1:
        x = x * p % r
        k += 1
    return k


def euler_phi(n: int) -> int:
    result = n
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def is_primitive_root(p: int, r: int) -> bool:
    return multiplicative_order(p, r) == r - 1


def gcd_power_identity_check(a: int, m: int, n: int) -> bool:
    """Check gcd(a^m - 1, a^n - 1) == a^gcd(m, n) - 1 by computing both sides."""
    lhs = gcd(a**m - 1, a**n - 1)
    rhs = a ** gcd(m, n) - 1
    return lhs == rhs


def dihedral_rep_degrees(p: int, r: int) -> set[int]:
    """Candidate degrees of faithful irreducible D_r-modules over F_p.

    With l the order of p mod r these are l itself, and 2l when
    l <= phi(r)/2.
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    ell = multiplicative_order(p, r)
    out = {ell}
    if 2 * ell <= euler_phi(r):
        out.add(2 * ell)
    return out


# -- invariant subspaces --------------------------------------------------------


def _check_gens(gens: Sequence[FpMatrix]) -> tuple[int, int]:
    if not gens:
        raise ValueError("need at least one matrix")
    p, k = gens[0].p, gens[0].dim
    if any(M.p != p or M.dim != k for M in gens):
        raise ValueError("matrices must share modulus and dimension")
    return p, k


def spin(v: Sequence[int], gens: Sequence[FpMatrix]) -> list[list[int]]:
    """Echelon basis of the smallest subspace containing ``v`` and invariant under ``gens``."""
    p = gens[0].p
    basis: list[list[int]] = []
    pivots: list[int] = []
    queue = []
    w = _reduce(list(x % p for x in v), basis, pivots, p)
    if any(w):
        _insert(w, basis, pivots, p)
        queue.append(tuple(x % p for x in v))
    for u in queue:
        for M in gens:
            img = vec_mat(u, M.rows, p)
            w = _reduce(list(img), basis, pivots, p)
            if any(w):
                _insert(w, basis, pivots, p)
                queue.append(img)
    return basis


def _line_representatives(p: int, k: int):
    """One nonzero vector per 1-dimensional subspace: the last nonzero entry is 1."""
    for lead in range(k):
        for code in range(p**lead):
            v = []
            for _ in range(lead):
                code, d = divmod(code, p)
                v.append(d)
            yield tuple(v) + (1,) + (0,) * (k - lead - 1)


def find_invariant_subspace(gens: Sequence[FpMatrix]) -> list[list[int]] | None:
    """A proper nonzero invariant subspace (as an echelon basis), or None.

    Every line is spun (a vector and its multiples span the same
    invariant subspace), so None certifies irreducibility.
    """
    p, k = _check_gens(gens)
    if p**k > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"p^dim = {p}^{k} exceeds {EXHAUSTIVE_LIMIT}")
    for v in _line_representatives(p, k):
        W = spin(v, gens)
        if len(W) < k:
            return W
    return None


def exhaustive_irreducibility(gens: Sequence[FpMatrix]) -> bool:
    return find_invariant_subspace(gens) is None


# -- named matrices --------------------------------------------------------------


def antidiagonal(p: int, k: int, value: int = -1) -> FpMatrix:
    return FpMatrix(p, tuple(tuple(value if j == k - 1 - i else 0 for j in range(k)) for i in range(k)))


def cyclic_permutation_matrix(p: int, k: int) -> FpMatrix:
    """Permutation matrix sending e_i to e_{i+1} (indices mod k) under v @ M."""
    return FpMatrix(p, tuple(tuple(int(j == (i + 1) % k) for j in range(k)) for i in range(k)))


def diagonal_sign(p: int, k: int, i: int) -> FpMatrix:
    """Diagonal matrix with -1 in position (i, i) (0-based) and 1 elsewhere."""
    return FpMatrix(p, tuple(tuple((-1 if a == i else 1) if a == b else 0 for b in range(k)) for a in range(k)))
