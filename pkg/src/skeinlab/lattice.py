"""Exact integer lattices: normal forms, indices, quotients and point counts.

Matrices are lists of rows of Python integers.  A :class:`LatticeSubgroup`
is the subgroup of Z^r generated by a finite list of vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exceptions import NotContainedError, ResourceLimitError
from .config import max_points

Matrix = list[list[int]]
Vector = tuple[int, ...]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U M V = D, U and V unimodular, d_i | d_{i+1}.

    Pivots are chosen with minimum absolute value to limit entry growth.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = identity(m), identity(n)

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:  # row dst += q * row src
        if q:
            A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, q: int) -> None:  # col dst += q * col src
        if q:
            for row in A:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                return U, A, V
            _, bi, bj = best
            swap_rows(t, bi)
            swap_cols(t, bj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


def hermite_rows(gens: Iterable[Sequence[int]], r: int) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``gens``.

    The result is in echelon form with positive pivots and entries above
    each pivot reduced into [0, pivot).  It is canonical for the lattice.
    """
    A = [list(map(int, g)) for g in gens if any(g)]
    for g in A:
        if len(g) != r:
            raise ValueError("generator length does not match ambient rank")
    k = 0
    pivots: list[int] = []
    for c in range(r):
        while True:
            nz = [i for i in range(k, len(A)) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[k], A[piv] = A[piv], A[k]
            done = True
            for i in range(k + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[k][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if k < len(A) and A[k][c]:
            if A[k][c] < 0:
                A[k] = [-a for a in A[k]]
            for i in range(k):
                q = A[i][c] // A[k][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
            pivots.append(c)
            k += 1
            A = A[:k] + [row for row in A[k:] if any(row)]
    return [tuple(row) for row in A[:k]]


@dataclass(frozen=True)
class LatticeSubgroup:
    """The subgroup of Z^r generated by ``generators``."""

    ambient_rank: int
    generators: tuple[Vector, ...] = field(default=())

    @classmethod
    def of(cls, r: int, gens: Iterable[Sequence[int]]) -> "LatticeSubgroup":
        return cls(r, tuple(tuple(int(x) for x in g) for g in gens))

    @classmethod
    def full(cls, r: int) -> "LatticeSubgroup":
        return cls.of(r, identity(r))

    @classmethod
    def zero(cls, r: int) -> "LatticeSubgroup":
        return cls(r, ())

    @cached_property
    def basis(self) -> tuple[Vector, ...]:
        return tuple(hermite_rows(self.generators, self.ambient_rank))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeSubgroup):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.basis))

    def __add__(self, other: "LatticeSubgroup") -> "LatticeSubgroup":
        if other.ambient_rank != self.ambient_rank:
            raise ValueError("ambient ranks differ")
        return LatticeSubgroup(self.ambient_rank, self.basis + other.basis)

    def scaled(self, k: int) -> "LatticeSubgroup":
        return LatticeSubgroup(self.ambient_rank, tuple(tuple(k * x for x in b) for b in self.basis))

    def coordinates(self, x: Sequence[int]) -> Vector | None:
        """Integer coordinates of x in :attr:`basis`, or None if x is not in the lattice."""
        if len(x) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        rem = list(map(int, x))
        coords = []
        for row in self.basis:
            c = next(j for j, a in enumerate(row) if a)
            q, rmd = divmod(rem[c], row[c])
            if rmd:
                return None
            coords.append(q)
            if q:
                rem = [a - q * b for a, b in zip(rem, row)]
        return tuple(coords) if not any(rem) else None

    def contains(self, x: Sequence[int]) -> bool:
        return self.coordinates(x) is not None

    def contains_lattice(self, other: "LatticeSubgroup") -> bool:
        return all(self.contains(b) for b in other.basis)

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.basis]


@dataclass(frozen=True)
class QuotientDescriptor:
    """Invariant factors (each >= 2) and free rank of a finitely generated abelian group."""

    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    @property
    def order(self) -> float | int:
        if self.free_rank:
            return math.inf
        return math.prod(self.invariant_factors)


class Quotient:
    """The quotient ambient/sub with a canonical reduction map."""

    def __init__(self, sub: LatticeSubgroup, ambient: LatticeSubgroup | None = None):
        if ambient is None:
            ambient = LatticeSubgroup.full(sub.ambient_rank)
        if ambient.ambient_rank != sub.ambient_rank:
            raise ValueError("ambient ranks differ")
        self.sub, self.ambient = sub, ambient
        rows = []
        for b in sub.basis:
            y = ambient.coordinates(b)
            if y is None:
                raise NotContainedError("subgroup is not contained in the ambient lattice")
            rows.append(list(y))
        k = ambient.rank
        if not rows:
            self.U, self.D, self.V = [], [], identity(k)
            diag: list[int] = []
        else:
            self.U, self.D, self.V = smith_normal_form(rows)
            diag = [self.D[i][i] for i in range(min(len(rows), k))]
        self.diag = diag + [0] * (k - len(diag))

    @property
    def descriptor(self) -> QuotientDescriptor:
        facs = tuple(d for d in self.diag if d > 1)
        return QuotientDescriptor(facs, sum(1 for d in self.diag if d == 0))

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        y = self.ambient.coordinates(x)
        if y is None:
            raise NotContainedError(f"{tuple(x)} is not in the ambient lattice")
        k = len(y)
        z = [sum(y[i] * self.V[i][j] for i in range(k)) for j in range(k)]
        out = []
        for zj, d in zip(z, self.diag):
            if d == 0:
                out.append(zj)
            elif d > 1:
                out.append(zj % d)
        return tuple(out)


def quotient(sub: LatticeSubgroup, ambient: LatticeSubgroup) -> QuotientDescriptor:
    return Quotient(sub, ambient).descriptor


def index(sub: LatticeSubgroup, ambient: LatticeSubgroup) -> float | int:
    """[ambient : sub], or math.inf when sub has smaller rank."""
    return quotient(sub, ambient).order


def reduce_mod(sub: LatticeSubgroup, x: Sequence[int], ambient: LatticeSubgroup | None = None) -> tuple[int, ...]:
    """Canonical residue of x modulo sub (inside ``ambient``, default Z^r)."""
    return Quotient(sub, ambient).reduce(x)


# F_2 linear algebra on 0/1 vectors

def f2_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of {x in F_2^ncols : rows . x = 0}."""
    A = [[a % 2 for a in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                A[i] = [(a + b) % 2 for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = A[i][f] % 2
        basis.append(tuple(x))
    return basis


def f2_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return len(rows[0]) - len(f2_nullspace(rows, len(rows[0])))


def preimage_lattice(vectors_mod2: Iterable[Sequence[int]], r: int) -> LatticeSubgroup:
    """The lattice of integer vectors whose reduction mod 2 lies in the given span."""
    gens = [tuple(x % 2 for x in v) for v in vectors_mod2]
    gens += [tuple(2 * int(i == j) for j in range(r)) for i in range(r)]
    return LatticeSubgroup.of(r, gens)


# lattice points in scaled regions

@dataclass(frozen=True)
class Region:
    """A bounded region {lower <= x <= upper, A x <= b} with rational data."""

    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]
    inequalities: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = ()

    @classmethod
    def make(
        cls,
        lower: Sequence,
        upper: Sequence,
        inequalities: Sequence[tuple[Sequence, object]] = (),
    ) -> "Region":
        if len(lower) != len(upper):
            raise ValueError("box bounds differ in length")
        lo = tuple(Fraction(x) for x in lower)
        hi = tuple(Fraction(x) for x in upper)
        ineq = tuple((tuple(Fraction(a) for a in row), Fraction(b)) for row, b in inequalities)
        for row, _ in ineq:
            if len(row) != len(lo):
                raise ValueError("inequality length differs from dimension")
        return cls(lo, hi, ineq)

    @classmethod
    def simplex(cls, d: int) -> "Region":
        """The standard simplex x >= 0, sum(x) <= 1."""
        return cls.make([0] * d, [1] * d, [([1] * d, 1)])

    @classmethod
    def cube(cls, d: int) -> "Region":
        return cls.make([0] * d, [1] * d)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def scaled(self, k) -> "Region":
        k = Fraction(k)
        return Region(
            tuple(k * x for x in self.lower),
            tuple(k * x for x in self.upper),
            tuple((row, k * b) for row, b in self.inequalities),
        )

    def contains(self, x: Sequence) -> bool:
        if any(not (lo <= xi <= hi) for lo, xi, hi in zip(self.lower, x, self.upper)):
            return False
        return all(sum(a * xi for a, xi in zip(row, x)) <= b for row, b in self.inequalities)


def _ceil_div(a: Fraction, b: int) -> int:
    return math.ceil(Fraction(a) / b)


def _floor_div(a: Fraction, b: int) -> int:
    return math.floor(Fraction(a) / b)


def count_points(sub: LatticeSubgroup, region: Region, k=1) -> int:
    """Exact number of lattice points of ``sub`` in the scaled region kQ.

    The lattice must have full rank.  Coordinates are enumerated along the
    triangular Hermite basis; the last coordinate is counted in closed form.
    """
    r = sub.ambient_rank
    if region.dim != r:
        raise ValueError("region dimension differs from ambient rank")
    if sub.rank != r:
        raise ValueError("point counting needs a full-rank lattice")
    Q = region.scaled(k)
    H = sub.basis
    cap = max_points()
    visited = 0
    total = 0
    x = [0] * r

    def rec(j: int, partial: list[int]) -> None:
        nonlocal visited, total
        h = H[j][j]
        lo = _ceil_div(Q.lower[j] - partial[j], h)
        hi = _floor_div(Q.upper[j] - partial[j], h)
        if lo > hi:
            return
        if j == r - 1:
            for row, b in Q.inequalities:
                fixed = sum(row[i] * x[i] for i in range(r - 1)) + row[j] * partial[j]
                coef = row[j] * h
                if coef > 0:
                    hi = min(hi, math.floor((b - fixed) / coef))
                elif coef < 0:
                    lo = max(lo, math.ceil((b - fixed) / coef))
                elif fixed > b:
                    return
            if hi >= lo:
                total += hi - lo + 1
            return
        for c in range(lo, hi + 1):
            visited += 1
            if visited > cap:
                raise ResourceLimitError(f"point enumeration exceeded {cap} candidates")
            x[j] = partial[j] + c * h
            nxt = [partial[i] + c * H[j][i] if i > j else partial[i] for i in range(r)]
            rec(j + 1, nxt)

    rec(0, [0] * r)
    return total
