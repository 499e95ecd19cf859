"""Exact integer linear algebra.

Everything here works on Python ints, so no value can overflow. Matrices are
small (desk scale, roughly 10x10 at most) and are stored densely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, prod
from typing import Iterable, Sequence


class NotSquareError(ValueError):
    pass


class NotUnimodularError(ValueError):
    pass


class InfiniteGroupError(ArithmeticError):
    """Raised when asking for the order of a group with positive free rank."""


def _check_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """Dense immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        for x in self.entries:
            _check_int(x)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        return cls.from_rows(columns, rows).T

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            return IntMatrix(self.rows, other.cols, tuple(
                sum(a * b for a, b in zip(self.row(i), c))
                for i in range(self.rows) for c in ocols))
        v = list(other)
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __str__(self) -> str:
        if not self.entries:
            return f"[{self.rows}x{self.cols} empty]"
        w = max(len(str(x)) for x in self.entries)
        return "\n".join("[" + " ".join(str(x).rjust(w) for x in self.row(i)) + "]"
                         for i in range(self.rows))


def as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix.from_rows(A)


# ---------------------------------------------------------------- gcd tools

def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) = a*x + b*y`` and ``g >= 0``.

    Among all Bezout pairs the one with the smallest ``|x|`` is returned,
    ties going to ``x >= 0``.

    >>> extended_gcd(240, 46)
    (2, -9, 47)
    """
    a, b = _check_int(a), _check_int(b)
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    g, x, y = old_r, old_x, old_y
    if g < 0:
        g, x, y = -g, -x, -y
    if g == 0:
        return 0, 0, 0
    step = abs(b // g)
    if step:
        r = x % step
        if 2 * r > step:
            r -= step
        # shift along (x + k*b/g, y - k*a/g)
        k = (r - x) // (b // g)
        x, y = x + k * (b // g), y - k * (a // g)
    assert a * x + b * y == g
    return g, x, y


def content(v: Iterable[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, (abs(_check_int(x)) for x in v), 0)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide ``v`` by the gcd of its entries."""
    c = content(v)
    if c == 0:
        raise ValueError("the zero vector has no primitive representative")
    return tuple(x // c for x in v)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------- determinants

def determinant(A) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    A = as_matrix(A)
    if not A.is_square():
        raise NotSquareError(f"determinant of a {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_inverse(A) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    A = as_matrix(A)
    if not A.is_square():
        raise NotSquareError("inverse of a non-square matrix")
    n = A.rows
    M = [[Fraction(x) for x in A.row(i)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def unimodular_inverse(A) -> IntMatrix:
    A = as_matrix(A)
    if not A.is_square() or abs(determinant(A)) != 1:
        raise NotUnimodularError("matrix is not unimodular")
    inv = rational_inverse(A)
    return IntMatrix.from_rows([[int(x) for x in row] for row in inv], A.rows)


def solve_rational(A, b: Sequence[int]) -> list[Fraction]:
    """Solve ``A x = b`` for square nonsingular ``A`` in exact rationals."""
    inv = rational_inverse(A)
    return [sum((x * y for x, y in zip(row, b)), Fraction(0)) for row in inv]


# -------------------------------------------------------- Smith normal form

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d)


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with unimodular witnesses.

    Each round moves the smallest nonzero entry of the trailing block to the
    pivot position, reduces its row and column, and repeats until the pivot
    divides everything left in the block.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row dst += f * row src
        for M in (D, U):
            M[dst] = [x + f * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, f):
        for M in (D, V):
            for r in M:
                r[dst] += f * r[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    Dm = IntMatrix.from_rows(D, n)
    return SmithDecomposition(
        U=IntMatrix.from_rows(U, m),
        D=Dm,
        V=IntMatrix.from_rows(V, n),
        invariant_factors=tuple(Dm[i, i] for i in range(min(m, n))),
    )


def rank(A) -> int:
    return smith_normal_form(A).rank


def kernel_basis(A) -> IntMatrix:
    """Columns form a lattice basis of ``{x in Z^n : A x = 0}``."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    r = snf.rank
    cols = [snf.V.col(j) for j in range(r, A.cols)]
    return IntMatrix.from_columns(cols, A.cols) if cols else IntMatrix.zeros(A.cols, 0)


def complete_to_unimodular(v: Sequence[int]) -> IntMatrix:
    """A unimodular matrix whose first column is the primitive vector ``v``."""
    v = tuple(_check_int(x) for x in v)
    if not v or content(v) != 1:
        raise ValueError(f"{v} is not a primitive nonzero vector")
    snf = smith_normal_form(IntMatrix.from_columns([v]))
    # U v V = e1 with V = (+-1)
    M = unimodular_inverse(snf.U).tolist()
    if snf.V[0, 0] == -1:
        for r in M:
            r[0] = -r[0]
    out = IntMatrix.from_rows(M, len(v))
    assert out.col(0) == v
    return out


# ------------------------------------------------------ abelian groups

@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z/t1 + ... + Z/tk`` with ``t1 | t2 | ... | tk``, all ``ti >= 2``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for t in self.torsion:
            if _check_int(t) < 2:
                raise ValueError(f"torsion coefficient {t} must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"{self.torsion} is not a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "AbelianGroup":
        """Normalize any product of cyclic groups ``Z/o`` (``o = 0`` meaning ``Z``)."""
        orders = [abs(o) for o in orders]
        free = free_rank + orders.count(0)
        finite = [o for o in orders if o > 1]
        inv = smith_normal_form(IntMatrix.diagonal(finite)).invariant_factors if finite else ()
        return cls(free, tuple(d for d in inv if d > 1))

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls.from_orders([n])

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def order(self) -> int:
        if self.free_rank:
            raise InfiniteGroupError(f"{self} is infinite")
        return prod(self.torsion)

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(self.torsion + other.torsion,
                                        self.free_rank + other.free_rank)

    def primary_parts(self) -> dict[int, tuple[int, ...]]:
        """Map each prime ``p`` to the sorted exponents of the ``p``-primary part."""
        parts: dict[int, list[int]] = {}
        for t in self.torsion:
            for p, e in factorint(t).items():
                parts.setdefault(p, []).append(e)
        return {p: tuple(sorted(es)) for p, es in sorted(parts.items())}

    def __str__(self) -> str:
        pieces = ["Z"] * self.free_rank + [f"C{t}" for t in self.torsion]
        return "×".join(pieces) if pieces else "0"


def factorint(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def cokernel(A) -> AbelianGroup:
    """``Z^rows`` modulo the column span of ``A``."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    return AbelianGroup(A.rows - snf.rank, tuple(d for d in snf.invariant_factors if d > 1))
