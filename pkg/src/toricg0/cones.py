"""Full-dimensional simplicial lattice cones and their unimodular normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .linalg import (
    IntMatrix,
    NotUnimodularError,
    complete_to_unimodular,
    content,
    determinant,
    dot,
    extended_gcd,
    primitive,
    solve_rational,
    unimodular_inverse,
)


class ConeError(ValueError):
    """Invalid generator data for a simplicial cone."""


class WrongGeneratorCount(ConeError):
    pass


class ZeroGenerator(ConeError):
    pass


class DependentGenerators(ConeError):
    pass


@dataclass(frozen=True)
class SimplicialCone:
    """Cone spanned by ``n`` primitive, linearly independent vectors of ``Z^n``.

    Build through :func:`make_cone`; the constructor itself re-checks the
    invariants but does not primitivize.
    """

    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        n = len(gens)
        if n == 0 or any(len(g) != n for g in gens):
            raise WrongGeneratorCount(f"need n generators of length n, got {gens}")
        for g in gens:
            if content(g) != 1:
                raise ConeError(f"generator {g} is not primitive")
        if determinant(self.matrix()) == 0:
            raise DependentGenerators(f"dependent generators {gens}")

    @property
    def ambient_dim(self) -> int:
        return len(self.generators)

    def matrix(self) -> IntMatrix:
        """Generators as columns."""
        return IntMatrix.from_columns(self.generators)

    def __str__(self) -> str:
        return ",".join("(" + ",".join(map(str, g)) + ")" for g in self.generators)


def make_cone(raw_generators: Sequence[Sequence[int]]) -> SimplicialCone:
    gens = [tuple(g) for g in raw_generators]
    n = len(gens)
    if n == 0:
        raise WrongGeneratorCount("no generators given")
    for i, g in enumerate(gens):
        if len(g) != n:
            raise WrongGeneratorCount(
                f"generator {i + 1} has length {len(g)}; {n} generators need length {n}")
    for i, g in enumerate(gens):
        if content(g) == 0:
            raise ZeroGenerator(f"generator {i + 1} is the zero vector")
    gens = [primitive(g) for g in gens]
    if determinant(IntMatrix.from_columns(gens)) == 0:
        raise DependentGenerators("dependent generators: determinant is 0")
    return SimplicialCone(tuple(gens))


def delta(cone: SimplicialCone) -> int:
    """Determinant of the matrix with the generators as columns."""
    return determinant(cone.matrix())


@dataclass(frozen=True)
class Face:
    """Face spanned by the generators at ``indices`` (0-based, sorted)."""

    indices: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.indices)

    def generators(self, cone: SimplicialCone) -> list[tuple[int, ...]]:
        return [cone.generators[i] for i in self.indices]


def faces(cone: SimplicialCone, d: int) -> list[Face]:
    n = cone.ambient_dim
    if not 0 <= d <= n:
        raise ValueError(f"face dimension {d} outside 0..{n}")
    return [Face(c) for c in combinations(range(n), d)]


def dual_cone(cone: SimplicialCone) -> list[tuple[int, ...]]:
    """Primitive generators of the dual cone.

    The ``i``-th output pairs positively with generator ``i`` and vanishes on
    all the others.
    """
    G = cone.matrix()
    n = cone.ambient_dim
    out = []
    for i in range(n):
        # row i of adj(G): cofactors of the i-th column
        row = []
        for j in range(n):
            minor = [[G[r, c] for c in range(n) if c != i] for r in range(n) if r != j]
            row.append((-1) ** (i + j) * determinant(IntMatrix.from_rows(minor, n - 1)))
        y = primitive(row)
        if dot(y, cone.generators[i]) < 0:
            y = tuple(-x for x in y)
        out.append(y)
    return out


def contains(cone: SimplicialCone, point: Sequence[int]) -> bool:
    if len(point) != cone.ambient_dim:
        raise ValueError("point has the wrong length")
    return all(c >= 0 for c in solve_rational(cone.matrix(), list(point)))


def in_dual(cone: SimplicialCone, point: Sequence[int]) -> bool:
    """``point`` pairs nonnegatively with every generator."""
    return all(dot(point, u) >= 0 for u in cone.generators)


@dataclass(frozen=True)
class UnimodularTransform:
    matrix: IntMatrix

    def __post_init__(self):
        if not self.matrix.is_square() or abs(determinant(self.matrix)) != 1:
            raise NotUnimodularError(f"not unimodular:\n{self.matrix}")

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.matrix @ v

    def __matmul__(self, other: "UnimodularTransform") -> "UnimodularTransform":
        return UnimodularTransform(self.matrix @ other.matrix)

    def image(self, cone: SimplicialCone) -> SimplicialCone:
        return SimplicialCone(tuple(self(g) for g in cone.generators))

    def inverse(self) -> "UnimodularTransform":
        return UnimodularTransform(unimodular_inverse(self.matrix))


def dual_transform(A: UnimodularTransform | IntMatrix) -> UnimodularTransform:
    """Inverse transpose; carries the dual of a cone to the dual of its image."""
    M = A.matrix if isinstance(A, UnimodularTransform) else A
    return UnimodularTransform(unimodular_inverse(M).T)


def _require_dim(cone: SimplicialCone, n: int):
    if cone.ambient_dim != n:
        raise ValueError(f"expected a {n}-dimensional cone, got dimension {cone.ambient_dim}")


def normalize_2d(cone: SimplicialCone) -> tuple[UnimodularTransform, SimplicialCone]:
    """Map a plane cone to the one spanned by ``e1`` and ``a*e1 + b*e2``.

    ``a, b > 0`` are coprime, ``b = |delta|`` and ``a`` is the least
    positive value reachable by a shear, so ``1 <= a <= b``.
    """
    _require_dim(cone, 2)
    (x1, y1), (x2, y2) = cone.generators
    _, a, b = extended_gcd(x1, y1)
    M = IntMatrix.from_rows([[a, b], [-y1, x1]])
    if x1 * y2 - x2 * y1 < 0:
        M = IntMatrix.from_rows([[1, 0], [0, -1]]) @ M
    p, q = primitive(M @ (x2, y2))
    m = (-p) // q + 1
    M = IntMatrix.from_rows([[1, m], [0, 1]]) @ M
    T = UnimodularTransform(M)
    image = T.image(cone)
    assert image.generators[0] == (1, 0) and image.generators[1][0] > 0 < image.generators[1][1]
    return T, image


def normalize_3d(cone: SimplicialCone) -> tuple[UnimodularTransform, SimplicialCone]:
    """Map a 3-cone to generators ``e1, a*e1 + b*e2, c*e1 + d*e2 + e*e3``.

    ``b > 0``, ``e != 0`` and ``|b*e| = |delta|``.
    """
    _require_dim(cone, 3)
    u1, u2, _ = cone.generators
    Minv = unimodular_inverse(complete_to_unimodular(u1))
    _, a2, a3 = Minv @ u2
    d = content((a2, a3))
    # second and third columns of phi: (0, A2, A3) and (0, B2, B3)
    A3, B3 = -a3 // d, a2 // d
    _, A2, B2 = extended_gcd(B3, -A3)
    N = IntMatrix.from_rows([[1, 0, 0], [0, A2, B2], [0, A3, B3]])
    T = UnimodularTransform(N @ Minv)
    image = T.image(cone)
    g1, g2, g3 = image.generators
    assert g1 == (1, 0, 0) and g2[1] > 0 and g2[2] == 0 and g3[2] != 0
    return T, image
