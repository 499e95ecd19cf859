"""Class groups and Chow groups of affine simplicial toric varieties.

The fan of the variety is the set of faces of one simplicial cone. The
codimension-``k`` Chow group is presented by the orbit closures of the
``k``-dimensional faces, with one relation for each ``(k-1)``-face ``tau`` and
each character ``m`` in a basis of ``tau^perp``::

    sum over k-faces s containing tau of  <m, n_{s,tau}> [V(s)] = 0

where ``n_{s,tau}`` is the primitive generator of the image of ``s`` in
``N / N_tau``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import Face, SimplicialCone, faces
from .linalg import (
    AbelianGroup,
    IntMatrix,
    cokernel,
    content,
    dot,
    kernel_basis,
    rank,
    smith_normal_form,
)


class InvariantViolation(AssertionError):
    """A computed object broke a property that is proven to hold."""


@dataclass(frozen=True)
class ChowReport:
    codim: int
    group: AbelianGroup
    generators_count: int
    relations_rank: int


def divisor_map(cone: SimplicialCone) -> IntMatrix:
    """Matrix of ``m -> div(chi^m)``: row ``i`` is generator ``i``."""
    return IntMatrix.from_rows(cone.generators)


def class_group(cone: SimplicialCone) -> AbelianGroup:
    return cokernel(divisor_map(cone))


def _quotient_projection(cone: SimplicialCone, tau: Face):
    """Return ``q`` with ``q(u)`` = coordinates of ``u`` in ``Z^n / N_tau``.

    ``N_tau`` is the saturation of the span of the face; in the basis
    produced by the Smith form its elements are exactly the vectors whose
    last ``n - dim tau`` coordinates vanish.
    """
    d = tau.dim
    if d == 0:
        return lambda u: tuple(u)
    U = smith_normal_form(IntMatrix.from_columns(tau.generators(cone))).U
    return lambda u: (U @ u)[d:]


def chow_relation_matrix(cone: SimplicialCone, k: int) -> IntMatrix:
    """Presentation matrix of the codimension-``k`` Chow group.

    One row per ``k``-face (generator), one column per relation, so the Chow
    group is the cokernel ``Z^rows / column span``. For ``k = 1`` this is
    exactly :func:`divisor_map`.
    """
    n = cone.ambient_dim
    if not 0 <= k <= n:
        raise ValueError(f"codimension {k} outside 0..{n}")
    gens = faces(cone, k)
    columns: list[list[int]] = []
    if k > 0:
        for tau in faces(cone, k - 1):
            q = _quotient_projection(cone, tau)
            perp = kernel_basis(IntMatrix.from_rows(tau.generators(cone), n))
            chars = perp.columns()
            entries = []
            for s in gens:
                if not set(tau.indices) <= set(s.indices):
                    entries.append(None)
                    continue
                (extra,) = set(s.indices) - set(tau.indices)
                u = cone.generators[extra]
                entries.append((u, content(q(u))))
            for m in chars:
                col = []
                for e in entries:
                    if e is None:
                        col.append(0)
                        continue
                    u, c = e
                    val, rem = divmod(dot(m, u), c)
                    if rem:
                        raise InvariantViolation(
                            f"<{m}, {u}> not divisible by lattice index {c}")
                    col.append(val)
                columns.append(col)
    if not columns:
        return IntMatrix.zeros(len(gens), 0)
    return IntMatrix.from_columns(columns, len(gens))


def chow_group(cone: SimplicialCone, k: int) -> ChowReport:
    A = chow_relation_matrix(cone, k)
    group = cokernel(A)
    if k == 0 and group != AbelianGroup(1):
        raise InvariantViolation(f"codimension 0 Chow group is {group}, expected Z")
    if k > 0 and not group.is_finite:
        raise InvariantViolation(f"codimension {k} Chow group {group} is infinite")
    return ChowReport(codim=k, group=group, generators_count=A.rows, relations_rank=rank(A))


def chow_groups(cone: SimplicialCone) -> list[ChowReport]:
    return [chow_group(cone, k) for k in range(cone.ambient_dim + 1)]
