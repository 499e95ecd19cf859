"""Structure of ``G_0`` for affine simplicial toric surfaces and 3-folds.

``G_0(X) = Z + F^1 G_0(X)`` with ``F^1`` finite. In dimension 2, ``F^1`` is
cyclic of order ``|delta|``. In dimension 3 it sits in

    0 -> A^2(X) -> F^1 G_0(X) -> A^1(X) -> 0

and is only known up to that extension, so the abelian groups that fit are
enumerated instead of picking one.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .chow import InvariantViolation, chow_group, class_group
from .cones import SimplicialCone, delta, make_cone
from .linalg import AbelianGroup, IntMatrix, cokernel, content, determinant

UNDETERMINED = "undetermined-extension"
DIM2_CYCLIC = "dim2-cyclic"
DIM3_EXTENSION = "dim3-extension"

MAX_EXTENSION_ORDER = 10_000


class ExtensionSearchTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class G0Report:
    dim: int
    delta: int
    a1: AbelianGroup
    a2: AbelianGroup | None
    f1_order: int
    f1_exact: AbelianGroup | str
    extension_candidates: tuple[AbelianGroup, ...]
    source_theorem: str
    free_rank: int = 1


def g0_dim2(cone: SimplicialCone) -> G0Report:
    if cone.ambient_dim != 2:
        raise ValueError(f"expected a 2-dimensional cone, got dimension {cone.ambient_dim}")
    d = delta(cone)
    f1 = AbelianGroup.cyclic(d)
    a1 = class_group(cone)
    if a1 != f1:
        raise InvariantViolation(f"class group {a1} is not cyclic of order |{d}|")
    return G0Report(dim=2, delta=d, a1=a1, a2=None, f1_order=f1.order(), f1_exact=f1,
                    extension_candidates=(f1,), source_theorem=DIM2_CYCLIC)


def g0_dim3(cone: SimplicialCone) -> G0Report:
    if cone.ambient_dim != 3:
        raise ValueError(f"expected a 3-dimensional cone, got dimension {cone.ambient_dim}")
    d = delta(cone)
    a1 = class_group(cone)
    a2 = chow_group(cone, 2).group
    if a1.order() != abs(d):
        raise InvariantViolation(f"|A^1| = {a1.order()} but |delta| = {abs(d)}")
    if a2.is_trivial:
        exact = a1
    elif a1.is_trivial:
        exact = a2
    else:
        exact = UNDETERMINED
    return G0Report(dim=3, delta=d, a1=a1, a2=a2, f1_order=a1.order() * a2.order(),
                    f1_exact=exact, extension_candidates=tuple(extension_candidates(a2, a1)),
                    source_theorem=DIM3_EXTENSION)


def g0_report(cone: SimplicialCone) -> G0Report:
    if cone.ambient_dim == 2:
        return g0_dim2(cone)
    if cone.ambient_dim == 3:
        return g0_dim3(cone)
    raise ValueError("G_0 reports exist for dimensions 2 and 3 only")


# ----------------------------------------------------- extension search

def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as nonincreasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _dominated(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    """Each part of ``small`` fits under the matching part of ``big`` (both sorted descending)."""
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def _p_extension_exists(p: int, lam: tuple[int, ...], sub: tuple[int, ...],
                        quot: tuple[int, ...]) -> bool:
    """Does ``(+) Z/p^lam_i`` contain a copy of ``sub`` with quotient ``quot``?

    Exhaustive: tries every image of the standard generators of ``sub``
    and reads off the quotient from a Smith form.
    """
    if not (_dominated(sub, lam) and _dominated(quot, lam)):
        return False
    mods = [p ** e for e in lam]
    want = AbelianGroup.from_orders(p ** e for e in quot)
    if not sub:
        return AbelianGroup.from_orders(mods) == want
    # elements killed by p^s: multiples of p^(lam_i - s) in each coordinate
    def killed_by(s):
        ranges = [range(0, m, p ** max(e - s, 0)) for m, e in zip(mods, lam)]
        return list(product(*ranges))

    pools = [killed_by(s) for s in sub]
    relations = IntMatrix.diagonal(mods).columns()
    for gens in product(*pools):
        if cokernel(IntMatrix.from_columns(relations + list(gens), len(lam))) == want:
            return True
    return False


def extension_candidates(sub: AbelianGroup, quot: AbelianGroup) -> list[AbelianGroup]:
    """Finite abelian ``E`` having a subgroup ``~ sub`` with quotient ``~ quot``."""
    if not (sub.is_finite and quot.is_finite):
        raise ValueError("extension search needs finite groups")
    order = sub.order() * quot.order()
    if order > MAX_EXTENSION_ORDER:
        raise ExtensionSearchTooLarge(
            f"order {order} exceeds the exhaustive-search limit {MAX_EXTENSION_ORDER}")
    sp, qp = sub.primary_parts(), quot.primary_parts()
    per_prime = []
    for p in sorted(set(sp) | set(qp)):
        s = tuple(sorted(sp.get(p, ()), reverse=True))
        q = tuple(sorted(qp.get(p, ()), reverse=True))
        fits = [lam for lam in partitions(sum(s) + sum(q))
                if _p_extension_exists(p, lam, s, q)]
        per_prime.append([[p ** e for e in lam] for lam in fits])
    found = {AbelianGroup.from_orders([o for part in choice for o in part])
             for choice in product(*per_prime)}
    return sorted(found, key=lambda g: (len(g.torsion), g.torsion))


# ------------------------------------------------- conjecture harness

def derive_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_simplicial_cone(n: int, bound: int, seed: int) -> SimplicialCone:
    if n < 2 or bound < 1:
        raise ValueError("need n >= 2 and bound >= 1")
    rng = random.Random(seed)
    while True:
        gens = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if any(content(g) == 0 for g in gens):
            continue
        if determinant(IntMatrix.from_columns(gens)) != 0:
            return make_cone(gens)


@dataclass(frozen=True)
class Counterexample:
    generators: tuple[tuple[int, ...], ...]
    delta: int
    a1: AbelianGroup
    a2: AbelianGroup
    kind: str  # "a1-order" or "a2-divisibility"


@dataclass(frozen=True)
class ConjectureReport:
    dim: int
    trials: int
    seed: int
    bound: int
    a1_matches_delta: int
    a2_divides_delta: int
    counterexamples: tuple[Counterexample, ...] = field(default_factory=tuple)

    @property
    def a1_mismatches(self) -> int:
        return sum(c.kind == "a1-order" for c in self.counterexamples)

    @property
    def has_bug(self) -> bool:
        """``|A^1| != |delta|`` is proven impossible in dimensions 2 and 3."""
        return self.dim in (2, 3) and self.a1_mismatches > 0


def _trial(cone: SimplicialCone):
    d = delta(cone)
    a1 = class_group(cone)
    a2 = chow_group(cone, 2).group
    return d, a1, a2


def _trial_at(args):
    n, bound, seed, i = args
    cone = random_simplicial_cone(n, bound, derive_seed(seed, i))
    return cone, _trial(cone)


def evaluate_cones(cones, dim: int, seed: int = 0, bound: int = 0) -> ConjectureReport:
    """Conjecture bookkeeping over an explicit list of cones."""
    return _assemble(dim, seed, bound, [(c, _trial(c)) for c in cones])


def _assemble(dim, seed, bound, results) -> ConjectureReport:
    a1_ok = a2_ok = 0
    bad = []
    for cone, (d, a1, a2) in results:
        if a1.order() == abs(d):
            a1_ok += 1
        else:
            bad.append(Counterexample(cone.generators, d, a1, a2, "a1-order"))
        if abs(d) % a2.order() == 0:
            a2_ok += 1
        else:
            bad.append(Counterexample(cone.generators, d, a1, a2, "a2-divisibility"))
    return ConjectureReport(dim=dim, trials=len(results), seed=seed, bound=bound,
                            a1_matches_delta=a1_ok, a2_divides_delta=a2_ok,
                            counterexamples=tuple(bad))


def conjecture_check(n: int, trials: int, bound: int, seed: int,
                     workers: int = 1) -> ConjectureReport:
    """Test ``|A^1| = |delta|`` and ``|A^2|`` divides ``delta`` on random cones.

    Trial ``i`` draws its cone from a seed derived from ``(seed, i)``, so the
    report does not depend on ``workers``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    jobs = [(n, bound, seed, i) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_trial_at, jobs, chunksize=16))
    else:
        results = [_trial_at(j) for j in jobs]
    return _assemble(n, seed, bound, results)

