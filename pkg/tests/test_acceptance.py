"""Exit criteria. Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script with
``python tests/test_acceptance.py``.
"""

import io
import random
import sys
import time
from math import gcd

import pytest

from toricg0.chow import chow_group, chow_relation_matrix, class_group
from toricg0.cli import TABLE_ROWS, run
from toricg0.cones import (
    contains,
    delta,
    dual_cone,
    dual_transform,
    in_dual,
    make_cone,
    normalize_2d,
    normalize_3d,
)
from toricg0.g0 import conjecture_check, extension_candidates, g0_dim3, random_simplicial_cone
from toricg0.linalg import AbelianGroup, IntMatrix, cokernel, determinant, smith_normal_form

from oracles import brute_force_extensions, determinantal_divisors, matvec, random_unimodular

SEED = 20240501


@pytest.fixture
def emit(capsys):
    def report(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return report


def cones_2d():
    return [random_simplicial_cone(2, 100, SEED + i) for i in range(500)]


def cones_3d():
    return [random_simplicial_cone(3, 30, SEED + 10_000 + i) for i in range(500)]


def test_1_table_reproduction(emit):
    t = time.perf_counter()
    matched = 0
    for gens, d, a1, a2 in TABLE_ROWS:
        cone = make_cone(gens)
        if (delta(cone), str(class_group(cone)), str(chow_group(cone, 2).group)) == (d, a1, a2):
            matched += 1
    elapsed = time.perf_counter() - t
    emit("1 table reproduction", matched == 8 and elapsed < 1.0,
         f"{matched}/8 rows exact, {elapsed:.2f}s (limit 1s)")


def test_2_surface_class_group(emit):
    t = time.perf_counter()
    ok = 0
    for cone in cones_2d():
        g = class_group(cone)
        _, image = normalize_2d(cone)
        b = image.generators[1][1]
        if g.is_cyclic and g.order() == abs(delta(cone)) and g == AbelianGroup.cyclic(b):
            ok += 1
    elapsed = time.perf_counter() - t
    emit("2 dim-2 class group cyclic of order |delta| = b", ok == 500 and elapsed < 5.0,
         f"{ok}/500, {elapsed:.2f}s (limit 5s)")


def test_3_threefold_class_group_order(emit):
    t = time.perf_counter()
    ok = sum(class_group(c).order() == abs(delta(c)) for c in cones_3d())
    elapsed = time.perf_counter() - t
    emit("3 dim-3 |A^1| = |delta|", ok == 500 and elapsed < 30.0,
         f"{ok}/500, {elapsed:.2f}s (limit 30s)")


def test_4_boundary_chow_groups(emit):
    ok = total = 0
    for n in (2, 3, 4):
        for i in range(200):
            cone = random_simplicial_cone(n, 12, SEED + 1000 * n + i)
            a0 = cokernel(chow_relation_matrix(cone, 0))
            an = cokernel(chow_relation_matrix(cone, n))
            total += 1
            ok += a0 == AbelianGroup(1) and an.is_trivial
    emit("4 A^0 = Z and A^n = 0 in dims 2-4", ok == total == 600, f"{ok}/{total}")


def test_5_smith_normal_form_suite(emit):
    rng = random.Random(SEED)
    ok = oracle_checked = 0
    for _ in range(1000):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-100, 100) for _ in range(n)] for _ in range(m)]
        A = IntMatrix.from_rows(rows)
        s = smith_normal_form(A)
        d = s.invariant_factors
        nz = [x for x in d if x]
        good = (s.U @ A @ s.V == s.D
                and abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
                and all(s.D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
                and all(x >= 0 for x in d) and list(d[:len(nz)]) == nz
                and all(b % a == 0 for a, b in zip(nz, nz[1:])))
        if good and m <= 4 and n <= 4:
            oracle_checked += 1
            running, prods = 1, []
            for x in nz:
                running *= x
                prods.append(running)
            good = prods == determinantal_divisors(rows)
        ok += good
    emit("5 SNF property suite", ok == 1000,
         f"{ok}/1000 ({oracle_checked} checked against minor gcds)")


def test_6_normal_form_witnesses(emit):
    ok = 0
    for cone in cones_2d():
        T, image = normalize_2d(cone)
        (e1, (a, b)) = image.generators
        ok += (abs(determinant(T.matrix)) == 1 and e1 == (1, 0) and a > 0 and b > 0
               and gcd(a, b) == 1 and b == abs(delta(cone)))
    for cone in cones_3d():
        T, image = normalize_3d(cone)
        g1, (a, b, z), (c, d, e) = image.generators
        ok += (abs(determinant(T.matrix)) == 1 and g1 == (1, 0, 0) and z == 0
               and e != 0 and abs(b * e) == abs(delta(cone)))
    emit("6 normal-form witnesses", ok == 1000, f"{ok}/1000")


def test_7_dual_membership(emit):
    rng = random.Random(SEED + 7)
    ok = total = 0
    for i in range(200):
        n = 2 + i % 2
        sigma = random_simplicial_cone(n, 20, rng.getrandbits(32))
        A = random_unimodular(n, rng)
        tau = make_cone([matvec(A, u) for u in sigma.generators])
        D = dual_transform(IntMatrix.from_rows(A))
        sd, td = make_cone(dual_cone(sigma)), make_cone(dual_cone(tau))
        for _ in range(50):
            p = tuple(rng.randint(-50, 50) for _ in range(n))
            q = D(p)
            total += 1
            ok += (in_dual(sigma, p) == in_dual(tau, q) == contains(sd, p) == contains(td, q))
    emit("7 duality preserved by inverse transpose", ok == total == 10_000, f"{ok}/{total}")


def test_8_extension_bookkeeping(emit):
    ok = 0
    for gens, *_ in TABLE_ROWS:
        r = g0_dim3(make_cone(gens))
        ok += (r.f1_order == r.a1.order() * r.a2.order()
               and bool(r.extension_candidates)
               and r.a2 + r.a1 in r.extension_candidates)
    row3 = g0_dim3(make_cone(TABLE_ROWS[2][0]))
    oracle = {AbelianGroup.from_orders(m) for m in brute_force_extensions([7], [21])}
    exact = (set(row3.extension_candidates) == oracle
             and set(extension_candidates(row3.a2, row3.a1)) == oracle
             and all(g.order() == 147 for g in oracle) and len(oracle) == 2)
    emit("8 extension bookkeeping", ok == 8 and exact,
         f"{ok}/8 rows; row 3 candidates {sorted(map(str, row3.extension_candidates))}")


def _conjecture_json():
    out = io.StringIO()
    code = run(["--json", "conjecture", "--dim", "4", "--trials", "200", "--bound", "10",
                "--seed", str(SEED)], stdout=out, stderr=io.StringIO())
    return code, out.getvalue().encode()


def test_9_conjecture_harness_dim4(emit):
    t = time.perf_counter()
    rep = conjecture_check(4, 200, 10, SEED)
    elapsed = time.perf_counter() - t
    code1, doc1 = _conjecture_json()
    code2, doc2 = _conjecture_json()
    complete = rep.trials == 200 and rep.a1_matches_delta + rep.a1_mismatches == 200
    emit("9 dim-4 conjecture harness",
         complete and code1 == code2 == 0 and doc1 == doc2 and elapsed < 60.0,
         f"|A^1|=|delta| {rep.a1_matches_delta}/200, |A^2| divides delta "
         f"{rep.a2_divides_delta}/200, {len(rep.counterexamples)} counterexamples flagged, "
         f"byte-identical rerun, {elapsed:.2f}s (limit 60s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
