# Random search on the orders of A^1 and A^2.
#
# For each random cone we compare |A^1| with |delta| and check whether |A^2|
# divides delta. In dimensions 2 and 3 the first is a theorem, so a mismatch
# would mean a bug; in dimension 4 and up, mismatches are recorded.

import time

from toricg0 import conjecture_check

for dim, bound in [(2, 100), (3, 20), (4, 10), (5, 4)]:
    t = time.perf_counter()
    rep = conjecture_check(dim, trials=200, bound=bound, seed=1)
    print(f"dim {dim}: |A^1| = |delta| in {rep.a1_matches_delta}/{rep.trials}, "
          f"|A^2| divides delta in {rep.a2_divides_delta}/{rep.trials}, "
          f"{len(rep.counterexamples)} counterexamples ({time.perf_counter() - t:.1f}s)")
    for c in rep.counterexamples[:3]:
        print("   ", c.kind, c.generators, "delta =", c.delta, "A^1 =", c.a1, "A^2 =", c.a2)
