# Chow groups of eight toric 3-folds, recomputed from the generators.
#
# A^1 is the class group, the cokernel of the divisor map. A^2 comes from the
# orbit presentation: generators are the 2-dimensional faces, relations come
# from each ray paired with a basis of the characters vanishing on it.

from toricg0 import chow_group, chow_relation_matrix, class_group, delta, g0_dim3, make_cone
from toricg0.cli import TABLE_ROWS

print(f"{'generators':28}{'delta':>7}  {'A^1':8}{'A^2':6}")
for gens, *_ in TABLE_ROWS:
    cone = make_cone(gens)
    print(f"{str(cone):28}{delta(cone):>7}  {str(class_group(cone)):8}{str(chow_group(cone, 2).group):6}")

cone = make_cone(TABLE_ROWS[2][0])
print("\nrelation matrix for A^2 of", cone)
print(chow_relation_matrix(cone, 2))

# F^1 G_0 is an extension of A^1 by A^2; list the abelian groups that fit.
report = g0_dim3(cone)
print("\n|F^1 G_0| =", report.f1_order)
print("candidates:", ", ".join(map(str, report.extension_candidates)))
