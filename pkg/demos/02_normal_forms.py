# Unimodular normal forms of plane cones and 3-dimensional cones.
#
# A plane cone can be moved by an element of GL(2, Z) onto the cone spanned
# by e1 and a*e1 + b*e2 with a, b > 0 coprime; b is then |delta|.
# A 3-dimensional cone can be made lower triangular: e1, a*e1 + b*e2,
# c*e1 + d*e2 + e*e3 with |b*e| = |delta|.

from toricg0 import delta, dual_cone, dual_transform, make_cone, normalize_2d, normalize_3d

plane = make_cone([(-3, 7), (5, -11)])
T, image = normalize_2d(plane)
print("plane cone", plane, "delta =", delta(plane))
print("transform:\n", T.matrix, sep="")
print("image:", image)

solid = make_cone([(3, 5, 7), (1, 0, 0), (2, 3, 0)])
T, image = normalize_3d(solid)
print("\n3-cone", solid, "delta =", delta(solid))
print("transform:\n", T.matrix, sep="")
print("image:", image)

# The inverse transpose of the transform carries the dual cone onto the dual
# cone of the image.
D = dual_transform(T)
print("\ndual generators:", dual_cone(solid))
print("mapped:", [D(y) for y in dual_cone(solid)])
print("dual of image:", dual_cone(image))
