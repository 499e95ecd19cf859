import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricg0.cones import (
    ConeError,
    DependentGenerators,
    Face,
    UnimodularTransform,
    WrongGeneratorCount,
    ZeroGenerator,
    contains,
    delta,
    dual_cone,
    dual_transform,
    faces,
    in_dual,
    make_cone,
    normalize_2d,
    normalize_3d,
)
from toricg0.linalg import IntMatrix, NotUnimodularError, determinant
from toricg0.g0 import random_simplicial_cone

from oracles import matvec, random_unimodular


def cones(n, bound):
    vec = st.lists(st.integers(-bound, bound), min_size=n, max_size=n)

    def build(gens):
        try:
            return make_cone(gens)
        except ConeError:
            return None

    return st.lists(vec, min_size=n, max_size=n).map(build).filter(lambda c: c is not None)


def test_make_cone():
    c = make_cone([(1, 0), (0, 1)])
    assert delta(c) == 1
    assert make_cone([(2, 0), (0, 1)]).generators == ((1, 0), (0, 1))
    with pytest.raises(DependentGenerators):
        make_cone([(1, 0), (2, 0)])
    with pytest.raises(ZeroGenerator):
        make_cone([(0, 0), (1, 0)])
    with pytest.raises(WrongGeneratorCount):
        make_cone([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(WrongGeneratorCount):
        make_cone([(1, 0), (0, 1), (1, 1)])


def test_make_cone_keeps_order():
    c = make_cone([(3, 5, 7), (1, 0, 0), (2, 3, 0)])
    assert c.generators == ((3, 5, 7), (1, 0, 0), (2, 3, 0))


def test_delta_examples():
    assert delta(make_cone([(1, 0), (0, 1)])) == 1
    assert delta(make_cone([(1, 0, 0), (2, 3, 0), (3, 5, 7)])) == 21
    assert delta(make_cone([(1, 0, 0), (5, 7, 0), (7, 8, 19)])) == 133


def test_faces():
    c = make_cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert faces(c, 1) == [Face((0,)), Face((1,)), Face((2,))]
    assert faces(c, 0) == [Face(())]
    assert faces(c, 2) == [Face((0, 1)), Face((0, 2)), Face((1, 2))]
    with pytest.raises(ValueError):
        faces(c, 4)


def test_dual_cone_examples():
    e2 = make_cone([(1, 0), (0, 1)])
    assert sorted(dual_cone(e2)) == [(0, 1), (1, 0)]
    assert sorted(dual_cone(make_cone([(1, 0), (1, 2)]))) == [(0, 1), (2, -1)]
    assert sorted(dual_cone(make_cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))) == \
        [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


@settings(max_examples=100)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda n: cones(n, 9)))
def test_dual_cone_facets_and_biduality(cone):
    duals = dual_cone(cone)
    for i, y in enumerate(duals):
        pairings = [sum(a * b for a, b in zip(y, u)) for u in cone.generators]
        assert pairings[i] > 0
        assert all(p == 0 for j, p in enumerate(pairings) if j != i)
    again = dual_cone(make_cone(duals))
    assert sorted(again) == sorted(cone.generators)


def test_contains_examples():
    e2 = make_cone([(1, 0), (0, 1)])
    assert contains(e2, (3, 5))
    assert not contains(e2, (-1, 0))
    assert contains(make_cone([(1, 0), (1, 2)]), (1, 1))
    assert contains(make_cone([(1, 0), (1, 2)]), (2, 4))
    assert not contains(make_cone([(1, 0), (1, 2)]), (1, 3))


def test_dual_transform_examples():
    I = UnimodularTransform(IntMatrix.identity(3))
    assert dual_transform(I).matrix == IntMatrix.identity(3)
    A = IntMatrix.from_rows([[1, 1], [0, 1]])
    assert dual_transform(A).matrix == IntMatrix.from_rows([[1, 0], [-1, 1]])
    with pytest.raises(NotUnimodularError):
        dual_transform(IntMatrix.from_rows([[2, 0], [0, 1]]))


@given(st.integers(2, 4), st.integers(0, 2**32))
def test_dual_transform_involution(n, seed):
    A = UnimodularTransform(IntMatrix.from_rows(random_unimodular(n, random.Random(seed))))
    assert dual_transform(dual_transform(A)) == A


# ---------------------------------------------------------------- 2D

def _check_2d(cone):
    T, image = normalize_2d(cone)
    assert abs(determinant(T.matrix)) == 1
    (e1, (a, b)) = image.generators
    assert e1 == (1, 0)
    assert a > 0 and b > 0 and gcd(a, b) == 1
    assert b == abs(delta(cone))
    assert 1 <= a <= b
    assert image.generators == tuple(T(g) for g in cone.generators)
    return T, image


def test_normalize_2d_examples():
    T, image = _check_2d(make_cone([(1, 0), (1, 2)]))
    assert T.matrix == IntMatrix.identity(2)
    assert image.generators == ((1, 0), (1, 2))

    T, image = _check_2d(make_cone([(2, 1), (1, 1)]))
    assert T((2, 1)) == (1, 0)
    assert image.generators == ((1, 0), (1, 1))

    _, image = _check_2d(make_cone([(1, 0), (0, 1)]))
    assert image.generators[1][1] == 1 and image.generators[1][0] >= 1


def test_normalize_2d_negative_orientation():
    # x1*y2 - x2*y1 < 0 needs the reflection step
    _check_2d(make_cone([(1, 2), (1, 0)]))
    _check_2d(make_cone([(-3, 7), (5, -11)]))


@settings(max_examples=300)
@given(cones(2, 100))
def test_normalize_2d_property(cone):
    _check_2d(cone)


def test_normalize_wrong_dimension():
    with pytest.raises(ValueError):
        normalize_2d(make_cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    with pytest.raises(ValueError):
        normalize_3d(make_cone([(1, 0), (0, 1)]))


# ---------------------------------------------------------------- 3D

def _check_3d(cone):
    T, image = normalize_3d(cone)
    assert abs(determinant(T.matrix)) == 1
    g1, (a, b, z), (c, d, e) = image.generators
    assert g1 == (1, 0, 0) and z == 0
    assert b > 0 and e != 0
    assert abs(b * e) == abs(delta(cone))
    assert image.generators == tuple(T(g) for g in cone.generators)
    return image


def test_normalize_3d_examples():
    image = _check_3d(make_cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert abs(image.generators[1][1]) == 1 and abs(image.generators[2][2]) == 1
    image = _check_3d(make_cone([(1, 0, 0), (1, 2, 0), (1, 2, 4)]))
    assert image.generators == ((1, 0, 0), (1, 2, 0), (1, 2, 4))
    image = _check_3d(make_cone([(3, 5, 7), (1, 0, 0), (2, 3, 0)]))
    assert abs(image.generators[1][1] * image.generators[2][2]) == 21


@settings(max_examples=300)
@given(cones(3, 30))
def test_normalize_3d_property(cone):
    _check_3d(cone)


# ---------------------------------------------------------------- duality

@settings(max_examples=100)
@given(st.sampled_from([2, 3]), st.integers(0, 2**32))
def test_dual_membership_preserved(n, seed):
    rng = random.Random(seed)
    sigma = random_simplicial_cone(n, 20, rng.getrandbits(32))
    A = random_unimodular(n, rng)
    tau = make_cone([matvec(A, u) for u in sigma.generators])
    assert tau.generators == tuple(matvec(A, u) for u in sigma.generators)
    D = dual_transform(IntMatrix.from_rows(A))
    sigma_dual, tau_dual = make_cone(dual_cone(sigma)), make_cone(dual_cone(tau))
    for _ in range(50):
        p = tuple(rng.randint(-50, 50) for _ in range(n))
        q = D(p)
        assert in_dual(sigma, p) == in_dual(tau, q)
        assert contains(sigma_dual, p) == in_dual(sigma, p)
        assert contains(sigma_dual, p) == contains(tau_dual, q)


@settings(max_examples=100)
@given(st.sampled_from([2, 3, 4]), st.integers(0, 2**32))
def test_delta_invariances(n, seed):
    rng = random.Random(seed)
    cone = random_simplicial_cone(n, 15, rng.getrandbits(32))
    perm = list(cone.generators)
    rng.shuffle(perm)
    assert abs(delta(make_cone(perm))) == abs(delta(cone))
    A = random_unimodular(n, rng)
    moved = make_cone([matvec(A, u) for u in cone.generators])
    assert abs(delta(moved)) == abs(delta(cone))
