import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import systems, systems_with_set
from kacreturn import (
    BadParam,
    IndexOutOfRange,
    NotBijective,
    NotMeasurePreserving,
    SpaceMismatch,
    cat_map_system,
    cycle_system,
    generate,
    identity,
    invariant_closure,
    is_ergodic,
    iterate_set,
    make_space,
    make_transformation,
    measure,
    orbit,
    point_set,
    uniform_space,
    union,
)


def test_make_transformation_valid_cycle():
    T = make_transformation(uniform_space(5), [1, 2, 3, 4, 0])
    assert T.inverse == (4, 0, 1, 2, 3)
    assert all(T.inverse[T.forward[i]] == i for i in range(5))


def test_not_measure_preserving():
    with pytest.raises(NotMeasurePreserving):
        make_transformation(make_space(["1/2", "1/4", "1/4"]), [1, 2, 0])


def test_swap_of_equal_weights_is_valid():
    T = make_transformation(make_space(["1/4", "1/4", "1/2"]), [1, 0, 2])
    assert T.forward == (1, 0, 2)


@pytest.mark.parametrize("forward", [[0, 0, 1], [0, 1], [0, 1, 3], [0, 1, -1]])
def test_not_bijective(forward):
    with pytest.raises(NotBijective, match="map"):
        make_transformation(uniform_space(3), forward)


def test_iterate_set_examples(cycle5):
    space, T = cycle5
    assert iterate_set(T, space.points([0]), 2).indices == (2,)
    assert iterate_set(T, space.points([0]), -1).indices == (4,)
    for n in (-7, 0, 3, 11):
        assert iterate_set(T, space.empty(), n).indices == ()
    with pytest.raises(SpaceMismatch):
        iterate_set(T, point_set([0], 4), 1)


def test_orbit_examples(cycle5):
    _, T = cycle5
    info = orbit(T, 0)
    assert info.points.indices == (0, 1, 2, 3, 4) and info.period == 5
    I = identity(uniform_space(4))
    assert orbit(I, 2).points.indices == (2,) and orbit(I, 2).period == 1
    S = make_transformation(uniform_space(3), [1, 0, 2])
    assert orbit(S, 2).points.indices == (2,) and orbit(S, 2).period == 1
    with pytest.raises(IndexOutOfRange):
        orbit(T, 5)


def test_invariant_closure_examples(cycle5):
    space, T = cycle5
    assert invariant_closure(T, space.points([0, 2])).indices == (0, 1, 2, 3, 4)
    assert invariant_closure(T, space.empty()).indices == ()

    forward = [1, 2, 0, 4, 5, 3]
    expected = oracles.closure(forward, {0})
    assert expected == {0, 1, 2}
    U = make_transformation(uniform_space(6), forward)
    assert invariant_closure(U, point_set([0], 6)).indices == (0, 1, 2)


def test_is_ergodic_examples():
    assert is_ergodic(*cycle_system(5))
    space = uniform_space(4)
    assert not is_ergodic(space, identity(space))
    space = make_space(["1/2", "1/2", "0"])
    assert is_ergodic(space, make_transformation(space, [1, 0, 2]))
    space = make_space(["0", "0"])
    assert not is_ergodic(space, identity(space))


def test_is_ergodic_mismatch():
    space, T = cycle_system(5)
    with pytest.raises(SpaceMismatch):
        is_ergodic(uniform_space(4), T)


@pytest.mark.parametrize("n", range(1, 30))
def test_cycles_are_ergodic(n):
    assert is_ergodic(*cycle_system(n))


def test_generate_cycle():
    space, T = generate("cycle", n=5, total=1)
    assert space.weights == uniform_space(5).weights
    assert T.forward == (1, 2, 3, 4, 0)


def test_generate_cat_map():
    _, T = generate("cat_map", q=1)
    assert T.forward == (0,)
    _, T = cat_map_system(2)
    expected = [((2 * i + j) % 2) * 2 + (i + j) % 2 for i in range(2) for j in range(2)]
    assert list(T.forward) == expected
    # (1,1) -> (1,0) -> (0,1) -> (1,1), (0,0) fixed
    assert T.forward[3] == 2 and T.forward[2] == 1 and T.forward[1] == 3 and T.forward[0] == 0


def test_generate_random_is_seeded():
    a = generate("random_permutation", n=40, seed=9)
    b = generate("random_permutation", n=40, seed=9)
    c = generate("random_permutation", n=40, seed=10)
    assert a[0].weights == b[0].weights and a[1].forward == b[1].forward
    assert a[1].forward != c[1].forward


def test_random_system_documented_algorithm():
    space, T = generate("random_permutation", n=10, seed=3, max_denominator=7)
    rng = random.Random(3)
    forward = list(range(10))
    rng.shuffle(forward)
    assert list(T.forward) == forward
    for cyc in oracles.cycles(forward):
        assert len({space.weights[x] for x in cyc}) == 1
        assert all(space.weights[x].denominator <= 7 for x in cyc)


@pytest.mark.parametrize(
    "kind, params",
    [("cycle", {"n": 0}), ("cat_map", {"q": 0}), ("random_permutation", {"n": 0, "seed": 1}),
     ("cycle", {}), ("flow", {"n": 3})],
)
def test_generate_bad_params(kind, params):
    with pytest.raises(BadParam):
        generate(kind, **params)


@given(systems_with_set(), st.data())
def test_iterates_preserve_measure(sys_set, data):
    space, T, A = sys_set
    n = data.draw(st.integers(-space.size, space.size))
    B = iterate_set(T, A, n)
    assert len(B) == len(A)
    assert measure(space, B) == measure(space, A)


@given(systems_with_set(), st.integers(-25, 25), st.integers(-25, 25))
def test_iterate_composes(sys_set, n, m):
    _, T, A = sys_set
    assert iterate_set(T, A, n + m) == iterate_set(T, iterate_set(T, A, n), m)


@given(systems_with_set())
def test_iterate_matches_stepping(sys_set):
    _, T, A = sys_set
    for n in range(4):
        assert set(iterate_set(T, A, n)) == oracles.image(list(T.forward), set(A), n)
        assert set(iterate_set(T, A, -n)) == oracles.preimage(list(T.forward), set(A), n)


@given(systems_with_set())
def test_closure_properties(sys_set):
    space, T, E = sys_set
    I = invariant_closure(T, E)
    assert union(I, iterate_set(T, I, 1)) == I
    assert iterate_set(T, I, 1) == I and iterate_set(T, I, -1) == I
    assert E.issubset(I)
    orbits = set()
    for x in E:
        orbits |= set(orbit(T, x).points)
    assert set(I) == orbits
    assert set(I) == oracles.closure(list(T.forward), set(E))


@given(systems_with_set(), st.data())
def test_closure_is_minimal(sys_set, data):
    """Any invariant superset of E contains the closure."""
    space, T, E = sys_set
    extra = data.draw(st.sets(st.integers(0, space.size - 1)))
    A = invariant_closure(T, union(E, point_set(extra, space.size)))
    assert invariant_closure(T, E).issubset(A)


@given(systems())
def test_orbit_period_returns(system):
    _, T = system
    for x in range(T.space_size):
        info = orbit(T, x)
        assert len(info.points) == info.period
        assert oracles.step(list(T.forward), x, info.period) == x
        assert all(oracles.step(list(T.forward), x, k) != x for k in range(1, info.period))
