"""Invertible measure-preserving maps of a finite measure space.

A map is a permutation ``forward`` of the points with ``weight(forward[i]) ==
weight(i)`` for every ``i``. Pointwise weight equality gives both
``mu(T A) == mu(A)`` and ``mu(T^-1 A) == mu(A)`` for every subset ``A``.

The cycle decomposition is computed once at construction and drives fast
powers: ``T^n x`` is a lookup at offset ``n mod period`` along the cycle of ``x``.

Random systems use :class:`random.Random` (Mersenne Twister) seeded with the
caller's integer. The forward map is ``rng.shuffle(list(range(n)))``; the
cycles are then listed in order of their smallest point and each one draws a
weight ``Fraction(rng.randint(0, d), d)`` with ``d = rng.randint(1, max_denominator)``.
The seed therefore fixes the whole system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BadParam, IndexOutOfRange, NotBijective, NotMeasurePreserving, SpaceMismatch
from .measure import (
    FiniteMeasureSpace,
    PointSet,
    RationalLike,
    _trusted,
    as_rational,
    make_space,
    uniform_space,
)


@dataclass(frozen=True)
class Transformation:
    space: FiniteMeasureSpace
    forward: tuple[int, ...]
    inverse: tuple[int, ...] = field(repr=False)
    # cycles[c] lists a cycle in forward order; cycle_of[x], position[x] locate x in it
    cycles: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    cycle_of: tuple[int, ...] = field(repr=False, compare=False)
    position: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def space_size(self) -> int:
        return len(self.forward)

    def __call__(self, x: int) -> int:
        return self.forward[x]

    def power(self, x: int, n: int) -> int:
        """``T^n x`` for any signed ``n``."""
        cyc = self.cycles[self.cycle_of[x]]
        return cyc[(self.position[x] + n) % len(cyc)]


@dataclass(frozen=True)
class OrbitInfo:
    points: PointSet
    period: int


def _cycle_decomposition(forward: Sequence[int]):
    n = len(forward)
    cycle_of = [-1] * n
    position = [0] * n
    cycles = []
    for start in range(n):
        if cycle_of[start] >= 0:
            continue
        c = len(cycles)
        cyc = []
        x = start
        while cycle_of[x] < 0:
            cycle_of[x] = c
            position[x] = len(cyc)
            cyc.append(x)
            x = forward[x]
        cycles.append(tuple(cyc))
    return tuple(cycles), tuple(cycle_of), tuple(position)


def make_transformation(space: FiniteMeasureSpace, forward: Sequence[int]) -> Transformation:
    n = space.size
    fwd = tuple(forward)
    if len(fwd) != n:
        raise NotBijective(f"map has length {len(fwd)}, space has {n} points")
    inverse = [-1] * n
    for i, y in enumerate(fwd):
        if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < n:
            raise NotBijective(f"map is not a bijection: map[{i}] = {y!r} is not a point index")
        if inverse[y] >= 0:
            raise NotBijective(f"map is not a bijection: map[{inverse[y]}] = map[{i}] = {y}")
        inverse[y] = i
    w = space.weights
    for i, y in enumerate(fwd):
        if w[y] != w[i]:
            raise NotMeasurePreserving(
                f"map is not measure preserving: weights[{i}] = {w[i]} maps onto weights[{y}] = {w[y]}"
            )
    cycles, cycle_of, position = _cycle_decomposition(fwd)
    return Transformation(space, fwd, tuple(inverse), cycles, cycle_of, position)


def identity(space: FiniteMeasureSpace) -> Transformation:
    return make_transformation(space, range(space.size))


def check_bound(T: Transformation, A: PointSet) -> None:
    if A.space_size != T.space_size:
        raise SpaceMismatch(f"set bound to size {A.space_size}, map acts on {T.space_size} points")


def check_space(space: FiniteMeasureSpace, T: Transformation) -> None:
    if space is T.space:
        return
    if space.size != T.space_size or space.weights != T.space.weights:
        raise SpaceMismatch("map is not bound to this space")


def iterate_set(T: Transformation, A: PointSet, n: int) -> PointSet:
    """Image of ``A`` under ``T^n``; negative ``n`` applies the inverse."""
    check_bound(T, A)
    if n == 1:
        f = T.forward
        return _trusted([f[x] for x in A.indices], A.space_size)
    if n == -1:
        g = T.inverse
        return _trusted([g[x] for x in A.indices], A.space_size)
    return _trusted([T.power(x, n) for x in A.indices], A.space_size)


def orbit(T: Transformation, x: int) -> OrbitInfo:
    if not 0 <= x < T.space_size:
        raise IndexOutOfRange(f"point {x} outside [0, {T.space_size})")
    cyc = T.cycles[T.cycle_of[x]]
    return OrbitInfo(_trusted(cyc, T.space_size), len(cyc))


def invariant_closure(T: Transformation, E: PointSet) -> PointSet:
    """Union of the forward images ``T^n E``, ``n >= 0``.

    For a permutation of a finite set the forward orbit of a point is its
    whole cycle, so this is also the smallest set ``A`` with ``T A = A``
    containing ``E``. For general invertible maps the forward union agrees
    with the two-sided one only up to a null set; that case is not modelled.
    """
    check_bound(T, E)
    f = T.forward
    seen = set(E.indices)
    for x in E.indices:
        y = f[x]
        while y not in seen:
            seen.add(y)
            y = f[y]
    return _trusted(seen, E.space_size)


def is_ergodic(space: FiniteMeasureSpace, T: Transformation) -> bool:
    """Exactly one cycle carries positive measure.

    A space of total measure zero has no such cycle and is not ergodic.
    """
    check_space(space, T)
    w = space.weights
    positive = sum(1 for cyc in T.cycles if w[cyc[0]] > 0)
    return positive == 1


def cycle_system(n: int, total: RationalLike = 1) -> tuple[FiniteMeasureSpace, Transformation]:
    if n < 1:
        raise BadParam("cycle needs n >= 1")
    space = uniform_space(n, total)
    return space, make_transformation(space, [(i + 1) % n for i in range(n)])


def random_system(
    n: int, seed: int, max_denominator: int = 10**6
) -> tuple[FiniteMeasureSpace, Transformation]:
    if n < 1:
        raise BadParam("random_permutation needs n >= 1")
    if max_denominator < 1:
        raise BadParam("max_denominator must be positive")
    rng = random.Random(seed)
    forward = list(range(n))
    rng.shuffle(forward)
    cycles, _, _ = _cycle_decomposition(forward)
    weights: list[Optional[Fraction]] = [None] * n
    for cyc in cycles:
        d = rng.randint(1, max_denominator)
        w = Fraction(rng.randint(0, d), d)
        for x in cyc:
            weights[x] = w
    space = make_space(weights)
    return space, make_transformation(space, forward)


def cat_map_system(q: int) -> tuple[FiniteMeasureSpace, Transformation]:
    """Discrete cat map ``(i, j) -> (2i + j, i + j) mod q`` on the ``q x q`` torus.

    Cell ``(i, j)`` is point ``i * q + j``; weights are uniform ``1/q^2``.
    """
    if q < 1:
        raise BadParam("cat_map needs q >= 1")
    forward = []
    for i in range(q):
        for j in range(q):
            forward.append(((2 * i + j) % q) * q + (i + j) % q)
    space = uniform_space(q * q, 1)
    return space, make_transformation(space, forward)


def generate(kind: str, **params) -> tuple[FiniteMeasureSpace, Transformation]:
    """Build a stock test system.

    ``kind`` is ``"cycle"`` (params ``n``, ``total``), ``"random_permutation"``
    (``n``, ``seed``, ``max_denominator``) or ``"cat_map"`` (``q``).
    """
    builders = {
        "cycle": cycle_system,
        "random_permutation": random_system,
        "cat_map": cat_map_system,
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise BadParam(f"unknown generator {kind!r}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise BadParam(f"{kind}: {exc}") from None
