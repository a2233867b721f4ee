"""Return times to a set and the mean return-time identity.

For a set ``E`` and ``x`` in ``E`` the return time ``n_E(x)`` is the least
``n >= 1`` with ``T^n x`` in ``E``. Summed against the weights over ``E`` it
equals the measure of the invariant closure of ``E``::

    sum_{x in E} n_E(x) * w(x) == mu(I_E)

:func:`kac_check` evaluates both sides independently. :func:`series_terms`
and :func:`disjoint_decomposition` expose the intermediate quantities of
the classical derivation so each step can be checked on its own:

* ``a_n = mu(E minus (T^-1 E u ... u T^-n E))``, the mass of ``E`` still
  waiting to return after ``n`` steps;
* ``b_n = mu(T^n E minus (E u T E u ... u T^(n-1) E))``, the new mass swept
  out by the ``n``-th forward image.

Every ``a_n`` equals ``b_n`` because ``T^n`` preserves measure, and the
partial sums ``mu(E) + a_1 + ... + a_n`` climb to ``mu(I_E)``.

In a permutation model every return time is finite, so :data:`INFINITE` is
never produced; it stays in the interface for the general setting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .dynamics import (
    Transformation,
    check_bound,
    check_space,
    invariant_closure,
    make_transformation,
)
from .errors import EmptySet, NotInSet
from .measure import FiniteMeasureSpace, PointSet, _trusted, make_space, measure, point_set

INFINITE = math.inf
ReturnTime = Union[int, float]


def return_time(T: Transformation, E: PointSet, x: int) -> ReturnTime:
    check_bound(T, E)
    if x not in E:
        raise NotInSet(f"point {x} is not in E")
    f = T.forward
    y = f[x]
    for n in range(1, T.space_size + 1):
        if y in E:
            return n
        y = f[y]
    return INFINITE


def return_times(T: Transformation, E: PointSet) -> dict[int, ReturnTime]:
    """``n_E`` on all of ``E`` in one pass over the cycles.

    Along a cycle the return time of an ``E`` point is the gap to the next
    ``E`` point, wrapping round.
    """
    check_bound(T, E)
    times: dict[int, ReturnTime] = {}
    done = set()
    members = E.members
    for x in E.indices:
        c = T.cycle_of[x]
        if c in done:
            continue
        done.add(c)
        cyc = T.cycles[c]
        hits = [k for k, y in enumerate(cyc) if y in members]
        period = len(cyc)
        for a, b in zip(hits, hits[1:] + [hits[0] + period]):
            times[cyc[a]] = b - a
    return {x: times[x] for x in E.indices}


def return_integral(T: Transformation, E: PointSet) -> Fraction:
    times = return_times(T, E)
    return T.space.mass(times.keys(), times.values())


@dataclass(frozen=True)
class VerificationReport:
    lhs: Fraction
    rhs: Fraction
    rhs_set: PointSet
    equal: bool
    normalized_lhs: Optional[Fraction]


def kac_check(space: FiniteMeasureSpace, T: Transformation, E: PointSet) -> VerificationReport:
    """Compare the return-time integral over ``E`` with ``mu(I_E)``.

    A mismatch is reported with ``equal=False`` rather than raised.
    """
    check_space(space, T)
    lhs = return_integral(T, E)
    closure = invariant_closure(T, E)
    rhs = measure(space, closure)
    total = space.total
    return VerificationReport(
        lhs=lhs,
        rhs=rhs,
        rhs_set=closure,
        equal=lhs == rhs,
        normalized_lhs=lhs / total if total > 0 else None,
    )


@dataclass(frozen=True)
class SeriesReport:
    mu_E: Fraction
    terms_a: tuple[Fraction, ...]
    terms_b: tuple[Fraction, ...]
    partial_sums: tuple[Fraction, ...]


def series_terms(T: Transformation, E: PointSet, horizon: Optional[int] = None) -> SeriesReport:
    """Terms ``a_n``, ``b_n`` and partial sums for ``n = 1..horizon``.

    Both sequences are built by plain set arithmetic on preimages and images,
    not from return times. ``horizon`` defaults to the number of points, past
    which every term is zero.
    """
    check_bound(T, E)
    if horizon is None:
        horizon = T.space_size
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    mu = T.space.mass
    f, g = T.forward, T.inverse

    base = set(E.indices)
    mu_E = mu(base)

    back = set(base)  # T^-n E
    covered_back: set[int] = set()  # union of T^-v E, v = 1..n
    fwd = set(base)  # T^n E
    covered_fwd = set(base)  # union of T^v E, v = 0..n-1

    terms_a, terms_b, sums = [], [], []
    running = mu_E
    for _ in range(horizon):
        back = {g[x] for x in back}
        covered_back |= back
        a = mu(base - covered_back)

        fwd = {f[x] for x in fwd}
        b = mu(fwd - covered_fwd)
        covered_fwd |= fwd

        running += a
        terms_a.append(a)
        terms_b.append(b)
        sums.append(running)
    return SeriesReport(mu_E, tuple(terms_a), tuple(terms_b), tuple(sums))


def disjoint_decomposition(T: Transformation, E: PointSet) -> list[PointSet]:
    """Pieces ``D_0 = E`` and ``D_n = T^n E minus (E u ... u T^(n-1) E)``.

    The list stops before the first empty piece: once ``D_n`` is empty the
    union so far is invariant and every later piece is empty too. For empty
    ``E`` the list is empty.
    """
    check_bound(T, E)
    f = T.forward
    size = T.space_size
    pieces = []
    image = set(E.indices)
    covered: set[int] = set()
    while True:
        piece = image - covered
        if not piece:
            return pieces
        pieces.append(_trusted(piece, size))
        covered |= image
        image = {f[x] for x in image}


def induced_map(
    space: FiniteMeasureSpace, T: Transformation, E: PointSet
) -> tuple[FiniteMeasureSpace, Transformation]:
    """First-return map ``x -> T^{n_E(x)} x`` as a system on ``E``.

    Point ``j`` of the induced space is ``E.indices[j]`` and keeps its weight.
    The result goes through full validation.
    """
    check_space(space, T)
    check_bound(T, E)
    if not E.indices:
        raise EmptySet("induced map needs a nonempty set")
    times = return_times(T, E)
    local = {x: j for j, x in enumerate(E.indices)}
    forward = [local[T.power(x, times[x])] for x in E.indices]
    sub = make_space(space.weights[x] for x in E.indices)
    return sub, make_transformation(sub, forward)


@dataclass(frozen=True)
class TowerColumn:
    return_time: int
    base: PointSet
    levels: tuple[PointSet, ...]


@dataclass(frozen=True)
class Tower:
    columns: tuple[TowerColumn, ...]


def _group_by_time(T: Transformation, E: PointSet) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for x, n in return_times(T, E).items():
        groups.setdefault(n, []).append(x)
    return dict(sorted(groups.items()))


def kakutani_tower(space: FiniteMeasureSpace, T: Transformation, E: PointSet) -> Tower:
    """Skyscraper over ``E``: column ``r`` stacks ``T^k E_r`` for ``k < r``."""
    check_space(space, T)
    check_bound(T, E)
    if not E.indices:
        raise EmptySet("tower needs a nonempty set")
    size = T.space_size
    columns = []
    for r, base in _group_by_time(T, E).items():
        levels = []
        level = base
        for _ in range(r):
            levels.append(_trusted(level, size))
            level = [T.forward[x] for x in level]
        columns.append(TowerColumn(r, levels[0], tuple(levels)))
    return Tower(tuple(columns))


def return_time_distribution(T: Transformation, E: PointSet) -> list[tuple[int, Fraction]]:
    """``(k, mu{x in E : n_E(x) = k})`` for each return time that occurs."""
    mu = T.space.mass
    return [(k, mu(xs)) for k, xs in _group_by_time(T, E).items()]


@dataclass(frozen=True)
class PoincareReport:
    all_return: bool
    exceptional: PointSet


def poincare_check(space: FiniteMeasureSpace, T: Transformation, E: PointSet) -> PoincareReport:
    """Positive-weight points of ``E`` that never come back.

    In the permutation model every orbit is periodic, so ``exceptional`` is
    always empty and the check cannot fail; it is kept so the almost-everywhere
    recurrence statement has an executable form.
    """
    check_space(space, T)
    w = space.weights
    bad = [x for x, n in return_times(T, E).items() if n == INFINITE and w[x] > 0]
    return PoincareReport(not bad, _trusted(bad, T.space_size))


Verifier = Callable[[FiniteMeasureSpace, Transformation, PointSet], VerificationReport]
