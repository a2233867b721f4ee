"""Rational interval exchange transformations.

An IET cuts ``[0, total)`` into half-open intervals of the given lengths and
lays them back down in a new order. ``permutation[j]`` is the index of the
interval that occupies position ``j`` after the exchange, so
``lengths=[2/3, 1/3], permutation=[1, 0]`` is the rotation ``x -> x + 1/3``.

With rational data everything lives on a finite grid. :func:`compile` picks
the coarsest uniform grid of ``q`` cells on which every breakpoint (before
and after the exchange) and every endpoint of the supplied sets falls. The
IET then maps cells onto cells, giving an exact permutation system.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .dynamics import Transformation, make_transformation
from .errors import BadParam, BadPermutation, EmptySet, NonpositiveLength, OutOfDomain
from .measure import FiniteMeasureSpace, PointSet, RationalLike, as_rational, point_set, uniform_space
from .recurrence import induced_map


@dataclass(frozen=True)
class IET:
    lengths: tuple[Fraction, ...]
    permutation: tuple[int, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    @property
    def size(self) -> int:
        return len(self.lengths)

    def top_starts(self) -> tuple[Fraction, ...]:
        """Left endpoint of each interval before the exchange."""
        return tuple(accumulate(self.lengths[:-1], initial=Fraction(0)))

    def bottom_starts(self) -> tuple[Fraction, ...]:
        """Left endpoint of each interval after the exchange, by interval index."""
        starts = [Fraction(0)] * self.size
        pos = Fraction(0)
        for i in self.permutation:
            starts[i] = pos
            pos += self.lengths[i]
        return tuple(starts)

    def translations(self) -> tuple[Fraction, ...]:
        return tuple(b - t for t, b in zip(self.top_starts(), self.bottom_starts()))

    def __call__(self, x: RationalLike) -> Fraction:
        return iet_apply(self, x)


def make_iet(lengths: Iterable[RationalLike], permutation: Sequence[int]) -> IET:
    ls = tuple(as_rational(v) for v in lengths)
    perm = tuple(permutation)
    if not ls:
        raise BadParam("an IET needs at least one interval")
    if len(perm) != len(ls):
        raise BadPermutation(f"permutation has length {len(perm)}, expected {len(ls)}")
    if sorted(perm) != list(range(len(ls))) or any(isinstance(p, bool) for p in perm):
        raise BadPermutation(f"permutation {list(perm)} is not a bijection of 0..{len(ls) - 1}")
    for i, v in enumerate(ls):
        if v <= 0:
            raise NonpositiveLength(f"lengths[{i}] = {v} is not positive")
    return IET(ls, perm)


def rotation(alpha: RationalLike, total: RationalLike = 1) -> IET:
    """``x -> x + alpha (mod total)`` as a two-interval exchange."""
    a, t = as_rational(alpha), as_rational(total)
    if not 0 < a < t:
        raise BadParam(f"rotation needs 0 < alpha < total, got alpha={a}, total={t}")
    return make_iet([t - a, a], [1, 0])


def iet_apply(iet: IET, x: RationalLike) -> Fraction:
    x = as_rational(x)
    if not 0 <= x < iet.total:
        raise OutOfDomain(f"{x} is outside [0, {iet.total})")
    i = bisect_right(iet.top_starts(), x) - 1
    return x + iet.translations()[i]


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint sorted half-open intervals ``[a, b)``."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def length(self) -> Fraction:
        return sum((b - a for a, b in self.intervals), Fraction(0))

    def __contains__(self, x) -> bool:
        return any(a <= x < b for a, b in self.intervals)

    def endpoints(self):
        for a, b in self.intervals:
            yield a
            yield b


def interval_set(intervals: Iterable[Sequence[RationalLike]]) -> IntervalSet:
    pairs = []
    for k, iv in enumerate(intervals):
        if len(iv) != 2:
            raise BadParam(f"intervals[{k}] must be a pair [a, b]")
        a, b = as_rational(iv[0]), as_rational(iv[1])
        if not a < b:
            raise BadParam(f"intervals[{k}] = [{a}, {b}) is empty")
        pairs.append((a, b))
    pairs.sort()
    for (a0, b0), (a1, b1) in zip(pairs, pairs[1:]):
        if a1 < b0:
            raise BadParam(f"intervals [{a0}, {b0}) and [{a1}, {b1}) overlap")
    return IntervalSet(tuple(pairs))


@dataclass(frozen=True)
class Compilation:
    grid_order: int
    total: Fraction
    space: FiniteMeasureSpace
    map: Transformation

    @property
    def cell_width(self) -> Fraction:
        return self.total / self.grid_order

    def cell_of(self, x: RationalLike) -> int:
        x = as_rational(x)
        if not 0 <= x < self.total:
            raise OutOfDomain(f"{x} is outside [0, {self.total})")
        return math.floor(x / self.cell_width)

    def cell_interval(self, k: int) -> tuple[Fraction, Fraction]:
        w = self.cell_width
        return k * w, (k + 1) * w

    def cells_to_intervals(self, cells: PointSet) -> IntervalSet:
        """Merge runs of adjacent cells back into intervals."""
        runs: list[list[int]] = []
        for k in cells:
            if runs and runs[-1][1] == k:
                runs[-1][1] = k + 1
            else:
                runs.append([k, k + 1])
        w = self.cell_width
        return IntervalSet(tuple((a * w, b * w) for a, b in runs))


def grid_order(iet: IET, sets: Sequence[IntervalSet] = ()) -> int:
    total = iet.total
    points = list(iet.top_starts()) + list(iet.bottom_starts())
    for s in sets:
        points.extend(s.endpoints())
    return math.lcm(1, *((p / total).denominator for p in points))


def _check_set(iet: IET, s: IntervalSet) -> None:
    for a, b in s.intervals:
        if a < 0 or b > iet.total:
            raise OutOfDomain(f"interval [{a}, {b}) is outside [0, {iet.total})")


def _compile_at(iet: IET, q: int) -> Compilation:
    total = iet.total
    w = total / q
    starts = iet.top_starts()
    shifts = iet.translations()
    forward = []
    i = 0
    for k in range(q):
        x = k * w
        while i + 1 < iet.size and starts[i + 1] <= x:
            i += 1
        image = (x + shifts[i]) / w
        if image.denominator != 1:
            raise ValueError(f"grid of order {q} is too coarse for this IET")
        forward.append(int(image))
    space = uniform_space(q, total)
    return Compilation(q, total, space, make_transformation(space, forward))


def _cells(comp: Compilation, s: IntervalSet) -> PointSet:
    w = comp.cell_width
    cells = []
    for a, b in s.intervals:
        lo, hi = a / w, b / w
        if lo.denominator != 1 or hi.denominator != 1:
            raise ValueError("interval endpoints are not on the grid")
        cells.extend(range(int(lo), int(hi)))
    return point_set(cells, comp.grid_order)


def compile(iet: IET, sets: Sequence[IntervalSet] = ()) -> tuple[Compilation, list[PointSet]]:
    """Exact finite model of ``iet`` on its minimal common grid.

    Returns the compilation and, for each interval set, the cells it covers.
    """
    for s in sets:
        _check_set(iet, s)
    comp = _compile_at(iet, grid_order(iet, sets))
    return comp, [_cells(comp, s) for s in sets]


def _regroup(displacements: Sequence[int], width: Fraction) -> IET:
    runs: list[list[int]] = []  # [start cell, end cell, displacement]
    for j, d in enumerate(displacements):
        if runs and runs[-1][2] == d:
            runs[-1][1] = j + 1
        else:
            runs.append([j, j + 1, d])
    lengths = [(e - s) * width for s, e, _ in runs]
    order = sorted(range(len(runs)), key=lambda r: runs[r][0] + runs[r][2])
    return make_iet(lengths, order)


def induced_iet(iet: IET, E: IntervalSet) -> IET:
    """First-return map of ``iet`` on ``E``, re-coordinatized to ``[0, |E|)``.

    ``E`` is squeezed onto ``[0, |E|)`` by closing its gaps. Consecutive cells
    that move by the same amount are merged into one interval.
    """
    if not E.intervals:
        raise EmptySet("induced IET needs a nonempty set")
    comp, (cells,) = compile(iet, [E])
    _, T_E = induced_map(comp.space, comp.map, cells)
    displacements = [T_E.forward[j] - j for j in range(T_E.space_size)]
    return _regroup(displacements, comp.cell_width)
