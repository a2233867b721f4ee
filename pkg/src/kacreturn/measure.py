"""Finite measure spaces, point sets and exact rational scalars.

A space is a finite list of points ``0..size-1`` carrying nonnegative
rational weights. Every subset is measurable, so a :class:`PointSet` is just a
sorted tuple of indices tagged with the size of the space it lives in.

Rationals are :class:`fractions.Fraction`. Their only text form is ``"p/q"``
or ``"p"`` with an optional leading minus sign.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import EmptySpace, NegativeWeight, ParseError, SpaceMismatch

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical :class:`Fraction`.

    Decimal points, exponents, whitespace and zero denominators are rejected.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"bad rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"bad rational {text!r}: zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def render_rational(value: Fraction) -> str:
    return str(Fraction(value))


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ParseError(f"not an exact rational: {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class PointSet:
    """Subset of ``{0, ..., space_size - 1}`` in canonical sorted form.

    Use :func:`point_set` to build one from arbitrary iterables; the
    constructor itself expects already-canonical indices.
    """

    indices: tuple[int, ...]
    space_size: int
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        members = frozenset(self.indices)
        if len(members) != len(self.indices) or list(self.indices) != sorted(members):
            raise ValueError("indices must be strictly increasing")
        if self.indices and (self.indices[0] < 0 or self.indices[-1] >= self.space_size):
            raise ValueError(f"indices must lie in [0, {self.space_size})")
        object.__setattr__(self, "_members", members)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def members(self) -> frozenset:
        return self._members

    def indicator(self, x: int) -> int:
        return 1 if x in self._members else 0

    def issubset(self, other: PointSet) -> bool:
        _check_same(self, other)
        return self._members <= other._members


def point_set(indices: Iterable[int], space_size: int) -> PointSet:
    return PointSet(tuple(sorted(set(indices))), space_size)


def _trusted(members: Iterable[int], space_size: int) -> PointSet:
    """Build a PointSet from indices already known to be in range, skipping checks."""
    members = frozenset(members)
    A = object.__new__(PointSet)
    object.__setattr__(A, "indices", tuple(sorted(members)))
    object.__setattr__(A, "space_size", space_size)
    object.__setattr__(A, "_members", members)
    return A


def empty_set(space_size: int) -> PointSet:
    return PointSet((), space_size)


def full_set(space_size: int) -> PointSet:
    return PointSet(tuple(range(space_size)), space_size)


@dataclass(frozen=True)
class FiniteMeasureSpace:
    weights: tuple[Fraction, ...]
    _parts: tuple = field(init=False, repr=False, compare=False)
    _total: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_parts", tuple((w.numerator, w.denominator) for w in self.weights))
        object.__setattr__(self, "_total", self.mass(range(len(self.weights))))

    def mass(self, indices: Iterable[int], multipliers: Optional[Iterable[int]] = None) -> Fraction:
        """Exact ``sum(m_i * w_i)`` over ``indices`` (all ``m_i = 1`` by default).

        Numerators are accumulated per denominator in plain integers and put
        over a common denominator once at the end.
        """
        parts = self._parts
        acc: dict[int, int] = {}
        if multipliers is None:
            for i in indices:
                num, den = parts[i]
                acc[den] = acc.get(den, 0) + num
        else:
            for i, m in zip(indices, multipliers):
                num, den = parts[i]
                acc[den] = acc.get(den, 0) + m * num
        if not acc:
            return Fraction(0)
        common = math.lcm(*acc)
        return Fraction(sum(num * (common // den) for den, num in acc.items()), common)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return self._total

    def full(self) -> PointSet:
        return full_set(self.size)

    def empty(self) -> PointSet:
        return empty_set(self.size)

    def points(self, indices: Iterable[int]) -> PointSet:
        return point_set(indices, self.size)


def make_space(weights: Iterable[RationalLike]) -> FiniteMeasureSpace:
    ws = tuple(as_rational(w) for w in weights)
    if not ws:
        raise EmptySpace("weights must be nonempty")
    for i, w in enumerate(ws):
        if w < 0:
            raise NegativeWeight(f"weights[{i}] = {w} is negative")
    return FiniteMeasureSpace(ws)


def uniform_space(size: int, total: RationalLike = 1) -> FiniteMeasureSpace:
    if size < 1:
        raise EmptySpace("size must be at least 1")
    w = as_rational(total) / size
    return make_space([w] * size)


def _check_same(a: PointSet, b: PointSet) -> None:
    if a.space_size != b.space_size:
        raise SpaceMismatch(f"sets bound to spaces of size {a.space_size} and {b.space_size}")


def measure(space: FiniteMeasureSpace, A: PointSet) -> Fraction:
    if A.space_size != space.size:
        raise SpaceMismatch(f"set bound to size {A.space_size}, space has size {space.size}")
    return space.mass(A.indices)


def complement(A: PointSet) -> PointSet:
    return PointSet(tuple(i for i in range(A.space_size) if i not in A._members), A.space_size)


def union(A: PointSet, B: PointSet) -> PointSet:
    _check_same(A, B)
    return _trusted(A._members | B._members, A.space_size)


def intersect(A: PointSet, B: PointSet) -> PointSet:
    _check_same(A, B)
    return _trusted(A._members & B._members, A.space_size)


def difference(A: PointSet, B: PointSet) -> PointSet:
    _check_same(A, B)
    return _trusted(A._members - B._members, A.space_size)


_SET_OPS = {"union": union, "intersect": intersect, "difference": difference}


def set_algebra(op: str, A: PointSet, B: Optional[PointSet] = None) -> PointSet:
    """Dispatch one of ``complement``, ``union``, ``intersect``, ``difference``."""
    if op == "complement":
        if B is not None:
            raise TypeError("complement takes a single operand")
        return complement(A)
    try:
        fn = _SET_OPS[op]
    except KeyError:
        raise ValueError(f"unknown set operation {op!r}") from None
    if B is None:
        raise TypeError(f"{op} needs two operands")
    return fn(A, B)
