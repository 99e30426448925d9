"""Canonical finite unions of closed intervals and isolated points.

:class:`RealSetUnion` is the output type of every spectrum computation.  It
is a closed subset of the reals given by finitely many pairwise disjoint,
non-touching closed intervals plus isolated points, all with exact rational
endpoints.  Because the representation is closed by construction, taking a
topological closure of a represented set is the identity.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

#: A closed interval as an (lo, hi) pair of rationals.
Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RealSetUnion:
    """A canonical finite union of closed intervals and isolated points.

    Invariants, enforced at construction time:

    * ``points`` are strictly increasing and none lies in or on an interval;
    * ``intervals`` are strictly increasing, pairwise non-touching, and
      non-degenerate (``lo < hi``; degenerate pieces belong in ``points``).

    Use :func:`canonicalize` to build instances from raw pieces.
    """

    points: tuple[Fraction, ...] = ()
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        pts = tuple(Fraction(p) for p in self.points)
        ivs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.intervals)
        for lo, hi in ivs:
            if lo >= hi:
                raise ValueError(f"degenerate or inverted interval [{lo}, {hi}]")
        for (_, hi0), (lo1, _) in zip(ivs, ivs[1:]):
            if lo1 <= hi0:
                raise ValueError("intervals must be sorted, disjoint and non-touching")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("points must be strictly increasing")
        los = [lo for lo, _ in ivs]
        for p in pts:
            i = bisect_right(los, p) - 1
            if i >= 0 and ivs[i][0] <= p <= ivs[i][1]:
                raise ValueError(f"point {p} lies inside interval {ivs[i]}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "intervals", ivs)

    def is_empty(self) -> bool:
        return not self.points and not self.intervals

    def contains(self, value) -> bool:
        x = Fraction(value)
        i = bisect_left(self.points, x)
        if i < len(self.points) and self.points[i] == x:
            return True
        los = [lo for lo, _ in self.intervals]
        j = bisect_right(los, x) - 1
        return j >= 0 and self.intervals[j][0] <= x <= self.intervals[j][1]

    def infimum(self) -> Fraction | None:
        lows = []
        if self.points:
            lows.append(self.points[0])
        if self.intervals:
            lows.append(self.intervals[0][0])
        return min(lows) if lows else None

    def supremum(self) -> Fraction | None:
        highs = []
        if self.points:
            highs.append(self.points[-1])
        if self.intervals:
            highs.append(self.intervals[-1][1])
        return max(highs) if highs else None

    def components(self) -> Iterator[Interval]:
        """Yield all pieces in ascending order, points as degenerate pairs."""
        pieces = [(p, p) for p in self.points]
        pieces.extend(self.intervals)
        pieces.sort()
        yield from pieces

    def intersect(self, lo, hi) -> "RealSetUnion":
        """Intersect with the closed window ``[lo, hi]``."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"window has lo > hi: [{lo}, {hi}]")
        pts = [p for p in self.points if lo <= p <= hi]
        ivs = []
        for a, b in self.intervals:
            a2, b2 = max(a, lo), min(b, hi)
            if a2 < b2:
                ivs.append((a2, b2))
            elif a2 == b2:
                pts.append(a2)
        return canonicalize(pts, ivs)


def canonicalize(points: Iterable = (), intervals: Iterable = ()) -> RealSetUnion:
    """Build the canonical form of a union of points and closed intervals.

    Degenerate intervals become points, overlapping or touching intervals
    are merged, duplicate points collapse, and points covered by an interval
    are absorbed.  The represented subset of the reals is unchanged.
    """
    pts = {Fraction(p) for p in points}
    raw: list[list[Fraction]] = []
    for lo, hi in intervals:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"interval has lo > hi: [{lo}, {hi}]")
        if lo == hi:
            pts.add(lo)
        else:
            raw.append([lo, hi])
    raw.sort()
    merged: list[list[Fraction]] = []
    for lo, hi in raw:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    los = [lo for lo, _ in merged]
    free = []
    for p in sorted(pts):
        i = bisect_right(los, p) - 1
        if i >= 0 and merged[i][0] <= p <= merged[i][1]:
            continue
        free.append(p)
    return RealSetUnion(tuple(free), tuple((lo, hi) for lo, hi in merged))


def union(*sets: RealSetUnion) -> RealSetUnion:
    pts: list[Fraction] = []
    ivs: list[Interval] = []
    for s in sets:
        pts.extend(s.points)
        ivs.extend(s.intervals)
    return canonicalize(pts, ivs)


def interval_add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def interval_mul(a: Interval, b: Interval) -> Interval:
    """Product of two closed intervals under independent choices.

    For closed intervals this is exactly the set of pairwise products, so
    folding it over several factors is associative as a set operation.
    """
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))
