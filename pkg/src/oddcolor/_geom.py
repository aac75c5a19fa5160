"""Exact rational plane geometry for the drawn-graph generators.

Edges of the hand-drawn instances are polylines with Fraction coordinates.
Crossings and rotation orders are derived with exact arithmetic, so the
generated rotation systems are reproducible bit for bit and every
degeneracy (touching endpoints, collinear overlap, triple points) raises
instead of silently producing a wrong embedding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

Pt = tuple[Fraction, Fraction]


class DegenerateDrawingError(ValueError):
    """The drawing has a non-transversal contact and cannot be trusted."""


def pt(x, y) -> Pt:
    return (Fraction(x), Fraction(y))


def sub(a: Pt, b: Pt) -> Pt:
    return (a[0] - b[0], a[1] - b[1])


def cross(a: Pt, b: Pt) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def segment_crossing(p: Pt, q: Pt, r: Pt, s: Pt) -> tuple[Fraction, Fraction, Pt] | None:
    """Proper interior crossing of segments pq and rs.

    Returns (t, u, point) with 0 < t, u < 1, or None if disjoint.  Raises
    DegenerateDrawingError on endpoint contacts or collinear overlap.
    """
    d1 = sub(q, p)
    d2 = sub(s, r)
    den = cross(d1, d2)
    w = sub(r, p)
    if den == 0:
        if cross(d1, w) == 0:
            # collinear: overlap only if the projections intersect
            def span(a: Pt, b: Pt, o: Pt, d: Pt):
                axis = 0 if d[0] != 0 else 1
                lo, hi = sorted(((a[axis] - o[axis]), (b[axis] - o[axis])))
                return lo, hi
            lo1, hi1 = span(p, q, p, d1)
            lo2, hi2 = span(r, s, p, d1)
            if max(lo1, lo2) < min(hi1, hi2):
                raise DegenerateDrawingError(f"collinear overlap {p}-{q} / {r}-{s}")
        return None
    t = cross(w, d2) / den
    u = cross(w, d1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u, (p[0] + t * d1[0], p[1] + t * d1[1])
    if 0 <= t <= 1 and 0 <= u <= 1:
        # touching at an endpoint of either segment: reject unless the
        # contact is a shared segment endpoint on both sides
        if (t in (0, 1)) and (u in (0, 1)):
            return None
        raise DegenerateDrawingError(
            f"non-transversal contact between {p}-{q} and {r}-{s}"
        )
    return None


class Polyline:
    """Open polyline with exact vertices; parametrized by (segment, t)."""

    def __init__(self, points: list[Pt]):
        if len(points) < 2:
            raise ValueError("polyline needs two points")
        for a, b in zip(points, points[1:]):
            if a == b:
                raise DegenerateDrawingError("zero-length polyline segment")
        self.points = list(points)

    @property
    def nseg(self) -> int:
        return len(self.points) - 1

    def point_at(self, param: tuple[int, Fraction]) -> Pt:
        i, t = param
        a, b = self.points[i], self.points[i + 1]
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))

    def direction_after(self, param: tuple[int, Fraction]) -> Pt:
        """Tangent direction heading forward from the given parameter."""
        i, t = param
        if t == 1:
            i += 1
        return sub(self.points[i + 1], self.points[i])

    def direction_before(self, param: tuple[int, Fraction]) -> Pt:
        """Tangent direction heading backward from the given parameter."""
        i, t = param
        if t == 0:
            i -= 1
        a, b = self.points[i], self.points[i + 1]
        return sub(a, b)

    def split(self, param: tuple[int, Fraction]) -> tuple["Polyline", "Polyline"]:
        i, t = param
        p = self.point_at(param)
        first = self.points[: i + 1] + ([p] if p != self.points[i] else [])
        second = ([p] if p != self.points[i + 1] else []) + self.points[i + 1 :]
        return Polyline(first), Polyline(second)

    def crossings(self, other: "Polyline") -> list[tuple[tuple[int, Fraction], tuple[int, Fraction], Pt]]:
        out = []
        for i in range(self.nseg):
            for j in range(other.nseg):
                got = segment_crossing(
                    self.points[i], self.points[i + 1],
                    other.points[j], other.points[j + 1],
                )
                if got:
                    t, u, point = got
                    out.append(((i, t), (j, u), point))
        return out


def param_between(
    a: tuple[int, Fraction], b: tuple[int, Fraction]
) -> tuple[int, Fraction]:
    """A parameter strictly between a < b (midpoint in index+t space)."""
    pa = a[0] + a[1]
    pb = b[0] + b[1]
    mid = (pa + pb) / 2
    i = int(mid)
    t = mid - i
    if t == 0 and i > 0:
        # land exactly on a joint: that is a valid interior point
        return (i - 1, Fraction(1))
    return (i, t)


def angle_cmp(d1: Pt, d2: Pt) -> int:
    """Compare directions by CCW angle from the positive x-axis."""
    def half(d: Pt) -> int:
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = cross(d1, d2)
    if c == 0:
        raise DegenerateDrawingError(f"parallel stubs {d1} / {d2}")
    return -1 if c > 0 else 1


def sort_ccw(stubs: list[tuple[Pt, object]]) -> list[object]:
    """Sort (direction, payload) pairs counterclockwise; returns payloads."""
    ordered = sorted(stubs, key=cmp_to_key(lambda a, b: angle_cmp(a[0], b[0])))
    return [payload for _, payload in ordered]
