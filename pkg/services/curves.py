"""
Bezier evaluation, flattening and the lowering of compound primitives

A vector is a shaft plus two barbs, a rectangle is four segments, and a
straight stroke of any slope is a quadratic Bezier with a collinear control.
"""
import math
from fractions import Fraction

import numpy as np

from entity.models import Circle, Point, Polyline, QuadBezier, Rectangle, Segment
from schemas.options import ArrowStyle, FlattenPolicy
from services.errors import DomainError, ZeroDirection


def bernstein(i: int, n: int, t: float) -> float:
    """
    Bernstein basis polynomial ``C(n,i) t^i (1-t)^(n-i)``.

    >>> bernstein(1, 2, 0.5)
    0.5

    :param i: Basis index, ``0 <= i <= n``
    :type i: int
    :param n: Degree
    :type n: int
    :param t: Curve parameter in [0, 1]
    :type t: float
    :return: Basis value
    :rtype: float
    :raise: DomainError for an index or parameter outside the domain
    """
    if not 0 <= i <= n:
        raise DomainError(f"bernstein index {i} outside 0..{n}")
    if not 0 <= t <= 1:
        raise DomainError(f"bernstein parameter {t} outside [0, 1]")
    return math.comb(n, i) * t ** i * (1 - t) ** (n - i)


def quad_point(p0: Point, c: Point, p1: Point, t: float) -> Point:
    """
    Point of the quadratic Bezier ``(1-t)^2 p0 + 2t(1-t) c + t^2 p1``.

    :param p0: Start point
    :type p0: Point
    :param c: Control point
    :type c: Point
    :param p1: End point
    :type p1: Point
    :param t: Curve parameter in [0, 1]
    :type t: float
    :return: Curve point
    :rtype: Point
    :raise: DomainError for t outside [0, 1]
    """
    if not 0 <= t <= 1:
        raise DomainError(f"curve parameter {t} outside [0, 1]")
    if t == 0:
        return p0
    if t == 1:
        return p1
    u = 1 - t
    x = u * u * float(p0.x) + 2 * t * u * float(c.x) + t * t * float(p1.x)
    y = u * u * float(p0.y) + 2 * t * u * float(c.y) + t * t * float(p1.y)
    return Point(x=x, y=y)


def sample_parameters(t_step: float) -> np.ndarray:
    """``0, step, 2*step, ...`` below 1, followed by exactly 1."""
    count = math.ceil(1 / t_step - 1e-12)
    return np.append(np.arange(count, dtype=np.float64) * t_step, 1.0)


def flatten_quad(p0: Point, c: Point, p1: Point, policy: FlattenPolicy = FlattenPolicy()) -> Polyline:
    """
    Samples a quadratic Bezier at a fixed parameter step.

    The final sample is always ``t = 1``, so the polyline ends exactly at ``p1``.

    :param p0: Start point
    :type p0: Point
    :param c: Control point
    :type c: Point
    :param p1: End point
    :type p1: Point
    :param policy: Sampling step
    :type policy: FlattenPolicy
    :return: ``ceil(1/step) + 1`` curve points
    :rtype: Polyline
    """
    t = sample_parameters(policy.t_step)[:, None]
    u = 1 - t
    controls = np.array([p0.as_floats(), c.as_floats(), p1.as_floats()])
    points = u * u * controls[0] + 2 * t * u * controls[1] + t * t * controls[2]
    points[0] = controls[0]
    points[-1] = controls[2]
    return Polyline(points=points)


def segment_as_quad(p0: Point, p1: Point) -> QuadBezier:
    """Straight segment as a quadratic Bezier with the exact midpoint as control."""
    return QuadBezier(p0=p0, c=midpoint(p0, p1), p1=p1)


def arrowhead(tip: Point, direction: tuple, style: ArrowStyle = ArrowStyle()) -> tuple[Segment, Segment]:
    """
    Barbs of an arrow pointing along ``direction`` and ending at ``tip``.

    Each barb runs from the tip back along the shaft, turned by the half
    angle to the left (first barb) and to the right (second barb).

    :param tip: Arrow tip
    :type tip: Point
    :param direction: Shaft direction ``(dx, dy)``
    :type direction: tuple
    :param style: Barb length and half angle
    :type style: ArrowStyle
    :return: Left and right barb segments, both starting at the tip
    :rtype: tuple[Segment, Segment]
    :raise: ZeroDirection for a zero direction
    """
    dx, dy = float(direction[0]), float(direction[1])
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise ZeroDirection()
    ux, uy = dx / norm, dy / norm
    along = style.barb_length * math.cos(style.barb_half_angle)
    across = style.barb_length * math.sin(style.barb_half_angle)
    tx, ty = tip.as_floats()
    # back along the shaft, then sideways along the left normal (-uy, ux)
    left = Point(x=tx - along * ux - across * uy, y=ty - along * uy + across * ux)
    right = Point(x=tx - along * ux + across * uy, y=ty - along * uy - across * ux)
    return Segment(p0=tip, p1=left), Segment(p0=tip, p1=right)


def rect_as_segments(rect: Rectangle) -> tuple[Segment, Segment, Segment, Segment]:
    """Rectangle edges counterclockwise from the corner: bottom, right, top, left."""
    x0, y0 = rect.corner.x, rect.corner.y
    x1, y1 = x0 + rect.width, y0 + rect.height
    corners = [Point(x=x0, y=y0), Point(x=x1, y=y0), Point(x=x1, y=y1), Point(x=x0, y=y1)]
    return tuple(Segment(p0=corners[k], p1=corners[(k + 1) % 4]) for k in range(4))


def circle_as_quads(circle: Circle, n_arcs: int) -> list[QuadBezier]:
    """
    Approximates a circle by ``n_arcs`` quadratic arcs.

    Arc endpoints lie on the circle at angles ``2*pi*k/n_arcs``; each control
    point is the intersection of the tangents at the arc ends, so the radial
    deviation stays below ``r * (1/cos(pi/n_arcs) - 1)``.

    :param circle: Circle to lower
    :type circle: Circle
    :param n_arcs: Number of arcs, at least 4
    :type n_arcs: int
    :return: Arcs in counterclockwise order starting at angle 0
    :rtype: list[QuadBezier]
    :raise: DomainError for fewer than 4 arcs
    """
    if n_arcs < 4:
        raise DomainError(f"circle needs at least 4 arcs, got {n_arcs}")
    cx, cy = circle.center.as_floats()
    r = float(circle.diameter) / 2
    half = math.pi / n_arcs
    reach = r / math.cos(half)

    def on_circle(k: int) -> Point:
        angle = 2 * half * k
        return Point(x=cx + r * math.cos(angle), y=cy + r * math.sin(angle))

    arcs = []
    for k in range(n_arcs):
        mid_angle = 2 * half * k + half
        control = Point(x=cx + reach * math.cos(mid_angle), y=cy + reach * math.sin(mid_angle))
        arcs.append(QuadBezier(p0=on_circle(k), c=control, p1=on_circle((k + 1) % n_arcs)))
    return arcs


def circle_polyline(circle: Circle, segments: int) -> Polyline:
    """Closed regular ``segments``-gon inscribed in the circle."""
    cx, cy = circle.center.as_floats()
    r = float(circle.diameter) / 2
    angles = np.linspace(0.0, 2 * math.pi, segments + 1)
    points = np.column_stack((cx + r * np.cos(angles), cy + r * np.sin(angles)))
    points[-1] = points[0]
    return Polyline(points=points)


def polyline_length(polyline: Polyline) -> float:
    """Total arc length of a polyline."""
    if len(polyline) < 2:
        return 0.0
    return float(np.sum(np.hypot(*np.diff(polyline.points, axis=0).T)))


def midpoint(p0: Point, p1: Point) -> Point:
    return Point(x=(p0.x + p1.x) / 2, y=(p0.y + p1.y) / 2)


def is_collinear_control(p0: Point, c: Point, p1: Point, tolerance: float = 1e-6) -> bool:
    """
    True when the control lies on the chord between the endpoints.

    The test is the control's distance from the chord line (twice the triangle
    area over the chord length) plus the requirement that it projects inside
    the chord, so the curve traces exactly the segment.
    """
    chord_x, chord_y = p1.x - p0.x, p1.y - p0.y
    rel_x, rel_y = c.x - p0.x, c.y - p0.y
    chord_sq = chord_x * chord_x + chord_y * chord_y
    if chord_sq == 0:
        return rel_x == 0 and rel_y == 0
    cross = chord_x * rel_y - chord_y * rel_x
    if abs(float(cross)) / math.sqrt(float(chord_sq)) > tolerance:
        return False
    along = Fraction(chord_x * rel_x + chord_y * rel_y) / chord_sq
    return 0 <= along <= 1
