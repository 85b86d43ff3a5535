"""
Scene geometry: anchor bounding box, crop normalization and coordinate flips

All transforms are exact over rational coordinates and preserve primitive order.
"""
import logging
from fractions import Fraction
from typing import Callable, Iterator

from entity.models import BoundingBox, CanvasFrame, Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment
from services.errors import EmptyScene

logger = logging.getLogger(__name__)

PointMap = Callable[[Point], Point]


def primitive_anchor_points(primitive) -> Iterator[Point]:
    """
    Yields the anchor geometry of one primitive.

    Segments give endpoints, rectangles their four corners, Bezier curves their
    control hull, circles the extreme points of the enclosing square and labels
    their anchor. Arrowhead barbs are not anchors.
    """
    match primitive:
        case Segment(p0=p0, p1=p1):
            yield p0
            yield p1
        case Rectangle(corner=corner, width=w, height=h):
            yield corner
            yield Point(x=corner.x + w, y=corner.y)
            yield Point(x=corner.x + w, y=corner.y + h)
            yield Point(x=corner.x, y=corner.y + h)
        case QuadBezier(p0=p0, c=c, p1=p1):
            yield p0
            yield c
            yield p1
        case Circle(center=center, diameter=d):
            r = d / 2
            yield Point(x=center.x - r, y=center.y - r)
            yield Point(x=center.x + r, y=center.y + r)
        case Label(anchor=anchor):
            yield anchor


def scene_anchor_points(scene: Scene) -> list[Point]:
    """
    Collects the anchor points of every primitive in scene order.

    :param scene: Scene to inspect
    :type scene: Scene
    :return: anchor points
    :rtype: list[Point]
    """
    return [pt for primitive in scene.primitives for pt in primitive_anchor_points(primitive)]


def scene_bbox(scene: Scene) -> BoundingBox:
    """
    Tight axis-aligned box over the anchor geometry of a scene.

    :param scene: Non-empty scene
    :type scene: Scene
    :return: Bounding box
    :rtype: BoundingBox
    :raise: EmptyScene if the scene has no primitives
    """
    points = scene_anchor_points(scene)
    if not points:
        raise EmptyScene()
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return BoundingBox(min=Point(x=min(xs), y=min(ys)), max=Point(x=max(xs), y=max(ys)))


def map_points(scene: Scene, fn: PointMap) -> Scene:
    """
    Applies a point map to every stored point of every primitive.

    Rectangles keep their extents; when the map mirrors the Y axis the
    caller is responsible for the corner (see :func:`flip_vertical`).
    """
    return Scene(primitives=tuple(_map_primitive(p, fn) for p in scene.primitives))


def _map_primitive(primitive, fn: PointMap):
    match primitive:
        case Segment():
            return primitive.model_copy(update={"p0": fn(primitive.p0), "p1": fn(primitive.p1)})
        case Rectangle():
            return primitive.model_copy(update={"corner": fn(primitive.corner)})
        case QuadBezier():
            return primitive.model_copy(update={"p0": fn(primitive.p0), "c": fn(primitive.c), "p1": fn(primitive.p1)})
        case Circle():
            return primitive.model_copy(update={"center": fn(primitive.center)})
        case Label():
            return primitive.model_copy(update={"anchor": fn(primitive.anchor)})
    raise TypeError(f"unknown primitive {primitive!r}")


def translate(scene: Scene, dx, dy) -> Scene:
    """
    Shifts every point by ``(dx, dy)``.

    :param scene: Scene to move
    :type scene: Scene
    :param dx: Horizontal offset
    :type dx: Fraction | int
    :param dy: Vertical offset
    :type dy: Fraction | int
    :return: Translated scene
    :rtype: Scene
    """
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        return scene
    return map_points(scene, lambda p: Point(x=p.x + dx, y=p.y + dy))


def normalize(scene: Scene) -> tuple[Scene, Fraction, Fraction]:
    """
    Crops a scene: moves its anchor bounding box to the origin.

    :param scene: Non-empty scene
    :type scene: Scene
    :return: translated scene, picture width, picture height
    :rtype: tuple[Scene, Fraction, Fraction]
    :raise: EmptyScene if the scene has no primitives
    """
    box = scene_bbox(scene)
    logger.debug("crop offset (%s, %s), box %sx%s", -box.min.x, -box.min.y, box.width, box.height)
    return translate(scene, -box.min.x, -box.min.y), box.width, box.height


def flip_vertical(scene: Scene, canv_top) -> Scene:
    """
    Mirrors a scene vertically: ``(x, y) -> (x, canv_top - y)``.

    Converts between top-left-origin screen space and bottom-left-origin
    picture space; applying it twice with the same ``canv_top`` is the identity.
    A rectangle keeps its bottom-left corner convention, so its stored corner
    becomes the image of the opposite edge.

    :param scene: Scene to mirror
    :type scene: Scene
    :param canv_top: Height of the mirror axis pair
    :type canv_top: Fraction | int
    :return: Mirrored scene
    :rtype: Scene
    """
    top = Fraction(canv_top)
    flipped = []
    for primitive in scene.primitives:
        if isinstance(primitive, Rectangle):
            corner = Point(x=primitive.corner.x, y=top - primitive.corner.y - primitive.height)
            flipped.append(primitive.model_copy(update={"corner": corner}))
        else:
            flipped.append(_map_primitive(primitive, lambda p: Point(x=p.x, y=top - p.y)))
    return Scene(primitives=tuple(flipped))


def to_picture_space(scene: Scene, frame: CanvasFrame) -> Scene:
    """Screen canvas coordinates to picture coordinates: ``(x - canv_left, canv_top - y)``."""
    return flip_vertical(translate(scene, -frame.canv_left, 0), frame.canv_top)
