"""
Geometric fidelity: flattening, Hausdorff distance and SVG previews

Every primitive is reduced to polylines; two drawings are compared as the
point sets of their resampled polylines.
"""
import logging
from fractions import Fraction

import numpy as np
from lxml import etree
from scipy.spatial.distance import directed_hausdorff

from entity.models import Circle, Label, Point, Polyline, QuadBezier, Rectangle, Scene, Segment, format_number
from schemas.options import ArrowStyle, FlattenPolicy
from services import curves, scene_ir
from services.errors import DomainError, EmptyGeometry, EmptyScene
from services.ingest_svg import SVG_NS

logger = logging.getLogger(__name__)

ARROW_MARKER_ID = "arrow"


def flatten_primitive(primitive, policy: FlattenPolicy = FlattenPolicy(),
                      arrow_style: ArrowStyle = ArrowStyle()) -> list[Polyline]:
    match primitive:
        case Segment(p0=p0, p1=p1, arrow=arrow):
            lines = [Polyline(points=[p0, p1])]
            if arrow:
                direction = (p1.x - p0.x, p1.y - p0.y)
                lines.extend(Polyline(points=[barb.p0, barb.p1]) for barb in curves.arrowhead(p1, direction, arrow_style))
            return lines
        case QuadBezier(p0=p0, c=c, p1=p1):
            return [curves.flatten_quad(p0, c, p1, policy)]
        case Rectangle():
            return [Polyline(points=[edge.p0, edge.p1]) for edge in curves.rect_as_segments(primitive)]
        case Circle():
            return [curves.circle_polyline(primitive, policy.circle_segments)]
        case Label(anchor=anchor):
            return [Polyline(points=[anchor])]
    raise TypeError(f"unknown primitive {primitive!r}")


def flatten_scene(scene: Scene, policy: FlattenPolicy = FlattenPolicy(),
                  arrow_style: ArrowStyle = ArrowStyle()) -> list[Polyline]:
    """
    Flattens a scene to polylines in scene order.

    Arrowed segments give the shaft and both barbs, rectangles their four
    edges, circles a closed ``circle_segments``-gon and labels their anchor.

    :param scene: Scene to flatten
    :type scene: Scene
    :param policy: Curve and circle sampling
    :type policy: FlattenPolicy
    :param arrow_style: Barb geometry, as used for emission
    :type arrow_style: ArrowStyle
    :return: Polylines
    :rtype: list[Polyline]
    """
    return [line for primitive in scene.primitives for line in flatten_primitive(primitive, policy, arrow_style)]


def resample(polyline: Polyline, spacing: float) -> np.ndarray:
    """
    Points along a polyline no more than ``spacing`` apart, vertices included.
    A polyline of zero length collapses to its first point.

    :param polyline: Polyline to resample
    :type polyline: Polyline
    :param spacing: Largest gap between consecutive samples
    :type spacing: float
    :return: ``(m, 2)`` float array
    :rtype: np.ndarray
    """
    points = polyline.points
    if curves.polyline_length(polyline) == 0:
        return points[:1].copy()
    edges = np.diff(points, axis=0)
    counts = np.maximum(1, np.ceil(np.hypot(edges[:, 0], edges[:, 1]) / spacing)).astype(int)
    index = np.repeat(np.arange(len(counts)), counts)
    steps = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
    t = (steps / counts[index])[:, None]
    samples = points[:-1][index] + edges[index] * t
    return np.vstack([samples, points[-1:]])


def _point_cloud(polylines: list[Polyline], spacing: float) -> np.ndarray:
    return np.vstack([resample(line, spacing) for line in polylines])


def hausdorff(a: list[Polyline], b: list[Polyline], sample_spacing: float = 0.5) -> float:
    """
    Symmetric Hausdorff distance between two polyline sets.

    :param a: First geometry
    :type a: list[Polyline]
    :param b: Second geometry
    :type b: list[Polyline]
    :param sample_spacing: Resampling interval in picture units
    :type sample_spacing: float
    :return: Distance, at least 0
    :rtype: float
    :raise: EmptyGeometry if either side has no polylines
    :raise: DomainError for a non-positive spacing
    """
    if not a or not b:
        raise EmptyGeometry()
    if not sample_spacing > 0:
        raise DomainError(f"sample spacing must be positive, got {sample_spacing}")
    u, v = _point_cloud(a, sample_spacing), _point_cloud(b, sample_spacing)
    forward = directed_hausdorff(u, v, seed=0)[0]
    backward = directed_hausdorff(v, u, seed=0)[0]
    return float(max(forward, backward))


def _svg_number(value) -> str:
    text = format_number(value)
    return text if "/" not in text else repr(float(value))


def render_preview(scene: Scene, canvas_height) -> str:
    """
    Renders a scene as an SVG preview in top-left screen space.

    Picture ``y`` maps to ``canvas_height - y``; importing the preview with
    the same canvas height gives the scene back.

    :param scene: Scene in picture space
    :type scene: Scene
    :param canvas_height: Height of the preview canvas
    :type canvas_height: int | float | Fraction
    :return: SVG document text
    :rtype: str
    :raise: EmptyScene for a scene without primitives
    """
    box = scene_ir.scene_bbox(scene)
    top = Fraction(canvas_height)
    width = max(box.max.x, box.width)

    def xy(point: Point) -> tuple[str, str]:
        return _svg_number(point.x), _svg_number(top - point.y)

    root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS})
    root.set("version", "1.1")
    root.set("viewBox", f"0 0 {_svg_number(width)} {_svg_number(top)}")
    if any(isinstance(p, Segment) and p.arrow for p in scene.primitives):
        defs = etree.SubElement(root, f"{{{SVG_NS}}}defs")
        marker = etree.SubElement(defs, f"{{{SVG_NS}}}marker", id=ARROW_MARKER_ID, markerWidth="10", markerHeight="6",
                                  refX="10", refY="3", orient="auto")
        etree.SubElement(marker, f"{{{SVG_NS}}}path", d="M0,0 L10,3 L0,6")

    stroke = {"stroke": "black", "fill": "none"}
    for primitive in scene.primitives:
        match primitive:
            case Segment(p0=p0, p1=p1, arrow=arrow):
                (x1, y1), (x2, y2) = xy(p0), xy(p1)
                el = etree.SubElement(root, f"{{{SVG_NS}}}line", x1=x1, y1=y1, x2=x2, y2=y2, stroke="black")
                if arrow:
                    el.set("marker-end", f"url(#{ARROW_MARKER_ID})")
            case QuadBezier(p0=p0, c=c, p1=p1):
                d = "M {} {} Q {} {} {} {}".format(*xy(p0), *xy(c), *xy(p1))
                etree.SubElement(root, f"{{{SVG_NS}}}path", d=d, **stroke)
            case Rectangle(corner=corner, width=w, height=h):
                x, y = xy(Point(x=corner.x, y=corner.y + h))
                etree.SubElement(root, f"{{{SVG_NS}}}rect", x=x, y=y, width=_svg_number(w), height=_svg_number(h),
                                 **stroke)
            case Circle(center=center, diameter=diameter, filled=filled):
                cx, cy = xy(center)
                etree.SubElement(root, f"{{{SVG_NS}}}circle", cx=cx, cy=cy, r=_svg_number(diameter / 2),
                                 stroke="black", fill="black" if filled else "none")
            case Label(anchor=anchor, text=text):
                x, y = xy(anchor)
                etree.SubElement(root, f"{{{SVG_NS}}}text", x=x, y=y).text = text
    logger.debug("preview with %d elements", len(scene.primitives))
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")
