"""
Picture code generation

Turns a scene into ``\\begin{picture}`` source. Straight strokes default to
degenerate ``\\qbezier`` commands, which draw any slope; native ``\\line`` and
``\\vector`` are used only on request and only where they are exact.
"""
import logging
import math
from fractions import Fraction
from typing import Iterable

from entity.models import Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment, format_number, to_fraction
from entity.picture import CircleCmd, LineCmd, Put, Qbezier, SlopeKind, TextCmd, VectorCmd
from schemas.options import EmitOptions, LineMode
from services import curves, parser, scene_ir, slope
from services.errors import InconsistentSlope, NotNormalized

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def round_coord(value) -> int:
    """
    Rounds half away from zero, exactly.

    >>> round_coord(104.5), round_coord(-2.5), round_coord(15.5)
    (105, -3, 16)
    """
    value = to_fraction(value)
    magnitude = math.floor(abs(value) + HALF)
    return magnitude if value >= 0 else -magnitude


def round_point(point: Point) -> Point:
    return Point(x=round_coord(point.x), y=round_coord(point.y))


def _qbezier(p0: Point, c: Point, p1: Point) -> Qbezier:
    return Qbezier(p0=round_point(p0), c=round_point(c), p1=round_point(p1))


def _is_integral(point: Point, tolerance: float = 1e-9) -> bool:
    return all(abs(v - round_coord(v)) <= tolerance for v in (point.x, point.y))


def _native_stroke(p0: Point, p1: Point, kind: SlopeKind, opts: EmitOptions) -> Put | None:
    """``\\put{\\line}``/``\\put{\\vector}`` when the stroke has an exact legal slope, else None."""
    if not (_is_integral(p0) and _is_integral(p1)):
        return None
    start, end = round_point(p0), round_point(p1)
    dx, dy = end.x - start.x, end.y - start.y
    if dx == 0 and dy == 0:
        return None
    pair, error = slope.rationalize_slope(dx, dy, kind)
    if error > opts.exactness_tolerance:
        return None
    try:
        length = slope.line_length_arg(start, end, pair)
    except InconsistentSlope:
        return None
    if length < 1:
        return None
    cmd = LineCmd if kind is SlopeKind.line else VectorCmd
    return Put(x=start.x, y=start.y, inner=cmd(a=pair.a, b=pair.b, length=length))


def _straight(p0: Point, p1: Point, opts: EmitOptions) -> Put | Qbezier:
    if opts.line_mode is LineMode.native_when_exact:
        native = _native_stroke(p0, p1, SlopeKind.line, opts)
        if native is not None:
            return native
    quad = curves.segment_as_quad(p0, p1)
    return _qbezier(quad.p0, quad.c, quad.p1)


def _arrow(segment: Segment, opts: EmitOptions) -> list[Put | Qbezier]:
    if opts.line_mode is LineMode.native_when_exact:
        native = _native_stroke(segment.p0, segment.p1, SlopeKind.vector, opts)
        if native is not None:
            return [native]
    direction = (segment.p1.x - segment.p0.x, segment.p1.y - segment.p0.y)
    barbs = curves.arrowhead(segment.p1, direction, opts.arrow_style)
    commands = [_straight(segment.p0, segment.p1, opts)]
    for barb in barbs:
        quad = curves.segment_as_quad(barb.p0, barb.p1)
        commands.append(_qbezier(quad.p0, quad.c, quad.p1))
    return commands


def emit_primitive(primitive, opts: EmitOptions = EmitOptions()) -> list[Put | Qbezier]:
    """
    Lowers one primitive to picture commands.

    :param primitive: Primitive in normalized picture space
    :type primitive: Primitive
    :param opts: Emission options
    :type opts: EmitOptions
    :return: Commands in drawing order
    :rtype: list[Put | Qbezier]
    :raise: NotNormalized in strict mode when an anchor lies below the origin
    """
    if opts.strict and any(p.x < 0 or p.y < 0 for p in scene_ir.primitive_anchor_points(primitive)):
        raise NotNormalized()
    match primitive:
        case Label(anchor=anchor, text=text):
            anchor = round_point(anchor)
            return [Put(x=anchor.x, y=anchor.y, inner=TextCmd(text=text))]
        case Circle(center=center, diameter=diameter, filled=filled):
            if opts.circle_mode.native:
                center = round_point(center)
                size = max(1, round_coord(diameter))
                return [Put(x=center.x, y=center.y, inner=CircleCmd(diameter=size, filled=filled))]
            return [_qbezier(a.p0, a.c, a.p1) for a in curves.circle_as_quads(primitive, opts.circle_mode.n_arcs)]
        case QuadBezier(p0=p0, c=c, p1=p1):
            return [_qbezier(p0, c, p1)]
        case Rectangle():
            return [_straight(edge.p0, edge.p1, opts) for edge in curves.rect_as_segments(primitive)]
        case Segment(p0=p0, p1=p1, arrow=arrow):
            if arrow:
                return _arrow(primitive, opts)
            return [_straight(p0, p1, opts)]
    raise TypeError(f"unknown primitive {primitive!r}")


def _point_text(point: Point) -> str:
    return f"({format_number(point.x)},{format_number(point.y)})"


def render_command(cmd: Put | Qbezier) -> str:
    """
    One command in picture syntax, no spaces inside parentheses.

    :param cmd: Picture command
    :type cmd: Put | Qbezier
    :return: Command text without line ending
    :rtype: str
    """
    if isinstance(cmd, Qbezier):
        return f"\\qbezier{_point_text(cmd.p0)}{_point_text(cmd.c)}{_point_text(cmd.p1)}"
    inner = cmd.inner
    match inner:
        case LineCmd() | VectorCmd():
            body = f"\\{inner.kind}({format_number(inner.a)},{format_number(inner.b)}){{{format_number(inner.length)}}}"
        case CircleCmd():
            star = "*" if inner.filled else ""
            body = f"\\circle{star}{{{format_number(inner.diameter)}}}"
        case TextCmd():
            body = f"{{{inner.text}}}" if parser.reads_as_command(inner.text) else inner.text
        case _:
            raise TypeError(f"unknown command {inner!r}")
    return f"\\put{_point_text(cmd.anchor)}{{{body}}}"


def emit_commands(scene: Scene, opts: EmitOptions = EmitOptions()) -> Iterable[Put | Qbezier]:
    for primitive in scene.primitives:
        yield from emit_primitive(primitive, opts)


def emit_scene(scene: Scene, opts: EmitOptions = EmitOptions(), unitlength: str | None = None) -> str:
    """
    Emits a complete picture environment for a scene.

    The scene is cropped to its anchor box first; the header carries the box
    size rounded up. Commands follow scene order, one per line, LF endings.

    :param scene: Non-empty scene
    :type scene: Scene
    :param opts: Emission options
    :type opts: EmitOptions
    :param unitlength: Optional ``\\unitlength`` value, e.g. ``1pt``
    :type unitlength: str | None
    :return: Picture source text
    :rtype: str
    :raise: EmptyScene for a scene without primitives
    """
    normalized, width, height = scene_ir.normalize(scene)
    lines = []
    if unitlength:
        lines.append(f"\\setlength{{\\unitlength}}{{{unitlength}}}")
    lines.append(f"\\begin{{picture}}({math.ceil(width)},{math.ceil(height)})")
    commands = [render_command(cmd) for cmd in emit_commands(normalized, opts)]
    logger.debug("emitted %d commands for %d primitives", len(commands), len(scene.primitives))
    lines.extend(commands)
    lines.append("\\end{picture}")
    return "\n".join(lines) + "\n"
