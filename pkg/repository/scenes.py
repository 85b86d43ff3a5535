"""Scene file storage

Line-oriented scene text, one primitive per line::

    segment x0 y0 x1 y1
    vector x0 y0 x1 y1
    rect x y w h
    circle cx cy d [filled]
    qbezier x0 y0 cx cy x1 y1
    label x y text to end of line

``#`` starts a comment. Numbers are decimals or ``num/den`` rationals.
"""
import re

from pydantic import ValidationError

from entity.models import Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment, format_number, to_fraction
from services.errors import MalformedInput

ARITY = {"segment": 4, "vector": 4, "rect": 4, "qbezier": 6}
LABEL_RE = re.compile(r"\s*label\s+(\S+)\s+(\S+)\s(.*)$")


def _numbers(fields: list[str], line_no: int):
    try:
        return [to_fraction(f) for f in fields]
    except ValueError as err:
        raise MalformedInput(str(err), line=line_no) from err


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _parse_line(raw: str, line_no: int):
    label = LABEL_RE.match(raw)
    if label:
        x, y = _numbers([label.group(1), label.group(2)], line_no)
        text = label.group(3).strip()
        if not text:
            raise MalformedInput("label needs text", line=line_no)
        return Label(anchor=Point(x=x, y=y), text=text)

    fields = _strip_comment(raw).split()
    if not fields:
        return None
    keyword, args = fields[0], fields[1:]
    if keyword == "circle":
        filled = bool(args) and args[-1] == "filled"
        if filled:
            args = args[:-1]
        if len(args) != 3:
            raise MalformedInput("circle takes cx cy d [filled]", line=line_no)
        cx, cy, d = _numbers(args, line_no)
        return Circle(center=Point(x=cx, y=cy), diameter=d, filled=filled)
    if keyword == "label":
        raise MalformedInput("label takes x y text", line=line_no)
    if keyword not in ARITY:
        raise MalformedInput(f"unknown primitive {keyword!r}", line=line_no)
    if len(args) != ARITY[keyword]:
        raise MalformedInput(f"{keyword} takes {ARITY[keyword]} numbers, got {len(args)}", line=line_no)
    v = _numbers(args, line_no)
    if keyword == "rect":
        return Rectangle(corner=Point(x=v[0], y=v[1]), width=v[2], height=v[3])
    if keyword == "qbezier":
        return QuadBezier(p0=Point(x=v[0], y=v[1]), c=Point(x=v[2], y=v[3]), p1=Point(x=v[4], y=v[5]))
    return Segment(p0=Point(x=v[0], y=v[1]), p1=Point(x=v[2], y=v[3]), arrow=keyword == "vector")


def load_scene(text: str) -> Scene:
    """
    Reads a scene from scene-file text.

    :param text: Scene file content
    :type text: str
    :return: Scene in file order
    :rtype: Scene
    :raise: MalformedInput with the offending line number
    """
    primitives = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            continue
        try:
            primitive = _parse_line(raw, line_no)
        except ValidationError as err:
            raise MalformedInput(err.errors()[0]["msg"], line=line_no) from err
        if primitive is not None:
            primitives.append(primitive)
    return Scene(primitives=tuple(primitives))


def _point_fields(*points: Point) -> list[str]:
    return [format_number(v) for p in points for v in (p.x, p.y)]


def dump_scene(scene: Scene) -> str:
    """
    Writes a scene in scene-file syntax; ``load_scene`` reads it back unchanged.

    :param scene: Scene to write
    :type scene: Scene
    :return: Scene file text, LF endings
    :rtype: str
    """
    lines = []
    for p in scene.primitives:
        match p:
            case Segment():
                fields = ["vector" if p.arrow else "segment", *_point_fields(p.p0, p.p1)]
            case Rectangle():
                fields = ["rect", *_point_fields(p.corner), format_number(p.width), format_number(p.height)]
            case Circle():
                fields = ["circle", *_point_fields(p.center), format_number(p.diameter)] + (["filled"] if p.filled else [])
            case QuadBezier():
                fields = ["qbezier", *_point_fields(p.p0, p.c, p.p1)]
            case Label():
                fields = ["label", *_point_fields(p.anchor), p.text]
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n" if lines else ""
