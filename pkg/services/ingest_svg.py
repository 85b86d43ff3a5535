"""
SVG import

SVG user space has its origin at the top left with Y pointing down, like a
screen canvas; imported geometry is scaled, then mirrored into picture space
with the viewBox height as the mirror height.
"""
import logging
import re
from fractions import Fraction

from lxml import etree
from pydantic import ValidationError

from conf import messages
from entity.models import Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment, to_fraction
from entity.picture import Diagnostic, Rule
from schemas.options import ImportOptions
from services import scene_ir
from services.errors import MalformedInput, UnsupportedFeature

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
CONTAINERS = {"g", "svg"}
SILENT = {"defs", "title", "desc", "metadata", "style", "marker"}

NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
PATH_TOKEN_RE = re.compile(rf"(?P<cmd>[A-Za-z])|(?P<num>{NUMBER})|(?P<sep>[\s,]+)|(?P<bad>.)")
LENGTH_RE = re.compile(rf"\s*({NUMBER})\s*(px)?\s*$")
NUMBER_LIST_RE = re.compile(NUMBER)
PATH_ARITY = {"M": 2, "L": 2, "H": 1, "V": 1, "Q": 4, "Z": 0}
# TeX specials in label text, unless already escaped
TEX_SPECIAL_RE = re.compile(r"(?<!\\)([%#&$])")


def _local(el) -> str:
    return etree.QName(el).localname


def _namespace(el) -> str | None:
    return etree.QName(el).namespace


def _length(value: str | None, default=0) -> Fraction:
    if value is None:
        return Fraction(default)
    match = LENGTH_RE.match(value)
    if match is None:
        raise MalformedInput(f"unsupported length {value!r}")
    return to_fraction(match.group(1))


def _numbers(value: str) -> list[Fraction]:
    return [to_fraction(v) for v in NUMBER_LIST_RE.findall(value or "")]


def _style(el) -> dict[str, str]:
    declarations = {}
    for item in (el.get("style") or "").split(";"):
        name, sep, value = item.partition(":")
        if sep:
            declarations[name.strip()] = value.strip()
    return declarations


def _presentation(el, name: str) -> str | None:
    """Presentation attribute, inline style taking precedence."""
    return _style(el).get(name, el.get(name))


def parse_path_data(d: str) -> list[Segment | QuadBezier]:
    """
    Parses SVG path data with M, L, H, V, Q and Z commands.

    Coordinates stay in SVG space. Relative commands accumulate from the
    current point; extra coordinate groups repeat the previous command
    (a moveto repeats as lineto); Z closes to the subpath start.

    :param d: Path data
    :type d: str
    :return: Segments and quadratic curves in path order
    :rtype: list[Segment | QuadBezier]
    :raise: MalformedInput for unsupported commands or bad argument counts
    """
    tokens = []
    for match in PATH_TOKEN_RE.finditer(d or ""):
        if match.lastgroup == "bad":
            raise MalformedInput(f"unexpected character {match.group()!r} in path data")
        if match.lastgroup == "cmd":
            if match.group().upper() not in PATH_ARITY:
                raise MalformedInput(f"unsupported path command {match.group()!r}")
            tokens.append(match.group())
        elif match.lastgroup == "num":
            tokens.append(to_fraction(match.group()))
    if not tokens:
        raise MalformedInput("empty path data")
    if tokens[0] not in ("M", "m"):
        raise MalformedInput("path data must start with a moveto")

    parts: list[Segment | QuadBezier] = []
    current = start = Point(x=0, y=0)
    cmd = None
    i = 0
    while i < len(tokens):
        if isinstance(tokens[i], str):
            cmd = tokens[i]
            i += 1
            if cmd in "Zz":
                if current != start:
                    parts.append(Segment(p0=current, p1=start))
                current = start
                continue
        elif cmd in (None, "Z", "z"):
            raise MalformedInput("coordinates without a command in path data")
        arity = PATH_ARITY[cmd.upper()]
        args = tokens[i:i + arity]
        if len(args) < arity or any(isinstance(a, str) for a in args):
            raise MalformedInput(f"path command {cmd!r} needs {arity} numbers")
        i += arity
        relative = cmd.islower()

        def at(x, y) -> Point:
            return Point(x=current.x + x, y=current.y + y) if relative else Point(x=x, y=y)

        match cmd.upper():
            case "M":
                current = start = at(*args)
                cmd = "l" if relative else "L"
            case "L":
                end = at(*args)
                parts.append(Segment(p0=current, p1=end))
                current = end
            case "H":
                end = Point(x=current.x + args[0] if relative else args[0], y=current.y)
                parts.append(Segment(p0=current, p1=end))
                current = end
            case "V":
                end = Point(x=current.x, y=current.y + args[0] if relative else args[0])
                parts.append(Segment(p0=current, p1=end))
                current = end
            case "Q":
                control, end = at(args[0], args[1]), at(args[2], args[3])
                parts.append(QuadBezier(p0=current, c=control, p1=end))
                current = end
    return parts


class _Importer:
    def __init__(self, opts: ImportOptions, min_x: Fraction, min_y: Fraction):
        self.opts = opts
        self.scale = Fraction(opts.scale)
        self.min_x = min_x
        self.min_y = min_y
        self.primitives = []
        self.diagnostics: list[Diagnostic] = []

    def point(self, x, y) -> Point:
        return Point(x=(x - self.min_x) * self.scale, y=(y - self.min_y) * self.scale)

    def skip(self, el, message: str):
        detail = f"{message} (line {el.sourceline})"
        if self.opts.strict:
            raise UnsupportedFeature(detail)
        logger.warning(detail)
        self.diagnostics.append(Diagnostic(rule=Rule.W03, message=detail))

    def walk(self, parent):
        for el in parent:
            if not isinstance(el.tag, str):
                continue
            if _namespace(el) not in (None, SVG_NS):
                continue
            tag = _local(el)
            if tag in SILENT:
                continue
            if el.get("transform") is not None:
                self.skip(el, messages.TRANSFORM_REJECTED.format(tag=tag))
                continue
            if tag in CONTAINERS:
                self.walk(el)
                continue
            handler = getattr(self, f"on_{tag}", None)
            if handler is None:
                self.skip(el, messages.UNSUPPORTED_ELEMENT.format(tag=tag))
                continue
            try:
                handler(el)
            except (MalformedInput, ValidationError) as err:
                message = err.detail if isinstance(err, MalformedInput) else err.errors()[0]["msg"]
                self.skip(el, f"<{tag}>: {message}")

    def on_line(self, el):
        p0 = self.point(_length(el.get("x1")), _length(el.get("y1")))
        p1 = self.point(_length(el.get("x2")), _length(el.get("y2")))
        marker = _presentation(el, "marker-end")
        arrow = marker is not None and marker != "none" and p0 != p1
        self.primitives.append(Segment(p0=p0, p1=p1, arrow=arrow))

    def on_rect(self, el):
        corner = self.point(_length(el.get("x")), _length(el.get("y")))
        width, height = _length(el.get("width")) * self.scale, _length(el.get("height")) * self.scale
        self.primitives.append(Rectangle(corner=corner, width=width, height=height))

    def on_circle(self, el):
        center = self.point(_length(el.get("cx")), _length(el.get("cy")))
        diameter = 2 * _length(el.get("r")) * self.scale
        fill = _presentation(el, "fill")
        self.primitives.append(Circle(center=center, diameter=diameter, filled=fill is not None and fill != "none"))

    def on_text(self, el):
        text = TEX_SPECIAL_RE.sub(r"\\\1", " ".join("".join(el.itertext()).split()))
        if not text:
            self.skip(el, messages.EMPTY_TEXT)
            return
        xs, ys = _numbers(el.get("x", "0")), _numbers(el.get("y", "0"))
        anchor = self.point(xs[0] if xs else 0, ys[0] if ys else 0)
        self.primitives.append(Label(anchor=anchor, text=text))

    def on_path(self, el):
        for part in parse_path_data(el.get("d", "")):
            if isinstance(part, Segment):
                self.primitives.append(Segment(p0=self.point(part.p0.x, part.p0.y), p1=self.point(part.p1.x, part.p1.y)))
            else:
                self.primitives.append(QuadBezier(p0=self.point(part.p0.x, part.p0.y), c=self.point(part.c.x, part.c.y),
                                                  p1=self.point(part.p1.x, part.p1.y)))

    def _points_list(self, el, closed: bool):
        values = _numbers(el.get("points", ""))
        if len(values) % 2 or len(values) < 4:
            raise MalformedInput("points needs at least two coordinate pairs")
        points = [self.point(values[k], values[k + 1]) for k in range(0, len(values), 2)]
        if closed and points[0] != points[-1]:
            points.append(points[0])
        for p0, p1 in zip(points, points[1:]):
            self.primitives.append(Segment(p0=p0, p1=p1))

    def on_polyline(self, el):
        self._points_list(el, closed=False)

    def on_polygon(self, el):
        self._points_list(el, closed=True)


def _canvas(root) -> tuple[Fraction, Fraction, Fraction]:
    """viewBox min-x, min-y and height; the viewBox wins over width/height."""
    view_box = root.get("viewBox")
    if view_box is not None:
        values = _numbers(view_box)
        if len(values) != 4 or values[3] < 0:
            raise MalformedInput(f"bad viewBox {view_box!r}")
        return values[0], values[1], values[3]
    if root.get("height") is None and root.get("width") is None:
        raise MalformedInput(messages.NO_CANVAS)
    return Fraction(0), Fraction(0), _length(root.get("height"))


def import_svg(text: str, opts: ImportOptions = ImportOptions()) -> tuple[Scene, list[Diagnostic]]:
    """
    Imports the supported SVG subset as a picture-space scene.

    :param text: SVG document
    :type text: str
    :param opts: Scale and strictness
    :type opts: ImportOptions
    :return: Scene in document order and W03 diagnostics for skipped content
    :rtype: tuple[Scene, list[Diagnostic]]
    :raise: MalformedInput for unparsable XML or a missing canvas size
    :raise: UnsupportedFeature for skipped content in strict mode
    """
    parser = etree.XMLParser(resolve_entities=False, no_network=True, remove_comments=True)
    try:
        root = etree.fromstring(text.encode("utf-8"), parser=parser)
    except etree.XMLSyntaxError as err:
        raise MalformedInput(str(err)) from err
    if _local(root) != "svg":
        raise MalformedInput(messages.NOT_SVG)
    min_x, min_y, height = _canvas(root)
    importer = _Importer(opts, min_x, min_y)
    importer.walk(root)
    scene = scene_ir.flip_vertical(Scene(primitives=tuple(importer.primitives)), height * importer.scale)
    logger.debug("imported %d primitives, %d skipped", len(scene.primitives), len(importer.diagnostics))
    return scene, importer.diagnostics
