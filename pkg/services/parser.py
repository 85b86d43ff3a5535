"""
Picture environment reader and linter

Reads ``\\begin{picture}`` source into a :class:`PictureDoc`, checks it against
the slope and box rules, and rebuilds a scene from it.
"""
import logging
import math
import re
from fractions import Fraction

from conf import messages
from entity.models import Circle, Label, Point, QuadBezier, Scene, Segment, format_number
from entity.picture import (CircleCmd, Diagnostic, LineCmd, PictureDoc, Put, Qbezier, Rule, SlopeKind, Span,
                            TextCmd, VectorCmd, is_integral)
from schemas.options import ArrowStyle
from services import curves, scene_ir, slope
from services.errors import LintFailed, PictureSyntaxError

logger = logging.getLogger(__name__)

NUMBER = r"[-+]?(?:\d+(?:\.\d*)?|\.\d+)"
PAIR = rf"\(\s*({NUMBER})\s*,\s*({NUMBER})\s*\)"

HEADER_RE = re.compile(rf"\\begin\s*\{{\s*picture\s*\}}\s*{PAIR}(?:\s*{PAIR})?")
END_RE = re.compile(r"\\end\s*\{\s*picture\s*\}")
QBEZIER_RE = re.compile(rf"\\qbezier\s*{PAIR}\s*{PAIR}\s*{PAIR}")
PUT_RE = re.compile(rf"\\put\s*{PAIR}\s*\{{")
STROKE_BODY_RE = re.compile(rf"\s*\\(line|vector)\s*{PAIR}\s*\{{\s*({NUMBER})\s*\}}\s*\Z")
CIRCLE_BODY_RE = re.compile(rf"\s*\\circle\s*(\*?)\s*\{{\s*({NUMBER})\s*\}}\s*\Z")
GROUP_RE = re.compile(r"\s*\{(.*)\}\s*\Z", re.S)
SKIP_RE = re.compile(r"(?:\s+|%[^\n]*)+")
RESYNC_RE = re.compile(r"[\\\n]")

COLLINEAR_TOLERANCE = 1e-6
# head strokes within this distance of the computed barbs make an arrowhead
BARB_TOLERANCE = 1.5
# shafts shorter than this many barb lengths keep their head strokes
MIN_SHAFT_BARBS = 4


def _point(x: str, y: str) -> Point:
    return Point(x=Fraction(x), y=Fraction(y))


def _syntax(message: str, start: int, end: int) -> Diagnostic:
    return Diagnostic(rule=Rule.E04, message=message, span=Span(start=start, end=end))


def _close_brace(text: str, open_at: int, limit: int) -> tuple[int, int] | None:
    """
    Finds the brace matching ``text[open_at]``.

    :return: index of the closing brace and the deepest nesting seen inside, or None
    """
    depth, deepest, pos = 0, 0, open_at
    while pos < limit:
        ch = text[pos]
        if ch == "\\":
            pos += 2
            continue
        if ch == "{":
            depth += 1
            deepest = max(deepest, depth)
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return pos, deepest - 1
        pos += 1
    return None


def _resync(text: str, pos: int, limit: int) -> int:
    """Start of the next command or line after a bad token."""
    found = RESYNC_RE.search(text, pos + 1, limit)
    return found.start() if found else limit


def reads_as_command(text: str) -> bool:
    """
    True when a ``\\put`` body with this text would read back as a drawing.

    >>> reads_as_command("\\\\line(1,0){40}"), reads_as_command("$x$")
    (True, False)
    """
    return bool(STROKE_BODY_RE.match(text) or CIRCLE_BODY_RE.match(text))


def _put_body(body: str):
    stroke = STROKE_BODY_RE.match(body)
    if stroke:
        name, a, b, length = stroke.groups()
        cmd = LineCmd if name == "line" else VectorCmd
        return cmd(a=Fraction(a), b=Fraction(b), length=Fraction(length))
    circle = CIRCLE_BODY_RE.match(body)
    if circle:
        star, diameter = circle.groups()
        return CircleCmd(diameter=Fraction(diameter), filled=bool(star))
    # label text spelled like a drawing command is written inside one extra group
    group = GROUP_RE.match(body)
    if group and reads_as_command(group.group(1)):
        return TextCmd(text=group.group(1))
    return TextCmd(text=body)


def parse_picture(text: str) -> tuple[PictureDoc, list[Diagnostic]]:
    """
    Parses picture source and lints it.

    Text before ``\\begin{picture}`` and after ``\\end{picture}`` is ignored.
    Unrecognized commands give E04 and are skipped; a ``\\put`` body that is
    not a ``\\line``, ``\\vector`` or ``\\circle`` is label text.

    :param text: Source text
    :type text: str
    :return: Document and diagnostics ordered by position
    :rtype: tuple[PictureDoc, list[Diagnostic]]
    :raise: PictureSyntaxError when the header is missing or malformed
    """
    header = HEADER_RE.search(text)
    if header is None:
        raise PictureSyntaxError(_syntax(messages.MISSING_HEADER, 0, len(text)))
    width, height, ox, oy = header.groups()
    origin = _point(ox, oy) if ox is not None else Point(x=0, y=0)

    found: list[Diagnostic] = []
    commands = []
    pos = header.end()
    end = END_RE.search(text, pos)
    limit = end.start() if end else len(text)
    if end is None:
        found.append(_syntax(messages.MISSING_END, len(text), len(text)))

    while True:
        skipped = SKIP_RE.match(text, pos, limit)
        if skipped:
            pos = skipped.end()
        if pos >= limit:
            break
        if text.startswith("\\qbezier", pos):
            match = QBEZIER_RE.match(text, pos, limit)
            if match:
                x0, y0, cx, cy, x1, y1 = match.groups()
                commands.append(Qbezier(p0=_point(x0, y0), c=_point(cx, cy), p1=_point(x1, y1),
                                        span=Span(start=pos, end=match.end())))
                pos = match.end()
                continue
        elif text.startswith("\\put", pos):
            match = PUT_RE.match(text, pos, limit)
            if match:
                closed = _close_brace(text, match.end() - 1, limit)
                if closed is None:
                    found.append(_syntax(messages.UNTERMINATED_GROUP, pos, limit))
                    break
                close, nesting = closed
                span = Span(start=pos, end=close + 1)
                body = text[match.end():close]
                inner = _put_body(body)
                if isinstance(inner, TextCmd) and inner.text != body:
                    nesting -= 1
                if isinstance(inner, TextCmd) and nesting > 1:
                    found.append(_syntax(messages.LABEL_NESTING, span.start, span.end))
                elif isinstance(inner, TextCmd) and not body.strip():
                    found.append(_syntax(messages.EMPTY_PUT_BODY, span.start, span.end))
                elif isinstance(inner, CircleCmd) and inner.diameter <= 0:
                    found.append(_syntax(messages.NON_POSITIVE_DIAMETER, span.start, span.end))
                else:
                    x, y = match.group(1), match.group(2)
                    commands.append(Put(x=Fraction(x), y=Fraction(y), inner=inner, span=span))
                pos = close + 1
                continue
        stop = _resync(text, pos, limit)
        found.append(_syntax(messages.UNKNOWN_COMMAND, pos, stop))
        pos = stop

    doc = PictureDoc(width=Fraction(width), height=Fraction(height), origin=origin, commands=tuple(commands))
    found.extend(lint(doc))
    found.sort(key=lambda d: (d.span.start if d.span else -1, d.rule.value))
    logger.debug("parsed %d commands, %d diagnostics", len(commands), len(found))
    return doc, found


def lint(doc: PictureDoc) -> list[Diagnostic]:
    """
    Checks slopes, argument types and reference points of a document.

    Every ``\\line`` is checked against bound 6 and every ``\\vector`` against
    bound 4 (E01-E03); non-integer slope or length arguments give W02; a
    ``\\put`` reference point outside the picture box gives W01.

    :param doc: Parsed document
    :type doc: PictureDoc
    :return: Diagnostics with command spans
    :rtype: list[Diagnostic]
    """
    found = []
    low_x, low_y = doc.origin.x, doc.origin.y
    high_x, high_y = low_x + doc.width, low_y + doc.height
    for cmd in doc.commands:
        if not isinstance(cmd, Put):
            continue
        if not (low_x <= cmd.x <= high_x and low_y <= cmd.y <= high_y):
            found.append(Diagnostic(rule=Rule.W01, span=cmd.span, message=messages.OUTSIDE_BOX.format(
                x=format_number(cmd.x), y=format_number(cmd.y),
                width=format_number(doc.width), height=format_number(doc.height))))
        inner = cmd.inner
        if not isinstance(inner, (LineCmd, VectorCmd)):
            continue
        for value in (inner.a, inner.b, inner.length):
            if not is_integral(value):
                found.append(Diagnostic(rule=Rule.W02, span=cmd.span,
                                        message=messages.NON_INTEGER_ARG.format(value=format_number(value), command=inner.kind)))
        if is_integral(inner.a) and is_integral(inner.b):
            kind = SlopeKind.line if isinstance(inner, LineCmd) else SlopeKind.vector
            found.extend(d.model_copy(update={"span": cmd.span}) for d in slope.validate_slope(inner.a, inner.b, kind))
    return found


def _stroke_end(cmd: Put) -> Point:
    inner = cmd.inner
    length = inner.length
    if inner.a == 0:
        step = length if inner.b > 0 else -length
        return Point(x=cmd.x, y=cmd.y + step)
    dx = length if inner.a > 0 else -length
    return Point(x=cmd.x + dx, y=cmd.y + dx * Fraction(inner.b) / Fraction(inner.a))


def _is_stroke(primitive) -> bool:
    return isinstance(primitive, QuadBezier) or (isinstance(primitive, Segment) and not primitive.arrow)


def is_arrowhead(shaft, head: list, style: ArrowStyle = ArrowStyle()) -> bool:
    """
    True when the two ``head`` strokes are the barbs drawn at the end of ``shaft``.

    Both strokes must start at the shaft end, and their far ends must lie within
    :data:`BARB_TOLERANCE` of the barbs :func:`curves.arrowhead` computes for the
    shaft, in either order. Shafts shorter than :data:`MIN_SHAFT_BARBS` barb
    lengths never qualify.
    """
    if not isinstance(shaft, Segment) or shaft.arrow or len(head) != 2:
        return False
    if not all(_is_stroke(stroke) and stroke.p0 == shaft.p1 for stroke in head):
        return False
    if math.dist(shaft.p0.as_floats(), shaft.p1.as_floats()) < MIN_SHAFT_BARBS * style.barb_length:
        return False
    direction = (shaft.p1.x - shaft.p0.x, shaft.p1.y - shaft.p0.y)
    expected = [barb.p1.as_floats() for barb in curves.arrowhead(shaft.p1, direction, style)]
    drawn = [stroke.p1.as_floats() for stroke in head]
    return any(all(math.dist(e, d) <= BARB_TOLERANCE for e, d in zip(expected, order))
               for order in (drawn, drawn[::-1]))


def _join_arrows(primitives: list, style: ArrowStyle) -> list:
    joined, i = [], 0
    while i < len(primitives):
        shaft = primitives[i]
        if is_arrowhead(shaft, primitives[i + 1:i + 3], style):
            joined.append(Segment(p0=shaft.p0, p1=shaft.p1, arrow=True))
            i += 3
        else:
            joined.append(shaft)
            i += 1
    return joined


def doc_to_scene(doc: PictureDoc, arrow_style: ArrowStyle | None = ArrowStyle()) -> Scene:
    """
    Rebuilds a scene from a parsed document.

    Degenerate ``\\qbezier`` commands (control on the chord) become segments;
    ``\\line``/``\\vector`` endpoints come from the slope pair and length.
    A straight stroke followed by its two head strokes becomes one arrowed
    segment (see :func:`is_arrowhead`) unless ``arrow_style`` is None.
    The optional picture origin is applied as a translation.

    :param doc: Document without lint errors
    :type doc: PictureDoc
    :param arrow_style: Barb geometry the head strokes are matched against, None keeps every stroke
    :type arrow_style: ArrowStyle | None
    :return: Scene in document order
    :rtype: Scene
    :raise: LintFailed if lint reports errors
    """
    errors = [d for d in lint(doc) if d.is_error]
    if errors:
        raise LintFailed(errors)
    primitives = []
    for cmd in doc.commands:
        if isinstance(cmd, Qbezier):
            if curves.is_collinear_control(cmd.p0, cmd.c, cmd.p1, COLLINEAR_TOLERANCE):
                primitives.append(Segment(p0=cmd.p0, p1=cmd.p1))
            else:
                primitives.append(QuadBezier(p0=cmd.p0, c=cmd.c, p1=cmd.p1))
            continue
        inner = cmd.inner
        match inner:
            case LineCmd():
                primitives.append(Segment(p0=cmd.anchor, p1=_stroke_end(cmd)))
            case VectorCmd():
                end = _stroke_end(cmd)
                primitives.append(Segment(p0=cmd.anchor, p1=end, arrow=end != cmd.anchor))
            case CircleCmd():
                primitives.append(Circle(center=cmd.anchor, diameter=inner.diameter, filled=inner.filled))
            case TextCmd():
                primitives.append(Label(anchor=cmd.anchor, text=" ".join(inner.text.splitlines())))
    if arrow_style is not None:
        primitives = _join_arrows(primitives, arrow_style)
    scene = Scene(primitives=tuple(primitives))
    return scene_ir.translate(scene, -doc.origin.x, -doc.origin.y)


def format_diagnostic(diagnostic: Diagnostic, text: str, path: str = "<input>") -> str:
    """``path:line:col: RULE severity: message``"""
    line, column = diagnostic.span.line_col(text) if diagnostic.span else (1, 1)
    return f"{path}:{line}:{column}: {diagnostic.rule.value} {diagnostic.severity.value}: {diagnostic.message}"
