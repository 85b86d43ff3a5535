"""
Picture environment model: slope pairs, commands, documents and diagnostics
"""
import enum
from fractions import Fraction
from math import gcd
from typing import Annotated, Literal, Optional, Union

from pydantic import Field, model_validator

from entity.models import Coord, FrozenModel, Point


class SlopeKind(enum.Enum):
    line: str = "line"
    vector: str = "vector"

    @property
    def bound(self) -> int:
        return 6 if self is SlopeKind.line else 4


class SlopePair(FrozenModel):
    a: int
    b: int

    @model_validator(mode="after")
    def check_pair(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("slope pair (0,0) has no direction")
        if gcd(self.a, self.b) != 1:
            raise ValueError("slope pair components must be coprime")
        return self


class Span(FrozenModel):
    """Half-open character range ``[start, end)`` into the parsed text."""
    start: int = Field(ge=0)
    end: int = Field(ge=0)

    def slice(self, text: str) -> str:
        return text[self.start:self.end]

    def line_col(self, text: str) -> tuple[int, int]:
        """1-based line and column of the span start."""
        line = text.count("\n", 0, self.start) + 1
        column = self.start - (text.rfind("\n", 0, self.start) + 1) + 1
        return line, column


class Severity(enum.Enum):
    error: str = "error"
    warning: str = "warning"


class Rule(enum.Enum):
    E01 = "E01"
    E02 = "E02"
    E03 = "E03"
    E04 = "E04"
    W01 = "W01"
    W02 = "W02"
    W03 = "W03"

    @property
    def title(self) -> str:
        return _RULE_TITLES[self]

    @property
    def severity(self) -> Severity:
        return Severity.error if self.value.startswith("E") else Severity.warning


_RULE_TITLES = {
    Rule.E01: "SlopeBound",
    Rule.E02: "CommonDivisor",
    Rule.E03: "ZeroSlope",
    Rule.E04: "Syntax",
    Rule.W01: "OutsideBox",
    Rule.W02: "NonIntegerArg",
    Rule.W03: "Unsupported",
}


class Diagnostic(FrozenModel):
    rule: Rule
    message: str
    span: Optional[Span] = None

    @property
    def severity(self) -> Severity:
        return self.rule.severity

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.error


class LineCmd(FrozenModel):
    kind: Literal["line"] = "line"
    a: Coord
    b: Coord
    length: Coord


class VectorCmd(FrozenModel):
    kind: Literal["vector"] = "vector"
    a: Coord
    b: Coord
    length: Coord


class CircleCmd(FrozenModel):
    kind: Literal["circle"] = "circle"
    diameter: Coord
    filled: bool = False


class TextCmd(FrozenModel):
    kind: Literal["text"] = "text"
    text: str


InnerCommand = Annotated[Union[LineCmd, VectorCmd, CircleCmd, TextCmd], Field(discriminator="kind")]


class Put(FrozenModel):
    kind: Literal["put"] = "put"
    x: Coord
    y: Coord
    inner: InnerCommand
    span: Optional[Span] = None

    @property
    def anchor(self) -> Point:
        return Point(x=self.x, y=self.y)


class Qbezier(FrozenModel):
    kind: Literal["qbezier"] = "qbezier"
    p0: Point
    c: Point
    p1: Point
    span: Optional[Span] = None


PictureCommand = Annotated[Union[Put, Qbezier], Field(discriminator="kind")]


class PictureDoc(FrozenModel):
    width: Coord
    height: Coord
    origin: Point = Point(x=0, y=0)
    commands: tuple[PictureCommand, ...] = ()

    @model_validator(mode="after")
    def check_spans(self):
        last_end = 0
        for cmd in self.commands:
            if cmd.span is None:
                continue
            if cmd.span.start < last_end or cmd.span.end < cmd.span.start:
                raise ValueError("command spans must be ordered and non-overlapping")
            last_end = cmd.span.end
        return self


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1
