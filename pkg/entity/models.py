"""
Scene data model

Picture space: origin bottom-left, Y-up, 1 unit = 1 ``\\unitlength``.
Coordinates are exact rationals so crop and flip compose without rounding.
"""
import math
from fractions import Fraction
from typing import Annotated, Any, Literal, Union

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, field_validator, model_validator


def to_fraction(value: Any) -> Fraction:
    """
    Converts a number or numeric string to an exact Fraction.

    >>> to_fraction("12.5")
    Fraction(25, 2)
    >>> to_fraction(3)
    Fraction(3, 1)

    :param value: int, float, Fraction, Decimal or numeric string
    :type value: Any
    :return: exact rational value
    :rtype: Fraction
    :raise: ValueError for NaN, infinity or non-numeric input
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a coordinate")
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError("coordinate must be finite")
    if isinstance(value, str):
        value = value.strip()
    try:
        return Fraction(value)
    except (TypeError, ZeroDivisionError) as err:
        raise ValueError(f"not a number: {value!r}") from err


def format_number(value: Any) -> str:
    """
    Exact text for a rational: an integer, a terminating decimal or ``num/den``.

    >>> format_number(Fraction(25, 2))
    '12.5'
    >>> format_number(Fraction(-1, 3))
    '-1/3'
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    rest, twos, fives = value.denominator, 0, 0
    while rest % 2 == 0:
        rest, twos = rest // 2, twos + 1
    while rest % 5 == 0:
        rest, fives = rest // 5, fives + 1
    if rest != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    digits = str(abs(value.numerator) * 10 ** places // value.denominator).rjust(places + 1, "0")
    text = f"{digits[:-places]}.{digits[-places:]}".rstrip("0")
    return f"-{text}" if value < 0 else text


Coord = Annotated[Fraction, BeforeValidator(to_fraction), PlainSerializer(float, return_type=float)]


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Point(FrozenModel):
    x: Coord
    y: Coord

    @classmethod
    def of(cls, x: Any, y: Any) -> "Point":
        return cls(x=x, y=y)

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


class CanvasFrame(FrozenModel):
    canv_left: Coord
    canv_top: Coord

    @field_validator("canv_top")
    @classmethod
    def check_top(cls, val: Fraction):
        if val < 0:
            raise ValueError("canv_top must be non-negative")
        return val


class Segment(FrozenModel):
    kind: Literal["segment"] = "segment"
    p0: Point
    p1: Point
    arrow: bool = False

    @model_validator(mode="after")
    def check_direction(self):
        # a vector needs a direction
        if self.arrow and self.p0 == self.p1:
            raise ValueError("arrowed segment needs distinct endpoints")
        return self


class Rectangle(FrozenModel):
    kind: Literal["rect"] = "rect"
    corner: Point
    width: Coord
    height: Coord

    @field_validator("width", "height")
    @classmethod
    def check_extent(cls, val: Fraction):
        if val < 0:
            raise ValueError("rectangle extent must be non-negative")
        return val


class Circle(FrozenModel):
    kind: Literal["circle"] = "circle"
    center: Point
    diameter: Coord
    filled: bool = False

    @field_validator("diameter")
    @classmethod
    def check_diameter(cls, val: Fraction):
        if val <= 0:
            raise ValueError("circle diameter must be positive")
        return val


class QuadBezier(FrozenModel):
    kind: Literal["qbezier"] = "qbezier"
    p0: Point
    c: Point
    p1: Point


class Label(FrozenModel):
    kind: Literal["label"] = "label"
    anchor: Point
    text: str = Field(min_length=1)

    @field_validator("text")
    @classmethod
    def check_braces(cls, val: str):
        if "\n" in val:
            raise ValueError("label text must be a single line")
        depth = 0
        escaped = False
        for ch in val:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == "{":
                depth += 1
                if depth > 1:
                    raise ValueError("label text nests braces deeper than one level")
            elif ch == "}":
                depth -= 1
                if depth < 0:
                    raise ValueError("label text has an unbalanced '}'")
        if depth:
            raise ValueError("label text has an unbalanced '{'")
        return val


Primitive = Annotated[Union[Segment, Rectangle, Circle, QuadBezier, Label], Field(discriminator="kind")]


class Scene(FrozenModel):
    primitives: tuple[Primitive, ...] = ()

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(p.kind for p in self.primitives)


class BoundingBox(FrozenModel):
    min: Point
    max: Point

    @model_validator(mode="after")
    def check_order(self):
        if self.min.x > self.max.x or self.min.y > self.max.y:
            raise ValueError("bounding box min exceeds max")
        return self

    @property
    def width(self) -> Fraction:
        return self.max.x - self.min.x

    @property
    def height(self) -> Fraction:
        return self.max.y - self.min.y


class Polyline(FrozenModel):
    """Ordered points as a float64 array of shape (n, 2)."""
    points: np.ndarray

    @field_validator("points", mode="before")
    @classmethod
    def as_array(cls, val: Any):
        arr = np.array(
            [p.as_floats() if isinstance(p, Point) else p for p in val] if not isinstance(val, np.ndarray) else val,
            dtype=np.float64,
        )
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise ValueError("polyline needs an (n, 2) point array with n >= 1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("polyline coordinates must be finite")
        arr.setflags(write=False)
        return arr

    def __len__(self) -> int:
        return int(self.points.shape[0])
