"""
Conversion option schemas
"""
import enum
import math

from pydantic import BaseModel, ConfigDict, Field, field_validator


class LineMode(enum.Enum):
    qbezier: str = "qbezier"
    native_when_exact: str = "native-when-exact"


class FlattenPolicy(BaseModel):
    t_step: float = Field(default=0.01, gt=0, le=1)
    circle_segments: int = Field(default=100, ge=8)

    model_config = ConfigDict(frozen=True)


class ArrowStyle(BaseModel):
    barb_length: float = Field(default=math.sqrt(58), gt=0, allow_inf_nan=False)
    barb_half_angle: float = Field(default=math.atan2(3, 7), gt=0, lt=math.pi / 2)

    model_config = ConfigDict(frozen=True)


class CircleMode(BaseModel):
    """Native ``\\circle`` (``n_arcs`` is None) or lowering to ``n_arcs`` quadratic arcs."""
    n_arcs: int | None = Field(default=None, ge=4)

    model_config = ConfigDict(frozen=True)

    @property
    def native(self) -> bool:
        return self.n_arcs is None

    @classmethod
    def parse(cls, text: str) -> "CircleMode":
        """
        Reads ``native`` or ``quads:N``.

        >>> CircleMode.parse("quads:8").n_arcs
        8
        """
        text = text.strip().lower()
        if text == "native":
            return cls()
        name, _, count = text.partition(":")
        if name != "quads" or not count.isdigit():
            raise ValueError(f"circle mode must be 'native' or 'quads:N', got {text!r}")
        return cls(n_arcs=int(count))

    def __str__(self) -> str:
        return "native" if self.native else f"quads:{self.n_arcs}"


class EmitOptions(BaseModel):
    line_mode: LineMode = LineMode.qbezier
    circle_mode: CircleMode = CircleMode()
    arrow_style: ArrowStyle = ArrowStyle()
    exactness_tolerance: float = Field(default=1e-9, ge=0)
    strict: bool = False

    model_config = ConfigDict(frozen=True)


class ImportOptions(BaseModel):
    scale: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    strict: bool = False

    model_config = ConfigDict(frozen=True)


class FidelityOptions(BaseModel):
    sample_spacing: float = Field(default=0.5, gt=0)
    max_distance: float = Field(default=1.5, ge=0)
    policy: FlattenPolicy = FlattenPolicy()

    model_config = ConfigDict(frozen=True)

    @field_validator("max_distance")
    @classmethod
    def validate_finite(cls, val: float):
        if not math.isfinite(val):
            raise ValueError("max_distance must be finite")
        return val
