"""
Picture API Schema Definitions
"""
from pydantic import BaseModel, Field, field_validator

from entity.picture import Diagnostic
from repository.sources import SourceFormat
from schemas.options import CircleMode, LineMode


class SourceSchema(BaseModel):
    source: str = Field(min_length=1)
    format: SourceFormat = SourceFormat.scene
    scale: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    strict: bool = False


class ConvertSchema(SourceSchema):
    line_mode: LineMode = LineMode.qbezier
    circle_mode: str = "native"
    unitlength: str | None = Field(default=None, max_length=30)

    @field_validator("circle_mode")
    @classmethod
    def validate_circle_mode(cls, val: str):
        return str(CircleMode.parse(val))


class RoundtripSchema(ConvertSchema):
    t_step: float = Field(default=0.01, gt=0, le=1)
    max_distance: float | None = Field(default=None, ge=0, allow_inf_nan=False)


class CheckSchema(BaseModel):
    source: str = Field(min_length=1)


class DiagnosticSchema(BaseModel):
    rule: str
    severity: str
    message: str
    line: int | None = None
    column: int | None = None

    @classmethod
    def of(cls, diagnostic: Diagnostic, text: str) -> "DiagnosticSchema":
        line, column = diagnostic.span.line_col(text) if diagnostic.span else (None, None)
        return cls(rule=diagnostic.rule.value, severity=diagnostic.severity.value, message=diagnostic.message,
                   line=line, column=column)


class ConvertResponseSchema(BaseModel):
    picture: str
    diagnostics: list[DiagnosticSchema] = []


class CheckResponseSchema(BaseModel):
    ok: bool
    diagnostics: list[DiagnosticSchema] = []


class RenderResponseSchema(BaseModel):
    svg: str
    element_count: int
    diagnostics: list[DiagnosticSchema] = []


class RoundtripResponseSchema(BaseModel):
    distance: float
    max_distance: float
    passed: bool
    picture: str
    diagnostics: list[DiagnosticSchema] = []
