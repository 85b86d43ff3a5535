"""
Conversion errors
"""
from conf import messages


class PaintTexError(Exception):
    default_message = "PaintTeX error"

    def __init__(self, detail: str | None = None):
        self.detail = detail or self.default_message
        super().__init__(self.detail)


class EmptyScene(PaintTexError):
    default_message = messages.EMPTY_SCENE


class EmptyGeometry(PaintTexError):
    default_message = messages.EMPTY_GEOMETRY


class ZeroDirection(PaintTexError):
    default_message = messages.ZERO_DIRECTION


class InconsistentSlope(PaintTexError):
    default_message = messages.INCONSISTENT_SLOPE


class NotNormalized(PaintTexError):
    default_message = messages.NOT_NORMALIZED


class DomainError(PaintTexError, ValueError):
    default_message = messages.DOMAIN_ERROR


class UnsupportedFeature(PaintTexError):
    default_message = messages.UNSUPPORTED_FEATURE


class MalformedInput(PaintTexError):
    default_message = messages.MALFORMED_INPUT

    def __init__(self, detail: str | None = None, line: int | None = None):
        self.line = line
        if detail and line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)


class LintFailed(PaintTexError):
    default_message = messages.LINT_FAILED

    def __init__(self, diagnostics: list, detail: str | None = None):
        self.diagnostics = diagnostics
        super().__init__(detail)


class PictureSyntaxError(PaintTexError):
    """Fatal parse failure; ``diagnostic`` is the E04 finding."""
    default_message = messages.MISSING_HEADER

    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super().__init__(diagnostic.message)
