"""Picture API Routes

Provides API routes for converting scenes and SVG drawings to picture code, linting picture code,
rendering previews and measuring round-trip fidelity."""
import logging

from fastapi import APIRouter, Body, HTTPException, status

from conf import messages
from conf.config import config
from schemas.options import CircleMode, EmitOptions, FidelityOptions, FlattenPolicy, ImportOptions
from schemas.pictures import (CheckResponseSchema, CheckSchema, ConvertResponseSchema, ConvertSchema,
                              DiagnosticSchema, RenderResponseSchema, RoundtripResponseSchema, RoundtripSchema,
                              SourceSchema)
from services import pipeline
from services.errors import LintFailed, MalformedInput, PaintTexError, PictureSyntaxError, UnsupportedFeature

logger = logging.getLogger(__name__)

router = APIRouter(prefix='/pictures', tags=['pictures'])

INPUT_ERRORS = (MalformedInput, PictureSyntaxError, UnsupportedFeature)


def _guard_size(text: str) -> None:
    if len(text) > config.MAX_SOURCE_LENGTH:
        raise HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=messages.SOURCE_TOO_LARGE)


def _http_error(err: PaintTexError) -> HTTPException:
    logger.info("request failed: %s", err.detail)
    if isinstance(err, INPUT_ERRORS):
        return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=err.detail)
    if isinstance(err, LintFailed):
        return HTTPException(status_code=status.HTTP_400_BAD_REQUEST,
                             detail=[f"{d.rule.value}: {d.message}" for d in err.diagnostics])
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=err.detail)


def _import_options(body: SourceSchema) -> ImportOptions:
    return ImportOptions(scale=body.scale, strict=body.strict)


def _emit_options(body: ConvertSchema) -> EmitOptions:
    return EmitOptions(line_mode=body.line_mode, circle_mode=CircleMode.parse(body.circle_mode), strict=body.strict)


@router.post('/convert', response_model=ConvertResponseSchema)
def convert(body: ConvertSchema = Body(...)):
    """
    Converts a scene, SVG or picture source to picture code.

    :param body: Source and conversion options
    :type body: ConvertSchema
    :return: Picture code and import diagnostics
    :rtype: ConvertResponseSchema
    :raise: HTTPException 413 for oversized sources, 422 for unreadable input, 400 for conversion failures
    """
    _guard_size(body.source)
    try:
        result = pipeline.convert_source(body.source, body.format, _import_options(body), _emit_options(body),
                                         unitlength=body.unitlength)
    except PaintTexError as err:
        raise _http_error(err)
    return ConvertResponseSchema(picture=result.picture,
                                 diagnostics=[DiagnosticSchema.of(d, body.source) for d in result.diagnostics])


@router.post('/check', response_model=CheckResponseSchema)
def check(body: CheckSchema = Body(...)):
    """
    Lints picture source. Lint errors are reported in the body, not as an HTTP error.

    :param body: Picture source
    :type body: CheckSchema
    :return: Diagnostics and whether the source is free of errors
    :rtype: CheckResponseSchema
    :raise: HTTPException 422 when the picture header is missing
    """
    _guard_size(body.source)
    try:
        result = pipeline.check_source(body.source)
    except PaintTexError as err:
        raise _http_error(err)
    return CheckResponseSchema(ok=not result.has_errors,
                               diagnostics=[DiagnosticSchema.of(d, body.source) for d in result.diagnostics])


@router.post('/render', response_model=RenderResponseSchema)
def render(body: SourceSchema = Body(...)):
    """
    Renders an SVG preview of any supported source.

    :param body: Source
    :type body: SourceSchema
    :return: SVG text and the number of drawn elements
    :rtype: RenderResponseSchema
    """
    _guard_size(body.source)
    try:
        result = pipeline.render_source(body.source, body.format, _import_options(body))
    except PaintTexError as err:
        raise _http_error(err)
    return RenderResponseSchema(svg=result.svg, element_count=result.element_count,
                                diagnostics=[DiagnosticSchema.of(d, body.source) for d in result.diagnostics])


@router.post('/roundtrip', response_model=RoundtripResponseSchema)
def roundtrip(body: RoundtripSchema = Body(...)):
    """
    Converts a source, reads the code back and reports the Hausdorff distance.

    :param body: Source, conversion options and optional threshold
    :type body: RoundtripSchema
    :return: Distance, threshold and verdict
    :rtype: RoundtripResponseSchema
    """
    _guard_size(body.source)
    max_distance = body.max_distance if body.max_distance is not None else config.DEFAULT_MAX_DISTANCE
    fidelity_options = FidelityOptions(max_distance=max_distance, policy=FlattenPolicy(t_step=body.t_step))
    try:
        result = pipeline.roundtrip_source(body.source, body.format, _import_options(body), _emit_options(body),
                                           fidelity_options)
    except PaintTexError as err:
        raise _http_error(err)
    return RoundtripResponseSchema(distance=result.distance, max_distance=result.max_distance, passed=result.passed,
                                   picture=result.picture,
                                   diagnostics=[DiagnosticSchema.of(d, body.source) for d in result.diagnostics])
