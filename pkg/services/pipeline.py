"""
Conversion pipeline shared by the command line and the HTTP routes

Each operation takes source text and options and returns a result record;
reading files and reporting are left to the caller.
"""
import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from entity.models import Scene
from entity.picture import Diagnostic
from repository.scenes import load_scene
from repository.sources import SourceFormat
from schemas.options import ArrowStyle, EmitOptions, FidelityOptions, ImportOptions
from services import emitter, fidelity, parser, scene_ir
from services.errors import LintFailed
from services.ingest_svg import import_svg

logger = logging.getLogger(__name__)


class PipelineResult(BaseModel):
    diagnostics: list[Diagnostic] = []

    model_config = ConfigDict(frozen=True)

    @property
    def has_errors(self) -> bool:
        return any(d.is_error for d in self.diagnostics)


class ConvertResult(PipelineResult):
    picture: str


class CheckResult(PipelineResult):
    pass


class RenderResult(PipelineResult):
    svg: str
    element_count: int


class RoundtripResult(PipelineResult):
    distance: float
    max_distance: float
    picture: str

    @property
    def passed(self) -> bool:
        return self.distance <= self.max_distance


def load_input(text: str, fmt: SourceFormat, import_options: ImportOptions = ImportOptions(),
               arrow_style: ArrowStyle | None = ArrowStyle()) -> tuple[Scene, list[Diagnostic]]:
    """
    Reads any supported source into a picture-space scene.

    :param text: Source text
    :type text: str
    :param fmt: Source format
    :type fmt: SourceFormat
    :param import_options: SVG import options
    :type import_options: ImportOptions
    :param arrow_style: Barb geometry for joining head strokes of picture source, None keeps every stroke
    :type arrow_style: ArrowStyle | None
    :return: Scene and non-fatal diagnostics
    :rtype: tuple[Scene, list[Diagnostic]]
    :raise: MalformedInput, PictureSyntaxError or UnsupportedFeature for unreadable sources
    :raise: LintFailed for picture source with lint errors
    """
    match fmt:
        case SourceFormat.svg:
            scene, found = import_svg(text, import_options)
        case SourceFormat.scene:
            scene, found = load_scene(text), []
        case SourceFormat.tex:
            doc, found = parser.parse_picture(text)
            errors = [d for d in found if d.is_error]
            if errors:
                raise LintFailed(errors)
            scene = parser.doc_to_scene(doc, arrow_style)
    logger.info("loaded %s source: %d primitives, %d diagnostics", fmt.value, len(scene.primitives), len(found))
    return scene, found


def convert_source(text: str, fmt: SourceFormat, import_options: ImportOptions = ImportOptions(),
                   emit_options: EmitOptions = EmitOptions(), unitlength: str | None = None) -> ConvertResult:
    scene, found = load_input(text, fmt, import_options)
    picture = emitter.emit_scene(scene, emit_options, unitlength=unitlength)
    return ConvertResult(picture=picture, diagnostics=found)


def check_source(text: str) -> CheckResult:
    """
    Parses and lints picture source.

    :raise: PictureSyntaxError when the header is missing
    """
    _, found = parser.parse_picture(text)
    return CheckResult(diagnostics=found)


def _canvas_height(scene: Scene) -> Fraction:
    box = scene_ir.scene_bbox(scene)
    return max(box.max.y, box.height)


def render_source(text: str, fmt: SourceFormat, import_options: ImportOptions = ImportOptions()) -> RenderResult:
    """Preview of a source; picture code is drawn command for command, head strokes included."""
    scene, found = load_input(text, fmt, import_options, arrow_style=None)
    svg = fidelity.render_preview(scene, _canvas_height(scene))
    return RenderResult(svg=svg, element_count=len(scene.primitives), diagnostics=found)


def roundtrip_source(text: str, fmt: SourceFormat, import_options: ImportOptions = ImportOptions(),
                     emit_options: EmitOptions = EmitOptions(),
                     fidelity_options: FidelityOptions = FidelityOptions()) -> RoundtripResult:
    """
    Emits a source, reads the emitted code back and measures the drift.

    The reference geometry is the cropped source scene, so the distance only
    reflects rounding and the arrow, circle and curve lowering.

    :param text: Source text
    :type text: str
    :param fmt: Source format
    :type fmt: SourceFormat
    :param import_options: SVG import options
    :type import_options: ImportOptions
    :param emit_options: Emission options
    :type emit_options: EmitOptions
    :param fidelity_options: Sampling and acceptance threshold
    :type fidelity_options: FidelityOptions
    :return: Hausdorff distance, threshold and the emitted code
    :rtype: RoundtripResult
    """
    scene, found = load_input(text, fmt, import_options, emit_options.arrow_style)
    reference, _, _ = scene_ir.normalize(scene)
    picture = emitter.emit_scene(scene, emit_options)
    doc, _ = parser.parse_picture(picture)
    rebuilt = parser.doc_to_scene(doc, emit_options.arrow_style)
    policy, style = fidelity_options.policy, emit_options.arrow_style
    distance = fidelity.hausdorff(fidelity.flatten_scene(reference, policy, style),
                                  fidelity.flatten_scene(rebuilt, policy, style),
                                  fidelity_options.sample_spacing)
    logger.info("round trip distance %.6f (limit %s)", distance, fidelity_options.max_distance)
    return RoundtripResult(distance=distance, max_distance=fidelity_options.max_distance, picture=picture,
                           diagnostics=found)
