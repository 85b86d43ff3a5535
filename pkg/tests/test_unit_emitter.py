import unittest
from fractions import Fraction

from entity.models import Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment
from entity.picture import CircleCmd, LineCmd, Put, Qbezier, SlopeKind, TextCmd, VectorCmd
from repository.scenes import load_scene
from schemas.options import CircleMode, EmitOptions, LineMode
from services import slope
from services.emitter import emit_primitive, emit_scene, render_command, round_coord
from services.errors import EmptyScene, NotNormalized
from tests.helpers import FIXTURES

NATIVE = EmitOptions(line_mode=LineMode.native_when_exact)


class TestRounding(unittest.TestCase):

    def test_half_away_from_zero(self):
        self.assertEqual(round_coord(104.5), 105)
        self.assertEqual(round_coord(-2.5), -3)
        self.assertEqual(round_coord(Fraction(-3, 2)), -2)
        self.assertEqual(round_coord("2.4999"), 2)


class TestRenderCommand(unittest.TestCase):

    def test_commands(self):
        self.assertEqual(render_command(Qbezier(p0=Point.of(0, 14), c=Point.of(105, 14), p1=Point.of(209, 14))),
                         "\\qbezier(0,14)(105,14)(209,14)")
        self.assertEqual(render_command(Put(x=60, y=50, inner=LineCmd(a=1, b=-2, length=20))),
                         "\\put(60,50){\\line(1,-2){20}}")
        self.assertEqual(render_command(Put(x=0, y=0, inner=VectorCmd(a=0, b=1, length=5))),
                         "\\put(0,0){\\vector(0,1){5}}")
        self.assertEqual(render_command(Put(x=64, y=192, inner=CircleCmd(diameter=38))), "\\put(64,192){\\circle{38}}")
        self.assertEqual(render_command(Put(x=1, y=2, inner=CircleCmd(diameter=3, filled=True))),
                         "\\put(1,2){\\circle*{3}}")
        self.assertEqual(render_command(Put(x=101, y=160, inner=TextCmd(text="V"))), "\\put(101,160){V}")

    def test_command_like_text_grouped(self):
        self.assertEqual(render_command(Put(x=0, y=0, inner=TextCmd(text="\\line(1,0){40}"))),
                         "\\put(0,0){{\\line(1,0){40}}}")
        self.assertEqual(render_command(Put(x=0, y=0, inner=TextCmd(text="\\line to"))), "\\put(0,0){\\line to}")


class TestEmitPrimitive(unittest.TestCase):

    def test_segment_as_degenerate_qbezier(self):
        commands = emit_primitive(Segment(p0=Point.of(8, 22), p1=Point.of(168, 22)))
        self.assertEqual([render_command(c) for c in commands], ["\\qbezier(8,22)(88,22)(168,22)"])

    def test_arrow_is_shaft_and_two_barbs(self):
        commands = emit_primitive(Segment(p0=Point.of(0, 14), p1=Point.of(209, 14), arrow=True))
        self.assertEqual([render_command(c) for c in commands], [
            "\\qbezier(0,14)(105,14)(209,14)",
            "\\qbezier(209,14)(206,16)(202,17)",
            "\\qbezier(209,14)(206,13)(202,11)",
        ])

    def test_rectangle_is_four_strokes(self):
        commands = emit_primitive(Rectangle(corner=Point.of(0, 0), width=10, height=4))
        self.assertEqual(len(commands), 4)
        self.assertTrue(all(isinstance(c, Qbezier) for c in commands))

    def test_native_circle_rounds_diameter(self):
        commands = emit_primitive(Circle(center=Point.of("10.5", 3), diameter="0.4", filled=True))
        self.assertEqual([render_command(c) for c in commands], ["\\put(11,3){\\circle*{1}}"])

    def test_circle_as_quads(self):
        opts = EmitOptions(circle_mode=CircleMode.parse("quads:8"))
        commands = emit_primitive(Circle(center=Point.of(64, 192), diameter=38), opts)
        self.assertEqual(len(commands), 8)
        self.assertEqual(render_command(commands[0])[:len("\\qbezier(83,192)")], "\\qbezier(83,192)")

    def test_label_verbatim(self):
        commands = emit_primitive(Label(anchor=Point.of("7.5", 0), text="$\\alpha$"))
        self.assertEqual([render_command(c) for c in commands], ["\\put(8,0){$\\alpha$}"])

    def test_curve_points_rounded(self):
        commands = emit_primitive(QuadBezier(p0=Point.of("0.4", 0), c=Point.of("2.5", "-0.5"), p1=Point.of(5, 1)))
        self.assertEqual([render_command(c) for c in commands], ["\\qbezier(0,0)(3,-1)(5,1)"])

    def test_strict_rejects_negative_anchor(self):
        with self.assertRaises(NotNormalized):
            emit_primitive(Label(anchor=Point.of(-1, 0), text="A"), EmitOptions(strict=True))


class TestNativeMode(unittest.TestCase):

    def test_exact_line(self):
        commands = emit_primitive(Segment(p0=Point.of(60, 50), p1=Point.of(80, 10)), NATIVE)
        self.assertEqual([render_command(c) for c in commands], ["\\put(60,50){\\line(1,-2){20}}"])

    def test_vertical_line(self):
        commands = emit_primitive(Segment(p0=Point.of(8, 234), p1=Point.of(8, 22)), NATIVE)
        self.assertEqual([render_command(c) for c in commands], ["\\put(8,234){\\line(0,-1){212}}"])

    def test_inexact_slope_falls_back(self):
        commands = emit_primitive(Segment(p0=Point.of(0, 0), p1=Point.of(3, 7)), NATIVE)
        self.assertIsInstance(commands[0], Qbezier)

    def test_exact_vector(self):
        commands = emit_primitive(Segment(p0=Point.of(0, 14), p1=Point.of(209, 14), arrow=True), NATIVE)
        self.assertEqual([render_command(c) for c in commands], ["\\put(0,14){\\vector(1,0){209}}"])

    def test_steep_vector_keeps_barbs(self):
        commands = emit_primitive(Segment(p0=Point.of(0, 0), p1=Point.of(5, 6), arrow=True), NATIVE)
        self.assertEqual(len(commands), 3)
        self.assertEqual(commands[0], Put(x=0, y=0, inner=LineCmd(a=5, b=6, length=5)))

    def test_native_output_passes_lint(self):
        for p1 in [(12, 0), (5, 6), (6, 5), (0, 9), (-4, 2)]:
            commands = emit_primitive(Segment(p0=Point.of(0, 0), p1=Point.of(*p1)), NATIVE)
            for cmd in commands:
                if isinstance(cmd, Put) and isinstance(cmd.inner, LineCmd):
                    self.assertEqual(slope.validate_slope(cmd.inner.a, cmd.inner.b, SlopeKind.line), [])


class TestEmitScene(unittest.TestCase):

    def test_picture1(self):
        scene = load_scene((FIXTURES / "picture1.scene").read_text(encoding="utf-8"))
        text = emit_scene(scene)
        lines = text.splitlines()
        self.assertEqual(lines[0], "\\begin{picture}(215,283)")
        self.assertEqual(lines[-1], "\\end{picture}")
        self.assertEqual(len(lines), 22)
        self.assertIn("\\put(64,192){\\circle{38}}", lines)
        for label in ("\\put(101,160){V}", "\\put(8,2){O}", "\\put(10,283){Y}", "\\put(215,0){X}"):
            self.assertIn(label, lines)
        self.assertEqual(lines[1:4], [
            "\\qbezier(99,172)(106,172)(112,172)",
            "\\qbezier(112,172)(109,174)(105,175)",
            "\\qbezier(112,172)(109,171)(105,169)",
        ])
        self.assertTrue(text.endswith("\\end{picture}\n"))

    def test_crop_and_header(self):
        scene = Scene(primitives=(Segment(p0=Point.of("10.2", 5), p1=Point.of("30.5", "20.7")),))
        self.assertEqual(emit_scene(scene).splitlines(), [
            "\\begin{picture}(21,16)",
            "\\qbezier(0,0)(10,8)(20,16)",
            "\\end{picture}",
        ])

    def test_unitlength(self):
        scene = Scene(primitives=(Label(anchor=Point.of(0, 0), text="A"),))
        self.assertEqual(emit_scene(scene, unitlength="1pt").splitlines()[0], "\\setlength{\\unitlength}{1pt}")

    def test_deterministic(self):
        scene = load_scene((FIXTURES / "picture1.scene").read_text(encoding="utf-8"))
        self.assertEqual(emit_scene(scene), emit_scene(scene))

    def test_empty(self):
        with self.assertRaises(EmptyScene):
            emit_scene(Scene())
