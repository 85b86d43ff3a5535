import math
import random
import unittest

import numpy as np
from lxml import etree

from entity.models import Circle, Label, Point, Polyline, QuadBezier, Rectangle, Scene, Segment
from schemas.options import FlattenPolicy
from services.curves import flatten_quad, segment_as_quad
from services.errors import DomainError, EmptyGeometry, EmptyScene
from services.fidelity import flatten_scene, hausdorff, render_preview, resample
from services.ingest_svg import SVG_NS, import_svg
from services.scene_ir import scene_anchor_points
from tests.helpers import random_scene


class TestFlattenScene(unittest.TestCase):

    def test_counts(self):
        scene = Scene(primitives=(
            Segment(p0=Point.of(0, 0), p1=Point.of(10, 0)),
            Segment(p0=Point.of(0, 0), p1=Point.of(10, 0), arrow=True),
            QuadBezier(p0=Point.of(0, 0), c=Point.of(5, 5), p1=Point.of(10, 0)),
            Rectangle(corner=Point.of(0, 0), width=2, height=3),
            Circle(center=Point.of(5, 5), diameter=4),
            Label(anchor=Point.of(1, 1), text="A"),
        ))
        lines = flatten_scene(scene, FlattenPolicy(t_step=0.01, circle_segments=64))
        self.assertEqual([len(line) for line in lines], [2, 2, 2, 2, 101, 2, 2, 2, 2, 65, 1])

    def test_deterministic(self):
        scene = random_scene(random.Random(2), size=10)
        first, second = flatten_scene(scene), flatten_scene(scene)
        self.assertEqual(len(first), len(second))
        for a, b in zip(first, second):
            np.testing.assert_array_equal(a.points, b.points)


class TestResample(unittest.TestCase):

    def test_spacing(self):
        points = resample(Polyline(points=[[0, 0], [10, 0], [10, 3]]), 0.5)
        self.assertEqual(points.shape, (27, 2))
        gaps = np.hypot(*np.diff(points, axis=0).T)
        self.assertLessEqual(gaps.max(), 0.5 + 1e-12)
        np.testing.assert_array_equal(points[-1], [10, 3])

    def test_single_point(self):
        np.testing.assert_array_equal(resample(Polyline(points=[[1, 2]]), 0.5), [[1, 2]])

    def test_zero_length(self):
        np.testing.assert_array_equal(resample(Polyline(points=[[2, 2], [2, 2], [2, 2]]), 0.5), [[2, 2]])


class TestHausdorff(unittest.TestCase):

    def test_identical(self):
        lines = flatten_scene(random_scene(random.Random(4)))
        self.assertEqual(hausdorff(lines, lines), 0.0)

    def test_parallel_segments(self):
        a = [Polyline(points=[[0, 0], [10, 0]])]
        b = [Polyline(points=[[0, 3], [10, 3]])]
        self.assertAlmostEqual(hausdorff(a, b), 3.0, places=12)

    def test_symmetric(self):
        rng = random.Random(8)
        for _ in range(10):
            a, b = flatten_scene(random_scene(rng)), flatten_scene(random_scene(rng))
            self.assertEqual(hausdorff(a, b), hausdorff(b, a))

    def test_segment_against_its_curve(self):
        p0, p1 = Point.of(0, 0), Point.of(37, 11)
        quad = segment_as_quad(p0, p1)
        distance = hausdorff([Polyline(points=[p0, p1])], [flatten_quad(quad.p0, quad.c, quad.p1)], 0.5)
        self.assertLessEqual(distance, 0.25)

    def test_label_anchor_only(self):
        a = [Polyline(points=[[0, 0]])]
        b = [Polyline(points=[[3, 4]])]
        self.assertEqual(hausdorff(a, b), 5.0)

    def test_empty(self):
        with self.assertRaises(EmptyGeometry):
            hausdorff([], [Polyline(points=[[0, 0]])])

    def test_bad_spacing(self):
        line = [Polyline(points=[[0, 0]])]
        with self.assertRaises(DomainError):
            hausdorff(line, line, 0)


class TestRenderPreview(unittest.TestCase):

    def test_label_flipped(self):
        text = render_preview(Scene(primitives=(Label(anchor=Point.of(10, 283), text="Y"),)), 283)
        root = etree.fromstring(text.encode("utf-8"))
        label = root.find(f"{{{SVG_NS}}}text")
        self.assertEqual((label.get("x"), label.get("y"), label.text), ("10", "0", "Y"))

    def test_elements(self):
        scene = Scene(primitives=(
            Segment(p0=Point.of(0, 0), p1=Point.of(10, 0), arrow=True),
            QuadBezier(p0=Point.of(0, 0), c=Point.of(5, 5), p1=Point.of(10, 0)),
            Rectangle(corner=Point.of(1, 1), width=2, height=3),
            Circle(center=Point.of(5, 5), diameter=4, filled=True),
        ))
        root = etree.fromstring(render_preview(scene, 20).encode("utf-8"))
        tags = [etree.QName(el).localname for el in root]
        self.assertEqual(tags, ["defs", "line", "path", "rect", "circle"])
        self.assertEqual(root[1].get("marker-end"), "url(#arrow)")
        self.assertEqual(root[2].get("d"), "M 0 20 Q 5 15 10 20")
        self.assertEqual((root[3].get("y"), root[3].get("height")), ("16", "3"))
        self.assertEqual(root[4].get("fill"), "black")

    def test_reimport_is_identity(self):
        rng = random.Random(21)
        for _ in range(20):
            scene = random_scene(rng)
            height = max(p.y for p in scene_anchor_points(scene)) + 1
            back, found = import_svg(render_preview(scene, height))
            self.assertEqual(found, [])
            self.assertEqual(len(back.primitives), len(scene.primitives))
            for original, restored in zip(scene.primitives, back.primitives):
                self.assertEqual(original.kind, restored.kind)
                for a, b in zip(_points(original), _points(restored)):
                    self.assertLess(math.dist(a.as_floats(), b.as_floats()), 1e-6)

    def test_deterministic(self):
        scene = random_scene(random.Random(9))
        self.assertEqual(render_preview(scene, 400), render_preview(scene, 400))

    def test_empty(self):
        with self.assertRaises(EmptyScene):
            render_preview(Scene(), 10)


def _points(primitive) -> list[Point]:
    match primitive:
        case Segment():
            return [primitive.p0, primitive.p1]
        case QuadBezier():
            return [primitive.p0, primitive.c, primitive.p1]
        case Rectangle():
            return [primitive.corner, Point(x=primitive.width, y=primitive.height)]
        case Circle():
            return [primitive.center, Point(x=primitive.diameter, y=0)]
        case Label():
            return [primitive.anchor]
