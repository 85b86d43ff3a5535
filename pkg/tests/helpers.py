import random
from fractions import Fraction
from pathlib import Path

from entity.models import Circle, Label, Point, QuadBezier, Rectangle, Scene, Segment

FIXTURES = Path(__file__).parent / "fixtures"


def random_scene(rng: random.Random, size: int | None = None) -> Scene:
    """Mixed primitives with real coordinates in [0, 300]."""

    def coord() -> Fraction:
        return Fraction(round(rng.uniform(0, 300), 3)).limit_denominator(1000)

    def point() -> Point:
        return Point(x=coord(), y=coord())

    primitives = []
    for _ in range(size or rng.randint(1, 8)):
        kind = rng.choice(["segment", "vector", "rect", "circle", "qbezier", "label"])
        if kind in ("segment", "vector"):
            p0, p1 = point(), point()
            while p1 == p0:
                p1 = point()
            primitives.append(Segment(p0=p0, p1=p1, arrow=kind == "vector"))
        elif kind == "rect":
            primitives.append(Rectangle(corner=point(), width=coord() / 3, height=coord() / 3))
        elif kind == "circle":
            primitives.append(Circle(center=point(), diameter=1 + coord() / 4, filled=rng.random() < 0.2))
        elif kind == "qbezier":
            primitives.append(QuadBezier(p0=point(), c=point(), p1=point()))
        else:
            primitives.append(Label(anchor=point(), text=rng.choice(["A", "x_1", "$\\alpha$", "{\\bf P}"])))
    return Scene(primitives=tuple(primitives))
