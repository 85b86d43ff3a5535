"""
Slope arithmetic for ``\\line(a,b){l}`` and ``\\vector(a,b){l}``

The picture environment only draws slopes whose integer components are
coprime and bounded: 6 for lines, 4 for vectors.
"""
import math
from fractions import Fraction
from functools import lru_cache

from conf import messages
from entity.models import Point
from entity.picture import Diagnostic, Rule, SlopeKind, SlopePair
from services.errors import InconsistentSlope, ZeroDirection

INTEGER_TOLERANCE = 1e-9
TIE_TOLERANCE = 1e-12


def _as_integer(value) -> int | None:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else None
    nearest = round(value)
    if abs(value - nearest) <= INTEGER_TOLERANCE:
        return int(nearest)
    return None


def reduce_direction(dx, dy) -> SlopePair | None:
    """
    Reduces an integer direction to its coprime pair, keeping signs.

    >>> reduce_direction(20, -40)
    SlopePair(a=1, b=-2)

    :param dx: Horizontal component
    :type dx: int | float | Fraction
    :param dy: Vertical component
    :type dy: int | float | Fraction
    :return: Coprime pair, or None when a component is not an integer
    :rtype: SlopePair | None
    :raise: ZeroDirection for (0,0)
    """
    if dx == 0 and dy == 0:
        raise ZeroDirection()
    a, b = _as_integer(dx), _as_integer(dy)
    if a is None or b is None:
        return None
    if a == 0 and b == 0:
        raise ZeroDirection()
    divisor = math.gcd(a, b)
    return SlopePair(a=a // divisor, b=b // divisor)


@lru_cache(maxsize=None)
def candidate_pairs(bound: int) -> tuple[tuple[int, int], ...]:
    """All coprime integer pairs with components in ``[-bound, bound]``."""
    return tuple(
        (a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
        if math.gcd(a, b) == 1
    )


def angular_distance(alpha: float, beta: float) -> float:
    diff = abs(alpha - beta) % (2 * math.pi)
    return min(diff, 2 * math.pi - diff)


def _tie_key(pair: tuple[int, int]) -> tuple[int, int, int]:
    # smaller |a|+|b| first, then larger a, then larger b
    a, b = pair
    return abs(a) + abs(b), -a, -b


def rationalize_slope(dx, dy, kind: SlopeKind) -> tuple[SlopePair, float]:
    """
    Best bounded coprime slope for a direction.

    Searches every coprime pair within the kind's bound and keeps the one
    closest in angle. Equal errors (within 1e-12 rad) go to the smaller
    ``|a|+|b|``, then the larger ``a``, then the larger ``b``.

    :param dx: Horizontal component
    :type dx: int | float | Fraction
    :param dy: Vertical component
    :type dy: int | float | Fraction
    :param kind: Line or vector bound
    :type kind: SlopeKind
    :return: Pair and the achieved angular error in radians
    :rtype: tuple[SlopePair, float]
    :raise: ZeroDirection for (0,0)
    """
    if dx == 0 and dy == 0:
        raise ZeroDirection()
    exact = reduce_direction(dx, dy)
    if exact is not None and max(abs(exact.a), abs(exact.b)) <= kind.bound:
        return exact, 0.0

    target = math.atan2(float(dy), float(dx))
    errors = {pair: angular_distance(target, math.atan2(pair[1], pair[0])) for pair in candidate_pairs(kind.bound)}
    least = min(errors.values())
    best = min((pair for pair, error in errors.items() if error <= least + TIE_TOLERANCE), key=_tie_key)
    return SlopePair(a=best[0], b=best[1]), errors[best]


def validate_slope(a, b, kind: SlopeKind) -> list[Diagnostic]:
    """
    Checks a ``\\line``/``\\vector`` slope against the picture rules.

    E01 when a component exceeds the bound, E02 when the components share a
    divisor, E03 for (0,0).

    :param a: Horizontal component
    :type a: int
    :param b: Vertical component
    :type b: int
    :param kind: Line or vector bound
    :type kind: SlopeKind
    :return: Diagnostics without spans, empty for a legal pair
    :rtype: list[Diagnostic]
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        return [Diagnostic(rule=Rule.E03, message=messages.ZERO_SLOPE)]
    found = []
    if max(abs(a), abs(b)) > kind.bound:
        found.append(Diagnostic(rule=Rule.E01, message=messages.SLOPE_BOUND.format(bound=kind.bound)))
    divisor = math.gcd(a, b)
    if divisor > 1:
        found.append(Diagnostic(rule=Rule.E02, message=messages.COMMON_DIVISOR.format(divisor=divisor)))
    return found


def line_length_arg(p0: Point, p1: Point, pair: SlopePair) -> int:
    """
    Length argument of a ``\\line``: the OX projection, or the OY extent for
    vertical strokes.

    :param p0: Start point
    :type p0: Point
    :param p1: End point
    :type p1: Point
    :param pair: Slope pair of ``p1 - p0``
    :type pair: SlopePair
    :return: Rounded projection length
    :rtype: int
    :raise: InconsistentSlope if the pair is not the reduced direction
    """
    dx, dy = p1.x - p0.x, p1.y - p0.y
    if dx == 0 and dy == 0:
        raise InconsistentSlope()
    if reduce_direction(dx, dy) != pair:
        raise InconsistentSlope()
    extent = abs(dx) if pair.a != 0 else abs(dy)
    # round half away from zero on a non-negative value
    return math.floor(extent + Fraction(1, 2))
