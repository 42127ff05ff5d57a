"""The Hermitian curve y^q + y = x^(q+1) over GF(q^2).

The affine rational points are found by brute-force scan of all q^4
coordinate pairs (at most 81^2 = 6561 at the largest supported q), in a
fixed order: ascending x index, then ascending y index.  There are
exactly q^3 of them; the point at infinity is never materialized, it
enters only implicitly through the pole-order parameter of the codes
built on the curve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldSpec, field_new


@dataclass(frozen=True)
class CurvePoint:
    """An affine rational point (x, y), coordinates as canonical indices."""

    x: int
    y: int


@dataclass(frozen=True)
class HermitianCurve:
    spec: FieldSpec
    q: int
    genus: int
    points: tuple[CurvePoint, ...]

    @property
    def n(self) -> int:
        return len(self.points)


def genus(q: int) -> int:
    """Genus of the Hermitian curve, q(q-1)/2."""
    return q * (q - 1) // 2


def is_on_curve(q: int, point: CurvePoint) -> bool:
    """Whether y^q + y = x^(q+1) holds for the point's coordinates."""
    spec = field_new(q)
    lhs = spec.add(spec.frobenius_q(point.y), point.y)
    rhs = spec.pow(point.x, q + 1)
    return lhs == rhs


def rational_points(q: int) -> list[CurvePoint]:
    """All q^3 affine rational points, ascending by x index then y index."""
    spec = field_new(q)
    points = []
    for x in spec.elements():
        rhs = spec.pow(x, q + 1)
        for y in spec.elements():
            if spec.add(spec.frobenius_q(y), y) == rhs:
                points.append(CurvePoint(x, y))
    return points


def hermitian_curve(q: int) -> HermitianCurve:
    """Construct the curve with its full point enumeration."""
    spec = field_new(q)
    return HermitianCurve(spec=spec, q=q, genus=genus(q), points=tuple(rational_points(q)))
