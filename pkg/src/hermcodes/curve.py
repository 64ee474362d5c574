"""Affine rational points of the Hermitian curve x^(q+1) = y^q + y over GF(q^2)."""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement, FieldSpec, field_tables, hermitian_field, power_table
from .geometry import ProjectivePoint


@dataclass(frozen=True)
class HermitianCurve:
    q: int
    field: FieldSpec

    def __post_init__(self):
        if self.field.order != self.q * self.q:
            raise ValueError(f"{self.field.name} is not GF({self.q}^2)")

    @classmethod
    def over(cls, q: int) -> HermitianCurve:
        return cls(q, hermitian_field(q))

    @property
    def genus(self) -> int:
        return self.q * (self.q - 1) // 2


@dataclass(frozen=True)
class AffinePoint:
    curve: HermitianCurve
    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        if not on_curve(self.curve, self.x, self.y):
            raise ValueError(f"({self.x}, {self.y}) is not on the curve")

    def to_json(self) -> dict:
        return {"x": self.x.idx, "y": self.y.idx}


@dataclass(frozen=True)
class RationalPointSet:
    """The divisor D: an ordered list of distinct affine points."""

    curve: HermitianCurve
    points: tuple[AffinePoint, ...]

    def __post_init__(self):
        if len(set((p.x, p.y) for p in self.points)) != len(self.points):
            raise ValueError("duplicate points in D")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def projective(self) -> list[ProjectivePoint]:
        return [embed_projective(p) for p in self.points]

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self.points]


def on_curve(curve: HermitianCurve, x: FieldElement, y: FieldElement) -> bool:
    q = curve.q
    return x ** (q + 1) == y**q + y


def enumerate_affine_points(curve: HermitianCurve) -> RationalPointSet:
    """All q^3 affine points, ordered by (index(x), index(y))."""
    F = curve.field
    T = field_tables(F)
    pw = power_table(F, curve.q + 1)
    q = curve.q
    pts = []
    for x in range(F.order):
        lhs = pw[x, q + 1]
        for y in range(F.order):
            if T.add[pw[y, q], y] == lhs:
                pts.append(AffinePoint(curve, F(x), F(y)))
    return RationalPointSet(curve, tuple(pts))


def embed_projective(p: AffinePoint) -> ProjectivePoint:
    """(x, y) -> (x : y : 1)."""
    return ProjectivePoint((p.x, p.y, p.x.spec.one))
