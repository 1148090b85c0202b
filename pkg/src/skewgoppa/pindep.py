"""Conjugacy classes and P-independent point sets of L*."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParameterError, PointSetError
from .field_tower import FieldTower
from .ore_poly import OreRing, lclm_points


def same_class(t: FieldTower, a: int, b: int) -> bool:
    """Whether a and b are sigma-conjugate, i.e. have the same norm."""
    if a == 0 or b == 0:
        raise ParameterError("conjugacy classes are defined on L*")
    return t.norm(a) == t.norm(b)


def is_p_independent(t: FieldTower, points: Sequence[int]) -> bool:
    """deg lclm{x - a : a in points} == len(points)."""
    if len(set(points)) != len(points):
        raise PointSetError("points must be distinct")
    if not points:
        return True
    return lclm_points(OreRing(t), points).deg == len(points)


@dataclass(frozen=True)
class PointSet:
    """An ordered list of distinct nonzero P-independent points of L."""

    tower: FieldTower
    points: tuple[int, ...]
    certified_degree: int = field(default=0, compare=False)

    @classmethod
    def validated(cls, tower: FieldTower, points: Sequence[int]) -> PointSet:
        pts = tuple(points)
        if len(set(pts)) != len(pts):
            raise PointSetError("points must be distinct")
        if any(a == 0 for a in pts):
            raise PointSetError("points must be nonzero")
        deg = lclm_points(OreRing(tower), pts).deg if pts else 0
        if deg != len(pts):
            raise PointSetError(f"points are P-dependent: lclm degree {deg} < {len(pts)}")
        return cls(tower, pts, int(deg))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> int:
        return self.points[i]

    def to_hex(self) -> list[str]:
        return [self.tower.to_hex(a) for a in self.points]


def maximal_p_independent(t: FieldTower, gamma: int, alpha: int) -> PointSet:
    """The set gamma^i sigma^(j+1)(alpha) / sigma^j(alpha), listed i-major.

    gamma must be primitive and alpha normal; the result has (p^delta - 1) mu
    points and is a maximal P-independent subset of L*.
    """
    if gamma == 0 or not t.is_primitive(gamma):
        raise ParameterError("gamma is not a primitive element")
    if not t.is_normal(alpha):
        raise ParameterError("alpha is not a normal element")
    ratios = [t.div(t.sigma(alpha, j + 1), t.sigma(alpha, j)) for j in range(t.mu)]
    points = []
    g = 1
    for _ in range(t.p**t.delta - 1):
        points.extend(t.mul(g, b) for b in ratios)
        g = t.mul(g, gamma)
    # P-independence holds by construction; the certificate is the size
    return PointSet(t, tuple(points), len(points))
