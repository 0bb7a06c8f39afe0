"""Exact coordinates on the Hawaiian earring, the cones and the glued model.

The earring A is the union of circles A_n of centre 1/n and radius 1/n in
the plane, all through the origin.  A point of A_n away from the origin is
parametrised by the rational slope t = tan(theta); the planar embedding
(1/n)(1 + e^{2i theta}) stays rational via

    e^{2i theta} = ((1 - t^2) + 2it) / (1 + t^2).

The model space is a sequence of closed cones accumulating on a segment
axis [0, INF], with every cone boundary glued onto the earring.  Chart
maps identify each canonical subgroup with exactly one model point:

    segment alpha       <->  TypeI(alpha), alpha > 0
    earring basepoint   <->  TypeI(0)
    circle n, slope t   <->  TypeII(n*t, n)
    cone k interior     <->  TypeIII(alpha, beta, k)   (alpha finite)
    cone k apex         <->  TypeIV(k)

Cone-boundary coordinates (alpha = 0) are never stored: a boundary point
is represented by its image on the earring, which makes model-point
equality coincide with subgroup equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

from .rationals import INF, ExtQ, as_fraction, is_inf
from .subgroups import (
    ClosedSubgroup,
    InvalidParameter,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
)


class BoundaryPoint(ValueError):
    """A cone-boundary coordinate was passed to an interior-only chart."""


class NonCanonicalModelPoint(ValueError):
    pass


@dataclass(frozen=True)
class Basepoint:
    """The common point of all earring circles."""


@dataclass(frozen=True)
class OnCircle:
    circle: int  # index n of the circle A_n
    t: Fraction  # slope coordinate tan(theta), finite

    def __post_init__(self):
        if self.circle <= 0:
            raise InvalidParameter("circle index must be >= 1")
        object.__setattr__(self, "t", as_fraction(self.t))


EarringPoint = Union[Basepoint, OnCircle]

BASEPOINT = Basepoint()


def embed_earring(p: EarringPoint) -> Tuple[Fraction, Fraction]:
    """Exact planar coordinates of an earring point."""
    if isinstance(p, Basepoint):
        return (Fraction(0), Fraction(0))
    den = 1 + p.t * p.t
    return (Fraction(2, p.circle) / den, Fraction(2, p.circle) * p.t / den)


@dataclass(frozen=True)
class ConePoint:
    """Chart coordinate (alpha, beta) on the closed cone number k."""

    k: int
    alpha: ExtQ
    beta: Fraction

    def __post_init__(self):
        if self.k <= 0:
            raise InvalidParameter("cone index must be >= 1")
        if is_inf(self.alpha):
            # apex: all beta identified
            object.__setattr__(self, "beta", Fraction(0))
            return
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if self.alpha < 0:
            raise InvalidParameter("cone alpha must be in [0, INF]")
        if not (0 <= self.beta < 1):
            raise InvalidParameter("cone beta must lie in [0, 1)")


@dataclass(frozen=True)
class Segment:
    alpha: ExtQ  # in (0, INF]

    def __post_init__(self):
        if not is_inf(self.alpha):
            object.__setattr__(self, "alpha", as_fraction(self.alpha))


@dataclass(frozen=True)
class ConeInterior:
    k: int
    alpha: ExtQ  # in (0, INF]
    beta: Fraction

    def __post_init__(self):
        if not is_inf(self.alpha):
            object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))


@dataclass(frozen=True)
class Earring:
    point: EarringPoint


ModelPoint = Union[Segment, ConeInterior, Earring]


# -- psi charts --------------------------------------------------------------

def chart_psi_I(alpha: ExtQ) -> ClosedSubgroup:
    """alpha -> Z(1/alpha, 0); a relabeling of the axis [0, INF]."""
    return TypeI(alpha)


def chart_psi_I_inverse(H: ClosedSubgroup) -> ExtQ:
    if not isinstance(H, TypeI):
        raise InvalidParameter("not in the image of the axis chart")
    return H.alpha


def chart_psi_II_n(n: int, p: EarringPoint) -> ClosedSubgroup:
    """Earring point on circle b -> Z(b*t, b*n); basepoint -> {0}."""
    if n <= 0:
        raise InvalidParameter("n must be >= 1")
    if isinstance(p, Basepoint):
        return TypeI(Fraction(0))
    return TypeII(p.circle * p.t, p.circle * n)


def chart_psi_II_n_inverse(n: int, H: ClosedSubgroup) -> EarringPoint:
    """Inverse on the chart's image: requires n to divide the cyclic level."""
    if isinstance(H, TypeI) and H.alpha == 0:
        return BASEPOINT
    if not isinstance(H, TypeII) or H.n % n:
        raise InvalidParameter("subgroup is not in the image of this chart")
    b = H.n // n
    return OnCircle(b, H.gamma / b)


def chart_psi_III_n(n: int, c: ConePoint) -> ClosedSubgroup:
    """Interior cone coordinate -> lattice family; apex -> R x nZ."""
    if c.k != n:
        raise InvalidParameter("cone index does not match the chart level")
    if is_inf(c.alpha):
        return TypeIV(n)
    if c.alpha == 0:
        raise BoundaryPoint("alpha = 0 belongs to the gluing, not the chart")
    return TypeIII(c.alpha, c.beta, n)


def chart_psi_III_n_inverse(n: int, H: ClosedSubgroup) -> ConePoint:
    if isinstance(H, TypeIV) and H.n == n:
        return ConePoint(n, INF, Fraction(0))
    if isinstance(H, TypeIII) and H.n == n:
        return ConePoint(n, H.alpha, H.beta)
    raise InvalidParameter("subgroup is not in the image of this chart")


# -- the global model chart --------------------------------------------------

def subgroup_to_model(H: ClosedSubgroup) -> ModelPoint:
    if isinstance(H, TypeI):
        if H.alpha == 0:
            return Earring(BASEPOINT)
        return Segment(H.alpha)
    if isinstance(H, TypeII):
        return Earring(OnCircle(H.n, H.gamma / H.n))
    if isinstance(H, TypeIII):
        return ConeInterior(H.n, H.alpha, H.beta)
    if isinstance(H, TypeIV):
        return ConeInterior(H.n, INF, Fraction(0))
    raise TypeError(f"not a subgroup value: {H!r}")


def model_to_subgroup(m: ModelPoint) -> ClosedSubgroup:
    if isinstance(m, Segment):
        if not is_inf(m.alpha) and m.alpha <= 0:
            raise NonCanonicalModelPoint(
                "segment alpha must be > 0; alpha = 0 is the earring basepoint"
            )
        return TypeI(m.alpha)
    if isinstance(m, ConeInterior):
        if is_inf(m.alpha):
            return TypeIV(m.k)
        if m.alpha <= 0:
            raise NonCanonicalModelPoint(
                "cone interior requires alpha > 0; the boundary lives on the earring"
            )
        return TypeIII(m.alpha, m.beta, m.k)
    if isinstance(m, Earring):
        if isinstance(m.point, Basepoint):
            return TypeI(Fraction(0))
        return TypeII(m.point.circle * m.point.t, m.point.circle)
    raise TypeError(f"not a model point: {m!r}")


# -- winding of cone boundaries over earring circles -------------------------

def winding_count(k: int, m: int) -> int:
    """How many times the glued boundary of cone k covers circle A_m.

    Each blow-up interval of denominator b wraps once, monotonically,
    around the circle of index k*b, so the count is the number of
    lowest-terms rationals a/b in [0, 1) with k*b = m.
    """
    if k <= 0 or m <= 0:
        raise InvalidParameter("cone and circle indices must be >= 1")
    if m % k:
        return 0
    b = m // k
    return sum(1 for a in range(b) if gcd(a, b) == 1)
