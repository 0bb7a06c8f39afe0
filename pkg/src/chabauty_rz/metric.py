"""The pointed-Hausdorff (Chabauty) metric between closed subgroups.

d(H, H') is the infimum of the eps > 0 such that each group, intersected
with the closed ball B(0, 1/eps), lies in the open eps-neighbourhood of
the other.  With the closed-ball / open-neighbourhood convention the
two-sided predicate is monotone in eps, so the infimum is bracketed by
exact rational bisection.

Both groups contain the identity, so the predicate always holds at
eps = 2: everything in B(0, 1/2) is within 1/2 < 2 of the identity of
the other group.  That gives the fixed initial bracket [0, 2].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import List, NamedTuple, Sequence

from .rationals import as_fraction, is_inf
from .subgroups import (
    LINE,
    ClosedSubgroup,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    distance_point_to_subgroup,
    elements_in_ball,
    level_set,
    membership,
)


class ToleranceInvalid(ValueError):
    pass


class DistanceBracket(NamedTuple):
    lo: Fraction
    hi: Fraction


def subgroup_subset(H: ClosedSubgroup, H2: ClosedSubgroup) -> bool:
    """Exact decision of H subset of H2, via generators of H."""
    if isinstance(H, TypeI):
        if is_inf(H.alpha):
            return level_set(H2, 0) is LINE
        if H.alpha == 0:
            return True
        return membership(H2, (1 / H.alpha, 0))
    if isinstance(H, TypeII):
        return membership(H2, (H.gamma, H.n))
    if isinstance(H, TypeIII):
        return membership(H2, (1 / H.alpha, 0)) and membership(
            H2, (H.beta / H.alpha, H.n)
        )
    if isinstance(H, TypeIV):
        return isinstance(H2, TypeIV) and H.n % H2.n == 0
    raise TypeError(f"not a subgroup value: {H!r}")


def hausdorff_inclusion_ok(H: ClosedSubgroup, H2: ClosedSubgroup, eps) -> bool:
    """Exact decision of H cap B(0, 1/eps) subset V_eps(H2).

    The ball is closed, the neighbourhood open (strict inequality).
    Strip elements are checked by covering the segment with the open
    eps-intervals contributed by nearby elements of H2; the cover test
    is an exact rational sweep.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ToleranceInvalid("eps must be > 0")
    if subgroup_subset(H, H2):
        return True
    radius = 1 / eps
    ball = elements_in_ball(H, radius)
    for p in ball.points:
        if distance_point_to_subgroup(p, H2) >= eps:
            return False
    for strip in ball.strips:
        if not _strip_covered(strip.level, radius, H2, eps):
            return False
    return True


def _strip_covered(m: int, half_width: Fraction, H2: ClosedSubgroup, eps: Fraction) -> bool:
    """Is every point of [-half_width, half_width] x {m} within < eps of H2?"""
    lo_lvl = ceil(m - eps)  # |m - m'| < eps limits the relevant levels
    hi_lvl = floor(m + eps)
    cosets: List = []
    singles: List = []
    for lvl in range(lo_lvl, hi_lvl + 1):
        if Fraction(abs(m - lvl)) >= eps:
            continue
        ls = level_set(H2, lvl)
        if ls is None:
            continue
        if ls is LINE:
            return True
        offset, spacing = ls
        if spacing is None:
            singles.append(offset)
        else:
            if spacing < 2 * eps:
                return True  # consecutive eps-intervals overlap: the whole line
            cosets.append((offset, spacing))

    if cosets and not singles:
        # The coset union is periodic; decide on one period when the strip
        # spans it, instead of sweeping the full width.
        period = Fraction(
            lcm(*(s.numerator for _, s in cosets)),
            gcd(*(s.denominator for _, s in cosets)),
        )
        if period <= 2 * half_width:
            intervals = _coset_intervals(cosets, -eps, period + eps, eps)
            return _open_intervals_cover(intervals, Fraction(0), period)

    intervals = [(c - eps, c + eps) for c in singles]
    intervals += _coset_intervals(
        cosets, -half_width - eps, half_width + eps, eps
    )
    return _open_intervals_cover(intervals, -half_width, half_width)


def _coset_intervals(cosets, lo: Fraction, hi: Fraction, eps: Fraction):
    """Open eps-intervals around the coset points with centres in [lo, hi]."""
    intervals = []
    for offset, spacing in cosets:
        jlo = ceil((lo - offset) / spacing)
        jhi = floor((hi - offset) / spacing)
        for j in range(jlo, jhi + 1):
            c = offset + j * spacing
            intervals.append((c - eps, c + eps))
    return intervals


def _open_intervals_cover(intervals, a: Fraction, b: Fraction) -> bool:
    """Does the union of the open intervals contain the closed segment [a, b]?"""
    intervals.sort()
    cur = a
    idx = 0
    n = len(intervals)
    while True:
        best = None
        while idx < n and intervals[idx][0] < cur:
            r = intervals[idx][1]
            if best is None or r > best:
                best = r
            idx += 1
        # Merging with previously found reach is implicit: cur only moves
        # forward, and any interval starting before the new cur was consumed.
        if best is None or best <= cur:
            return False
        cur = best
        if cur > b:
            return True


def _predicate(H: ClosedSubgroup, H2: ClosedSubgroup, eps: Fraction) -> bool:
    return hausdorff_inclusion_ok(H, H2, eps) and hausdorff_inclusion_ok(H2, H, eps)


def chabauty_distance(H: ClosedSubgroup, H2: ClosedSubgroup, tol) -> DistanceBracket:
    """Bracket [lo, hi] of width <= tol around d(H, H2).

    Canonically equal subgroups short-circuit to [0, 0]; the exact layer
    makes "distance zero" synonymous with equality.
    """
    tol = as_fraction(tol)
    if tol <= 0:
        raise ToleranceInvalid("tol must be > 0")
    if H == H2:
        return DistanceBracket(Fraction(0), Fraction(0))

    lo, hi = Fraction(0), Fraction(2)
    while not _predicate(H, H2, hi):  # safety net; see module docstring
        lo = hi
        hi *= 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _predicate(H, H2, mid):
            hi = mid
        else:
            lo = mid
    return DistanceBracket(lo, hi)


@dataclass(frozen=True)
class LimitReport:
    distances: tuple  # of DistanceBracket, one per sequence entry
    passed: bool


def verify_limit(
    seq: Sequence[ClosedSubgroup],
    limit: ClosedSubgroup,
    tol,
    tail: int,
) -> LimitReport:
    """Check that the last ``tail`` members of ``seq`` are within tol of the limit."""
    if not seq:
        raise InvalidSequence("sequence must be nonempty")
    if not (1 <= tail <= len(seq)):
        raise InvalidSequence("tail must satisfy 1 <= tail <= len(seq)")
    tol = as_fraction(tol)
    brackets = tuple(chabauty_distance(Hk, limit, tol) for Hk in seq)
    ok = all(br.hi <= tol for br in brackets[-tail:])
    return LimitReport(brackets, ok)


class InvalidSequence(ValueError):
    pass
