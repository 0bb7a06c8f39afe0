"""Brute-force oracles kept independent of the classifier and the charts.

Two routes, neither consulting the canonical-form machinery:

  * a combination sweep that enumerates integer combinations of the
    generators under a doubling coefficient bound with a stabilization
    check.  Sound, but the minimal coefficients realizing a small lattice
    element grow like the cleared denominator, so the sweep is only
    feasible on tame inputs and guards itself with a work budget;
  * a lattice route that clears denominators and delegates the basis
    reduction to sympy's Hermite normal form, then enumerates the ball
    from the triangular basis.  Feasible on everything the suites sample.

The totient here is computed multiplicatively from a trial-division
factorization, as a counterweight to the coprime-enumeration winding
count.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, lcm
from typing import Sequence, Tuple

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from .rationals import as_fraction
from .subgroups import BallElements, InvalidParameter, PointRZ


class NonDiscreteSuspected(RuntimeError):
    """The combination sweep kept producing new in-ball points.

    Rational generators always span a discrete group, so hitting this
    signals a bug (or genuinely irrational input smuggled in).
    """


class SweepInfeasible(RuntimeError):
    """The doubling sweep exceeded its work budget before stabilizing.

    Not an error in the input: minimal Bezout coefficients scale with the
    cleared denominator, which puts some rational inputs beyond any full
    coefficient-product enumeration.  Use the lattice route instead.
    """


_COEFF_CAP = 1 << 13
_SWEEP_BUDGET = 50_000_000  # combination rows per doubling step


def _scaled_rows(gens: Sequence[Tuple]):
    """Nonzero generators as integer rows (x*d, level) plus the lcm d."""
    pts = [(as_fraction(x), int(m)) for x, m in gens]
    pts = [(x, m) for x, m in pts if x != 0 or m != 0]
    if not pts:
        return [], 1
    d = lcm(*(x.denominator for x, _ in pts))
    return [(int(x * d), m) for x, m in pts], d


def oracle_closure_ball(gens: Sequence[Tuple], r) -> BallElements:
    """All points of the generated subgroup inside the closed ball B(0, r).

    Lattice route: Hermite normal form of the cleared-denominator
    generator matrix, then direct enumeration from the triangular basis.
    """
    r = as_fraction(r)
    if r <= 0:
        raise InvalidParameter("ball radius must be > 0")
    rows, d = _scaled_rows(gens)
    if not rows:
        return BallElements(frozenset({PointRZ(Fraction(0), 0)}), frozenset())

    H = hermite_normal_form(Matrix([[p for p, _ in rows], [m for _, m in rows]]))
    horiz = None  # generator (a, 0) of the level-0 sublattice
    lev = None    # generator (q, n) with the minimal positive level n
    for j in range(H.cols):
        p, m = int(H[0, j]), int(H[1, j])
        if m == 0:
            horiz = abs(p)
        else:
            lev = (p, abs(m)) if m > 0 else (-p, -m)

    points = set()
    rd = r * d  # |x*d| <= r*d
    if lev is None:
        levels = [(0, 0)]
    else:
        q, n = lev
        jmax = floor(r / n)
        levels = [(j * q, j * n) for j in range(-jmax, jmax + 1)]
    for x0, m in levels:
        if horiz is None:
            if abs(x0) <= rd:
                points.add(PointRZ(Fraction(x0, d), m))
            continue
        imin = -floor((rd + x0) / horiz)
        imax = floor((rd - x0) / horiz)
        for i in range(imin, imax + 1):
            points.add(PointRZ(Fraction(x0 + i * horiz, d), m))
    return BallElements(frozenset(points), frozenset())


def oracle_closure_ball_sweep(
    gens: Sequence[Tuple],
    r,
    max_coeff: int = 8,
) -> BallElements:
    """Combination-sweep route: coefficients bounded by max_coeff, the
    bound doubling until the in-ball point set is identical on two
    consecutive doublings."""
    r = as_fraction(r)
    if r <= 0:
        raise InvalidParameter("ball radius must be > 0")
    rows, d = _scaled_rows(gens)
    if not rows:
        return BallElements(frozenset({PointRZ(Fraction(0), 0)}), frozenset())

    mat = np.array(rows, dtype=np.int64)
    coeff = max_coeff
    prev, stable = None, 0
    while True:
        if (2 * coeff + 1) ** len(rows) > _SWEEP_BUDGET:
            raise SweepInfeasible(
                f"coefficient bound {coeff} over {len(rows)} generators "
                "exceeds the sweep budget"
            )
        combos = _in_ball_combos(mat, coeff, r, d)
        if prev is not None and combos == prev:
            stable += 1
            if stable >= 2:
                break
        else:
            stable = 0
        prev = combos
        coeff *= 2
        if coeff > _COEFF_CAP:
            raise NonDiscreteSuspected(
                f"no stabilization below coefficient bound {_COEFF_CAP}"
            )

    points = frozenset(PointRZ(Fraction(p, d), int(m)) for p, m in combos)
    return BallElements(points, frozenset())


def _in_ball_combos(mat, coeff, r: Fraction, d: int):
    k = mat.shape[0]
    rng = np.arange(-coeff, coeff + 1, dtype=np.int64)
    found = set()
    rn, rden = int(r.numerator), int(r.denominator)
    # outer loop over the first coefficient keeps slices bounded in memory
    grids = np.meshgrid(*([rng] * (k - 1)), indexing="ij") if k > 1 else []
    rest = (
        np.stack([g.ravel() for g in grids], axis=1)
        if grids
        else np.zeros((1, 0), dtype=np.int64)
    )
    rest_pts = rest @ mat[1:] if k > 1 else np.zeros((1, 2), dtype=np.int64)
    for c0 in rng:
        pts = rest_pts + c0 * mat[0]
        ok = (np.abs(pts[:, 0]) * rden <= rn * d) & (
            np.abs(pts[:, 1]) * rden <= rn
        )
        found.update(map(tuple, pts[ok].tolist()))
    return found


def totient(b: int) -> int:
    """Euler's phi via the multiplicative product over prime factors."""
    if b <= 0:
        raise InvalidParameter("totient is defined for positive integers")
    result = b
    m = b
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
