"""Geometric oracle: intersection counting and grading of rational-curve pairings.

A rational curve on the 4-punctured sphere lifts to straight lines in the
punctured plane R^2 minus Z^2; the parametrizing square lifts to the integer
grid and the deck group is generated by v -> -v and translations by 2Z^2.
Pairing two rational curves therefore reduces to intersecting one fixed lift
of the first curve with the two translate families of lines covering the
second, modulo the period of the first.  Each intersection point is graded by
the local disk rule: a disk in the cell containing the point, bounded by the
blue curve from y to the point, the red curve from the point to x, and an arc
of the grid, traversed clockwise; the Alexander grading is the blue label at
y minus the red label at x plus the signs of the punctures the disk covers.

Alexander labels along a single line follow from the same disk rule applied
within the curve: the step between consecutive grid crossings equals the sum
of puncture signs below the connecting segment, which is +-2 for a full cell
traversal and +-1 otherwise, with the sign set by the row parity.  Labels are
anchored so the minimum over one period equals the curve's stored m, and the
computed span is checked against M - m.

The delta grading is computed the same way with a half per covered puncture,
using per-curve delta labels on the grid crossings.  The remaining discrete
conventions (which puncture rows are positive, the orientation sign, and the
per-curve delta labels) are not determined by the construction alone; they
were fixed once by requiring agreement with the closed-form pairings on a
calibration sweep and are hard-coded below.  The resolved delta labels are:
curves with odd slope denominator (the closure curves) carry
-sign(slope) * 1/2 on vertical-edge crossings and 0 on horizontal ones,
curves with even slope denominator (the tangle curves) carry 0 on
vertical-edge crossings and sign(slope) * 1/2 on horizontal ones, and each
covered puncture contributes +1/2 regardless of its sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import GeneratorMultiset, HalfInteger
from .curves import CurveKind, GradedCurve, ReducedSlope

# Calibrated conventions (see module docstring): EPS_SIGN fixes which rows of
# punctures are positive, CW_SIGN is the shoelace sign accepted as clockwise.
EPS_SIGN = 1
CW_SIGN = -1

Point = Tuple[Fraction, Fraction]


class GeometryError(ValueError):
    """Raised on parallel slopes or non-rational curve inputs."""


def det_pair_count(s1: ReducedSlope, s2: ReducedSlope) -> int:
    """Generator-pair count |r1 s2 - r2 s1| of two transverse rational curves."""
    d = s1.numerator * s2.denominator - s2.numerator * s1.denominator
    if d == 0:
        raise GeometryError(f"slopes {s1} and {s2} are parallel; pairing undefined")
    return abs(d)


def _eps(corner: Tuple[int, int]) -> int:
    """Sign of the puncture at a lattice point; rows alternate."""
    return EPS_SIGN * (1 if corner[1] % 2 == 0 else -1)


@dataclass(frozen=True)
class LiftedLine:
    """The line q y = p x + q * intercept, missing the integer lattice."""

    p: int
    q: int  # > 0
    intercept: Fraction

    @property
    def slope(self) -> Fraction:
        return Fraction(self.p, self.q)

    def y_at(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def x_at(self, y: Fraction) -> Fraction:
        return (y - self.intercept) / self.slope


def _grid_crossings(line: LiftedLine, x_lo: Fraction, x_hi: Fraction):
    """Crossings of the line with the grid for x in [x_lo, x_hi), sorted by x.

    Returns triples (x, y, kind) with kind "V" (x integral) or "H" (y
    integral).
    """
    pts = []
    x = math.ceil(x_lo)
    while x < x_hi:
        pts.append((Fraction(x), line.y_at(Fraction(x)), "V"))
        x += 1
    y_ends = (line.y_at(x_lo), line.y_at(x_hi))
    y = math.ceil(min(y_ends))
    while y < max(y_ends):
        xx = line.x_at(Fraction(y))
        if x_lo <= xx < x_hi:
            pts.append((xx, Fraction(y), "H"))
        y += 1
    pts.sort()
    return pts


class CurveLabels:
    """Alexander and delta labels of one lifted curve's grid crossings.

    Labels are periodic with x-period 2q and anchored so the minimum over a
    period is the curve's m; construction fails if the realized span differs
    from M - m (which would mean the line does not lift the decorated curve).
    """

    def __init__(self, line: LiftedLine, m: int, M: int):
        self.line = line
        self.period = 2 * line.q
        pts = _grid_crossings(line, Fraction(0), Fraction(2 * self.period))
        labs = [0]
        for (x1, y1, k1), (x2, y2, k2) in zip(pts, pts[1:]):
            row = math.floor((y1 + y2) / 2)
            mag = 2 if (k1 == "V" and k2 == "V") else 1
            labs.append(labs[-1] + mag * _eps((0, row)))
        by_x = {x: lab for (x, _, _), lab in zip(pts, labs)}
        base = [(x, lab) for (x, _, _), lab in zip(pts, labs) if x < self.period]
        if not all(by_x.get(x + self.period) == lab for x, lab in base):
            raise GeometryError("grid labels are not periodic; bad line offset")
        values = [lab for _, lab in base]
        if max(values) - min(values) != M - m:
            raise GeometryError(
                f"label span {max(values) - min(values)} does not match "
                f"decoration span {M - m}"
            )
        shift = m - min(values)
        self.table: Dict[Fraction, int] = {x: lab + shift for x, lab in base}

    def alexander(self, x: Fraction) -> int:
        key = x - self.period * (x // self.period)
        return self.table[key]

    def delta_halves(self, kind: str) -> int:
        sgn = 1 if self.line.p > 0 else -1
        if self.line.q % 2:
            return -sgn if kind == "V" else 0
        return 0 if kind == "V" else sgn


def _boundary_param(pt: Point, i: int, j: int) -> Fraction:
    """Position of a cell-boundary point along the counterclockwise walk
    starting at corner (i, j): bottom, right, top, left edges in order."""
    x, y = pt
    if y == j:
        return x - i
    if x == i + 1:
        return 1 + (y - j)
    if y == j + 1:
        return 2 + (i + 1 - x)
    if x == i:
        return 3 + (j + 1 - y)
    raise GeometryError("point not on cell boundary")


_CORNER_PARAMS = [Fraction(0), Fraction(1), Fraction(2), Fraction(3)]


def _corner_at(t: Fraction, i: int, j: int) -> Tuple[int, int]:
    return [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)][int(t)]


def _cell_crossings(pts, i: int, j: int):
    """Filter grid crossings lying on the boundary of cell [i,i+1]x[j,j+1]."""
    out = []
    for x, y, kind in pts:
        if kind == "V" and x in (i, i + 1) and j < y < j + 1:
            out.append(((x, y), kind))
        elif kind == "H" and y in (j, j + 1) and i < x < i + 1:
            out.append(((x, y), kind))
    return out


def _shoelace(poly: List[Point]) -> Fraction:
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        area += x1 * y2 - x2 * y1
    return area


def _grade_point(
    z: Point,
    red_pts,
    blue_pts,
    red_alex,
    blue_alex,
    red_delta,
    blue_delta,
) -> Tuple[int, int]:
    """Alexander label and delta label (in halves) of one intersection point.

    red_pts/blue_pts are the two cell-boundary crossings of each curve;
    *_alex and *_delta map a crossing to its labels.  All clockwise disk
    configurations are evaluated and must agree.
    """
    i, j = math.floor(z[0]), math.floor(z[1])
    marked = [(p, k, "red") for p, k in red_pts] + [(p, k, "blue") for p, k in blue_pts]
    marked.sort(key=lambda e: _boundary_param(e[0], i, j))
    colors = [c for _, _, c in marked]
    if colors in (["red", "blue", "red", "blue"], ["blue", "red", "blue", "red"]):
        pass
    else:
        raise GeometryError("cell boundary points do not alternate colors")

    results = []
    n = len(marked)
    for idx in range(n):
        p1, k1, c1 = marked[idx]
        p2, k2, c2 = marked[(idx + 1) % n]
        t1 = _boundary_param(p1, i, j)
        t2 = _boundary_param(p2, i, j)
        corner_ts = [t for t in _CORNER_PARAMS if (t1 < t < t2) or (t2 < t1 and (t > t1 or t < t2))]
        if t2 < t1:
            corner_ts.sort(key=lambda t: (t <= t2, t))  # wrap order: after t1 first
        corners = [_corner_at(t, i, j) for t in corner_ts]
        # the disk boundary: blue from y to z, red from z to x, grid from x
        # back to y through the sector's corners
        if c1 == "red":
            x_pt, x_kind, y_pt, y_kind = p1, k1, p2, k2
            arc = corners  # walk forward from x at t1 to y at t2
        else:
            x_pt, x_kind, y_pt, y_kind = p2, k2, p1, k1
            arc = corners[::-1]  # walk backward from x at t2 to y at t1
        poly = [y_pt, z, x_pt] + [
            (Fraction(cx), Fraction(cy)) for cx, cy in arc
        ]
        area = _shoelace(poly)
        if area == 0 or (1 if area > 0 else -1) != CW_SIGN:
            continue
        alex = blue_alex(y_pt) - red_alex(x_pt) + sum(_eps(c) for c in corners)
        delta = blue_delta(y_kind) - red_delta(x_kind) + len(corners)
        results.append((alex, delta))
    if not results:
        raise GeometryError("no clockwise disk configuration found")
    if any(r != results[0] for r in results):
        raise GeometryError(f"disk configurations disagree: {results}")
    return results[0]


def closure_curve(c: int, closure: str) -> GradedCurve:
    """The rational curve closing off the third pretzel strand.

    Negative closure uses r(1/(2c+1)), positive closure r(-1/(2c+1)); both
    carry the symmetric grading t^(-2c-1) t^(2c+1).
    """
    num = -1 if closure == "+" else 1
    return GradedCurve.rational(num, 2 * c + 1, -2 * c - 1, 2 * c + 1)


def enumerate_geometric_pairing(
    red: GradedCurve, blue: GradedCurve
) -> GeneratorMultiset:
    """Unreduced bigraded generator multiset of a rational-rational pairing.

    Intersections of a fixed lift of the red (closure) curve with all lifts
    of the blue (tangle) curve are enumerated over one red period; there are
    exactly 2 * det_pair_count of them, each graded by the local disk rule.
    """
    for curve in (red, blue):
        if curve.kind is not CurveKind.RATIONAL:
            raise GeometryError("geometric pairing is defined for rational curves only")
    pr, qr = red.slope.numerator, red.slope.denominator
    pb, qb = blue.slope.numerator, blue.slope.denominator
    if qr == 0 or qb == 0:
        raise GeometryError("infinite slopes are not supported")
    det_pair_count(red.slope, blue.slope)  # raises on parallel slopes

    red_line = LiftedLine(pr, qr, Fraction(1, 2 * qr))
    blue_base = LiftedLine(pb, qb, Fraction(1, 4 * qb))
    red_labels = CurveLabels(red_line, red.m, red.M)
    blue_labels = CurveLabels(blue_base, blue.m, blue.M)

    sr, sb = red_line.slope, blue_base.slope
    cr = red_line.intercept
    ub = blue_base.intercept  # 1/(4 qb)
    pb_inv = pow(pb % qb, -1, qb)

    period = Fraction(2 * qr)
    gens: List[Tuple[int, HalfInteger]] = []
    for sigma in (1, -1):
        # blue family sigma: intercepts sigma*ub + 2k/qb; window of k values
        # whose line meets the red lift with 0 <= x < one red period
        c_ends = (cr, cr + (sr - sb) * period)
        k_lo = math.ceil((min(c_ends) - sigma * ub) * qb / 2)
        k_hi = math.ceil((max(c_ends) - sigma * ub) * qb / 2)
        for k in range(k_lo, k_hi):
            c_off = sigma * ub + Fraction(2 * k, qb)
            x_star = (c_off - cr) / (sr - sb)
            if not (0 <= x_star < period):
                continue
            z = (x_star, red_line.y_at(x_star))
            if z[0].denominator == 1 or z[1].denominator == 1:
                raise GeometryError("intersection point lies on the grid")
            blue_line = LiftedLine(pb, qb, c_off)

            # transport a point of this translate back to the base blue lift:
            # solve t*qb - s*pb = k for the translation (2s, 2t)
            s0 = (-k) * pb_inv % qb
            # base point of (x, y): x - 2 s0 for sigma=+1, 2 s0 - x for -1

            def blue_alex(pt: Point, s0=s0, sigma=sigma) -> int:
                return blue_labels.alexander(sigma * (pt[0] - 2 * s0))

            i, j = math.floor(z[0]), math.floor(z[1])
            window = (Fraction(i) - 1, Fraction(i) + 2)
            red_pts = _cell_crossings(_grid_crossings(red_line, *window), i, j)
            blue_pts = _cell_crossings(_grid_crossings(blue_line, *window), i, j)
            if len(red_pts) != 2 or len(blue_pts) != 2:
                raise GeometryError("expected exactly two boundary crossings per curve")
            alex, delta_halves = _grade_point(
                z,
                red_pts,
                blue_pts,
                lambda pt: red_labels.alexander(pt[0]),
                blue_alex,
                red_labels.delta_halves,
                blue_labels.delta_halves,
            )
            gens.append((alex, HalfInteger(delta_halves)))

    expected = 2 * det_pair_count(red.slope, blue.slope)
    if len(gens) != expected:
        raise GeometryError(f"enumerated {len(gens)} points, expected {expected}")
    return GeneratorMultiset.from_generators(gens)
