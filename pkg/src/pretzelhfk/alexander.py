"""Independent Alexander-polynomial oracle via Wirtinger presentations and Fox calculus.

The pretzel diagram is transcribed combinatorially (three vertical twist
bands, closed cyclically at top and bottom), a Wirtinger presentation is read
off crossing by crossing, and the Alexander polynomial is extracted as a
minor of the Fox-derivative matrix over Z[t, 1/t].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra import AlgebraError, LaurentPolynomial, normalize_alexander


class DiagramError(ValueError):
    """Raised for link (non-knot) inputs or degenerate twist parameters."""


@dataclass(frozen=True)
class Crossing:
    """One Wirtinger crossing: under-arc `incoming` passes under `over` and
    re-emerges as `outgoing`, conjugated with exponent `exponent` (+-1)."""

    over: int
    incoming: int
    outgoing: int
    exponent: int


@dataclass(frozen=True)
class PretzelDiagram:
    twists: Tuple[int, int, int]
    crossings: Tuple[Crossing, ...]
    arc_count: int


def _union(parent: Dict[int, int], x: int, y: int) -> None:
    parent[_find(parent, x)] = _find(parent, y)


def _find(parent: Dict[int, int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _strand_directions(twists: Tuple[int, int, int]) -> Dict[Tuple[int, str], str]:
    """Trace the closed-up diagram once and orient every band strand.

    Returns dir[(band, top_side_entered)] in {"down", "up"}; raises if the
    trace closes up before visiting all six strands (link case).
    """
    seen: Dict[Tuple[int, str], str] = {}
    band, side, at_top = 0, "L", True
    for _ in range(12):
        n = abs(twists[band])
        other_end_side = side if n % 2 == 0 else ("R" if side == "L" else "L")
        top_side = side if at_top else other_end_side
        if (band, top_side) in seen:
            break
        seen[(band, top_side)] = "down" if at_top else "up"
        exit_side = other_end_side if at_top else top_side
        # closure arcs: (k, R) joins (k+1, L); (k, L) joins (k-1, R)
        if exit_side == "R":
            band, side = (band + 1) % 3, "L"
        else:
            band, side = (band - 1) % 3, "R"
        at_top = not at_top
    if len(seen) != 6:
        raise DiagramError(f"P{twists} is a link, not a knot")
    return seen


def _cross(u: Tuple[int, int], v: Tuple[int, int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def build_pretzel_diagram(p: int, q: int, r: int) -> PretzelDiagram:
    """Combinatorial pretzel diagram P(p, q, r); knot cases only.

    Exactly one of p, q, r must be even (else the diagram is a 2- or
    3-component link) and none may be zero.
    """
    twists = (p, q, r)
    if any(t == 0 for t in twists):
        raise DiagramError("zero twist bands are not supported")
    if sum(1 for t in twists if t % 2 == 0) != 1:
        raise DiagramError(f"P{twists} is a link, not a knot")
    directions = _strand_directions(twists)

    next_arc = 0

    def fresh() -> int:
        nonlocal next_arc
        next_arc += 1
        return next_arc - 1

    # diagonal direction vectors within a crossing, by position above it
    def diag(pos: str, going_down: bool) -> Tuple[int, int]:
        if pos == "L":  # occupies the upper-left -> lower-right diagonal
            return (1, -1) if going_down else (-1, 1)
        return (-1, -1) if going_down else (1, 1)

    crossings: List[Crossing] = []
    tops: List[Tuple[int, int]] = []
    bottoms: List[Tuple[int, int]] = []
    for band, t in enumerate(twists):
        arc = {"L": fresh(), "R": fresh()}
        owner = {"L": "L", "R": "R"}  # which top side each position's strand entered at
        tops.append((arc["L"], arc["R"]))
        for _ in range(abs(t)):
            over_pos = "L" if t > 0 else "R"
            under_pos = "R" if t > 0 else "L"
            over_down = directions[(band, owner[over_pos])] == "down"
            under_down = directions[(band, owner[under_pos])] == "down"
            sign = 1 if _cross(diag(over_pos, over_down), diag(under_pos, under_down)) > 0 else -1
            exponent = sign if under_down else -sign
            new = fresh()
            crossings.append(
                Crossing(over=arc[over_pos], incoming=arc[under_pos], outgoing=new, exponent=exponent)
            )
            arc = {"L": arc["R"], "R": arc["L"]}
            owner = {"L": owner["R"], "R": owner["L"]}
            # the under strand re-emerges on the other side with the new arc
            arc[over_pos] = new  # under strand lands where the over strand left
        bottoms.append((arc["L"], arc["R"]))

    # cyclic closure: right side of band k meets left side of band k+1
    parent = {i: i for i in range(next_arc)}
    for k in range(3):
        _union(parent, tops[k][1], tops[(k + 1) % 3][0])
        _union(parent, bottoms[k][1], bottoms[(k + 1) % 3][0])

    reps = sorted({_find(parent, i) for i in range(next_arc)})
    index = {rep: i for i, rep in enumerate(reps)}
    merged = tuple(
        Crossing(
            over=index[_find(parent, c.over)],
            incoming=index[_find(parent, c.incoming)],
            outgoing=index[_find(parent, c.outgoing)],
            exponent=c.exponent,
        )
        for c in crossings
    )
    diagram = PretzelDiagram(twists=twists, crossings=merged, arc_count=len(reps))
    if diagram.arc_count != len(merged):
        raise DiagramError("arc/crossing count mismatch; diagram is not a knot diagram")
    return diagram


def _fox_matrix(d: PretzelDiagram) -> List[Dict[int, LaurentPolynomial]]:
    """Rows of Fox derivatives of the Wirtinger relators, abelianized at t.

    Relator x_o^e x_i x_o^-e x_j^-1 has derivatives (1 - t^e) at o, t^e at i
    and -1 at j (rows with e = -1 are scaled by the unit t, which is harmless).
    """
    t = LaurentPolynomial.monomial(1)
    one = LaurentPolynomial.one()
    rows = []
    for c in d.crossings:
        row: Dict[int, LaurentPolynomial] = {}

        def bump(col: int, val: LaurentPolynomial) -> None:
            row[col] = row.get(col, LaurentPolynomial.zero()) + val

        if c.exponent == 1:
            bump(c.over, one - t)
            bump(c.incoming, t)
            bump(c.outgoing, -one)
        else:
            # derivatives (1 - 1/t, 1/t, -1) scaled by t
            bump(c.over, t - one)
            bump(c.incoming, one)
            bump(c.outgoing, -t)
        rows.append({k: v for k, v in row.items() if not v.is_zero()})
    return rows


def _is_unit(p: LaurentPolynomial) -> bool:
    return len(p.coeffs) == 1 and abs(next(iter(p.coeffs.values()))) == 1


def _poly_divexact(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Exact division in Z[t, 1/t]; the quotient is known to exist."""
    if num.is_zero():
        return LaurentPolynomial.zero()
    n = dict(num.coeffs)
    d = den.coeffs
    d_hi = den.max_exp
    d_lead = d[d_hi]
    out: Dict[int, int] = {}
    while n:
        hi = max(n)
        coeff, rem = divmod(n[hi], d_lead)
        if rem:
            raise AlgebraError("inexact polynomial division")
        exp = hi - d_hi
        out[exp] = coeff
        for e, c in d.items():
            k = e + exp
            v = n.get(k, 0) - c * coeff
            if v:
                n[k] = v
            else:
                n.pop(k, None)
    return LaurentPolynomial(out)


def _determinant(rows: List[Dict[int, LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant over Z[t, 1/t], up to a unit +-t^k.

    Unit entries (Wirtinger rows are full of them) are used as pivots first,
    which keeps the elimination division-free; any residual block falls back
    to fraction-free Bareiss elimination.
    """
    rows = [dict(r) for r in rows]
    cols = set()
    for r in rows:
        cols |= r.keys()
    if len(rows) != len(cols):
        raise AlgebraError("determinant of a non-square matrix")

    # phase 1: unit pivots
    while rows:
        pick = None
        for ri, row in enumerate(rows):
            for col, val in row.items():
                if _is_unit(val):
                    pick = (ri, col, val)
                    break
            if pick:
                break
        if pick is None:
            break
        ri, col, pivot = pick
        prow = rows.pop(ri)
        for row in rows:
            if col in row:
                factor = _poly_divexact(row.pop(col), pivot)
                for c2, v2 in prow.items():
                    if c2 == col:
                        continue
                    v = row.get(c2, LaurentPolynomial.zero()) - factor * v2
                    if v.is_zero():
                        row.pop(c2, None)
                    else:
                        row[c2] = v
        if not rows:
            return LaurentPolynomial.one()

    # phase 2: Bareiss on the residual dense block
    cols = sorted({c for r in rows for c in r})
    if len(cols) != len(rows):
        return LaurentPolynomial.zero()
    mat = [[row.get(c, LaurentPolynomial.zero()) for c in cols] for row in rows]
    n = len(mat)
    prev = LaurentPolynomial.one()
    for k in range(n - 1):
        if mat[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not mat[i][k].is_zero()), None)
            if swap is None:
                return LaurentPolynomial.zero()
            mat[k], mat[swap] = mat[swap], mat[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j]
                mat[i][j] = _poly_divexact(num, prev)
            mat[i][k] = LaurentPolynomial.zero()
        prev = mat[k][k]
    return mat[n - 1][n - 1]


def fox_alexander(d: PretzelDiagram) -> LaurentPolynomial:
    """Normalized Alexander polynomial of the diagram via Fox calculus.

    One column (the last generator) and one row (the last relation) of the
    Alexander matrix are deleted before taking the determinant; the unit
    ambiguity is removed by normalize_alexander.
    """
    rows = _fox_matrix(d)
    drop_col = d.arc_count - 1
    trimmed = []
    for row in rows[:-1]:
        trimmed.append({c: v for c, v in row.items() if c != drop_col})
    det = _determinant(trimmed)
    return normalize_alexander(det)


def pretzel_determinant(p: int, q: int, r: int) -> int:
    """|Delta(-1)| for the pretzel knot: |pq + qr + rp|."""
    return abs(p * q + q * r + r * p)
