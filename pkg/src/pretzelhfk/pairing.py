"""Closed-form Lagrangian pairings of tangle curves with the closure curve.

Each function computes the "reduced" pairing of one tangle curve with the
rational closure curve r(-+1/(2c+1)): generator pairs whose Alexander labels
differ by 2 are merged into a single generator at half the averaged label.
The general-slope pairings are emitted block-by-block and truncated at the
intersection count L given by the rational-curve determinant law.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra import GeneratorMultiset, HalfInteger
from .curves import CurveKind, GradedCurve, ReducedSlope

DELTA_MINUS_HALF = HalfInteger(-1)
DELTA_HALF = HalfInteger(1)
DELTA_THREE_HALVES = HalfInteger(3)


class PairingError(ValueError):
    """Raised on unpairable multisets or unsupported curve shapes."""


@dataclass(frozen=True)
class ReducedPairing:
    """Reduced Floer generators of one curve pairing, final gradings."""

    generators: GeneratorMultiset

    @property
    def total_rank(self) -> int:
        return self.generators.total_rank


def reduce_generator_pairs(unreduced: GeneratorMultiset) -> ReducedPairing:
    """Merge {alpha, alpha+2} pairs (per delta) into generators at (alpha+1)/2.

    The matching into such pairs is forced: processing Alexander labels in
    increasing order, every leftover generator at alpha must pair upward with
    one at alpha+2.  Raises PairingError if no perfect matching exists.
    """
    out: Dict[Tuple[int, HalfInteger], int] = {}
    for delta in sorted(unreduced.deltas(), key=lambda d: d.twice):
        counts = {
            s: rk for (s, d), rk in unreduced.entries.items() if d == delta
        }
        pending: Dict[int, int] = {}
        for alpha in sorted(counts):
            matched = pending.pop(alpha, 0)  # pairs {alpha-2, alpha}, forced
            if matched > counts[alpha]:
                raise PairingError(f"unpairable multiset at alexander grading {alpha}")
            if matched:
                if alpha % 2 == 0:
                    raise PairingError(f"pair {{{alpha - 2}, {alpha}}} has no integer reduction")
                key = ((alpha - 1) // 2, delta)  # midpoint alpha-1, then halved
                out[key] = out.get(key, 0) + matched
            if counts[alpha] > matched:
                pending[alpha + 2] = counts[alpha] - matched
        if any(pending.values()):
            raise PairingError(f"unpairable multiset, leftovers at {sorted(pending)}")
    return ReducedPairing(GeneratorMultiset(out))


def pair_special14(closure: str, c: int, curve: GradedCurve) -> ReducedPairing:
    """Pairing with a special curve of (1,4) type: 2k generators at delta 1/2."""
    if curve.kind is not CurveKind.SPECIAL14:
        raise PairingError("curve is not special of (1,4) type")
    m, M = curve.m, curve.M
    if closure == "-":
        gens = GeneratorMultiset.interval(m // 2 - c, M // 2 - c - 1, DELTA_HALF)
    else:
        gens = GeneratorMultiset.interval(m // 2 + c + 1, M // 2 + c, DELTA_HALF)
    return ReducedPairing(gens)


def pair_special23(closure: str, c: int, curve: GradedCurve) -> ReducedPairing:
    """Pairing with a special curve of (2,3) type: mirror of the (1,4) case."""
    if curve.kind is not CurveKind.SPECIAL23:
        raise PairingError("curve is not special of (2,3) type")
    m, M = curve.m, curve.M
    if closure == "-":
        gens = GeneratorMultiset.interval(m // 2 + c + 1, M // 2 + c, DELTA_HALF)
    else:
        gens = GeneratorMultiset.interval(m // 2 - c, M // 2 - c - 1, DELTA_HALF)
    return ReducedPairing(gens)


def pair_rational_neg_half(closure: str, c: int, n: int, curve: GradedCurve) -> ReducedPairing:
    """Pairing with r(-1/2n) t^-2n t^2n."""
    if closure == "-":
        gens = GeneratorMultiset.interval(-n - c, n + c, DELTA_HALF)
    elif n > c:
        gens = GeneratorMultiset.interval(-n + c + 1, n - c - 1, DELTA_HALF)
    else:
        gens = GeneratorMultiset.interval(n - c, c - n, DELTA_MINUS_HALF)
    return ReducedPairing(gens)


def pair_rational_pos_half(closure: str, c: int, n: int, curve: GradedCurve) -> ReducedPairing:
    """Pairing with r(1/2n) t^m t^(m+4n); m need not be symmetric."""
    m, M = curve.m, curve.M
    if closure == "+":
        gens = GeneratorMultiset.interval(m // 2 - c, M // 2 + c, DELTA_HALF)
    elif n > c:
        gens = GeneratorMultiset.interval(m // 2 + c + 1, M // 2 - c - 1, DELTA_HALF)
    else:
        gens = GeneratorMultiset.interval(M // 2 - c, m // 2 + c, DELTA_THREE_HALVES)
    return ReducedPairing(gens)


def _blocks(base0: int, step_second: int, block: int, total: int) -> GeneratorMultiset:
    """Emit `total` generators in blocks of `block`, alternating base / base+step.

    Block i has base base0 + i; odd positions within a block carry the base,
    even positions carry base + step_second.  The emission is truncated at
    exactly `total` generators.
    """
    gens: List[int] = []
    i = 0
    while len(gens) < total:
        base = base0 + i
        for pos in range(block):
            if len(gens) == total:
                break
            gens.append(base if pos % 2 == 0 else base + step_second)
        i += 1
    return GeneratorMultiset.from_generators((s, HalfInteger(0)) for s in gens)


def _with_delta(ms: GeneratorMultiset, delta: HalfInteger) -> GeneratorMultiset:
    return GeneratorMultiset({(s, delta): rk for (s, _), rk in ms.entries.items()})


def pair_rational_general(closure: str, c: int, slope: ReducedSlope, M: int) -> ReducedPairing:
    """Pairing with the general rational curve r(-A/B) t^-M t^M of Case III."""
    A = -slope.numerator
    B = slope.denominator
    if A <= 0 or A % 2 == 0 or B % 2:
        raise PairingError(f"slope {slope} is not of the -A/B Case III shape")
    if A * (2 * c + 1) == B:
        raise PairingError("slope tie: closure slope equals curve slope")
    if closure == "-":
        L = B + A * (2 * c + 1)
        gens = _blocks(-M // 2 - c, +1, A, L)
        delta = DELTA_HALF
    elif A * (2 * c + 1) > B:
        L = A * (2 * c + 1) - B
        gens = _blocks(M // 2 - c, -1, A, L)
        delta = DELTA_MINUS_HALF
    else:
        L = B - A * (2 * c + 1)
        gens = _blocks(-M // 2 + c + 1, +1, A, L)
        delta = DELTA_HALF
    return ReducedPairing(_with_delta(gens, delta))


def pair_curve(closure: str, c: int, curve: GradedCurve) -> ReducedPairing:
    """Dispatch a tangle curve to the matching closed-form pairing."""
    if closure not in ("+", "-"):
        raise PairingError("closure sign must be '+' or '-'")
    if curve.kind is CurveKind.SPECIAL14:
        return pair_special14(closure, c, curve)
    if curve.kind is CurveKind.SPECIAL23:
        return pair_special23(closure, c, curve)
    slope = curve.slope
    if slope.denominator % 2 == 0 and slope.numerator == 1:
        return pair_rational_pos_half(closure, c, slope.denominator // 2, curve)
    if slope.denominator % 2 == 0 and slope.numerator == -1:
        return pair_rational_neg_half(closure, c, slope.denominator // 2, curve)
    if slope.numerator < 0 and slope.denominator % 2 == 0:
        return pair_rational_general(closure, c, slope, curve.M)
    raise PairingError(f"no pairing formula for rational slope {slope}")
