"""Harder-Narasimhan types and the stratification they index.

Every representation of dimension d has a unique filtration whose
subquotients are semistable of strictly decreasing slope; the tuple of
their dimension vectors is its HN type.  The locus of representations
with a fixed type t = (d^1, ..., d^l) is a locally closed stratum of
codimension sum_{m<n} -<d^m, d^n>.  The type (d) itself indexes the
dense semistable stratum, present exactly when a semistable
representation exists.

Each stratum carries a distinguished one-parameter subgroup acting
blockwise with integer weights k_m = C * mu(d^m), C minimal; the weight
vector is all later weight computations need, so the subgroup is never
materialized as a group element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .core import (
    DimensionVector,
    Quiver,
    StabilityParameter,
    slope,
    subdimension_vectors,
)
from .semistability import has_semistable


class HNType(tuple):
    """An ordered tuple of nonzero dimension vectors.

    Construction rejects empty tuples and zero pieces; the slope and
    semistability conditions depend on (quiver, theta) and are
    guaranteed by `enumerate_hn_types`, or checked explicitly with
    `validate_hn_type`.
    """

    def __new__(cls, pieces):
        t = super().__new__(cls, (DimensionVector(p) for p in pieces))
        if not t:
            raise ValueError("an HN type must have at least one piece")
        length = len(t[0])
        for p in t:
            if len(p) != length:
                raise ValueError("HN type pieces must have equal length")
            if p.is_zero():
                raise ValueError("HN type pieces must be nonzero")
        return t

    def total(self) -> DimensionVector:
        out = self[0]
        for p in self[1:]:
            out = out + p
        return out


def validate_hn_type(
    q: Quiver,
    theta: StabilityParameter,
    t: HNType,
    d: DimensionVector | None = None,
) -> None:
    """Raise ValueError unless t is a genuine HN type (for d, if given):
    strictly decreasing slopes and every piece admitting a semistable
    representation."""
    if d is not None and t.total() != DimensionVector(d):
        raise ValueError(f"HN type sums to {tuple(t.total())}, expected {tuple(d)}")
    slopes = [slope(theta, p) for p in t]
    if any(a <= b for a, b in zip(slopes, slopes[1:])):
        raise ValueError("HN type slopes must be strictly decreasing")
    for p in t:
        if not has_semistable(q, p, theta):
            raise ValueError(f"piece {tuple(p)} admits no semistable representation")


@lru_cache(maxsize=None)
def enumerate_hn_types(
    q: Quiver, d: DimensionVector, theta: StabilityParameter
) -> tuple[HNType, ...]:
    """All HN types for (q, d, theta), sorted lexicographically.

    Requires d nonzero and theta(d) = 0.  Recursion on the remaining
    dimension vector: a type is a first piece e (nonzero, semistable
    locus nonempty, slope below the running bound) followed by a type of
    d - e bounded by mu(e).  Memoized on (remainder, bound).
    """
    d = DimensionVector(d)
    if d.is_zero():
        raise ValueError("enumerate_hn_types requires a nonzero dimension vector")
    theta = StabilityParameter(theta)
    if theta.dot(d) != 0:
        raise ValueError("enumerate_hn_types requires theta(d) = 0")

    candidates = [
        (e, slope(theta, e))
        for e in subdimension_vectors(d)[1:]
        if has_semistable(q, e, theta)
    ]
    memo: dict = {}

    def extend(rest: DimensionVector, bound: Fraction | None):
        if rest.is_zero():
            return ((),)
        key = (rest, bound)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = []
        for e, mu in candidates:
            if bound is not None and mu >= bound:
                continue
            if not e.leq(rest):
                continue
            for tail in extend(rest - e, mu):
                out.append((e,) + tail)
        result = tuple(out)
        memo[key] = result
        return result

    return tuple(sorted(HNType(seq) for seq in extend(d, None)))


def codimension(q: Quiver, t: HNType) -> int:
    """Codimension of the stratum with HN type t: sum_{m<n} -<d^m, d^n>."""
    ell = len(t)
    return sum(
        -q.euler_pairing(t[m], t[n]) for m in range(ell) for n in range(m + 1, ell)
    )


def codimension_cuts(q: Quiver, t: HNType) -> tuple[int, ...]:
    """The partial-sum pairings N_r = -<d^1+..+d^r, d^{r+1}+..+d^l>.

    The window width decomposes as sum_r (k_r - k_{r+1}) N_r, so N_r >= 2
    for all r forces the weight inequality on the stratum.
    """
    out = []
    for r in range(1, len(t)):
        head = HNType(t[:r]).total()
        tail = HNType(t[r:]).total()
        out.append(-q.euler_pairing(head, tail))
    return tuple(out)


@dataclass(frozen=True)
class OneParameterSubgroup:
    """Blockwise-scaling subgroup attached to a stratum.

    `weights[m] = scale * mu(d^m)`, with `scale` the least positive
    integer clearing all slope denominators.  Weights are strictly
    decreasing and satisfy sum_m weights[m] * |d^m| = scale * theta(d).
    """

    scale: int
    weights: tuple[int, ...]


def one_parameter_subgroup(theta: StabilityParameter, t: HNType) -> OneParameterSubgroup:
    """Integral weight data of the destabilizing subgroup for type t.

    Requires the slopes of t to be strictly decreasing.
    """
    slopes = [slope(theta, p) for p in t]
    if any(a <= b for a, b in zip(slopes, slopes[1:])):
        raise ValueError("one_parameter_subgroup requires strictly decreasing slopes")
    scale = lcm(*(mu.denominator for mu in slopes))
    weights = tuple(int(scale * mu) for mu in slopes)
    return OneParameterSubgroup(scale=scale, weights=weights)


def clear_caches() -> None:
    enumerate_hn_types.cache_clear()
