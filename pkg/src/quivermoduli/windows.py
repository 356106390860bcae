"""Quantization-window weights and the vanishing/rigidity certificates.

For each unstable HN stratum, the attached one-parameter subgroup acts
on the determinants of the canonical bundles of the ambient
representation space and of the stratum; the difference of the two
weights is the window width.  Writing k for the subgroup weights and
d^1, ..., d^l for the type,

    ambient weight   sum_{m<n} (k_n - k_m) (<d^m,d^n> - <d^n,d^m>)
    stratum weight   sum_{m<n} (k_m - k_n) <d^n,d^m>
    window width     sum_{m<n} (k_n - k_m) <d^m,d^n>

and width = ambient - stratum identically.  The stratum passes the
weight inequality when k_1 - k_l < width; if every unstable stratum
passes and theta is coprime to d, higher cohomology of the structure
sheaf vanishes on the moduli space, and acyclicity of the quiver
upgrades this to rigidity.  A failed inequality only withholds the
certificate, it does not disprove vanishing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import (
    DimensionVector,
    Quiver,
    StabilityParameter,
    is_theta_coprime,
)
from .hn import (
    HNType,
    OneParameterSubgroup,
    codimension,
    enumerate_hn_types,
    one_parameter_subgroup,
)
from .semistability import has_semistable, is_strongly_amply_stable


def ambient_canonical_weight(q: Quiver, t: HNType, sub: OneParameterSubgroup) -> int:
    """Weight of the canonical bundle of the representation space."""
    k = sub.weights
    ell = len(t)
    return sum(
        (k[n] - k[m]) * (q.euler_pairing(t[m], t[n]) - q.euler_pairing(t[n], t[m]))
        for m in range(ell)
        for n in range(m + 1, ell)
    )


def stratum_canonical_weight(q: Quiver, t: HNType, sub: OneParameterSubgroup) -> int:
    """Weight of the canonical bundle of the stratum."""
    k = sub.weights
    ell = len(t)
    return sum(
        (k[m] - k[n]) * q.euler_pairing(t[n], t[m])
        for m in range(ell)
        for n in range(m + 1, ell)
    )


def window_width(q: Quiver, t: HNType, sub: OneParameterSubgroup) -> int:
    """Weight of the determinant of the conormal bundle of the stratum.

    Equals ambient_canonical_weight - stratum_canonical_weight.
    """
    k = sub.weights
    ell = len(t)
    return sum(
        (k[n] - k[m]) * q.euler_pairing(t[m], t[n])
        for m in range(ell)
        for n in range(m + 1, ell)
    )


def hom_bundle_weights(
    t: HNType, sub: OneParameterSubgroup, i: int, j: int
) -> Counter:
    """Subgroup weights on the hom bundle between vertices i and j.

    Weight k_m - k_n occurs with multiplicity d^m_i * d^n_j; the result
    maps weight -> multiplicity and totals d_i * d_j.  Vertices are
    1-based.
    """
    length = len(t[0])
    if not (1 <= i <= length and 1 <= j <= length):
        raise ValueError(f"vertex pair ({i}, {j}) out of range for {length} vertices")
    k = sub.weights
    out: Counter = Counter()
    for m in range(len(t)):
        for n in range(len(t)):
            mult = t[m][i - 1] * t[n][j - 1]
            if mult:
                out[k[m] - k[n]] += mult
    return out


@dataclass(frozen=True)
class StratumReport:
    """Weight data deciding the inequality on a single stratum."""

    hn_type: HNType
    subgroup: OneParameterSubgroup
    codim: int
    ambient_canonical_weight: int
    stratum_canonical_weight: int
    window_width: int
    max_bundle_weight: int
    inequality_holds: bool


def stratum_report(q: Quiver, theta: StabilityParameter, t: HNType) -> StratumReport:
    """Full weight report for one stratum.

    The dense stratum (a single piece) passes by convention: there is
    nothing to quantize away.
    """
    sub = one_parameter_subgroup(theta, t)
    width = window_width(q, t, sub)
    max_bw = sub.weights[0] - sub.weights[-1]
    return StratumReport(
        hn_type=t,
        subgroup=sub,
        codim=codimension(q, t),
        ambient_canonical_weight=ambient_canonical_weight(q, t, sub),
        stratum_canonical_weight=stratum_canonical_weight(q, t, sub),
        window_width=width,
        max_bundle_weight=max_bw,
        inequality_holds=True if len(t) == 1 else max_bw < width,
    )


@dataclass(frozen=True)
class Verdict:
    """Certificate summary for one (quiver, d, theta) instance."""

    coprime: bool
    acyclic: bool
    strongly_amply_stable: bool
    amply_stable: bool
    all_strata_inequality: bool
    vanishing_certified: bool
    rigidity_certified: bool
    failing_strata: tuple[HNType, ...]
    min_unstable_codim: int | None


def verdict(q: Quiver, d: DimensionVector, theta: StabilityParameter) -> Verdict:
    """Decide the vanishing and rigidity certificates.

    vanishing_certified = coprime and every unstable stratum passes the
    weight inequality; rigidity_certified additionally needs an acyclic
    quiver.  Requires theta(d) = 0 and a nonempty semistable locus.
    """
    d = DimensionVector(d)
    theta = StabilityParameter(theta)
    if theta.dot(d) != 0:
        raise ValueError("verdict requires theta(d) = 0")
    if not has_semistable(q, d, theta):
        raise ValueError("verdict requires a nonempty semistable locus")

    unstable = [
        stratum_report(q, theta, t)
        for t in enumerate_hn_types(q, d, theta)
        if len(t) > 1
    ]
    failing = tuple(r.hn_type for r in unstable if not r.inequality_holds)
    all_inequality = not failing
    min_codim = min((r.codim for r in unstable), default=None)
    coprime = is_theta_coprime(theta, d)
    strong, _ = is_strongly_amply_stable(q, d, theta)
    vanishing = coprime and all_inequality
    return Verdict(
        coprime=coprime,
        acyclic=q.is_acyclic,
        strongly_amply_stable=strong,
        amply_stable=min_codim is None or min_codim >= 2,
        all_strata_inequality=all_inequality,
        vanishing_certified=vanishing,
        rigidity_certified=vanishing and q.is_acyclic,
        failing_strata=failing,
        min_unstable_codim=min_codim,
    )


def moduli_dimension(q: Quiver, d: DimensionVector) -> int:
    """Dimension 1 - <d, d> of the moduli space in the coprime case."""
    return 1 - q.euler_pairing(d, d)
