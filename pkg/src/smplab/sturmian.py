"""Lyapunov values of Sturmian parameters and their maximization.

For a rational slope p/q the Sturmian parameter is carried by the
Christoffel cycle, so its Lyapunov value for a pair (A, B) is simply

    f(p/q) = (1/q) log rho( christoffel(p, q)(A, B) ),

exact up to the spectral radius of one periodic product (no Birkhoff
averaging).  On a co-parallel pair, f is strictly midpoint concave on
the rationals, which makes a Stern-Brocot mediant descent sound: every
query is a genuine Christoffel word and the bracket always contains the
unique maximizer.  Any midpoint-concavity violation beyond tolerance
aborts the run, because it would falsify the co-parallel classification
of the input (or expose numerical breakdown).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .linalg import MatrixPair, scaled_word_product, spectral_radius
from .regions import classify
from .words import christoffel

__all__ = [
    "LyapunovSample",
    "IrrationalEstimate",
    "ConcavityReport",
    "ConcavityViolation",
    "lyapunov_rational",
    "lyapunov_irrational",
    "maximize_sturmian",
    "copar_gap",
    "midpoint_concavity_audit",
]


@dataclass(frozen=True, slots=True)
class LyapunovSample:
    """f(gamma) for one rational slope; -inf flags a nilpotent cycle."""

    gamma: Fraction
    value: float
    nilpotent: bool = False


class IrrationalEstimate(NamedTuple):
    value: float
    error: float           # last increment between convergent values
    convergent: Fraction   # the final continued-fraction convergent used


class ConcavityViolation(RuntimeError):
    """Raised when the midpoint-concavity audit fails beyond tolerance."""

    def __init__(self, violations: list[tuple[Fraction, Fraction, float]]):
        self.violations = violations
        worst = max(v for _, _, v in violations)
        super().__init__(
            f"{len(violations)} midpoint-concavity violation(s), worst {worst:.3e}; "
            "the pair is not co-parallel or the evaluation broke down")


@dataclass(frozen=True, slots=True)
class ConcavityReport:
    """Descent transcript: samples, audit outcome, and the argmax."""

    grid: list[LyapunovSample]
    midpoint_violations: list[tuple[Fraction, Fraction, float]]
    argmax_gamma: Fraction
    max_value: float

    def to_json_dict(self) -> dict:
        return {
            "grid": [{"gamma": str(s.gamma), "value": s.value,
                      "nilpotent": s.nilpotent} for s in self.grid],
            "midpoint_violations": [
                {"t1": str(t1), "t2": str(t2), "excess": e}
                for t1, t2, e in self.midpoint_violations
            ],
            "argmax_gamma": str(self.argmax_gamma),
            "max_value": self.max_value,
        }


def lyapunov_rational(p: MatrixPair, num: int, den: int) -> LyapunovSample:
    """(1/den) log rho of the Christoffel cycle of slope num/den.

    The product is accumulated with running renormalization, so large
    denominators neither overflow nor underflow.
    """
    word = christoffel(num, den)
    prod, logscale = scaled_word_product(p, word)
    rho = spectral_radius(prod)
    gamma = Fraction(num, den)
    if rho == 0.0:
        return LyapunovSample(gamma, float("-inf"), nilpotent=True)
    return LyapunovSample(gamma, (math.log(rho) + logscale) / den)


def _convergents(gamma: float, depth: int) -> list[Fraction]:
    """First continued-fraction convergents of gamma in (0, 1)."""
    out: list[Fraction] = []
    p0, q0, p1, q1 = 1, 0, 0, 1  # p1/q1 = 0/1 after the leading a0 = 0
    x = gamma
    for _ in range(depth):
        if x == 0.0:
            break
        x = 1.0 / x
        a = int(math.floor(x))
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        out.append(Fraction(p1, q1))
        frac = x - a
        if frac < 1e-15:
            break
        x = frac
    return out


def lyapunov_irrational(p: MatrixPair, gamma: float, depth: int) -> IrrationalEstimate:
    """Approximate f(gamma) through continued-fraction convergents.

    Continuity of the parameter-to-value map justifies evaluating at the
    first ``depth`` convergents; the last increment is reported as the
    error estimate (zero when the expansion terminates, i.e. for rational
    input).
    """
    if not 0.0 < gamma < 1.0:
        raise ValueError("gamma must lie strictly between 0 and 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    convs = _convergents(gamma, depth)
    values = [lyapunov_rational(p, c.numerator, c.denominator).value for c in convs]
    if len(values) == 1:
        return IrrationalEstimate(values[0], 0.0, convs[0])
    return IrrationalEstimate(values[-1], abs(values[-1] - values[-2]), convs[-1])


def _audit(samples: dict[Fraction, float],
           tol: float) -> list[tuple[Fraction, Fraction, float]]:
    """Check f(mid) > (f(t1)+f(t2))/2 - tol over all in-grid midpoints."""
    gammas = sorted(samples)
    violations = []
    for i, t1 in enumerate(gammas):
        for t2 in gammas[i + 1:]:
            mid = (t1 + t2) / 2
            fmid = samples.get(mid)
            if fmid is None:
                continue
            excess = (samples[t1] + samples[t2]) / 2 - fmid
            if excess >= tol:
                violations.append((t1, t2, excess))
    return violations


def maximize_sturmian(p: MatrixPair, resolution: Fraction = Fraction(1, 1024),
                      audit_tol: float = 1e-10) -> ConcavityReport:
    """Locate the maximizing Sturmian parameter by mediant descent.

    Maintains a bracket (l, m, r) of Stern-Brocot neighbours with the
    mediant m as the incumbent.  Each step evaluates the two sub-mediants;
    strict concavity implies the maximizer lies left of m when
    f(mediant(l, m)) > f(m), right of m symmetrically, and between the
    sub-mediants otherwise.  Stops once r - l < resolution.  All evaluated
    samples feed a midpoint-concavity audit; violations beyond
    ``audit_tol`` raise ConcavityViolation.
    """
    flags = classify(p)
    if flags.in_copar is not True:
        raise ValueError("pair is not (definitely) co-parallel; "
                         f"copar flag = {flags.in_copar!r}")
    if resolution <= 0:
        raise ValueError("resolution must be positive")

    samples: dict[Fraction, float] = {}

    def f(g: Fraction) -> float:
        if g not in samples:
            samples[g] = lyapunov_rational(p, g.numerator, g.denominator).value
        return samples[g]

    left = Fraction(0, 1)
    right = Fraction(1, 1)
    mid = Fraction(1, 2)
    for g in (left, right, mid):
        f(g)
    while right - left >= resolution:
        ml = Fraction(left.numerator + mid.numerator, left.denominator + mid.denominator)
        mr = Fraction(mid.numerator + right.numerator, mid.denominator + right.denominator)
        if f(ml) > f(mid):
            left, mid, right = left, ml, mid
        elif f(mr) > f(mid):
            left, mid, right = mid, mr, right
        else:
            left, right = ml, mr

    violations = _audit(samples, audit_tol)
    if violations:
        raise ConcavityViolation(violations)

    grid = [LyapunovSample(g, val, nilpotent=math.isinf(val))
            for g, val in sorted(samples.items())]
    return ConcavityReport(grid=grid, midpoint_violations=[],
                           argmax_gamma=mid, max_value=samples[mid])


def copar_gap(p: MatrixPair) -> float:
    """rho(AB) - rho(A) rho(B); strictly positive on co-parallel pairs."""
    flags = classify(p)
    if flags.in_copar is not True:
        raise ValueError("pair is not (definitely) co-parallel; "
                         f"copar flag = {flags.in_copar!r}")
    return spectral_radius(p.A @ p.B) - spectral_radius(p.A) * spectral_radius(p.B)


def midpoint_concavity_audit(p: MatrixPair, max_den: int,
                             tol: float = 1e-10) -> list[tuple[Fraction, Fraction, float]]:
    """Audit strict midpoint concavity of f on the Farey grid.

    Evaluates every reduced fraction with denominator <= max_den and
    returns the violations (empty on a genuinely co-parallel pair).
    """
    samples: dict[Fraction, float] = {}
    for q in range(1, max_den + 1):
        for a in range(0, q + 1):
            g = Fraction(a, q)
            if g not in samples:
                samples[g] = lyapunov_rational(p, g.numerator, g.denominator).value
    return _audit(samples, tol)
