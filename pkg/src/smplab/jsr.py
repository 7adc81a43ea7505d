"""Joint-spectral-radius bounds and certificates for 2x2 matrix pairs.

For any word length k the three-member sandwich holds:

    max over primitive classes of rho(P)^(1/k)
        <= JSR(A, B) <=
    max over all length-k products of |P|^(1/k),

so a brute-force scan produces a rigorous [lower, upper] interval.  On
top of that, the region classification gives exact values:

    crossing      JSR = max(rho(A), rho(B)), maximizers are single letters
    negative      JSR = max(rho(A), rho(B), rho(AB)^(1/2))
    mixed         JSR = sup_n { rho(A^n B)^(1/(n+1)), rho(A) }  (or the
                  swapped direction, by the determinant signs); the scan
                  terminates with a rigorous submultiplicative tail bound
    co-parallel   not certified; the Sturmian optimizer proposes the
                  candidate and brute force brackets it

Known degenerate escapes (a matrix behaving like a scaled reflection or
rational rotation with modulus at the candidate value) downgrade the
certificate to a brute-force interval instead of risking a wrong claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from . import kernels
from .linalg import (
    Mat2,
    MatrixPair,
    operator_norm_2,
    spectral_radius,
    spectrum,
    SpectrumKind,
)
from .regions import classify
from .words import christoffel

__all__ = [
    "LengthStats",
    "BoundsReport",
    "GelfandScan",
    "SmpCandidate",
    "brute_force",
    "gelfand_scan",
    "certify",
    "MAX_BRUTE_LEN",
]

MAX_BRUTE_LEN = 24  # cost guard: 2^25 products beyond this

NormSpec = Union[str, Callable[[Mat2], float]]


@dataclass(frozen=True, slots=True)
class LengthStats:
    """Per-length scan data: best primitive class and the norm ceiling."""

    rho_root: float   # max rho(P)^(1/k) over primitive classes of length k
    rho_word: str     # Lyndon representative attaining it
    norm_root: float  # max |P|^(1/k) over ALL length-k products


@dataclass(frozen=True, slots=True)
class BoundsReport:
    """Brute-force sandwich for the JSR.

    ``lower`` is the best spectral-radius root over one representative
    per primitive cyclic class (powers of shorter classes add nothing);
    ``upper`` is the smallest per-length norm ceiling.  ``second_value``
    is the best value over classes other than the winner (with its word
    when it is some length's champion), and ``ties`` lists every class
    within ``tie_tol`` of the winner.
    """

    lower: float
    upper: float
    best_word: str
    second_value: float
    second_word: str | None
    ties: list[str]
    per_length: dict[int, LengthStats]
    norm: str
    max_len: int

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "best_word": self.best_word,
            "second_value": None if math.isinf(self.second_value) else self.second_value,
            "second_word": self.second_word,
            "ties": list(self.ties),
            "per_length": {
                str(k): {"rho_root": s.rho_root, "rho_word": s.rho_word,
                         "norm_root": s.norm_root}
                for k, s in sorted(self.per_length.items())
            },
            "norm": self.norm,
            "max_len": self.max_len,
        }


def _norm_profile_custom(a: Mat2, b: Mat2, max_len: int,
                         norm_fn: Callable[[Mat2], float]) -> list[float]:
    """Depth-first per-length norm maxima under a user-supplied norm."""
    best = [0.0] * (max_len + 1)

    def visit(m: Mat2, depth: int) -> None:
        if depth == max_len:
            return
        for child in (m @ a, m @ b):
            n = norm_fn(child)
            if n > best[depth + 1]:
                best[depth + 1] = n
            visit(child, depth + 1)

    visit(Mat2.identity(), 0)
    return [math.nan] + [best[k] ** (1.0 / k) for k in range(1, max_len + 1)]


def brute_force(p: MatrixPair, max_len: int = 12, norm: NormSpec = "euclid",
                tie_tol: float = 1e-9) -> BoundsReport:
    """Scan all cyclic classes (lower) and all products (upper) up to max_len.

    Matrices are pre-scaled by 1/max(|A|_2, |B|_2, 1) to keep products in
    range; the reported roots are scale-corrected.  ``norm`` is "euclid"
    or any homogeneous matrix norm callable (e.g. a polygon gauge); the
    lower bound never depends on the norm.  Best-word ties break to the
    shorter length, then lexicographically.
    """
    if not 1 <= max_len <= MAX_BRUTE_LEN:
        raise ValueError(f"max_len must be in 1..{MAX_BRUTE_LEN}, got {max_len}")
    s = max(operator_norm_2(p.A), operator_norm_2(p.B), 1.0)
    a_s = p.A * (1.0 / s)
    b_s = p.B * (1.0 / s)

    best_root, best_word, second_root, ties_raw = kernels.scan_classes(
        a_s.entries(), b_s.entries(), max_len, tie_tol / s)

    if norm == "euclid":
        norm_roots = kernels.norm_profile(a_s.entries(), b_s.entries(), max_len)
        norm_name = "euclid"
    elif callable(norm):
        norm_roots = _norm_profile_custom(a_s, b_s, max_len, norm)
        norm_name = getattr(norm, "__name__", "custom")
    else:
        raise ValueError(f"norm must be 'euclid' or a callable, got {norm!r}")

    per_length = {
        k: LengthStats(rho_root=best_root[k] * s, rho_word=best_word[k],
                       norm_root=norm_roots[k] * s)
        for k in range(1, max_len + 1)
    }
    lower = max(st.rho_root for st in per_length.values())
    upper = min(st.norm_root for st in per_length.values())
    best_k, best_w = min(
        (k, st.rho_word) for k, st in per_length.items() if st.rho_root == lower)

    # runner-up class: same-length second or another length's champion
    second_value = second_root[best_k] * s if math.isfinite(second_root[best_k]) \
        else float("-inf")
    second_word = None
    for k, st in per_length.items():
        if k != best_k and st.rho_root > second_value:
            second_value = st.rho_root
            second_word = st.rho_word

    ties = sorted({w for w, r in ties_raw if r * s >= lower - tie_tol},
                  key=lambda w: (len(w), w))
    return BoundsReport(lower=lower, upper=upper, best_word=best_w,
                        second_value=second_value, second_word=second_word,
                        ties=ties, per_length=per_length, norm=norm_name,
                        max_len=max_len)


@dataclass(frozen=True, slots=True)
class GelfandScan:
    """Result of maximizing rho(P^n Q)^(1/(n+1)) together with rho(P).

    ``n_star`` is None when the pure-power member rho(P) is the maximum.
    ``terminated`` means the tail bound certified that no larger value
    exists beyond the scanned range; when False, the value is still a
    valid lower bound for the supremum.
    """

    direction: str
    n_star: int | None
    value: float
    terminated: bool
    scanned: int

    @property
    def word(self) -> str:
        """Lyndon representative of the attaining class."""
        if self.direction == "A_pow_B":
            return "0" * self.n_star + "1" if self.n_star is not None else "0"
        return "0" + "1" * self.n_star if self.n_star is not None else "1"


def gelfand_scan(p: MatrixPair, direction: str = "A_pow_B",
                 cap: int = 10_000) -> GelfandScan:
    """Scan n -> rho(P^n Q)^(1/(n+1)) with a rigorous stopping rule.

    P is A and Q is B for direction "A_pow_B"; swapped for "B_pow_A"
    (rho(B^n A) equals rho(A B^n) by cyclic invariance).  Termination:
    once alpha = |P^n|^(1/n) drops strictly below the running best,
    submultiplicativity gives |P^m| <= K alpha^m with
    K = max_s<n |P^s| / alpha^s, hence

        rho(P^m Q)^(1/(m+1)) <= alpha (K |Q| / alpha)^(1/(m+1)) < best

    for all m beyond an explicit M0; scanning to M0 certifies the rest.
    Powers are tracked with running renormalization, so the scan is safe
    at any spectral radius.
    """
    if direction == "A_pow_B":
        pm, qm = p.A, p.B
    elif direction == "B_pow_A":
        pm, qm = p.B, p.A
    else:
        raise ValueError(f"direction must be 'A_pow_B' or 'B_pow_A', got {direction!r}")
    if pm.is_zero():
        raise ValueError("powered matrix is zero")
    if qm.is_zero():
        raise ValueError("companion matrix is zero")

    s = max(operator_norm_2(pm), operator_norm_2(qm), 1.0)
    pm_s = pm * (1.0 / s)
    qm_s = qm * (1.0 / s)
    log_nq = math.log(operator_norm_2(qm_s))

    best = spectral_radius(pm_s)  # the pure-power member of the supremum
    best_n: int | None = None
    log_norms = [0.0]  # log |P^n| for n = 0, 1, ...
    cur = Mat2.identity()
    cur_log = 0.0
    terminated = False
    n = 0
    while n <= cap:
        prod = cur @ qm_s
        r = spectral_radius(prod)
        if r > 0.0:
            root = math.exp((math.log(r) + cur_log) / (n + 1))
            if root > best:
                best = root
                best_n = n
        # tail certificate (checked densely early, then throttled)
        if n >= 1 and best > 0.0 and (n <= 512 or n % 128 == 0):
            alpha_log = log_norms[n] / n
            if alpha_log < math.log(best):
                k_log = max(log_norms[m] - m * alpha_log for m in range(n))
                num = k_log + log_nq - alpha_log
                den = math.log(best) - alpha_log
                if num <= 0.0 or n >= num / den - 1.0:
                    terminated = True
                    break
        cur = cur @ pm_s
        m_abs = cur.max_abs()
        if m_abs == 0.0:
            # nilpotent power: every later product vanishes
            terminated = True
            n += 1
            break
        if m_abs > 1e120 or m_abs < 1e-120:
            cur = cur * (1.0 / m_abs)
            cur_log += math.log(m_abs)
        n += 1
        log_norms.append(math.log(operator_norm_2(cur)) + cur_log)

    return GelfandScan(direction=direction, n_star=best_n, value=best * s,
                       terminated=terminated, scanned=n)


@dataclass(frozen=True, slots=True)
class SmpCandidate:
    """A (possibly certified) spectrum-maximizing-product candidate.

    When ``certified`` is true, ``value`` equals the exact JSR (within
    floating-point evaluation of the closed forms) and ``jsr`` repeats
    it; otherwise ``jsr`` is None and [lower, upper] brackets the truth
    when brute force was run.
    """

    word: str
    value: float
    certified: bool
    certificate: str
    jsr: float | None
    ties: list[str]
    lower: float | None = None
    upper: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "word": self.word,
            "value": self.value,
            "certified": self.certified,
            "certificate": self.certificate,
            "jsr": self.jsr,
            "ties": list(self.ties),
            "lower": self.lower,
            "upper": self.upper,
        }


def _argmax_words(cands: list[tuple[str, float]], tol: float) -> tuple[str, float, list[str]]:
    value = max(v for _, v in cands)
    tied = sorted((w for w, v in cands if v >= value - tol * max(1.0, value)),
                  key=lambda w: (len(w), w))
    return tied[0], value, tied


def _looks_like_scaled_reflection(m: Mat2, value: float, tol: float) -> bool:
    # trace ~ 0 and -det ~ value^2: conjugate to value * reflection
    scale = max(operator_norm_2(m), 1.0)
    return abs(m.trace()) <= tol * scale and \
        abs(-m.det() - value * value) <= tol * max(1.0, value * value)


def _looks_like_scaled_rotation(m: Mat2, value: float, tol: float) -> bool:
    # complex eigenvalues with modulus ~ value: conjugate to value * rotation
    sp = spectrum(m)
    return sp.kind == SpectrumKind.COMPLEX_CONJUGATE and \
        abs(sp.rho - value) <= tol * max(1.0, value)


def certify(p: MatrixPair, tol: float = 1e-9, brute_len: int = 12,
            resolution: Fraction = Fraction(1, 1024)) -> SmpCandidate:
    """Certify an SMP and the exact JSR where the region theory allows.

    Routing: reducible pairs triangularize (a single letter wins);
    crossing pairs pinch at max(rho(A), rho(B)); both-negative
    determinants reduce to {A, B, AB}; mixed determinant signs run the
    power scan oriented by which determinant is negative or zero (both
    directions when the product is exactly zero); co-parallel pairs get
    the Sturmian candidate with a brute-force bracket; anything else is
    brute force only.
    """
    from .sturmian import maximize_sturmian  # deferred: sturmian imports regions

    flags = classify(p, tol)
    ra = spectral_radius(p.A)
    rb = spectral_radius(p.B)

    if flags.reducible is True:
        word, value, ties = _argmax_words([("0", ra), ("1", rb)], tol)
        return SmpCandidate(word=word, value=value, certified=True,
                            certificate="reducible-triangularizable",
                            jsr=value, ties=ties)

    if flags.in_cross is True:
        word, value, ties = _argmax_words([("0", ra), ("1", rb)], tol)
        return SmpCandidate(word=word, value=value, certified=True,
                            certificate="crossing-single-letter",
                            jsr=value, ties=ties)

    if flags.in_neg is True:
        rab = math.sqrt(spectral_radius(p.A @ p.B))
        word, value, ties = _argmax_words([("0", ra), ("1", rb), ("01", rab)], tol)
        if _looks_like_scaled_reflection(p.A, value, tol) or \
                _looks_like_scaled_reflection(p.B, value, tol):
            br = brute_force(p, brute_len)
            return SmpCandidate(word=br.best_word, value=br.lower, certified=False,
                                certificate="negative-determinants-reflection-degenerate",
                                jsr=None, ties=br.ties, lower=br.lower, upper=br.upper)
        return SmpCandidate(word=word, value=value, certified=True,
                            certificate="negative-determinants-short-list",
                            jsr=value, ties=ties)

    if flags.in_mix is True:
        u = p.A.det()
        v = p.B.det()
        if u > 0.0 > v:
            dirs = ["A_pow_B"]
        elif v > 0.0 > u:
            dirs = ["B_pow_A"]
        else:  # a zero determinant orients ambiguously: scan both ways
            dirs = ["A_pow_B", "B_pow_A"]
        scans = [gelfand_scan(p, d) for d in dirs]
        best = max(scans, key=lambda g: g.value)
        value = best.value
        certified = all(g.terminated for g in scans)
        powered = {"A_pow_B": p.A, "B_pow_A": p.B}
        if any(_looks_like_scaled_rotation(powered[d], value, tol) for d in dirs):
            certified = False
        ties = sorted({g.word for g in scans
                       if g.value >= value - tol * max(1.0, value)},
                      key=lambda w: (len(w), w))
        return SmpCandidate(word=best.word, value=value, certified=certified,
                            certificate="mixed-determinants-power-scan"
                                        + ("" if certified else "-unterminated"),
                            jsr=value if certified else None, ties=ties)

    if flags.in_copar is True:
        report = maximize_sturmian(p, resolution)
        gamma = report.argmax_gamma
        word = christoffel(gamma.numerator, gamma.denominator)
        value = math.exp(report.max_value)
        br = brute_force(p, brute_len)
        return SmpCandidate(word=word, value=value, certified=False,
                            certificate="co-parallel-sturmian-candidate",
                            jsr=None, ties=[word],
                            lower=br.lower, upper=br.upper)

    br = brute_force(p, brute_len)
    return SmpCandidate(word=br.best_word, value=br.lower, certified=False,
                        certificate="brute-force-only", jsr=None,
                        ties=br.ties, lower=br.lower, upper=br.upper)
