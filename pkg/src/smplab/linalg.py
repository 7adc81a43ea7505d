"""Closed-form linear algebra for real 2x2 matrices and ordered pairs.

Everything a pair ``(A, B)`` exposes to the rest of the package starts
here: spectra and Euclidean operator norms in closed form, products of
binary words, the five simultaneous-conjugacy invariants

    ``(x, y, z, u, v) = (tr A, tr B, tr AB, det A, det B)``,

and the commutator-determinant test ``det(AB - BA)`` that decides whether
a pair is simultaneously triangularizable ("reducible").  A real 5-tuple
is attainable by a pair of real matrices iff

    ``min(4u - x^2,  4uv - u y^2 - v x^2 + xyz - z^2) <= 0``.

All arithmetic is plain double precision; exact integer polynomial work
lives in :mod:`smplab.fricke`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

__all__ = [
    "Mat2",
    "MatrixPair",
    "FiveTuple",
    "Spectrum",
    "SpectrumKind",
    "CommutatorReport",
    "Reducibility",
    "ReducibilityReport",
    "spectrum",
    "spectral_radius",
    "operator_norm_2",
    "five_tuple",
    "word_product",
    "scaled_word_product",
    "commutator_matrix",
    "commutator_invariant",
    "is_reducible",
    "realizable",
    "conjugated",
]


@dataclass(frozen=True, slots=True)
class Mat2:
    """A real 2x2 matrix, stored row-major as four floats."""

    a11: float
    a12: float
    a21: float
    a22: float

    def __post_init__(self) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"matrix entry {name} is not finite: {v!r}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a11, a12), (a21, a22) = rows
        return cls(a11, a12, a21, a22)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1.0, 0.0, 0.0, 1.0)

    def rows(self) -> list[list[float]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def entries(self) -> tuple[float, float, float, float]:
        return (self.a11, self.a12, self.a21, self.a22)

    def trace(self) -> float:
        return self.a11 + self.a22

    def det(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21

    def transpose(self) -> "Mat2":
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def is_zero(self) -> bool:
        return self.a11 == 0.0 and self.a12 == 0.0 and self.a21 == 0.0 and self.a22 == 0.0

    def is_symmetric(self, tol: float = 0.0) -> bool:
        return abs(self.a12 - self.a21) <= tol

    def max_abs(self) -> float:
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))

    def inverse(self) -> "Mat2":
        d = self.det()
        if d == 0.0:
            raise ZeroDivisionError("matrix is singular")
        return Mat2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def apply(self, vec) -> tuple[float, float]:
        x, y = vec
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a11 - other.a11, self.a12 - other.a12,
                    self.a21 - other.a21, self.a22 - other.a22)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, s: float) -> "Mat2":
        return Mat2(self.a11 * s, self.a12 * s, self.a21 * s, self.a22 * s)

    __rmul__ = __mul__


@dataclass(frozen=True, slots=True)
class MatrixPair:
    """An ordered pair of real 2x2 matrices; letter 0 names A, letter 1 names B."""

    A: Mat2
    B: Mat2

    def swapped(self) -> "MatrixPair":
        return MatrixPair(self.B, self.A)

    def letter(self, ch: str) -> Mat2:
        if ch == "0":
            return self.A
        if ch == "1":
            return self.B
        raise ValueError(f"invalid letter {ch!r}, expected '0' or '1'")

    def to_json_dict(self) -> dict:
        return {"A": self.A.rows(), "B": self.B.rows()}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "MatrixPair":
        return cls(Mat2.from_rows(obj["A"]), Mat2.from_rows(obj["B"]))


class FiveTuple(NamedTuple):
    """Simultaneous-conjugacy coordinates (tr A, tr B, tr AB, det A, det B)."""

    x: float
    y: float
    z: float
    u: float
    v: float

    def to_json_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "z": self.z, "u": self.u, "v": self.v}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "FiveTuple":
        return cls(float(obj["x"]), float(obj["y"]), float(obj["z"]),
                   float(obj["u"]), float(obj["v"]))


class SpectrumKind(Enum):
    REAL_DISTINCT = "RealDistinct"
    REAL_REPEATED = "RealRepeated"
    COMPLEX_CONJUGATE = "ComplexConjugate"


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Eigenvalue data of a 2x2 matrix.

    Complex eigenvalues are never materialized: in the complex-conjugate
    case only the common modulus ``rho = sqrt(det)`` is exposed and
    ``eigenvalues`` is None.
    """

    kind: SpectrumKind
    rho: float
    eigenvalues: tuple[float, float] | None


def spectrum(m: Mat2, repeated_tol: float = 1e-12) -> Spectrum:
    """Closed-form spectrum of a 2x2 matrix.

    A repeated eigenvalue is reported when ``|tr^2 - 4 det| <= repeated_tol
    * max(1, tr^2)``; an exact floating-point zero of the discriminant is
    not required.
    """
    scale = m.max_abs()
    if scale > 1e100 or 0.0 < scale < 1e-100:
        # keep tr^2 and det within range; eigenvalues scale linearly
        inner = spectrum(m * (1.0 / scale), repeated_tol)
        eigs = None if inner.eigenvalues is None else (
            inner.eigenvalues[0] * scale, inner.eigenvalues[1] * scale)
        return Spectrum(inner.kind, inner.rho * scale, eigs)
    t = m.trace()
    d = m.det()
    disc = t * t - 4.0 * d
    if abs(disc) <= repeated_tol * max(1.0, t * t):
        lam = 0.5 * t
        return Spectrum(SpectrumKind.REAL_REPEATED, abs(lam), (lam, lam))
    if disc > 0.0:
        r = math.sqrt(disc)
        l1 = 0.5 * (t + r)
        l2 = 0.5 * (t - r)
        return Spectrum(SpectrumKind.REAL_DISTINCT, max(abs(l1), abs(l2)), (l1, l2))
    return Spectrum(SpectrumKind.COMPLEX_CONJUGATE, math.sqrt(d), None)


def spectral_radius(m: Mat2) -> float:
    """Spectral radius of a 2x2 matrix without building a Spectrum object."""
    scale = m.max_abs()
    if scale > 1e100 or 0.0 < scale < 1e-100:
        return scale * spectral_radius(m * (1.0 / scale))
    t = m.trace()
    d = m.det()
    disc = t * t - 4.0 * d
    if disc >= 0.0:
        return 0.5 * (abs(t) + math.sqrt(disc))
    return math.sqrt(d)


def operator_norm_2(m: Mat2) -> float:
    """Largest singular value, i.e. sqrt of the top eigenvalue of M^T M.

    For ``M^T M`` the trace is the sum of squared entries and the
    determinant is ``det(M)^2``, so the top eigenvalue has a closed form.
    """
    scale = m.max_abs()
    if scale > 1e75 or 0.0 < scale < 1e-75:  # t*t below would overflow
        return scale * operator_norm_2(m * (1.0 / scale))
    t = m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22
    d = m.det()
    disc = t * t - 4.0 * d * d
    if disc < 0.0:  # numerical noise only; |disc| is tiny then
        disc = 0.0
    return math.sqrt(0.5 * (t + math.sqrt(disc)))


def five_tuple(p: MatrixPair) -> FiveTuple:
    """The invariants (tr A, tr B, tr AB, det A, det B) of a pair."""
    ab = p.A @ p.B
    return FiveTuple(p.A.trace(), p.B.trace(), ab.trace(), p.A.det(), p.B.det())


def word_product(p: MatrixPair, word: str) -> Mat2:
    """Product of the pair along a binary word, left to right.

    The letter '0' stands for A and '1' for B; ``word_product(p, "01")``
    is ``A @ B``.
    """
    if not word:
        raise ValueError("empty word has no product")
    out = p.letter(word[0])
    for ch in word[1:]:
        out = out @ p.letter(ch)
    return out


def scaled_word_product(p: MatrixPair, word: str) -> tuple[Mat2, float]:
    """Word product with running renormalization.

    Returns ``(P, logscale)`` such that the true product equals
    ``exp(logscale) * P``.  Long words (Christoffel cycles of large
    denominator) overflow or underflow doubles; this keeps the running
    product's largest entry within [1e-120, 1e120].
    """
    if not word:
        raise ValueError("empty word has no product")
    out = p.letter(word[0])
    logscale = 0.0
    for ch in word[1:]:
        out = out @ p.letter(ch)
        m = out.max_abs()
        if m != 0.0 and (m > 1e120 or m < 1e-120):
            out = out * (1.0 / m)
            logscale += math.log(m)
    return out, logscale


def commutator_matrix(p: MatrixPair) -> Mat2:
    return (p.A @ p.B) - (p.B @ p.A)


@dataclass(frozen=True, slots=True)
class CommutatorReport:
    """det(AB - BA) together with its equivalent algebraic expressions.

    ``expressions`` maps a formula name to its value; the inverse-based
    formula is included only when both determinants are nonzero.
    ``max_deviation`` is the largest pairwise absolute difference among
    the computed expressions.
    """

    value: float
    expressions: dict[str, float]
    max_deviation: float


def commutator_invariant(p: MatrixPair) -> CommutatorReport:
    """Evaluate det(AB - BA) through its equivalent closed forms.

    The five routes are: the quintic in the five-tuple, the literal
    commutator determinant, the discriminant-window form, the power-trace
    difference ``tr(A^2 B^2) - tr((AB)^2)``, and (for invertible matrices)
    ``det A det B (2 - tr(A B A^-1 B^-1))``.
    """
    a, b = p.A, p.B
    x, y, z, u, v = five_tuple(p)

    e1 = 4.0 * u * v - u * y * y - v * x * x + x * y * z - z * z
    e2 = commutator_matrix(p).det()
    e3 = 0.25 * (x * x - 4.0 * u) * (y * y - 4.0 * v) - (z - 0.5 * x * y) ** 2
    ab = a @ b
    e4 = ((a @ a) @ (b @ b)).trace() - (ab @ ab).trace()

    expressions = {
        "five_tuple_poly": e1,
        "commutator_det": e2,
        "disc_window": e3,
        "power_traces": e4,
    }
    if u != 0.0 and v != 0.0:
        e5 = u * v * (2.0 - (a @ b @ a.inverse() @ b.inverse()).trace())
        expressions["inverse_form"] = e5

    values = list(expressions.values())
    max_dev = max(abs(p1 - p2) for i, p1 in enumerate(values) for p2 in values[i + 1:])
    return CommutatorReport(value=e2, expressions=expressions, max_deviation=max_dev)


class Reducibility(Enum):
    REDUCIBLE = "Reducible"
    IRREDUCIBLE = "Irreducible"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True, slots=True)
class ReducibilityReport:
    verdict: Reducibility
    margin: float  # det(AB-BA) / (|A|_2 |B|_2)^2, signed


def is_reducible(p: MatrixPair, tol: float = 1e-9) -> ReducibilityReport:
    """Simultaneous-triangularizability test via det(AB - BA).

    The raw commutator determinant scales with fourth powers of the
    entries, so the tolerance is applied to the scale-free margin
    ``det(AB - BA) / (|A|_2 |B|_2)^2``.  An exact zero is Reducible; a
    nonzero margin inside ``tol`` is Indeterminate.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    na = operator_norm_2(p.A)
    nb = operator_norm_2(p.B)
    if na == 0.0 or nb == 0.0:
        return ReducibilityReport(Reducibility.REDUCIBLE, 0.0)
    margin = commutator_matrix(
        MatrixPair(p.A * (1.0 / na), p.B * (1.0 / nb))).det()
    if margin == 0.0:
        return ReducibilityReport(Reducibility.REDUCIBLE, 0.0)
    if abs(margin) <= tol:
        return ReducibilityReport(Reducibility.INDETERMINATE, margin)
    return ReducibilityReport(Reducibility.IRREDUCIBLE, margin)


def realizable(t: FiveTuple) -> bool:
    """Whether a real matrix pair attains this 5-tuple."""
    x, y, z, u, v = t
    delta = 4.0 * u * v - u * y * y - v * x * x + x * y * z - z * z
    return min(4.0 * u - x * x, delta) <= 0.0


def conjugated(p: MatrixPair, g: Mat2) -> MatrixPair:
    """Simultaneous conjugation (g A g^-1, g B g^-1)."""
    gi = g.inverse()
    return MatrixPair(g @ p.A @ gi, g @ p.B @ gi)
