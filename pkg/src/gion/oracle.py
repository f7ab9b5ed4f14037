"""Independent checks of the closed forms.

:func:`construct_from_phi` rebuilds the figure from its defining contact
conditions by bisection, without touching any of the closed-form
expressions for ``s`` or ``d``.  :func:`certify_polynomial_identity`
expands the squared radical equation for ``q(t)`` in exact arithmetic and
compares it with ``32 t^2 P(t, q)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import InfeasibleParameterError, constants, gion_polynomial
from .ratpoly import RatPoly

__all__ = [
    "ConstructionResult",
    "IdentityReport",
    "VerificationReport",
    "BisectionError",
    "construct_from_phi",
    "certify_polynomial_identity",
    "squared_radical_polynomial",
    "verify_solution",
    "IDENTITY_Q_VALUES",
]

_WIDTH = 1e-14
_MAX_ITER = 200

IDENTITY_Q_VALUES = (Fraction(2), Fraction(9, 4), Fraction(5, 2), Fraction(3), Fraction(7, 2))


class BisectionError(ValueError):
    """The constraint function does not change sign on its bracket."""


def _bisect(f, lo: float, hi: float) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BisectionError(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(_MAX_ITER):
        if hi - lo <= _WIDTH:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ConstructionResult:
    a: float
    m: float
    s: float
    d: float
    theta: float
    delta: float
    max_constraint_residual: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.m, self.s, self.d)


def construct_from_phi(phi: float) -> ConstructionResult:
    """Figure at unit arc radius from the contact conditions alone.

    Coordinates: arc centre at the origin, sagitta on the y-axis, chord on
    ``y = cos(phi)``.  The square stands on the chord against the sagitta
    with its outer corner ``(sin(theta), cos(theta))`` on the arc.  The
    small circle, on the other side of the sagitta, has centre
    ``(r, cos(phi) + r)`` and touches the arc from inside.
    """
    phi0 = constants().phi0
    if not 0 < phi <= phi0 + 1e-12:
        raise InfeasibleParameterError(f"phi={phi!r} outside (0, {phi0:.10g}]")
    c = math.cos(phi)

    def corner(theta):
        # square side equals both the corner's abscissa and its height above the chord
        return math.sin(theta) - math.cos(theta) + c

    def tangency(r):
        return r * r + (c + r) ** 2 - (1 - r) ** 2

    theta = _bisect(corner, 0.0, math.pi / 2)
    r = _bisect(tangency, 0.0, 0.5)
    a = 2 * math.sin(phi)
    m = 1 - c
    s = math.sin(theta)
    delta = math.asin(r / (1 - r))
    residual = max(
        abs(corner(theta)),
        abs(tangency(r)),
        abs((1 - r) * math.cos(delta) - r - (1 - m)),
    )
    return ConstructionResult(a, m, s, 2 * r, theta, delta, residual)


def squared_radical_polynomial(q) -> RatPoly:
    """``(16t^2(t^2-1)q + (-1+22t^2+16t^3-33t^4+16t^6))^2 - D(t)``."""
    q = Fraction(q)
    lin = RatPoly([0, 0, -16, 0, 16]) * q + RatPoly([-1, 0, 22, 16, -33, 0, 16])
    disc = RatPoly([1, 0, 20, 0, -26, 0, 20, 0, 1])
    return lin * lin - disc


@dataclass
class IdentityReport:
    holds: bool
    q_values: tuple[Fraction, ...]
    mismatch: tuple[Fraction, int, Fraction, Fraction] | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def certify_polynomial_identity(q_values=IDENTITY_Q_VALUES) -> IdentityReport:
    """Check ``L(t) == 32 t^2 P(t, q)`` coefficientwise at each ``q``.

    Both sides have degree at most 2 in ``q``, so agreement at three or more
    distinct values of ``q`` proves the identity for all ``q``.
    """
    q_values = tuple(Fraction(q) for q in q_values)
    if len(set(q_values)) < 3:
        raise ValueError("need at least three distinct q values")
    details = {}
    for q in q_values:
        lhs = squared_radical_polynomial(q)
        rhs = RatPoly.monomial(2, 32) * gion_polynomial(q)
        n = max(len(lhs), len(rhs))
        for i in range(n):
            if lhs[i] != rhs[i]:
                return IdentityReport(False, q_values, (q, i, lhs[i], rhs[i]), details)
        details[q] = lhs
    return IdentityReport(True, q_values, None, details)


@dataclass(frozen=True)
class VerificationReport:
    p_relative_error: float
    q_relative_error: float
    phi: float
    radius: float
    length_deviations: tuple[float, float, float, float]
    construction: ConstructionResult

    @property
    def max_deviation(self) -> float:
        return max(self.p_relative_error, self.q_relative_error, *self.length_deviations)


def verify_solution(sol, p, q) -> VerificationReport:
    """Cross-check a solved tuple against the bisection construction.

    The segment's half-angle follows from ``m / a = tan(phi/2) / 2`` and its
    radius from ``a = 2 R sin(phi)``; the construction at that angle is
    scaled by ``R`` and compared length by length.
    """
    a, m, s, d = sol.a, sol.m, sol.s, sol.d
    p, q = float(p), float(q)
    p_err = abs(a + m + s + d - p) / abs(p)
    q_err = abs(m / a + d / m + s / d - q) / abs(q)
    phi = 2 * math.atan2(2 * m, a)
    phi0 = constants().phi0
    built = construct_from_phi(min(phi, phi0))
    radius = a / (2 * math.sin(phi))
    devs = tuple(
        abs(radius * ref - got) / abs(radius * ref)
        for ref, got in zip(built.as_tuple(), (a, m, s, d))
    )
    return VerificationReport(p_err, q_err, phi, radius, devs, built)
