"""Forward parametrizations of the circular-segment figure.

The segment is cut from a circle of radius 1 by a chord at height
``cos(phi)`` below the centre.  The sagitta ``m`` bisects chord and arc, the
square of side ``s`` sits on the chord with one side along the sagitta and
its outer corner on the arc, and the circle of diameter ``d`` is tangent to
the chord, the sagitta and (internally) the arc.

Four equivalent parameters describe the figure:

``phi``  half the central angle subtended by the chord
``r``    radius of the small circle, ``d = 2r``
``x``    ``sqrt(1 - 2r)``
``t``    ``d / a``, the solving variable; ``t**2 = (1 - x) / (3 + x)``

Polynomial parts of the formulas preserve the input number type, so
``Fraction`` arguments give exact results wherever no square root enters.
Square roots are rearranged to avoid cancellation near the degenerate
end of every range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .ratpoly import RatPoly, to_rational

__all__ = [
    "InfeasibleParameterError",
    "Scale",
    "SegmentQuantities",
    "ParamPoint",
    "Constants",
    "constants",
    "BOUNDARY_SLACK",
    "quantities_from_phi",
    "quantities_from_r",
    "quantities_from_x",
    "quantities_from_t_unit",
    "quantities_from_t_scaled",
    "natural_radius",
    "pq_of_t",
    "gion_polynomial",
    "phi_of_q",
    "x_from_t",
    "t_from_x",
    "r_from_x",
    "x_from_r",
    "phi_from_r",
    "r_from_phi",
    "phi_from_t",
    "param_point",
    "discriminant",
]

#: absolute slack admitted on the closed upper end of every parameter range
BOUNDARY_SLACK = 1e-12
_RADICAND_EPS = 1e-14


class InfeasibleParameterError(ValueError):
    """A parameter lies outside the range in which the figure exists."""


class Scale(Enum):
    UNIT = "unit"  # arc radius 1
    NATURAL = "natural"  # arc radius 2(1+t^2)^2
    RESCALED = "rescaled"  # arbitrary positive multiple, see ``factor``


@dataclass(frozen=True)
class SegmentQuantities:
    a: float
    m: float
    s: float
    d: float
    scale: Scale = Scale.UNIT
    factor: float = 1.0

    @property
    def p(self) -> float:
        return self.a + self.m + self.s + self.d

    @property
    def q(self) -> float:
        return self.m / self.a + self.d / self.m + self.s / self.d

    def as_tuple(self) -> tuple:
        return (self.a, self.m, self.s, self.d)

    def scaled(self, lam: float) -> SegmentQuantities:
        """All four lengths multiplied by ``lam``; ``q`` is unchanged."""
        if not lam > 0:
            raise ValueError("scale factor must be positive")
        return replace(
            self,
            a=self.a * lam,
            m=self.m * lam,
            s=self.s * lam,
            d=self.d * lam,
            scale=Scale.RESCALED,
            factor=self.factor * lam,
        )


@dataclass(frozen=True)
class Constants:
    q0: float
    t0: float
    r0: float
    x0: float
    phi0: float


@lru_cache(maxsize=None)
def constants() -> Constants:
    s5 = math.sqrt(5.0)
    q0 = -3 + 1.5 * s5 + 0.5 * math.sqrt(0.5 * (125 - 41 * s5))
    t0 = 0.5 * (1 - s5 + math.sqrt(2 * (5 - s5)))
    r0 = -1 + 1 / s5 + math.sqrt(2 - 2 / s5)
    x0 = math.sqrt(1 - 2 * r0)
    phi0 = math.pi / 2 + math.atan(0.5)
    return Constants(q0=q0, t0=t0, r0=r0, x0=x0, phi0=phi0)


def _sqrt(v) -> float:
    v = float(v)
    if v < 0:
        if v > -_RADICAND_EPS:
            return 0.0
        raise InfeasibleParameterError(f"negative radicand {v!r}")
    return math.sqrt(v)


def _check(name: str, value, lo, hi, lo_open: bool = True, hi_open: bool = False) -> None:
    v = float(value)
    if not math.isfinite(v):
        raise InfeasibleParameterError(f"{name}={value!r} is not finite")
    below = v <= lo if lo_open else v < lo - BOUNDARY_SLACK
    above = v >= hi if hi_open else v > hi + BOUNDARY_SLACK
    if below or above:
        lb = "(" if lo_open else "["
        rb = ")" if hi_open else "]"
        raise InfeasibleParameterError(f"{name}={value!r} outside {lb}{lo:.10g}, {hi:.10g}{rb}")


def _clamp(value, hi):
    # boundary slack admits float inputs a hair above the endpoint
    return hi if float(value) > hi else value


# --- conversions between parameters ---------------------------------------


def x_from_t(t):
    return (1 - 3 * t * t) / (1 + t * t)


def t_from_x(x) -> float:
    return _sqrt((1 - x) / (3 + x))


def r_from_x(x):
    return (1 - x * x) / 2


def x_from_r(r) -> float:
    return _sqrt(1 - 2 * r)


def phi_from_r(r) -> float:
    w = _sqrt(1 - 2 * r)
    sin2 = r * (2 - r + 2 * w)
    return math.atan2(_sqrt(sin2), float(w - r))


def r_from_phi(phi: float) -> float:
    """Inverse of ``cos(phi) = -r + sqrt(1 - 2r)``.

    With ``u = sqrt(1 - 2r) = 2cos(phi/2) - 1`` this is
    ``r = (1 - u)(1 + u)/2 = 4 sin(phi/4)**2 cos(phi/2)``.
    """
    return 4.0 * math.sin(phi / 4) ** 2 * math.cos(phi / 2)


def phi_from_t(t) -> float:
    t2 = t * t
    return math.atan2(float(4 * t * (1 - t2)), float((1 + t2) ** 2 - 8 * t2))


@dataclass(frozen=True)
class ParamPoint:
    phi: float
    r: float
    x: float
    t: float
    theta: float
    delta: float


def param_point(t) -> ParamPoint:
    """All parameters of the figure at a given ``t``."""
    _check("t", t, 0.0, constants().t0)
    x = x_from_t(to_rational(t))
    r = r_from_x(x)
    q = quantities_from_t_unit(t)
    return ParamPoint(
        phi=phi_from_t(to_rational(t)),
        r=float(r),
        x=float(x),
        t=float(t),
        theta=math.asin(min(1.0, q.s)),
        delta=math.asin(float(r / (1 - r))),
    )


# --- the four quantity chains ---------------------------------------------


def quantities_from_phi(phi: float) -> SegmentQuantities:
    k = constants()
    _check("phi", phi, 0.0, k.phi0)
    phi = min(float(phi), k.phi0)
    c, sn = math.cos(phi), math.sin(phi)
    a = 2 * sn
    m = 2 * math.sin(phi / 2) ** 2
    # sin(theta) = sqrt(8 - 4cos^2)/4 - cos/2, rationalized
    s = 2 * sn * sn / (math.sqrt(4 + 4 * sn * sn) + 2 * c)
    d = 2 * r_from_phi(phi)
    return SegmentQuantities(a, m, s, d)


def quantities_from_r(r) -> SegmentQuantities:
    _check("r", r, 0.0, constants().r0)
    r = _clamp(r, constants().r0)
    w = _sqrt(1 - 2 * r)
    m = r + 2 * r / (1 + w)  # 1 + r - sqrt(1 - 2r)
    a = 2 * _sqrt(r * (2 - r + 2 * w))
    big = 1 + 2 * r - r * r + 2 * r * w
    s = (r + (4 * r - r * r + 2 * r * w) / (w + _sqrt(big))) / 2
    return SegmentQuantities(float(a), float(m), float(s), float(2 * r))


def quantities_from_x(x) -> SegmentQuantities:
    k = constants()
    if float(x) < k.x0 - BOUNDARY_SLACK or not float(x) < 1:
        raise InfeasibleParameterError(f"x={x!r} outside [{k.x0:.10g}, 1)")
    if float(x) < k.x0:
        x = k.x0
    x2 = x * x
    d = 1 - x2
    m = (1 - x) * (3 + x) / 2
    a = (1 + x) * _sqrt((1 - x) * (3 + x))
    lin = 1 - 2 * x - x2
    root = _sqrt(7 + 4 * x - 2 * x2 - 4 * x2 * x - x2 * x2)
    if lin < 0:
        # root + lin == (root**2 - lin**2) / (root - lin)
        diff = 2 * (1 - x) * (3 + 7 * x + 5 * x2 + x2 * x)
        s = float(diff) / (root - float(lin)) / 4
    else:
        s = (float(lin) + root) / 4
    return SegmentQuantities(float(a), float(m), s, float(d))


def discriminant(t) -> float:
    """``1 + 20t^2 - 26t^4 + 20t^6 + t^8`` by Horner in ``t^2``."""
    u = t * t
    return (((u + 20) * u - 26) * u + 20) * u + 1


def _s_natural(t):
    # -1 + 6t^2 - t^4 + sqrt(D) == 32 t^2 (1-t^2)^2 / (sqrt(D) + 1 - 6t^2 + t^4)
    t2 = t * t
    return float(32 * t2 * (1 - t2) ** 2) / (_sqrt(discriminant(t)) + float(1 - 6 * t2 + t2 * t2))


def natural_radius(t):
    """Arc radius ``2(1+t^2)^2`` of the natural scale."""
    return 2 * (1 + t * t) ** 2


def quantities_from_t_unit(t) -> SegmentQuantities:
    _check("t", t, 0.0, constants().t0)
    t2 = t * t
    den = (1 + t2) ** 2
    d = 8 * t2 * (1 - t2) / den
    m = 8 * t2 / den
    a = 8 * t * (1 - t2) / den
    s = _s_natural(t) / (2 * float(den))
    return SegmentQuantities(float(a), float(m), s, float(d))


def quantities_from_t_scaled(t) -> SegmentQuantities:
    """Lengths at arc radius ``2(1+t^2)^2``.

    ``a``, ``m`` and ``d`` are polynomials in ``t`` and stay exact for
    rational input; ``s`` carries a square root and is a float.
    """
    _check("t", t, 0.0, constants().t0)
    t2 = t * t
    return SegmentQuantities(
        a=16 * t * (1 - t2),
        m=16 * t2,
        s=_s_natural(t),
        d=16 * t2 * (1 - t2),
        scale=Scale.NATURAL,
        factor=float(natural_radius(t)),
    )


def pq_of_t(t) -> tuple[float, float]:
    """Closed forms of ``p`` (natural scale) and ``q`` as functions of ``t``."""
    _check("t", t, 0.0, constants().t0)
    t = float(t)
    t2 = t * t
    root = _sqrt(discriminant(t))
    # sqrt(D) - 1 == t^2 (20 - 26t^2 + 20t^4 + t^6) / (sqrt(D) + 1)
    tail = (((t2 + 20) * t2 - 26) * t2 + 20) / (root + 1)
    p = 16 * t + t2 * (38 - 16 * t - 17 * t2 + tail)
    q = (22 + 16 * t - 33 * t2 + 16 * t2 * t2 + tail) / (16 * (1 - t2))
    return p, q


def gion_polynomial(q) -> RatPoly:
    """The degree-10 polynomial in ``t`` whose root in ``(0, t0]`` solves ``q``."""
    q = to_rational(q)
    return RatPoly(
        [
            q - 2,
            -1,
            8 * q * q - 23 * q + 18,
            -(16 * q - 22),
            -(16 * q * q - 55 * q + 39),
            16 * q - 33,
            8 * q * q - 49 * q + 56,
            16,
            16 * q - 33,
            0,
            8,
        ]
    )


def phi_of_q(q) -> float:
    """Half-angle ``phi`` of the segment determined by ``q``."""
    from .solver import solve_t

    t = solve_t(q)
    if isinstance(t, float):
        t = Fraction(t)
    return phi_from_t(t)
