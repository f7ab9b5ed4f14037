"""Recover ``(a, m, s, d)`` from ``p = a+m+s+d`` and ``q = m/a + d/m + s/d``.

The procedure: find the unique root ``t`` of ``P(t, q)`` in ``(0, t0]``,
evaluate the natural-scale lengths at ``t`` and rescale them so that their
sum is ``p``.

Exactly rational ``q`` (``Fraction``, ``int`` or a ``"num/den"`` string) is
first certified to have one root in the search interval by a Sturm count.
Float ``q`` is rationalized exactly and bracketed by sign change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .geometry import (
    BOUNDARY_SLACK,
    constants,
    gion_polynomial,
    pq_of_t,
    quantities_from_t_scaled,
)
from .ratpoly import EndpointRootError, RatPoly, refine_root, sturm_count, to_rational

__all__ = [
    "FeasibilityVerdict",
    "Feasibility",
    "GionSolution",
    "InfeasibleInputError",
    "SolverConsistencyError",
    "STURM_CAP",
    "STURM_CAP_BELOW",
    "classify",
    "solve",
    "solve_t",
    "roundtrip_error",
    "MonotonicityCertificate",
    "monotonicity_certificate",
]

#: rational upper end for exact root counting; t0 < 14/25 < next root of P
STURM_CAP = Fraction(14, 25)
#: rational just below t0, used when a count on (0, STURM_CAP] is not 1
STURM_CAP_BELOW = Fraction(5573, 10000)


class FeasibilityVerdict(Enum):
    FEASIBLE = "Feasible"
    Q_TOO_SMALL = "QTooSmall"
    Q_TOO_LARGE = "QTooLarge"
    P_NONPOSITIVE = "PNonpositive"


@dataclass(frozen=True)
class Feasibility:
    verdict: FeasibilityVerdict
    bound: float | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict is FeasibilityVerdict.FEASIBLE

    def __bool__(self) -> bool:
        return self.feasible

    def describe(self) -> str:
        v = self.verdict
        if v is FeasibilityVerdict.FEASIBLE:
            return "feasible"
        if v is FeasibilityVerdict.P_NONPOSITIVE:
            return "p <= 0"
        if v is FeasibilityVerdict.Q_TOO_SMALL:
            return "q <= 2"
        return f"q > q0≈{self.bound:.8f}"


class InfeasibleInputError(ValueError):
    def __init__(self, feasibility: Feasibility):
        super().__init__(f"no solution: {feasibility.describe()}")
        self.feasibility = feasibility


class SolverConsistencyError(RuntimeError):
    """A post-condition that the theory guarantees did not hold."""


@dataclass(frozen=True)
class GionSolution:
    a: float
    m: float
    s: float
    d: float
    t: float
    p_residual: float
    q_residual: float
    root_bracket: tuple[float, float]
    iterations: int
    method: str

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.m, self.s, self.d)


def _is_exact(q) -> bool:
    return isinstance(q, (int, Fraction, str)) and not isinstance(q, bool)


def classify(p, q) -> Feasibility:
    """Which of the feasibility conditions ``p > 0``, ``2 < q <= q0`` fails."""
    q0 = constants().q0
    if not float(p) > 0:
        return Feasibility(FeasibilityVerdict.P_NONPOSITIVE, 0.0)
    qr = to_rational(q)
    if qr <= 2:
        return Feasibility(FeasibilityVerdict.Q_TOO_SMALL, 2.0)
    if float(qr) > q0 + BOUNDARY_SLACK:
        return Feasibility(FeasibilityVerdict.Q_TOO_LARGE, q0)
    return Feasibility(FeasibilityVerdict.FEASIBLE)


def _locate(poly: RatPoly, exact: bool) -> tuple[Fraction | float, Fraction | float, str]:
    """Bracket for the unique root of ``poly`` in ``(0, t0]``."""
    t0 = constants().t0
    if exact:
        try:
            n = sturm_count(poly, 0, STURM_CAP)
        except EndpointRootError:
            n = None
        if n == 1:
            return Fraction(0), STURM_CAP, "sturm"
        n_below = sturm_count(poly, 0, STURM_CAP_BELOW)
        if n_below == 1:
            return Fraction(0), STURM_CAP_BELOW, "sturm"
        if n_below > 1:
            raise SolverConsistencyError(f"{n_below} roots of P in (0, {STURM_CAP_BELOW}]")
        # the root, if any, sits in (T', t0]
        return STURM_CAP_BELOW, _upper(poly, t0), "sturm+sign"
    return 0.0, _upper(poly, t0), "sign"


def _upper(poly: RatPoly, t0: float) -> float:
    # P(0, q) = q - 2 > 0; find the first point at or just past t0 with P <= 0
    for hi in (t0, t0 + 1e-12, t0 + 1e-9):
        if poly.sign_at(hi) <= 0:
            return hi
    raise SolverConsistencyError("P(t, q) has no sign change on (0, t0]")


def _root(q, tol: float):
    exact = _is_exact(q)
    qr = to_rational(q)
    poly = gion_polynomial(qr)
    lo, hi, method = _locate(poly, exact)
    info = refine_root(poly, float(lo), float(hi), tol, full_output=True)
    t0 = constants().t0
    t = info.root
    if t > t0 + BOUNDARY_SLACK:
        if t > t0 + 1e-8:
            raise SolverConsistencyError(f"root t={t!r} beyond t0={t0!r}")
        t = t0
    elif t > t0:
        t = t0
    if not t > 0:
        raise SolverConsistencyError(f"nonpositive root t={t!r}")
    return t, info, method


def solve_t(q, tol: float = 1e-12) -> float:
    """The root ``t`` in ``(0, t0]`` of ``P(t, q)``."""
    feas = classify(1.0, q)
    if not feas:
        raise InfeasibleInputError(feas)
    return _root(q, tol)[0]


def solve(p, q, tol: float = 1e-12) -> GionSolution:
    """Lengths ``(a, m, s, d)`` with the given sum ``p`` and ratio sum ``q``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    feas = classify(p, q)
    if not feas:
        raise InfeasibleInputError(feas)
    t, info, method = _root(q, tol)

    nat = quantities_from_t_scaled(t)
    p = float(p)
    lam = p / nat.p
    a, m, s, d = (v * lam for v in nat.as_tuple())
    qf = float(to_rational(q))
    sol = GionSolution(
        a=a,
        m=m,
        s=s,
        d=d,
        t=t,
        p_residual=(a + m + s + d) - p,
        q_residual=(m / a + d / m + s / d) - qf,
        root_bracket=info.bracket,
        iterations=info.iterations,
        method=method,
    )
    _check_postconditions(sol, p, qf)
    return sol


def _check_postconditions(sol: GionSolution, p: float, q: float) -> None:
    problems = []
    if not abs(sol.p_residual) <= 1e-9 * p:
        problems.append(f"p residual {sol.p_residual!r}")
    if not abs(sol.q_residual) <= 1e-9 * q:
        problems.append(f"q residual {sol.q_residual!r}")
    if not abs(sol.d / sol.a - sol.t) <= 1e-10:
        problems.append(f"d/a - t = {sol.d / sol.a - sol.t!r}")
    if not 0 < sol.t <= constants().t0:
        problems.append(f"t={sol.t!r} outside (0, t0]")
    if not all(math.isfinite(v) and v > 0 for v in sol.as_tuple()):
        problems.append("non-positive length")
    if problems:
        raise SolverConsistencyError("; ".join(problems))


def roundtrip_error(t: float, tol: float = 1e-12) -> float:
    """``|t - solve(pq_of_t(t)).t|``."""
    p, q = pq_of_t(t)
    return abs(solve(p, q, tol).t - float(t))


@dataclass(frozen=True)
class MonotonicityCertificate:
    """Exact proof that ``q(t)`` increases on ``(0, cap]``.

    Write ``q = (A + sqrt(D)) / B``.  The numerator of ``q'`` is
    ``U sqrt(D) + W`` with ``U = A'B - AB'`` and ``W = B D'/2 - D B'``.
    When ``U > 0`` and ``W < 0`` on the interval, ``q' > 0`` there iff
    ``u = (U^2 D - W^2) / t^k > 0``.  Each sign is fixed by a zero Sturm
    count on the interval plus one evaluation at its right end.
    """

    u: RatPoly
    cap: Fraction
    root_counts: dict
    signs: dict

    @property
    def holds(self) -> bool:
        return (
            all(n == 0 for n in self.root_counts.values())
            and self.signs == {"U": 1, "W": -1, "u": 1}
        )

    def __bool__(self) -> bool:
        return self.holds


def _strip_t(poly: RatPoly) -> RatPoly:
    k = next(i for i, c in enumerate(poly.coeffs) if c != 0)
    return RatPoly(poly.coeffs[k:])


def monotonicity_certificate(cap=STURM_CAP) -> MonotonicityCertificate:
    cap = to_rational(cap)
    A = RatPoly([-1, 0, 22, 16, -33, 0, 16])
    B = RatPoly([0, 0, 16, 0, -16])
    D = RatPoly([1, 0, 20, 0, -26, 0, 20, 0, 1])
    U = A.derivative() * B - A * B.derivative()
    W = B * D.derivative() * Fraction(1, 2) - D * B.derivative()
    polys = {"U": _strip_t(U), "W": _strip_t(W), "u": _strip_t(U * U * D - W * W)}
    counts = {k: sturm_count(f, 0, cap) for k, f in polys.items()}
    signs = {k: f.sign_at(cap) for k, f in polys.items()}
    return MonotonicityCertificate(polys["u"], cap, counts, signs)
