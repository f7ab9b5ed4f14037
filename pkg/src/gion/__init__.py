"""Solver for the Gion shrine problem.

Given ``p = a + m + s + d`` and ``q = m/a + d/m + s/d`` for the chord ``a``,
sagitta ``m``, inscribed square side ``s`` and inscribed circle diameter ``d``
of a circular segment, recover the four lengths.
"""

from .geometry import (
    Constants,
    InfeasibleParameterError,
    Scale,
    SegmentQuantities,
    constants,
    gion_polynomial,
    phi_of_q,
    pq_of_t,
    quantities_from_phi,
    quantities_from_r,
    quantities_from_t_scaled,
    quantities_from_t_unit,
    quantities_from_x,
)
from .oracle import certify_polynomial_identity, construct_from_phi, verify_solution
from .ratpoly import RatPoly, irreducibility_certificate, sturm_count
from .solver import (
    Feasibility,
    FeasibilityVerdict,
    GionSolution,
    InfeasibleInputError,
    classify,
    roundtrip_error,
    solve,
)

__version__ = "0.1.0"
