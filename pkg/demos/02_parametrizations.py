"""
Four parametrizations of one figure
===================================

The figure can be driven by the half-angle ``phi``, the small radius ``r``,
``x = sqrt(1 - 2r)`` or ``t = d/a``.  All four give the same lengths.
"""

from fractions import Fraction

import numpy as np

from gion import geometry as g

k = g.constants()
print(f"q0 = {k.q0:.10f}  t0 = {k.t0:.10f}  r0 = {k.r0:.10f}  x0 = {k.x0:.10f}")
print(f"phi0 = {np.degrees(k.phi0):.6f} degrees")

###############################################################################
# Walk ``t -> x -> r -> phi`` with exact rational steps where the maps are
# rational, then compare the four closed forms.

for t in (0.01, 0.2, 0.4142135623730951, k.t0):
    tr = Fraction(t)
    x = g.x_from_t(tr)
    r = g.r_from_x(x)
    phi = g.phi_from_r(r)
    rows = [
        g.quantities_from_t_unit(tr),
        g.quantities_from_x(x),
        g.quantities_from_r(r),
        g.quantities_from_phi(phi),
    ]
    spread = np.ptp([row.as_tuple() for row in rows], axis=0).max()
    print(f"t={t:.6f} phi={np.degrees(phi):8.4f} deg  a,m,s,d={rows[0].as_tuple()}  spread={spread:.1e}")

###############################################################################
# q(t) rises from 2 to q0 over (0, t0]; write the curve and phi(q) as SVG.

from gion.svgplot import plot_svg

for kind in ("q_of_t", "phi_of_q"):
    with open(f"{kind}.svg", "w") as fh:
        fh.write(plot_svg(kind))
    print("wrote", f"{kind}.svg")
