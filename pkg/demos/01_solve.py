"""
Solving the Gion shrine problem
===============================

Given the sum ``p`` of the four lengths and the ratio sum ``q``, recover the
chord ``a``, sagitta ``m``, square side ``s`` and circle diameter ``d``.
"""

import math

from gion import classify, constants, solve

# The quarter-circle segment (phi = 90 degrees, unit radius) has
# a = 2, m = 1, s = sqrt(2)/2 and d = 2 sqrt(2) - 2.
a, m, s, d = 2.0, 1.0, math.sqrt(2) / 2, 2 * math.sqrt(2) - 2
p = a + m + s + d
q = m / a + d / m + s / d
print(f"p = {p:.10f}, q = {q:.10f}")

sol = solve(p, q)
print("recovered:", [f"{v:.12f}" for v in sol.as_tuple()])
print(f"t = d/a = {sol.t:.12f}  (sqrt(2) - 1 = {math.sqrt(2) - 1:.12f})")

###############################################################################
# ``q`` does not depend on the overall size, so halving ``p`` halves every
# length and leaves ``t`` alone.

half = solve(p / 2, q)
print("half-size:", [f"{v:.12f}" for v in half.as_tuple()])

###############################################################################
# Only ``2 < q <= q0`` admits a figure.

k = constants()
for q_try in (2.0, 2.2, k.q0, 2.5):
    print(f"q = {q_try:<20} -> {classify(1.0, q_try).verdict.value}")

###############################################################################
# Rational ``q`` given as a string is counted exactly before refinement.

print(solve(1, "9/4"))
