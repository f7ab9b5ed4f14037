"""
Cross-checking against the raw construction
===========================================

The oracle solves the contact conditions of the square and circle by
bisection and never uses the closed forms.
"""

import numpy as np

from gion import construct_from_phi, constants, quantities_from_phi, solve, verify_solution

k = constants()
worst = 0.0
for phi in np.linspace(0.05, k.phi0, 100):
    built = np.array(construct_from_phi(phi).as_tuple())
    closed = np.array(quantities_from_phi(phi).as_tuple())
    worst = max(worst, np.max(np.abs(built - closed) / closed))
print(f"bisection vs closed form, 100 angles: max relative deviation {worst:.2e}")

###############################################################################
# A solved instance, compared with the construction at its own angle and
# radius.

sol = solve(10.0, 2.3)
rep = verify_solution(sol, 10.0, 2.3)
print(f"phi = {np.degrees(rep.phi):.4f} deg, radius = {rep.radius:.6f}, max deviation {rep.max_deviation:.2e}")
