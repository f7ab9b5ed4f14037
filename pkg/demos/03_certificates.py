"""
Exact certificates
==================

Everything here runs in rational arithmetic: the polynomial identity behind
``P(t, q)``, Sturm root counts, monotonicity of ``q(t)`` and a mod-p
irreducibility witness.
"""

from fractions import Fraction

from gion import certify_polynomial_identity, gion_polynomial, irreducibility_certificate, sturm_count
from gion.ratpoly import factor_degrees_mod_p
from gion.solver import STURM_CAP, monotonicity_certificate

rep = certify_polynomial_identity()
print("squared radical equation == 32 t^2 P(t, q):", rep.holds, "checked at q =", [str(q) for q in rep.q_values])

###############################################################################
# One root in (0, 14/25] for feasible q, none for q = 3.

for q in (Fraction(201, 100), Fraction(9, 4), Fraction(239, 100), Fraction(3)):
    print(f"q = {q}: roots of P in (0, {STURM_CAP}] = {sturm_count(gion_polynomial(q), 0, STURM_CAP)}")

###############################################################################
# q'(t) > 0 reduces to the positivity of a polynomial u(t).

cert = monotonicity_certificate()
print(f"u has degree {cert.u.degree}; root counts {cert.root_counts}; signs {cert.signs}; holds={cert.holds}")

###############################################################################
# P(t, 9/4) is irreducible: its reduction modulo the witness prime is a
# single irreducible factor of degree 10.

P = gion_polynomial(Fraction(9, 4))
print("4 P(t, 9/4) =", P * 4)
c = irreducibility_certificate(P)
print(c.verdict.value, "witness prime", c.prime)
for p in c.primes_tried:
    print(f"  mod {p:2d}: factor degrees {factor_degrees_mod_p(P, p)}")
