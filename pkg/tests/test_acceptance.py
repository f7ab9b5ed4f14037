"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary (and directly when this file is run as a script)."""

import math
from fractions import Fraction as F

import numpy as np
import pytest

from gion import geometry as g
from gion.oracle import certify_polynomial_identity, construct_from_phi
from gion.ratpoly import Verdict, irreducibility_certificate, refine_root, sturm_count
from gion.solver import STURM_CAP, monotonicity_certificate, FeasibilityVerdict, InfeasibleInputError, classify, solve

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

K = g.constants()


def record(label, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def rel(u, v):
    return abs(u - v) / max(abs(v), 1e-300)


def test_ac01_constants():
    errs = (abs(K.q0 - 2.3949722), abs(K.t0 - 0.557537), abs(K.x0 - 0.0514622))
    ok = errs[0] <= 1e-7 and errs[1] <= 1e-6 and errs[2] <= 1e-7
    record("AC1 constants q0/t0/x0", ok, f"q0={K.q0:.10f} t0={K.t0:.8f} x0={K.x0:.9f}")


def test_ac01_phi0_degrees():
    deg = math.degrees(K.phi0)
    record("AC1 constants phi0", abs(deg - 117) <= 0.01, f"phi0={deg:.6f} deg, |phi0-117|={abs(deg - 117):.4f} (tol 0.01)")


def test_ac02_identity_certificate():
    rep = certify_polynomial_identity()
    record("AC2 exact identity", rep.holds, f"q in {[str(q) for q in rep.q_values]}, mismatch={rep.mismatch}")


def test_ac03_uniqueness():
    details, ok = [], True
    for q in (F(201, 100), F(11, 5), F(9, 4), F(239, 100)):
        poly = g.gion_polynomial(q)
        n = sturm_count(poly, 0, STURM_CAP)
        t = refine_root(poly, 0.0, K.t0, 1e-12)
        ok &= n == 1 and 0 < t <= K.t0 + 1e-12
        details.append(f"q={q}: count={n} t={t:.12f}")
    record("AC3 uniqueness", ok, "; ".join(details))


def test_ac04_roundtrip():
    ts = np.linspace(1e-3, K.t0, 500)
    worst = max(abs(solve(*g.pq_of_t(t)).t - t) for t in ts)
    record("AC4 round-trip", worst <= 1e-9, f"max |dt| = {worst:.3e} over 500 t (tol 1e-9)")


def test_ac05_chain_consistency():
    worst = 0.0
    for t in np.geomspace(1e-4, K.t0, 200):
        tr = F(float(t))
        x = g.x_from_t(tr)
        r = g.r_from_x(x)
        phi = g.phi_from_r(r)
        ref = g.quantities_from_t_unit(tr).as_tuple()
        for other in (g.quantities_from_phi(phi), g.quantities_from_r(r), g.quantities_from_x(x)):
            worst = max(worst, *(rel(u, v) for u, v in zip(other.as_tuple(), ref)))
    record("AC5 chain consistency", worst <= 1e-10, f"max rel dev = {worst:.3e} on 200 t (tol 1e-10)")


def test_ac06_oracle_equivalence():
    worst = 0.0
    for phi in np.linspace(0.05, K.phi0, 100):
        c = construct_from_phi(phi).as_tuple()
        ref = g.quantities_from_phi(phi).as_tuple()
        worst = max(worst, *(rel(u, v) for u, v in zip(c, ref)))
    right = construct_from_phi(math.pi / 2).as_tuple()
    exact = (2.0, 1.0, math.sqrt(2) / 2, 2 * math.sqrt(2) - 2)
    right_err = max(abs(u - v) for u, v in zip(right, exact))
    record(
        "AC6 oracle equivalence",
        worst <= 1e-10 and right_err <= 1e-11,
        f"max rel dev = {worst:.3e} on 100 phi; phi=pi/2 abs err = {right_err:.3e}",
    )


def test_ac07_monotonicity():
    ts = np.linspace(K.t0 / 10_000, K.t0, 10_000)
    qs = np.array([g.pq_of_t(t)[1] for t in ts])
    diffs = np.diff(qs)
    exact = monotonicity_certificate().holds
    record(
        "AC7 monotonicity",
        bool(np.all(diffs > 0)),
        f"min increment = {diffs.min():.3e} on 10^4 points; exact Sturm certificate on (0, 14/25]: {exact}",
    )


def test_ac08_feasibility_gate():
    v2, v25 = classify(1, 2.0).verdict, classify(1, 2.5).verdict
    rejected = []
    for q in (2.0, 2.5):
        try:
            solve(1, q)
        except InfeasibleInputError as exc:
            rejected.append(exc.feasibility.verdict)
    t = solve(1, K.q0).t
    ok = (
        v2 is FeasibilityVerdict.Q_TOO_SMALL
        and v25 is FeasibilityVerdict.Q_TOO_LARGE
        and rejected == [v2, v25]
        and abs(t - K.t0) <= 1e-8
    )
    record("AC8 feasibility gate", ok, f"q=2 -> {v2.value}, q=2.5 -> {v25.value}, q0 -> |t-t0|={abs(t - K.t0):.3e}")


def test_ac09_irreducibility():
    poly = g.gion_polynomial(F(9, 4))
    ints = poly.integer_primitive()
    cert = irreducibility_certificate(poly * 4)
    ok = cert.verdict is Verdict.IRREDUCIBLE and cert.prime is not None
    record("AC9 irreducibility", ok, f"4*P(t,9/4) = {list(ints)}: {cert.verdict.value}, witness prime {cert.prime}")


def test_ac10_t_equals_d_over_a():
    exact = all(
        (lambda q: q.d / q.a == t)(g.quantities_from_t_scaled(t)) for t in (F(1, 4), F(1, 3), F(1, 2))
    )
    worst = max(
        abs(float(q.d / q.a) - t) for t in np.linspace(1e-4, K.t0, 1000) for q in [g.quantities_from_t_scaled(t)]
    )
    record("AC10 t = d/a", exact and worst <= 1e-12, f"exact at 1/4,1/3,1/2: {exact}; float max dev {worst:.3e}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
