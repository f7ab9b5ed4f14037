import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gion.geometry import constants, gion_polynomial
from gion.ratpoly import (
    BadPrimeError,
    BracketError,
    ConvergenceError,
    EndpointRootError,
    RatPoly,
    Verdict,
    factor_degrees_mod_p,
    gcd,
    irreducibility_certificate,
    refine_root,
    squarefree_part,
    sturm_chain,
    sturm_count,
    to_rational,
)

P94 = gion_polynomial(F(9, 4))


# --- Rational / RatPoly basics ---------------------------------------------


def test_to_rational_is_exact_binary_expansion():
    assert to_rational(0.1) == F(3602879701896397, 36028797018963968)
    assert to_rational("9/4") == F(9, 4)
    assert to_rational(3) == F(3)
    with pytest.raises(ValueError):
        to_rational(float("nan"))


def test_canonical_form():
    p = RatPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly([]).degree == -1
    assert RatPoly([F(2, 4)]).coeffs[0].denominator == 2


def test_arithmetic_and_division():
    f = RatPoly([-1, 0, 1])
    g = RatPoly([-1, 1])
    q, r = divmod(f, g)
    assert q == RatPoly([1, 1]) and r.is_zero()
    a = RatPoly([F(1, 3), 2, -5, 7])
    b = RatPoly([4, F(-1, 2), 3])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    assert (a - a).is_zero()
    assert a**2 == a * a


def test_str():
    assert str(RatPoly([-2, 0, 1])) == "t^2 - 2"
    assert str(RatPoly([F(1, 4), -1])) == "-t + 1/4"


@pytest.mark.parametrize(
    "poly, point, expected",
    [
        (RatPoly([-2, 0, 1]), F(3, 2), F(1, 4)),
        (gion_polynomial(2), 0, 0),
        (P94, 0, F(1, 4)),
    ],
)
def test_eval(poly, point, expected):
    assert poly.eval(point) == expected
    assert poly.evalf(float(point)) == pytest.approx(float(expected))


# --- gcd --------------------------------------------------------------------


def test_gcd_examples():
    assert gcd(RatPoly([-1, 0, 1]), RatPoly([-1, 1])) == RatPoly([-1, 1])
    assert gcd(RatPoly([1, 0, 1]), RatPoly([-1, 1])) == RatPoly([1])
    sq = RatPoly.from_roots([F(1, 2), F(1, 2)])
    assert gcd(sq, sq.derivative()) == RatPoly([F(-1, 2), 1])


def test_gcd_both_zero_raises():
    with pytest.raises(ValueError):
        gcd(RatPoly(), RatPoly())


small_roots = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=4)


@given(small_roots, small_roots)
@settings(max_examples=60, deadline=None)
def test_gcd_nonconstant_iff_repeated_root(roots, extra):
    distinct = sorted(set(roots))
    f = RatPoly.from_roots(distinct)
    assert gcd(f, f.derivative()).degree == 0
    g = f * RatPoly.from_roots(extra)
    repeated = len(set(distinct) & set(extra)) > 0 or len(set(extra)) < len(extra)
    assert (gcd(g, g.derivative()).degree >= 1) == repeated
    assert squarefree_part(g) == RatPoly.from_roots(sorted(set(distinct) | set(extra)))


# --- Sturm ------------------------------------------------------------------


def test_sturm_chain_shape():
    f = RatPoly([-2, 0, 1])
    chain = sturm_chain(f)
    assert chain.polys[0] == f and chain.polys[1] == f.derivative()
    assert chain.polys[-1].degree == 0 and not chain.polys[-1].is_zero()


@pytest.mark.parametrize(
    "poly, lo, hi, expected",
    [
        (RatPoly([-2, 0, 1]), 0, 2, 1),
        (RatPoly([1, 0, 1]), -10, 10, 0),
        (RatPoly([-2, 0, 1]), -2, 2, 2),
    ],
)
def test_sturm_count_examples(poly, lo, hi, expected):
    assert sturm_count(poly, lo, hi) == expected


def _dense_sign_changes(poly, lo, hi, n):
    # independent oracle: exact evaluation on a rational grid
    vals = [poly.sign_at(F(lo) + (F(hi) - F(lo)) * i / n) for i in range(n + 1)]
    vals = [v for v in vals if v]
    return sum(1 for a, b in zip(vals, vals[1:]) if a != b)


def test_sturm_count_gion_nine_fourths_matches_dense_scan():
    assert _dense_sign_changes(P94, 0, F(14, 25), 2000) == 1
    assert sturm_count(P94, 0, F(14, 25)) == 1


def test_sturm_counts_distinct_roots_only():
    f = RatPoly.from_roots([1, 1, 1, 3])
    assert sturm_count(f, 0, 4) == 2


def test_sturm_half_open_and_endpoint_error():
    f = RatPoly.from_roots([1, 2])
    with pytest.raises(EndpointRootError) as exc:
        sturm_count(f, 0, 2)
    assert exc.value.endpoint == 2
    with pytest.raises(ValueError):
        sturm_count(f, 3, 3)


@given(
    st.lists(st.integers(-6, 6), min_size=2, max_size=7),
    st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=7), min_size=3, max_size=3, unique=True),
)
@settings(max_examples=80, deadline=None)
def test_sturm_additivity(coeffs, pts):
    f = RatPoly(coeffs)
    if f.degree < 1:
        return
    a, b, c = sorted(pts)
    if any(f.eval(x) == 0 for x in (a, b, c)):
        return
    assert sturm_count(f, a, c) == sturm_count(f, a, b) + sturm_count(f, b, c)


def test_sturm_matches_scan_on_random_polynomials():
    rng = random.Random(20260419)
    checked = 0
    while checked < 100:
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-5, 5) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        f = RatPoly(coeffs)
        if gcd(f, f.derivative()).degree > 0:
            continue
        cauchy = 1 + max(abs(c / f.leading) for c in f.coeffs[:-1])
        B = math.ceil(cauchy) + 1
        if f.eval(-B) == 0 or f.eval(B) == 0:
            continue
        n = int(2 * B / 1e-4)
        signs = [s for s in (math.copysign(1, y) if y else 0 for y in (f.evalf(-B + i * 1e-4) for i in range(n + 1))) if s]
        scan = sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)
        assert sturm_count(f, -B, B) == scan, coeffs
        checked += 1


# --- refine_root ------------------------------------------------------------


def _plain_bisection(poly, lo, hi, tol):
    slo = poly.sign_at(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        s = poly.sign_at(mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_refine_sqrt2():
    r = refine_root(RatPoly([-2, 0, 1]), 1.0, 2.0, 1e-12)
    assert abs(r - math.sqrt(2)) <= 1e-12


def test_refine_linear_exact():
    assert abs(refine_root(RatPoly([F(-1, 4), 1]), 0.0, 1.0, 1e-12) - 0.25) <= 1e-12


def test_refine_gion_matches_bisection(k):
    r = refine_root(P94, 0.0, k.t0, 1e-12)
    ref = _plain_bisection(P94, 0.0, k.t0, 1e-13)
    assert 0 < r <= k.t0
    assert abs(r - ref) <= 1e-12


def test_refine_errors():
    with pytest.raises(BracketError):
        refine_root(RatPoly([1, 0, 1]), -1.0, 1.0, 1e-12)
    with pytest.raises(ConvergenceError) as exc:
        refine_root(RatPoly([-2, 0, 1]), 1.0, 2.0, 1e-15, max_iter=3)
    lo, hi = exc.value.bracket
    assert 1 <= lo < hi <= 2
    with pytest.raises(ValueError):
        refine_root(RatPoly([-2, 0, 1]), 1.0, 2.0, 0.0)


def test_refine_full_output():
    info = refine_root(RatPoly([-2, 0, 1]), 1.0, 2.0, 1e-12, full_output=True)
    assert info.bracket[0] <= info.root <= info.bracket[1]
    assert info.iterations >= 1


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=9), min_size=1, max_size=5, unique=True))
@settings(max_examples=60, deadline=None)
def test_refine_postcondition_exact_sign_change(roots):
    f = RatPoly.from_roots(roots) * RatPoly([1, 0, 1])
    target = sorted(roots)[0]
    lo = float(target) - 1e-3
    hi = float(target) + min([1e-3] + [float(r - target) / 2 for r in roots if r > target])
    tol = 1e-11
    t = refine_root(f, lo, hi, tol)
    left, right = F(t) - F(tol), F(t) + F(tol)
    assert f.sign_at(left) * f.sign_at(right) <= 0


# --- mod-p factorization ----------------------------------------------------


def _brute_factor_degrees(coeffs, p):
    """Trial division by every monic polynomial, smallest degree first."""
    from itertools import product

    def trim(f):
        f = list(f)
        while f and f[-1] % p == 0:
            f.pop()
        return [c % p for c in f]

    def divmod_p(f, g):
        f = list(f)
        inv = pow(g[-1], -1, p)
        q = [0] * max(len(f) - len(g) + 1, 0)
        for k in range(len(f) - 1, len(g) - 2, -1):
            c = f[k] * inv % p
            q[k - len(g) + 1] = c
            for j, b in enumerate(g):
                f[k - len(g) + 1 + j] = (f[k - len(g) + 1 + j] - c * b) % p
        return trim(q), trim(f[: len(g) - 1])

    f = trim(coeffs)
    degrees = []
    d = 1
    while len(f) - 1 >= 1:
        if 2 * d > len(f) - 1:
            degrees.append(len(f) - 1)
            break
        found = False
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            q, r = divmod_p(f, g)
            if not r:
                degrees.append(d)
                f = q
                found = True
                break
        if not found:
            d += 1
    return sorted(degrees)


@pytest.mark.parametrize(
    "poly, p, expected",
    [(RatPoly([1, 0, 1]), 3, [2]), (RatPoly([-1, 0, 1]), 3, [1, 1])],
)
def test_factor_degrees_examples(poly, p, expected):
    assert factor_degrees_mod_p(poly, p) == expected


@given(
    st.sampled_from([2, 3, 5, 7]),
    st.lists(st.integers(0, 6), min_size=2, max_size=7),
)
@settings(max_examples=150, deadline=None)
def test_factor_degrees_match_brute_force(p, coeffs):
    coeffs = coeffs[:-1] + [1]  # monic so p never divides the lead
    f = RatPoly(coeffs)
    got = factor_degrees_mod_p(f, p)
    assert got == _brute_factor_degrees(coeffs, p)
    assert sum(got) == f.degree


def test_factor_degrees_repeated_and_pth_power():
    f = RatPoly.from_roots([1, 1, 2]) * RatPoly([1, 0, 1]) ** 3
    assert factor_degrees_mod_p(f, 3) == [1, 1, 1, 2, 2, 2]
    # x^3 + 1 = (x + 1)^3 over GF(3)
    assert factor_degrees_mod_p(RatPoly([1, 0, 0, 1]), 3) == [1, 1, 1]


def test_factor_degrees_bad_prime():
    with pytest.raises(BadPrimeError):
        factor_degrees_mod_p(RatPoly([1, 0, 3]), 3)
    with pytest.raises(BadPrimeError):
        factor_degrees_mod_p(RatPoly([F(1, 5), 1]), 5)
    with pytest.raises(BadPrimeError):
        factor_degrees_mod_p(RatPoly([1, 1]), 9)


def test_gion_nine_fourths_has_full_degree_prime():
    scaled = P94 * 4
    hits = [p for p in (3, 5, 7, 11, 13, 17, 19, 23) if factor_degrees_mod_p(scaled, p) == [10]]
    assert hits


# --- irreducibility ---------------------------------------------------------


def test_certificate_examples():
    c = irreducibility_certificate(RatPoly([-1, 0, 1]))
    assert c.verdict is Verdict.REDUCIBLE and c.root in (1, -1)
    c = irreducibility_certificate(RatPoly([1, 0, 1]))
    assert c.verdict is Verdict.IRREDUCIBLE and c.prime == 3
    c = irreducibility_certificate(P94)
    assert c.verdict is Verdict.IRREDUCIBLE and factor_degrees_mod_p(P94, c.prime) == [10]


def test_certificate_repeated_factor_and_unknown():
    c = irreducibility_certificate(RatPoly([1, 0, 1]) ** 2)
    assert c.verdict is Verdict.REDUCIBLE and c.factor == RatPoly([1, 0, 1])
    # (x^2+1)(x^2+2) has no rational roots and splits modulo every prime
    # into pieces of degree <= 2, so mod-p testing can never certify it
    c = irreducibility_certificate(RatPoly([1, 0, 1]) * RatPoly([2, 0, 1]))
    assert c.verdict is Verdict.UNKNOWN
    assert len(c.primes_tried) == 25
    # x^4 + 1 is irreducible but reducible modulo every prime
    assert irreducibility_certificate(RatPoly([1, 0, 0, 0, 1])).verdict is Verdict.UNKNOWN


def test_certificate_rational_root_witness():
    f = RatPoly.from_roots([F(2, 3)]) * RatPoly([1, 1, 1])
    c = irreducibility_certificate(f)
    assert c.verdict is Verdict.REDUCIBLE and c.root == F(2, 3)


def test_certificate_q2_has_zero_root():
    c = irreducibility_certificate(gion_polynomial(2))
    assert c.verdict is Verdict.REDUCIBLE and c.root == 0
