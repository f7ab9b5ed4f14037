"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values stored in ascending
degree order.  Besides ring arithmetic the module provides Sturm-chain root
counting, a bracketed Newton/bisection root refiner and a distinct-degree
factorization over prime fields used to certify irreducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "EndpointRootError",
    "BracketError",
    "ConvergenceError",
    "BadPrimeError",
    "RatPoly",
    "SturmChain",
    "Verdict",
    "IrreducibilityCertificate",
    "RootRefinement",
    "to_rational",
    "gcd",
    "squarefree_part",
    "sturm_chain",
    "sturm_count",
    "refine_root",
    "factor_degrees_mod_p",
    "irreducibility_certificate",
    "CERTIFICATE_PRIMES",
]


class EndpointRootError(ValueError):
    """An interval endpoint handed to :func:`sturm_count` is a root."""

    def __init__(self, endpoint: Fraction):
        super().__init__(f"endpoint {endpoint} is a root of the polynomial")
        self.endpoint = endpoint


class BracketError(ValueError):
    """The polynomial does not change sign on the given interval."""


class ConvergenceError(RuntimeError):
    """Root refinement stopped before reaching the requested tolerance."""

    def __init__(self, message: str, bracket: tuple[float, float]):
        super().__init__(f"{message}; final bracket [{bracket[0]!r}, {bracket[1]!r}]")
        self.bracket = bracket


class BadPrimeError(ValueError):
    """The prime divides the leading coefficient or a denominator."""


def to_rational(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Floats are expanded exactly in binary (no decimal rounding).  Strings
    accept both ``"9/4"`` and decimal notation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot rationalize non-finite value {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    # numpy scalars and the like
    return Fraction(float(value))


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [to_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RatPoly:
    """Dense polynomial with rational coefficients, lowest degree first.

    The coefficient tuple is always trimmed, so the zero polynomial is the
    empty tuple and ``degree`` of it is ``-1``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> RatPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> RatPoly:
        out = cls([1])
        for r in roots:
            out = out * cls([-to_rational(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                mag = abs(c)
                body = f"({mag})" if mag.denominator != 1 and mono else str(mag)
                if mono:
                    body += "*" + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    # arithmetic -------------------------------------------------------

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other) -> RatPoly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> RatPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> RatPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> RatPoly:
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RatPoly:
        if n < 0:
            raise ValueError("negative power")
        out, base = RatPoly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple[RatPoly, RatPoly]:
        other = _as_poly(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= f * b
        return RatPoly(quot), RatPoly(rem[:dq])

    def __floordiv__(self, other) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> RatPoly:
        return divmod(self, other)[1]

    # calculus and evaluation -----------------------------------------

    def derivative(self) -> RatPoly:
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> RatPoly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lead = self.leading
        return RatPoly(c / lead for c in self.coeffs)

    def eval(self, point) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = to_rational(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def evalf(self, x: float) -> float:
        """Floating-point Horner evaluation."""
        acc = 0.0
        for c in reversed(self._float_coeffs):
            acc = acc * x + c
        return acc

    @property
    def _float_coeffs(self) -> tuple[float, ...]:
        cached = self.__dict__.get("_fc")
        if cached is None:
            cached = tuple(float(c) for c in self.coeffs)
            object.__setattr__(self, "_fc", cached)
        return cached

    def sign_at(self, point) -> int:
        v = self.eval(point)
        return (v > 0) - (v < 0)

    def integer_primitive(self) -> tuple[int, ...]:
        """Coefficients scaled to coprime integers with positive leading term."""
        if not self.coeffs:
            return ()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return tuple(i // g for i in ints)


def _as_poly(x) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


def gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd by the Euclidean remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def squarefree_part(f: RatPoly) -> RatPoly:
    """``f / gcd(f, f')``, made monic.  Constants map to ``1``."""
    if f.degree < 1:
        return RatPoly([1])
    g = gcd(f, f.derivative())
    return (f // g).monic()


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[RatPoly, ...]

    def variations(self, point) -> int:
        x = to_rational(point)
        signs = [s for s in (p.sign_at(x) for p in self.polys) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def __len__(self) -> int:
        return len(self.polys)


def sturm_chain(poly: RatPoly) -> SturmChain:
    """Canonical Sturm sequence ``p, p', -rem(p, p'), ...``.

    The input should be square-free; the chain then ends at a nonzero
    constant.
    """
    if poly.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [poly]
    if poly.degree >= 1:
        chain.append(poly.derivative())
        while chain[-1].degree > 0:
            r = -(chain[-2] % chain[-1])
            if r.is_zero():
                break
            chain.append(r)
    return SturmChain(tuple(chain))


def sturm_count(poly: RatPoly, lo, hi) -> int:
    """Number of distinct real roots of ``poly`` in the half-open ``(lo, hi]``.

    Endpoints must not be roots; an :class:`EndpointRootError` names the
    offending endpoint otherwise.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    if poly.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    for end in (lo, hi):
        if poly.eval(end) == 0:
            raise EndpointRootError(end)
    chain = sturm_chain(squarefree_part(poly))
    return chain.variations(lo) - chain.variations(hi)


@dataclass(frozen=True)
class RootRefinement:
    root: float
    bracket: tuple[float, float]
    iterations: int
    newton_steps: int


def refine_root(
    poly: RatPoly,
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
    full_output: bool = False,
):
    """Locate a sign-change root of ``poly`` in ``[lo, hi]`` to within ``tol``.

    Newton steps are taken in floating point and accepted only when they
    land strictly inside the current bracket and shrink ``|poly|``;
    otherwise the bracket is bisected.  Every sign decision is made with
    exact rational evaluation, so the returned ``t`` satisfies: ``poly``
    changes sign on ``[t - tol, t + tol]``.

    With ``full_output`` a :class:`RootRefinement` is returned instead of
    the bare float.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if lo > hi:
        lo, hi = hi, lo
    dpoly = poly.derivative()
    s_lo, s_hi = poly.sign_at(lo), poly.sign_at(hi)

    def done(x, it, nsteps, bracket):
        res = RootRefinement(float(x), (float(bracket[0]), float(bracket[1])), it, nsteps)
        return res if full_output else res.root

    if s_lo == 0:
        return done(lo, 0, 0, (lo, lo))
    if s_hi == 0:
        return done(hi, 0, 0, (hi, hi))
    if s_lo == s_hi:
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]")

    x = lo + 0.5 * (hi - lo)
    fx = poly.evalf(x)
    nsteps = 0
    for it in range(1, max_iter + 1):
        s = poly.sign_at(x)
        if s == 0:
            return done(x, it, nsteps, (x, x))
        if s == s_lo:
            lo = x
        else:
            hi = x
        if hi - lo <= 2 * tol:
            return done(lo + 0.5 * (hi - lo), it, nsteps, (lo, hi))
        # test a tol-neighbourhood of the current iterate
        a, b = x - tol, x + tol
        if lo < a and b < hi and poly.sign_at(a) != poly.sign_at(b):
            return done(x, it, nsteps, (a, b))

        dfx = dpoly.evalf(x)
        cand = None
        if dfx != 0 and math.isfinite(dfx):
            step = x - fx / dfx
            if lo < step < hi:
                fstep = poly.evalf(step)
                if abs(fstep) < abs(fx):
                    cand, fcand = step, fstep
        if cand is None:
            cand = lo + 0.5 * (hi - lo)
            fcand = poly.evalf(cand)
        else:
            nsteps += 1
        x, fx = cand, fcand
    raise ConvergenceError(f"tolerance {tol} not reached in {max_iter} iterations", (lo, hi))


# --- arithmetic over GF(p) -------------------------------------------------
# Polynomials mod p are plain lists of ints, lowest degree first, trimmed.


def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            c = c * inv % p
            for j, b in enumerate(g):
                f[k - dg + j] = (f[k - dg + j] - c * b) % p
    return _ptrim(f[:dg])


def _pdivexact(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k] * inv % p
        q[k - dg] = c
        if c:
            for j, b in enumerate(g):
                f[k - dg + j] = (f[k - dg + j] - c * b) % p
    return _ptrim(q)


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmonic(f: list[int], p: int) -> list[int]:
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    while g:
        f, g = g, _pmod(f, g, p)
    return _pmonic(f, p) if f else f


def _pderiv(f: list[int], p: int) -> list[int]:
    return _ptrim([i * c % p for i, c in enumerate(f)][1:])


def _ppowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return out


def _squarefree_decomposition(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Pairs ``(g, k)`` with ``f = lc * prod g**k`` and each ``g`` square-free."""
    out: list[tuple[list[int], int]] = []
    f = _pmonic(f, p)
    mult = 1
    while len(f) > 1:
        fd = _pderiv(f, p)
        if not fd:
            # f is a polynomial in x**p; coefficients are their own p-th roots
            f = f[::p]
            mult *= p
            continue
        c = _pgcd(f, fd, p)
        w = _pdivexact(f, c, p)
        i = 1
        while len(w) > 1:
            y = _pgcd(w, c, p)
            z = _pdivexact(w, y, p)
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = _pdivexact(c, y, p)
        if len(c) > 1:
            # remaining part is a p-th power
            f = c[::p]
            mult *= p
        else:
            break
    return out


def _distinct_degree(f: list[int], p: int) -> list[int]:
    """Degrees of the irreducible factors of a monic square-free ``f``."""
    degrees: list[int] = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _ptrim(diff), p)
        if len(g) > 1:
            degrees += [d] * ((len(g) - 1) // d)
            f = _pdivexact(f, g, p)
            h = _pmod(h, f, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return degrees


def _reduce_mod_p(poly: RatPoly, p: int) -> list[int]:
    if poly.is_zero():
        raise BadPrimeError("zero polynomial")
    if poly.leading.numerator % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient {poly.leading}")
    out = []
    for c in poly.coeffs:
        if c.denominator % p == 0:
            raise BadPrimeError(f"{p} divides the denominator of coefficient {c}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return _ptrim(out)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def factor_degrees_mod_p(poly: RatPoly, p: int) -> list[int]:
    """Sorted degrees (with multiplicity) of the irreducible factors mod ``p``."""
    if not _is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    f = _reduce_mod_p(poly, p)
    degrees: list[int] = []
    for g, k in _squarefree_decomposition(f, p):
        degrees += _distinct_degree(g, p) * k
    return sorted(degrees)


class Verdict(Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    verdict: Verdict
    prime: int | None = None
    root: Fraction | None = None
    factor: RatPoly | None = None
    primes_tried: tuple[int, ...] = field(default=(), compare=False)

    @property
    def witness(self):
        if self.prime is not None:
            return self.prime
        if self.root is not None:
            return self.root
        return self.factor


def _first_primes(n: int, start: int = 3) -> tuple[int, ...]:
    out, k = [], start
    while len(out) < n:
        if _is_prime(k):
            out.append(k)
        k += 1
    return tuple(out)


CERTIFICATE_PRIMES = _first_primes(200)

_DIVISOR_LIMIT = 10**12


def _divisors(n: int) -> list[int] | None:
    n = abs(n)
    if n > _DIVISOR_LIMIT:
        return None
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _rational_root(ints: Sequence[int]) -> Fraction | None:
    if ints[0] == 0:
        return Fraction(0)
    nums, dens = _divisors(ints[0]), _divisors(ints[-1])
    if nums is None or dens is None:
        return None
    poly = RatPoly(ints)
    for a in nums:
        for b in dens:
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if poly.eval(cand) == 0:
                    return cand
    return None


def irreducibility_certificate(poly: RatPoly, n_primes: int = 25) -> IrreducibilityCertificate:
    """Try to prove ``poly`` irreducible over the rationals.

    Order of attempts: repeated factor, rational root, then reduction modulo
    the first ``n_primes`` usable primes.  Irreducibility mod a prime that
    keeps the degree is a sufficient condition only, so ``UNKNOWN`` is a
    legitimate outcome.
    """
    if poly.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if poly.degree >= 2:
        g = gcd(poly, poly.derivative())
        if g.degree >= 1:
            return IrreducibilityCertificate(Verdict.REDUCIBLE, factor=g)
        ints = poly.integer_primitive()
        root = _rational_root(ints)
        if root is not None:
            return IrreducibilityCertificate(Verdict.REDUCIBLE, root=root)

    tried: list[int] = []
    for p in CERTIFICATE_PRIMES:
        if len(tried) >= n_primes:
            break
        try:
            degrees = factor_degrees_mod_p(poly, p)
        except BadPrimeError:
            continue
        tried.append(p)
        if degrees == [poly.degree]:
            return IrreducibilityCertificate(Verdict.IRREDUCIBLE, prime=p, primes_tried=tuple(tried))
    return IrreducibilityCertificate(Verdict.UNKNOWN, primes_tried=tuple(tried))
