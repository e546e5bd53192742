"""
Polynomial normal forms modulo the curve and field equations.

A polynomial is reduced when every monomial x^a y^b satisfies a < q^2,
b < q.  Normal forms are obtained by exhaustively applying

    (R1)  y^q   -> x^(q+1) - y
    (R2)  x^q^2 -> x

All coefficients live in GF(p) (the q-th power computations never leave
the prime field), so ReducedPoly stores integers mod p.

The closed-form machinery avoids building polynomials at all when only
the order of the reduced q-th power is needed: `qth_order` evaluates the
four-case formula (with digit-wise binomial corrections for non-prime q)
and `qth_power_reduced` produces the explicit reduced form of f^q from a
single binomial expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveCtx, Monomial


class ReducedPoly:
    """Sparse reduced polynomial: map (a, b) -> nonzero coefficient in GF(p).

    The zero polynomial is the empty map.  Since reduced monomials have
    pairwise distinct orders, a nonzero reduced polynomial has a unique
    leading term with respect to nu.
    """

    __slots__ = ("curve", "terms")

    def __init__(self, curve: CurveCtx, terms=None):
        self.curve = curve
        self.terms: dict[tuple[int, int], int] = {}
        if terms:
            p = curve.p
            q = curve.q
            for (a, b), c in terms.items():
                c %= p
                if c:
                    if a >= q * q or b >= q or a < 0 or b < 0:
                        raise ValueError(f"monomial x^{a} y^{b} is not reduced")
                    self.terms[(a, b)] = c

    def is_zero(self) -> bool:
        return not self.terms

    def order_of(self, key) -> int:
        a, b = key
        return a * self.curve.q + b * (self.curve.q + 1)

    def leading(self):
        """(exponent pair, coefficient) of the nu-leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms, key=self.order_of)
        return key, self.terms[key]

    @property
    def order(self) -> int:
        return self.order_of(self.leading()[0])

    def scaled(self, factor: int) -> "ReducedPoly":
        p = self.curve.p
        factor %= p
        out = ReducedPoly(self.curve)
        if factor:
            out.terms = {k: (c * factor) % p for k, c in self.terms.items()}
        return out

    def __add__(self, other: "ReducedPoly") -> "ReducedPoly":
        p = self.curve.p
        out = ReducedPoly(self.curve)
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            s = (out.terms.get(k, 0) + c) % p
            if s:
                out.terms[k] = s
            else:
                out.terms.pop(k, None)
        return out

    def __sub__(self, other: "ReducedPoly") -> "ReducedPoly":
        return self + other.scaled(self.curve.p - 1)

    def __eq__(self, other):
        return isinstance(other, ReducedPoly) and self.terms == other.terms

    def __repr__(self):
        return f"ReducedPoly({format_poly(self)!r})"


def format_poly(poly: ReducedPoly) -> str:
    """Render with monomials in descending nu and integer coefficients."""
    if poly.is_zero():
        return "0"
    parts = []
    for key in sorted(poly.terms, key=poly.order_of, reverse=True):
        a, b = key
        c = poly.terms[key]
        factors = []
        if c != 1 or (a == 0 and b == 0):
            factors.append(str(c))
        if a:
            factors.append("x" if a == 1 else f"x^{a}")
        if b:
            factors.append("y" if b == 1 else f"y^{b}")
        parts.append("".join(factors))
    return " + ".join(parts)


@dataclass(frozen=True)
class UstDecomposition:
    """nu = u*q^2 + s*q + t with 0 <= s, t < q."""

    u: int
    s: int
    t: int


def ust_decompose(ctx: CurveCtx, v: int) -> UstDecomposition:
    q = ctx.q
    t = v % q
    s = ((v - t) // q) % q
    u = (v - t - s * q) // (q * q)
    return UstDecomposition(u, s, t)


def m_hat(ctx: CurveCtx, delta: int) -> int:
    """Representative of delta modulo q^2 - 1 in [1, q^2 - 1]; m_hat(0) = 0."""
    if delta < 0:
        raise ValueError("negative argument")
    if delta == 0:
        return 0
    modulus = ctx.q * ctx.q - 1
    rem = delta % modulus
    return modulus if rem == 0 else rem


def binom_mod_p(t: int, j: int, p: int) -> int:
    """C(t, j) mod p via Lucas' theorem (digit-wise product)."""
    if j < 0 or t < 0 or j > t:
        raise ValueError("require 0 <= j <= t")
    result = 1
    while t or j:
        td, jd = t % p, j % p
        if jd > td:
            return 0
        num = den = 1
        for i in range(jd):
            num = num * (td - i) % p
            den = den * (i + 1) % p
        result = result * num * pow(den, -1, p) % p
        t //= p
        j //= p
    return result


def p_illumination(t: int, j: int, p: int, r: int) -> int:
    """How far j must drop to re-enter the p-shadow of t.

    Returns rho_t(j) such that j - rho_t(j) is the largest j' <= j with
    C(t, j') nonzero mod p; rho is 0 when every p-ary digit of j is at
    most the matching digit of t.
    """
    if not (0 <= j <= t < p ** r):
        raise ValueError("require 0 <= j <= t < p^r")
    rho = 0
    istar = -1
    tt, jj = t, j
    for i in range(r):
        td, jd = tt % p, jj % p
        if jd > td:
            istar = i
        tt //= p
        jj //= p
    if istar < 0:
        return 0
    tt, jj = t, j
    for i in range(istar + 1):
        rho += ((jj % p) - (tt % p)) * p ** i
        tt //= p
        jj //= p
    return rho


def reduce_poly(ctx: CurveCtx, terms) -> ReducedPoly:
    """Normal form of a polynomial with arbitrary nonnegative exponents.

    `terms` maps (a, b) exponent pairs to integer coefficients (taken mod
    p).  (R1) strictly decreases y-degree and (R2) strictly decreases
    x-degree, so iterating both to a fixed point terminates; like terms
    are merged every pass to keep intermediate sizes small.
    """
    p = ctx.p
    q = ctx.q
    q2 = q * q
    work = {}
    for (a, b), c in terms.items():
        if a < 0 or b < 0:
            raise ValueError("negative exponent")
        c %= p
        if c:
            work[(a, b)] = (work.get((a, b), 0) + c) % p
    while True:
        dirty = False
        nxt: dict[tuple[int, int], int] = {}

        def put(a, b, c):
            s = (nxt.get((a, b), 0) + c) % p
            if s:
                nxt[(a, b)] = s
            else:
                nxt.pop((a, b), None)

        for (a, b), c in work.items():
            if not c:
                continue
            if b >= q:
                put(a + q + 1, b - q, c)
                put(a, b - q + 1, p - c)
                dirty = True
            elif a >= q2:
                put(a - (q2 - 1), b, c)
                dirty = True
            else:
                put(a, b, c)
        work = nxt
        if not dirty:
            break
    return ReducedPoly(ctx, work)


def normalize(poly: ReducedPoly) -> ReducedPoly:
    """Scale so the nu-leading coefficient is 1; zero maps to zero."""
    if poly.is_zero():
        return poly
    _, lead = poly.leading()
    return poly.scaled(pow(lead, -1, poly.curve.p))


def qth_power_reduced(ctx: CurveCtx, f: Monomial) -> ReducedPoly:
    """Closed form of the (un-normalized) reduction of f^q.

    For f = x^a y^b the reduction of f^q is
        sum_{j=0}^{b} (-1)^j C(b, j)_p x^m_hat(nu(f) - j(q+1)) y^j
    which has at most b + 1 terms.
    """
    p = ctx.p
    q = ctx.q
    terms: dict[tuple[int, int], int] = {}
    for j in range(f.b + 1):
        c = binom_mod_p(f.b, j, p)
        if not c:
            continue
        if j % 2:
            c = p - c
        a = m_hat(ctx, f.order - j * (q + 1))
        terms[(a, j)] = c
    return ReducedPoly(ctx, terms)


def qth_order(ctx: CurveCtx, f: Monomial) -> int:
    """Order of the reduced q-th power of f, without building it.

    Valid for f of order at most m*; callers needing larger orders must
    use reduce_poly.  Four cases on the decomposition
    nu(f) = u q^2 + s q + t; the digit-wise corrections rho vanish when
    q is prime.
    """
    if f.order > ctx.m_star:
        raise ValueError("out of proven range")
    q = ctx.q
    p = ctx.p
    r = ctx.r
    d = ust_decompose(ctx, f.order)
    u, s, t = d.u, d.s, d.t
    q2 = q * q
    if s >= t:
        if u + t < q2 - s * q:
            return s * q2 + (u + t) * q
        rho = p_illumination(t, t - 1, p, r)
        return q ** 3 - 2 * q2 + (u + t) * q + 1 - (q2 - 1) * rho
    if u + t <= q + s + 1:
        rho = p_illumination(t, t - s - 1, p, r)
        return q ** 3 - q2 + (u + t - 1) * q + s + 1 - (q2 - 1) * rho
    rho = p_illumination(t, t - s - 2, p, r)
    return q ** 3 - 2 * q2 + (u + t - 1) * q + s + 2 - (q2 - 1) * rho
