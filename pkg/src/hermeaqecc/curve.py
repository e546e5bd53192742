"""
Combinatorial model of the Hermitian curve x^(q+1) = y^q + y over GF(q^2).

The curve has q^3 affine rational points and one point Q at infinity.
The pole-order valuation satisfies nu(x^a y^b) = a*q + b*(q+1); the
reduced monomials (a < q^2, b < q) have pairwise distinct orders and
evaluate to a basis of GF(q^2)^n, n = q^3.  All derived constants
(genus, m*, the nu-ordered monomial basis) live on CurveCtx.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .fields import FieldCtx, PrimePower, make_field


@dataclass(frozen=True)
class Monomial:
    """A reduced monomial x^a y^b with its order nu = a*q + b*(q+1)."""

    a: int
    b: int
    order: int


@dataclass(frozen=True)
class AffinePoint:
    """An affine rational point (x, y), elements encoded as field integers."""

    x: int
    y: int


class CurveCtx:
    """Derived constants and the reduced-monomial basis for one q."""

    def __init__(self, p: int, r: int):
        self.pp = PrimePower(p, r)
        self.p = p
        self.r = r
        q = p ** r
        self.q = q
        self.n = q ** 3
        self.g = q * (q - 1) // 2
        # floor(n/2 + g - 1); n/2 floors for odd q
        self.m_star = self.n // 2 + self.g - 1
        self.max_order = self.n + 2 * self.g - 1

        basis = [
            Monomial(a, b, a * q + b * (q + 1))
            for a in range(q * q)
            for b in range(q)
        ]
        basis.sort(key=lambda mono: mono.order)
        self.basis = tuple(basis)
        self._orders = [mono.order for mono in basis]
        self._by_order = {mono.order: mono for mono in basis}

        self._field: FieldCtx | None = None
        self._points: tuple[AffinePoint, ...] | None = None
        self._qth_orders: list[int] | None = None

    @property
    def field(self) -> FieldCtx:
        """The GF(q^2) context, built on first use."""
        if self._field is None:
            self._field = make_field(self.p, self.r)
        return self._field

    def __hash__(self):
        return hash((self.p, self.r))

    def __eq__(self, other):
        return isinstance(other, CurveCtx) and (self.p, self.r) == (other.p, other.r)


def make_curve(p: int, r: int) -> CurveCtx:
    return CurveCtx(p, r)


def nu(ctx: CurveCtx, a: int, b: int) -> int:
    """Pole order at infinity of x^a y^b."""
    return a * ctx.q + b * (ctx.q + 1)


def monomial_of_order(ctx: CurveCtx, v: int) -> Monomial:
    """The unique reduced monomial of order v.

    Raises ValueError("gap") when v is a gap of the semigroup <q, q+1>,
    and ValueError("out of range") when v is negative, exceeds
    n + 2g - 1, or is a semigroup element whose representative needs
    x-degree >= q^2 (only possible for v >= q^3).
    """
    if v < 0 or v > ctx.max_order:
        raise ValueError("out of range")
    mono = ctx._by_order.get(v)
    if mono is not None:
        return mono
    q = ctx.q
    b = v % q
    if v >= b * (q + 1):
        # in the semigroup, but the reduced box is exhausted at this order
        raise ValueError("out of range")
    raise ValueError("gap")


def ell(ctx: CurveCtx, m: int) -> int:
    """dim L(m), computed as the number of reduced monomials of order <= m.

    This equals the number of semigroup elements <= m for m < q^3 and,
    at the top of the range, the dimension of the code C(m) (so that
    ell(n + 2g - 1) = n).
    """
    if m < 0:
        return 0
    return bisect.bisect_right(ctx._orders, m)


def monomial_basis(ctx: CurveCtx, m: int):
    """The first ell(m) reduced monomials, ordered by nu."""
    if m < 0 or m > ctx.max_order:
        raise ValueError("out of range")
    return ctx.basis[: ell(ctx, m)]


def m_perp(ctx: CurveCtx, m: int) -> int:
    """The dual degree n + 2g - 2 - m (an involution)."""
    if m < 0 or m > ctx.n + 2 * ctx.g - 2:
        raise ValueError("out of range")
    return ctx.n + 2 * ctx.g - 2 - m


def affine_points(ctx: CurveCtx):
    """All q^3 affine points, ordered lexicographically by (x, y) encodings.

    The order is fixed so generator matrices are reproducible bit-for-bit.
    """
    if ctx._points is None:
        fld = ctx.field
        q = ctx.q
        pts = []
        for x in fld.elements():
            lhs = fld.pow_elem(x, q + 1)
            for y in fld.elements():
                if fld.add_elems(fld.pow_elem(y, q), y) == lhs:
                    pts.append(AffinePoint(x, y))
        assert len(pts) == ctx.n
        ctx._points = tuple(pts)
    return ctx._points
