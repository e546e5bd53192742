"""
Exact arithmetic in GF(p^(2r)) with the Frobenius involution x -> x^q.

Elements of GF(q^2), q = p^r, are encoded as integers in [0, q^2):
the integer sum(c_i * p^i) encodes the coefficient vector (c_0, ..., c_{2r-1})
with respect to the power basis of the modulus.  Fields here are tiny
(at most 256 elements), so full addition/multiplication lookup tables are
precomputed at construction and all bulk arithmetic (the linear-algebra
oracle) reduces to numpy fancy indexing.

The modulus is the monic irreducible polynomial of degree 2r over GF(p)
whose coefficient tuple (c_{2r-1}, ..., c_0), read as a base-p integer, is
minimal.  This is deterministic and table-free; element encodings may
differ from systems based on Conway polynomials, but every rank, dimension
and code parameter computed downstream is presentation-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^r."""

    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("not prime")
        if self.r <= 0:
            raise ValueError("invalid exponent")

    @property
    def q(self) -> int:
        return self.p ** self.r


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, mod, p):
    # mod is monic; reduce a in place
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    while len(a) > dm:
        a.pop()
    while len(a) < dm:
        a.append(0)
    return a


def _poly_divmod_exact(a, b, p):
    """Return True iff monic b divides a over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return all(c == 0 for c in a)


def _monic_polys(p, deg):
    """All monic polynomials of the given degree, as coefficient lists."""
    for k in range(p ** deg):
        coeffs = []
        kk = k
        for _ in range(deg):
            coeffs.append(kk % p)
            kk //= p
        yield coeffs + [1]


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree <= deg(poly)//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for div in _monic_polys(p, d):
            if _poly_divmod_exact(poly, div, p):
                return False
    return True


def _minimal_irreducible(p, deg):
    """Monic irreducible of given degree, minimal by the base-p integer
    value of its coefficient tuple (c_{deg-1}, ..., c_0)."""
    best = None
    best_key = None
    for poly in _monic_polys(p, deg):
        key = 0
        for c in reversed(poly[:-1]):
            key = key * p + c
        if best_key is not None and key >= best_key:
            continue
        if _is_irreducible(poly, p):
            best, best_key = poly, key
    assert best is not None
    return best


class FieldCtx:
    """GF(q^2) = GF(p)[z]/(h(z)), with full lookup tables.

    Attributes:
        p, r, q: characteristic, extension degree of GF(q), q = p^r.
        order: q^2, the number of elements.
        modulus: coefficient list of h, length 2r+1, monic.
        add, mul: (order x order) int16 tables.
        neg, inv, frob: length-order int16 tables (inv[0] is unused).
        exp, log: antilog/log tables for the chosen generator.
    """

    def __init__(self, p: int, r: int):
        self.pp = PrimePower(p, r)
        self.p = p
        self.r = r
        self.q = p ** r
        self.order = self.q * self.q
        deg = 2 * r
        self.modulus = _minimal_irreducible(p, deg)
        self._deg = deg
        self._build_tables()

    # -- encoding ----------------------------------------------------------

    def coeffs(self, x: int):
        """Coefficient vector (c_0, ..., c_{2r-1}) of an encoded element."""
        out = []
        for _ in range(self._deg):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + c % self.p
        return x

    # -- table construction ------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def _build_tables(self):
        n, p, deg = self.order, self.p, self._deg
        # digit matrix for vectorized addition
        digits = np.zeros((n, deg), dtype=np.int64)
        col = np.arange(n)
        for i in range(deg):
            digits[:, i] = (col // p ** i) % p
        weights = p ** np.arange(deg)
        self.add = np.asarray(
            ((digits[:, None, :] + digits[None, :, :]) % p) @ weights,
            dtype=np.int16,
        )
        self.neg = np.asarray(((-digits) % p) @ weights, dtype=np.int16)

        # find a generator of the multiplicative group
        gorder = n - 1
        gen = None
        for cand in range(1, n):
            x = cand
            k = 1
            while x != 1:
                x = self._mul_raw(x, cand)
                k += 1
            if k == gorder:
                gen = cand
                break
        assert gen is not None

        self.exp = np.zeros(gorder, dtype=np.int16)
        self.log = np.zeros(n, dtype=np.int64)
        x = 1
        for k in range(gorder):
            self.exp[k] = x
            self.log[x] = k
            x = self._mul_raw(x, gen)

        logs = self.log[1:]
        self.mul = np.zeros((n, n), dtype=np.int16)
        self.mul[1:, 1:] = self.exp[(logs[:, None] + logs[None, :]) % gorder]

        self.inv = np.zeros(n, dtype=np.int16)
        self.inv[1:] = self.exp[(-logs) % gorder]

        self.frob = np.zeros(n, dtype=np.int16)
        self.frob[1:] = self.exp[(logs * self.q) % gorder]

    # -- scalar operations -------------------------------------------------

    def add_elems(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def mul_elems(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv_elem(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return int(self.inv[a])

    def pow_elem(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.order - 1)])

    def in_base_field(self, a: int) -> bool:
        """True iff a lies in the GF(q) subfield, i.e. a^q = a."""
        return int(self.frob[a]) == a

    def elements(self):
        return range(self.order)


def make_field(p: int, r: int) -> FieldCtx:
    """Construct GF(q^2) for q = p^r with the deterministic minimal modulus."""
    return FieldCtx(p, r)


def frobenius(ctx: FieldCtx, x: int) -> int:
    """x -> x^q, an involution fixing exactly the GF(q) subfield."""
    return int(ctx.frob[x])


def arith(ctx: FieldCtx, op: str, *operands: int) -> int:
    """Dispatch scalar field arithmetic: add | mul | inv | pow."""
    if op == "add":
        return ctx.add_elems(*operands)
    if op == "mul":
        return ctx.mul_elems(*operands)
    if op == "inv":
        return ctx.inv_elem(*operands)
    if op == "pow":
        return ctx.pow_elem(*operands)
    raise ValueError(f"unknown operation: {op}")
