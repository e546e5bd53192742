"""Normal-form reduction and the closed-form q-th power machinery.

The heavy oracle here is semantic: a reduction is correct iff the
reduced polynomial takes the same values as the original on every affine
point, since reduced monomials evaluate to a basis of GF(q^2)^n.
"""

import math
import random

import pytest

from hermeaqecc import (
    ReducedPoly,
    affine_points,
    binom_mod_p,
    format_poly,
    m_hat,
    make_curve,
    monomial_basis,
    normalize,
    nu,
    p_illumination,
    qth_order,
    qth_power_reduced,
    reduce_poly,
    ust_decompose,
)
from conftest import curve


def _evaluate(ctx, terms, pt):
    """Evaluate a {(a, b): coeff} polynomial at an affine point.

    Coefficients are integers mod p, embedded in GF(q^2) by repeated
    addition of 1.
    """
    fld = ctx.field
    acc = 0
    for (a, b), c in terms.items():
        val = fld.mul_elems(fld.pow_elem(pt.x, a), fld.pow_elem(pt.y, b))
        for _ in range(c % ctx.p):
            acc = fld.add_elems(acc, val)
    return acc


@pytest.mark.parametrize("t,j,p", [(5, 2, 3), (9, 4, 2), (14, 7, 7), (30, 11, 5)])
def test_binom_mod_p(t, j, p):
    # [DERIVED] Lucas product vs direct binomial
    assert binom_mod_p(t, j, p) == math.comb(t, j) % p


def test_binom_mod_p_exhaustive_small():
    for p in (2, 3, 5):
        for t in range(0, 40):
            for j in range(0, t + 1):
                assert binom_mod_p(t, j, p) == math.comb(t, j) % p
    with pytest.raises(ValueError):
        binom_mod_p(3, 5, 2)
    with pytest.raises(ValueError):
        binom_mod_p(3, -1, 2)


def test_p_illumination_prime_case():
    # r=1: every j <= t < p is in the shadow, rho identically 0
    for p in (2, 3, 5, 7, 13):
        for t in range(p):
            for j in range(t + 1):
                assert p_illumination(t, j, p, 1) == 0


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_p_illumination_brute(p, r):
    # [DERIVED] rho_t(j) = j - max{j' <= j : C(t, j') != 0 mod p}
    for t in range(p ** r):
        for j in range(t + 1):
            best = max(jj for jj in range(j + 1) if math.comb(t, jj) % p)
            assert p_illumination(t, j, p, r) == j - best
    with pytest.raises(ValueError):
        p_illumination(2, 3, p, r)


@pytest.mark.parametrize("q", [3, 4, 8])
def test_ust_and_m_hat(q):
    ctx = curve(q)
    for v in range(0, ctx.max_order + 1, 3):
        d = ust_decompose(ctx, v)
        assert 0 <= d.s < q and 0 <= d.t < q
        assert d.u * q * q + d.s * q + d.t == v
    mod = q * q - 1
    assert m_hat(ctx, 0) == 0
    for delta in range(1, 3 * mod + 2):
        rep = m_hat(ctx, delta)
        assert 1 <= rep <= mod and (rep - delta) % mod == 0
    # composition law: m_hat is idempotent and additive mod q^2-1
    for a in range(1, 40, 7):
        for b in range(1, 40, 5):
            assert m_hat(ctx, m_hat(ctx, a)) == m_hat(ctx, a)
            assert m_hat(ctx, m_hat(ctx, a) + m_hat(ctx, b)) == m_hat(ctx, a + b)
    with pytest.raises(ValueError):
        m_hat(ctx, -1)


def test_reduced_poly_basics():
    ctx = curve(3)
    poly = ReducedPoly(ctx, {(4, 0): 1, (0, 1): 2})
    assert poly.order == 12 and poly.leading() == ((4, 0), 1)
    assert format_poly(poly) == "x^4 + 2y"
    assert format_poly(ReducedPoly(ctx)) == "0"
    assert format_poly(ReducedPoly(ctx, {(0, 0): 2})) == "2"
    assert format_poly(ReducedPoly(ctx, {(6, 1): 1, (2, 0): 2})) == "x^6y + 2x^2"
    assert (poly - poly).is_zero()
    with pytest.raises(ValueError, match="not reduced"):
        ReducedPoly(ctx, {(9, 0): 1})
    with pytest.raises(ValueError, match="no leading term"):
        ReducedPoly(ctx).leading()


def test_reduce_poly_kills_curve_relations():
    for q in (2, 3, 4, 5):
        ctx = curve(q)
        # y^q + y - x^(q+1) == 0 on the curve  [TRIVIAL]
        rel = reduce_poly(
            ctx, {(0, q): 1, (0, 1): 1, (q + 1, 0): ctx.p - 1}
        )
        assert rel.is_zero()
        # x^(q^2) - x == 0 for all field elements
        assert reduce_poly(ctx, {(q * q, 0): 1, (1, 0): ctx.p - 1}).is_zero()


@pytest.mark.parametrize("q", [2, 3, 4])
def test_reduce_poly_semantics(q):
    # [DERIVED] reduction preserves the evaluation at every affine point
    ctx = curve(q)
    rng = random.Random(20240817 + q)
    pts = affine_points(ctx)
    for _ in range(8):
        terms = {
            (rng.randrange(3 * q * q), rng.randrange(3 * q)): rng.randrange(1, ctx.p)
            for _ in range(4)
        }
        red = reduce_poly(ctx, terms)
        for pt in pts:
            assert _evaluate(ctx, terms, pt) == _evaluate(ctx, red.terms, pt)


def test_normalize():
    ctx = curve(5)
    poly = ReducedPoly(ctx, {(3, 1): 4, (1, 0): 2})
    monic = normalize(poly)
    assert monic.leading()[1] == 1
    assert monic == poly.scaled(4)  # 4 * 4 = 16 = 1 mod 5
    assert normalize(ReducedPoly(ctx)).is_zero()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_qth_power_closed_form(q):
    # closed form vs explicit reduction of f^q, term for term
    ctx = curve(q)
    for mono in monomial_basis(ctx, ctx.m_star):
        explicit = reduce_poly(ctx, {(mono.a * q, mono.b * q): 1})
        assert qth_power_reduced(ctx, mono) == explicit
        assert qth_order(ctx, mono) == explicit.order


@pytest.mark.parametrize("q", [3, 4, 5, 8])
def test_support_congruence(q):
    # [PAPER] every monomial of r(f^q) has order = q*nu(f) mod q^2-1
    ctx = curve(q)
    mod = q * q - 1
    for mono in monomial_basis(ctx, ctx.m_star):
        red = qth_power_reduced(ctx, mono)
        for key in red.terms:
            a, b = key
            assert (nu(ctx, a, b) - q * mono.order) % mod == 0


def test_qth_order_out_of_proven_range():
    ctx = curve(3)
    beyond = next(m for m in ctx.basis if m.order > ctx.m_star)
    with pytest.raises(ValueError, match="out of proven range"):
        qth_order(ctx, beyond)


def test_table1_spot_rows():
    # [PAPER] Table 1: r(y^3) = x^4 + 2y, r((x^2y)^3) = x^6y + 2x^2
    ctx = make_curve(3, 1)
    y = next(m for m in ctx.basis if (m.a, m.b) == (0, 1))
    x2y = next(m for m in ctx.basis if (m.a, m.b) == (2, 1))
    assert format_poly(normalize(qth_power_reduced(ctx, y))) == "x^4 + 2y"
    assert format_poly(normalize(qth_power_reduced(ctx, x2y))) == "x^6y + 2x^2"
    assert qth_order(ctx, y) == 12
    assert qth_order(ctx, x2y) == 22
