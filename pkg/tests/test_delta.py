"""Delta(m) via Phi triangularization: baseline vs optimized routes."""

import pytest

from hermeaqecc import (
    delta,
    ell,
    m_perp,
    phi_basis_baseline,
    phi_basis_optimized,
    residue_class_census,
)
from conftest import curve


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_baseline_optimized_equivalence_exhaustive(q):
    ctx = curve(q)
    for m in range(q * q - 1, ctx.m_star + 1):
        base = phi_basis_baseline(ctx, m)
        opt = phi_basis_optimized(ctx, m)
        assert base.orders() == opt.orders()
        assert base.reduction_count == opt.reduction_count
        assert base.cumulative_reductions == opt.cumulative_reductions


@pytest.mark.parametrize("q", [11, 13, 16])
def test_baseline_optimized_equivalence_sampled(q):
    ctx = curve(q)
    lo, hi = q * q - 1, ctx.m_star
    for m in (lo, (lo + hi) // 2, hi):
        base = phi_basis_baseline(ctx, m)
        opt = phi_basis_optimized(ctx, m)
        assert base.orders() == opt.orders()
        assert base.reduction_count == opt.reduction_count


@pytest.mark.parametrize("q", [3, 5, 8])
def test_phi_properties(q):
    ctx = curve(q)
    for m in range(q * q - 1, ctx.m_star + 1, 5):
        basis = phi_basis_optimized(ctx, m)
        orders = basis.orders()
        assert len(orders) == ell(ctx, m)
        assert len(set(orders)) == len(orders)  # pairwise distinct
    with pytest.raises(ValueError, match="out of range"):
        phi_basis_optimized(ctx, q * q - 2)
    with pytest.raises(ValueError, match="out of range"):
        phi_basis_baseline(ctx, ctx.m_star + 1)


def test_phi_prefix_stability():
    # Phi(m) is the ell(m)-prefix of Phi(m*): entry j's eliminations
    # never involve later entries
    ctx = curve(5)
    star = phi_basis_optimized(ctx, ctx.m_star)
    for m in range(24, ctx.m_star + 1, 7):
        sub = phi_basis_optimized(ctx, m)
        dim = ell(ctx, m)
        assert sub.orders() == star.orders()[:dim]
        assert sub.reduction_count == star.cumulative_reductions[dim - 1]


def test_delta_spot_values_q3():
    # [PAPER] section 4 example: Delta(10) = Delta(21) = 6
    ctx = curve(3)
    assert delta(ctx, 10).delta == 6
    assert delta(ctx, 21).delta == 6
    assert delta(ctx, 21).method == "duality"


def test_delta_methods_and_range():
    ctx = curve(3)
    assert delta(ctx, 0).method == "shortcut"
    assert delta(ctx, 7).method == "shortcut"
    assert delta(ctx, 8).method == "optimized"
    assert delta(ctx, 15).method == "optimized"
    assert delta(ctx, 16).method == "duality"
    for m in (-1, ctx.n + 2 * ctx.g - 1):
        with pytest.raises(ValueError, match="out of range"):
            delta(ctx, m)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_delta_invariants(q):
    ctx = curve(q)
    top = ctx.n + 2 * ctx.g - 2
    for m in range(top + 1):
        d = delta(ctx, m).delta
        k = ell(ctx, m)
        assert 0 <= d <= min(k, ctx.n - k)
        # duality
        assert d == delta(ctx, m_perp(ctx, m)).delta
        if m <= q * q - 2:
            assert d == k  # shortcut region


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_residue_class_census(q):
    # [PAPER] Appendix Proposition: class of k mod q^2-1 has size q+2
    # when k=0, q+1 when q+1 divides k (k nonzero), q otherwise
    ctx = curve(q)
    census = residue_class_census(ctx)
    assert sorted(census) == list(range(q * q - 1))
    for k, size in census.items():
        if k == 0:
            assert size == q + 2
        elif k % (q + 1) == 0:
            assert size == q + 1
        else:
            assert size == q
    assert sum(census.values()) == q ** 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_reduction_count_bound(q):
    # [PAPER] complexity Proposition: at most q(q+1)(q^2-1)/2 reductions
    ctx = curve(q)
    basis = phi_basis_optimized(ctx, ctx.m_star)
    assert basis.reduction_count <= q * (q + 1) * (q * q - 1) // 2
