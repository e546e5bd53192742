"""
Computation of Delta(m) = dim(C(m) intersect C(m)^perpH).

Two routes produce the triangularized generating set Phi(m) of C(m)^q:

* the baseline route reduces every q-th power explicitly and runs the
  collision-elimination pass exactly as listed (restart the scan at the
  first entry after every subtraction);
* the optimized route first obtains every order from the closed-form
  formula and only materializes polynomial bodies inside the residue
  class (mod q^2 - 1) where a collision actually happens.

Both yield pairwise distinct orders; Delta(m) is the number of orders
not exceeding m_perp.  Outside [q^2 - 1, m*] the shortcut
Delta(m) = ell(m) (small m) and the duality Delta(m) = Delta(m_perp)
(large m) apply.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .curve import CurveCtx, ell, m_perp, monomial_basis
from .reduction import ReducedPoly, normalize, qth_order, qth_power_reduced, reduce_poly


@dataclass
class PhiEntry:
    index: int
    order: int
    body: ReducedPoly | None = None


@dataclass
class PhiBasis:
    m: int
    entries: list[PhiEntry] = field(default_factory=list)
    reduction_count: int = 0
    materialized_count: int = 0
    # reduction_count snapshot after each entry; entry j's eliminations
    # involve earlier entries only, so the first ell(m') entries of
    # Phi(m) are exactly Phi(m') for any m' <= m, with these counts
    cumulative_reductions: list[int] = field(default_factory=list)

    def orders(self) -> list[int]:
        return [e.order for e in self.entries]


@dataclass(frozen=True)
class DeltaResult:
    m: int
    delta: int
    method: str  # shortcut | baseline | optimized | duality
    reduction_count: int


def _check_phi_range(ctx: CurveCtx, m: int):
    if not (ctx.q * ctx.q - 1 <= m <= ctx.m_star):
        raise ValueError("out of range")


def _reduced_qth_power(ctx: CurveCtx, mono) -> ReducedPoly:
    return reduce_poly(ctx, {(mono.a * ctx.q, mono.b * ctx.q): 1})


def phi_basis_baseline(ctx: CurveCtx, m: int) -> PhiBasis:
    """Algorithm route that stores every normalized reduction up front."""
    _check_phi_range(ctx, m)
    basis = PhiBasis(m)
    bodies = [
        normalize(_reduced_qth_power(ctx, mono)) for mono in monomial_basis(ctx, m)
    ]
    mod = ctx.q * ctx.q - 1
    source = monomial_basis(ctx, m)
    for j, body in enumerate(bodies):
        entries = basis.entries
        i = 0
        while i < len(entries):
            if body.order == entries[i].order:
                # collisions stay within one residue class of nu(f) mod q^2-1
                assert source[j].order % mod == source[entries[i].index].order % mod
                body = normalize(body - entries[i].body)
                basis.reduction_count += 1
                i = 0
            else:
                i += 1
        entries.append(PhiEntry(j, body.order, body))
        basis.cumulative_reductions.append(basis.reduction_count)
    return basis


def phi_basis_optimized(ctx: CurveCtx, m: int) -> PhiBasis:
    """Lazy route: closed-form orders first, polynomial bodies on demand."""
    _check_phi_range(ctx, m)
    basis = PhiBasis(m)
    source = monomial_basis(ctx, m)
    mod = ctx.q * ctx.q - 1
    buckets: dict[int, list[PhiEntry]] = {}
    seen_orders: dict[int, PhiEntry] = {}

    def materialize(entry: PhiEntry):
        if entry.body is None:
            entry.body = normalize(qth_power_reduced(ctx, source[entry.index]))
            basis.materialized_count += 1

    for j, mono in enumerate(source):
        entry = PhiEntry(j, qth_order(ctx, mono))
        bucket = buckets.setdefault(mono.order % mod, [])
        if entry.order in seen_orders:
            # a reduced phi may cascade within the class, so bring in
            # every body of this bucket before eliminating
            for other in bucket:
                materialize(other)
            materialize(entry)
            while entry.order in seen_orders:
                other = seen_orders[entry.order]
                assert any(other is e for e in bucket)
                entry.body = normalize(entry.body - other.body)
                entry.order = entry.body.order
                basis.reduction_count += 1
        bucket.append(entry)
        seen_orders[entry.order] = entry
        basis.entries.append(entry)
        basis.cumulative_reductions.append(basis.reduction_count)
    return basis


@functools.lru_cache(maxsize=None)
def _phi_star_basis(ctx: CurveCtx) -> PhiBasis:
    """Phi(m*) computed once per curve; Phi(m) is its ell(m)-prefix."""
    return phi_basis_optimized(ctx, ctx.m_star)


@functools.lru_cache(maxsize=None)
def _delta_cached(ctx: CurveCtx, m: int) -> DeltaResult:
    q2 = ctx.q * ctx.q
    if m <= q2 - 2:
        return DeltaResult(m, ell(ctx, m), "shortcut", 0)
    if m > ctx.m_star:
        inner = _delta_cached(ctx, m_perp(ctx, m))
        return DeltaResult(m, inner.delta, "duality", inner.reduction_count)
    basis = _phi_star_basis(ctx)
    dim = ell(ctx, m)
    bound = m_perp(ctx, m)
    count = sum(1 for e in basis.entries[:dim] if e.order <= bound)
    reductions = basis.cumulative_reductions[dim - 1] if dim else 0
    return DeltaResult(m, count, "optimized", reductions)


def delta(ctx: CurveCtx, m: int) -> DeltaResult:
    """Delta(m) over the standard range [0, n + 2g - 2]."""
    if m < 0 or m > ctx.n + 2 * ctx.g - 2:
        raise ValueError("out of range")
    return _delta_cached(ctx, m)


def residue_class_census(ctx: CurveCtx) -> dict[int, int]:
    """Count reduced monomials per residue class of nu mod q^2 - 1."""
    mod = ctx.q * ctx.q - 1
    census = {k: 0 for k in range(mod)}
    for mono in ctx.basis:
        census[mono.order % mod] += 1
    return census
