"""
EAQECC parameter records [[n, K, d; c]]_q and the exact GV inequality.

From the classical code C(m) of dimension k and designed distance
n - m, the derived quantum code has K = k - Delta(m) logical qudits and
consumes c = n - k - Delta(m) maximally entangled pairs.  The reported
distance is the designed (Goppa) lower bound, flagged as such; every
paper-style example in the test suite has true distance equal to it.

The Gilbert-Varshamov existence inequality is evaluated with exact
integers only: the summands dwarf any float range already at moderate q,
and negative powers of q (possible because the hypothesis c <= (n-k)/2
is deliberately not enforced) are cleared by cross-multiplication.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .curve import CurveCtx, ell
from .delta import delta


@dataclass(frozen=True)
class GvQuery:
    n: int
    k: int  # classical dimension in the existence statement
    d: int
    c: int


@dataclass(frozen=True)
class EaqeccParams:
    q: int
    m: int
    n: int
    k_classical: int
    delta: int
    K: int
    c: int
    d_lb: int
    singleton_defect: int
    exceeds_gv: bool
    flags: tuple[str, ...]

    def __str__(self):
        return f"[[{self.n}, {self.K}, {self.d_lb}; {self.c}]]_{self.q}"


def classical_dims(ctx: CurveCtx, m: int) -> tuple[int, int]:
    """(dimension, designed-distance lower bound) of C(m).

    The dimension is the count of reduced monomials of order <= m, which
    equals ell(m) - ell(m - n) with the true Riemann-Roch dimensions and
    stays correct through m = n + 2g - 1.
    """
    if m < 0 or m > ctx.n + 2 * ctx.g - 2:
        raise ValueError("out of range")
    k = ell(ctx, m)
    d_lb = ctx.n - m if m < ctx.n else 1
    return k, d_lb


def singleton_defect(n: int, K: int, c: int, d: int) -> int:
    """n + 2 - K + c - 2d; guaranteed nonnegative only for d <= (n+2)/2."""
    return n + 2 - K + c - 2 * d


@functools.lru_cache(maxsize=None)
def _gv_prefix_sums(n: int, q: int) -> list[int]:
    """sums[j] = sum_{i=1}^{j} C(n,i)(q^2-1)^i, shared by a whole sweep."""
    sums = [0] * (n + 1)
    binom = 1
    power = 1
    total = 0
    for i in range(1, n + 1):
        binom = binom * (n - i + 1) // i
        power *= q * q - 1
        total += binom * power
        sums[i] = total
    return sums


def gv_holds(query: GvQuery, q: int) -> bool:
    """Exact test of the GV existence inequality for [[n, k-c, d; c]]_q.

    True iff (q^(n+k) - q^(n-k-2c)) * sum_{i=1}^{d-1} C(n,i)(q^2-1)^i
    is less than q^(2n) - 1, cleared of negative exponents by
    multiplying both sides with q^max(0, 2c+k-n).
    """
    n, k, d, c = query.n, query.k, query.d, query.c
    if d < 1:
        raise ValueError("require d >= 1")
    total = _gv_prefix_sums(n, q)[min(d - 1, n)]
    e = max(0, 2 * c + k - n)
    lhs = (q ** (n + k + e) - q ** (n - k - 2 * c + e)) * total
    rhs = (q ** (2 * n) - 1) * q ** e
    return lhs < rhs


def exceeds_gv(n: int, K: int, d: int, c: int, q: int) -> bool:
    """True iff the GV argument cannot guarantee these parameters."""
    return not gv_holds(GvQuery(n=n, k=K + c, d=d, c=c), q)


def eaqecc_params(ctx: CurveCtx, m: int) -> EaqeccParams:
    """Assemble the full parameter record for the code derived from C(m)."""
    k, d_lb = classical_dims(ctx, m)
    dres = delta(ctx, m)
    n = ctx.n
    c = n - k - dres.delta
    K = k - dres.delta
    assert K == 2 * k - n + c
    assert 0 <= c <= n - k
    flags = ["distance_is_exact_unknown"]
    if m <= ctx.q * ctx.q - 2:
        flags.append("zero_dimension")
    if m >= ctx.n - ctx.q:
        flags.append("zero_entanglement")
    if c > (n - k) / 2:
        flags.append("gv_hypothesis_violated")
    return EaqeccParams(
        q=ctx.q,
        m=m,
        n=n,
        k_classical=k,
        delta=dres.delta,
        K=K,
        c=c,
        d_lb=d_lb,
        singleton_defect=singleton_defect(n, K, c, d_lb),
        exceeds_gv=exceeds_gv(n, K, d_lb, c, ctx.q),
        flags=tuple(flags),
    )


def gv_scan(ctx: CurveCtx) -> tuple[int, int]:
    """Maximal contiguous entanglement range over which every produced
    code exceeds GV.

    Codes with zero logical dimension or a trivial distance bound
    (d_lb = 1) are not considered produced codes.  Returns (c_min, c_max).
    """
    by_c: dict[int, bool] = {}
    for m in range(0, ctx.n + 2 * ctx.g - 1):
        rec = eaqecc_params(ctx, m)
        if rec.K < 1 or rec.d_lb < 2:
            continue
        by_c[rec.c] = by_c.get(rec.c, True) and rec.exceeds_gv
    good = sorted(c for c, ok in by_c.items() if ok)
    bad = sorted(c for c, ok in by_c.items() if not ok)
    if not good:
        raise ValueError("no code exceeds the GV bound")
    # best run of good values with no bad value strictly inside
    best = (0, 0, 0)
    start = 0
    while start < len(good):
        end = start
        while end + 1 < len(good) and not any(
            good[end] < b < good[end + 1] for b in bad
        ):
            end += 1
        length = end - start + 1
        if length > best[0]:
            best = (length, good[start], good[end])
        start = end + 1
    return best[1], best[2]
