"""
Independent verification by explicit linear algebra over GF(q^2).

Generator matrices are built by evaluating the reduced-monomial basis at
the canonical point order; all arithmetic goes through the field's
lookup tables, so row operations are numpy fancy-indexing and ranks are
exact.  The entanglement parameter is recovered as rank(G G*) and
Delta as an intersection dimension via rank subadditivity, giving a
slow but formula-free cross-check of the reduction pipeline.
"""

from __future__ import annotations

import numpy as np

from .curve import CurveCtx, affine_points, ell, m_perp, monomial_basis

BRUTE_FORCE_BUDGET = 1 << 26


def generator_matrix(ctx: CurveCtx, m: int) -> np.ndarray:
    """ell(m) x n matrix with entry (i, j) = f_i(P_j), as field encodings.

    Rows are evaluations of distinct reduced monomials, hence always
    linearly independent.
    """
    if m < 0 or m > ctx.max_order:
        raise ValueError("out of range")
    fld = ctx.field
    pts = affine_points(ctx)
    xs = np.array([pt.x for pt in pts], dtype=np.int64)
    ys = np.array([pt.y for pt in pts], dtype=np.int64)
    gorder = fld.order - 1
    # vectorized pow via log tables; 0^e = 0 for e > 0, anything^0 = 1
    logx = fld.log[xs]
    logy = fld.log[ys]
    rows = []
    for mono in monomial_basis(ctx, m):
        xa = np.where(
            xs == 0, 1 if mono.a == 0 else 0, fld.exp[(logx * mono.a) % gorder]
        )
        yb = np.where(
            ys == 0, 1 if mono.b == 0 else 0, fld.exp[(logy * mono.b) % gorder]
        )
        rows.append(fld.mul[xa, yb])
    return np.array(rows, dtype=np.int16)


def rank_gf(ctx: CurveCtx, mat: np.ndarray) -> int:
    """Row rank by Gaussian elimination with exact table arithmetic."""
    fld = ctx.field
    M = np.array(mat, dtype=np.int16)
    if M.size == 0:
        return 0
    rows, cols = M.shape
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(M[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        M[[rank, piv]] = M[[piv, rank]]
        # scale pivot row to leading 1
        M[rank] = fld.mul[M[rank], fld.inv[M[rank, col]]]
        # eliminate the column below
        factors = M[rank + 1 :, col]
        hit = np.nonzero(factors)[0]
        if hit.size:
            sub = fld.mul[fld.neg[factors[hit]][:, None], M[rank][None, :]]
            M[rank + 1 + hit] = fld.add[M[rank + 1 + hit], sub]
        rank += 1
        if rank == rows:
            break
    return rank


def _field_matmul(ctx: CurveCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over GF(q^2): A (r x n) times B^T for B (s x n)."""
    fld = ctx.field
    out = np.zeros((A.shape[0], B.shape[0]), dtype=np.int16)
    for i in range(A.shape[0]):
        W = fld.mul[A[i][None, :], B]
        # fold pairwise with the addition table
        while W.shape[1] > 1:
            if W.shape[1] % 2:
                W = np.concatenate([W, np.zeros((W.shape[0], 1), dtype=W.dtype)], 1)
            W = fld.add[W[:, ::2], W[:, 1::2]]
        out[i] = W[:, 0]
    return out


def c_oracle(ctx: CurveCtx, m: int) -> int:
    """Entanglement as rank(G G*) for G a generator matrix of the dual
    code C(m_perp), G* its entrywise q-th power transpose.

    rank(G G*) = dim - dim(ker) strips exactly the Hermitian
    self-intersection, so applying it to the dual gives
    n - k(m) - Delta(m); applied to C(m) itself it would yield K instead.
    """
    if m < 0 or m > ctx.n + 2 * ctx.g - 2:
        raise ValueError("out of range")
    G = generator_matrix(ctx, m_perp(ctx, m))
    H = ctx.field.frob[G]
    return rank_gf(ctx, _field_matmul(ctx, G, H))


def delta_oracle(ctx: CurveCtx, m: int) -> int:
    """dim(C(m)^q intersect C(m_perp)) via rank subadditivity."""
    if m < 0 or m > ctx.n + 2 * ctx.g - 2:
        raise ValueError("out of range")
    A = ctx.field.frob[generator_matrix(ctx, m)]
    B = generator_matrix(ctx, m_perp(ctx, m))
    ra = rank_gf(ctx, A)
    rb = rank_gf(ctx, B)
    rs = rank_gf(ctx, np.concatenate([A, B], axis=0))
    return ra + rb - rs


def dprime_bruteforce(ctx: CurveCtx, m: int):
    """Minimum weight over C \\ (C intersect C^perpH) by full enumeration.

    Returns "undefined" when C is Hermitian self-orthogonal.  The
    enumeration budget is a hard precondition: a partial sweep would
    yield an unsound minimum.
    """
    k = ell(ctx, m)
    if ctx.field.order ** k > BRUTE_FORCE_BUDGET:
        raise ValueError("too large for brute force")
    fld = ctx.field
    G = generator_matrix(ctx, m)
    Gq = fld.frob[G]

    def expand(rows):
        words = np.zeros((1, ctx.n), dtype=np.int16)
        for row in rows:
            scaled = fld.mul[np.arange(fld.order)[:, None], row[None, :]]
            words = fld.add[words[:, None, :], scaled[None, :, :]].reshape(-1, ctx.n)
        return words

    # split so the vectorized suffix block stays around 2^16 words
    k2 = k
    while fld.order ** k2 > 1 << 16:
        k2 -= 1
    suffix = expand(G[k - k2 :]) if k2 else np.zeros((1, ctx.n), dtype=np.int16)
    best = None
    for prefix in expand(G[: k - k2]):
        words = fld.add[prefix[None, :], suffix]
        weights = np.count_nonzero(words, axis=1)
        # in C^perpH iff orthogonal to every row of G^q
        in_dual = np.ones(len(words), dtype=bool)
        for row in Gq:
            W = fld.mul[words, row[None, :]]
            while W.shape[1] > 1:
                if W.shape[1] % 2:
                    W = np.concatenate(
                        [W, np.zeros((W.shape[0], 1), dtype=W.dtype)], 1
                    )
                W = fld.add[W[:, ::2], W[:, 1::2]]
            in_dual &= W[:, 0] == 0
        keep = (weights > 0) & ~in_dual
        if keep.any():
            w = int(weights[keep].min())
            if best is None or w < best:
                best = w
    return "undefined" if best is None else best
