"""Small exact linear algebra over F_q (index form) and F_{q^m} (element form).

Two matrix flavours are used throughout the package:

* F_q matrices: rows of canonical subfield indices (see FieldCtx.fq_index),
  driven by the q x q lookup tables on the context.
* F_{q^m} matrices: tuples of rows of element ints, driven by the scalar
  context operations.

All eliminations use the fixed pivot order (top row, leftmost column) so
results are deterministic.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .gfield import FieldCtx


# ----------------------------------------------------------------------
# F_q matrices (entries are canonical subfield indices 0..q-1)
# ----------------------------------------------------------------------

def fq_rank(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    mul = ctx.fq_mul
    add = ctx.fq_add
    neg = ctx.fq_neg
    inv = ctx.fq_inv
    rank = 0
    for c in range(ncols):
        pivot = -1
        for r in range(rank, len(mat)):
            if mat[r][c]:
                pivot = r
                break
        if pivot < 0:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pinv = inv[prow[c]]
        for r in range(rank + 1, len(mat)):
            row = mat[r]
            if row[c]:
                factor = neg[mul[row[c]][pinv]]
                mrow = mul[factor]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = add[row[j]][mrow[prow[j]]]
        rank += 1
        if rank == len(mat):
            break
    return rank


def fq_nullspace(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Deterministic basis of the right null space, one vector per free column."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    mul = ctx.fq_mul
    add = ctx.fq_add
    neg = ctx.fq_neg
    inv = ctx.fq_inv
    pivots: List[int] = []
    rank = 0
    for c in range(ncols):
        pivot = -1
        for r in range(rank, len(mat)):
            if mat[r][c]:
                pivot = r
                break
        if pivot < 0:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        pinv = inv[prow[c]]
        if prow[c] != 1:
            for j in range(c, ncols):
                prow[j] = mul[prow[j]][pinv]
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                row = mat[r]
                factor = neg[row[c]]
                mrow = mul[factor]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = add[row[j]][mrow[prow[j]]]
        pivots.append(c)
        rank += 1
        if rank == len(mat):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            if mat[r][free]:
                vec[pc] = neg[mat[r][free]]
        basis.append(tuple(vec))
    return basis


# ----------------------------------------------------------------------
# F_{q^m} matrices (entries are element ints)
# ----------------------------------------------------------------------

Mat = Tuple[Tuple[int, ...], ...]


def mat_mul(ctx: FieldCtx, a: Mat, b: Mat) -> Mat:
    n, k, k2, mcols = len(a), len(a[0]), len(b), len(b[0])
    if k != k2:
        raise ValueError("dimension mismatch")
    add, mul = ctx.add, ctx.mul
    out = []
    for i in range(n):
        arow = a[i]
        row = []
        for j in range(mcols):
            acc = 0
            for t in range(k):
                acc = add(acc, mul(arow[t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(ctx: FieldCtx, a: Mat, v: Sequence[int]) -> Tuple[int, ...]:
    add, mul = ctx.add, ctx.mul
    out = []
    for row in a:
        acc = 0
        for t, x in enumerate(v):
            acc = add(acc, mul(row[t], x))
        out.append(acc)
    return tuple(out)


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_rank(ctx: FieldCtx, a: Mat) -> int:
    mat = [list(r) for r in a]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    sub, mul, div = ctx.sub, ctx.mul, ctx.div
    rank = 0
    for c in range(ncols):
        pivot = -1
        for r in range(rank, nrows):
            if mat[r][c]:
                pivot = r
                break
        if pivot < 0:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, nrows):
            row = mat[r]
            if row[c]:
                factor = div(row[c], prow[c])
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = sub(row[j], mul(factor, prow[j]))
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_inv(ctx: FieldCtx, a: Mat) -> Mat:
    n = len(a)
    mat = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(a)]
    sub, mul, div = ctx.sub, ctx.mul, ctx.div
    for c in range(n):
        pivot = -1
        for r in range(c, n):
            if mat[r][c]:
                pivot = r
                break
        if pivot < 0:
            raise ValueError("matrix is singular")
        mat[c], mat[pivot] = mat[pivot], mat[c]
        prow = mat[c]
        pval = prow[c]
        if pval != 1:
            for j in range(2 * n):
                prow[j] = div(prow[j], pval)
        for r in range(n):
            if r != c and mat[r][c]:
                row = mat[r]
                factor = row[c]
                for j in range(2 * n):
                    if prow[j]:
                        row[j] = sub(row[j], mul(factor, prow[j]))
    return tuple(tuple(row[n:]) for row in mat)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
