"""Words, Dickson matrices, bilinear forms and the automorphism action.

A *word* is an m-tuple (a_0, ..., a_{m-1}) of elements of F_{q^m}.  One word
plays three roles at once:

* the linearized polynomial  L(x) = a_0 x + a_1 x^q + ... + a_{m-1} x^(q^(m-1)),
* the generator of the q-circulant (Dickson) matrix whose (i, j) entry is
  a_{(j-i) mod m} ^ (q^i)  (0-based indices),
* the bilinear form  (x, x') -> Tr(L(x') * x)  on the cyclic model of V(m, q).

The rank of the word is the rank of the form, computed as m minus the F_q
dimension of the root space of L; it always agrees with the matrix rank of
the Dickson matrix over F_{q^m} (this equality is exercised by the tests).

Words are plain tuples of element ints; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

from .gfield import FieldCtx
from .linalg import fq_nullspace, fq_rank, mat_mul

Word = Tuple[int, ...]


def zero_word(ctx: FieldCtx) -> Word:
    return (0,) * ctx.m


def word_add(ctx: FieldCtx, w1: Word, w2: Word) -> Word:
    add = ctx.add
    return tuple(add(a, b) for a, b in zip(w1, w2))


def word_sub(ctx: FieldCtx, w1: Word, w2: Word) -> Word:
    sub = ctx.sub
    return tuple(sub(a, b) for a, b in zip(w1, w2))


def word_scale(ctx: FieldCtx, c: int, w: Word) -> Word:
    mul = ctx.mul
    return tuple(mul(c, a) for a in w)


def eval_linpoly(ctx: FieldCtx, w: Word, x: int) -> int:
    """Evaluate the linearized polynomial of w at x."""
    acc = 0
    add, mul, frob = ctx.add, ctx.mul, ctx.frobenius
    for i, a in enumerate(w):
        if a:
            acc = add(acc, mul(a, frob(x, i)))
    return acc


def linmap_fq_matrix(ctx: FieldCtx, w: Word) -> List[List[int]]:
    """Matrix of the linearized polynomial of w as an F_q-linear map on
    F_{q^m}, in the basis 1, g, ..., g^(m-1).  Entries are canonical
    subfield indices; column j holds the coordinates of L(g^j).

    The map w -> matrix is F_q-linear, which makes pairwise rank
    computations a matter of subtracting precomputed matrices.
    """
    m = ctx.m
    conj = ctx.conj_basis()
    add, mul, coords = ctx.add, ctx.mul, ctx.coords
    cols = []
    for j in range(m):
        acc = 0
        cj = conj[j]
        for i in range(m):
            a = w[i]
            if a:
                acc = add(acc, mul(a, cj[i]))
        cols.append(coords(acc))
    return [[cols[j][r] for j in range(m)] for r in range(m)]


def kernel(ctx: FieldCtx, w: Word) -> List[int]:
    """Deterministic F_q-basis of the root space {x : L_w(x) = 0},
    as field elements."""
    null = fq_nullspace(ctx, linmap_fq_matrix(ctx, w))
    return [ctx.from_fq_coords(vec) for vec in null]


def rank(ctx: FieldCtx, w: Word) -> int:
    """Rank of the bilinear form of w (= m - dim of the root space)."""
    return fq_rank(ctx, linmap_fq_matrix(ctx, w))


def dickson(ctx: FieldCtx, w: Word) -> Tuple[Tuple[int, ...], ...]:
    """The q-circulant matrix generated by w."""
    m = ctx.m
    frob = ctx.frobenius
    return tuple(
        tuple(frob(w[(j - i) % m], i) for j in range(m)) for i in range(m)
    )


def word_from_dickson(ctx: FieldCtx, mat: Sequence[Sequence[int]]) -> Word:
    """Recover the generating word, checking the q-circulant structure."""
    m = ctx.m
    w = tuple(mat[0])
    frob = ctx.frobenius
    for i in range(1, m):
        for j in range(m):
            if mat[i][j] != frob(w[(j - i) % m], i):
                raise RuntimeError("matrix is not a Dickson matrix")
    return w


def dickson_rank(ctx: FieldCtx, w: Word) -> int:
    """Matrix rank of the Dickson matrix over F_{q^m} (cross-check route)."""
    from .linalg import mat_rank

    return mat_rank(ctx, dickson(ctx, w))


def form_eval(ctx: FieldCtx, w: Word, x: int, xp: int) -> int:
    """The bilinear form of w: Tr(L_w(x') * x).  Takes values in F_q."""
    return ctx.trace(ctx.mul(eval_linpoly(ctx, w, xp), x))


def compose(ctx: FieldCtx, wa: Word, wb: Word) -> Word:
    """Composition of linearized polynomials, reduced mod x^(q^m) - x.

    Matches the Dickson matrix product: D(compose(a, b)) = D(a) * D(b).
    """
    m = ctx.m
    add, mul, frob = ctx.add, ctx.mul, ctx.frobenius
    out = [0] * m
    for i, a in enumerate(wa):
        if not a:
            continue
        for j, b in enumerate(wb):
            if b:
                k = (i + j) % m
                out[k] = add(out[k], mul(a, frob(b, i)))
    return tuple(out)


def dickson_mul(
    ctx: FieldCtx,
    a: Sequence[Sequence[int]],
    b: Sequence[Sequence[int]],
) -> Tuple[Tuple[int, ...], ...]:
    """Product of two Dickson matrices; raises if the product loses the
    q-circulant structure (which would signal an arithmetic bug)."""
    prod = mat_mul(ctx, tuple(map(tuple, a)), tuple(map(tuple, b)))
    word_from_dickson(ctx, prod)
    return prod


def dickson_transpose(ctx: FieldCtx, w: Word) -> Word:
    """Word whose Dickson matrix is the transpose of w's."""
    m = ctx.m
    frob = ctx.frobenius
    return tuple(w[0] if i == 0 else frob(w[m - i], i) for i in range(m))


@dataclass(frozen=True)
class AutElt:
    """One element of the rank-preserving automorphism action on forms.

    Applied as: Frobenius p^frob_power entrywise, optional transpose, then
    the sandwich  D(d1)^T * M * D(d2).  d1 and d2 must have rank m.  Only
    rank invariance is promised; the sandwich convention is fixed here.
    """

    d1: Word
    d2: Word
    transpose: bool = False
    frob_power: int = 0


def apply_aut(ctx: FieldCtx, e: AutElt, w: Word) -> Word:
    if rank(ctx, e.d1) != ctx.m or rank(ctx, e.d2) != ctx.m:
        raise ValueError("automorphism components must be invertible (rank m)")
    if e.frob_power % ctx.degree:
        p_pow = ctx.p_power
        w = tuple(p_pow(a, e.frob_power) for a in w)
    if e.transpose:
        w = dickson_transpose(ctx, w)
    return compose(ctx, compose(ctx, dickson_transpose(ctx, e.d1), w), e.d2)


def identity_aut(ctx: FieldCtx) -> AutElt:
    ident = (1,) + (0,) * (ctx.m - 1)
    return AutElt(d1=ident, d2=ident)


def singer_orbit(ctx: FieldCtx, w: Word) -> Set[Word]:
    """Orbit of w under the pair of diagonal Singer cycles:
    w -> (c * a_0 * x, c * a_1 * x^q, ..., c * a_{m-1} * x^(q^(m-1)))
    over all nonzero c, x."""
    m = ctx.m
    mul, frob = ctx.mul, ctx.frobenius
    out: Set[Word] = set()
    if w == zero_word(ctx):
        return {w}
    for x in ctx.nonzero():
        base = tuple(mul(w[k], frob(x, k)) for k in range(m))
        for c in ctx.nonzero():
            out.add(tuple(mul(c, a) for a in base))
    return out


def words_iter(ctx: FieldCtx) -> Iterable[Word]:
    """All (q^m)^m words in deterministic order (int-encoded, little end first)."""
    import itertools

    els = [0] + list(ctx.exp)
    for tup in itertools.product(els, repeat=ctx.m):
        yield tup
