"""Rank-distance code constructions and exhaustive verification.

The main object is the family built from the four kinds of components:

* pi(a):   words (u, u*t_1, ..., u*t_{m-1}) where t_k = alpha^(1+q+...+q^(k-1))
           * x^(q^k - 1), over all nonzero u and all classes of x modulo F_q*;
           alpha is the first norm-fiber element with N(alpha) = a.
* J(b):    words (u, 0, ..., 0, -u * beta * x^(q^(m-1) - 1)), same pattern.
* A1, A2:  the words supported on the first (resp. last) coordinate only.
* the zero word.

Each component is a single orbit of the diagonal Singer pair action
w -> (c a_0 x, c a_1 x^q, ...), which is what the `orbit` distance mode
exploits: rank distance is invariant under that action, so one fixed
representative per component suffices on one side of every pair.

The Gabidulin evaluation code (words supported on the first m-s coordinates)
serves as the linear baseline.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import multiprocessing

from .gfield import FieldCtx
from .linforms import (
    Word,
    linmap_fq_matrix,
    word_add,
    word_scale,
    zero_word,
)


@dataclass(frozen=True)
class Component:
    """One tagged piece of a code.  kind is PI, J, A1, A2, ZERO or OTHER;
    `a` is the F_q parameter for PI/J; orbit_rep is set when the component
    is a single Singer-pair orbit."""

    kind: str
    a: Optional[int]
    words: FrozenSet[Word]
    orbit_rep: Optional[Word] = None

    def tag(self, ctx: FieldCtx) -> str:
        if self.kind in ("PI", "J"):
            return f"{self.kind}({fq_label(ctx, self.a)})"
        return self.kind


def fq_label(ctx: FieldCtx, a: int) -> str:
    """Readable label for a subfield element: residue for prime q, g^k else."""
    if a == 0:
        return "0"
    if ctx.h == 1:
        return str(a)
    return f"g{ctx.log[a]}"


@dataclass(frozen=True)
class RankCode:
    """An immutable set of words with parameters and per-component tags."""

    ctx: FieldCtx
    claimed_distance: int
    components: Tuple[Component, ...]
    words: FrozenSet[Word]

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def size(self) -> int:
        return len(self.words)

    def has_orbit_structure(self) -> bool:
        return all(c.orbit_rep is not None for c in self.components)

    @staticmethod
    def assemble(ctx: FieldCtx, claimed_distance: int,
                 components: Sequence[Component]) -> "RankCode":
        words: set = set()
        total = 0
        for comp in components:
            total += len(comp.words)
            words |= comp.words
            if comp.orbit_rep is not None and comp.orbit_rep not in comp.words:
                raise ValueError(f"orbit representative missing from {comp.kind}")
        if total != len(words):
            raise ValueError("components overlap")
        has_zero = zero_word(ctx) in words
        tagged_zero = any(c.kind == "ZERO" for c in components)
        if has_zero != tagged_zero:
            raise ValueError("zero word must appear exactly in a ZERO component")
        code = RankCode(ctx, claimed_distance, tuple(components), frozenset(words))
        if code.size > singleton_bound(ctx.q, ctx.m, claimed_distance):
            raise ValueError("size exceeds the Singleton-like bound")
        return code

    @staticmethod
    def from_words(ctx: FieldCtx, words, claimed_distance: int) -> "RankCode":
        """Wrap an arbitrary word set (OTHER + ZERO tags, no orbit mode)."""
        words = frozenset(words)
        zw = zero_word(ctx)
        comps = []
        rest = words - {zw}
        if rest:
            comps.append(Component("OTHER", None, frozenset(rest)))
        if zw in words:
            comps.append(Component("ZERO", None, frozenset([zw]), orbit_rep=None))
        return RankCode.assemble(ctx, claimed_distance, comps)


def singleton_bound(q: int, m: int, d: int) -> int:
    """Largest possible size of a code with minimum rank distance d."""
    return q ** (m * (m - d + 1))


# ----------------------------------------------------------------------
# component construction
# ----------------------------------------------------------------------

def _check_fq_param(ctx: FieldCtx, a: int) -> None:
    if a == 0:
        raise ValueError("parameter must be nonzero")
    if not ctx.in_fq(a):
        raise ValueError("parameter must lie in the subfield F_q")


def pi_generator(ctx: FieldCtx, a: int) -> Word:
    """The word (1, alpha, alpha^(1+q), ...) with alpha the first norm-fiber
    element over a; its Singer-pair orbit is pi(a)."""
    _check_fq_param(ctx, a)
    alpha = ctx.norm_fiber(a)[0]
    q = ctx.q
    return tuple(ctx.pow(alpha, (q ** k - 1) // (q - 1)) for k in range(ctx.m))


def build_pi(ctx: FieldCtx, a: int) -> FrozenSet[Word]:
    """All words (u x, u alpha x^q, ..., u alpha^(1+...+q^(m-2)) x^(q^(m-1)))
    over nonzero u, x; independent of which alpha has norm a."""
    _check_fq_param(ctx, a)
    alpha = ctx.norm_fiber(a)[0]
    return _scaled_orbit(ctx, _pi_base_rows(ctx, alpha))


def _pi_base_rows(ctx: FieldCtx, alpha: int) -> List[Word]:
    q, m, s = ctx.q, ctx.m, ctx.subfield_index
    mul, powf, exp = ctx.mul, ctx.pow, ctx.exp
    apow = [powf(alpha, (q ** k - 1) // (q - 1)) for k in range(m)]
    rows = []
    for xi in range(s):
        x = exp[xi]
        rows.append(tuple(mul(apow[k], powf(x, q ** k - 1)) for k in range(m)))
    return rows

def build_J(ctx: FieldCtx, b: int) -> FrozenSet[Word]:
    """All words (u x, 0, ..., 0, -u beta x^(q^(m-1))), beta of norm b."""
    _check_fq_param(ctx, b)
    beta = ctx.norm_fiber(b)[0]
    return _scaled_orbit(ctx, _j_base_rows(ctx, beta))


def _j_base_rows(ctx: FieldCtx, beta: int) -> List[Word]:
    q, m, s = ctx.q, ctx.m, ctx.subfield_index
    mul, powf, exp, neg = ctx.mul, ctx.pow, ctx.exp, ctx.neg
    mid = (0,) * (m - 2)
    rows = []
    for xi in range(s):
        x = exp[xi]
        rows.append((1,) + mid + (neg(mul(beta, powf(x, q ** (m - 1) - 1))),))
    return rows


def _scaled_orbit(ctx: FieldCtx, rows: Sequence[Word]) -> FrozenSet[Word]:
    """Close a family of base rows under nonzero scalar multiples."""
    mul = ctx.mul
    out = set()
    for base in rows:
        for u in ctx.exp:
            out.add(tuple(mul(u, c) for c in base))
    expected = len(rows) * ctx.mult_order
    if len(out) != expected:
        raise RuntimeError("unexpected collision while building component")
    return frozenset(out)


def j_generator(ctx: FieldCtx, b: int) -> Word:
    _check_fq_param(ctx, b)
    beta = ctx.norm_fiber(b)[0]
    return (1,) + (0,) * (ctx.m - 2) + (ctx.neg(beta),)


def build_axis(ctx: FieldCtx, i: int) -> FrozenSet[Word]:
    """A1 (i=1): words (x, 0, ..., 0).  A2 (i=2): words (0, ..., 0, x)."""
    if i not in (1, 2):
        raise ValueError("axis index must be 1 or 2")
    m = ctx.m
    if i == 1:
        return frozenset((x,) + (0,) * (m - 1) for x in ctx.nonzero())
    return frozenset((0,) * (m - 1) + (x,) for x in ctx.nonzero())


def _family_components(ctx: FieldCtx, I: Sequence[int]) -> List[Component]:
    m = ctx.m
    iset = sorted(set(I), key=ctx.fq_index)
    comps: List[Component] = []
    for a in iset:
        comps.append(Component("PI", a, build_pi(ctx, a), pi_generator(ctx, a)))
    for b in [e for e in ctx.fq_elems[1:] if e not in set(iset)]:
        comps.append(Component("J", b, build_J(ctx, b), j_generator(ctx, b)))
    comps.append(Component("A1", None, build_axis(ctx, 1), (1,) + (0,) * (m - 1)))
    comps.append(Component("A2", None, build_axis(ctx, 2), (0,) * (m - 1) + (1,)))
    zw = zero_word(ctx)
    comps.append(Component("ZERO", None, frozenset([zw]), zw))
    return comps


def build_family(ctx: FieldCtx, I: Sequence[int]) -> RankCode:
    """The non-linear family: pi(a) for a in I, J(b) for the remaining
    nonzero b, both axes, and the zero word.  Claimed distance m - 1.

    I must consist of subfield elements other than 0 and 1.  The empty I is
    accepted with a warning: the result degenerates to the linear code of
    words supported on the first and last coordinate.
    """
    if ctx.q <= 2:
        raise ValueError("q must exceed 2")
    if ctx.m < 3:
        raise ValueError("m must be at least 3")
    iset = set(I)
    for a in iset:
        if a == 0 or a == 1 or not ctx.in_fq(a):
            raise ValueError("I must be a subset of F_q minus {0, 1}")
    if not iset:
        warnings.warn("empty I: the family degenerates to a linear code")
    code = RankCode.assemble(ctx, ctx.m - 1, _family_components(ctx, iset))
    if code.size != ctx.q ** (2 * ctx.m):
        raise RuntimeError("family has unexpected size")
    return code


def build_gabidulin(ctx: FieldCtx, s: int) -> RankCode:
    """Linear baseline: all words with zero coordinates past index m-s-1.
    Size q^(m(m-s)); the claimed distance s+1 is verified, never assumed."""
    m = ctx.m
    if not 0 <= s <= m - 1:
        raise ValueError("s must satisfy 0 <= s <= m - 1")
    tail = (0,) * s
    els = [0] + list(ctx.exp)
    words = frozenset(
        head + tail for head in itertools.product(els, repeat=m - s)
    )
    return RankCode.from_words(ctx, words, s + 1)


# ----------------------------------------------------------------------
# distance computations
# ----------------------------------------------------------------------

def _word_matrix(ctx: FieldCtx, w: Word) -> List[List[int]]:
    return linmap_fq_matrix(ctx, w)


def _rank_of(rows: List[List[int]], m: int, add, mul, neg, inv) -> int:
    rank = 0
    for c in range(m):
        piv = -1
        for r in range(rank, m):
            if rows[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pinv = inv[prow[c]]
        for r in range(rank + 1, m):
            row = rows[r]
            rc = row[c]
            if rc:
                frow = mul[neg[mul[rc][pinv]]]
                for j in range(c, m):
                    pj = prow[j]
                    if pj:
                        row[j] = add[row[j]][frow[pj]]
        rank += 1
        if rank == m:
            break
    return rank


_PAR_STATE: dict = {}


def _stripe(args):
    mode, offset, step = args
    mats = _PAR_STATE["mats"]
    ctx: FieldCtx = _PAR_STATE["ctx"]
    m = ctx.m
    add, mul, neg, inv, sub = ctx.fq_add, ctx.fq_mul, ctx.fq_neg, ctx.fq_inv, ctx.fq_sub
    n = len(mats)
    best = m
    hist: Counter = Counter()
    for i in range(offset, n, step):
        mi = mats[i]
        for j in range(i + 1, n):
            mj = mats[j]
            rows = [[sub[a][b] for a, b in zip(ra, rb)] for ra, rb in zip(mi, mj)]
            r = _rank_of(rows, m, add, mul, neg, inv)
            if mode == "hist":
                hist[r] += 1
            elif r < best:
                best = r
                if best == 1:
                    return best
    return best if mode == "min" else dict(hist)


def _all_pairs(code: RankCode, mode: str, threads: int):
    ctx = code.ctx
    mats = [_word_matrix(ctx, w) for w in sorted(code.words)]
    if threads <= 1:
        _PAR_STATE.update(mats=mats, ctx=ctx)
        try:
            return [_stripe((mode, 0, 1))]
        finally:
            _PAR_STATE.clear()
    _PAR_STATE.update(mats=mats, ctx=ctx)
    try:
        mp = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=mp) as ex:
            return list(ex.map(_stripe, [(mode, k, threads) for k in range(threads)]))
    finally:
        _PAR_STATE.clear()


def min_distance(code: RankCode, mode: str = "bruteforce", threads: int = 1) -> int:
    """Minimum rank of a difference of two distinct codewords.

    `bruteforce` scans every unordered pair.  `orbit` fixes one representative
    per component on the left side, valid because every component of the
    family codes is one Singer-pair orbit and rank distance is invariant
    under that action; it must (and does, see tests) agree with brute force.
    """
    if code.size < 2:
        raise ValueError("minimum distance needs at least two words")
    if mode == "bruteforce":
        return min(_all_pairs(code, "min", threads))
    if mode != "orbit":
        raise ValueError(f"unknown mode {mode!r}")
    if not code.has_orbit_structure():
        raise ValueError("orbit mode needs orbit-tagged components")
    ctx = code.ctx
    m = ctx.m
    add, mul, neg, inv, sub = ctx.fq_add, ctx.fq_mul, ctx.fq_neg, ctx.fq_inv, ctx.fq_sub
    comp_mats = [
        (comp, _word_matrix(ctx, comp.orbit_rep),
         [(w, _word_matrix(ctx, w)) for w in sorted(comp.words)])
        for comp in code.components
    ]
    best = m
    for i, (ci, rep_mat, _) in enumerate(comp_mats):
        for j in range(i, len(comp_mats)):
            cj, _, words_j = comp_mats[j]
            same = i == j
            if same and len(cj.words) < 2:
                continue
            for w, mj in words_j:
                if same and w == ci.orbit_rep:
                    continue
                rows = [[sub[a][b] for a, b in zip(ra, rb)]
                        for ra, rb in zip(rep_mat, mj)]
                r = _rank_of(rows, m, add, mul, neg, inv)
                if r < best:
                    best = r
                    if best == 1:
                        return 1
    return best


def distance_distribution(code: RankCode, threads: int = 1) -> Dict[int, int]:
    """Histogram rank -> number of unordered pairs at that rank distance."""
    parts = _all_pairs(code, "hist", threads)
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    n = code.size
    if sum(total.values()) != n * (n - 1) // 2:
        raise RuntimeError("pair count mismatch in distance distribution")
    return dict(sorted(total.items()))


@dataclass(frozen=True)
class MrdReport:
    size: int
    singleton_bound: int
    claimed_distance: int
    min_distance: int
    mrd: bool
    mode: str

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "singleton_bound": self.singleton_bound,
            "claimed_distance": self.claimed_distance,
            "min_distance": self.min_distance,
            "mrd": self.mrd,
            "mode": self.mode,
        }


def verify_mrd(code: RankCode, mode: str = "auto", threads: int = 1) -> MrdReport:
    """Measure the code against the Singleton-like bound at its claimed
    distance: maximal size and exactly attained minimum distance."""
    if mode == "auto":
        mode = "orbit" if code.has_orbit_structure() else "bruteforce"
    bound = singleton_bound(code.q, code.m, code.claimed_distance)
    dmin = min_distance(code, mode=mode, threads=threads)
    return MrdReport(
        size=code.size,
        singleton_bound=bound,
        claimed_distance=code.claimed_distance,
        min_distance=dmin,
        mrd=(code.size == bound and dmin == code.claimed_distance),
        mode=mode,
    )


def linearity_witness(code: RankCode) -> Optional[Tuple[Word, Word, int]]:
    """A triple (w1, w2, c) with w1 + c*w2 outside the code, or None when
    the code is closed under the F_q-span of every pair (i.e. linear).

    The search first tries pairs of an A2 word with a pi-component word,
    the shape that witnesses non-linearity for the family codes, then falls
    back to the full closure scan.
    """
    ctx = code.ctx
    words = code.words
    scalars = ctx.fq_elems[1:]

    def scan(pairs) -> Optional[Tuple[Word, Word, int]]:
        for w1, w2 in pairs:
            for c in scalars:
                if word_add(ctx, w1, word_scale(ctx, c, w2)) not in words:
                    return (w1, w2, c)
        return None

    a2 = next((c for c in code.components if c.kind == "A2"), None)
    pis = [c for c in code.components if c.kind == "PI"]
    if a2 is not None:
        for comp in pis:
            hit = scan(
                (w1, w2)
                for w1 in sorted(a2.words)
                for w2 in sorted(comp.words)
            )
            if hit is not None:
                return hit
    ordered = sorted(words)
    return scan((w1, w2) for w1 in ordered for w2 in ordered)
