"""The Cossidente-Marino-Pavese (3, 3, q; 1) family and its identification
with the Dickson-model family.

The CMP construction lives on the plane curve X1 * X2^q - X3^(q+1) = 0 of
PG(2, q^3).  Its vector-side components are

* gamma(a): tuples (c, c x^(q+1), c x^q) over nonzero c and x of norm a,
* Z(b):     tuples (c x, -c beta x^q, 0) with beta of norm b,
* A1 = {(x, 0, 0)},  A2' = {(0, x, 0)},  and the zero tuple.

The coordinate permutation theta: (c1, c2, c3) -> (c2, c3, c1) with every
entry raised to the q^2 power carries gamma(a) onto pi(1/a), Z(b) onto
J(1/b), A1 onto A2 and A2' onto A1, so the theta-image of the CMP family
with parameter set I is exactly the Dickson-model family with parameter set
I^-1.  `verify_family_match` checks that as plain set equality and re-runs
the maximality verification on the image.

`verify_curve_splash` recomputes by brute force the exterior splash of a
gamma component on the line X3 = 0: it equals the norm fiber of -a^2, not
the Z(a) image (the two agree only at a = 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .gfield import FieldCtx
from .codes import (
    Component,
    MrdReport,
    RankCode,
    build_axis,
    build_family,
    fq_label,
    verify_mrd,
)
from .geometry import ProjPoint, exterior_splash, line_through, proj_image
from .linforms import Word, zero_word


def _require_plane(ctx: FieldCtx) -> None:
    if ctx.m != 3:
        raise ValueError("this construction needs m = 3")


def _check_param(ctx: FieldCtx, a: int) -> None:
    if a == 0:
        raise ValueError("parameter must be nonzero")
    if not ctx.in_fq(a):
        raise ValueError("parameter must lie in F_q")


def build_gamma(ctx: FieldCtx, a: int) -> FrozenSet[Word]:
    """Tuples (c, c x^(q+1), c x^q) over nonzero c and x in the norm fiber
    of a; size (q^3 - 1)^2 / (q - 1)."""
    _require_plane(ctx)
    _check_param(ctx, a)
    q = ctx.q
    mul, powf = ctx.mul, ctx.pow
    out = set()
    for x in ctx.norm_fiber(a):
        xq = powf(x, q)
        xq1 = mul(xq, x)
        for c in ctx.exp:
            out.add((c, mul(c, xq1), mul(c, xq)))
    expected = (ctx.order - 1) ** 2 // (q - 1)
    if len(out) != expected:
        raise RuntimeError("gamma component has unexpected size")
    return frozenset(out)


def build_Z(ctx: FieldCtx, b: int) -> FrozenSet[Word]:
    """Tuples (c x, -c beta x^q, 0) with beta the first norm-fiber element
    over b; size (q^3 - 1)^2 / (q - 1)."""
    _require_plane(ctx)
    _check_param(ctx, b)
    beta = ctx.norm_fiber(b)[0]
    q, s = ctx.q, ctx.subfield_index
    mul, powf, neg, exp = ctx.mul, ctx.pow, ctx.neg, ctx.exp
    out = set()
    for xi in range(s):
        x = exp[xi]
        tail = neg(mul(beta, powf(x, q - 1)))
        for u in exp:
            out.add((u, mul(u, tail), 0))
    expected = (ctx.order - 1) ** 2 // (q - 1)
    if len(out) != expected:
        raise RuntimeError("Z component has unexpected size")
    return frozenset(out)


def build_axis_mid(ctx: FieldCtx) -> FrozenSet[Word]:
    """A2': the tuples (0, x, 0)."""
    _require_plane(ctx)
    return frozenset((0, x, 0) for x in ctx.nonzero())


@dataclass(frozen=True)
class CmpFamily:
    """The curve-model family: gamma(a) for a in I, Z(b) for the remaining
    nonzero b, A1, A2' and zero; q^6 tuples in total."""

    ctx: FieldCtx
    I: Tuple[int, ...]
    components: Tuple[Tuple[str, Optional[int], FrozenSet[Word]], ...]
    words: FrozenSet[Word]

    @property
    def size(self) -> int:
        return len(self.words)


def build_cmp_family(ctx: FieldCtx, I: Sequence[int]) -> CmpFamily:
    _require_plane(ctx)
    if ctx.q <= 2:
        raise ValueError("q must exceed 2")
    iset = sorted(set(I), key=ctx.fq_index)
    if not iset:
        raise ValueError("I must be nonempty")
    for a in iset:
        if a in (0, 1) or not ctx.in_fq(a):
            raise ValueError("I must be a subset of F_q minus {0, 1}")
    comps: List[Tuple[str, Optional[int], FrozenSet[Word]]] = []
    for a in iset:
        comps.append(("GAMMA", a, build_gamma(ctx, a)))
    for b in [e for e in ctx.fq_elems[1:] if e not in set(iset)]:
        comps.append(("Z", b, build_Z(ctx, b)))
    comps.append(("A1", None, build_axis(ctx, 1)))
    comps.append(("A2P", None, build_axis_mid(ctx)))
    comps.append(("ZERO", None, frozenset([zero_word(ctx)])))
    words: Set[Word] = set()
    for _, _, ws in comps:
        if words & ws:
            raise RuntimeError("curve-family components overlap")
        words |= ws
    fam = CmpFamily(ctx, tuple(iset), tuple(comps), frozenset(words))
    if fam.size != ctx.q ** 6:
        raise RuntimeError("curve family has unexpected size")
    return fam


def theta(ctx: FieldCtx, v: Sequence[int]) -> Tuple[int, int, int]:
    """Semilinear map sending (c1, c2, c3) to (c2, c3, c1) with every
    coordinate raised to the q^2 power."""
    _require_plane(ctx)
    f = ctx.frobenius
    return (f(v[1], 2), f(v[2], 2), f(v[0], 2))


_THETA_KIND = {"GAMMA": "PI", "Z": "J", "A1": "A2", "A2P": "A1", "ZERO": "ZERO"}


def theta_image_code(ctx: FieldCtx, fam: CmpFamily) -> RankCode:
    """Apply theta tuplewise and retag: gamma(a) -> pi(1/a), Z(b) -> J(1/b),
    A1 <-> A2'.  The result carries orbit representatives, so the orbit
    distance mode applies."""
    from .codes import j_generator, pi_generator

    comps = []
    for kind, a, words in fam.components:
        mapped = frozenset(theta(ctx, w) for w in words)
        new_kind = _THETA_KIND[kind]
        if kind in ("GAMMA", "Z"):
            inv_a = ctx.inv(a)
            rep = pi_generator(ctx, inv_a) if new_kind == "PI" else j_generator(ctx, inv_a)
            comps.append(Component(new_kind, inv_a, mapped, rep))
        elif new_kind == "A1":
            comps.append(Component("A1", None, mapped, (1, 0, 0)))
        elif new_kind == "A2":
            comps.append(Component("A2", None, mapped, (0, 0, 1)))
        else:
            comps.append(Component("ZERO", None, mapped, zero_word(ctx)))
    order = {"PI": 0, "J": 1, "A1": 2, "A2": 3, "ZERO": 4}
    comps.sort(key=lambda c: (order[c.kind], ctx.fq_index(c.a) if c.a is not None else 0))
    return RankCode.assemble(ctx, 2, comps)


@dataclass(frozen=True)
class FamilyMatchReport:
    I: Tuple[str, ...]
    inverse_I: Tuple[str, ...]
    component_matches: Dict[str, bool]
    set_equal: bool
    mrd: MrdReport

    @property
    def ok(self) -> bool:
        return self.set_equal and all(self.component_matches.values()) and self.mrd.mrd

    def as_dict(self) -> dict:
        return {
            "I": list(self.I),
            "inverse_I": list(self.inverse_I),
            "component_matches": dict(self.component_matches),
            "set_equal": self.set_equal,
            "mrd": self.mrd.as_dict(),
            "ok": self.ok,
        }


def verify_family_match(ctx: FieldCtx, I: Sequence[int], threads: int = 1) -> FamilyMatchReport:
    """theta maps the curve family with parameter set I onto the
    Dickson-model family with parameter set I^-1, component by component;
    the image is independently re-verified as a maximal distance-2 code."""
    fam = build_cmp_family(ctx, I)
    image = theta_image_code(ctx, fam)
    inv_I = sorted((ctx.inv(a) for a in fam.I), key=ctx.fq_index)
    target = build_family(ctx, inv_I)
    by_tag_img = {c.tag(ctx): c.words for c in image.components}
    by_tag_tgt = {c.tag(ctx): c.words for c in target.components}
    matches = {
        tag: by_tag_img.get(tag) == by_tag_tgt.get(tag)
        for tag in sorted(set(by_tag_img) | set(by_tag_tgt))
    }
    report = verify_mrd(image, mode="orbit", threads=threads)
    return FamilyMatchReport(
        I=tuple(fq_label(ctx, a) for a in fam.I),
        inverse_I=tuple(fq_label(ctx, a) for a in inv_I),
        component_matches=matches,
        set_equal=image.words == target.words,
        mrd=report,
    )


# ----------------------------------------------------------------------
# the curve and the splash erratum
# ----------------------------------------------------------------------

def curve_equation_holds(ctx: FieldCtx, p: ProjPoint) -> bool:
    """X1 * X2^q - X3^(q+1) = 0 at the point."""
    q = ctx.q
    lhs = ctx.mul(p[0], ctx.pow(p[1], q))
    rhs = ctx.pow(p[2], q + 1)
    return lhs == rhs


def curve_points(ctx: FieldCtx) -> FrozenSet[ProjPoint]:
    """All points of PG(2, q^3) on the curve X1 * X2^q - X3^(q+1) = 0."""
    _require_plane(ctx)
    from .geometry import proj_points_iter

    return frozenset(p for p in proj_points_iter(ctx) if curve_equation_holds(ctx, p))


def norm_fiber_points_on_u(ctx: FieldCtx, value: int) -> FrozenSet[ProjPoint]:
    """{[(1, x, 0)] : N(x) = value} on the line X3 = 0."""
    return frozenset((1, x, 0) for x in ctx.norm_fiber(value))


@dataclass(frozen=True)
class CurveSplashReport:
    parameter: int
    splash_size: int
    expected_size: int
    splash_is_norm_fiber: bool
    expected_norm_value: str
    z_norm_value: str
    equals_z_image: bool
    theta_consistent: bool

    @property
    def ok(self) -> bool:
        # the splash must be the -a^2 norm fiber; it may equal the Z image
        # only when the two norm values coincide (a = 1)
        coincide = self.expected_norm_value == self.z_norm_value
        return (
            self.splash_size == self.expected_size
            and self.splash_is_norm_fiber
            and self.equals_z_image == coincide
            and self.theta_consistent
        )

    def as_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "splash_size": self.splash_size,
            "expected_size": self.expected_size,
            "splash_is_norm_fiber": self.splash_is_norm_fiber,
            "expected_norm_value": self.expected_norm_value,
            "z_norm_value": self.z_norm_value,
            "equals_z_image": self.equals_z_image,
            "theta_consistent": self.theta_consistent,
            "ok": self.ok,
        }


def verify_curve_splash(ctx: FieldCtx, a: int) -> CurveSplashReport:
    """Brute-force the exterior splash of the gamma(a) image on the line
    X3 = 0 and compare it with the norm fiber of -a^2 and with the Z(a)
    image; also check theta carries it onto the splash of the pi(1/a)
    image on the line X2 = 0."""
    _require_plane(ctx)
    _check_param(ctx, a)
    from .codes import build_pi

    u_line = line_through(ctx, (1, 0, 0), (0, 1, 0))
    gamma_img = proj_image(ctx, build_gamma(ctx, a))
    splash = exterior_splash(ctx, gamma_img, u_line)

    target = ctx.neg(ctx.mul(a, a))
    fiber_pts = norm_fiber_points_on_u(ctx, target)
    z_img = proj_image(ctx, build_Z(ctx, a))

    # theta side: splash of [pi(1/a)] on the theta-image of the line X3 = 0,
    # which is the line through (1,0,0) and (0,0,1)
    inv_a = ctx.inv(a)
    w_line = line_through(ctx, (1, 0, 0), (0, 0, 1))
    pi_img = proj_image(ctx, build_pi(ctx, inv_a))
    pi_splash = exterior_splash(ctx, pi_img, w_line)
    mapped = frozenset(
        tuple(x for x in _normalized_theta(ctx, p)) for p in splash
    )
    per = (ctx.order - 1) // (ctx.q - 1)
    return CurveSplashReport(
        parameter=a,
        splash_size=len(splash),
        expected_size=per,
        splash_is_norm_fiber=(splash == fiber_pts),
        expected_norm_value=fq_label(ctx, target),
        z_norm_value=fq_label(ctx, ctx.neg(a)),
        equals_z_image=(splash == z_img),
        theta_consistent=(mapped == pi_splash),
    )


def _normalized_theta(ctx: FieldCtx, p: ProjPoint) -> ProjPoint:
    from .geometry import proj_normalize

    return proj_normalize(ctx, theta(ctx, p))
