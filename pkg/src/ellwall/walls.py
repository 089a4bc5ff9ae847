"""Potential walls for pairs of Chern characters.

In the (s,q)-coordinates of a fixed frame (H, H^perp, w), potential walls
are semi-lines; for a fixed character of nonnegative discriminant with
nonzero rank they all pass through one point, and twisting both characters
by a line bundle transports walls by a closed-form point/slope shift.

In the (lambda,0,0,q)-plane cut out by the moving elliptic frame the wall
of a pair (e^L.(x,0,z), e^L.ch') has an exact rational q-value at every
rational lambda, and its lambda -> 0+ behaviour falls into finitely many
cases with explicit leading constants; both the evaluation and the
classification are implemented here, for two-dimensional (rank nonzero)
and one-dimensional (rank zero) characters.

All wall logic is exact rational arithmetic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .chern import ChernCharacter
from .errors import DomainError
from .nslattice import (
    DivisorClass,
    Frame,
    SurfaceConfig,
    _frac,
    decompose,
    elliptic_frame,
    intersect,
)

Rational = Union[int, Fraction]

LINE = "line"
VERTICAL = "vertical"
EVERYWHERE = "everywhere"
NOWHERE = "nowhere"


@dataclass(frozen=True)
class WallSQ:
    """A potential wall in the (s,q)-plane: a semi-line through `point`
    with `slope`, a vertical semi-line at `s`, or the degenerate
    everywhere/nowhere outcomes (first-class, not errors).  Semi-lines are
    understood restricted to q > s^2/2."""

    kind: str
    point: Optional[tuple] = None
    slope: Optional[Fraction] = None
    s: Optional[Fraction] = None

    def q_at(self, s: Rational) -> Fraction:
        if self.kind != LINE:
            raise DomainError("q_at is only defined for line walls")
        s = _frac(s)
        s0, q0 = self.point
        return self.slope * (s - s0) + q0

    def passes_through(self, s: Rational, q: Rational) -> bool:
        s, q = _frac(s), _frac(q)
        if self.kind == LINE:
            return q == self.q_at(s)
        if self.kind == VERTICAL:
            return s == self.s
        return self.kind == EVERYWHERE

    def same_wall(self, other: "WallSQ") -> bool:
        """Equality as subsets of the (s,q)-plane."""
        if self.kind != other.kind:
            return False
        if self.kind == LINE:
            return self.slope == other.slope and other.passes_through(*self.point)
        if self.kind == VERTICAL:
            return self.s == other.s
        return True


def _line(point, slope) -> WallSQ:
    return WallSQ(kind=LINE, point=point, slope=slope)


def _vertical(s) -> WallSQ:
    return WallSQ(kind=VERTICAL, s=s)


EVERYWHERE_WALL = WallSQ(kind=EVERYWHERE)
NOWHERE_WALL = WallSQ(kind=NOWHERE)


def _frame_data(ch: ChernCharacter, fr: Frame, cfg: SurfaceConfig):
    dec = decompose(ch.ch1, fr, cfg)
    return dec.l1, dec.l2, dec.residual


def bertram_wall(
    ch: ChernCharacter, ch_prime: ChernCharacter, fr: Frame, cfg: SurfaceConfig
) -> WallSQ:
    """The potential wall of the pair in the (s,q)-plane of the frame.

    For rank x != 0 the wall runs through the nesting point of ch; for
    x = 0 (requires ch1.H > 0) walls share the slope determined by ch and
    run through the anchor of ch'.
    """
    g, d, w = fr.g, fr.delta, fr.w
    x, z = ch.ch0, ch.ch2
    r, chi = ch_prime.ch0, ch_prime.ch2
    y1, y2, res = _frame_data(ch, fr, cfg)
    c1, c2, res_p = _frame_data(ch_prime, fr, cfg)

    if x != 0:
        F = d / g * (w - y2 / x) ** 2 + (y1 * y1 * g - y2 * y2 * d - 2 * x * z) / (x * x * g)
        point = (y1 / x, ((y1 / x) ** 2 - F) / 2)
        denom = x * c1 - r * y1
        if denom == 0:
            return _vertical(y1 / x)
        slope = (x * chi - r * z + w * d * (x * c2 - r * y2)) / (g * denom)
        return _line(point, slope)

    if y1 <= 0:
        raise DomainError("rank-zero wall needs ch1.H > 0, got %s" % (y1 * g,))
    if r == 0:
        # the cross product is constant in (s,q); the wall is everything or nothing
        const = (y1 * chi - c1 * z) + w * d * (c2 * y1 - y2 * c1)
        return EVERYWHERE_WALL if const == 0 else NOWHERE_WALL
    slope = (z + d * w * y2) / (g * y1)
    Fp = d / g * (w - c2 / r) ** 2 + (c1 * c1 * g - c2 * c2 * d - 2 * r * chi) / (r * r * g)
    point = (c1 / r, ((c1 / r) ** 2 - Fp) / 2)
    return _line(point, slope)


def shift_wall(
    ch: ChernCharacter,
    ch_prime: ChernCharacter,
    L: DivisorClass,
    fr: Frame,
    cfg: SurfaceConfig,
) -> WallSQ:
    """The wall of the pair (e^L.ch, e^L.ch') by the closed-form shifted
    point and slope; must agree exactly with twisting first and calling
    bertram_wall."""
    g, d, w = fr.g, fr.delta, fr.w
    x, z = ch.ch0, ch.ch2
    r, chi = ch_prime.ch0, ch_prime.ch2
    y1, y2, res = _frame_data(ch, fr, cfg)
    c1, c2, res_p = _frame_data(ch_prime, fr, cfg)
    l1, l2, res_L = _frame_data(
        ChernCharacter(0, L, 0), fr, cfg
    )
    dL2 = intersect(res_L, res_L, cfg)
    d_dL = intersect(res, res_L, cfg)
    dp_dL = intersect(res_p, res_L, cfg)

    if x != 0:
        denom = x * c1 - r * y1
        F = d / g * (w - y2 / x) ** 2 + (y1 * y1 * g - y2 * y2 * d - 2 * x * z) / (x * x * g)
        q_base = ((y1 / x) ** 2 - F) / 2
        point = (
            y1 / x + l1,
            q_base
            + l1 * l1 / 2
            + y1 / x * l1
            - d / (2 * g) * l2 * l2
            + d / g * (w - y2 / x) * l2
            + dL2 / (2 * g)
            + d_dL / (x * g),
        )
        if denom == 0:
            return _vertical(y1 / x + l1)
        slope = (
            (x * chi - r * z + w * d * (x * c2 - r * y2)) / (g * denom)
            + l1
            - l2 * (d / g) * (x * c2 - r * y2) / denom
            + (x * dp_dL - r * d_dL) / (g * denom)
        )
        return _line(point, slope)

    if y1 <= 0:
        raise DomainError("rank-zero wall needs ch1.H > 0, got %s" % (y1 * g,))
    if r == 0:
        # twisting leaves ch1, ch1' alone and shifts z, chi by L-pairings
        z_t = z + intersect(L, ch.ch1, cfg)
        chi_t = chi + intersect(L, ch_prime.ch1, cfg)
        const = (y1 * chi_t - c1 * z_t) + w * d * (c2 * y1 - y2 * c1)
        return EVERYWHERE_WALL if const == 0 else NOWHERE_WALL
    slope = (z + d * w * y2) / (g * y1) + l1 - l2 * (d / g) * (y2 / y1) + d_dL / (g * y1)
    Fp = d / g * (w - c2 / r) ** 2 + (c1 * c1 * g - c2 * c2 * d - 2 * r * chi) / (r * r * g)
    q_base = ((c1 / r) ** 2 - Fp) / 2
    point = (
        c1 / r + l1,
        q_base
        + l1 * l1 / 2
        + c1 / r * l1
        - d / (2 * g) * l2 * l2
        + d / g * (w - c2 / r) * l2
        + dL2 / (2 * g)
        + dp_dL / (r * g),
    )
    return _line(point, slope)


# ---------------------------------------------------------------------------
# (lambda,0,0,q)-plane walls and their lambda -> 0+ classification


@dataclass(frozen=True)
class FactoredCharacter:
    """A rank-nonzero character presented as e^L.(x, 0, z) with x*z <= 0
    (the twisted-to-primitive form every Bogomolov-type character admits)."""

    x: Fraction
    z: Fraction
    L: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "z", _frac(self.z))
        if self.x == 0:
            raise DomainError("factored character needs x != 0")
        if self.x * self.z > 0:
            raise DomainError("factored character needs x*z <= 0 (Bogomolov type)")


def reduce_by_twist(ch: ChernCharacter, cfg: SurfaceConfig) -> FactoredCharacter:
    """Present ch (with ch0 != 0) as e^L.(ch0, 0, ch2 - ch1^2/(2*ch0))."""
    if ch.ch0 == 0:
        raise DomainError("reduction needs ch0 != 0")
    L = ch.ch1.scale(Fraction(1) / ch.ch0)
    z = ch.ch2 - intersect(ch.ch1, ch.ch1, cfg) / (2 * ch.ch0)
    return FactoredCharacter(x=ch.ch0, z=z, L=L)


@dataclass(frozen=True)
class PartnerCharacter:
    """Destabilising partner data (r, k*Theta + p*f + sum xi_i*Theta_i, chi)."""

    r: Fraction
    k: Fraction
    p: Fraction
    xis: tuple = ()
    chi: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "k", _frac(self.k))
        object.__setattr__(self, "p", _frac(self.p))
        object.__setattr__(self, "xis", tuple(_frac(v) for v in self.xis))
        object.__setattr__(self, "chi", _frac(self.chi))

    def ch1(self, cfg: SurfaceConfig) -> DivisorClass:
        xis = self.xis if self.xis else (Fraction(0),) * (cfg.rank - 2)
        return cfg.divisor([self.k, self.p] + list(xis))


@dataclass(frozen=True)
class OneDimCharacter:
    """Rank-zero character (0, k*Theta + p*f + sum xi_i*Theta_i, z)."""

    k: Fraction
    p: Fraction
    z: Fraction
    xis: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "k", _frac(self.k))
        object.__setattr__(self, "p", _frac(self.p))
        object.__setattr__(self, "z", _frac(self.z))
        object.__setattr__(self, "xis", tuple(_frac(v) for v in self.xis))

    def ch1(self, cfg: SurfaceConfig) -> DivisorClass:
        xis = self.xis if self.xis else (Fraction(0),) * (cfg.rank - 2)
        return cfg.divisor([self.k, self.p] + list(xis))


@dataclass(frozen=True)
class OneDimPartner:
    """Rank-nonzero partner of a one-dimensional character, presented as
    e^L.(r, 0, chi)."""

    r: Fraction
    chi: Fraction
    L: DivisorClass

    def __post_init__(self):
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "chi", _frac(self.chi))
        if self.r == 0:
            raise DomainError("one-dimensional wall partner needs r != 0")


VALUE = "value"
NO_WALL = "no-wall"
POLE = "pole"


@dataclass(frozen=True)
class WallValue:
    """Outcome of evaluating a wall at one lambda: an exact q, the
    everywhere/no-wall degeneracies, or a pole marker at a denominator
    root (never interpolated)."""

    kind: str
    q: Optional[Fraction] = None


def _delta_classes(coeffs_extra, cfg: SurfaceConfig) -> DivisorClass:
    """sum_i c_i * Delta_i with Delta_i = Theta_i - Theta - (theta_i+e)*f,
    the lambda-independent residual of Theta_i in every elliptic frame."""
    total = cfg.zero()
    for i, c in enumerate(coeffs_extra):
        if c == 0:
            continue
        theta_i = cfg.sections[i].theta
        delta_i = cfg.extra_section(i + 1) - cfg.theta() - (theta_i + cfg.e) * cfg.fiber()
        total = total + c * delta_i
    return total


def _l_sums(L: DivisorClass, cfg: SurfaceConfig):
    a_L, b_L = L.coeffs[0], L.coeffs[1]
    etas = L.coeffs[2:]
    thetas = [Fraction(s.theta) for s in cfg.sections]
    sa = a_L + sum(etas, Fraction(0))
    sb = b_L - cfg.e * a_L + sum((et * th for et, th in zip(etas, thetas)), Fraction(0))
    return a_L, b_L, etas, sa, sb


def _partner_sums(k, p, xis, cfg: SurfaceConfig):
    thetas = [Fraction(s.theta) for s in cfg.sections]
    xis = list(xis) + [Fraction(0)] * (len(thetas) - len(xis))
    sk = k + sum(xis, Fraction(0))
    sp = p - cfg.e * k + sum((xi * th for xi, th in zip(xis, thetas)), Fraction(0))
    pe2 = p - Fraction(cfg.e) / 2 * k + sum(
        (xi * (th + Fraction(cfg.e) / 2) for xi, th in zip(xis, thetas)), Fraction(0)
    )
    return xis, sk, sp, pe2


@dataclass(frozen=True)
class AsymptoteClass:
    """lambda -> 0+ behaviour of a wall: family 'dim2' or 'dim1', the case
    tag, the exactly computed constants, and a readable leading term."""

    family: str
    case_tag: str
    constants: dict
    leading_term: str


def classify_asymptote_dim2(
    fc: FactoredCharacter, pc: PartnerCharacter, cfg: SurfaceConfig
) -> AsymptoteClass:
    x, z = fc.x, fc.z
    r, chi = pc.r, pc.chi
    a_L, b_L, etas, sa, sb = _l_sums(fc.L, cfg)
    xis, sk, sp, pe2 = _partner_sums(pc.k, pc.p, pc.xis, cfg)
    dL = _delta_classes(etas, cfg)
    dP = _delta_classes(xis, cfg)
    dL2 = intersect(dL, dL, cfg)
    dPdL = intersect(dP, dL, cfg)
    G = (x * chi - r * z) / x + dPdL

    if sk == 0 and sp == 0:
        if sa == 0 and sb == 0:
            return AsymptoteClass("dim2", "A1", {}, "everywhere (entire region q > 0)")
        return AsymptoteClass("dim2", "A2", {}, "no wall")
    if sk == 0:
        A = -(G + sa * pe2) * sa / sp
        B = z / x + dL2 / 2 - (sb + Fraction(cfg.e) / 2 * sa) * G / sp
        if A != 0:
            return AsymptoteClass("dim2", "B1", {"A": A, "B": B}, "q ~ A/(2*lambda^2)")
        if B != 0:
            return AsymptoteClass("dim2", "B2", {"A": A, "B": B}, "q ~ B/(2*lambda)")
        return AsymptoteClass("dim2", "B3", {"A": A, "B": B}, "bounded")
    D = z / x + dL2 / 2 - (G + sa * pe2) * sa / sk
    if D != 0:
        return AsymptoteClass("dim2", "C1", {"D": D}, "q ~ D/(2*lambda)")
    return AsymptoteClass("dim2", "C2", {"D": D}, "bounded")


def classify_asymptote_dim1(
    od: OneDimCharacter, pc: OneDimPartner, cfg: SurfaceConfig
) -> AsymptoteClass:
    a_L, b_L, etas, sa, sb = _l_sums(pc.L, cfg)
    xis, sk, sp, pe2 = _partner_sums(od.k, od.p, od.xis, cfg)
    if not (sk > 0 or (sk == 0 and sp > 0)):
        raise DomainError("one-dimensional character needs ch1.H_lambda > 0 for small lambda")
    dL = _delta_classes(etas, cfg)
    dC = _delta_classes(xis, cfg)
    dL2 = intersect(dL, dL, cfg)
    dCdL = intersect(dC, dL, cfg)
    G = od.z + dCdL

    if sk == 0:
        A = -(G + sa * pe2) * sa / sp
        B = pc.chi / pc.r + dL2 / 2 - (sb + Fraction(cfg.e) / 2 * sa) * G / sp
        if A != 0:
            return AsymptoteClass("dim1", "A1", {"A": A, "B": B}, "q ~ A/(2*lambda^2)")
        if B != 0:
            return AsymptoteClass("dim1", "A2", {"A": A, "B": B}, "q ~ B/(2*lambda)")
        return AsymptoteClass("dim1", "A3", {"A": A, "B": B}, "bounded")
    D = pc.chi / pc.r + dL2 / 2 - (G + sa * pe2) * sa / sk
    if D != 0:
        return AsymptoteClass("dim1", "B1", {"D": D}, "q ~ D/(2*lambda)")
    return AsymptoteClass("dim1", "B2", {"D": D}, "bounded")


def wall_lambda_q(
    fc: FactoredCharacter, pc: PartnerCharacter, lam: Rational, cfg: SurfaceConfig
) -> WallValue:
    """Exact q-value of the wall W(e^L.(x,0,z), e^L.ch') at this lambda in
    the (lambda,0,0,q)-plane (s = w = 0 throughout)."""
    lam = _frac(lam)
    if not 0 < lam < 1:
        raise DomainError("lambda must lie in (0,1), got %s" % lam)
    x, z = fc.x, fc.z
    r, chi = pc.r, pc.chi
    _, sk, sp, _ = _partner_sums(pc.k, pc.p, pc.xis, cfg)
    fr = elliptic_frame(lam, cfg)
    g = fr.g
    decL = decompose(fc.L, fr, cfg)
    l1, l2, resL = decL.l1, decL.l2, decL.residual
    decP = decompose(pc.ch1(cfg), fr, cfg)
    c1, c2, resP = decP.l1, decP.l2, decP.residual

    if sk == 0 and sp == 0:
        # c1 vanishes identically; the wall is the locus s = l1(lambda)
        return WallValue(EVERYWHERE) if l1 == 0 else WallValue(NO_WALL)
    if c1 == 0:
        return WallValue(POLE)
    dPdL = intersect(resP, resL, cfg)
    dL2 = intersect(resL, resL, cfg)
    q = (
        -((x * chi - r * z) / x + dPdL) * (l1 / c1) / g
        + l1 * l2 * (c1 + c2) / c1
        - (l1 + l2) ** 2 / 2
        + (z / x + dL2 / 2) / g
    )
    return WallValue(VALUE, q)


def wall_lambda_q_dim1(
    od: OneDimCharacter, pc: OneDimPartner, lam: Rational, cfg: SurfaceConfig
) -> WallValue:
    """Exact q-value at this lambda of the wall of a one-dimensional
    character against e^L.(r, 0, chi), solved directly from the central
    charge cross product."""
    lam = _frac(lam)
    if not 0 < lam < 1:
        raise DomainError("lambda must lie in (0,1), got %s" % lam)
    _, sk, sp, _ = _partner_sums(od.k, od.p, od.xis, cfg)
    if not (sk > 0 or (sk == 0 and sp > 0)):
        raise DomainError("one-dimensional character needs ch1.H_lambda > 0 for small lambda")
    fr = elliptic_frame(lam, cfg)
    ch1 = od.ch1(cfg)
    im_ch = intersect(ch1, fr.H, cfg)
    if im_ch == 0:
        return WallValue(POLE)
    z_eff = od.z + intersect(pc.L, ch1, cfg)
    chi_eff = pc.chi + pc.r * intersect(pc.L, pc.L, cfg) / 2
    gl1 = intersect(pc.L, fr.H, cfg)
    q = (chi_eff * im_ch - z_eff * pc.r * gl1) / (pc.r * fr.g * im_ch)
    return WallValue(VALUE, q)
