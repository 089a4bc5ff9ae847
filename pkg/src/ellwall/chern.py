"""Chern-character arithmetic: twisting, slopes, discriminants,
twisted Euler characteristics and Bogomolov-type bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError
from .nslattice import DivisorClass, SurfaceConfig, _frac, intersect

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class ChernCharacter:
    """Triple (ch0, ch1, ch2) over exact rationals.

    ch2 is an arbitrary rational; lattice constraints (ch2 in Z/2 on a
    surface) are imposed only where enumeration needs discreteness.
    """

    ch0: Fraction
    ch1: DivisorClass
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch0", _frac(self.ch0))
        object.__setattr__(self, "ch2", _frac(self.ch2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2)

    def scale(self, k: Rational) -> "ChernCharacter":
        k = _frac(k)
        return ChernCharacter(k * self.ch0, self.ch1.scale(k), k * self.ch2)

    def is_zero(self) -> bool:
        return self.ch0 == 0 and self.ch2 == 0 and self.ch1.is_zero()

    # the (n, d, c, s) accessors used for transform formulas
    def n(self) -> Fraction:
        return self.ch0

    def d(self, cfg: SurfaceConfig) -> Fraction:
        return intersect(cfg.fiber(), self.ch1, cfg)

    def c(self, cfg: SurfaceConfig) -> Fraction:
        return intersect(cfg.theta(), self.ch1, cfg)

    def s(self) -> Fraction:
        return self.ch2


def character(ch0: Rational, ch1, ch2: Rational, cfg: SurfaceConfig) -> ChernCharacter:
    """Build a ChernCharacter, accepting ch1 as a DivisorClass or coefficient list."""
    if not isinstance(ch1, DivisorClass):
        ch1 = cfg.divisor(ch1)
    return ChernCharacter(_frac(ch0), ch1, _frac(ch2))


def twist(ch: ChernCharacter, B: DivisorClass, cfg: SurfaceConfig) -> ChernCharacter:
    """B-field twist ch^B = e^{-B}.ch."""
    return ChernCharacter(
        ch.ch0,
        ch.ch1 - ch.ch0 * B,
        ch.ch2 - intersect(B, ch.ch1, cfg) + intersect(B, B, cfg) / 2 * ch.ch0,
    )


def line_bundle_twist(ch: ChernCharacter, L: DivisorClass, cfg: SurfaceConfig) -> ChernCharacter:
    """Multiplication by e^{L} (tensoring by the line bundle of class L)."""
    return ChernCharacter(
        ch.ch0,
        ch.ch1 + ch.ch0 * L,
        ch.ch2 + intersect(L, ch.ch1, cfg) + intersect(L, L, cfg) / 2 * ch.ch0,
    )


class _PosInfinity:
    """Slope of rank-zero characters; compares above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+inf"

    def __eq__(self, other):
        return isinstance(other, _PosInfinity)

    def __hash__(self):
        return hash("ellwall-positive-infinity")

    def __gt__(self, other):
        return not isinstance(other, _PosInfinity)

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _PosInfinity)


POS_INFINITY = _PosInfinity()


def slope(ch: ChernCharacter, omega: DivisorClass, B: DivisorClass, cfg: SurfaceConfig):
    """Twisted slope mu_{omega,B} = omega.ch1^B/ch0, +inf on rank zero.

    omega is assumed ample; that is the caller's obligation (the nef/ample
    test only exists for rank 2 and slope values are defined regardless).
    """
    if ch.ch0 == 0:
        return POS_INFINITY
    tw = ch.ch1 - ch.ch0 * B
    return intersect(omega, tw, cfg) / ch.ch0


@dataclass(frozen=True)
class DiscriminantReport:
    delta: Fraction
    delta_bar: Fraction
    delta_C: Fraction
    constant_used: Fraction


def discriminants(
    ch: ChernCharacter,
    omega: DivisorClass,
    B: DivisorClass,
    C: Rational,
    cfg: SurfaceConfig,
) -> DiscriminantReport:
    """Delta = ch1^2 - 2*ch0*ch2, the omega-twisted Delta-bar, and
    Delta^C = Delta + C*(ch1^B.omega)^2."""
    C = _frac(C)
    delta = intersect(ch.ch1, ch.ch1, cfg) - 2 * ch.ch0 * ch.ch2
    tw = twist(ch, B, cfg)
    pair = intersect(tw.ch1, omega, cfg)
    omega2 = intersect(omega, omega, cfg)
    delta_bar = pair * pair - 2 * tw.ch0 * tw.ch2 * omega2
    delta_c = delta + C * pair * pair
    return DiscriminantReport(
        delta=delta, delta_bar=delta_bar, delta_C=delta_c, constant_used=C
    )


def is_bogomolov_type(ch: ChernCharacter, cfg: SurfaceConfig) -> bool:
    return intersect(ch.ch1, ch.ch1, cfg) - 2 * ch.ch0 * ch.ch2 >= 0


def bogomolov_constant(u0: Rational, cfg: SurfaceConfig) -> Fraction:
    """Effective-divisor constant C for omega_0 = u0*(Theta+mf)+v0*f on a
    rank-2 surface: C = e/(u0^2*(m-e)^2), valid for every v0 >= 0."""
    if cfg.rank != 2:
        raise DomainError("the constant is only derived for Picard rank 2")
    u0 = _frac(u0)
    if u0 <= 0:
        raise DomainError("u0 must be positive")
    if cfg.m <= cfg.e:
        raise DomainError("requires m > e")
    if cfg.e == 0:
        return Fraction(0)
    return Fraction(cfg.e) / (u0 * u0 * (cfg.m - cfg.e) ** 2)


def twisted_euler(ch: ChernCharacter, cfg: SurfaceConfig) -> Fraction:
    """chi_L = ch2 - (e/2)*ch1.f + ch0*chi(O_X)."""
    d = intersect(ch.ch1, cfg.fiber(), cfg)
    return ch.ch2 - Fraction(cfg.e) / 2 * d + ch.ch0 * cfg.euler_char


@dataclass(frozen=True)
class GiesekerSlope:
    """Twisted Gieseker slope of a 1-dimensional character, plus the
    beta-free normalisation (beta cancels in comparisons)."""

    slope: Fraction
    beta_free: Fraction


def gieseker_slope_1dim(ch: ChernCharacter, vp, cfg: SurfaceConfig) -> GiesekerSlope:
    """chi_L/(ch1.omega-bar) for omega-bar = (beta/alpha)*(Theta+mf)+beta*f."""
    if ch.ch0 != 0:
        raise DomainError("twisted Gieseker slope needs ch0 = 0")
    pad = [0] * (cfg.rank - 2)
    obar = cfg.divisor(
        [vp.beta / vp.alpha, vp.beta / vp.alpha * cfg.m + vp.beta] + pad
    )
    denom = intersect(ch.ch1, obar, cfg)
    if denom <= 0:
        raise DomainError("twisted Gieseker slope needs ch1.omega-bar > 0")
    chi = twisted_euler(ch, cfg)
    den_free = intersect(ch.ch1, cfg.theta_mf(), cfg) + vp.alpha * intersect(
        ch.ch1, cfg.fiber(), cfg
    )
    return GiesekerSlope(slope=chi / denom, beta_free=vp.alpha * chi / den_free)


def torsion_free_threshold(ch: ChernCharacter, m0: Rational, cfg: SurfaceConfig) -> Fraction:
    """Bound on alpha+m past which the transform of a 1-dimensional
    twisted-Gieseker-semistable character stays torsion-free:
    (ch1.Theta/ch1.f)*(chi_L - 1) + m0*chi_L."""
    if ch.ch0 != 0:
        raise DomainError("threshold is for 1-dimensional characters (ch0 = 0)")
    m0 = _frac(m0)
    d = intersect(ch.ch1, cfg.fiber(), cfg)
    if d <= 0:
        raise DomainError("threshold needs ch1.f > 0, got %s" % d)
    c = intersect(ch.ch1, cfg.theta(), cfg)
    chi = twisted_euler(ch, cfg)
    return c / d * (chi - 1) + m0 * chi
