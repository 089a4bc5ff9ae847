"""Neron-Severi lattice of a Weierstrass elliptic surface.

Basis is (Theta, f, Theta_1, ..., Theta_r): the chosen section, the fiber
class, and any extra sections.  The intersection form is determined by
Theta^2 = Theta_i^2 = -e, Theta.f = Theta_i.f = 1, f^2 = 0, Theta.Theta_i
= theta_i >= 0, with pairwise Theta_i.Theta_j supplied by configuration.

Everything is exact: coefficients are `fractions.Fraction`, no floats.
All values are immutable after construction and all operations are pure
functions, so they are safe to share across threads.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DimensionError,
    DomainError,
    EmptySectionError,
    InvariantError,
    UnsupportedRankError,
)

Rational = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise DomainError("floats are rejected to preserve exactness: %r" % (x,))
    return Fraction(x)


@dataclass(frozen=True)
class ExtraSection:
    """An extra section Theta_i: theta = Theta.Theta_i, cross[j] = Theta_i.Theta_j
    for each earlier extra section j (length i-1)."""

    theta: int
    cross: tuple = ()

    def __post_init__(self):
        if self.theta < 0:
            raise DomainError("Theta.Theta_i must be >= 0, got %d" % self.theta)
        object.__setattr__(self, "cross", tuple(int(c) for c in self.cross))


@dataclass(frozen=True)
class SurfaceConfig:
    """Numeric model of the surface: e = -Theta^2, base genus, the ample
    offset m (Theta + m*f ample), chi(O_X), and extra-section data.

    euler_char defaults to e; that default is a derived value for a
    Weierstrass fibration, not configuration-free, so it can be overridden.
    """

    e: int
    genus_base: int = 0
    m: Fraction = Fraction(0)
    euler_char: Fraction = None  # type: ignore[assignment]
    sections: tuple = ()
    _gram: tuple = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self):
        if self.e < 0:
            raise DomainError("e must be a nonnegative integer, got %r" % (self.e,))
        if self.genus_base < 0:
            raise DomainError("base genus must be >= 0")
        m = _frac(self.m)
        if m <= 0:
            raise DomainError("m must be positive, got %s" % (m,))
        object.__setattr__(self, "m", m)
        sections = tuple(
            s if isinstance(s, ExtraSection) else ExtraSection(**s) for s in self.sections
        )
        object.__setattr__(self, "sections", sections)
        if self.rank == 2 and m <= self.e:
            raise DomainError(
                "rank-2 ampleness of Theta+mf requires m > e (m=%s, e=%d)" % (m, self.e)
            )
        chi = Fraction(self.e) if self.euler_char is None else _frac(self.euler_char)
        object.__setattr__(self, "euler_char", chi)
        object.__setattr__(self, "_gram", self._build_gram())

    @property
    def rank(self) -> int:
        return 2 + len(self.sections)

    def _build_gram(self):
        n = self.rank
        e = Fraction(self.e)
        g = [[Fraction(0)] * n for _ in range(n)]
        g[0][0] = -e
        g[0][1] = g[1][0] = Fraction(1)
        g[1][1] = Fraction(0)
        defaulted = False
        for i, sec in enumerate(self.sections):
            k = 2 + i
            g[0][k] = g[k][0] = Fraction(sec.theta)
            g[1][k] = g[k][1] = Fraction(1)
            g[k][k] = -e
            for j in range(i):
                if j < len(sec.cross):
                    val = Fraction(sec.cross[j])
                else:
                    val = Fraction(0)
                    defaulted = True
                g[k][2 + j] = g[2 + j][k] = val
        if defaulted:
            warnings.warn(
                "Theta_i.Theta_j not configured for some pair; defaulting to 0",
                stacklevel=3,
            )
        return tuple(tuple(row) for row in g)

    # basis helpers
    def divisor(self, coeffs: Sequence[Rational]) -> "DivisorClass":
        coeffs = tuple(_frac(c) for c in coeffs)
        if len(coeffs) != self.rank:
            raise DimensionError(
                "expected %d coefficients, got %d" % (self.rank, len(coeffs))
            )
        return DivisorClass(coeffs)

    def zero(self) -> "DivisorClass":
        return DivisorClass((Fraction(0),) * self.rank)

    def theta(self) -> "DivisorClass":
        return self.divisor([1] + [0] * (self.rank - 1))

    def fiber(self) -> "DivisorClass":
        return self.divisor([0, 1] + [0] * (self.rank - 2))

    def extra_section(self, i: int) -> "DivisorClass":
        if not 1 <= i <= len(self.sections):
            raise DimensionError("no extra section Theta_%d" % i)
        c = [0] * self.rank
        c[1 + i] = 1
        return self.divisor(c)

    def theta_mf(self) -> "DivisorClass":
        """The polarising direction Theta + m*f."""
        return self.divisor([1, self.m] + [0] * (self.rank - 2))


@dataclass(frozen=True)
class DivisorClass:
    """Rational vector in NS(X) over the basis (Theta, f, Theta_1, ...)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def scale(self, k: Rational) -> "DivisorClass":
        k = _frac(k)
        return DivisorClass(tuple(k * a for a in self.coeffs))

    def __rmul__(self, k):
        return self.scale(k)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "DivisorClass"):
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionError(
                "mixed bases: %d vs %d coefficients"
                % (len(self.coeffs), len(other.coeffs))
            )

    def dot(self, other: "DivisorClass", cfg: SurfaceConfig) -> Fraction:
        return intersect(self, other, cfg)


def intersect(a: DivisorClass, b: DivisorClass, cfg: SurfaceConfig) -> Fraction:
    """Symmetric bilinear intersection pairing on NS(X)."""
    n = cfg.rank
    if len(a.coeffs) != n or len(b.coeffs) != n:
        raise DimensionError(
            "divisor/config basis mismatch: %d and %d coefficients vs rank %d"
            % (len(a.coeffs), len(b.coeffs), n)
        )
    gram = cfg._gram
    total = Fraction(0)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        row = gram[i]
        for j, bj in enumerate(b.coeffs):
            if bj != 0:
                total += ai * bj * row[j]
    return total


@dataclass(frozen=True)
class ConeMembership:
    nef: bool
    ample: bool
    effective_curve_cone: bool


def cone_membership(D: DivisorClass, cfg: SurfaceConfig) -> ConeMembership:
    """Positivity cones for rank 2: Nef(X) = cone(Theta+ef, f), Mori cone
    = cone(f, Theta).  Ample is the interior of the nef cone."""
    if cfg.rank != 2:
        raise UnsupportedRankError(
            "cone tests are only available for Picard rank 2 surfaces"
        )
    a, b = D.coeffs  # D = a*Theta + b*f
    e = cfg.e
    nef = a >= 0 and b >= a * e
    ample = a > 0 and b > a * e
    mori = a >= 0 and b >= 0
    return ConeMembership(nef=nef, ample=ample, effective_curve_cone=mori)


@dataclass(frozen=True)
class Frame:
    """A triple (H, H^perp, w) with H.H^perp = 0, g = H.H > 0,
    delta = -(H^perp)^2 >= 0 (zero exactly when H^perp = 0)."""

    H: DivisorClass
    Hperp: DivisorClass
    w: Fraction
    g: Fraction
    delta: Fraction


def make_frame(
    H: DivisorClass, Hperp: DivisorClass, w: Rational, cfg: SurfaceConfig
) -> Frame:
    w = _frac(w)
    g = intersect(H, H, cfg)
    delta = -intersect(Hperp, Hperp, cfg)
    if intersect(H, Hperp, cfg) != 0:
        raise DomainError("frame requires H.H^perp = 0")
    if g <= 0:
        raise DomainError("frame requires H.H > 0, got %s" % g)
    if delta < 0:
        raise InvariantError("Hodge index violated: -(H^perp)^2 = %s < 0" % delta)
    if (delta == 0) != Hperp.is_zero():
        raise DomainError("delta = 0 must coincide with H^perp = 0")
    if cfg.rank == 2 and not cone_membership(H, cfg).ample:
        raise DomainError("frame requires H ample")
    return Frame(H=H, Hperp=Hperp, w=w, g=g, delta=delta)


def elliptic_frame(lam: Rational, cfg: SurfaceConfig) -> Frame:
    """Frame (H_lam, H_lam^perp, 0) spanned by the polarising direction:
    H_lam = lam*(Theta+mf) + (1-lam)*f, with g = delta = 2*lam*(1+(m-e/2-1)*lam)."""
    lam = _frac(lam)
    if not 0 < lam < 1:
        raise DomainError("lambda must lie in (0,1), got %s" % lam)
    m, e = cfg.m, Fraction(cfg.e)
    pad = [0] * (cfg.rank - 2)
    H = cfg.divisor([lam, lam * m + 1 - lam] + pad)
    Hperp = cfg.divisor([-lam, 1 + (m - e - 1) * lam] + pad)
    fr = make_frame(H, Hperp, 0, cfg)
    expected = 2 * lam * (1 + (m - e / 2 - 1) * lam)
    if fr.g != expected or fr.delta != expected:
        raise InvariantError("elliptic frame norm mismatch at lambda=%s" % lam)
    return fr


@dataclass(frozen=True)
class FrameDecomposition:
    """D = l1*H + l2*H^perp + residual with residual orthogonal to both."""

    l1: Fraction
    l2: Fraction
    residual: DivisorClass


def decompose(D: DivisorClass, fr: Frame, cfg: SurfaceConfig) -> FrameDecomposition:
    l1 = intersect(D, fr.H, cfg) / fr.g
    if fr.delta > 0:
        l2 = -intersect(D, fr.Hperp, cfg) / fr.delta
    else:
        l2 = Fraction(0)
    residual = D - l1 * fr.H - l2 * fr.Hperp
    return FrameDecomposition(l1=l1, l2=l2, residual=residual)


# ---------------------------------------------------------------------------
# stability-parameter points and coordinate changes


@dataclass(frozen=True)
class UV:
    """Polarisation omega = u*(Theta+mf) + v*f with u, v > 0."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        u, v = _frac(self.u), _frac(self.v)
        if u <= 0 or v <= 0:
            raise DomainError("UV point requires u, v > 0")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class LambdaT:
    """omega = t*H_lambda with 0 < lambda < 1 and t > 0."""

    lam: Fraction
    t: Fraction

    def __post_init__(self):
        lam, t = _frac(self.lam), _frac(self.t)
        if not 0 < lam < 1:
            raise DomainError("lambda must lie in (0,1)")
        if t <= 0:
            raise DomainError("t must be positive")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class SQ:
    """(s,q)-coordinates in a fixed frame; q > s^2/2 strictly."""

    s: Fraction
    q: Fraction

    def __post_init__(self):
        s, q = _frac(self.s), _frac(self.q)
        if q <= s * s / 2:
            raise DomainError("SQ point requires q > s^2/2")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class LambdaQ:
    """A point of the (lambda,0,0,q)-plane (s = w = 0)."""

    lam: Fraction
    q: Fraction


def uv_to_lambda_t(p: UV) -> LambdaT:
    return LambdaT(lam=p.u / (p.u + p.v), t=p.u + p.v)


def lambda_t_to_uv(p: LambdaT) -> UV:
    return UV(u=p.t * p.lam, v=p.t * (1 - p.lam))


def to_lambda_q(p: UV) -> LambdaQ:
    """(u,v) -> (lambda, q) with lambda = u/(u+v), q = (u+v)^2/2 (B = 0, s = 0)."""
    t = p.u + p.v
    return LambdaQ(lam=p.u / t, q=t * t / 2)


@dataclass(frozen=True)
class ShearPoint:
    """Image of (u,v) under the unit-determinant shear fixing u."""

    u_prime: Fraction
    v_prime: Fraction


def shear(p: UV, cfg: SurfaceConfig) -> ShearPoint:
    """v' = v + (m - e/2)*u, u' = u; on the volume section u'v' = alpha+m-e."""
    return ShearPoint(u_prime=p.u, v_prime=p.v + (cfg.m - Fraction(cfg.e) / 2) * p.u)


def unshear(p: ShearPoint, cfg: SurfaceConfig) -> UV:
    return UV(u=p.u_prime, v=p.v_prime - (cfg.m - Fraction(cfg.e) / 2) * p.u_prime)


# ---------------------------------------------------------------------------
# volume section


@dataclass(frozen=True)
class VolumeSectionParams:
    """alpha scales the slope-side polarisation, beta only rescales it;
    K = alpha + m - e is the constant omega^2/2 along the section."""

    alpha: Fraction
    beta: Fraction
    K: Fraction


def volume_params(alpha: Rational, cfg: SurfaceConfig, beta: Rational = 1) -> VolumeSectionParams:
    alpha, beta = _frac(alpha), _frac(beta)
    if alpha <= 0 or beta <= 0:
        raise DomainError("alpha and beta must be positive")
    return VolumeSectionParams(alpha=alpha, beta=beta, K=alpha + cfg.m - cfg.e)


@dataclass(frozen=True)
class QuadraticRoot:
    """The positive root of a*u^2 + b*u + c = 0 (integer coefficients,
    a > 0, c < 0) when it is irrational, with a rational bracket."""

    a: int
    b: int
    c: int
    lo: Fraction
    hi: Fraction

    def _eval(self, u: Fraction) -> Fraction:
        return (self.a * u + self.b) * u + self.c

    def enclosure(self, width: Rational) -> tuple:
        """Shrink the bracket by bisection until hi - lo <= width."""
        width = _frac(width)
        if width <= 0:
            raise DomainError("enclosure width must be positive")
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if self._eval(mid) < 0:
                lo = mid
            else:
                hi = mid
        return (lo, hi)

    def midpoint(self, width: Rational = Fraction(1, 10**24)) -> Fraction:
        lo, hi = self.enclosure(width)
        return (lo + hi) / 2

    def __float__(self) -> float:
        d = self.b * self.b - 4 * self.a * self.c
        return (-self.b + math.sqrt(d)) / (2 * self.a)


def volume_section_u(v: Rational, vp: VolumeSectionParams, cfg: SurfaceConfig):
    """The unique u > 0 with (m - e/2)*u^2 + u*v = K.

    Returns a Fraction when the root is rational, otherwise a
    QuadraticRoot carrying the exact integer quadratic and a bracket.
    """
    v = _frac(v)
    if vp.K <= 0:
        raise EmptySectionError("empty volume section: K = %s <= 0" % vp.K)
    if v <= 0:
        raise DomainError("v must be positive")
    a = cfg.m - Fraction(cfg.e) / 2
    if a == 0:
        return vp.K / v
    if a < 0:
        raise DomainError(
            "volume section requires m >= e/2 for a unique positive root"
        )
    # clear denominators: A*u^2 + B*u + C = 0 with integer coefficients
    den = math.lcm(a.denominator, v.denominator, vp.K.denominator)
    A = a.numerator * (den // a.denominator)
    B = v.numerator * (den // v.denominator)
    C = -vp.K.numerator * (den // vp.K.denominator)
    disc = B * B - 4 * A * C
    s = math.isqrt(disc)
    if s * s == disc:
        u = Fraction(-B + s, 2 * A)
        if u <= 0:
            raise InvariantError("positive root expected, got %s" % u)
        return u
    return QuadraticRoot(a=A, b=B, c=C, lo=Fraction(0), hi=vp.K / v)


def section_q(lam: Rational, vp: VolumeSectionParams, cfg: SurfaceConfig) -> Fraction:
    """Exact q with (lambda, q) on the volume section: 2q*(lam+(m-e/2-1)*lam^2) = K."""
    lam = _frac(lam)
    if not 0 < lam < 1:
        raise DomainError("lambda must lie in (0,1)")
    if vp.K <= 0:
        raise EmptySectionError("empty volume section: K = %s <= 0" % vp.K)
    g = 2 * lam * (1 + (cfg.m - Fraction(cfg.e) / 2 - 1) * lam)
    if g <= 0:
        raise DomainError("H_lambda fails to be positive at lambda=%s" % lam)
    return vp.K / g


def uv_on_section(u: Rational, vp: VolumeSectionParams, cfg: SurfaceConfig) -> UV:
    """Point of the volume section with the given rational u-coordinate."""
    u = _frac(u)
    if u <= 0:
        raise DomainError("u must be positive")
    if vp.K <= 0:
        raise EmptySectionError("empty volume section: K = %s <= 0" % vp.K)
    a = cfg.m - Fraction(cfg.e) / 2
    v = (vp.K - a * u * u) / u
    if v <= 0:
        raise DomainError("u=%s lies beyond the v > 0 part of the section" % u)
    return UV(u=u, v=v)
