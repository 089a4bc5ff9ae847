"""Finite enumeration of candidate destabilizing Chern characters along
the volume section, and the line-bundle chamber analysis.

For a target (x, lam*f, z) with x > 0, z <= 0 and lam a positive integer,
a destabilizing subobject A at omega_0 = u0*(Theta+mf)+v0*f on the volume
section must satisfy an explicit chain of inequalities (category bounds,
the wall sign constraint, Bogomolov-type discriminant bounds with the
rank-2 effective-divisor constant, and a Hodge-index bound coupling
ch1(A) to the wall ratio S).  Those constraints confine (ch0, ch1, ch2)
of A to a finite set once ch2 is restricted to a lattice (1/2)Z by
default); this module enumerates that set completely and records every
inequality per candidate.

The output is a superset of actual destabilizers by construction: no
claim of Bridgeland-wall actuality is made.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernCharacter, character
from .errors import DomainError, InvariantError, NonGenericError, UnsupportedRankError
from .fmtransform import phi_hat
from .nslattice import SurfaceConfig, VolumeSectionParams, _frac
from .walls import FactoredCharacter, PartnerCharacter, classify_asymptote_dim2

# checks that gate emission; the strict variants of the category bound are
# recorded but never gate (the caller filters on them as context demands)
GATING_CHECKS = (
    "6.1",
    "6.3",
    "rank_nonneg",
    "6.4",
    "6.5",
    "6.6",
    "6.8",
    "6.9",
    "6.12",
)


@dataclass(frozen=True)
class EnumerationRequest:
    """Target character, volume-section data, the sampled u0, and the
    denominator of the ch2 lattice (2 by default: ch2 in (1/2)Z)."""

    target: ChernCharacter
    vp: VolumeSectionParams
    u0: Fraction
    ch2_denominator: int = 2

    def __post_init__(self):
        object.__setattr__(self, "u0", _frac(self.u0))
        if self.ch2_denominator < 1:
            raise DomainError("ch2 denominator must be a positive integer")


@dataclass(frozen=True)
class CandidateReport:
    candidate: ChernCharacter
    complement: ChernCharacter
    S: Fraction
    checks: dict


@dataclass(frozen=True)
class _Context:
    """Everything the per-candidate checker needs, precomputed."""

    e: int
    m: Fraction
    K: Fraction
    x: Fraction
    lam: Fraction
    z: Fraction
    u0: Fraction
    v0: Fraction
    f_om: Fraction   # f.omega_0
    th_om: Fraction  # Theta.omega_0
    den: int
    bog: Fraction    # e/(m-e)^2


def _build_context(req: EnumerationRequest, cfg: SurfaceConfig) -> _Context:
    if cfg.rank != 2:
        raise UnsupportedRankError("destabilizer enumeration requires Picard rank 2")
    t = req.target
    x, z = t.ch0, t.ch2
    if x <= 0 or x.denominator != 1:
        raise DomainError("target needs ch0 a positive integer, got %s" % x)
    coeffs = t.ch1.coeffs
    if coeffs[0] != 0 or any(c != 0 for c in coeffs[2:]):
        raise DomainError("target needs ch1 a positive multiple of the fiber class")
    lam = coeffs[1]
    if lam <= 0 or lam.denominator != 1:
        raise DomainError("target needs ch1 = lam*f with lam a positive integer")
    if z > 0:
        raise DomainError("target needs ch2 <= 0, got %s" % z)
    if (z * req.ch2_denominator).denominator != 1:
        raise DomainError("target ch2 not on the configured lattice")
    K = req.vp.K
    if K <= 0:
        raise DomainError("enumeration needs K = alpha+m-e > 0, got %s" % K)
    u0 = req.u0
    if u0 <= 0:
        raise DomainError("u0 must be positive")
    if u0 * u0 >= 4 * K:
        raise DomainError("u0^2 >= 4K")
    v0 = (K - (cfg.m - Fraction(cfg.e) / 2) * u0 * u0) / u0
    if v0 <= 0:
        raise DomainError("u0 too large: the volume section point has v0 <= 0")
    return _Context(
        e=cfg.e,
        m=cfg.m,
        K=K,
        x=x,
        lam=lam,
        z=z,
        u0=u0,
        v0=v0,
        f_om=u0,
        th_om=u0 * (cfg.m - cfg.e) + v0,
        den=req.ch2_denominator,
        bog=Fraction(cfg.e) / (cfg.m - cfg.e) ** 2,
    )


def _candidate_checks(ctx: _Context, r: Fraction, gamma: int, eta: int, c2: Fraction) -> dict:
    e, K, x, lam, z = ctx.e, ctx.K, ctx.x, ctx.lam, ctx.z
    ch1A_om = eta * ctx.f_om + gamma * ctx.th_om
    chE_om = lam * ctx.f_om
    ch1A_sq = (2 * eta - e * gamma) * gamma
    S = (c2 - r * K) / (z - x * K)

    checks = {
        "6.1": 0 <= ch1A_om <= chE_om,
        "6.1_strict_lower": 0 < ch1A_om,
        "6.1_strict_upper": ch1A_om < chE_om,
        "6.3": z - x * K < c2 - r * K < 0,
        "rank_nonneg": r >= 0,
        "6.6": z - x * K + r * K < c2 < lam * lam,
        "6.9": ch1A_sq <= 2 * S * lam * gamma,
        "6.8": ch1A_sq - 2 * r * c2 >= -ctx.bog * S * S * lam * lam,
    }
    if r >= 1:
        delta_bar = ch1A_om * ch1A_om - 4 * K * r * c2
        checks["6.4"] = delta_bar >= 0
        checks["6.5"] = c2 < lam * lam * ctx.u0 * ctx.u0 / (4 * K * r)
    else:
        checks["6.4"] = True
        checks["6.5"] = True
    if gamma >= 1:
        rB = x - r
        c2B = z - c2
        ch1B_sq = -gamma * (2 * (lam - eta) + e * gamma)
        Sp = (c2B - rB * K) / (z - x * K)
        checks["6.12"] = (
            -ctx.bog * Sp * Sp * lam * lam + 2 * rB * c2B <= ch1B_sq <= 0
        )
    else:
        checks["6.12"] = True
    return checks


def candidate_checks(
    req: EnumerationRequest, cfg: SurfaceConfig, candidate: ChernCharacter
) -> dict:
    """Named inequality checks for an arbitrary candidate character of the
    form (r, eta*f + gamma*Theta, c2) with integer r, gamma, eta."""
    ctx = _build_context(req, cfg)
    r = candidate.ch0
    gamma, eta = candidate.ch1.coeffs[0], candidate.ch1.coeffs[1]
    if any(v.denominator != 1 for v in (r, gamma, eta)):
        raise DomainError("candidate needs integer rank and ch1 coefficients")
    if (candidate.ch2 * ctx.den).denominator != 1:
        raise DomainError("candidate ch2 not on the configured lattice")
    return _candidate_checks(ctx, r, int(gamma), int(eta), candidate.ch2)


def _sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0."""
    if x < 0:
        raise InvariantError("sqrt of negative value")
    n = -(-x.numerator // x.denominator)  # ceil(x)
    return Fraction(math.isqrt(n) + 1)


def _lattice_points(lo: Fraction, hi: Fraction, den: int):
    """Integers j with lo < j/den < hi, yielded as Fractions j/den."""
    j = math.floor(lo * den) + 1
    while Fraction(j, den) < hi:
        if Fraction(j, den) > lo:
            yield Fraction(j, den)
        j += 1


def _pairs(ctx: _Context):
    """The finitely many (r, ch2) pairs allowed by the sign constraint,
    the combined bound and the rank-positive ch2 bound."""
    K, x, lam, z = ctx.K, ctx.x, ctx.lam, ctx.z
    out = []
    r = 0
    while z - x * K + r * K < lam * lam:
        lo = z - x * K + r * K
        hi = min(r * K, lam * lam)
        if r >= 1:
            hi = min(hi, lam * lam * ctx.u0 * ctx.u0 / (4 * K * r))
        for c2 in _lattice_points(lo, hi, ctx.den):
            out.append((r, c2))
        r += 1
    return out


def _gamma_bound(ctx: _Context, r: int, c2: Fraction) -> int:
    """Upper bound for |gamma| over candidates with this (r, ch2) pair.

    Writing eta = -gamma*T + theta with theta in [0, lam] (the category
    bound) gives ch1(A)^2 = -(2K/u0^2)*gamma^2 + 2*gamma*theta, so the
    discriminant bound (2K/u0^2)*gamma^2 - 2*gamma*theta + C8 <= 0 with
    C8 = 2*r*ch2 - bog*S^2*lam^2 confines |gamma| under lam/a + sqrt(...)."""
    S = (c2 - r * ctx.K) / (ctx.z - ctx.x * ctx.K)
    c8 = 2 * r * c2 - ctx.bog * S * S * ctx.lam * ctx.lam
    a2 = 2 * ctx.K / (ctx.u0 * ctx.u0)
    disc = ctx.lam * ctx.lam - a2 * c8
    if disc < 0:
        return -1  # even gamma = 0 is infeasible
    bound = (ctx.lam + _sqrt_upper(disc)) / a2
    return math.floor(bound)


def _eta_window(ctx: _Context, gamma: int):
    """Integers eta with 0 <= ch1(A).omega_0 <= lam*u0, i.e.
    eta in [-gamma*T, lam - gamma*T] with T = K/u0^2 - e/2."""
    T = ctx.K / (ctx.u0 * ctx.u0) - Fraction(ctx.e) / 2
    lo = -gamma * T
    hi = ctx.lam - gamma * T
    return range(math.ceil(lo), math.floor(hi) + 1)


def _reports_for_pairs(req: EnumerationRequest, cfg: SurfaceConfig, pairs):
    ctx = _build_context(req, cfg)
    out = []
    for r, c2 in pairs:
        gmax = _gamma_bound(ctx, r, c2)
        for gamma in range(-gmax, gmax + 1):
            for eta in _eta_window(ctx, gamma):
                checks = _candidate_checks(ctx, Fraction(r), gamma, eta, c2)
                if all(checks[name] for name in GATING_CHECKS):
                    cand = character(r, [gamma, eta], c2, cfg)
                    out.append(
                        CandidateReport(
                            candidate=cand,
                            complement=req.target - cand,
                            S=(c2 - r * ctx.K) / (ctx.z - ctx.x * ctx.K),
                            checks=checks,
                        )
                    )
    return out


def _sort_key(rep: CandidateReport):
    c = rep.candidate
    return (c.ch0, c.ch1.coeffs[0], c.ch1.coeffs[1], c.ch2)


def enumerate_destabilizers(
    req: EnumerationRequest, cfg: SurfaceConfig, jobs: int = 1
) -> list:
    """The complete finite list of candidate destabilizers, sorted
    lexicographically by (rank, gamma, eta, ch2).  The (r, ch2) outer loop
    may run on `jobs` processes; output order is input-determined."""
    ctx = _build_context(req, cfg)
    pairs = _pairs(ctx)
    if jobs > 1 and len(pairs) > 1:
        chunks = [pairs[i::jobs] for i in range(jobs) if pairs[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            results = pool.map(_reports_for_pairs, [req] * len(chunks), [cfg] * len(chunks), chunks)
        reports = [rep for chunk in results for rep in chunk]
    else:
        reports = _reports_for_pairs(req, cfg, pairs)
    reports.sort(key=_sort_key)
    return reports


@dataclass(frozen=True)
class LineBundleReport:
    """Chamber data for the line bundle of class a_L*Theta: the unique
    wall's asymptote constant D, the section constant K, which side of the
    wall the section ends up on for small lambda, and the predicted rank
    of the backward transform."""

    a_L: int
    D: Fraction
    K: Fraction
    generic: bool
    side: str
    transform_rank: int
    case_tag: str


def line_bundle_analysis(
    a_L: int, vp: VolumeSectionParams, cfg: SurfaceConfig
) -> LineBundleReport:
    if cfg.rank != 2:
        raise UnsupportedRankError("line-bundle analysis requires Picard rank 2")
    if cfg.e <= 0:
        raise DomainError("line-bundle analysis requires e > 0")
    if a_L < 2:
        raise DomainError("fiber degree a_L must be an integer >= 2")
    pad = [0] * (cfg.rank - 2)
    fc = FactoredCharacter(x=Fraction(1), z=Fraction(0), L=cfg.divisor([a_L, 0] + pad))
    pc = PartnerCharacter(r=1, k=-1, p=0, xis=(), chi=-Fraction(cfg.e) / 2)
    ac = classify_asymptote_dim2(fc, pc, cfg)
    if ac.case_tag != "C1":
        raise InvariantError("expected a single C1 wall, got %s" % ac.case_tag)
    D = ac.constants["D"]
    if D != Fraction(cfg.e) / 2 * a_L * (a_L - 1):
        raise InvariantError("wall constant mismatch: %s" % D)
    if vp.K == D:
        raise NonGenericError(
            "alpha+m-e equals (e/2)*a_L*(a_L-1); the section may ride the wall"
        )
    side = "above" if vp.K > D else "below"
    line_char = character(1, [a_L, 0] + pad, -Fraction(cfg.e) * a_L * a_L / 2, cfg)
    tr = phi_hat(line_char, cfg)
    if tr.ch0 != a_L:
        raise InvariantError("transform rank %s != a_L" % tr.ch0)
    return LineBundleReport(
        a_L=a_L,
        D=D,
        K=vp.K,
        generic=True,
        side=side,
        transform_rank=a_L,
        case_tag=ac.case_tag,
    )
