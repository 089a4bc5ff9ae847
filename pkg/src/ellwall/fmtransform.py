"""Cohomological Fourier-Mukai transforms of Chern characters.

With n = ch0, d = f.ch1, c = Theta.ch1, s = ch2, the pair of transforms
acts by

    fm_forward:  (n, ch1, s) -> (d, -ch1 + d*e*f + (d-n)*Theta + (c - e*d/2 + s)*f,
                                 -c - d*e + n*e/2)
    fm_backward: (n, ch1, s) -> (d, ch1 - n*e*f - (d+n)*Theta + (s + e*n - c - e*d/2)*f,
                                 -(c + d*e + e*n/2))

and composing the two in either order is multiplication by -1.  The
pullback of the fundamental divisor on the base is the class e*f, so the
base genus never enters.

The formulas are only written on the span of Theta and f; characters with
components along extra sections are rejected rather than silently
projected.
"""

from __future__ import annotations

from fractions import Fraction

from .chern import ChernCharacter
from .errors import DomainError
from .nslattice import SurfaceConfig, intersect


def _span_theta_f(ch: ChernCharacter, cfg: SurfaceConfig):
    if any(c != 0 for c in ch.ch1.coeffs[2:]):
        raise DomainError(
            "transform is only defined for ch1 in span{Theta, f}; "
            "components along extra sections present"
        )
    return ch.ch1.coeffs[0], ch.ch1.coeffs[1]


def phi(ch: ChernCharacter, cfg: SurfaceConfig) -> ChernCharacter:
    """The forward cohomological transform."""
    _span_theta_f(ch, cfg)
    e = Fraction(cfg.e)
    n, s = ch.ch0, ch.ch2
    d = intersect(cfg.fiber(), ch.ch1, cfg)
    c = intersect(cfg.theta(), ch.ch1, cfg)
    pad = [0] * (cfg.rank - 2)
    ch1 = -ch.ch1 + cfg.divisor([d - n, d * e + c - e * d / 2 + s] + pad)
    return ChernCharacter(d, ch1, -c - d * e + n * e / 2)


def phi_hat(ch: ChernCharacter, cfg: SurfaceConfig) -> ChernCharacter:
    """The backward cohomological transform (quasi-inverse up to [-1])."""
    _span_theta_f(ch, cfg)
    e = Fraction(cfg.e)
    n, s = ch.ch0, ch.ch2
    d = intersect(cfg.fiber(), ch.ch1, cfg)
    c = intersect(cfg.theta(), ch.ch1, cfg)
    pad = [0] * (cfg.rank - 2)
    ch1 = ch.ch1 + cfg.divisor([-(d + n), -n * e + s + e * n - c - e * d / 2] + pad)
    return ChernCharacter(d, ch1, -(c + d * e + e * n / 2))


def composition_check(ch: ChernCharacter, cfg: SurfaceConfig) -> bool:
    """True iff both composites act as negation on ch, exactly."""
    return phi_hat(phi(ch, cfg), cfg) == -ch and phi(phi_hat(ch, cfg), cfg) == -ch


def wit_sign(ch: ChernCharacter, which: str, functor: str, cfg: SurfaceConfig) -> bool:
    """Necessary sign condition for membership in the transform-exact
    classes: W0 forces f.ch1 >= 0, W1 forces f.ch1 <= 0 (either functor).

    Only consistency is reported; membership is a property of sheaves,
    not characters.
    """
    if which not in ("W0", "W1"):
        raise DomainError("which must be 'W0' or 'W1', got %r" % (which,))
    if functor not in ("phi", "phi_hat"):
        raise DomainError("functor must be 'phi' or 'phi_hat', got %r" % (functor,))
    d = intersect(cfg.fiber(), ch.ch1, cfg)
    return d >= 0 if which == "W0" else d <= 0
