"""Shared builders for the test suite."""

from fractions import Fraction

import ellwall as ew


def cfg_e2m3():
    return ew.SurfaceConfig(e=2, m=3)


def cfg_e0():
    return ew.SurfaceConfig(e=0, m=1)


def cfg_e3():
    return ew.SurfaceConfig(e=3, m=Fraction(7, 2))


def cfg_rank3():
    return ew.SurfaceConfig(e=2, m=3, sections=(ew.ExtraSection(theta=2),))


def rnd_fraction(rng, lo=-9, hi=9, max_den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rnd_character(rng, cfg, span_tf=True):
    """Random rational character; ch1 in span{Theta, f} when span_tf."""
    n = cfg.rank
    coeffs = [rnd_fraction(rng) for _ in range(2)]
    coeffs += [Fraction(0) if span_tf else rnd_fraction(rng) for _ in range(n - 2)]
    return ew.character(rnd_fraction(rng), coeffs, rnd_fraction(rng), cfg)


def rnd_divisor(rng, cfg, span_tf=False):
    n = cfg.rank
    coeffs = [rnd_fraction(rng) for _ in range(2)]
    coeffs += [Fraction(0) if span_tf else rnd_fraction(rng) for _ in range(n - 2)]
    return cfg.divisor(coeffs)


def rnd_bogomolov(rng, cfg, nonzero_rank=True):
    """Random character with ch1^2 - 2*ch0*ch2 >= 0."""
    while True:
        ch0 = rnd_fraction(rng)
        if nonzero_rank and ch0 == 0:
            continue
        ch1 = rnd_divisor(rng, cfg)
        sq = ew.intersect(ch1, ch1, cfg)
        if ch0 == 0:
            if sq < 0:
                continue
            ch2 = rnd_fraction(rng)
        else:
            # push ch2 to the Bogomolov side of ch1^2/(2 ch0)
            bound = sq / (2 * ch0)
            drop = abs(rnd_fraction(rng)) / ch0
            ch2 = bound - drop if ch0 > 0 else bound + abs(rnd_fraction(rng)) / (-ch0)
        cand = ew.ChernCharacter(ch0, ch1, ch2)
        if ew.is_bogomolov_type(cand, cfg):
            return cand
