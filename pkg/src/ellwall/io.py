"""Serialization schemas, plot-data emission and result documents.

Rationals travel as strings "p/q" in lowest terms with q > 0 ("p" when
the denominator is 1); decimals are rejected everywhere to preserve
exactness.  JSON documents carry a top-level "schema": "ellwall/1".
CSV plot files keep the exact columns authoritative and add float twins
suffixed `_float_lossy` for plotting convenience.
"""

from __future__ import annotations

import csv
import io as _stdio
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .charge import ChargeValue, LimitCharge, PhaseLimit, cross_coefficients
from .chern import ChernCharacter
from .destabilize import CandidateReport, LineBundleReport
from .errors import DomainError, InputError
from .nslattice import (
    DivisorClass,
    ExtraSection,
    QuadraticRoot,
    SurfaceConfig,
    VolumeSectionParams,
    section_q,
    volume_section_u,
)
from .walls import (
    AsymptoteClass,
    FactoredCharacter,
    OneDimCharacter,
    WallSQ,
    WallValue,
    wall_lambda_q,
    wall_lambda_q_dim1,
)

SCHEMA = "ellwall/1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError("expected an exact rational string, got %r" % (s,))
    text = s.strip()
    if not _RATIONAL_RE.match(text):
        raise InputError(
            "not an exact rational 'p/q' (decimals are rejected): %r" % (s,)
        )
    return Fraction(text)


# ---------------------------------------------------------------------------
# JSON object mappers (plain dicts; callers json.dumps them)


def config_to_obj(cfg: SurfaceConfig) -> dict:
    return {
        "e": cfg.e,
        "genus_base": cfg.genus_base,
        "m": format_rational(cfg.m),
        "euler_char": format_rational(cfg.euler_char),
        "sections": [
            {"theta": s.theta, "cross": list(s.cross)} for s in cfg.sections
        ],
    }


def config_from_obj(obj) -> SurfaceConfig:
    if not isinstance(obj, dict):
        raise InputError("surface config must be a JSON object")
    try:
        e = int(obj["e"])
        m = parse_rational(obj["m"])
        genus = int(obj.get("genus_base", 0))
        chi = obj.get("euler_char")
        sections = tuple(
            ExtraSection(theta=int(s["theta"]), cross=tuple(int(c) for c in s.get("cross", ())))
            for s in obj.get("sections", ())
        )
    except KeyError as exc:
        raise InputError("surface config is missing %s" % exc) from exc
    except (TypeError, ValueError) as exc:
        raise InputError("malformed surface config: %s" % exc) from exc
    return SurfaceConfig(
        e=e,
        genus_base=genus,
        m=m,
        euler_char=None if chi is None else parse_rational(chi),
        sections=sections,
    )


def character_to_obj(ch: ChernCharacter) -> dict:
    return {
        "ch0": format_rational(ch.ch0),
        "ch1": [format_rational(c) for c in ch.ch1.coeffs],
        "ch2": format_rational(ch.ch2),
    }


def character_from_obj(obj, cfg: SurfaceConfig) -> ChernCharacter:
    if not isinstance(obj, dict):
        raise InputError("Chern character must be a JSON object")
    try:
        ch0 = parse_rational(obj["ch0"])
        ch1 = divisor_from_obj(obj["ch1"], cfg)
        ch2 = parse_rational(obj["ch2"])
    except KeyError as exc:
        raise InputError("Chern character is missing %s" % exc) from exc
    return ChernCharacter(ch0, ch1, ch2)


def divisor_from_obj(obj, cfg: SurfaceConfig) -> DivisorClass:
    if not isinstance(obj, (list, tuple)):
        raise InputError("divisor class must be a JSON array of rationals")
    return cfg.divisor([parse_rational(c) for c in obj])


def charge_to_obj(cv: ChargeValue) -> dict:
    return {"re": format_rational(cv.re), "im": format_rational(cv.im)}


def limit_charge_to_obj(lc: LimitCharge) -> dict:
    return {
        "re_const": format_rational(lc.re_const),
        "im_hi": format_rational(lc.im_hi),
        "im_lo": format_rational(lc.im_lo),
        "K": format_rational(lc.K),
    }


def phase_limit_to_obj(pl: PhaseLimit) -> dict:
    return {
        "phase_limit": format_rational(pl.value),
        "attained": pl.attained,
        "case": pl.case_tag,
    }


def compare_to_obj(order: str, m_lc: LimitCharge, n_lc: LimitCharge) -> dict:
    hi, lo = cross_coefficients(m_lc, n_lc)
    return {
        "order": order,
        "cross_coeffs": [format_rational(hi), format_rational(lo)],
    }


def wall_sq_to_obj(wall: WallSQ) -> dict:
    obj = {"kind": wall.kind}
    if wall.point is not None:
        obj["point"] = [format_rational(wall.point[0]), format_rational(wall.point[1])]
    if wall.slope is not None:
        obj["slope"] = format_rational(wall.slope)
    if wall.s is not None:
        obj["s"] = format_rational(wall.s)
    return obj


def wall_value_to_obj(wv: WallValue) -> dict:
    obj = {"kind": wv.kind}
    if wv.q is not None:
        obj["q"] = format_rational(wv.q)
    return obj


def asymptote_to_obj(ac: AsymptoteClass) -> dict:
    return {
        "family": ac.family,
        "case": ac.case_tag,
        "constants": {k: format_rational(v) for k, v in sorted(ac.constants.items())},
        "leading_term": ac.leading_term,
    }


def candidate_report_to_obj(rep: CandidateReport) -> dict:
    return {
        "candidate": character_to_obj(rep.candidate),
        "complement": character_to_obj(rep.complement),
        "S": format_rational(rep.S),
        "checks": {k: bool(v) for k, v in sorted(rep.checks.items())},
    }


def line_bundle_report_to_obj(rep: LineBundleReport) -> dict:
    return {
        "aL": rep.a_L,
        "D": format_rational(rep.D),
        "K": format_rational(rep.K),
        "generic": rep.generic,
        "side": rep.side,
        "transform_rank": rep.transform_rank,
        "case": rep.case_tag,
    }


# ---------------------------------------------------------------------------
# plots


def _u_cells(u) -> tuple:
    """(exact string, is_exact flag, float) for a section height that may
    be a Fraction or a quadratic-root enclosure."""
    if isinstance(u, Fraction):
        return format_rational(u), 1, float(u)
    if isinstance(u, QuadraticRoot):
        mid = u.midpoint()
        return format_rational(mid), 0, float(u)
    raise DomainError("unexpected section height %r" % (u,))


def emit_volume_section_plot(
    vp: VolumeSectionParams,
    cfg: SurfaceConfig,
    v_values: Sequence,
    fmt: str = "csv",
) -> str:
    """Sampled (v, u(v)) rows of the volume section plus the asymptote
    u = K/v.  The u column is exact whenever the root is rational
    (u_is_exact = 1); otherwise it is an enclosure midpoint."""
    v_values = [Fraction(v) for v in v_values]
    if not v_values:
        raise DomainError("empty v range")
    rows = []
    for v in v_values:
        u = volume_section_u(v, vp, cfg)
        u_str, exact, u_float = _u_cells(u)
        asym = vp.K / v
        rows.append(
            {
                "v": format_rational(v),
                "u": u_str,
                "u_is_exact": exact,
                "u_asym": format_rational(asym),
                "v_float_lossy": float(v),
                "u_float_lossy": u_float,
                "u_asym_float_lossy": float(asym),
            }
        )
    if fmt == "csv":
        return _write_csv(
            ["v", "u", "u_is_exact", "u_asym", "v_float_lossy", "u_float_lossy", "u_asym_float_lossy"],
            rows,
        )
    if fmt == "svg":
        section = [(r["v_float_lossy"], r["u_float_lossy"]) for r in rows]
        asym = [(r["v_float_lossy"], r["u_asym_float_lossy"]) for r in rows]
        return _svg_plot(
            [("section", section, "#000000"), ("asymptote K/v", asym, "#999999")],
            xlabel="v",
            ylabel="u",
        )
    raise InputError("unknown plot format %r" % (fmt,))


def parse_volume_section_csv(text: str) -> list:
    """Exact round-trip parse of an emitted volume-section CSV: rows as
    dicts with Fraction values for the exact columns."""
    reader = csv.DictReader(_stdio.StringIO(text))
    rows = []
    for raw in reader:
        rows.append(
            {
                "v": parse_rational(raw["v"]),
                "u": parse_rational(raw["u"]),
                "u_is_exact": int(raw["u_is_exact"]),
                "u_asym": parse_rational(raw["u_asym"]),
            }
        )
    return rows


def emit_lambda_q_plot(
    vp: VolumeSectionParams,
    cfg: SurfaceConfig,
    lambda_values: Sequence,
    walls: Iterable = (),
    fmt: str = "csv",
) -> str:
    """The volume section and its asymptote in the (lambda,0,0,q)-plane,
    with optional wall curves.  Walls are (label, character, partner)
    triples, dimension read off the character type."""
    lambda_values = [Fraction(l) for l in lambda_values]
    if not lambda_values:
        raise DomainError("empty lambda range")
    walls = list(walls)
    header = ["lambda", "q_section", "q_asym"]
    for label, _, _ in walls:
        header += ["q_wall_%s" % label]
    float_header = [h + "_float_lossy" for h in header]
    rows = []
    for lam in lambda_values:
        q_sec = section_q(lam, vp, cfg)
        q_asym = vp.K / (2 * lam)
        row = {
            "lambda": format_rational(lam),
            "q_section": format_rational(q_sec),
            "q_asym": format_rational(q_asym),
            "lambda_float_lossy": float(lam),
            "q_section_float_lossy": float(q_sec),
            "q_asym_float_lossy": float(q_asym),
        }
        for label, ch, partner in walls:
            if isinstance(ch, FactoredCharacter):
                wv = wall_lambda_q(ch, partner, lam, cfg)
            elif isinstance(ch, OneDimCharacter):
                wv = wall_lambda_q_dim1(ch, partner, lam, cfg)
            else:
                raise InputError("unknown wall character %r" % (ch,))
            key = "q_wall_%s" % label
            if wv.kind == "value":
                row[key] = format_rational(wv.q)
                row[key + "_float_lossy"] = float(wv.q)
            else:
                row[key] = wv.kind
                row[key + "_float_lossy"] = ""
        rows.append(row)
    if fmt == "csv":
        return _write_csv(header + float_header, rows)
    if fmt == "svg":
        series = [
            (
                "section",
                [(r["lambda_float_lossy"], r["q_section_float_lossy"]) for r in rows],
                "#000000",
            ),
            (
                "asymptote K/(2*lambda)",
                [(r["lambda_float_lossy"], r["q_asym_float_lossy"]) for r in rows],
                "#999999",
            ),
        ]
        palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"]
        for i, (label, _, _) in enumerate(walls):
            pts = [
                (r["lambda_float_lossy"], r["q_wall_%s_float_lossy" % label])
                for r in rows
                if r.get("q_wall_%s_float_lossy" % label) != ""
            ]
            series.append(("wall %s" % label, pts, palette[i % len(palette)]))
        return _svg_plot(series, xlabel="lambda", ylabel="q")
    raise InputError("unknown plot format %r" % (fmt,))


def _write_csv(header, rows) -> str:
    buf = _stdio.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in header})
    return buf.getvalue()


def _svg_plot(series, xlabel: str, ylabel: str, width=640, height=480) -> str:
    """Self-contained SVG 1.1: one polyline per series, simple axes with
    extremal tick labels, legend in the top-right corner."""
    margin = 60
    pts_all = [p for _, pts, _ in series for p in pts]
    if not pts_all:
        raise DomainError("nothing to plot")
    xs = [p[0] for p in pts_all]
    ys = [p[1] for p in pts_all]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(x):
        return margin + (x - x0) / (x1 - x0) * (width - 2 * margin)

    def sy(y):
        return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin)

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (width, height, width, height)
    )
    out.append('<rect width="%d" height="%d" fill="white"/>' % (width, height))
    ax = '<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black" stroke-width="1"/>'
    out.append(ax % (margin, height - margin, width - margin, height - margin))
    out.append(ax % (margin, margin, margin, height - margin))
    label = '<text x="%.2f" y="%.2f" font-size="12" font-family="monospace"%s>%s</text>'
    out.append(label % (width / 2, height - margin / 3, "", xlabel))
    out.append(
        label
        % (margin / 3, height / 2, ' transform="rotate(-90 %.2f %.2f)"' % (margin / 3, height / 2), ylabel)
    )
    out.append(label % (margin, height - margin / 2, "", "%.6g" % x0))
    out.append(label % (width - margin, height - margin / 2, "", "%.6g" % x1))
    out.append(label % (5, height - margin, "", "%.6g" % y0))
    out.append(label % (5, margin, "", "%.6g" % y1))
    for i, (name, pts, color) in enumerate(series):
        if not pts:
            continue
        coords = " ".join("%.3f,%.3f" % (sx(x), sy(y)) for x, y in pts)
        out.append(
            '<polyline fill="none" stroke="%s" stroke-width="1.5" points="%s"/>'
            % (color, coords)
        )
        out.append(
            '<text x="%.2f" y="%.2f" font-size="11" font-family="monospace" fill="%s">%s</text>'
            % (width - margin - 200, margin + 14 * (i + 1), color, name)
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
