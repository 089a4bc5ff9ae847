from fractions import Fraction

import pytest

import ellwall as ew
from ellwall import io as eio
from helpers import cfg_e2m3, cfg_rank3


def test_rational_format_and_parse():
    assert eio.format_rational(Fraction(3)) == "3"
    assert eio.format_rational(Fraction(-7, 2)) == "-7/2"
    assert eio.parse_rational("3") == 3
    assert eio.parse_rational("-7/2") == Fraction(-7, 2)
    assert eio.parse_rational("+4/6") == Fraction(2, 3)
    for bad in ("1.5", "1e3", "", "a/b", "1/0", "1/-2", None, 2.5):
        with pytest.raises(ew.InputError):
            eio.parse_rational(bad)
    # round trip on a spread of values
    for num in range(-20, 21):
        for den in (1, 2, 3, 7):
            x = Fraction(num, den)
            assert eio.parse_rational(eio.format_rational(x)) == x


def test_config_json_roundtrip():
    cfg = cfg_rank3()
    obj = eio.config_to_obj(cfg)
    back = eio.config_from_obj(obj)
    assert back == cfg
    assert obj["m"] == "3" and obj["sections"][0]["theta"] == 2
    with pytest.raises(ew.InputError):
        eio.config_from_obj({"e": 2})
    with pytest.raises(ew.InputError):
        eio.config_from_obj([1, 2])
    with pytest.raises(ew.InputError):
        eio.config_from_obj({"e": 2, "m": "2.5"})


def test_character_json_roundtrip():
    cfg = cfg_e2m3()
    ch = ew.character(Fraction(2, 3), [1, Fraction(-5, 2)], Fraction(7, 4), cfg)
    obj = eio.character_to_obj(ch)
    assert obj == {"ch0": "2/3", "ch1": ["1", "-5/2"], "ch2": "7/4"}
    assert eio.character_from_obj(obj, cfg) == ch
    with pytest.raises(ew.InputError):
        eio.character_from_obj({"ch0": "1", "ch1": ["1", "0"]}, cfg)
    with pytest.raises(ew.InputError):
        eio.character_from_obj({"ch0": "1", "ch1": "10", "ch2": "0"}, cfg)


def test_volume_section_csv_pins():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg, beta=2)
    doc = eio.emit_volume_section_plot(vp, cfg, range(1, 31), fmt="csv")
    rows = eio.parse_volume_section_csv(doc)
    by_v = {row["v"]: row for row in rows}
    assert by_v[1]["u"] == 1 and by_v[1]["u_asym"] == 3 and by_v[1]["u_is_exact"] == 1
    assert by_v[5]["u"] == Fraction(1, 2) and by_v[5]["u_asym"] == Fraction(3, 5)
    # exact rows round-trip exactly
    for v in range(1, 31):
        u = ew.volume_section_u(v, vp, cfg)
        if isinstance(u, Fraction):
            assert by_v[v]["u_is_exact"] == 1 and by_v[v]["u"] == u
        else:
            assert by_v[v]["u_is_exact"] == 0
        assert by_v[v]["u_asym"] == Fraction(vp.K, v)


def test_volume_section_asymptote_bound():
    # |u(v) - K/v| <= C/v^3 for v >= 10 with C = (m - e/2) K^2
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg)
    C = (cfg.m - Fraction(cfg.e, 2)) * vp.K**2
    width = Fraction(1, 10**12)
    for v in range(10, 40):
        u = ew.volume_section_u(v, vp, cfg)
        if isinstance(u, Fraction):
            lo = hi = u
        else:
            lo, hi = u.enclosure(width)
        gap = max(abs(lo - Fraction(vp.K, v)), abs(hi - Fraction(vp.K, v)))
        assert gap <= C * Fraction(1, v) ** 3


def test_volume_section_degenerate_m_equals_half_e():
    # m = e/2 possible above rank 2: the section is exactly u = K/v
    cfg = ew.SurfaceConfig(e=2, m=1, sections=(ew.ExtraSection(theta=1),))
    vp = ew.volume_params(3, cfg)  # K = 3 + 1 - 2 = 2
    assert vp.K == 2
    for v in (1, 2, 7):
        assert ew.volume_section_u(v, vp, cfg) == Fraction(vp.K, v)
    doc = eio.emit_volume_section_plot(vp, cfg, [1, 2, 7], fmt="csv")
    for row in eio.parse_volume_section_csv(doc):
        assert row["u"] == row["u_asym"] and row["u_is_exact"] == 1


def test_lambda_q_csv():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg, beta=2)
    wall = (
        "lb2",
        ew.FactoredCharacter(1, 0, 2 * cfg.theta()),
        ew.PartnerCharacter(r=1, k=-1, p=0, xis=(), chi=-1),
    )
    lams = [Fraction(1, 2), Fraction(1, 11), Fraction(1, 10)]
    doc = eio.emit_lambda_q_plot(vp, cfg, lams, walls=[wall], fmt="csv")
    lines = doc.strip().split("\n")
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    by_lam = {eio.parse_rational(r["lambda"]): r for r in rows}
    assert eio.parse_rational(by_lam[Fraction(1, 2)]["q_section"]) == 2
    assert eio.parse_rational(by_lam[Fraction(1, 11)]["q_section"]) == Fraction(121, 8)
    # wall column equals the exact wall value; at small lambda it lies below the section
    wv = ew.wall_lambda_q(wall[1], wall[2], Fraction(1, 10), cfg)
    assert eio.parse_rational(by_lam[Fraction(1, 10)]["q_wall_lb2"]) == wv.q
    assert wv.q < eio.parse_rational(by_lam[Fraction(1, 10)]["q_section"])


def test_lambda_q_csv_markers():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg)
    pole_wall = (
        "p",
        ew.FactoredCharacter(1, 0, cfg.zero()),
        ew.PartnerCharacter(r=1, k=1, p=-2, xis=(), chi=0),
    )
    doc = eio.emit_lambda_q_plot(vp, cfg, [Fraction(1, 2)], walls=[pole_wall], fmt="csv")
    assert ",pole," in doc  # exact column keeps the marker, float twin left empty


def test_svg_outputs():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg)
    svg = eio.emit_volume_section_plot(vp, cfg, range(1, 12), fmt="svg")
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == 2
    assert 'xmlns="http://www.w3.org/2000/svg"' in svg and 'version="1.1"' in svg
    svg2 = eio.emit_volume_section_plot(vp, cfg, range(1, 12), fmt="svg")
    assert svg == svg2  # deterministic bytes
    wall = (
        "w0",
        ew.FactoredCharacter(1, 0, 2 * cfg.theta()),
        ew.PartnerCharacter(r=1, k=-1, p=0, xis=(), chi=-1),
    )
    lams = [Fraction(k, 40) for k in range(1, 20)]
    svg3 = eio.emit_lambda_q_plot(vp, cfg, lams, walls=[wall], fmt="svg")
    assert svg3.count("<polyline") == 3


def test_plot_errors():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg)
    with pytest.raises(ew.DomainError):
        eio.emit_volume_section_plot(vp, cfg, [], fmt="csv")
    with pytest.raises(ew.InputError):
        eio.emit_volume_section_plot(vp, cfg, [1], fmt="png")
    with pytest.raises(ew.DomainError):
        eio.emit_lambda_q_plot(vp, cfg, [], fmt="csv")


def test_report_objects():
    cfg = cfg_e2m3()
    vp = ew.volume_params(2, cfg)
    rep = ew.line_bundle_analysis(2, vp, cfg)
    obj = eio.line_bundle_report_to_obj(rep)
    assert obj == {
        "aL": 2,
        "D": "2",
        "K": "3",
        "generic": True,
        "side": "above",
        "transform_rank": 2,
        "case": "C1",
    }
    wall = ew.bertram_wall(
        ew.character(1, [0, 0], 0, cfg),
        ew.character(1, [-1, 0], -1, cfg),
        ew.make_frame(cfg.divisor([1, 3]), cfg.divisor([1, -1]), 0, cfg),
        cfg,
    )
    assert eio.wall_sq_to_obj(wall) == {"kind": "line", "point": ["0", "0"], "slope": "1"}
    lc = ew.limit_charge(ew.character(0, [1, 0], 0, cfg), vp, cfg)
    assert eio.limit_charge_to_obj(lc) == {
        "re_const": "0",
        "im_hi": "1",
        "im_lo": "-3",
        "K": "3",
    }
