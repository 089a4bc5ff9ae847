"""Command-line front end.

Every numeric flag takes an exact rational "p/q" (decimals are rejected).
Exit codes: 0 success, 1 malformed input, 2 domain/precondition error
(the message names the violated precondition), 3 internal invariant
breach.  Output for identical inputs is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import charge as charge_mod
from . import chern, destabilize, fmtransform, walls
from . import io as eio
from .errors import DimensionError, DomainError, EllwallError, InputError, InvariantError
from .nslattice import SQ, SurfaceConfig, elliptic_frame, make_frame, volume_params


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; those are malformed
    # input here, so re-route through the error hierarchy instead.
    def error(self, message):
        raise InputError(message)


def _add_config_args(sp):
    sp.add_argument("--config", help="surface config JSON file ('-' for stdin)")
    sp.add_argument("--e", type=int, help="e = -Theta^2 (rank-2 shorthand)")
    sp.add_argument("--m", help="ample offset m as 'p/q'")
    sp.add_argument("--genus-base", type=int, default=0)
    sp.add_argument("--euler-char", help="chi(O_X) as 'p/q' (default e)")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def _read_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %s: %s" % (path, exc)) from exc


def _load_config(args) -> SurfaceConfig:
    if args.config:
        return eio.config_from_obj(_read_json(args.config))
    if args.e is None or args.m is None:
        raise InputError("provide --config or both --e and --m")
    return SurfaceConfig(
        e=args.e,
        genus_base=args.genus_base,
        m=eio.parse_rational(args.m),
        euler_char=None if args.euler_char is None else eio.parse_rational(args.euler_char),
    )


def _load_character(path, cfg):
    return eio.character_from_obj(_read_json(path or "-"), cfg)


def _parse_coeffs(text: str, cfg):
    return cfg.divisor([eio.parse_rational(c) for c in text.split(",")])


def _rat(text: str) -> Fraction:
    return eio.parse_rational(text)


def _document(obj) -> str:
    payload = {"schema": eio.SCHEMA}
    payload.update(obj)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _frame_from_args(args, cfg):
    if args.lam is not None:
        return elliptic_frame(_rat(args.lam), cfg)
    if args.frame_h is None or args.frame_hperp is None:
        raise InputError("provide --lambda or both --frame-h and --frame-hperp")
    return make_frame(
        _parse_coeffs(args.frame_h, cfg),
        _parse_coeffs(args.frame_hperp, cfg),
        _rat(args.frame_w or "0"),
        cfg,
    )


def _vp(args, cfg):
    return volume_params(_rat(args.alpha), cfg, beta=_rat(args.beta or "1"))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_surface_check(args):
    cfg = _load_config(args)
    return _document({"config": eio.config_to_obj(cfg), "rank": cfg.rank, "ok": True})


def _cmd_transform(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    fn = fmtransform.phi if args.functor == "phi" else fmtransform.phi_hat
    return _document({"character": eio.character_to_obj(fn(ch, cfg))})


def _cmd_twist(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    D = _parse_coeffs(args.divisor, cfg)
    if args.line_bundle:
        out = chern.line_bundle_twist(ch, D, cfg)
    else:
        out = chern.twist(ch, D, cfg)
    return _document({"character": eio.character_to_obj(out)})


def _cmd_charge(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    omega = _parse_coeffs(args.omega, cfg)
    B = _parse_coeffs(args.b_field, cfg) if args.b_field else cfg.zero()
    cv = charge_mod.central_charge(ch, omega, B, cfg)
    return _document({"charge": eio.charge_to_obj(cv)})


def _cmd_charge_sq(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    fr = _frame_from_args(args, cfg)
    pt = SQ(s=_rat(args.s), q=_rat(args.q))
    cv = charge_mod.charge_sq(ch, pt, fr, cfg)
    return _document({"charge": eio.charge_to_obj(cv)})


def _cmd_limit_phase(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    vp = _vp(args, cfg)
    lc = charge_mod.limit_charge(ch, vp, cfg)
    pl = charge_mod.phase_limit(lc)
    obj = eio.phase_limit_to_obj(pl)
    obj["limit_charge"] = eio.limit_charge_to_obj(lc)
    return _document(obj)


def _cmd_limit_compare(args):
    cfg = _load_config(args)
    vp = _vp(args, cfg)
    m_lc = charge_mod.limit_charge(_load_character(args.first, cfg), vp, cfg)
    n_lc = charge_mod.limit_charge(_load_character(args.second, cfg), vp, cfg)
    order = charge_mod.limit_compare(m_lc, n_lc)
    return _document(eio.compare_to_obj(order, m_lc, n_lc))


def _cmd_wall_sq(args):
    cfg = _load_config(args)
    ch = _load_character(args.ch, cfg)
    chp = _load_character(args.ch_prime, cfg)
    fr = _frame_from_args(args, cfg)
    if args.shift:
        wall = walls.shift_wall(ch, chp, _parse_coeffs(args.shift, cfg), fr, cfg)
    else:
        wall = walls.bertram_wall(ch, chp, fr, cfg)
    return _document({"wall": eio.wall_sq_to_obj(wall)})


def _wall_inputs(args, cfg):
    if args.dim == 2:
        fc = walls.FactoredCharacter(
            x=_rat(args.x), z=_rat(args.z), L=_parse_coeffs(args.L, cfg)
        )
        pc = walls.PartnerCharacter(
            r=_rat(args.r),
            k=_rat(args.k),
            p=_rat(args.p),
            xis=tuple(_rat(v) for v in (args.xi or "").split(",") if v),
            chi=_rat(args.chi),
        )
        return fc, pc
    od = walls.OneDimCharacter(
        k=_rat(args.k),
        p=_rat(args.p),
        z=_rat(args.z),
        xis=tuple(_rat(v) for v in (args.xi or "").split(",") if v),
    )
    pc = walls.OneDimPartner(r=_rat(args.r), chi=_rat(args.chi), L=_parse_coeffs(args.L, cfg))
    return od, pc


def _cmd_wall_lambda_q(args):
    cfg = _load_config(args)
    ch, pc = _wall_inputs(args, cfg)
    lam = _rat(args.lam)
    if args.dim == 2:
        wv = walls.wall_lambda_q(ch, pc, lam, cfg)
    else:
        wv = walls.wall_lambda_q_dim1(ch, pc, lam, cfg)
    return _document({"wall_value": eio.wall_value_to_obj(wv)})


def _cmd_wall_asymptote(args):
    cfg = _load_config(args)
    ch, pc = _wall_inputs(args, cfg)
    if args.dim == 2:
        ac = walls.classify_asymptote_dim2(ch, pc, cfg)
    else:
        ac = walls.classify_asymptote_dim1(ch, pc, cfg)
    return _document({"asymptote": eio.asymptote_to_obj(ac)})


def _cmd_destab_enumerate(args):
    cfg = _load_config(args)
    target = _load_character(args.target, cfg)
    vp = _vp(args, cfg)
    req = destabilize.EnumerationRequest(
        target=target,
        vp=vp,
        u0=_rat(args.u0),
        ch2_denominator=args.ch2_denominator,
    )
    jobs = args.jobs if args.jobs else int(os.environ.get("ELLWALL_JOBS", "1"))
    reports = destabilize.enumerate_destabilizers(req, cfg, jobs=jobs)
    return _document(
        {"candidates": [eio.candidate_report_to_obj(rep) for rep in reports]}
    )


def _cmd_linebundle_analyze(args):
    cfg = _load_config(args)
    vp = _vp(args, cfg)
    rep = destabilize.line_bundle_analysis(args.aL, vp, cfg)
    return _document(eio.line_bundle_report_to_obj(rep))


def _rational_range(lo: Fraction, hi: Fraction, step: Fraction):
    if step <= 0:
        raise InputError("range step must be positive")
    vals = []
    v = lo
    while v <= hi:
        vals.append(v)
        v += step
    return vals


def _cmd_plot_volume_section(args):
    cfg = _load_config(args)
    vp = _vp(args, cfg)
    vals = _rational_range(_rat(args.v_from), _rat(args.v_to), _rat(args.v_step or "1"))
    return eio.emit_volume_section_plot(vp, cfg, vals, fmt=args.format)


def _cmd_plot_lambda_q(args):
    cfg = _load_config(args)
    vp = _vp(args, cfg)
    lo, hi = _rat(args.lambda_from), _rat(args.lambda_to)
    n = args.samples
    if n < 2:
        raise InputError("--samples must be >= 2")
    vals = [lo + (hi - lo) * Fraction(i, n - 1) for i in range(n)]
    wall_specs = []
    for i, path in enumerate(args.wall or ()):
        obj = _read_json(path)
        label = str(obj.get("label", i))
        if int(obj.get("dim", 2)) == 2:
            ch = walls.FactoredCharacter(
                x=eio.parse_rational(obj["x"]),
                z=eio.parse_rational(obj["z"]),
                L=eio.divisor_from_obj(obj["L"], cfg),
            )
            pc = walls.PartnerCharacter(
                r=eio.parse_rational(obj["r"]),
                k=eio.parse_rational(obj["k"]),
                p=eio.parse_rational(obj["p"]),
                xis=tuple(eio.parse_rational(v) for v in obj.get("xi", ())),
                chi=eio.parse_rational(obj["chi"]),
            )
        else:
            ch = walls.OneDimCharacter(
                k=eio.parse_rational(obj["k"]),
                p=eio.parse_rational(obj["p"]),
                z=eio.parse_rational(obj["z"]),
                xis=tuple(eio.parse_rational(v) for v in obj.get("xi", ())),
            )
            pc = walls.OneDimPartner(
                r=eio.parse_rational(obj["r"]),
                chi=eio.parse_rational(obj["chi"]),
                L=eio.divisor_from_obj(obj["L"], cfg),
            )
        wall_specs.append((label, ch, pc))
    return eio.emit_lambda_q_plot(vp, cfg, vals, walls=wall_specs, fmt=args.format)


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="ellwall", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", help="write output here instead of stdout")
        return sp

    sp = sub.add_parser("surface", help="surface config operations")
    ssub = sp.add_subparsers(dest="surface_command", required=True)
    sc = ssub.add_parser("check", help="validate a surface config")
    sc.set_defaults(func=_cmd_surface_check)
    sc.add_argument("--out")
    _add_config_args(sc)

    sp = cmd("transform", _cmd_transform, help="apply a cohomological transform")
    sp.add_argument("--functor", choices=["phi", "phihat"], required=True)
    sp.add_argument("--ch", help="character JSON file ('-' for stdin)")
    _add_config_args(sp)

    sp = cmd("twist", _cmd_twist, help="B-field twist e^{-B} or line-bundle twist e^{L}")
    sp.add_argument("--ch")
    sp.add_argument("--divisor", required=True, help="comma-separated coefficients")
    sp.add_argument("--line-bundle", action="store_true", help="apply e^{L} instead of e^{-B}")
    _add_config_args(sp)

    sp = cmd("charge", _cmd_charge, help="central charge at an ample omega")
    sp.add_argument("--ch")
    sp.add_argument("--omega", required=True, help="comma-separated coefficients")
    sp.add_argument("--b-field", help="comma-separated coefficients (default 0)")
    _add_config_args(sp)

    sp = cmd("charge-sq", _cmd_charge_sq, help="central charge in (s,q)-coordinates")
    sp.add_argument("--ch")
    sp.add_argument("--lambda", dest="lam", help="elliptic frame parameter in (0,1)")
    sp.add_argument("--frame-h", help="H coefficients")
    sp.add_argument("--frame-hperp", help="H-perp coefficients")
    sp.add_argument("--frame-w", help="frame w (default 0)")
    sp.add_argument("--s", required=True)
    sp.add_argument("--q", required=True)
    _add_config_args(sp)

    sp = cmd("limit-phase", _cmd_limit_phase, help="phase limit along the volume section")
    sp.add_argument("--ch")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")
    _add_config_args(sp)

    sp = cmd("limit-compare", _cmd_limit_compare, help="order of limit phases")
    sp.add_argument("--first", required=True, help="character JSON file")
    sp.add_argument("--second", required=True, help="character JSON file")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")
    _add_config_args(sp)

    sp = sub.add_parser("wall", help="potential wall computations")
    wsub = sp.add_subparsers(dest="wall_command", required=True)

    wq = wsub.add_parser("sq", help="wall in the (s,q)-plane of a frame")
    wq.set_defaults(func=_cmd_wall_sq)
    wq.add_argument("--out")
    wq.add_argument("--ch", help="character JSON file")
    wq.add_argument("--ch-prime", required=True, help="partner character JSON file")
    wq.add_argument("--lambda", dest="lam", help="elliptic frame parameter")
    wq.add_argument("--frame-h")
    wq.add_argument("--frame-hperp")
    wq.add_argument("--frame-w")
    wq.add_argument("--shift", help="line bundle L coefficients for the shifted wall")
    _add_config_args(wq)

    def wall_data_args(spp):
        spp.add_argument("--dim", type=int, choices=[1, 2], default=2)
        spp.add_argument("--x", help="dim 2: rank of the factored character")
        spp.add_argument("--z", help="ch2 of the factored/one-dimensional character")
        spp.add_argument("--L", help="line bundle coefficients")
        spp.add_argument("--r", required=True, help="partner rank")
        spp.add_argument("--k", help="Theta coefficient of ch1")
        spp.add_argument("--p", help="f coefficient of ch1")
        spp.add_argument("--xi", help="comma-separated extra-section coefficients")
        spp.add_argument("--chi", required=True, help="partner ch2")
        _add_config_args(spp)

    wl = wsub.add_parser("lambda-q", help="exact wall value at one lambda")
    wl.set_defaults(func=_cmd_wall_lambda_q)
    wl.add_argument("--out")
    wl.add_argument("--lambda", dest="lam", required=True)
    wall_data_args(wl)

    wa = wsub.add_parser("asymptote", help="lambda -> 0+ wall classification")
    wa.set_defaults(func=_cmd_wall_asymptote)
    wa.add_argument("--out")
    wall_data_args(wa)

    sp = sub.add_parser("destab", help="destabilizer enumeration")
    dsub = sp.add_subparsers(dest="destab_command", required=True)
    de = dsub.add_parser("enumerate", help="enumerate candidate destabilizers")
    de.set_defaults(func=_cmd_destab_enumerate)
    de.add_argument("--out")
    de.add_argument("--target", required=True, help="target character JSON file")
    de.add_argument("--alpha", required=True)
    de.add_argument("--beta")
    de.add_argument("--u0", required=True)
    de.add_argument("--ch2-denominator", type=int, default=2)
    de.add_argument("--jobs", type=int, help="parallel workers (default $ELLWALL_JOBS or 1)")
    _add_config_args(de)

    sp = sub.add_parser("linebundle", help="line bundle chamber analysis")
    lsub = sp.add_subparsers(dest="linebundle_command", required=True)
    la = lsub.add_parser("analyze", help="wall/section comparison for O(a_L*Theta)")
    la.set_defaults(func=_cmd_linebundle_analyze)
    la.add_argument("--out")
    la.add_argument("--aL", type=int, required=True)
    la.add_argument("--alpha", required=True)
    la.add_argument("--beta")
    _add_config_args(la)

    sp = sub.add_parser("plot", help="plot data emission")
    psub = sp.add_subparsers(dest="plot_command", required=True)
    pv = psub.add_parser("volume-section", help="the (v,u) volume section and asymptote")
    pv.set_defaults(func=_cmd_plot_volume_section)
    pv.add_argument("--out")
    pv.add_argument("--alpha", required=True)
    pv.add_argument("--beta")
    pv.add_argument("--v-from", required=True)
    pv.add_argument("--v-to", required=True)
    pv.add_argument("--v-step")
    pv.add_argument("--format", choices=["csv", "svg"], default="csv")
    _add_config_args(pv)

    pl = psub.add_parser("lambda-q", help="the section, asymptote and walls in (lambda,q)")
    pl.set_defaults(func=_cmd_plot_lambda_q)
    pl.add_argument("--out")
    pl.add_argument("--alpha", required=True)
    pl.add_argument("--beta")
    pl.add_argument("--lambda-from", required=True)
    pl.add_argument("--lambda-to", required=True)
    pl.add_argument("--samples", type=int, default=50)
    pl.add_argument("--wall", action="append", help="wall spec JSON file (repeatable)")
    pl.add_argument("--format", choices=["csv", "svg"], default="csv")
    _add_config_args(pl)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        document = args.func(args)
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(document)
        else:
            sys.stdout.write(document)
        return 0
    except (InputError, DimensionError, KeyError, TypeError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (InvariantError, EllwallError) as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
