"""Command-line interface: compute, verify, and export.

Verbs: coeffs, extract, twist, verify-tables, verify-identities,
verify-group, decompose, discriminants, extremal-dim, siegel, group-info.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import groups, jacobi, mckay, reps, siegel
from .data import load_json, set_data_dir
from .errors import DataExhausted, MoonshineError, UnknownClass

LAMBENCIES = (2, 3, 4, 5, 7, 13)


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--data-dir", help="override the bundled data directory")
    shared.add_argument("--jobs", type=int, default=1, help="worker pool size")
    shared.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="moonshine",
                                description="exact computations around the six "
                                            "distinguished mock modular vectors")
    sub = p.add_subparsers(dest="verb", required=True,
                           parser_class=lambda **kw: argparse.ArgumentParser(
                               parents=[shared], **kw))

    def common(sp, lambency=True, cls=False, r=False, order=None, ywindow=False):
        if lambency:
            sp.add_argument("--lambency", type=int, required=True, choices=LAMBENCIES)
        if cls:
            sp.add_argument("--class", dest="cls", required=cls == "req")
        if r:
            sp.add_argument("--r", type=int)
        if order is not None:
            sp.add_argument("--order", type=int, default=order,
                            help="integer q-order bound; rows are keyed by "
                                 "4*l*d on the 1/(4l) exponent lattice")
        if ywindow:
            sp.add_argument("--ywindow", type=int, default=10)
        return sp

    common(sub.add_parser("coeffs", help="table-format coefficient rows"),
           cls="req", r=True, order=40)
    common(sub.add_parser("extract", help="identity-class vector from the "
                                          "weight-0 form"), order=40)
    common(sub.add_parser("twist", help="twisted series for one class"),
           cls="req", r=True, order=40)
    common(sub.add_parser("verify-tables", help="recompute stored coefficient "
                                                "tables"), order=None)
    sub.add_parser("verify-identities", help="mock theta and weight-2 checks")
    common(sub.add_parser("verify-group", help="group regeneration checks"))
    common(sub.add_parser("decompose", help="decompose one table row"),
           r=True).add_argument("--row", type=int, required=True,
                                help="row key 4l*d")
    common(sub.add_parser("discriminants", help="discriminant property suite"))
    ed = sub.add_parser("extremal-dim", help="extremal candidate space dimension")
    ed.add_argument("--m", type=int, required=True, choices=(9, 25))
    sg = common(sub.add_parser("siegel", help="lift coefficients"), lambency=True)
    sg.add_argument("--pmax", type=int, default=3)
    sg.add_argument("--nmax", type=int, default=3)
    sg.add_argument("--ywindow", type=int, default=6)
    common(sub.add_parser("group-info", help="conjugacy class inventory"))
    return p


def _emit(args, payload, text_fn):
    if args.json:
        print(json.dumps(payload, indent=1, default=str))
    else:
        text_fn(payload)


def _series_rows(comp, ell, r):
    """Full lattice rows keyed by 4*l*d, zeros included, table layout."""
    rows = []
    k = -r * r
    top = comp.cutoff * 4 * ell
    while k < top:
        c = comp.coefficient(Fraction(k, 4 * ell))
        if rows or c != 0:
            rows.append((k, str(c)))
        k += 4 * ell
    return rows


def cmd_coeffs(args):
    ell = args.lambency
    qcut = Fraction(args.order + 1, 1)
    tw = mckay.twisted_H(ell, args.cls, qcut)
    rs = [args.r] if args.r else list(range(1, ell))
    payload = {"lambency": ell, "class": args.cls, "components": {}}
    for r in rs:
        payload["components"][r] = _series_rows(tw.component(r), ell, r)
    def text(p):
        for r, rows in p["components"].items():
            print(f"# component r={r} (rows keyed by 4*l*d)")
            for k, v in rows:
                print(f"{k}\t{v}")
    _emit(args, payload, text)
    return 0


def cmd_extract(args):
    ell = args.lambency
    H = jacobi.extract_H(ell, Fraction(args.order + 1, 1))
    payload = {"lambency": ell,
               "components": {r: H.component(r).render(16) for r in range(1, ell)}}
    _emit(args, payload, lambda p: [print(f"H_{r} = {s}")
                                    for r, s in p["components"].items()])
    return 0


def cmd_twist(args):
    ell = args.lambency
    tw = mckay.twisted_H(ell, args.cls, Fraction(args.order + 1, 1))
    rs = [args.r] if args.r else list(range(1, ell))
    payload = {"lambency": ell, "class": args.cls,
               "chi": tw.chi, "chibar": tw.chibar,
               "symbol": f"{tw.symbol[0]}|{tw.symbol[1]}",
               "components": {r: tw.component(r).render(16) for r in rs}}
    _emit(args, payload, lambda p: [print(f"H_{r} = {s}")
                                    for r, s in p["components"].items()])
    return 0


def cmd_verify_tables(args):
    ell = args.lambency
    tabs = {r: load_json(f"mt_{ell}_{r}.json") for r in range(1, ell)}
    qcut = Fraction(max(int(k) for r in tabs for k in tabs[r]["rows"]) + 4 * ell,
                    4 * ell) + 1
    classes = tabs[1]["classes"]
    mckay.identity_H(ell, qcut)  # warm the shared cache before the pool

    def check(lab):
        tw = mckay.twisted_H(ell, lab, qcut)
        bad = []
        for r in range(1, ell):
            j = tabs[r]["classes"].index(lab)
            comp = tw.component(r)
            for key, vals in tabs[r]["rows"].items():
                e = Fraction(int(key), 4 * ell)
                if e >= comp.cutoff:
                    continue
                want = reps.coefficient_row(ell, r, int(key))[lab]
                if comp.coefficient(e) != want:
                    bad.append((lab, r, int(key), str(comp.coefficient(e)), want))
        return bad

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(check, classes))
    else:
        results = [check(lab) for lab in classes]
    bad = [b for chunk in results for b in chunk]
    payload = {"lambency": ell, "classes": len(classes), "mismatches": bad}
    _emit(args, payload, lambda p: print(
        f"lambency {p['lambency']}: {p['classes']} classes, "
        f"{len(p['mismatches'])} mismatches"
        + (f"; first {p['mismatches'][0]}" if p["mismatches"] else "")))
    return 0 if not bad else 1


def cmd_verify_identities(args):
    failures = []
    for name in sorted(mckay.MOCK_IDENTITIES):
        r = mckay.mock_identity_check(name)
        if not r["ok"]:
            failures.append(("mock", name, r["first_mismatch"]))
    for ell in LAMBENCIES:
        if ell == 4:
            continue
        for lab in mckay.weight2_classes(ell, "F"):
            r = mckay.verify_F_consistency(ell, lab, qcut=12)
            if not r["ok"]:
                failures.append(("weight2", ell, lab))
    payload = {"failures": failures, "ok": not failures}
    _emit(args, payload, lambda p: print(
        "all identities hold" if p["ok"] else f"failures: {p['failures']}"))
    return 0 if not failures else 1


def cmd_verify_group(args):
    ell = args.lambency
    gd = groups.generate(ell)
    stored = groups.class_table(ell)
    ok = (gd.order == stored.order
          and [c.label for c in gd.classes] == [c.label for c in stored.classes]
          and gd.pairing == stored.pairing
          and all(a.size == b.size for a, b in zip(gd.classes, stored.classes)))
    payload = {"lambency": ell, "order": gd.order,
               "classes": len(gd.classes), "ok": ok}
    _emit(args, payload, lambda p: print(
        f"lambency {p['lambency']}: order {p['order']}, {p['classes']} classes, "
        f"{'ok' if p['ok'] else 'MISMATCH'}"))
    return 0 if ok else 1


def cmd_decompose(args):
    ell = args.lambency
    r = args.r or reps.row_component(ell, args.row)
    got = reps.decompose(ell, r, args.row, reps.coefficient_row(ell, r, args.row))
    payload = {"lambency": ell, "r": r, "row": args.row,
               "multiplicities": {i + 1: str(c) for i, c in enumerate(got.counts) if c},
               "integral": got.integral, "nonnegative": got.nonnegative}
    _emit(args, payload, lambda p: print(
        " + ".join(f"{v}*chi_{k}" for k, v in p["multiplicities"].items())
        + ("" if p["integral"] and p["nonnegative"] else "  [NOT a module!]")))
    return 0


def cmd_discriminants(args):
    rep = reps.discriminant_report(args.lambency)
    _emit(args, rep, lambda p: print(
        f"types {p['types']}; fs {'ok' if p['fs_matches'] else 'FAIL'}; "
        f"minimal rows {'ok' if p['minimal_ok'] else 'FAIL'}; "
        f"doublets {'ok' if p['doublet_ok'] else 'FAIL'} over {p['doublet_rows']} rows"))
    return 0 if rep["ok"] else 1


def cmd_extremal_dim(args):
    d = jacobi.extremal_space_dim(args.m)
    print(d)
    return 0


def cmd_siegel(args):
    ell = args.lambency
    if ell == 2:
        rep = siegel.compare_igusa(args.pmax, args.nmax, args.ywindow)
        if args.json:
            lift = siegel.exponential_lift(2, args.pmax, args.nmax, args.ywindow)
            print(json.dumps({"compare": rep, "coefficients": lift.dump()},
                             indent=1, default=str))
        else:
            print(f"additive vs product lift on box {rep['box']}: "
                  + ("equal" if rep["ok"] else f"MISMATCH at {rep['first_mismatch']}"))
        return 0 if rep["ok"] else 1
    lift = siegel.exponential_lift(ell, args.pmax, args.nmax, args.ywindow)
    payload = {"lambency": ell, "prefactor": [str(x) for x in lift.prefactor],
               "coefficients": lift.dump()}
    _emit(args, payload, lambda p: print(
        f"prefactor exponents {p['prefactor']}; {len(p['coefficients'])} coefficients"))
    return 0


def cmd_group_info(args):
    gd = groups.umbral_group(args.lambency) if args.lambency != 2 \
        else groups.class_table(2)
    payload = {"lambency": args.lambency, "order": gd.order, "classes": [
        {"label": c.label, "size": c.size, "order": c.order,
         "gamma": f"{c.gamma[0]}|{c.gamma[1]}" if c.gamma[1] != 1 else str(c.gamma[0]),
         "chi": c.chi, "chibar": c.chibar,
         "pi": groups.frame_str(c.pi), "pibar": groups.frame_str(c.pibar),
         "paired": gd.pairing[c.label]} for c in gd.classes]}
    def text(p):
        print(f"group order {p['order']}")
        for c in p["classes"]:
            print(f"{c['label']:>5} size {c['size']:>7} Gamma {c['gamma']:>6} "
                  f"chi {c['chi']:>3} chibar {c['chibar']:>3}  Pi {c['pi']}")
    _emit(args, payload, text)
    return 0


_DISPATCH = {
    "coeffs": cmd_coeffs,
    "extract": cmd_extract,
    "twist": cmd_twist,
    "verify-tables": cmd_verify_tables,
    "verify-identities": cmd_verify_identities,
    "verify-group": cmd_verify_group,
    "decompose": cmd_decompose,
    "discriminants": cmd_discriminants,
    "extremal-dim": cmd_extremal_dim,
    "siegel": cmd_siegel,
    "group-info": cmd_group_info,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.data_dir:
        set_data_dir(args.data_dir)
    try:
        return _DISPATCH[args.verb](args)
    except (DataExhausted, UnknownClass, FileNotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except MoonshineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
