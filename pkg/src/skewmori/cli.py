"""Command-line front end.

Every subcommand echoes its configuration and emits either aligned text or
JSON (``--json``); output is deterministic, so identical flags and seed give
byte-identical reports.  Exit codes: 0 success, 1 failed verification,
2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chambers, geometry, pfaffian, verify
from .chambers import describe_signature


def _emit(args, report, text):
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _report(command, config, results):
    return {"command": command, "config": config, "results": results}


def cmd_verify(args):
    report = verify.run(only=args.only, n=args.n, seed=args.seed,
                        bound=args.bound, trials=args.trials)
    lines = []
    for c in report["checks"]:
        status = "PASS" if c["ok"] else "FAIL"
        lines.append(f"{status}  {c['name']:<20} {c['detail']}")
    lines.append(f"{report['passed']}/{report['total']} checks passed")
    _emit(args, _report("verify", report["config"], report["checks"]),
          "\n".join(lines) + "\n")
    return 0 if report["passed"] == report["total"] else 1


def cmd_pfaffian(args):
    indices = [int(x) for x in args.minor.split(",")] if args.minor else list(range(args.size))
    poly = pfaffian.sub_pfaffian(args.size - 1, indices)
    config = {"size": args.size, "minor": indices}
    _emit(args, _report("pfaffian", config, poly.to_json()), str(poly) + "\n")
    return 0


def cmd_classes(args):
    n = args.n
    rows = []
    top = (n - 3) // 2 if n % 2 == 1 else (n - 2) // 2
    for k in range(top + 1):
        rows.append((f"D{2 * k + 2}", geometry.divisor_class_D(n, k).coeffs))
    if n % 2 == 1 and n >= 3:
        rows.append((f"D{n + 1}", geometry.divisor_class_D(n, (n - 1) // 2).coeffs))
    for i in range(1, geometry.exceptional_count(n) + 1):
        rows.append((f"E{i}", geometry.exceptional_class(n, i).coeffs))
    rows.append(("-K", geometry.anticanonical(n).coeffs))
    cox = [{"label": g.label, "degree": list(g.degree.coeffs), "multiplicity": g.multiplicity}
           for g in geometry.cox_generator_degrees(n)]
    config = {"n": n}
    results = {"n": n, "classes": [{"label": l, "coeffs": list(c)} for l, c in rows],
               "fano_index": geometry.fano_index(n), "cox_generators": cox}
    text = [f"classes of A({n}) in the basis (H, E_1, ..., E_r):"]
    for label, coeffs in rows:
        text.append(f"  {label:<4} ({','.join(map(str, coeffs))})")
    text.append(f"fano index: {results['fano_index']}")
    text.append("cox generators (label degree multiplicity):")
    for g in cox:
        text.append(f"  {g['label']:<4} ({','.join(map(str, g['degree']))})  x{g['multiplicity']}")
    _emit(args, _report("classes", config, results), "\n".join(text) + "\n")
    return 0


_CONE_BUILDERS = {
    "nef": geometry.nef_cone,
    "eff": geometry.eff_cone,
    "mov": geometry.movable_cone,
    "mori": geometry.mori_cone,
    "movcurves": geometry.moving_curve_cone,
}


def cmd_cones(args):
    cone = _CONE_BUILDERS[args.cone](args.n)
    config = {"n": args.n, "cone": args.cone}
    lattice = "curve" if args.cone in ("mori", "movcurves") else "divisor"
    text = [f"{args.cone} cone of A({args.n}) ({lattice} lattice), rays:"]
    for r in cone.rays:
        text.append(f"  ({','.join(map(str, r))})")
    _emit(args, _report("cones", config, cone.to_json()), "\n".join(text) + "\n")
    return 0


def _decomposition_payload(n, dec):
    region_index = {}
    for idx, region in enumerate(dec.regions):
        for c in region.chambers:
            region_index[c] = idx
    chams = []
    for i, ch in enumerate(dec.chambers):
        chams.append({"rays": [list(r) for r in ch.rays],
                      "forced": sorted(ch.forced),
                      "region": region_index[i]})
    regions = []
    for region in dec.regions:
        regions.append({"forced": sorted(region.labels),
                        "chambers": list(region.chambers),
                        "base_locus": describe_signature(region.signature)})
    return {"n": n, "chambers": chams, "regions": regions}


def cmd_gkz(args):
    if args.n > 8:
        note = "toric refinement (coincidence with the Mori chambers unverified)"
    else:
        note = "Mori chamber decomposition"
    dec = chambers.decomposition_for(args.n)
    payload = _decomposition_payload(args.n, dec)
    payload["note"] = note
    config = {"n": args.n}
    text = [f"chamber decomposition of Eff(A({args.n})): "
            f"{len(dec.chambers)} chambers ({note})"]
    for i, ch in enumerate(payload["chambers"]):
        rays = " ".join("(" + ",".join(map(str, r)) + ")" for r in ch["rays"])
        text.append(f"  #{i} region {ch['region']} forced {ch['forced'] or '[]'} rays {rays}")
    _emit(args, _report("gkz", config, payload), "\n".join(text) + "\n")
    return 0


def cmd_sbl(args):
    dec = chambers.decomposition_for(args.n)
    payload = _decomposition_payload(args.n, dec)
    config = {"n": args.n}
    text = [f"stable base locus decomposition of Eff(A({args.n})): "
            f"{len(dec.regions)} regions"]
    for i, region in enumerate(payload["regions"]):
        text.append(f"  region {i}: chambers {region['chambers']} "
                    f"B = {region['base_locus']}")
    _emit(args, _report("sbl", config, payload), "\n".join(text) + "\n")
    return 0


def cmd_blowup1(args):
    intervals = chambers.first_blowup_intervals(args.n)
    rows = []
    for iv in intervals:
        left = "[" if iv["closed_left"] else "("
        right = "]" if iv["closed_right"] else ")"
        span = (f"{left}({','.join(map(str, iv['left']))}), "
                f"({','.join(map(str, iv['right']))}){right}")
        rows.append({"interval": span, "forced": sorted(iv["forced"]),
                     "base_locus": describe_signature(iv["signature"])})
    config = {"n": args.n}
    results = {"n": args.n, "chambers": rows}
    text = [f"decomposition of Eff(A({args.n})_1), walls at (k+1)H - kE_1:"]
    for r in rows:
        text.append(f"  {r['interval']:<24} B = {r['base_locus']}")
    _emit(args, _report("blowup1", config, results), "\n".join(text) + "\n")
    return 0


def cmd_sample(args):
    z = pfaffian.secant_sample(args.n, args.h, bound=args.bound, seed=args.seed)
    config = {"n": args.n, "h": args.h, "bound": args.bound, "seed": args.seed}
    results = {"matrix": z.to_json(), "rank": z.rank()}
    text = [f"rank-{z.rank()} point of the h={args.h} locus, size {z.size}:"]
    for row in z.to_rows():
        text.append("  [" + " ".join(str(x) for x in row) + "]")
    _emit(args, _report("sample", config, results), "\n".join(text) + "\n")
    return 0


def cmd_multiplicity(args):
    if args.k is not None:
        got = pfaffian.multiplicity_estimate(args.n, args.k, args.h, trials=args.trials,
                                             seed=args.seed, bound=args.bound)
        rows = [(args.n, args.k, args.h, got, max(args.k - args.h + 1, 0))]
    else:
        rows = verify.multiplicity_grid([args.n], args.trials, args.seed, args.bound)
    config = {"n": args.n, "k": args.k, "h": args.h, "trials": args.trials,
              "seed": args.seed, "bound": args.bound}
    results = [{"n": n, "k": k, "h": h, "order": got, "expected": want}
               for n, k, h, got, want in rows]
    text = ["n k h order expected"]
    for r in results:
        text.append(f"{r['n']} {r['k']} {r['h']} {r['order']}     {r['expected']}")
    _emit(args, _report("multiplicity", config, results), "\n".join(text) + "\n")
    return 0


def cmd_secant(args):
    hs = [args.h] if args.h else list(range(1, (args.n + 1) // 2))
    rows = []
    for h in hs:
        rows.append({"h": h, "dim": pfaffian.dim_secant(args.n, h),
                     "codim": pfaffian.codim_secant(args.n, h),
                     "terracini": pfaffian.terracini_dim(args.n, h, bound=args.bound,
                                                         seed=args.seed)})
    config = {"n": args.n, "h": args.h, "bound": args.bound, "seed": args.seed}
    text = ["h dim codim terracini"]
    for r in rows:
        text.append(f"{r['h']} {r['dim']}   {r['codim']}     {r['terracini']}")
    _emit(args, _report("secant", config, rows), "\n".join(text) + "\n")
    return 0


def cmd_chamber(args):
    w = tuple(int(x) for x in args.point.split(","))
    config_obj = chambers.configuration_for(args.n)
    ch = chambers.chamber_of(config_obj, w)
    config = {"n": args.n, "point": list(w)}
    results = {"rays": [list(r) for r in ch.rays],
               "maximal": ch.is_maximal(),
               "forced": sorted(ch.forced),
               "base_locus": describe_signature(ch.signature)}
    kind = "maximal chamber" if ch.is_maximal() else "lower-dimensional face"
    text = [f"class ({','.join(map(str, w))}) lies in a {kind}",
            "rays: " + " ".join("(" + ",".join(map(str, r)) + ")" for r in ch.rays),
            f"forced: {sorted(ch.forced)}",
            f"stable base locus: {results['base_locus']}"]
    _emit(args, _report("chamber", config, results), "\n".join(text) + "\n")
    return 0


def _add_common(p, *, seed=False, bound=False, trials=False):
    if seed:
        p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    if bound:
        p.add_argument("--bound", type=int, default=100,
                       help="integer sampling bound (default 100)")
    if trials:
        p.add_argument("--trials", type=int, default=5,
                       help="independent samples per estimate (default 5)")
    p.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewmori",
        description="Exact birational-geometry invariants of the moduli "
                    "spaces A(n) of complete skew-forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="replay the full acceptance suite")
    p.add_argument("--only", choices=verify.SUITES, help="run a single sub-suite")
    p.add_argument("--n", type=int, help="restrict n where applicable")
    _add_common(p, seed=True, bound=True, trials=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("pfaffian", help="symbolic sub-Pfaffian of the generic matrix")
    p.add_argument("--size", type=int, required=True, help="size of the skew matrix")
    p.add_argument("--minor", help="comma-separated row/column indices, e.g. 0,1,2,3")
    _add_common(p)
    p.set_defaults(fn=cmd_pfaffian)

    p = sub.add_parser("classes", help="divisor classes, -K and Cox generator degrees")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("cones", help="effective/nef/movable/Mori/moving-curve cones")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cone", choices=sorted(_CONE_BUILDERS), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cones)

    p = sub.add_parser("gkz", help="chamber decomposition of the effective cone")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_gkz)

    p = sub.add_parser("sbl", help="stable base locus regions")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_sbl)

    p = sub.add_parser("blowup1", help="rank-two decomposition of the single blow-up")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_blowup1)

    p = sub.add_parser("sample", help="random rational point of fixed even rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True, help="rank/2 of the sample")
    _add_common(p, seed=True, bound=True)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("multiplicity", help="vanishing orders of sub-Pfaffians")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="sub-Pfaffian size parameter (size 2k+2)")
    p.add_argument("--h", type=int, help="rank/2 of the sampled points")
    _add_common(p, seed=True, bound=True, trials=True)
    p.set_defaults(fn=cmd_multiplicity)

    p = sub.add_parser("secant", help="dimensions of the degeneracy loci")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int)
    _add_common(p, seed=True, bound=True)
    p.set_defaults(fn=cmd_secant)

    p = sub.add_parser("chamber", help="chamber of a given divisor class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", required=True, help="comma-separated coefficients")
    _add_common(p)
    p.set_defaults(fn=cmd_chamber)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "multiplicity" and (args.k is None) != (args.h is None):
        parser.error("--k and --h must be given together")
    try:
        return args.fn(args)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
