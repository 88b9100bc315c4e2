"""Command line entry point: ``gradpos poset|report|verify|gaussian``."""
from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .errors import EnumerationLimitError, InvalidInput, InvariantViolation
from .gradings import parse_grading
from .involutions import count_self_complementary, fixed_points, grading_involution
from .polynomials import classify_polynomial, gaussian_check, km_product, m_at_minus_one_formula, m_polynomial, n_polynomial
from .poset import rank_levels
from .root_system import parse_type
from .rowmotion import all_orbits, csp_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _root_str(root):
    return "(" + ",".join(map(str, root)) + ")"


def _load(args):
    rs = parse_type(args.type)
    spec = parse_grading(rs, args.grading)
    return rs, spec, spec.delta1()


def format_poset(P, fmt):
    if fmt == "json":
        return json.dumps({
            "name": P.name,
            "elements": [list(r) for r in P.labels],
            "rank": list(P.rank),
            "covers": [list(c) for c in P.covers],
        }, indent=2)
    if fmt == "dot":
        lines = [f'digraph "{P.name}" {{', "  rankdir=BT;"]
        for k, root in enumerate(P.labels):
            lines.append(f'  n{k} [label="{_root_str(root)}"];')
        for a, b in P.covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines)
    lines = [f"{P.name}: {P.n_elements} elements, rank levels {rank_levels(P)}"]
    for r in range(1, P.height + 1):
        roots = [_root_str(P.labels[x]) for x in range(P.n_elements) if P.rank[x] == r]
        lines.append(f"  rank {r}: " + " ".join(roots))
    return "\n".join(lines)


def build_report(rs, spec, P, with_orbits=True):
    M = m_polynomial(P)
    N = n_polynomial(P)
    km = km_product(P)
    red = km.product.reduced()
    nrep = classify_polynomial(N)
    report = {
        "instance": {
            "type": rs.name,
            "grading": spec.label,
            "size": P.n_elements,
            "rank_levels": rank_levels(P),
        },
        "polynomials": {
            "M": list(M.coeffs),
            "N": list(N.coeffs),
            "M_at_1": M(1),
            "M_at_minus_1": M(-1),
            "km": {
                "numerator_exponents": list(red.numerator_exponents),
                "denominator_exponents": list(red.denominator_exponents),
                "is_polynomial": km.is_polynomial,
                "equals_M": km.polynomial == M,
            },
            "M_at_minus_1_formula": m_at_minus_one_formula(P.rank) if km.polynomial == M else None,
            "N_palindromic": nrep.palindromic,
            "N_monic": nrep.monic,
        },
        "orbits": None,
        "csp": None,
        "involution": None,
    }
    try:
        c = grading_involution(spec, P)
        report["involution"] = {
            "fixed_points": [list(P.labels[x]) for x in fixed_points(P, c)],
            "self_complementary": count_self_complementary(P, c),
        }
    except InvariantViolation as exc:
        report["involution"] = {"error": str(exc)}
    if with_orbits:
        orbits = all_orbits(P)
        csp = csp_check(P, M, orbits)
        report["orbits"] = {"count": len(orbits.orbits), "order": orbits.order, "summary": orbits.summary()}
        report["csp"] = {
            "n": csp.n,
            "residue": list(csp.residue_coeffs),
            "predicted": list(csp.orbit_predicted),
            "description": csp.residue_description(),
            "verdict": csp.verdict,
        }
    return report


def cmd_poset(args):
    _, _, P = _load(args)
    print(format_poset(P, args.format))
    return EXIT_OK


def cmd_report(args):
    rs, spec, P = _load(args)
    report = build_report(rs, spec, P, with_orbits=not args.no_orbits)
    print(json.dumps(report, indent=2, sort_keys=False))
    return EXIT_OK


def cmd_verify(args):
    if args.all:
        groups = list(verify_mod.GROUPS)
    else:
        unknown = [t for t in args.theorem if t not in verify_mod.GROUPS]
        if unknown:
            print(f"unknown theorem group(s): {', '.join(unknown)}; "
                  f"choose from {', '.join(verify_mod.GROUPS)}", file=sys.stderr)
            return EXIT_USAGE
        groups = args.theorem
    progress = (lambda name: print(f"checking {name} ...", file=sys.stderr)) if not args.quiet else None
    outcomes = verify_mod.run(groups, args.max_rank, progress)
    failed = [o for o in outcomes if not o.passed]
    summary = {
        "groups": groups,
        "max_rank": args.max_rank,
        "outcomes": len(outcomes),
        "checks": sum(len(o.checks) for o in outcomes),
        "failed": [f"{o.theorem}: {o.instance}" for o in failed],
        "passed": not failed,
    }
    doc = {"summary": summary}
    if args.details:
        doc["outcomes"] = [o.to_json() for o in outcomes]
    print(json.dumps(doc, indent=2))
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_gaussian(args):
    _, spec, P = _load(args)
    rep = gaussian_check(P, args.m_max, stop_at_refutation=args.stop)
    print(json.dumps({
        "grading": spec.label,
        "pleasant_by_m": {str(m + 1): ok for m, ok in enumerate(rep.results)},
        "refuted_at": rep.refuted_at,
    }, indent=2))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="gradpos", description="Posets of roots of degree one in Z-gradings.")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_args(sp):
        sp.add_argument("--type", required=True, help="root system, e.g. E7, B4, G2")
        sp.add_argument("--grading", default="standard:1", help="'standard:<i>' or 'extra-special'")

    sp = sub.add_parser("poset", help="print Delta(1) as text, DOT or JSON")
    instance_args(sp)
    sp.add_argument("--format", choices=["text", "dot", "json"], default="text")
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("report", help="polynomials, orbits, CSP and involution data as JSON")
    instance_args(sp)
    sp.add_argument("--no-orbits", action="store_true", help="skip the rowmotion orbit computation")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("verify", help="run verification groups over all instances")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--theorem", action="append", help=f"one of: {', '.join(verify_mod.GROUPS)}")
    sp.add_argument("--max-rank", type=int, default=verify_mod.MAX_RANK)
    sp.add_argument("--details", action="store_true", help="include every check in the output")
    sp.add_argument("--quiet", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gaussian", help="test [m] x Delta(1) for pleasantness, m = 1..m-max")
    instance_args(sp)
    sp.add_argument("--m-max", type=int, default=4)
    sp.add_argument("--stop", action="store_true", help="stop at the first refutation")
    sp.set_defaults(func=cmd_gaussian)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
