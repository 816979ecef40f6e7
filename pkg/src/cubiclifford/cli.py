"""Command-line front end: every verification as a subcommand with JSON
output, plus a verify-all umbrella.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
Scalars are emitted as integer residues alongside the field modulus, so
output is lossless and byte-identical across runs with the same inputs
and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .center import (center_relation_residue, centrality_report,
                     central_elements, formal_discriminant_nc)
from .commgeo import (CentralPoint, CubicForm, central_point, delta_partials,
                      discriminant_value, on_twisted_cubic, point_on_fiber,
                      singular_locus_membership)
from .disc import locus_profile, modified_gram_check, sample_locus, v_ell_membership
from .errors import CubicliffordError
from .fields import make_field
from .findim import build_quotient, check_unit_and_associativity, reduce_center_images
from .freealg import clifford_relations, parse_poly
from .pointmod import (PointTriple, abc_system_admits_solution,
                       central_character_diagonal, gamma_invariants,
                       predict_simple_quotient, proj_point, solve_next)
from .repthy import full_gram, search_irreps_dim1, search_irreps_dim2, wedderburn_blocks
from .rewrite import complete, hilbert_oracle
from .linalg import rank

SCHEMA = 1


def _env_default(name, fallback, cast=int):
    raw = os.environ.get(f"CUBICLIFFORD_{name}")
    return cast(raw) if raw is not None else fallback


def _add_common(sub):
    sub.add_argument("--prime", type=int,
                     default=_env_default("PRIME", 13))
    sub.add_argument("--seed", type=int, default=_env_default("SEED", 0))
    sub.add_argument("--degree-bound", type=int,
                     default=_env_default("DEGREE_BOUND", 13))
    sub.add_argument("--output", choices=("json", "human"), default="json")


def _emit(args, payload, ok=True):
    payload = {"schema": SCHEMA, "ok": bool(ok), **payload}
    if args.output == "human":
        for k, v in payload.items():
            print(f"{k}: {v}")
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return 0 if ok else 1


def _parse_point(field, text) -> CentralPoint:
    parts = [int(v) for v in text.split(",")]
    if len(parts) == 4:
        parts += [0, 0]
    if len(parts) != 6:
        raise ValueError("point needs 4 or 6 comma-separated integers")
    return central_point(field, *parts, check=False)


def _parse_triple(field, text) -> PointTriple:
    pts = []
    for chunk in text.split(","):
        x, y = chunk.split(":")
        pts.append(proj_point(field, int(x), int(y)))
    if len(pts) != 3:
        raise ValueError("triple needs three x:y points")
    return PointTriple(*pts)


def _graded_system(field, bound):
    return complete(clifford_relations(field), degree_bound=bound)


# -- subcommand implementations ------------------------------------------


def cmd_hilbert(args):
    field = make_field("prime", args.prime)
    bound = max(args.degree_bound, args.max_degree)
    system = _graded_system(field, bound)
    table = []
    ok = True
    for n in range(args.max_degree + 1):
        got = system.graded_dimension(n)
        want = hilbert_oracle(n)
        table.append({"degree": n, "engine": got, "oracle": want,
                      "match": got == want})
        ok = ok and got == want
    return _emit(args, {"prime": args.prime, "table": table}, ok)


def cmd_nf(args):
    field = make_field("prime", args.prime)
    system = _graded_system(field, args.degree_bound)
    poly = parse_poly(field, args.poly)
    nf = system.normal_form(poly)
    return _emit(args, {"prime": args.prime, "input": args.poly,
                        "normal_form": nf.serialize(system.order)})


def cmd_center_check(args):
    field = make_field("prime", args.prime)
    system = _graded_system(field, args.degree_bound)
    rep = centrality_report(system, field)
    return _emit(args, {"prime": args.prime, "verdicts": rep},
                 all(rep.values()))


def cmd_relation_check(args):
    field = make_field("prime", args.prime)
    system = _graded_system(field, max(args.degree_bound, 13))
    residue = center_relation_residue(system, field)
    holds = residue.is_zero()
    payload = {"prime": args.prime, "relation_holds": holds}
    if not holds:
        payload["residue"] = residue.serialize(system.order)
    return _emit(args, payload, holds)


def cmd_singular_check(args):
    field = make_field("prime", args.prime)
    pt = _parse_point(field, args.point)
    partials = delta_partials(field)
    vals = [int(p.evaluate([pt.a, pt.b, pt.c, pt.d])) for p in partials]
    payload = {
        "prime": args.prime,
        "point": [int(v) for v in pt.coords()],
        "discriminant": int(discriminant_value(
            field, CubicForm(pt.a, pt.b, pt.c, pt.d))),
        "partials": vals,
        "on_twisted_cubic": on_twisted_cubic(field, pt.a, pt.b, pt.c, pt.d),
        "on_fiber": point_on_fiber(field, pt),
        "singular_locus_member": singular_locus_membership(field, pt),
    }
    return _emit(args, payload)


def cmd_quotient(args):
    field = make_field("prime", args.prime)
    pt = _parse_point(field, args.point)
    bound = _env_default("QUOTIENT_BOUND", 16)
    alg = build_quotient(field, pt, degree_bound=bound)
    checks = {
        "unit_and_associativity": check_unit_and_associativity(alg),
        "center_images_match": [int(v) for v in reduce_center_images(alg)]
        == [int(v) for v in pt.coords()],
    }
    payload = {"prime": args.prime, "point": [int(v) for v in pt.coords()],
               "dim": alg.dim, "basis": [w or "1" for w in alg.basis],
               "checks": checks}
    if args.dump:
        with open(args.dump, "w") as fh:
            json.dump(alg.to_json_dict(), fh, sort_keys=True)
        payload["dumped_to"] = args.dump
    return _emit(args, payload, all(checks.values()))


def cmd_irreps(args):
    field = make_field("prime", args.prime)
    pt = _parse_point(field, args.point)
    prof = locus_profile(field, pt, seed=args.seed)
    dim1 = search_irreps_dim1(field, pt)
    payload = {
        "prime": args.prime, "point": [int(v) for v in pt.coords()],
        "dim": prof.algebra.dim,
        "blocks": [list(b) for b in
                   wedderburn_blocks(prof.algebra, seed=args.seed).blocks],
        "gram_rank": prof.gram_rank,
        "irrep_dims": list(prof.irrep_dims),
        "sum_of_squares": prof.sum_squares,
        "dim1_reps": [list(ab) for ab in dim1],
    }
    return _emit(args, payload)


def cmd_search_dim2(args):
    field = make_field("prime", args.prime)
    res = search_irreps_dim2(field)
    payload = {"prime": args.prime,
               "irreducible_pairs": len(res["irreducible_pairs"]),
               "reducible_solutions": res["reducible_solutions"],
               "x_forms_tested": res["x_forms_tested"]}
    return _emit(args, payload, len(res["irreducible_pairs"]) == 0)


def cmd_point_module(args):
    field = make_field("prime", args.prime)
    triple = _parse_triple(field, args.triple)
    nxt = solve_next(field, triple)
    inv = gamma_invariants(field, triple)
    payload = {
        "prime": args.prime,
        "next_point": [int(nxt.x), int(nxt.y)],
        "gamma_invariants": {k: int(v) for k, v in inv.items()},
        "gamma_squared_equals_XYZ":
            field.mul(inv["gamma"], inv["gamma"])
            == field.mul(field.mul(inv["X"], inv["Y"]), inv["Z"]),
        "predicted_simple_quotient_dims":
            sorted(predict_simple_quotient(field, triple)),
        "abc_system_admits_solution":
            abc_system_admits_solution(field, triple),
    }
    if triple.is_diagonal():
        cc = central_character_diagonal(field, triple.p0)
        payload["central_character"] = [int(v) for v in cc.coords()]
        payload["central_character_singular"] = singular_locus_membership(
            field, cc)
    return _emit(args, payload)


def cmd_disc_locus(args):
    field = make_field("prime", args.prime)
    ells = [int(v) for v in args.ell.split(",")]
    report = sample_locus(field, ells, n_per_stratum=args.samples,
                          seed=args.seed, check_modified=True)
    payload = {"prime": args.prime, "seed": args.seed,
               "samples_per_stratum": args.samples,
               "report": {str(k): v for k, v in report.items()}}
    return _emit(args, payload)


def cmd_verify_all(args):
    """Umbrella: run every check once at modest sample sizes."""
    field = make_field("prime", args.prime)
    results = {}
    system = _graded_system(field, 13)

    hilbert_ok = all(system.graded_dimension(n) == hilbert_oracle(n)
                     for n in range(14))
    results["hilbert_series"] = hilbert_ok

    cent = centrality_report(system, field)
    results["centrality"] = all(cent.values())
    results["center_relation"] = center_relation_residue(system, field).is_zero()

    partials = delta_partials(field)
    cubic_ok = True
    from .commgeo import twisted_cubic_point
    for t in range(5):
        a, b, c, d = twisted_cubic_point(field, 1, t)
        cubic_ok = cubic_ok and all(
            p.evaluate([a, b, c, d]) == field.zero for p in partials)
    results["partials_vanish_on_cubic"] = cubic_ok

    res2 = search_irreps_dim2(field) if field.p <= 31 else None
    if res2 is not None:
        results["no_dim2_irreps"] = len(res2["irreducible_pairs"]) == 0

    from .commgeo import enumerate_center_fiber
    fiber = enumerate_center_fiber(field, 1, 0, 0, 1)
    prof = locus_profile(field, fiber[0], seed=args.seed)
    results["azumaya_dim9"] = prof.algebra.dim == 9
    results["azumaya_block"] = list(prof.irrep_dims) == [3]
    results["azumaya_gram_rank9"] = prof.gram_rank == 9

    ptc = central_point(field, 1, 1, 1, 1, 0, 0)
    profc = locus_profile(field, ptc, seed=args.seed)
    results["singular_three_dim1"] = (
        len(search_irreps_dim1(field, ptc)) == 3
        and profc.sum_squares == 3)

    triple_ok = True
    from .pointmod import all_proj_points
    pts = all_proj_points(field)[:5]
    for p0 in pts:
        for p1 in pts:
            tri = PointTriple(p0, p1, pts[0])
            triple_ok = triple_ok and solve_next(field, tri) == p0
            if not tri.is_diagonal():
                triple_ok = triple_ok and not abc_system_admits_solution(
                    field, tri)
    results["point_variety"] = triple_ok

    locus = sample_locus(field, [3, 5, 12], n_per_stratum=3, seed=args.seed,
                         check_modified=True)
    results["trichotomy"] = (
        all(v["members"] == 0 for v in locus[3].values())
        and locus[5]["cubic"]["members"] == 3
        and locus[5]["smooth"]["members"] == 0
        and locus[5]["degenerate"]["members"] == 0
        and all(v["members"] == v["total"] for v in locus[12].values()))

    ok = all(results.values())
    return _emit(args, {"prime": args.prime, "seed": args.seed,
                        "results": results}, ok)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubiclifford",
        description="Exact verification workbench for the generic Clifford "
                    "algebra of binary cubic forms")
    subs = parser.add_subparsers(dest="command", required=True)

    specs = [
        ("hilbert", cmd_hilbert,
         [("--max-degree", {"type": int, "default": 13})]),
        ("nf", cmd_nf, [("--poly", {"required": True})]),
        ("center-check", cmd_center_check, []),
        ("relation-check", cmd_relation_check, []),
        ("singular-check", cmd_singular_check,
         [("--point", {"required": True})]),
        ("quotient", cmd_quotient,
         [("--point", {"required": True}), ("--dump", {"default": None})]),
        ("irreps", cmd_irreps, [("--point", {"required": True})]),
        ("search-dim2", cmd_search_dim2, []),
        ("point-module", cmd_point_module, [("--triple", {"required": True})]),
        ("disc-locus", cmd_disc_locus,
         [("--ell", {"default": "3,5,12"}),
          ("--samples", {"type": int, "default": 5})]),
        ("verify-all", cmd_verify_all, []),
    ]
    for name, fn, extra in specs:
        sub = subs.add_parser(name)
        _add_common(sub)
        for flag, kwargs in extra:
            sub.add_argument(flag, **kwargs)
        sub.set_defaults(func=fn)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CubicliffordError as exc:
        print(json.dumps({"schema": SCHEMA, "ok": False,
                          "error": type(exc).__name__,
                          "message": str(exc)},
                         sort_keys=True, separators=(",", ":")))
        return 1
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
