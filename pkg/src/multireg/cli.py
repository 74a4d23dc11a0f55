"""Command-line front end.

Subcommands operate on job files (see parser) or on literal degree
arguments, print text by default, and emit versioned JSON with
--format=json; rank-2 regions can also be written as SVG staircases.
Exit codes: 0 on success, 1 on a computation error (for example a
module with irrelevant torsion where the truncation criterion was
requested), 2 on a parse error.
"""

import argparse
import json
import sys
import warnings

from .cohomology import (
    local_cohomology_box,
)
from .errors import MultiregError, ParseError
from .groebner import ideal_matrix, irrelevant_ideal, saturate
from .parser import parse_input
from .regions import (
    region_L,
    region_Q,
    staircase_svg,
    staircase_text,
)
from .regularity import (
    BoxBoundaryWarning,
    ci_regularity,
    classify_resolution,
    multigraded_regularity,
    truncation_region,
    verify_ci_hypotheses,
)
from .resolution import betti, free_resolution
from .truncation import truncate_module


def _parse_degree(text, what="degree"):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad {what} {text!r}; expected d1,d2,...") from None


def _parse_box(text):
    if ":" not in text:
        raise ParseError(f"bad box {text!r}; expected a,b:c,d")
    lo, hi = text.split(":", 1)
    return _parse_degree(lo, "box corner"), _parse_degree(hi, "box corner")


def _load_job(args):
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    return parse_input(text, prime_override=args.prime)


def _emit(args, payload, text_renderer):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_renderer())


def _region_payload(region, warnings_seen=()):
    data = region.to_json()
    if warnings_seen:
        data["warnings"] = [str(w.message) for w in warnings_seen]
    return data


def _render_region(args, region, warnings_seen=()):
    if args.format == "svg":
        svg = staircase_svg(region)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(svg)
            print(f"wrote {args.output}")
        else:
            print(svg)
        return
    if args.format == "json":
        print(json.dumps(_region_payload(region, warnings_seen), indent=2,
                         sort_keys=True))
        return
    gens = ", ".join(str(list(g)) for g in region.minimal_generators)
    print(f"minimal generators: {gens if gens else '(empty region)'}")
    if region.rank == 2 and not region.is_empty():
        print(staircase_text(region))
    for w in warnings_seen:
        print(f"warning: {w.message}")


def _module_of(args):
    job = _load_job(args)
    M = job.module()
    if getattr(args, "truncate_at", None):
        M = truncate_module(M, _parse_degree(args.truncate_at),
                            minimalize_presentation=True)
    return job, M


def cmd_betti(args):
    job, M = _module_of(args)
    table = betti(free_resolution(M))
    _emit(args, table.to_json(), table.pretty)
    return 0


def cmd_truncate(args):
    job = _load_job(args)
    M = truncate_module(job.module(), _parse_degree(args.truncate_at),
                        minimalize_presentation=True)
    def render():
        lines = [f"generators: {[list(t) for t in M.F0.twists]}",
                 f"relations: {M.relations.source.rank}"]
        for l in range(M.relations.source.rank):
            col = [str(M.relations.entry(k, l))
                   for k in range(M.F0.rank)]
            lines.append("  [" + ", ".join(col) + "]")
        return "\n".join(lines)
    payload = {
        "schema": "multireg/presentation/v1",
        "generator_degrees": [list(t) for t in M.F0.twists],
        "relation_degrees": [list(t)
                             for t in M.relations.source.twists],
        "relations": [[str(M.relations.entry(k, l))
                       for l in range(M.relations.source.rank)]
                      for k in range(M.F0.rank)],
    }
    _emit(args, payload, render)
    return 0


def cmd_classify(args):
    job, M = _module_of(args)
    verdict = classify_resolution(betti(free_resolution(M)))
    def render():
        lines = [f"verdict: {verdict.kind}"]
        if verdict.gen_degree:
            lines.append(f"generated in degree {list(verdict.gen_degree)}")
        for i, b, kind in verdict.witnesses:
            lines.append(f"  violation at index {i}, twist "
                         f"{list(b) if b else b}, region {kind}")
        return "\n".join(lines)
    _emit(args, verdict.to_json(), render)
    return 0


def _default_box(M):
    table = betti(free_resolution(M))
    r = M.ring.r
    hi = tuple(max((b[j] for (_, b) in table.data), default=0) + 1
               for j in range(r))
    return (0,) * r, hi


def cmd_regularity(args):
    job, M = _module_of(args)
    box = _parse_box(args.box) if args.box else _default_box(M)
    with warnings.catch_warnings(record=True) as seen:
        warnings.simplefilter("always", BoxBoundaryWarning)
        region = multigraded_regularity(M, box, threads=args.threads)
    _render_region(args, region, seen)
    return 0


def cmd_linear_truncations(args):
    job, M = _module_of(args)
    box = _parse_box(args.box) if args.box else _default_box(M)
    mode = args.mode or "L"
    with warnings.catch_warnings(record=True) as seen:
        warnings.simplefilter("always", BoxBoundaryWarning)
        region = truncation_region(M, mode, box, threads=args.threads)
    _render_region(args, region, seen)
    return 0


def cmd_betti_bounds(args):
    from .regions import betti_bound_L, betti_bound_Q
    job, M = _module_of(args)
    table = betti(free_resolution(M))
    L = betti_bound_L(table)
    Q = betti_bound_Q(table)
    payload = {
        "schema": "multireg/betti-bounds/v1",
        "linear_bound": L.to_json(),
        "quasilinear_bound": Q.to_json(),
    }
    def render():
        return ("linear bound minimal generators: "
                f"{[list(g) for g in L.minimal_generators]}\n"
                "quasilinear bound minimal generators: "
                f"{[list(g) for g in Q.minimal_generators]}")
    _emit(args, payload, render)
    return 0


def cmd_ci_regularity(args):
    if args.degrees:
        degrees = [_parse_degree(d) for d in args.degrees]
        region = ci_regularity(degrees)
        _render_region(args, region)
        return 0
    job = _load_job(args)
    if job.kind != "ideal":
        raise MultiregError("ci-regularity needs an ideal input")
    gens = job.ideal_gens
    if not verify_ci_hypotheses(gens):
        raise MultiregError(
            "generators are not a saturated complete intersection; "
            "the closed form does not apply")
    region = ci_regularity([g.degree() for g in gens])
    _render_region(args, region)
    return 0


def cmd_region(args):
    d = _parse_degree(args.degree)
    fn = region_L if args.kind == "L" else region_Q
    region = fn(args.level, d)
    _render_region(args, region)
    return 0


def cmd_cohomology(args):
    job, M = _module_of(args)
    if args.box:
        box = _parse_box(args.box)
    else:
        r = M.ring.r
        box = (tuple(-n - 1 for n in M.ring.n), (2,) * r)
    table = local_cohomology_box(M, box, t_start=args.t_start,
                                 t_cap=args.t_cap)
    _emit(args, table.to_json(), table.pretty)
    return 0


def cmd_saturate(args):
    job = _load_job(args)
    if job.kind != "ideal":
        raise MultiregError("saturate needs an ideal input")
    ring = job.ring
    I = saturate(ideal_matrix(ring, job.ideal_gens), irrelevant_ideal(ring))
    gens = [str(I.entry(0, l)) for l in range(I.source.rank)]
    payload = {"schema": "multireg/ideal/v1", "generators": gens}

    def render():
        # a valid job file, so the output can be fed straight back in
        head = f"ring p={ring.p} n=[{','.join(map(str, ring.n))}]"
        if not gens:
            return head + "\nideal 0"
        return head + "\nideal " + ";\n      ".join(gens)

    _emit(args, payload, render)
    return 0


def _add_common(sub, file_arg=True, truncate=False):
    if file_arg:
        sub.add_argument("file", help="job file (.mr)")
        sub.add_argument("--prime", type=int, default=None,
                         help="override the ring characteristic")
    if truncate:
        sub.add_argument("--truncate-at", default=None, metavar="d1,d2",
                         help="work with the truncation at this degree")
    sub.add_argument("--format", choices=("text", "json", "svg"),
                     default="text")
    sub.add_argument("--output", default=None,
                     help="path for svg output")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="multireg",
        description="Betti tables, truncation regions and multigraded "
                    "regularity over products of projective spaces")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("betti", help="Betti table of the minimal resolution")
    _add_common(s, truncate=True)
    s.set_defaults(fn=cmd_betti)

    s = sub.add_parser("truncate", help="presentation of a truncation")
    _add_common(s)
    s.add_argument("--truncate-at", required=True, metavar="d1,d2")
    s.set_defaults(fn=cmd_truncate)

    s = sub.add_parser("classify",
                       help="linear / quasilinear / neither verdict")
    _add_common(s, truncate=True)
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("regularity",
                       help="minimal elements of the regularity region")
    _add_common(s)
    s.add_argument("--box", default=None, metavar="a,b:c,d")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(fn=cmd_regularity)

    s = sub.add_parser("linear-truncations",
                       help="degrees with linear (or quasilinear) "
                            "truncations")
    _add_common(s)
    s.add_argument("--box", default=None, metavar="a,b:c,d")
    s.add_argument("--mode", choices=("L", "Q"), default="L")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(fn=cmd_linear_truncations)

    s = sub.add_parser("betti-bounds",
                       help="inner bounds for the truncation regions "
                            "from the Betti table")
    _add_common(s, truncate=True)
    s.set_defaults(fn=cmd_betti_bounds)

    s = sub.add_parser("ci-regularity",
                       help="closed-form regularity of a complete "
                            "intersection")
    s.add_argument("file", nargs="?", default=None)
    s.add_argument("--prime", type=int, default=None)
    s.add_argument("--degrees", nargs="*", default=None, metavar="d1,d2",
                   help="skip the file and give generator degrees directly")
    s.add_argument("--format", choices=("text", "json", "svg"),
                   default="text")
    s.add_argument("--output", default=None)
    s.set_defaults(fn=cmd_ci_regularity)

    s = sub.add_parser("region", help="print a staircase region L or Q")
    s.add_argument("kind", choices=("L", "Q"))
    s.add_argument("level", type=int)
    s.add_argument("degree", metavar="d1,d2")
    s.add_argument("--format", choices=("text", "json", "svg"),
                   default="text")
    s.add_argument("--output", default=None)
    s.set_defaults(fn=cmd_region)

    s = sub.add_parser("cohomology",
                       help="local cohomology table over a degree box")
    _add_common(s, truncate=True)
    s.add_argument("--box", default=None, metavar="a,b:c,d")
    s.add_argument("--t-start", type=int, default=None)
    s.add_argument("--t-cap", type=int, default=None)
    s.set_defaults(fn=cmd_cohomology)

    s = sub.add_parser("saturate",
                       help="saturate an ideal by the irrelevant ideal")
    _add_common(s)
    s.set_defaults(fn=cmd_saturate)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "ci-regularity" and not args.degrees \
            and not args.file:
        ap.error("ci-regularity needs a file or --degrees")
    try:
        return args.fn(args)
    except ParseError as exc:
        _report_error(args, exc)
        return 2
    except MultiregError as exc:
        _report_error(args, exc)
        return 1
    except OSError as exc:
        _report_error(args, exc)
        return 1


def _report_error(args, exc):
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"schema": "multireg/error/v1",
                          "error": type(exc).__name__,
                          "message": str(exc)}, indent=2, sort_keys=True))
    else:
        print(f"error: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
