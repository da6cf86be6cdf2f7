"""Command-line front end.

Exit status: 0 on success, 1 when verification fails, 2 on invalid input.
"""

import argparse
import json
import sys

from .balls import A_set, Variant
from .cyclic import build_P
from .errors import SpherewrightError
from .serialize import deserialize, serialize
from .sphere import build_P_prime, build_Q
from .triangulate import count_distinct_classes, parse_mask, realize
from .verify import AS_STATED, LemmaId, run_suite, suite_passes


def _sites_arg(value):
    value = value.strip().lower()
    if value in ("auto", "all"):
        return value
    sites = []
    for item in value.split(","):
        a, sep, u = item.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"site {item!r} is not of the form a:u")
        try:
            sites.append((int(a), int(u)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"site {item!r} is not of the form a:u") from None
    return sites


def _positive(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="spherewright",
                                description="Polyhedral 3-spheres with many bipyramids.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_choices=("json", "facets")):
        sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument("--variant", choices=[v.value for v in Variant], default="extended")
        sp.add_argument("--format", choices=fmt_choices, default="json")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    b = sub.add_parser("build", help="build P(n), P'(n) or Q(n)")
    common(b)
    b.add_argument("--sites", type=_sites_arg, default="auto",
                   help="auto, all, or a comma list of a:u pairs")
    b.add_argument("--stage", choices=("P", "P_prime", "Q"), default="Q")

    v = sub.add_parser("verify", help="run the lemma checks")
    common(v, ("json", "text"))
    v.add_argument("--lemma", action="append", choices=[x.value for x in LemmaId],
                   help="restrict to this check (repeatable)")
    v.add_argument("--strict-paper", action="store_true",
                   help="treat as-stated mismatches of the boundary/interior claims as failures")

    t = sub.add_parser("triangulate", help="split every bipyramid per a mask")
    common(t)
    t.add_argument("--mask", required=True,
                   help="one bit per site in (a,u) order: 0 = two tetrahedra, 1 = three")

    c = sub.add_parser("count-distinct", help="count isomorphism classes over all masks")
    common(c, ("json", "text"))
    c.add_argument("--limit", type=int, default=1 << 16)
    c.add_argument("--seed", default=None, help="relabel each triangulation randomly first")

    e = sub.add_parser("export", help="convert between json and facets formats")
    e.add_argument("--input", "-i", required=True)
    e.add_argument("--format", choices=("json", "facets"), required=True)
    e.add_argument("--output", "-o")
    return p


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_build(args):
    if args.stage == "P":
        obj = build_P(args.n)
    elif args.stage == "P_prime":
        obj = build_P_prime(args.n, args.variant)
    else:
        obj = build_Q(args.n, args.variant, args.sites)
    _emit(serialize(obj, args.format), args.output)
    return 0


def _cmd_verify(args):
    reports = run_suite(args.n, args.variant, args.lemma)
    if args.format == "json":
        out = serialize(reports, "json")
    else:
        lines = []
        for r in reports:
            line = r.summary()
            if not r.passed and r.lemma_id in AS_STATED and not args.strict_paper:
                line += "  (finding)"
            lines.append(line)
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return 0 if suite_passes(reports, args.strict_paper) else 1


def _cmd_triangulate(args):
    Q = build_Q(args.n, args.variant, "auto")
    mask = parse_mask(args.mask, len(Q.bipyramid_cells))
    _emit(serialize(realize(Q, mask), args.format), args.output)
    return 0


def _cmd_count(args):
    res = count_distinct_classes(args.n, args.variant, limit=args.limit, seed=args.seed)
    if args.format == "json":
        out = json.dumps(res.as_dict(), indent=1) + "\n"
    else:
        rows = [f"n={res.n} variant={res.variant} vertices={res.num_vertices} "
                f"bipyramids={res.num_bipyramids} classes={res.classes} "
                f"lower_bound={res.lower_bound}",
                "class\tthree_splits\tf_vector\tmasks"]
        for k, (fv, threes, masks) in enumerate(res.table, start=1):
            rows.append(f"{k}\t{threes}\t{','.join(map(str, fv))}\t{' '.join(masks)}")
        out = "\n".join(rows) + "\n"
    _emit(out, args.output)
    return 0


def _cmd_export(args):
    with open(args.input) as fh:
        obj = deserialize(fh.read())
    _emit(serialize(obj, args.format), args.output)
    return 0


COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "triangulate": _cmd_triangulate,
    "count-distinct": _cmd_count,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "n"):
            A_set(args.n)
        return COMMANDS[args.command](args)
    except (SpherewrightError, OSError) as exc:
        print(f"spherewright: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
