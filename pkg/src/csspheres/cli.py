"""Batch command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails (the
first counterexample is printed), 2 on usage or parameter errors.  All
output is deterministic: facets and report lines are emitted in canonical
order.  Every verification path is a thin wrapper over library operations.

The environment variable CSSPHERES_ISO_BUDGET bounds the node count of
isomorphism and automorphism searches (unset: unlimited).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import builders, flips, iso, props, sew3, shelling
from .core import face_key, fh_vectors, topology_report
from .errors import CsspheresError
from .fileio import ComplexFile, dumps, read_path, write_path


def _iso_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("CSSPHERES_ISO_BUDGET")
    return int(env) if env else None


def _emit(cf: ComplexFile, args) -> None:
    if args.out:
        write_path(args.out, cf, args.format)
    else:
        sys.stdout.write(dumps(cf, args.format or "json"))


def _fmt_face(face) -> str:
    return "{" + ",".join(str(v) for v in face) + "}"


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


_BUILD_NEEDS = {
    "cross": (),
    "delta": ("d",),
    "ball": ("d", "i"),
    "lambda": ("d",),
    "squeezed": ("k",),
    "delta-i": (),
    "lambda-squeezed": ("k",),
}


def cmd_build(args) -> int:
    kind = args.kind
    missing = [f"--{p}" for p in _BUILD_NEEDS[kind] if getattr(args, p) is None]
    if missing:
        raise CsspheresError(f"build {kind} requires {', '.join(missing)}")
    if kind == "cross":
        cf = ComplexFile(builders.cross_polytope(args.n))
    elif kind == "delta":
        cf = ComplexFile(builders.build_delta(args.d, args.n))
    elif kind == "ball":
        cf = ComplexFile(builders.build_B(args.d, args.i, args.n))
    elif kind == "lambda":
        c = builders.build_lambda(args.d, args.n, normalize=args.normalize)
        cf = ComplexFile(c, space="V" if args.normalize else "W")
    elif kind == "squeezed":
        cf = ComplexFile(builders.squeezed_ball(args.k, args.n))
    elif kind == "delta-i":
        index_set = sew3.IndexSet.parse(args.n, args.i_set or "")
        if args.tree_out:
            tree = sew3.build_T(index_set)
            with open(args.tree_out, "w", encoding="utf-8") as fh:
                fh.write(tree.edge_list_text())
        cf = ComplexFile(sew3.build_delta_I(index_set))
    elif kind == "lambda-squeezed":
        ball = read_path(args.ball).complex if args.ball else builders.squeezed_ball(args.k, args.n)
        cf = ComplexFile(builders.lambda_squeezed(args.k, args.n, ball), space="W")
    else:  # pragma: no cover - argparse restricts choices
        raise CsspheresError(f"unknown build kind {kind}")
    _emit(cf, args)
    return 0


def _verify_one(path: str, args) -> list[tuple[bool, str]]:
    cf = read_path(path)
    c = cf.complex
    ground = None
    if cf.space == "W":
        ground = range(3, c.ambient_n + 1)
    results: list[tuple[bool, str]] = []
    if args.cs:
        ok = props.is_cs(c)
        results.append((ok, f"{path} cs {'holds' if ok else 'fails'}"))
    if args.neighborly is not None or args.exactly_neighborly is not None:
        report = props.cs_neighborliness(c, ground)
        if args.neighborly is not None:
            ok = report.max_i >= args.neighborly
            results.append(
                (ok, f"{path} cs-{args.neighborly}-neighborly (max_i={report.max_i})")
            )
        if args.exactly_neighborly is not None:
            ok = report.max_i == args.exactly_neighborly
            detail = f"max_i={report.max_i}"
            if not ok and report.witness:
                detail += f" witness={_fmt_face(report.witness)}"
            results.append((ok, f"{path} exactly cs-{args.exactly_neighborly}-neighborly ({detail})"))
    if args.sphere or args.ball:
        report = topology_report(c)
        if args.sphere:
            ok = report.is_sphere()
            fh = fh_vectors(c)
            symmetric = fh.h == fh.h[::-1]
            results.append((ok and symmetric, f"{path} sphere report (betti={report.z2_betti}, h-symmetric={symmetric})"))
        if args.ball:
            ok = report.is_ball()
            results.append((ok, f"{path} ball report (betti={report.z2_betti})"))
    if args.stacked is not None:
        report = props.stackedness(c)
        ok = report.min_i == args.stacked
        results.append((ok, f"{path} exactly {args.stacked}-stacked (min_i={report.min_i})"))
    return results


def cmd_verify(args) -> int:
    workers = max(1, args.threads)
    if workers == 1 or len(args.files) == 1:
        outcomes = [_verify_one(path, args) for path in args.files]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda p: _verify_one(p, args), args.files))
    all_ok = True
    for results in outcomes:
        for ok, line in results:
            print(("PASS " if ok else "FAIL ") + line)
            all_ok = all_ok and ok
    return 0 if all_ok else 1


def cmd_census(args) -> int:
    cf = read_path(args.file)
    census = props.edge_link_census(cf.complex)
    edges = sorted(census, key=face_key)
    if args.at_least is not None:
        edges = [e for e in edges if census[e] >= args.at_least]
    lines = [f"{e[0]}\t{e[1]}\t{census[e]}" for e in edges]
    body = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return 0


def cmd_flips(args) -> int:
    plan = flips.FlipPlan.parse(f"{args.k} {args.n} {args.j or ''}".strip())
    gamma = flips.build_gamma(plan.k, plan.n, plan.indices)
    delta = builders.build_delta(2 * plan.k - 1, plan.n)
    drop = len(delta.facets) - len(gamma.facets)
    checks = [
        (props.is_cs(gamma), "flipped sphere is cs"),
        (drop == 2 * len(plan.indices), f"facet drop {drop} == 2|J|"),
    ]
    for i in plan.indices:
        pair = flips.fg_pair(plan.k, i)
        checks.append((not gamma.has_face(pair.f), f"F_{i} removed"))
        checks.append((gamma.has_face(pair.g), f"G_{i} present"))
    all_ok = True
    for ok, line in checks:
        print(("PASS " if ok else "FAIL ") + line)
        all_ok = all_ok and ok
    if args.out:
        write_path(args.out, ComplexFile(gamma), args.format)
    return 0 if all_ok else 1


def cmd_sew(args) -> int:
    base = read_path(args.base)
    ball = read_path(args.ball).complex
    vertex = args.vertex if args.vertex is not None else base.complex.ambient_n + 1
    sewn = builders.sew(base.complex, ball, vertex)
    _emit(ComplexFile(sewn, space=base.space), args)
    return 0


def cmd_shell(args) -> int:
    if args.kind == "delta3":
        c = builders.build_delta(3, args.n)
        order = shelling.symmetric_shelling_delta3(args.n)
    else:
        c = builders.build_B(4, 2, args.n)
        order = shelling.shelling_B42(args.n)
    result = shelling.is_shelling(c, order.facets)
    if not result.valid:
        print(f"FAIL shelling of {args.kind} n={args.n} breaks at position {result.failed_at}")
        return 1
    lines = [
        " ".join(str(v) for v in f) + "  # restriction " + _fmt_face(r)
        for f, r in zip(result.facets, result.restriction_faces)
    ]
    body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(f"PASS shelling of {args.kind} n={args.n} ({len(result.facets)} facets)")
    return 0


def cmd_iso(args) -> int:
    a = read_path(args.a).complex
    b = read_path(args.b).complex
    for name, ok in iso.necessary_conditions(a, b):
        print(("PASS " if ok else "FAIL ") + f"necessary condition: {name}")
        if not ok:
            print("not isomorphic")
            return 1
    witness = iso.isomorphic(a, b, budget=_iso_budget(args))
    if witness is None:
        print("not isomorphic (search exhausted)")
        return 1
    print("isomorphic; witness map:")
    for v in sorted(witness, key=lambda x: (abs(x), x < 0)):
        print(f"{v}\t{witness[v]}")
    return 0


def cmd_aut(args) -> int:
    c = read_path(args.file).complex
    maps = iso.automorphisms(c, budget=_iso_budget(args))
    print(f"automorphisms: {len(maps)}")
    for idx, m in enumerate(maps):
        print(f"# map {idx}")
        for v in sorted(m, key=lambda x: (abs(x), x < 0)):
            print(f"{v}\t{m[v]}")
    if args.expect is not None and len(maps) != args.expect:
        print(f"FAIL expected {args.expect} automorphisms, found {len(maps)}")
        return 1
    return 0


def cmd_export(args) -> int:
    cf = read_path(args.file)
    _emit(cf, args)
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csspheres", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a named complex and write it out")
    p.add_argument("kind", choices=["cross", "delta", "ball", "lambda", "squeezed", "delta-i", "lambda-squeezed"])
    p.add_argument("--d", type=int, help="dimension")
    p.add_argument("--i", type=int, help="stackedness index for balls")
    p.add_argument("--n", type=int, required=True, help="ambient size")
    p.add_argument("--k", type=int, help="half-dimension for squeezed families")
    p.add_argument("--i-set", help="comma list of sewing indices, e.g. 3,5")
    p.add_argument("--tree-out", help="also write the facet tree as an edge list (delta-i)")
    p.add_argument("--ball", help="squeezed-ball file for lambda-squeezed")
    p.add_argument("--normalize", action="store_true", help="shift W labels onto V labels")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run requested property checks on complex files")
    p.add_argument("files", nargs="+")
    p.add_argument("--cs", action="store_true")
    p.add_argument("--neighborly", type=int)
    p.add_argument("--exactly-neighborly", type=int)
    p.add_argument("--sphere", action="store_true")
    p.add_argument("--ball", action="store_true")
    p.add_argument("--stacked", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="edge-link census as tab-separated rows")
    p.add_argument("file")
    p.add_argument("--at-least", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("flips", help="apply a symmetric flip plan and check the outcome")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", help="comma list of flip indices")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_flips)

    p = sub.add_parser("sew", help="replace ±ball with cones over its boundary")
    p.add_argument("--base", required=True)
    p.add_argument("--ball", required=True)
    p.add_argument("--vertex", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_sew)

    p = sub.add_parser("shell", help="emit and verify an explicit shelling order")
    p.add_argument("kind", choices=["delta3", "b42"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_shell)

    p = sub.add_parser("iso", help="isomorphism test with witness or trace")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("aut", help="enumerate all automorphisms")
    p.add_argument("file")
    p.add_argument("--expect", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("export", help="convert between json and text formats")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "text"], required=True)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CsspheresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
