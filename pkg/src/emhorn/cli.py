"""Command-line front end.

Subcommands construct spaces, list levels, decide horns, run sweeps, and
reproduce the no-filler certificate over the naturals.  Output is plain
text or JSON; identical invocations produce byte-identical output.

Exit codes: 0 when a filler is found or a sweep passes (and for the
counterexample command, which asserts the negative); 1 when no filler
exists or a sweep finds a counterexample; 2 for usage and validation
errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import em, horn, monoid, sset
from .monoid import CommutativeMonoid, UndecidableError

DEFAULT_DIM = 4
DEFAULT_BOUND = 3


def parse_monoid(spec: str) -> CommutativeMonoid:
    if spec == "nat":
        return monoid.nat()
    if spec == "int":
        return monoid.int_group()
    if spec == "trivial":
        return monoid.trivial()
    if spec.startswith("cyclic:"):
        return monoid.cyclic(int(spec.split(":", 1)[1]))
    if spec.startswith("table:"):
        return monoid.load_table(spec.split(":", 1)[1])
    raise ValueError(
        f"unknown monoid spec {spec!r}; use nat, int, cyclic:m, trivial or table:<file>"
    )


_SIMPLEX_RE = re.compile(r"^level:(\d+)\s*\[(.*)\]$")


def parse_simplex(text: str, space: em.EMSpace) -> em.EMSimplex:
    m = _SIMPLEX_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed simplex literal {text!r}; expected 'level:k [v1,v2,...]'")
    level = int(m.group(1))
    body = m.group(2).strip()
    values = [] if not body else [space.monoid.parse_element(tok.strip()) for tok in body.split(",")]
    return space.simplex(level, tuple(values))


_FACE_RE = re.compile(r"^(\d+):\[(.*)\]$")


def parse_face(text: str, space: em.EMSpace, level: int) -> tuple[int, em.EMSimplex]:
    m = _FACE_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed face literal {text!r}; expected 'i:[v1,v2,...]'")
    index = int(m.group(1))
    body = m.group(2).strip()
    values = [] if not body else [space.monoid.parse_element(tok.strip()) for tok in body.split(",")]
    return index, space.simplex(level, tuple(values))


def _emit_json(data: dict) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def cmd_enumerate(args) -> int:
    M = parse_monoid(args.monoid)
    dim = args.dim
    K = em.EMSpace(M, args.n, dim)
    levels = [args.level] if args.level is not None else list(range(dim + 1))
    for k in levels:
        if not 0 <= k <= dim:
            raise ValueError(f"level {k} outside truncation 0..{dim}")
    sphere = sset.sphere(args.n, dim) if args.n >= 1 else None
    if args.format == "json":
        data = {
            "space": K.name,
            "dim": dim,
            "sphere": None
            if sphere is None
            else {str(k): [sset.render_id(x) for x in sphere.level(k)] for k in levels},
            "levels": [
                {
                    "level": k,
                    "monoid": M.name,
                    "rank": K.rank(k),
                    "generators": K.gen_names(k),
                }
                for k in levels
            ],
        }
        _emit_json(data)
        return 0
    if args.level is not None:
        k = args.level
        if sphere is not None:
            print(f"S^{args.n}[{k}]: " + " ".join(sset.render_id(x) for x in sphere.level(k)))
        print(f"{K.name}[{k}] = {M.name}^{K.rank(k)}")
        print("generators: " + (" ".join(K.gen_names(k)) or "(none)"))
    else:
        if sphere is not None:
            print(f"S^{args.n} levels up to dimension {dim}:")
            print(sphere.dump())
        print(f"{K.name} levels:")
        for k in range(dim + 1):
            gens = " ".join(K.gen_names(k))
            suffix = f"  generators: {gens}" if gens else ""
            print(f"{k}: {M.name}^{K.rank(k)}{suffix}")
    return 0


def cmd_faces(args) -> int:
    M = parse_monoid(args.monoid)
    K = em.EMSpace(M, args.n, args.dim)
    if args.simplex is not None:
        x = parse_simplex(args.simplex, K)
        if not 1 <= x.level <= K.dim_bound:
            raise ValueError(f"faces need a level in 1..{K.dim_bound}, got {x.level}")
        results = {i: K.face(x.level, i, x) for i in range(x.level + 1)}
        if args.format == "json":
            _emit_json(
                {
                    "space": K.name,
                    "simplex": list(x.coords),
                    "level": x.level,
                    "faces": {str(i): list(y.coords) for i, y in results.items()},
                }
            )
        else:
            print(f"simplex: {K.render_simplex(x)}")
            for i, y in results.items():
                print(f"d{i} -> {K.render_simplex(y)}")
        return 0
    k = args.level if args.level is not None else K.dim_bound
    if not 1 <= k <= K.dim_bound:
        raise ValueError(f"faces need a level in 1..{K.dim_bound}, got {k}")
    lower = K.gen_names(k - 1)
    upper = K.gen_names(k)
    table = {
        i: {
            lower[pos]: [upper[v] for v in vars_]
            for pos, vars_ in enumerate(K.face_fibers(k, i))
        }
        for i in range(k + 1)
    }
    if args.format == "json":
        _emit_json({"space": K.name, "level": k, "fibers": {str(i): t for i, t in table.items()}})
    else:
        print(f"faces at level {k} of {K.name}:")
        for i in range(k + 1):
            if not lower:
                print(f"d{i}: (trivial target level)")
                continue
            parts = [
                f"{g} <- " + (" + ".join(srcs) if srcs else "0")
                for g, srcs in table[i].items()
            ]
            print(f"d{i}: " + "; ".join(parts))
    return 0


def cmd_check_horn(args) -> int:
    M = parse_monoid(args.monoid)
    try:
        n_str, k_str = args.horn.split(",")
        hn, hk = int(n_str), int(k_str)
    except ValueError:
        raise ValueError(f"malformed --horn {args.horn!r}; expected 'n,k'") from None
    dim = max(args.dim, hn)
    K = em.EMSpace(M, args.n, dim)
    faces = {}
    for literal in args.faces:
        i, x = parse_face(literal, K, hn - 1)
        if i in faces:
            raise ValueError(f"face {i} given twice")
        faces[i] = x
    problem = horn.HornProblem(K, hn, hk, faces)
    ok, violation = horn.validate_horn(problem)
    if not ok:
        raise ValueError(f"incompatible horn data at face pair {violation}")
    result = horn.solve_em(horn.build_constraints(K, problem))
    if args.format == "json":
        _emit_json(horn.certificate_json(problem, result))
        return 0 if result.found else 1
    print(f"horn {problem.describe()}")
    for i, x in sorted(faces.items()):
        print(f"face {i}: {K.render_simplex(x)}")
    if result.found:
        y = result.filler
        print(f"filler: {K.render_simplex(y)}")
        for i, x in sorted(faces.items()):
            got = K.face(hn, i, y)
            print(f"verified: d{i} -> [{','.join(M.render(c) for c in got.coords)}] matches face {i}")
        return 0
    for step in result.steps:
        if step.kind == "assign":
            print(f"forced: x({step.variable}) = {M.render(step.value)}   [face {step.face}]")
        elif step.kind == "contradiction":
            print(f"required: {step.equation}: no solution in {M.name}")
        else:
            print(step.equation)
    print("no filler exists")
    return 1


def cmd_sweep(args) -> int:
    M = parse_monoid(args.monoid)
    K = em.EMSpace(M, args.n, args.dim)
    bound = None if M.is_finite else args.bound
    if args.kind == "quasicategory":
        report = horn.sweep_quasicategory(K, args.dim, bound=bound, check_unique=args.unique)
    else:
        report = horn.sweep_kan(K, args.dim, bound=bound)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        print(report.summary())
    return 0 if report.passed else 1


def cmd_counterexample(args) -> int:
    report = horn.quasicategory_counterexample(args.f0)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        for line in report.lines():
            print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emhorn",
        description="Eilenberg-MacLane simplicial monoids and horn filling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dim_default=DEFAULT_DIM):
        p.add_argument("--monoid", default="nat", help="nat | int | cyclic:m | trivial | table:<file>")
        p.add_argument("--n", type=int, default=2, help="degree of the space (default 2)")
        p.add_argument("--dim", type=int, default=dim_default, help=f"truncation dimension (default {dim_default})")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("enumerate", help="list sphere cells, generators and level monoids")
    common(p)
    p.add_argument("--level", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("faces", help="show face fibers, or evaluate faces of a simplex")
    common(p)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--simplex", default=None, help="simplex literal 'level:k [v1,v2,...]'")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("check-horn", help="decide one horn-filling problem")
    common(p)
    p.add_argument("--horn", required=True, help="horn as 'n,k'")
    p.add_argument("--faces", required=True, nargs="+", help="face literals 'i:[v1,v2,...]'")
    p.set_defaults(func=cmd_check_horn)

    p = sub.add_parser("sweep", help="decide every compatible horn up to a dimension")
    common(p, dim_default=3)
    p.add_argument("--kind", choices=["quasicategory", "kan"], default="quasicategory")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coordinate bound for infinite monoids")
    p.add_argument("--unique", action="store_true", help="also check fillers are unique")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser(
        "paper-counterexample",
        help="certify the inner 3-horn over the naturals that has no filler",
    )
    p.add_argument("--f0", type=int, default=0, help="value of the free 0-face")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_counterexample)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (ValueError, UndecidableError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
