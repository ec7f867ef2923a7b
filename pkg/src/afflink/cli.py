"""Command-line front end.

A thin client over the service handlers: each subcommand assembles the
same request model the HTTP endpoint takes, invokes the handler in
process and prints the JSON (or DOT) document.  Exit codes: 0 success,
1 domain error (with a machine-readable error object), 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import DomainError
from .service import handlers, schemas


def _emit(doc) -> None:
    if isinstance(doc, str):
        print(doc)
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))


def _weight_arg(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"bad weight JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise argparse.ArgumentTypeError("weight must be a JSON object")
    return obj


def _root_arg(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"bad root JSON: {exc}") from exc
    return obj


def _coords_arg(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coordinate list {text!r}") from exc


def _box_model(args) -> schemas.BoxModel | None:
    if getattr(args, "top", None):
        return schemas.BoxModel(tops=args.top, depth=args.depth)
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afflink",
        description="Affine Kac-Moody linkage and character combinatorics (exact arithmetic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--type", required=True, help="Cartan type, e.g. A1, G2")
        return p

    def add_box(p, need_top=False):
        p.add_argument("--top", action="append", type=_weight_arg, required=need_top,
                       help="box top weight (JSON); repeatable")
        p.add_argument("--depth", type=int, default=0, help="box depth bound")

    p = cmd("info", help="root datum, dual Coxeter number, critical level")

    p = cmd("pair", help="pairing of a weight with a real affine coroot")
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--root", type=_root_arg, required=True)

    for name, help_ in (("reflect", "linear reflection s_beta"),
                        ("dot", "dot-action s_beta . weight")):
        p = cmd(name, help=help_)
        p.add_argument("--weight", type=_weight_arg, required=True)
        p.add_argument("--root", type=_root_arg, required=True)

    p = cmd("leq", help="compare two weights in the affine order")
    p.add_argument("--lower", type=_weight_arg, required=True)
    p.add_argument("--upper", type=_weight_arg, required=True)

    p = cmd("box", help="enumerate a finite box")
    add_box(p, need_top=True)

    p = cmd("hasse", help="covering edges of the order on a box")
    add_box(p, need_top=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = cmd("integrality", help="finite integral roots and criticality")
    p.add_argument("--weight", type=_weight_arg, required=True)

    p = cmd("kk-pred", help="Kac-Kazhdan predecessors within a box")
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--fiber", default="closed")
    add_box(p)

    p = cmd("class", help="linkage class within a box")
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--fiber", default="closed")
    p.add_argument("--restricted", action="store_true")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    add_box(p)

    p = cmd("alpha-down", help="maximal dot-reflection below a critical weight")
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--alpha", type=_coords_arg, required=True,
                   help="finite root in simple-root coordinates, e.g. 1 or 1,1")
    add_box(p)

    p = cmd("partition", help="affine Kostant partition number of a weight difference")
    p.add_argument("--gamma", type=_weight_arg, required=True)

    p = cmd("verma-char", help="truncated Verma character")
    p.add_argument("--weight", type=_weight_arg, required=True)
    add_box(p)

    p = cmd("weyl-kac", help="truncated Weyl-Kac character (dominant integral weight)")
    p.add_argument("--weight", type=_weight_arg, required=True)
    add_box(p)

    p = cmd("q-mult", help="Verma-flag multiplicities of the big truncated projective")
    p.add_argument("--weight", type=_weight_arg, required=True)
    add_box(p)

    p = cmd("proj-mult", help="predicted Verma-flag multiplicities of the projective cover")
    p.add_argument("--weight", type=_weight_arg, required=True)
    p.add_argument("--fiber", default="subgeneric:1")
    p.add_argument("--restricted", action="store_true")
    add_box(p)

    p = cmd("decomp", help="decomposition matrix over a box (generic/subgeneric fiber)")
    p.add_argument("--fiber", required=True)
    add_box(p, need_top=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args) -> object:
    t = args.type if hasattr(args, "type") else None
    if args.command == "info":
        return handlers.info(schemas.TypeRequest(type=t))
    if args.command == "pair":
        return handlers.pair(schemas.PairRequest(type=t, weight=args.weight, root=args.root))
    if args.command == "reflect":
        return handlers.reflect(schemas.ReflectRequest(type=t, weight=args.weight, root=args.root))
    if args.command == "dot":
        return handlers.dot(schemas.ReflectRequest(type=t, weight=args.weight, root=args.root))
    if args.command == "leq":
        return handlers.leq(schemas.LeqRequest(type=t, lower=args.lower, upper=args.upper))
    if args.command == "box":
        return handlers.box(schemas.BoxRequest(type=t, box=_box_model(args)))
    if args.command == "hasse":
        req = schemas.BoxRequest(type=t, box=_box_model(args))
        return handlers.hasse_dot(req) if args.format == "dot" else handlers.hasse(req)
    if args.command == "integrality":
        return handlers.integrality(schemas.IntegralityRequest(type=t, weight=args.weight))
    if args.command == "kk-pred":
        return handlers.kk_predecessors(schemas.KKRequest(
            type=t, weight=args.weight, fiber=args.fiber,
            box=_box_model(args), depth=args.depth))
    if args.command == "class":
        req = schemas.ClassRequest(
            type=t, weight=args.weight, fiber=args.fiber, restricted=args.restricted,
            box=_box_model(args), depth=args.depth)
        return handlers.linkage_class_dot(req) if args.format == "dot" else handlers.linkage_class(req)
    if args.command == "alpha-down":
        return handlers.alpha_down(schemas.AlphaDownRequest(
            type=t, weight=args.weight, alpha=args.alpha,
            box=_box_model(args), depth=args.depth))
    if args.command == "partition":
        return handlers.partition(schemas.PartitionRequest(type=t, gamma=args.gamma))
    if args.command == "verma-char":
        return handlers.verma_character(schemas.CharacterRequest(
            type=t, weight=args.weight, box=_box_model(args), depth=args.depth))
    if args.command == "weyl-kac":
        return handlers.weyl_kac_character(schemas.CharacterRequest(
            type=t, weight=args.weight, box=_box_model(args), depth=args.depth))
    if args.command == "q-mult":
        return handlers.q_multiplicities(schemas.CharacterRequest(
            type=t, weight=args.weight, box=_box_model(args), depth=args.depth))
    if args.command == "proj-mult":
        return handlers.projective_multiplicities(schemas.ProjRequest(
            type=t, weight=args.weight, fiber=args.fiber, restricted=args.restricted,
            box=_box_model(args), depth=args.depth))
    if args.command == "decomp":
        return handlers.decomposition_matrix(schemas.DecompRequest(
            type=t, fiber=args.fiber, box=_box_model(args)))
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        _emit(_dispatch(args))
    except ValidationError as exc:
        print(json.dumps({"error": "ValidationError", "message": str(exc)}))
        return 2
    except DomainError as exc:
        print(json.dumps({"error": exc.name, "message": str(exc)}))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
