"""Command-line interface.

Subcommands:
  construct  build one family member and print it (text, json, or dot)
  verify     check a map file for the Belyi property and a claimed type
  dessin     print the canonical dessin of a combinatorial type
  enumerate  write the full catalog up to a degree bound as JSON Lines

Exit codes: 0 pass, 1 semantic failure (not Belyi / type mismatch),
2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import CLI_FAMILIES, TriptychRecord, write_catalog
from .dessin import dessin_from_gensys
from .families import (
    BelyiMap,
    ParameterOutOfRangeError,
    VerificationError,
    verify_single_cycle,
)
from .gensys import CombinatorialType, InvalidTypeError, canonical_single_cycle

PASS, FAIL, USAGE, INTERNAL = 0, 1, 2, 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belyi",
        description="Single-cycle Belyi maps, generating systems, and dessins.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build one family member")
    p.add_argument("family", choices=sorted(CLI_FAMILIES))
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--k", type=int, help="family parameter (poly, symmetric)")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("verify", help="verify a map JSON file")
    p.add_argument("input", help="path to a map JSON file")
    p.add_argument("--type", help="claimed indices e0,e1,eInf")

    p = sub.add_parser("dessin", help="canonical dessin of a type")
    p.add_argument("typespec", help="indices e0,e1,eInf (degree is inferred)")
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("enumerate", help="write the catalog up to --dmax")
    p.add_argument("--dmax", type=int, required=True, help="degree bound (3..30)")
    p.add_argument("--out", required=True, help="output JSONL path")
    p.add_argument("--dedup", action="store_true",
                   help="drop records equivalent to an earlier one")
    return parser


def _parse_indices(spec: str) -> tuple[int, int, int]:
    parts = spec.split(",")
    if len(parts) != 3:
        raise ValueError(f"need three comma-separated indices, got {spec!r}")
    e0, e1, e_inf = (int(p.strip()) for p in parts)
    return e0, e1, e_inf


def _print_record_text(rec: TriptychRecord) -> None:
    names = {
        "single-cycle-poly": "single-cycle polynomial",
        "symmetric-single-cycle": "symmetric single-cycle",
        "power": "power map",
        "chebyshev": "chebyshev",
    }
    m = rec.bmap
    if m is not None:
        k = f" (k = {m.k})" if m.k is not None else ""
        print(f"family: {names.get(m.family, m.family)}")
        print(f"degree: {m.degree}{k}")
    if rec.ctype is not None:
        print(f"type: {rec.ctype}")
    if m is not None and m.params is not None:
        if m.params.c is not None:
            print(f"c = {m.params.c}")
        print("a = (" + ", ".join(str(x) for x in m.params.a) + ")")
    if m is not None:
        print(f"f = {m.f}")
        factored = m.factored_form()
        if factored is not None:
            print(f"  = {factored}")
        prof = m.profile
        print(f"profile over 0: {list(prof.over0)}")
        print(f"profile over 1: {list(prof.over1)}")
        print(f"profile over inf: {list(prof.over_inf)}")
        print(f"belyi: {'yes' if prof.is_belyi else 'no'}")
    gs = rec.gensys
    print(f"sigma0   = {gs.sigma0.cycle_string()}")
    print(f"sigma1   = {gs.sigma1.cycle_string()}")
    print(f"sigmaInf = {gs.sigma_inf.cycle_string()}")
    if rec.shape is not None:
        s = rec.shape
        print(
            f"shape: {s.white_leaves} white leaves, {s.black_leaves} black"
            f" leaves, {s.parallel_edges} parallel edges"
        )
    print(f"genus: {rec.genus}")
    print(f"diameter: {rec.diameter}")


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family in ("poly", "symmetric") and args.k is None:
        print("construct: --k is required for this family", file=sys.stderr)
        return USAGE
    rec = TriptychRecord.for_family(args.family, args.d, args.k)
    rec.validate()
    if args.format == "json":
        print(json.dumps(rec.to_json(), indent=2))
    elif args.format == "dot":
        print(rec.dessin.to_dot(), end="")
    else:
        _print_record_text(rec)
    return PASS


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"verify: cannot read {args.input}: {exc}", file=sys.stderr)
        return USAGE
    except json.JSONDecodeError as exc:
        print(
            f"verify: parse error in {args.input} at line {exc.lineno}"
            f" column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return USAGE
    try:
        m = BelyiMap.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        print(f"verify: malformed map record: {exc}", file=sys.stderr)
        return USAGE

    if m.f.is_constant:
        print("constant map has no ramification profile")
        return FAIL
    prof = m.profile
    print(f"degree: {prof.degree}")
    print(f"profile over 0: {list(prof.over0)}")
    print(f"profile over 1: {list(prof.over1)}")
    print(f"profile over inf: {list(prof.over_inf)}")
    print(
        f"total ramification: {prof.total_ramification}"
        f" (belyi bound 2d-2 = {2 * prof.degree - 2})"
    )
    print(f"belyi: {'yes' if prof.is_belyi else 'no'}")

    claimed: tuple[int, int, int] | None = None
    if args.type is not None:
        try:
            claimed = _parse_indices(args.type)
        except ValueError as exc:
            print(f"verify: bad --type: {exc}", file=sys.stderr)
            return USAGE
    elif m.claimed_type is not None:
        claimed = m.claimed_type.indices

    if claimed is None:
        if not prof.is_belyi:
            print(
                f"verdict: FAIL - not Belyi: total ramification"
                f" {prof.total_ramification} < {2 * prof.degree - 2}"
            )
            return FAIL
        print("verdict: PASS")
        return PASS
    ok, diag = verify_single_cycle(m, claimed)
    verdict = "PASS" if ok else "FAIL"
    print(f"claimed type {claimed}: {verdict} - {diag}")
    return PASS if ok else FAIL


def _cmd_dessin(args: argparse.Namespace) -> int:
    e0, e1, e_inf = _parse_indices(args.typespec)
    ct = CombinatorialType.from_indices(e0, e1, e_inf)
    ds = dessin_from_gensys(canonical_single_cycle(ct))
    if args.format == "json":
        print(json.dumps(ds.to_json(), indent=2))
    else:
        print(ds.to_dot(), end="")
    return PASS


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if not 3 <= args.dmax <= 30:
        print(f"enumerate: --dmax must be in 3..30, got {args.dmax}", file=sys.stderr)
        return USAGE
    try:
        with open(args.out, "w") as fh:
            counts = write_catalog(args.dmax, fh, dedup=args.dedup)
    except OSError as exc:
        print(f"enumerate: cannot write {args.out}: {exc}", file=sys.stderr)
        return USAGE
    for d in sorted(counts):
        print(f"d={d}: {counts[d]} types")
    print(f"total: {sum(counts.values())} records -> {args.out}")
    return PASS


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "dessin":
            return _cmd_dessin(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        raise RuntimeError(f"unhandled command {args.command!r}")
    except (ParameterOutOfRangeError, InvalidTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except VerificationError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
