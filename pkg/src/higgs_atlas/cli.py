"""Command-line interface.

Verbs:
    build      construct an object from a group tag and discrete labels
    stability  verdict for an object document
    limit      graded limits: explicit weights, a weight search, or the
               destabilized-branch fixture
    sw         Stiefel-Whitney arithmetic and reachability
    census     component catalog for a group
    param      exact parameterization of a labelled component
    dim        dimension bookkeeping for a group
    verify     run the named internal consistency checks

All output is deterministic JSON on stdout (sorted keys); `--table` on
census and verify renders a plain-text table instead.  Object documents
are read with `--input PATH` where PATH may be `-` for stdin.  Exit code
0 on success, 1 on a reported domain error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import (
    SECTOR_ALL,
    SECTOR_MAXIMAL,
    census,
    character_variety_dimension,
    dimension_consistency,
    group_dim,
    half_dimension,
    parameterization,
    resolve_extra_factor_reading,
)
from .curve import Curve
from .deformation import (
    DIRECTION_TO_INFINITY,
    DIRECTION_TO_ZERO,
    NDescriptor,
    WeightAssignment,
    graded_limit,
    limit_destabilized_branch,
    search_admissible_weights,
)
from .errors import HiggsAtlasError, ParseError, PreconditionError, UnsupportedGroupError
from .f2cohomology import (
    F2Class,
    minimal_realizing_n,
    sw_surjectivity_witnesses,
    total_sw_of_sum,
)
from .higgsmodel import (
    GroupTag,
    PrymW0,
    SplitW0,
    TrivialW0,
    build_degree_zero_chain,
    build_exotic_so,
    build_extension_deformed_so35,
    build_hitchin_sl,
    build_hitchin_so,
    build_hitchin_so_nn,
    build_hitchin_sp,
    build_maximal_so23,
    build_maximal_so2n,
    build_so12,
    build_twisted_fuchsian_sp,
    bundle_from_dict,
    bundle_to_dict,
)
from .stability import check_polystability, milnor_wood_bound
from .verification import all_check_names, run_checks


def _emit(data: dict) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _read_document(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not valid JSON: {exc}") from exc


def _parse_classes(genus: int, text: str) -> list[F2Class]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        cls = F2Class.from_bits(chunk)
        if cls.genus != genus:
            raise ParseError(
                f"class {chunk!r} has {len(chunk)} bits, expected {2 * genus}"
            )
        out.append(cls)
    if not out:
        raise ParseError("no classes given")
    return out


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


def _parse_w0(genus: int, text: str):
    parts = text.split(":")
    if parts[0] == "split":
        if len(parts) != 2:
            raise ParseError("expected split:<degree>")
        return SplitW0(int(parts[1]))
    if parts[0] == "prym":
        if len(parts) != 3:
            raise ParseError("expected prym:<sw1 bits>:<sw2 bit>")
        return PrymW0(F2Class.from_bits(parts[1]), int(parts[2]))
    if parts[0] == "trivial" and len(parts) == 1:
        return TrivialW0()
    raise ParseError(f"unknown rank-2 complement descriptor {text!r}")


def _cmd_build(args) -> dict:
    group = GroupTag.parse(args.group)
    curve = Curve(args.genus)
    q_on = _parse_ints(args.q_on) if args.q_on else ()
    fam, params = group.family, group.params

    if fam == "sl":
        h = build_hitchin_sl(curve, params[0], q_on, spin_name=args.spin_name)
    elif fam == "sp":
        if args.classes:
            classes = _parse_classes(args.genus, args.classes)
            if 2 * len(classes) != params[0]:
                raise ParseError(
                    f"{len(classes)} classes do not fill rank {params[0]}"
                )
            h = build_twisted_fuchsian_sp(
                curve, classes, spin_name=args.spin_name or "s", q2=args.q2
            )
        else:
            h = build_hitchin_sp(curve, params[0] // 2, q_on, args.spin_name or "s")
    elif fam == "so" and params == (1, 2):
        if args.d is None:
            raise PreconditionError("so:1,2 needs an integer label --d")
        h = build_so12(
            curve,
            args.d,
            mu=args.mu,
            nu=args.nu if args.nu is not None else True,
        )
    elif fam == "so0" and len(params) == 2 and params[0] == params[1]:
        h = build_hitchin_so_nn(curve, params[0], q_on, pfaffian=args.pfaffian)
    elif fam == "so0" and params == (3, 5) and args.deformed:
        if args.d is None:
            raise PreconditionError("the deformed family needs --d")
        h = build_extension_deformed_so35(curve, args.d, mu=args.mu)
    elif fam == "so0" and params == (2, 3) and args.maximal:
        if args.d is None:
            raise PreconditionError("the maximal signature-(2,3) family needs --d")
        h = build_maximal_so23(
            curve,
            args.d,
            mu=args.mu,
            nu=args.nu if args.nu is not None else True,
            q2=args.q2,
        )
    elif fam == "so0" and params[0] == 2 and params[1] >= 4 and args.maximal:
        if not args.w0:
            raise PreconditionError(
                "the maximal signature-(2,n) family needs --w0 "
                "(split:<d>, prym:<bits>:<bit>, or trivial)"
            )
        h = build_maximal_so2n(
            curve, params[1], _parse_w0(args.genus, args.w0), q2=args.q2
        )
    elif fam == "so0" and len(params) == 2 and params[1] == params[0] + 1:
        if args.d is None:
            h = build_hitchin_so(curve, params[0], q_on)
        elif args.d == 0:
            h = build_degree_zero_chain(curve, params[0])
        else:
            h = build_exotic_so(
                curve,
                params[0],
                args.d,
                mu=args.mu,
                nu=args.nu if args.nu is not None else False,
                q_on=q_on,
            )
    else:
        raise UnsupportedGroupError(f"no builder for {group} with these flags")
    return bundle_to_dict(h)


def _cmd_stability(args) -> dict:
    h = bundle_from_dict(_read_document(args.input))
    verdict = check_polystability(
        h, assume_summand_generated=args.assume_summand_generated
    )
    out = verdict.to_dict()
    out["group"] = str(h.group)
    try:
        out["bound"] = milnor_wood_bound(h.group, h.genus)
    except UnsupportedGroupError:
        pass
    return out


def _cmd_limit(args) -> dict:
    h = bundle_from_dict(_read_document(args.input))
    if args.search is not None:
        results = search_admissible_weights(
            h, args.search, direction=args.direction, higgs_scale=args.scale
        )
        return {
            "count": len(results),
            "admissible": [
                {"weights": list(w.weights), "limit": bundle_to_dict(res.limit)}
                for w, res in results
            ],
        }
    if args.line_degree is not None:
        res = limit_destabilized_branch(h, NDescriptor(args.line_degree))
        return res.to_dict()
    if not args.weights:
        raise PreconditionError("need --weights, --search, or --line-degree")
    w = WeightAssignment(_parse_ints(args.weights), args.scale)
    return graded_limit(h, w, args.direction, with_stability=args.with_stability).to_dict()


def _cmd_sw(args) -> dict:
    if args.surjectivity:
        report = sw_surjectivity_witnesses(args.genus, args.n)
        return {
            "genus": report.genus,
            "n": report.n,
            "complete": report.complete,
            "witnesses": {
                pair.label(): [c.bits() for c in classes]
                for pair, classes in report.witness_map.items()
            },
            "missing": [pair.label() for pair in report.missing],
        }
    if args.minimal_n:
        table = minimal_realizing_n(args.genus, args.n)
        return {
            "genus": args.genus,
            "n_max": args.n,
            "minimal": {pair.label(): n for pair, n in table.items()},
        }
    if not args.classes:
        raise PreconditionError("need --classes, --surjectivity, or --minimal-n")
    classes = _parse_classes(args.genus, args.classes)
    pair = total_sw_of_sum(classes)
    return {"sw1": pair.sw1.bits(), "sw2": pair.sw2, "label": pair.label()}


def _census_table(doc: dict) -> str:
    lines = [f"{doc['group']}  genus {doc['genus']}  sector {doc['sector']}"]
    total = doc["total"] if doc["total"] is not None else f">= {doc['listed']}"
    lines.append(f"components: {total}")
    for comp in doc["components"]:
        flags = []
        if comp.get("hitchin"):
            flags.append("hitchin")
        if comp.get("remark_level"):
            flags.append("remark")
        if comp.get("cover_multiplicity") is not None:
            flags.append(f"x{comp['cover_multiplicity']}")
        lines.append(
            f"  {comp['label']:<24} dim {comp['dimension']:<6} "
            + ",".join(flags)
        )
    if doc["note"]:
        lines.append(f"note: {doc['note']}")
    return "\n".join(lines) + "\n"


def _cmd_census(args) -> dict:
    group = GroupTag.parse(args.group)
    c = census(group, args.genus, args.sector)
    return c.to_dict()


def _cmd_param(args) -> dict:
    group = GroupTag.parse(args.group)
    p = parameterization(group, args.d, args.genus)
    n = 1 if group.family == "so" else group.params[0]
    return {
        "group": str(group),
        "genus": args.genus,
        "d": args.d,
        "parameterization": p.to_dict(),
        "half_dimension": half_dimension(group, args.genus),
        "extra_reading": resolve_extra_factor_reading(n, args.genus),
    }


def _cmd_dim(args) -> dict:
    group = GroupTag.parse(args.group)
    out = {
        "group": str(group),
        "genus": args.genus,
        "group_dim": group_dim(group),
        "real_dimension": character_variety_dimension(group, args.genus),
        "half_dimension": half_dimension(group, args.genus),
    }
    if args.consistency:
        out["consistency"] = dimension_consistency(group, args.genus, args.sector)
    return out


def _verify_table(results) -> str:
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
    passed = sum(1 for r in results if r.passed)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def _cmd_verify(args):
    names = args.only.split(",") if args.only else None
    results = run_checks(names)
    doc = {
        "checks": [r.to_dict() for r in results],
        "passed": sum(1 for r in results if r.passed),
        "failed": sum(1 for r in results if not r.passed),
        "ok": all(r.passed for r in results),
    }
    return doc, results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgs-atlas",
        description="exact component bookkeeping for decorated Higgs-type objects",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_group_genus(p):
        p.add_argument("--group", required=True, help="family:params, e.g. so0:2,3")
        p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("build", help="construct an object")
    add_group_genus(p)
    p.add_argument("--d", type=int, default=None, help="integer component label")
    p.add_argument("--q-on", default="", help="comma list of enabled differentials")
    p.add_argument("--spin-name", default=None)
    p.add_argument("--classes", default="", help="comma list of 2g-bit strings")
    p.add_argument("--w0", default="", help="split:<d> | prym:<bits>:<bit> | trivial")
    p.add_argument("--mu", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--nu", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--q2", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--pfaffian", action="store_true")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--deformed", action="store_true")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("stability", help="polystability verdict for a document")
    p.add_argument("--input", required=True, help="path to an object document, - for stdin")
    p.add_argument("--assume-summand-generated", action="store_true")
    p.set_defaults(fn=_cmd_stability)

    p = sub.add_parser("limit", help="graded limits of a document")
    p.add_argument("--input", required=True)
    p.add_argument("--weights", default="", help="comma list, one weight per summand")
    p.add_argument("--scale", type=int, default=1)
    p.add_argument(
        "--direction",
        choices=[DIRECTION_TO_ZERO, DIRECTION_TO_INFINITY],
        default=DIRECTION_TO_ZERO,
    )
    p.add_argument("--with-stability", action="store_true")
    p.add_argument("--search", type=int, default=None, metavar="BOUND")
    p.add_argument("--line-degree", type=int, default=None)
    p.set_defaults(fn=_cmd_limit)

    p = sub.add_parser("sw", help="Stiefel-Whitney arithmetic")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--classes", default="")
    p.add_argument("--surjectivity", action="store_true")
    p.add_argument("--minimal-n", action="store_true")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(fn=_cmd_sw)

    p = sub.add_parser("census", help="component catalog")
    add_group_genus(p)
    p.add_argument("--sector", choices=[SECTOR_ALL, SECTOR_MAXIMAL], default=SECTOR_ALL)
    p.add_argument("--table", action="store_true")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("param", help="parameterization of a labelled component")
    add_group_genus(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_param)

    p = sub.add_parser("dim", help="dimension bookkeeping")
    add_group_genus(p)
    p.add_argument("--consistency", action="store_true")
    p.add_argument("--sector", choices=[SECTOR_ALL, SECTOR_MAXIMAL], default=SECTOR_ALL)
    p.set_defaults(fn=_cmd_dim)

    p = sub.add_parser("verify", help="run internal consistency checks")
    p.add_argument("--only", default="", help="comma list of check names")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.add_argument("--table", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "verify":
            if args.list:
                _emit({"checks": all_check_names()})
                return 0
            doc, results = _cmd_verify(args)
            if args.table:
                sys.stdout.write(_verify_table(results))
            else:
                _emit(doc)
            return 0 if doc["ok"] else 1
        doc = args.fn(args)
        if args.verb == "census" and args.table:
            sys.stdout.write(_census_table(doc))
        else:
            _emit(doc)
        return 0
    except HiggsAtlasError as exc:
        payload = {k: v for k, v in exc.payload.items()}
        _emit({"status": "error", "code": exc.code, "message": str(exc), **payload})
        return 1
    except ValueError as exc:
        _emit({"status": "error", "code": "value", "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
