"""Command-line surface over flat JSON files.

File formats, all plain JSON objects:

  space     {"points": n, "opens": [masks], "labels": [names]?}
  topology  {"y": space, "z": space, "subbasis": [masks], "provenance": str?}
  dual      {"y": space, "z": space, "opens": [family masks]}

A mask is an integer whose bit p stands for point p of the object's ground;
family masks index the ground list of the object carrying them. Every
command prints JSON to stdout unless --out names a file. Exit codes: 0 the
check holds or stays inconclusive, 1 a failing witness was found, 2 usage
or validation trouble.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checkers import composition_check, is_admissible, refute_splitting, theorem_suite
from .duality import DualSpace, t_of_tau, tau_of_t
from .errors import TopolabError
from .finspace import FinSpace, canonical_form, enumerate_topologies, make_space
from .fntop import NAMED, FnTopology, named_function_topology
from .hypertop import (
    HyperSpace,
    compact_subbasis_topology,
    scott,
    strong_scott,
    strong_z_scott,
    z_scott,
)
from .mapspace import enumerate_continuous
from .explorer import question_search

_HYPER_KINDS = {
    "scott": scott,
    "sscott": strong_scott,
    "ksubbasis": compact_subbasis_topology,
}
_HYPER_Z_KINDS = {"zscott": z_scott, "zsscott": strong_z_scott}
_ALL_KINDS = tuple(NAMED) + tuple(_HYPER_KINDS) + tuple(_HYPER_Z_KINDS)


def _load(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _emit(obj: dict | list, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _space_from(obj: dict) -> FinSpace:
    labels = tuple(obj["labels"]) if "labels" in obj else None
    return make_space(int(obj["points"]), [int(m) for m in obj["opens"]], labels)


def _space_dict(x: FinSpace) -> dict:
    d = {"points": x.size, "opens": list(x.opens.members)}
    if x.labels is not None:
        d["labels"] = list(x.labels)
    return d


def _fn_from(obj: dict) -> FnTopology:
    y = _space_from(obj["y"])
    z = _space_from(obj["z"])
    maps = enumerate_continuous(y, z)
    return FnTopology.of(
        maps, [int(m) for m in obj["subbasis"]], obj.get("provenance", "custom")
    )


def _fn_dict(t: FnTopology) -> dict:
    return {
        "y": _space_dict(t.maps.domain),
        "z": _space_dict(t.maps.codomain),
        "subbasis": list(t.subbasis),
        "provenance": t.provenance,
    }


def _hyper_dict(h: HyperSpace) -> dict:
    return {
        "kind": h.kind,
        "base": _space_dict(h.base),
        "ground": list(h.ground),
        "opens": list(h.opens.members),
    }


def _fail(message: str) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return 2


def _verdict_exit(reports) -> int:
    return 1 if any(r.status == "fails" and r.expected for r in reports) else 0


def _cmd_space_validate(args) -> int:
    x = _space_from(_load(args.file))
    echo = _space_dict(x)
    echo["canonical"] = list(canonical_form(x))
    _emit(echo, args.out)
    return 0


def _cmd_space_enum(args) -> int:
    spaces = enumerate_topologies(args.points)
    _emit(
        {
            "points": args.points,
            "count": len(spaces),
            "spaces": [list(sp.opens.members) for sp in spaces],
        },
        args.out,
    )
    return 0


def _cmd_maps_enum(args) -> int:
    maps = enumerate_continuous(_space_from(_load(args.y)), _space_from(_load(args.z)))
    _emit({"count": len(maps), "tables": [list(t) for t in maps.tables]}, args.out)
    return 0


def _cmd_topo_build(args) -> int:
    y = _space_from(_load(args.y))
    if args.kind in _HYPER_KINDS:
        _emit(_hyper_dict(_HYPER_KINDS[args.kind](y)), args.out)
        return 0
    if args.z is None:
        return _fail(f"--kind {args.kind} needs --z")
    z = _space_from(_load(args.z))
    if args.kind in _HYPER_Z_KINDS:
        _emit(_hyper_dict(_HYPER_Z_KINDS[args.kind](y, z)), args.out)
        return 0
    _emit(_fn_dict(named_function_topology(args.kind, y, z)), args.out)
    return 0


def _cmd_check_admissible(args) -> int:
    rep = is_admissible(_fn_from(_load(args.topology)))
    _emit(rep.to_dict(), args.out)
    return _verdict_exit([rep])


def _cmd_check_splitting(args) -> int:
    rep = refute_splitting(_fn_from(_load(args.topology)), max_x=args.max_x)
    _emit(rep.to_dict(), args.out)
    return _verdict_exit([rep])


def _cmd_check_compose(args) -> int:
    kinds = tuple(args.kinds.split(","))
    rep = composition_check(
        _space_from(_load(args.x)),
        _space_from(_load(args.y)),
        _space_from(_load(args.z)),
        kinds,
    )
    _emit(rep.to_dict(), args.out)
    return _verdict_exit([rep])


def _cmd_check_theorems(args) -> int:
    reports = theorem_suite(args.max_y, args.max_z)
    _emit([r.to_dict() for r in reports], args.out)
    return _verdict_exit(reports)


def _cmd_dual_tau_of_t(args) -> int:
    d = tau_of_t(_fn_from(_load(args.topology)))
    _emit(
        {
            "y": _space_dict(d.y),
            "z": _space_dict(d.z),
            "ground": list(d.ground),
            "opens": list(d.opens.members),
        },
        args.out,
    )
    return 0


def _cmd_dual_t_of_tau(args) -> int:
    y = _space_from(_load(args.y))
    z = _space_from(_load(args.z))
    obj = _load(args.dual)
    for key, sp in (("y", y), ("z", z)):
        if key in obj and _space_from(obj[key]).opens != sp.opens:
            return _fail(f"dual file's {key} disagrees with --{key}")
    tau = DualSpace.of(y, z, [int(m) for m in obj["opens"]])
    t = t_of_tau(tau, enumerate_continuous(y, z))
    _emit(_fn_dict(t), args.out)
    return 0


def _cmd_search_question(args) -> int:
    probe = question_search(args.id, args.max_y, args.max_z)
    _emit(probe.to_dict(), args.out)
    return _verdict_exit(probe.result)


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="topolab", description=__doc__)
    groups = top.add_subparsers(dest="group", required=True)

    def leaf(group, name, fn, **kwargs):
        p = group.add_parser(name, **kwargs)
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.set_defaults(fn=fn)
        return p

    space = groups.add_parser("space").add_subparsers(dest="cmd", required=True)
    p = leaf(space, "validate", _cmd_space_validate)
    p.add_argument("file")
    p = leaf(space, "enum", _cmd_space_enum)
    p.add_argument("--points", type=int, required=True)

    maps = groups.add_parser("maps").add_subparsers(dest="cmd", required=True)
    p = leaf(maps, "enum", _cmd_maps_enum)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)

    topo = groups.add_parser("topo").add_subparsers(dest="cmd", required=True)
    p = leaf(topo, "build", _cmd_topo_build)
    p.add_argument("--kind", choices=_ALL_KINDS, required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z")

    check = groups.add_parser("check").add_subparsers(dest="cmd", required=True)
    p = leaf(check, "admissible", _cmd_check_admissible)
    p.add_argument("--topology", required=True)
    p = leaf(check, "splitting", _cmd_check_splitting)
    p.add_argument("--topology", required=True)
    p.add_argument("--max-x", type=int, default=3)
    p = leaf(check, "compose", _cmd_check_compose)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--kinds", required=True, help="comma triple, e.g. coZ,coZ,coZ")
    p = leaf(check, "theorems", _cmd_check_theorems)
    p.add_argument("--max-y", type=int, default=3)
    p.add_argument("--max-z", type=int, default=2)

    dual = groups.add_parser("dual").add_subparsers(dest="cmd", required=True)
    p = leaf(dual, "tau-of-t", _cmd_dual_tau_of_t)
    p.add_argument("--topology", required=True)
    p = leaf(dual, "t-of-tau", _cmd_dual_t_of_tau)
    p.add_argument("--dual", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)

    search = groups.add_parser("search").add_subparsers(dest="cmd", required=True)
    p = leaf(search, "question", _cmd_search_question)
    p.add_argument("--id", required=True)
    p.add_argument("--max-y", type=int, default=3)
    p.add_argument("--max-z", type=int, default=2)

    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except TopolabError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 2
    except (OSError, KeyError, TypeError, ValueError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
