"""Command-line entry point.

Subcommands wire the library to JSON files and stdout reports.  Exit
codes: 0 on success, 1 on a verification failure, 2 on malformed input.
Reports are machine-readable JSON; --pretty indents them for humans.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Mapping

from . import basis_change as bc_mod
from . import building_data as bd_mod
from . import group_ring, linalg, ramification, representation, search
from .algebra import (
    CoverParams,
    MultiplicationTable,
    build_cover,
    check_constraints,
    extract_params,
    is_degenerate,
    multiply,
    verify,
)
from .elements import AlgebraElement

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BAD_INPUT = 2


class InputError(Exception):
    pass


def _load_json(path: str) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _load_params(path: str) -> CoverParams:
    doc = _load_json(path)
    if not isinstance(doc, Mapping):
        raise InputError(f"{path}: params document must be a JSON object")
    try:
        return CoverParams.from_json(doc)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_table(path: str) -> MultiplicationTable:
    doc = _load_json(path)
    if not isinstance(doc, Mapping):
        raise InputError(f"{path}: table document must be a JSON object")
    try:
        return MultiplicationTable.from_json(doc)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(doc: object, args: argparse.Namespace, path: str | None = None) -> None:
    text = json.dumps(doc, indent=2 if args.pretty else None)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_selftest(args: argparse.Namespace) -> int:
    """Group ring and projector identity suites."""
    consts = group_ring.constants()
    e1, e2, e3 = consts["e1"], consts["e2"], consts["e3"]
    e31, e32 = consts["e31"], consts["e32"]
    idems = {"e1": e1, "e2": e2, "e3": e3}
    checks: dict[str, bool] = {}
    for ni, xi in idems.items():
        for nj, xj in idems.items():
            expect = xi if ni == nj else group_ring.GroupRingElement.zero()
            checks[f"{ni}*{nj}"] = xi * xj == expect
    checks["e1+e2+e3=e"] = e1 + e2 + e3 == group_ring.GroupRingElement.of(
        group_ring.E
    )
    checks["e31+e32=e3"] = e31 + e32 == e3
    checks["e31*e31=e31"] = e31 * e31 == e31
    checks["e31*e32=0"] = (e31 * e32).is_zero()
    tau = group_ring.GroupRingElement.of(group_ring.T)
    checks["tau*e31=e32*tau"] = tau * e31 == e32 * tau
    checks["e1 central"] = group_ring.is_central(e1)
    checks["e2 central"] = group_ring.is_central(e2)
    checks["e3 central"] = group_ring.is_central(e3)
    checks["e31 not central"] = not group_ring.is_central(e31)
    checks["e32 not central"] = not group_ring.is_central(e32)

    ranks = {"e1": 1, "e2": 1, "e3": 4, "e31": 2, "e32": 2}
    total = linalg.zero(6)
    for name, want in ranks.items():
        proj = representation.projector(consts[name])
        checks[f"projector({name}) idempotent"] = representation.is_idempotent(proj)
        checks[f"projector({name}) rank {want}"] = linalg.rank(proj) == want
    for name in ("e1", "e2", "e3"):
        total = linalg.mat_add(total, representation.projector(consts[name]))
    checks["projectors sum to identity"] = total == linalg.identity(6)

    ok = all(checks.values())
    _emit({"checks": checks, "ok": ok}, args)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args: argparse.Namespace) -> int:
    p = _load_params(args.params)
    report = check_constraints(p)
    doc = report.to_json()
    doc["degenerate"] = is_degenerate(p)
    _emit(doc, args)
    return EXIT_OK if report.satisfied else EXIT_FAIL


def cmd_build(args: argparse.Namespace) -> int:
    p = _load_params(args.params)
    table = build_cover(p)
    _emit(table.to_json(), args, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    table = _load_table(args.table)
    report = verify(table)
    _emit(report.to_json(), args)
    return EXIT_OK if report.all_ok else EXIT_FAIL


def cmd_building_data(args: argparse.Namespace) -> int:
    p = _load_params(args.params)
    bd = bd_mod.to_building_data(p)
    compat = bd_mod.compat_residual(bd)
    doc = {"building_data": bd.to_json(), "compat": compat.to_json()}
    _emit(doc, args)
    return EXIT_OK if compat.in_kernel else EXIT_FAIL


def cmd_reconstruct(args: argparse.Namespace) -> int:
    doc = _load_json(args.building_data)
    if not isinstance(doc, Mapping):
        raise InputError(f"{args.building_data}: expected a JSON object")
    try:
        bd = bd_mod.BuildingData.from_json(doc)
    except ValueError as exc:
        raise InputError(f"{args.building_data}: {exc}") from exc
    table = bd_mod.assemble_table(bd)
    if args.out:
        _emit(table.to_json(), args, args.out)
    status = EXIT_OK
    report: dict = {"written": bool(args.out)}
    if args.compare:
        p = _load_params(args.compare)
        reference = build_cover(p)
        equal = table == reference
        report["compare"] = {"params": p.to_json(), "equal": equal}
        if not equal:
            status = EXIT_FAIL
    if not args.out or args.compare:
        _emit(report if args.compare else table.to_json(), args)
    return status


def cmd_basis_change(args: argparse.Namespace) -> int:
    p = _load_params(args.params)
    doc = _load_json(args.change)
    if not isinstance(doc, Mapping):
        raise InputError(f"{args.change}: expected a JSON object")
    try:
        bc = bc_mod.BasisChange.from_json(doc)
    except ValueError as exc:
        raise InputError(f"{args.change}: {exc}") from exc
    q = bc_mod.transform(p, bc)
    # covariance: products of mapped basis vectors in the old table must
    # match the mapped products of the new table
    m = bc_mod.induced_module_map(bc)
    old = build_cover(p)
    new = build_cover(q)
    covariant = True
    for i in range(6):
        for j in range(6):
            xi = AlgebraElement(linalg.mat_vec(m, AlgebraElement.basis(i).coords))
            xj = AlgebraElement(linalg.mat_vec(m, AlgebraElement.basis(j).coords))
            lhs = multiply(xi, xj, old)
            rhs = AlgebraElement(linalg.mat_vec(m, new.entry(i, j).coords))
            if lhs != rhs:
                covariant = False
    out = {"params": q.to_json(), "covariant": covariant}
    _emit(out, args)
    return EXIT_OK if covariant else EXIT_FAIL


def cmd_ramification(args: argparse.Namespace) -> int:
    p = _load_params(args.params)
    results = ramification.all_minors(
        p, nonzero=args.nonzero, dedup=args.dedup, jobs=args.jobs
    )
    _emit(ramification.minors_to_json(results), args, args.out)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    solutions = search.enumerate_integer(args.bound)
    if args.degenerate:
        solutions = [p for p in solutions if is_degenerate(p)]
    doc = [
        {**p.to_json(), "degenerate": is_degenerate(p)} for p in solutions
    ]
    _emit(doc, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="s3cover",
        description="Exact-arithmetic toolkit for rank-6 S3-cover algebras",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("selftest", help="group ring and projector identity suites")

    p_check = sub.add_parser("check", help="constraint residual report")
    p_check.add_argument("--params", required=True)

    p_build = sub.add_parser("build", help="build the multiplication table")
    p_build.add_argument("--params", required=True)
    p_build.add_argument("--out")

    p_verify = sub.add_parser("verify", help="four-axiom report with witnesses")
    p_verify.add_argument("--table", required=True)

    p_bd = sub.add_parser("building-data", help="capital-letter data and residuals")
    p_bd.add_argument("--params", required=True)

    p_rec = sub.add_parser("reconstruct", help="rebuild a table from building data")
    p_rec.add_argument("--building-data", dest="building_data", required=True)
    p_rec.add_argument("--out")
    p_rec.add_argument("--compare", help="params JSON to compare the table against")

    p_bc = sub.add_parser("basis-change", help="transform parameters")
    p_bc.add_argument("--params", required=True)
    p_bc.add_argument("--change", required=True)

    p_ram = sub.add_parser("ramification", help="5x5 minors of the 15x5 matrix")
    p_ram.add_argument("--params", required=True)
    p_ram.add_argument("--nonzero", action="store_true")
    p_ram.add_argument("--dedup", action="store_true")
    p_ram.add_argument("--jobs", type=int, default=1)
    p_ram.add_argument("--out")

    p_search = sub.add_parser("search", help="bounded integer solutions")
    p_search.add_argument("--bound", type=int, required=True)
    p_search.add_argument(
        "--degenerate", action="store_true", help="restrict to the a^2+bc=0 stratum"
    )

    return parser


_COMMANDS = {
    "selftest": cmd_selftest,
    "check": cmd_check,
    "build": cmd_build,
    "verify": cmd_verify,
    "building-data": cmd_building_data,
    "reconstruct": cmd_reconstruct,
    "basis-change": cmd_basis_change,
    "ramification": cmd_ramification,
    "search": cmd_search,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
