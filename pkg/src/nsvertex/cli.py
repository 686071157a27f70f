"""Batch command-line surface for the exact vertex-algebra toolkit.

Every subcommand loads its inputs, runs one verification or table
build, writes a machine-readable report to stdout and a one-line human
summary to stderr, and exits 0 when all requested checks pass, 1 when
a check fails, 2 on malformed input.  JSON output is byte-identical
for identical arguments and seed.
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .constructions import (boson_sugawara, central_charges, cocycle_basis,
                            fermion_vosa, g_fermion_system, super_construction,
                            susy_report, verify_odd_cocycle, vertex_module,
                            weight_report)
from .fields import (bracket_from_ope, commutator_direct, field_from_tree,
                     locality_order, ope_singular_part, state_field)
from .liealg import CATALOG, LieAlgebra, sl2
from .modules import (BasisState, Mode, StateVector, VermaModule, grade_str,
                      module_from_descriptor)
from .scalars import Scalar

DEPTH_ENV = "NSVERTEX_DEPTH"


# -- input parsing ----------------------------------------------------------

def _half2(text: str) -> int:
    """Half-integer string to its doubled integer."""
    f = Fraction(text)
    if f.denominator > 2:
        raise ValueError(f"{text!r} is not a half-integer")
    return int(2 * f)


def _depth2(args) -> int:
    d2 = _half2(args.depth)
    if d2 < 1:
        raise ValueError("depth must be at least 1/2")
    return d2


def _load_json(text: str):
    """Inline JSON if the argument looks like a literal, else a file path."""
    t = text.strip()
    if t.startswith("{") or t.startswith("["):
        return json.loads(t)
    with open(text) as fh:
        return json.load(fh)


def _algebra(text: str) -> LieAlgebra:
    if text == "sl2":
        return sl2()
    return LieAlgebra.from_json(_load_json(text))


def _module(text: str):
    return module_from_descriptor(_load_json(text))


def _field(text: str):
    return field_from_tree(_load_json(text))


# -- output -----------------------------------------------------------------

def _json_ready(obj):
    if isinstance(obj, Scalar):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, BasisState):
        return _state_json(obj)
    if isinstance(obj, StateVector):
        return [{"state": _state_json(s), "coeff": c.to_json()}
                for s, c in obj.sorted_items()]
    if isinstance(obj, dict):
        return {str(k): _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _state_json(state: BasisState) -> dict:
    return {"word": [{"kind": m.kind, "color": m.color,
                      "index": str(Fraction(m.n2, 2))} for m in state.word],
            "floor": state.floor}


_LEAF = (Scalar, Fraction, BasisState, StateVector, Mode)


def _text_lines(obj, indent: int, out: list):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict) or _is_block_list(v) or _is_matrix(v):
                out.append(f"{pad}{k}:")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}{k}: {_text_value(v)}")
    elif isinstance(obj, (list, tuple)):
        if _is_matrix(obj):
            cells = [[str(x) for x in row] for row in obj]
            width = max(len(c) for row in cells for c in row)
            for row in cells:
                out.append(pad + "[ " + "  ".join(c.rjust(width) for c in row)
                           + " ]")
            return
        for v in obj:
            if isinstance(v, dict) or _is_block_list(v):
                out.append(f"{pad}-")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}- {_text_value(v)}")


def _is_matrix(obj) -> bool:
    return isinstance(obj, (list, tuple)) and bool(obj) and all(
        isinstance(row, (list, tuple)) and row
        and all(isinstance(x, Scalar) for x in row) for row in obj)


def _is_block_list(v) -> bool:
    return isinstance(v, (list, tuple)) and any(
        isinstance(x, (dict, list, tuple)) and not isinstance(x, _LEAF)
        for x in v) and not _is_matrix(v)


def _text_value(v) -> str:
    if isinstance(v, _LEAF):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    return str(v)


def _emit(args, report: dict, summary: str, code: int) -> int:
    if args.format == "json":
        print(json.dumps(_json_ready(report), sort_keys=True, indent=2))
    else:
        lines = []
        _text_lines(report, 0, lines)
        print("\n".join(lines))
    print(summary, file=sys.stderr)
    return code


# -- subcommands ------------------------------------------------------------

def cmd_validate(args) -> int:
    lie = _algebra(args.algebra)
    report = lie.validate()
    ok = report["valid"]
    return _emit(args, report,
                 f"algebra {lie.name}: {'valid' if ok else 'INVALID'}",
                 0 if ok else 1)


def cmd_catalog(args) -> int:
    report = {"rows": CATALOG, "count": len(CATALOG)}
    return _emit(args, report, f"{len(CATALOG)} simple families", 0)


def cmd_gram(args) -> int:
    module = _module(args.module)
    n2 = _half2(args.level)
    basis, matrix = module.gram(n2)
    report = {"level": Fraction(n2, 2), "dim": len(basis),
              "basis": [str(b) for b in basis], "matrix": matrix}
    return _emit(args, report,
                 f"level {grade_str(n2)}: {len(basis)} states", 0)


def cmd_nullvec(args) -> int:
    module = _module(args.module)
    n2 = _half2(args.level)
    vectors = module.kernel_vectors(n2)
    dim = len(module.level_basis(n2))
    report = {"level": Fraction(n2, 2), "dim": dim,
              "null_count": len(vectors), "vectors": vectors}
    return _emit(args, report,
                 f"level {grade_str(n2)}: {len(vectors)} of {dim} states null",
                 0)


def cmd_ghosts(args) -> int:
    module = VermaModule(args.sector, Scalar.of(Fraction(args.c)),
                         Scalar.of(Fraction(args.h)))
    report = module.ghost_report(_depth2(args))
    report = {"sector": args.sector, "c": Fraction(args.c),
              "h": Fraction(args.h), **report}
    ghost = report["has_ghost"]
    where = (f"first negative at grade {report['first_negative_grade']}"
             if ghost else "no negative-norm directions")
    return _emit(args, report, where, 1 if ghost else 0)


def cmd_ope(args) -> int:
    module = _module(args.module)
    A = _field(args.field_a)
    B = _field(args.field_b)
    depth2 = _depth2(args)
    try:
        loc = locality_order(A, B, module, depth2=depth2,
                             max_order=args.max_order, window=args.window)
    except ValueError as exc:
        report = {"local": False, "max_order": args.max_order,
                  "error": str(exc)}
        return _emit(args, report, f"not local: {exc}", 1)
    singular = ope_singular_part(A, B, module, loc["order"])
    report = {"local": True, "order": loc["order"],
              "bracket": loc["bracket"],
              "parity_consistent": loc["parity_consistent"],
              "singular": {str(j): vec for j, vec in singular.items()}}
    ok = loc["parity_consistent"]
    return _emit(args, report,
                 f"order {loc['order']} ({loc['bracket']})"
                 + ("" if ok else ", PARITY MISMATCH"),
                 0 if ok else 1)


def cmd_brackets(args) -> int:
    module = _module(args.module)
    A = _field(args.field_a)
    B = _field(args.field_b)
    depth2 = _depth2(args)
    loc = locality_order(A, B, module, depth2=depth2,
                         max_order=args.max_order, window=args.window)
    order = loc["order"]
    checked = 0
    failures = []
    states = [s for g2 in range(depth2 + 1)
              for s in module.level_basis(g2)]
    for m in range(-args.window, args.window + 1):
        for n in range(-args.window, args.window + 1):
            for state in states:
                direct = commutator_direct(A, m, B, n, module, state)
                expanded = bracket_from_ope(A, m, B, n, order, module, state)
                checked += 1
                if direct != expanded:
                    failures.append({"m": m, "n": n, "state": str(state)})
    ok = not failures
    report = {"order": order, "bracket": loc["bracket"],
              "checked": checked, "failures": failures, "valid": ok}
    return _emit(args, report,
                 f"{checked} bracket values "
                 + ("all match the expansion" if ok
                    else f"with {len(failures)} MISMATCHES"),
                 0 if ok else 1)


def cmd_sugawara(args) -> int:
    lie = _algebra(args.algebra)
    cons = boson_sugawara(lie, args.level)
    depth2 = _depth2(args)
    measured = cons.central_charge
    closed = Scalar.of(cons.data["closed_form"])
    vir = cons.axiom_report(depth2=depth2, window=args.window)
    match = measured == closed
    report = {"algebra": lie.name, "level": args.level,
              "central_charge": measured, "closed_form": closed,
              "match": match, "axioms": vir["checks"],
              "valid": match and vir["valid"]}
    ok = report["valid"]
    return _emit(args, report,
                 f"c = {measured}" + ("" if ok else " with FAILURES"),
                 0 if ok else 1)


def cmd_susy_check(args) -> int:
    lie = _algebra(args.algebra)
    cons = super_construction(lie, args.level)
    depth2 = _depth2(args)
    rep = susy_report(cons, depth2=depth2, window=args.window)
    cc = central_charges(lie, args.level, 0)
    match = rep["central_charge"] == cc["c_total"]
    checks = [{"relation": name, "depth": Fraction(depth2, 2),
               "status": "pass" if ok else "fail"}
              for name, ok in rep["checks"].items()]
    report = {"c_fermion": cc["c_fermion"], "c_boson": cc["c_boson"],
              "c_total": cc["c_total"], "h": cc["h"],
              "measured": rep["central_charge"], "match": match,
              "degree": rep["degree"], "checks": checks}
    ok = rep["valid"] and match
    failed = [c["relation"] for c in checks if c["status"] == "fail"]
    return _emit(args, report,
                 f"c_total = {cc['c_total']}, "
                 + ("all relations pass" if ok
                    else f"FAILED: {', '.join(failed) or 'charge mismatch'}"),
                 0 if ok else 1)


def cmd_module(args) -> int:
    lie = _algebra(args.algebra)
    spin2 = _half2(args.spin)
    vm = vertex_module(lie, args.level, spin2)
    depth2 = _depth2(args)
    wr = weight_report(vm, depth2=depth2)
    cc = central_charges(lie, args.level, spin2)
    report = {"algebra": lie.name, "level": args.level,
              "spin": Fraction(spin2, 2), "h": cc["h"],
              "c_total": cc["c_total"], "levels": wr["levels"],
              "valid": wr["valid"]}
    ok = wr["valid"]
    return _emit(args, report,
                 f"h = {cc['h']}"
                 + (", grading operator verified" if ok else ", FAILURES"),
                 0 if ok else 1)


def cmd_cocycle(args) -> int:
    even = cocycle_basis(args.nmax)
    smax2 = _half2(args.smax)
    charges = [Fraction(c) for c in (args.c or ["0", "1/2", "5/2"])]
    odd = [{"c": c, "valid": verify_odd_cocycle(c, smax2)} for c in charges]
    report = {"even": {"dimension": even["dimension"],
                       "spans": [list(p) for p in even["spans"]],
                       "nmax": args.nmax, "valid": even["valid"]},
              "odd": {"smax": Fraction(smax2, 2), "cases": odd}}
    ok = even["valid"] and all(case["valid"] for case in odd)
    return _emit(args, report,
                 f"even space dimension {even['dimension']}, "
                 f"{len(odd)} odd pairings "
                 + ("verified" if ok else "with FAILURES"),
                 0 if ok else 1)


def _build_construction(args):
    if args.construction == "fermion":
        return fermion_vosa(args.colors)
    lie = _algebra(args.algebra)
    if args.construction == "g-fermion":
        return g_fermion_system(lie)
    if args.construction == "sugawara":
        return boson_sugawara(lie, args.level)
    return super_construction(lie, args.level)


def _random_vector(rng, module, n2: int) -> StateVector:
    out = StateVector({})
    for state in module.level_basis(n2):
        coeff = rng.randrange(-2, 3)
        if coeff:
            out = out + StateVector.basis(state).scaled(coeff)
    return out


def _adjoint_sweep(module, named_fields, depth2: int, seed: int,
                   trials: int = 60) -> dict:
    """Seeded spot check of <F(s)u, v> = <u, F(w-2-s)v> for every
    construction field; each field is its own adjoint under index
    negation, so both sides use the same field."""
    rng = random.Random(seed)
    checked = 0
    failures = []
    for _ in range(trials):
        name, F = named_fields[rng.randrange(len(named_fields))]
        g2 = rng.randrange(depth2 + 1)
        s = rng.randrange(-2, 3)
        h2 = g2 + F.weight2 - 2 - 2 * s
        if h2 < 0 or h2 > depth2:
            continue
        u = _random_vector(rng, module, g2)
        v = _random_vector(rng, module, h2)
        if not u or not v:
            continue
        lhs = module.inner(F.apply(s, module, u), v)
        rhs = module.inner(u, F.apply(F.weight2 - 2 - s, module, v))
        checked += 1
        if lhs != rhs:
            failures.append({"field": name, "slot": s,
                             "grade": grade_str(g2)})
    return {"seed": seed, "checked": checked, "failures": failures,
            "valid": not failures}


def cmd_axioms(args) -> int:
    cons = _build_construction(args)
    depth2 = _depth2(args)
    rep = cons.axiom_report(depth2=depth2, window=args.window,
                            max_order=args.max_order)
    named = sorted(cons.fields.items())
    named.append(("L", state_field(cons.module, cons.omega)))
    adjoint = _adjoint_sweep(cons.module, named, depth2, args.seed)
    ok = rep["valid"] and adjoint["valid"]
    report = {"construction": cons.name, "checks": rep["checks"],
              "adjoint": adjoint, "valid": ok}
    failed = [k for k, v in rep["checks"].items() if not v]
    if not adjoint["valid"]:
        failed.append("adjoint")
    return _emit(args, report,
                 f"{cons.name}: "
                 + ("all axioms hold" if ok else f"FAILED: {', '.join(failed)}"),
                 0 if ok else 1)


# -- argument wiring --------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    default_depth = os.environ.get(DEPTH_ENV, "2")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="report encoding on stdout")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sweeps")

    depth = argparse.ArgumentParser(add_help=False)
    depth.add_argument("--depth", default=default_depth,
                       help="truncation depth, a half-integer "
                            f"(default {default_depth}, env {DEPTH_ENV})")
    depth.add_argument("--window", type=int, default=2,
                       help="mode-index window for sweeps")
    depth.add_argument("--max-order", type=int, default=8,
                       help="largest locality order to search")

    parser = argparse.ArgumentParser(
        prog="nsvertex",
        description="Exact verification toolkit for vertex operator "
                    "superalgebras built from fermions and currents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check a structure-constant table")
    p.add_argument("--algebra", required=True,
                   help="'sl2', inline JSON, or a JSON file path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("catalog", parents=[common],
                       help="table of simple families with dim and g")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("gram", parents=[common],
                       help="Gram matrix of one graded level")
    p.add_argument("--module", required=True,
                   help="module descriptor (inline JSON or file path)")
    p.add_argument("--level", required=True, help="half-integer grade")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("nullvec", parents=[common],
                       help="kernel of the level form")
    p.add_argument("--module", required=True)
    p.add_argument("--level", required=True, help="half-integer grade")
    p.set_defaults(func=cmd_nullvec)

    p = sub.add_parser("ghosts", parents=[common, depth],
                       help="norm inertia per level of a Verma module")
    p.add_argument("--sector", choices=("ns", "virasoro"), default="ns")
    p.add_argument("--c", required=True, help="central charge (fraction)")
    p.add_argument("--h", required=True, help="floor weight (fraction)")
    p.set_defaults(func=cmd_ghosts)

    p = sub.add_parser("ope", parents=[common, depth],
                       help="locality order and singular products")
    p.add_argument("--module", required=True)
    p.add_argument("--field-a", required=True,
                   help="field tree (inline JSON or file path)")
    p.add_argument("--field-b", required=True)
    p.set_defaults(func=cmd_ope)

    p = sub.add_parser("brackets", parents=[common, depth],
                       help="mode brackets against the product expansion")
    p.add_argument("--module", required=True)
    p.add_argument("--field-a", required=True)
    p.add_argument("--field-b", required=True)
    p.set_defaults(func=cmd_brackets)

    p = sub.add_parser("sugawara", parents=[common, depth],
                       help="current-bilinear conformal state checks")
    p.add_argument("--algebra", required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_sugawara)

    p = sub.add_parser("susy-check", parents=[common, depth],
                       help="superconformal relations of the combined system")
    p.add_argument("--algebra", required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_susy_check)

    p = sub.add_parser("module", parents=[common, depth],
                       help="weights of a spin-floor vertex module")
    p.add_argument("--algebra", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--spin", default="0", help="half-integer floor spin")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("cocycle", parents=[common],
                       help="central-term space and odd-sector pairing")
    p.add_argument("--nmax", type=int, default=12,
                   help="largest even index solved")
    p.add_argument("--smax", default="11/2",
                   help="largest odd index paired (half-integer)")
    p.add_argument("--c", action="append",
                   help="central charge to pair (repeatable fraction)")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("axioms", parents=[common, depth],
                       help="full axiom report plus a seeded adjoint sweep")
    p.add_argument("--construction", required=True,
                   choices=("fermion", "g-fermion", "sugawara", "super"))
    p.add_argument("--colors", type=int, default=1,
                   help="fermion colors (fermion construction)")
    p.add_argument("--algebra", default="sl2",
                   help="algebra for current-based constructions")
    p.add_argument("--level", type=int, default=1,
                   help="current level (sugawara and super)")
    p.set_defaults(func=cmd_axioms)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError, ZeroDivisionError,
            OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
