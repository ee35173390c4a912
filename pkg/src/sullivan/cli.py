"""Command-line surface.

Exit codes: 0 success; 1 a yes/no question answered negatively (e.g.
`center --expect-nonempty` on an empty center, or an undefined Massey
product); 2 usage errors; 3 model validation failures (parse errors,
degree bookkeeping, d^2 != 0).
"""

import argparse
import sys
from fractions import Fraction

from . import models, modelfile, replicate as replicate_mod
from .dga import DgaModel, ModelError, cup_products_trivial, loopify
from .lie import FiniteTable, SemidirectFree, InsufficientBracketData
from .massey import class_of, massey_triple, MasseyUndefinedError
from .centers import center, twisted_center, extract_lie
from .modelfile import (ParseError, parse, parse_expression, serialize,
                        load_model, ast_to_presentation, model_to_ast,
                        report, to_json, encode_cohomology, encode_massey,
                        encode_center, poly_json)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


class UsageError(Exception):
    pass


def _resolve(source):
    """`builtin:name` or a .sul path; returns (label, model-or-presentation)."""
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        try:
            return name, models.get_builtin(name)
        except KeyError as exc:
            raise UsageError(str(exc))
    try:
        with open(source) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc}")
    ast = parse(text)
    if ast.presentation is not None:
        return ast.name, ast_to_presentation(ast)
    return ast.name, modelfile.ast_to_model(ast)


def _need_model(label, obj):
    if not isinstance(obj, DgaModel):
        raise UsageError(f"{label} is a presentation, not a model")
    return obj


def _need_presentation(label, obj, extract, maxdeg):
    if isinstance(obj, (FiniteTable, SemidirectFree)):
        return obj
    if isinstance(obj, DgaModel) and extract:
        return extract_lie(obj, maxdeg)
    raise UsageError(f"{label} is a model; pass --extract to read off its "
                     "bracket table")


def _parse_twist(pres, text):
    """Linear combination of basis letters; `a0` abbreviates -(a1+...+a6)."""
    if text.strip() == "a0":
        return models.a_zero(pres)
    from .algebra import GradedAlgebra
    names = list(pres.names)
    degrees = list(pres.degrees)
    alg = GradedAlgebra(list(zip(names, degrees)))
    poly = parse_expression(text, alg)
    out = pres.zero()
    for mono, coeff in poly.sorted_terms():
        if len(mono) != 1 or mono[0][1] != 1:
            raise UsageError("twist must be a linear combination of basis "
                             "letters")
        out = out + pres.letter(names[mono[0][0]]).scale(coeff)
    return out


def cmd_check(args):
    label, obj = _resolve(args.model)
    model = _need_model(label, obj)
    bad = model.check_d_squared()
    doc = report(label, "check",
                 {},
                 {"d_squared": "ok" if bad is None else f"fails on {bad}",
                  "minimal": model.is_minimal,
                  "simply_connected": model.is_simply_connected,
                  "generators": [{"name": n, "degree": d}
                                 for n, d in model.algebra.gens]},
                 [model.provenance] if model.provenance else [])
    if args.json:
        print(to_json(doc), end="")
    else:
        print(f"model {label}:")
        print(f"  d^2 = 0: {'ok' if bad is None else 'FAILS on ' + bad}")
        print(f"  minimal: {model.is_minimal}")
        print(f"  simply connected: {model.is_simply_connected}")
    return EXIT_OK if bad is None else EXIT_INVALID


def cmd_cohomology(args):
    label, obj = _resolve(args.model)
    model = _need_model(label, obj)
    rows = []
    for n in range(0, args.max_degree + 1):
        rows.append(model.cohomology(n))
    if args.json:
        doc = report(label, "cohomology", {"max_degree": args.max_degree},
                     [encode_cohomology(model, s) for s in rows],
                     [model.provenance] if model.provenance else [])
        print(to_json(doc), end="")
    else:
        print(f"cohomology of {label} through degree {args.max_degree}:")
        for s in rows:
            reps = "; ".join(str(p) for p in s.representatives)
            print(f"  H^{s.degree}: dim {s.dimension}" +
                  (f"   [{reps}]" if reps else ""))
    return EXIT_OK


def cmd_massey(args):
    label, obj = _resolve(args.model)
    model = _need_model(label, obj)
    classes = []
    for text in (args.u, args.v, args.w):
        poly = parse_expression(text, model.algebra)
        classes.append(class_of(model, poly))
    result = massey_triple(model, *classes)
    if args.json:
        doc = report(label, "massey",
                     {"u": args.u, "v": args.v, "w": args.w},
                     encode_massey(result),
                     [model.provenance] if model.provenance else [])
        print(to_json(doc), end="")
    else:
        print(f"<{args.u}, {args.v}, {args.w}> in degree {result.degree}:")
        print(f"  representative: {result.representative}")
        print(f"  class vector:   {[str(x) for x in result.vector]}")
        print(f"  S = {result.s}")
        print(f"  T = {result.t}")
        print(f"  well defined:   {result.well_defined} "
              f"(indeterminacy dim {len(result.indeterminacy)})")
    return EXIT_OK


def cmd_loopify(args):
    label, obj = _resolve(args.model)
    model = _need_model(label, obj)
    out = loopify(model)
    text = serialize(model_to_ast(out))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_lie(args):
    label, obj = _resolve(args.model)
    model = _need_model(label, obj)
    table = extract_lie(model, args.max_degree)
    print(f"bracket table of {label} (shifted degrees, Jacobi verified):")
    for name, deg in table.basis:
        print(f"  basis {name} : {deg}")
    any_bracket = False
    for (i, j), value in sorted(table.raw_brackets.items()):
        if value:
            any_bracket = True
            rhs = " + ".join(
                (table.names[k] if c == 1 else f"{c}*{table.names[k]}")
                for k, c in sorted(value.items()))
            print(f"  [{table.names[i]}, {table.names[j]}] = {rhs}")
    if not any_bracket:
        print("  all brackets vanish (abelian)")
    return EXIT_OK


def cmd_center(args):
    label, obj = _resolve(args.source)
    pres = _need_presentation(label, obj, args.extract, args.max_degree)
    scope = "primitives" if args.primitives_only else "full"
    if args.twist:
        beta = _parse_twist(pres, args.twist)
        probe = args.probe if args.probe is not None else args.degree
        rep = twisted_center(pres, args.degree, beta, probe, scope=scope)
    else:
        rep = center(pres, args.degree, scope=scope)
    if args.json:
        doc = report(label, "center",
                     {"degree": args.degree, "scope": scope,
                      "twist": args.twist, "probe": rep.probe_bound},
                     encode_center(rep),
                     [getattr(pres, "provenance", "")])
        print(to_json(doc), end="")
    else:
        kind = f"twisted (by {args.twist}) " if args.twist else ""
        print(f"{kind}center of {label} in degree {args.degree} "
              f"({scope} scope):")
        print(f"  ambient dimension: {rep.ambient_dimension}")
        print(f"  solution dimension: {rep.dimension}")
        for _, elt in rep.solution:
            print(f"    {elt}")
        shown = 0
        for g, c, v, d in rep.witnesses:
            if shown >= args.max_witnesses:
                print(f"    ... ({len(rep.witnesses) - shown} more witnesses)")
                break
            print(f"  witness [{g}, {c}] = {d if d is not None else v}")
            shown += 1
        print(f"  conclusive: {rep.conclusive}")
        for note in rep.notes:
            print(f"  note: {note}")
    if args.expect_nonempty and rep.dimension == 0:
        return EXIT_NEGATIVE
    if args.expect_empty and rep.dimension > 0:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_builtin(args):
    if args.action == "list":
        for name, entry in models.CATALOG.items():
            print(f"{name:24} {entry.kind:13} {entry.provenance}")
        return EXIT_OK
    entry = models.CATALOG.get(args.name)
    if entry is None:
        try:
            obj = models.get_builtin(args.name)
        except KeyError as exc:
            raise UsageError(str(exc))
        name = args.name
    else:
        obj, name = entry.build(), entry.name
    print(f"builtin {name}:")
    if isinstance(obj, DgaModel):
        print(serialize(model_to_ast(obj)), end="")
    else:
        for bname, deg in obj.basis if isinstance(obj, FiniteTable) else \
                list(obj.outer) + list(obj.fiber):
            print(f"  basis {bname} : {deg}")
        if isinstance(obj, FiniteTable):
            for (i, j), value in sorted(obj.raw_brackets.items()):
                if value:
                    rhs = " + ".join(
                        (obj.names[k] if c == 1 else f"{c}*{obj.names[k]}")
                        for k, c in sorted(value.items()))
                    print(f"  [{obj.names[i]}, {obj.names[j]}] = {rhs}")
        else:
            for (f, o), value in sorted(obj.action.items()):
                elt = obj.element(value)
                print(f"  [{obj.names[f]}, {obj.names[o]}] = {elt}")
    if getattr(obj, "provenance", ""):
        print(f"  # {obj.provenance}")
    return EXIT_OK


def cmd_replicate(args):
    only = set(args.only) if args.only else None
    outcomes = replicate_mod.run_all(only=only)
    if args.json:
        doc = report("builtin-suite", "replicate",
                     {"only": sorted(only) if only else None},
                     [{"id": o.cid, "title": o.title, "pass": o.ok,
                       "seconds": round(o.elapsed, 3), "details": o.details}
                      for o in outcomes],
                     ["replication manifest: sullivan/data/replication.json"])
        print(to_json(doc), end="")
    else:
        for o in outcomes:
            print(f"{o.cid:4} {'PASS' if o.ok else 'FAIL'} "
                  f"({o.elapsed:6.2f}s)  {o.title}")
            if args.verbose or not o.ok:
                for d in o.details:
                    print(f"       {d}")
        npass = sum(1 for o in outcomes if o.ok)
        print(f"{npass}/{len(outcomes)} criteria pass")
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_NEGATIVE


def build_parser():
    p = argparse.ArgumentParser(
        prog="sullivan",
        description="Exact computations with Sullivan models, Massey "
                    "products, and Pontrjagin-ring centers.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true",
                        help="emit the JSON report schema")
        return sp

    sp = add("check", cmd_check, "validate d^2 = 0 and degree bookkeeping")
    sp.add_argument("model", help="builtin:NAME or path to a .sul file")

    sp = add("cohomology", cmd_cohomology, "cohomology table with representatives")
    sp.add_argument("model")
    sp.add_argument("--max-degree", type=int, required=True)

    sp = add("massey", cmd_massey, "triple Massey product of three classes")
    sp.add_argument("model")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("w")

    sp = add("loopify", cmd_loopify, "free loop space model")
    sp.add_argument("model")
    sp.add_argument("--out", help="write the result to a file")

    sp = add("lie", cmd_lie, "bracket table from the quadratic differential")
    sp.add_argument("model")
    sp.add_argument("--max-degree", type=int, required=True)

    sp = add("center", cmd_center, "center or twisted center of a presentation")
    sp.add_argument("source")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--twist", help="twist element (e.g. 'y1' or 'a0')")
    sp.add_argument("--probe", type=int, help="probe bound for twisted mode")
    sp.add_argument("--primitives-only", action="store_true")
    sp.add_argument("--extract", action="store_true",
                    help="extract a bracket table when the source is a model")
    sp.add_argument("--max-degree", type=int, default=40,
                    help="bracket-table bound when extracting")
    sp.add_argument("--max-witnesses", type=int, default=5)
    sp.add_argument("--expect-nonempty", action="store_true",
                    help="exit 1 when the center is zero")
    sp.add_argument("--expect-empty", action="store_true",
                    help="exit 1 when the center is nonzero")

    sp = add("builtin", cmd_builtin, "list or show built-in models")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")

    sp = add("replicate", cmd_replicate, "run the replication suite")
    sp.add_argument("--only", nargs="*", help="criterion ids, e.g. C3 C8")
    sp.add_argument("--verbose", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InsufficientBracketData as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MasseyUndefinedError as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ParseError, ModelError) as exc:
        print(f"invalid model: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
