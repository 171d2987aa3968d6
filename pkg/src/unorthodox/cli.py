"""Command-line interface.

Exit codes: 0 = holds/valid/ok; 1 = fails/invalid (counterexample printed);
2 = usage or parse error; 3 = malformed algebra/proof input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import logic as lg
from . import structure as st
from . import varieties as vr
from .algebra import (
    AlgebraError, BUILTIN_NAMES, axiom_profile, builtin, builtins, from_json,
    height, in_variety,
)
from .identities import holds, profile, verify_catalog
from .terms import ParseError, UnboundVariable, eval_term, parse_equation, \
    parse_term, term_to_text

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


def _load_algebra(spec):
    """Builtin name or path to a JSON algebra file."""
    if spec in BUILTIN_NAMES:
        return builtin(spec)
    if spec == "trivial":
        from .algebra import trivial
        return trivial()
    try:
        with open(spec) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: not valid JSON ({exc})") from exc
    try:
        return from_json(doc)
    except AlgebraError as exc:
        raise InputError(f"{spec}: {exc}") from exc


def _emit(args, payload, text):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_valuation(text):
    out = {}
    if not text:
        return out
    for part in text.split(","):
        name, _, val = part.partition("=")
        name, val = name.strip(), val.strip()
        if not name or not val.isdigit():
            raise InputError(f"bad valuation entry {part!r} (want name=index)")
        out[name] = int(val)
    return out


# --- subcommand handlers ---------------------------------------------------

def cmd_algebra(args):
    alg = _load_algebra(args.target)
    if args.action == "show":
        _emit(args, alg.to_json(), alg.dumps())
        return EXIT_OK
    # validate: structural validation happened on load; report axiom profile
    prof = axiom_profile(alg)
    ok = all(c.holds for c in prof.values())
    payload = {
        "name": alg.name,
        "valid_lattice": True,
        "axioms": {k: {"holds": v.holds, "counterexample": v.counterexample}
                   for k, v in prof.items()},
        "in_variety": ok,
    }
    lines = [f"{alg.name}: lattice structure ok"]
    for k, v in prof.items():
        mark = "ok" if v.holds else f"FAIL {v.counterexample}"
        lines.append(f"  {k}: {mark}")
    lines.append("in variety" if ok else "NOT in variety")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_eval(args):
    alg = _load_algebra(args.algebra)
    t = parse_term(args.term)
    v = _parse_valuation(args.valuation)
    try:
        value = eval_term(alg, t, v)
    except UnboundVariable as exc:
        raise InputError(f"unbound variable {exc}") from exc
    _emit(args, {"term": term_to_text(t), "value": value,
                 "label": alg.label(value)}, str(value))
    return EXIT_OK


def cmd_check_id(args):
    alg = _load_algebra(args.algebra)
    eq = parse_equation(args.equation)
    res = holds(alg, eq)
    if res.holds:
        _emit(args, {"holds": True}, "holds")
        return EXIT_OK
    if res.counterexample:
        where = ", ".join(f"{k}={v}" for k, v in sorted(res.counterexample.items()))
    else:
        where = "closed: LHS=%d" % eval_term(alg, eq.lhs, {})
    _emit(args, {"holds": False, "counterexample": res.counterexample},
          f"fails ({where})")
    return EXIT_FAIL


def cmd_profile(args):
    eqs = [parse_equation(e) for e in args.equation]
    p = profile(eqs)
    text = "".join(str(i) for i in sorted(p)) or "0"
    _emit(args, {"profile": sorted(p)}, text)
    return EXIT_OK


def cmd_classify(args):
    alg = _load_algebra(args.target)
    try:
        s = vr.classify(alg)
    except st.NotInVariety as exc:
        print(f"not in variety: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(args, {"classify": sorted(s)}, vr.format_subvariety_id(s))
    return EXIT_OK


def cmd_structure(args):
    alg = _load_algebra(args.algebra)
    act = args.action
    if act == "sub":
        subs = st.subalgebras(alg)
        _emit(args, {"subalgebras": [sorted(s) for s in subs]},
              "\n".join(str(sorted(s)) for s in subs))
        return EXIT_OK
    if act == "aut":
        autos = st.automorphisms(alg)
        _emit(args, {"automorphisms": [list(a) for a in autos]},
              "\n".join(str(list(a)) for a in autos))
        return EXIT_OK
    if act == "con":
        lat = st.congruences(alg)
        _emit(args, {"congruences": [list(p) for p in lat.partitions]},
              "\n".join(str(list(p)) for p in lat.partitions))
        return EXIT_OK
    if act == "simple":
        simple = st.is_simple(alg)
        _emit(args, {"simple": simple}, "simple" if simple else "not simple")
        return EXIT_OK if simple else EXIT_FAIL
    if act == "sc":
        res = st.sc_check(alg)
        if res.ok:
            _emit(args, {"ok": True}, "ok")
            return EXIT_OK
        _emit(args, {"ok": False, "witness": res.witness},
              f"fails at x={res.witness}")
        return EXIT_FAIL
    if act == "height":
        h = height(alg)
        _emit(args, {"height": h}, str(h))
        return EXIT_OK
    if act == "disc":
        rep = st.discriminator_check(alg)
        if rep.ok:
            _emit(args, {"ok": True, "term": term_to_text(rep.term)}, "ok")
            return EXIT_OK
        _emit(args, {"ok": False, "failing_triple": list(rep.failing_triple)},
              f"fails at {rep.failing_triple}")
        return EXIT_FAIL
    if act == "primal":
        rep = st.is_primal(alg)
        payload = {
            "primal": rep.primal,
            "subalgebras": rep.subalgebra_count,
            "automorphisms": rep.automorphism_count,
            "discriminator_ok": rep.discriminator.ok if rep.discriminator else None,
            "clone_binary_count": rep.clone_binary_count,
        }
        _emit(args, payload, "primal" if rep.primal else "not primal")
        return EXIT_OK if rep.primal else EXIT_FAIL
    raise InputError(f"unknown structure action {act}")


def cmd_product(args):
    algs = [_load_algebra(a) for a in args.algebras]
    try:
        prod = st.direct_product(algs)
    except st.SizeLimit as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(prod.dumps())
    return EXIT_OK


def cmd_decompose(args):
    alg = _load_algebra(args.target)
    try:
        factors = st.decompose(alg)
    except st.NotInVariety as exc:
        print(f"not in variety: {exc}", file=sys.stderr)
        return EXIT_FAIL
    names = []
    for f in factors:
        match = next((b.name for b in builtins() if st.iso(f, b)), None)
        names.append(match or f.name)
    _emit(args,
          {"factors": names, "algebras": [f.to_json() for f in factors]},
          " x ".join(names) if names else "(trivial: empty product)")
    return EXIT_OK


def cmd_enumerate(args):
    try:
        models = st.enumerate_runo1(args.max_size)
    except st.NotApplicable as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    payload = {"count": len(models),
               "models": [m.to_json() for m in models]}
    _emit(args, payload,
          "\n".join(f"{m.name} (size {m.size})" for m in models)
          or "(none)")
    return EXIT_OK


def cmd_variety(args):
    if args.action == "lattice":
        if getattr(args, "json", False):
            payload = [{"id": v.key, "height": v.height,
                        "base": [str(e) for e in v.base]}
                       for v in vr.lattice()]
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(vr.lattice_dot())
        return EXIT_OK
    if args.action == "base":
        try:
            s = vr.parse_subvariety_id(args.id)
        except vr.BadSubvarietyId as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
        info = vr.base_of(s)
        _emit(args,
              {"id": info.key, "base": [str(e) for e in info.base],
               "note": info.note},
              "\n".join(str(e) for e in info.base) or "(empty relative base)")
        return EXIT_OK
    # verify
    rep = vr.verify_bases()
    _emit(args, rep.to_json(), rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_logic(args):
    act = args.action
    if act == "decide":
        f = lg.parse_formula(args.formula)
        s = vr.parse_subvariety_id(args.subvariety) if args.subvariety \
            else frozenset({1, 2, 3, 4, 5})
        ok = lg.decide_in_extension(f, s)
        if ok:
            _emit(args, {"theorem": True}, "theorem")
            return EXIT_OK
        counter = None
        for i in sorted(s):
            v = lg.is_valid(f, lg.Matrix(builtin(f"A{i}")))
            if not v.valid:
                counter = {"algebra": f"A{i}", "valuation": v.counter_valuation}
                break
        _emit(args, {"theorem": False, "counterexample": counter},
              f"not a theorem ({counter['algebra']} at {counter['valuation']})")
        return EXIT_FAIL
    if act == "prove-check":
        try:
            with open(args.proof) as fh:
                proof = lg.proof_from_json(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.proof}: {exc}") from exc
        except (lg.MalformedProof, json.JSONDecodeError) as exc:
            raise InputError(str(exc)) from exc
        res = lg.check_proof(proof)
        if res.ok:
            _emit(args, {"ok": True}, "ok")
            return EXIT_OK
        _emit(args, {"ok": False, "first_bad_step": res.first_bad_step,
                     "reason": res.reason},
              f"invalid at step {res.first_bad_step}: {res.reason}")
        return EXIT_FAIL
    if act == "axioms":
        payload = [{"id": i, "formula": text,
                    "name": lg.AXIOM_NAMES.get(i, "")}
                   for i, text in sorted(lg.AXIOM_SCHEMAS.items())]
        _emit(args, payload, "\n".join(
            f"{i}. {text}" + (f"  ({lg.AXIOM_NAMES[i]})" if i in lg.AXIOM_NAMES else "")
            for i, text in sorted(lg.AXIOM_SCHEMAS.items())))
        return EXIT_OK
    if act == "translate":
        if args.formula:
            eq = lg.tau(lg.parse_formula(args.formula))
            _emit(args, {"tau": str(eq)}, str(eq))
        elif args.equation:
            f1, f2 = lg.rho(parse_equation(args.equation))
            texts = [lg.formula_to_text(f1), lg.formula_to_text(f2)]
            _emit(args, {"rho": texts}, "\n".join(texts))
        else:
            print("translate needs a formula or --equation", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    raise InputError(f"unknown logic action {act}")


def cmd_report(args):
    out = args.out
    os.makedirs(out, exist_ok=True)

    def write(name, payload):
        path = os.path.join(out, name)
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")

    write("axioms.json", {
        a.name: {k: v.holds for k, v in axiom_profile(a).items()}
        for a in builtins()})
    write("structure.json", {
        a.name: {
            "subalgebras": len(st.subalgebras(a)),
            "automorphisms": len(st.automorphisms(a)),
            "congruences": len(st.congruences(a)),
            "simple": st.is_simple(a),
            "sc": st.sc_check(a).ok,
            "height": height(a),
            "discriminator": st.discriminator_check(a).ok,
            "primal": st.is_primal(a, oracle="never").primal,
        }
        for a in builtins()})
    write("variety_bases.json", vr.verify_bases().to_json())
    write("catalog.json", verify_catalog().to_json())
    srep = lg.soundness_report()
    write("logic_soundness.json", {
        "ok": srep.ok,
        "schemas": {str(i): d for i, d in srep.schema_results.items()},
        "smp": srep.smp_sound,
        "scp": srep.scp_sound})
    write("extensions.json", [
        {"id": vr.format_subvariety_id(v.id), "ok": v.ok,
         "valid_inside": v.valid_inside, "invalid_outside": v.invalid_outside}
        for v in lg.verify_extension_bases()])
    with open(os.path.join(out, "lattice.dot"), "w") as fh:
        fh.write(vr.lattice_dot() + "\n")
    print(f"report written to {out}")
    return EXIT_OK


# --- parser wiring ---------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="unorthodox",
        description="Workbench for the five unorthodox algebras and their logic")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=lambda **kw: argparse.ArgumentParser(
                               parents=[common], **kw))

    sp = sub.add_parser("algebra", help="show or validate an algebra")
    sp.add_argument("action", choices=["show", "validate"])
    sp.add_argument("target", help="builtin name (A1..A5) or JSON file")
    sp.set_defaults(func=cmd_algebra)

    sp = sub.add_parser("eval", help="evaluate a term")
    sp.add_argument("-a", "--algebra", required=True)
    sp.add_argument("-t", "--term", required=True)
    sp.add_argument("-v", "--valuation", default="", help="x=2,y=0,...")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("check-id", help="check an identity")
    sp.add_argument("-a", "--algebra", required=True)
    sp.add_argument("-e", "--equation", required=True)
    sp.set_defaults(func=cmd_check_id)

    sp = sub.add_parser("profile", help="which builtins satisfy the equations")
    sp.add_argument("-e", "--equation", action="append", required=True)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("classify", help="least subvariety containing an algebra")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("structure", help="structural analyses")
    sp.add_argument("action", choices=["sub", "aut", "con", "simple", "sc",
                                       "height", "disc", "primal"])
    sp.add_argument("-a", "--algebra", required=True)
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("product", help="direct product (JSON to stdout)")
    sp.add_argument("algebras", nargs="+")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("decompose", help="simple factors of a variety member")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("enumerate", help="bounded model enumeration")
    sp.add_argument("--max-size", type=int, default=4)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("variety", help="subvariety lattice and bases")
    sp.add_argument("action", choices=["lattice", "base", "verify"])
    sp.add_argument("id", nargs="?", default="",
                    help="digit string, e.g. 135 (for base)")
    sp.set_defaults(func=cmd_variety)

    sp = sub.add_parser("logic", help="logic-side operations")
    sp.add_argument("action",
                    choices=["decide", "prove-check", "axioms", "translate"])
    sp.add_argument("formula", nargs="?", default="",
                    help="formula (decide) or proof file (prove-check)")
    sp.add_argument("-S", "--subvariety", default="",
                    help="digit string selecting an extension (decide)")
    sp.add_argument("--equation", default="", help="equation for rho (translate)")
    sp.set_defaults(func=cmd_logic)

    sp = sub.add_parser("report", help="regenerate the verification report")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_report)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # `logic prove-check FILE` reuses the positional slot
    if args.command == "logic" and args.action == "prove-check":
        args.proof = args.formula
        if not args.proof:
            parser.error("prove-check needs a proof file")
    if args.command == "logic" and args.action == "decide" and not args.formula:
        parser.error("decide needs a formula")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
