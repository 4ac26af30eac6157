"""``relhom`` command line: run the verifications on algebras stored as JSON.

Every command prints one JSON report on standard output. Exit status is 0
when the verdict passes, 1 when it fails and 2 on unusable input.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Mapping, Sequence

from ..algebra import (AlgebraError, SubalgebraEmbedding, check_algebra, check_subalgebra,
                       is_diagonal, is_lower_triangular, is_upper_triangular, peirce,
                       quotient_algebra, two_sided_ideal)
from ..bar import (DEFAULT_DEGREE, TorMismatchError, bar_resolution, is_stratifying,
                   quotient_bimodule, relative_tor)
from ..exactla import Field, Matrix
from ..fixtures import (EXAMPLE_BASIS, lu_example, lu_example_factors,
                        two_cycle_zero_relation)
from ..module import ModuleError, regular_bimodule
from ..report import Report
from ..twisted import AssociativityError, build_twisted_algebra, check_lu, theorem_main
from .files import (InputError, algebra_from_dict, algebra_to_dict, check_reference, digest,
                    dumps, embedding_to_list, load_json, parse_module, parse_scalar,
                    parse_subring, parse_vector, vector_to_dict)

EXAMPLES = ("lu", "lu-factors", "zero-relation")


def _field(args) -> Field | None:
    if not args.field:
        return None
    try:
        return Field.parse(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_algebra(path: str, args, validate: bool = True):
    """Parse an algebra file. The result carries ``source_digest``, the digest
    of the file as declared, which companion files refer to even when
    ``--field`` reinterprets the constants."""
    doc = load_json(path)
    field = _field(args)
    a = algebra_from_dict(doc, field, validate)
    a.source_digest = digest(a if field is None else algebra_from_dict(doc, None, False))
    return a


class Pair:
    """An algebra with its companion file (subrings, idempotents, modules)."""

    def __init__(self, a, path: str | None):
        self.a = a
        self.path = path
        self.doc: Mapping = {}
        if path:
            doc = load_json(path)
            if not isinstance(doc, Mapping):
                raise InputError("pair file must be a JSON object")
            check_reference(doc, "algebra", a.source_digest, "pair file")
            self.doc = doc

    def subring(self, name: str):
        rings = self.doc.get("subrings", {})
        if name not in rings:
            if name == "S" and not self.path:
                raise InputError("a pair file (--pair) naming the subring S is required")
            raise InputError(f"pair file has no subring {name!r}")
        return parse_subring(self.a, rings[name])

    def idempotent(self, name: str | None) -> dict:
        if name is None:
            idem = self.doc.get("idempotents", {})
            if len(idem) != 1:
                raise InputError("give --idempotent (the pair file does not name exactly one)")
            name = next(iter(idem))
        spec = self.doc.get("idempotents", {}).get(name, name)
        v = parse_vector(self.a, spec)
        if self.a.mul(v, v) != v:
            raise InputError(f"{name!r} is not idempotent")
        return v

    def module(self, name: str, e_name: str | None):
        mods = self.doc.get("modules", {})
        if name in mods:
            return parse_module(self.a, mods[name])
        if name == "A":
            return regular_bimodule(self.a)
        if name == "A/AeA":
            ev = self.idempotent(e_name)
            return quotient_bimodule(self.a, two_sided_ideal(self.a, [ev]))
        raise InputError(f"unknown module {name!r} (pair file modules, 'A' or 'A/AeA')")

    def inputs(self) -> dict:
        out = {"algebra": self.a.source_digest}
        if self.path:
            out["pair"] = digest(self.doc)
        return out


def _report(command: str, args, inputs: Mapping, checks: Sequence[Report], verdict: str,
            ok: bool, result: Mapping | None = None, degree: int | None = None) -> dict:
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    out: dict[str, Any] = {"command": {"name": command, "args": echo}, "inputs": dict(inputs),
                           "checks": [c.to_dict() for c in checks], "verdict": verdict, "ok": ok}
    if result is not None:
        out["result"] = dict(result)
    if degree is not None:
        out["degree"] = degree
    return out


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# -- commands ----------------------------------------------------------------------

def cmd_check(args) -> dict:
    a = _load_algebra(args.algebra, args, validate=False)
    rep = check_algebra(a)
    return _report("check", args, {"algebra": a.source_digest}, [rep],
                   "pass" if rep.ok else "fail", rep.ok, {"dim": a.dim})


def cmd_peirce(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    ev = pair.idempotent(args.idempotent)
    blocks = peirce(a, ev)
    result = {"dims": {"eAe": blocks.ee.dim, "eAebar": blocks.e_ebar.dim,
                       "ebarAe": blocks.ebar_e.dim, "ebarAebar": blocks.ebar_ebar.dim},
              "upper_triangular": is_upper_triangular(a, ev),
              "lower_triangular": is_lower_triangular(a, ev),
              "diagonal": is_diagonal(a, ev)}
    return _report("peirce", args, pair.inputs(), [], "pass", True, result)


def _gens(pair: Pair, args) -> list[dict]:
    if args.gens:
        return [pair.idempotent(g) if g in pair.doc.get("idempotents", {}) else
                parse_vector(pair.a, g) for g in args.gens]
    return [pair.idempotent(args.idempotent)]


def cmd_ideal(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    ideal = two_sided_ideal(a, _gens(pair, args))
    result = {"dim": ideal.dim, "basis": [vector_to_dict(a, v) for v in ideal.rows]}
    return _report("ideal", args, pair.inputs(), [], "pass", True, result)


def cmd_quotient(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    ideal = two_sided_ideal(a, _gens(pair, args))
    q, _ = quotient_algebra(a, ideal)
    qdoc = algebra_to_dict(q)
    if args.out:
        _write(args.out, dumps(qdoc))
    result = {"dim_ideal": ideal.dim, "dim_quotient": q.dim, "algebra": qdoc,
              "algebra_digest": digest(qdoc)}
    return _report("quotient", args, pair.inputs(), [], "pass", True, result)


def cmd_bar(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    s = pair.subring(args.subring)
    m = pair.module(args.module, args.idempotent)
    bar = bar_resolution(s, m, args.degree, verify=False, side=args.side)
    rep = bar.verify()
    result = {"dims": {str(k): bar.t(k + 1).dim for k in range(-1, args.degree + 1)}}
    return _report("bar", args, pair.inputs(), [rep], "pass" if rep.ok else "fail", rep.ok,
                   result, args.degree)


def cmd_tor(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    s = pair.subring(args.subring)
    n_mod = pair.module(args.n, args.idempotent)
    m_mod = pair.module(args.m, args.idempotent)
    methods = args.methods.split(",")
    try:
        tor = relative_tor(s, n_mod, m_mod, args.degree, methods)
    except TorMismatchError as exc:
        rep = Report("Tor methods agree")
        rep.fail(str(exc))
        return _report("tor", args, pair.inputs(), [rep], "methods-disagree", False,
                       degree=args.degree)
    return _report("tor", args, pair.inputs(), [], "pass", True, tor.to_dict(), args.degree)


def cmd_stratify(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    s = pair.subring(args.subring)
    ev = pair.idempotent(args.idempotent)
    if s.pullback(ev) is None:
        raise InputError("the idempotent does not lie in the subring")
    strat = is_stratifying(s, ev, args.degree)
    return _report("stratify", args, pair.inputs(), [], strat.verdict, strat.ok,
                   strat.to_dict(), args.degree)


def cmd_lu(args) -> dict:
    a = _load_algebra(args.algebra, args)
    pair = Pair(a, args.pair)
    s, l, u = pair.subring(args.subring), pair.subring(args.lower), pair.subring(args.upper)
    ev = pair.idempotent(args.idempotent)
    if s.pullback(ev) is None:
        raise InputError("the idempotent does not lie in the subring")
    if args.theorem:
        rep = theorem_main(s, ev, l, u, args.degree)
        verdict = rep.details["verdict"]
        ok = rep.ok and verdict != "hypothesis-not-met"
        return _report("lu", args, pair.inputs(), [rep], verdict, ok, degree=args.degree)
    lu = check_lu(s, ev, l, u)
    result = {}
    if lu.twisted is not None:
        result = {"dim_tensor": lu.twisted.dim_tensor, "dim_algebra": lu.twisted.dim_algebra}
    return _report("lu", args, pair.inputs(), [lu.report], "pass" if lu.ok else "fail",
                   lu.ok, result)


def cmd_twist_build(args) -> dict:
    l_alg = _load_algebra(args.lower, args)
    u_alg = _load_algebra(args.upper, args)
    s_alg = _load_algebra(args.sub, args)
    doc = load_json(args.tau)
    if not isinstance(doc, Mapping):
        raise InputError("twist file must be a JSON object")
    check_reference(doc, "L", l_alg.source_digest, "twist file")
    check_reference(doc, "U", u_alg.source_digest, "twist file")
    check_reference(doc, "S", s_alg.source_digest, "twist file")
    s_l = _embedding(s_alg, l_alg, doc.get("s_in_l"), "s_in_l")
    s_u = _embedding(s_alg, u_alg, doc.get("s_in_u"), "s_in_u")
    tau = _tau_values(l_alg, u_alg, doc.get("tau"))
    inputs = {"L": l_alg.source_digest, "U": u_alg.source_digest, "S": s_alg.source_digest,
              "tau": digest(doc)}
    try:
        alg, _, _ = build_twisted_algebra(s_l, s_u, tau)
    except AssociativityError as exc:
        rep = exc.report or Report("twisted algebra")
        if rep.ok:
            rep.fail(str(exc))
        result = {"associativity_witnesses": [list(w) for w in exc.witnesses]}
        return _report("twist-build", args, inputs, [rep], "not-associative", False, result)
    if args.order:
        alg = alg.permuted(args.order.split(","))
    adoc = algebra_to_dict(alg)
    if args.out:
        _write(args.out, dumps(adoc))
    return _report("twist-build", args, inputs, [check_algebra(alg)], "pass", True,
                   {"dim": alg.dim, "algebra": adoc, "algebra_digest": digest(adoc)})


def _embedding(s_alg, amb, spec, key):
    if not isinstance(spec, Mapping) or set(spec) != set(s_alg.names):
        raise InputError(f"{key} must give an image for every basis element of S")
    cols = [parse_vector(amb, spec[n]) for n in s_alg.names]
    emb = SubalgebraEmbedding(s_alg, amb, Matrix(amb.field, amb.dim, s_alg.dim, cols))
    rep = check_subalgebra(emb)
    if not rep:
        raise InputError(f"{key} is not an embedding of rings: {rep.failures[0]}")
    return emb


def _tau_values(l_alg, u_alg, spec) -> dict:
    if not isinstance(spec, list):
        raise InputError("tau must be a list of {u, l, image} entries")
    out = {}
    for entry in spec:
        if not isinstance(entry, Mapping) or set(entry) != {"u", "l", "image"}:
            raise InputError(f"bad tau entry {entry!r}")
        u, l = entry["u"], entry["l"]
        if u not in u_alg.names or l not in l_alg.names:
            raise InputError(f"tau entry names unknown basis elements: {u!r}, {l!r}")
        image = {}
        for term in entry["image"]:
            if not isinstance(term, Mapping) or set(term) != {"l", "u", "c"}:
                raise InputError(f"bad tau term {term!r}")
            if term["l"] not in l_alg.names or term["u"] not in u_alg.names:
                raise InputError(f"tau term names unknown basis elements: {term!r}")
            image[(term["l"], term["u"])] = parse_scalar(l_alg.field, term["c"])
        out[(u, l)] = image
    return out


# -- built-in examples ---------------------------------------------------------------

def example_files(name: str, field: Field | None = None) -> dict[str, dict]:
    """File name to document for a built-in example."""
    kw = {"field": field} if field is not None else {}
    if name == "lu":
        fx = lu_example(**kw)
        a = fx.algebra
        pair = {"algebra": digest(a),
                "subrings": {"S": embedding_to_list(fx.s), "L": embedding_to_list(fx.l),
                             "U": embedding_to_list(fx.u)},
                "idempotents": {"e": vector_to_dict(a, fx.e.vec)},
                "modules": {"Abar": {"kind": "quotient", "ideal": ["e11"]}}}
        return {"lu.algebra.json": algebra_to_dict(a), "lu.pair.json": pair}
    if name == "lu-factors":
        ti = lu_example_factors(**kw)
        tau = []
        for (u, l), image in sorted(ti.tau.items()):
            terms = [{"l": lp, "u": up, "c": ti.l.field.format(ti.l.field(c))}
                     for (lp, up), c in sorted(image.items())]
            tau.append({"u": u, "l": l, "image": terms})
        twist = {"L": digest(ti.l), "U": digest(ti.u), "S": digest(ti.s),
                 "s_in_l": {n: vector_to_dict(ti.l, ti.s_l.incl.col(j))
                            for j, n in enumerate(ti.s.names)},
                 "s_in_u": {n: vector_to_dict(ti.u, ti.s_u.incl.col(j))
                            for j, n in enumerate(ti.s.names)},
                 "tau": tau}
        return {"factors.L.json": algebra_to_dict(ti.l), "factors.U.json": algebra_to_dict(ti.u),
                "factors.S.json": algebra_to_dict(ti.s), "factors.tau.json": twist}
    if name == "zero-relation":
        a = two_cycle_zero_relation(**kw)
        pair = {"algebra": digest(a), "subrings": {"S": ["e1", "e2"]},
                "idempotents": {"e1": "e1", "e2": "e2"}}
        return {"zero-relation.algebra.json": algebra_to_dict(a),
                "zero-relation.pair.json": pair}
    raise InputError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")


def cmd_example(args) -> dict:
    files = example_files(args.name, _field(args))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for fname, doc in files.items():
            _write(os.path.join(args.out, fname), dumps(doc))
    result: dict[str, Any] = {"files": files}
    if args.name == "lu":
        result["basis"] = list(EXAMPLE_BASIS)
    return _report("example", args, {}, [], "pass", True, result)


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="relhom", description=(
        "Exact verification of relative homological algebra for finite-dimensional algebras."))
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, pair=True, degree=False, algebra=True):
        p = sub.add_parser(name, help=help_text)
        if algebra:
            p.add_argument("algebra", help="algebra file (JSON)")
        p.add_argument("--field", help="q or fp:<p>; reinterpret the structure constants")
        p.add_argument("--out", help="write the produced file (or a copy of the report) here")
        if pair:
            p.add_argument("--pair", help="companion file with subrings, idempotents, modules")
            p.add_argument("--idempotent", help="idempotent: a name from the pair file or a basis name")
        if degree:
            p.add_argument("--degree", type=int, default=DEFAULT_DEGREE,
                           help=f"truncation degree (default {DEFAULT_DEGREE})")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "associativity and unit", pair=False)
    add("peirce", cmd_peirce, "Peirce decomposition for an idempotent")
    for name, func in (("ideal", cmd_ideal), ("quotient", cmd_quotient)):
        p = add(name, func, f"two-sided {name} generated by elements")
        p.add_argument("gens", nargs="*", help="generators (default: the idempotent)")
    p = add("bar", cmd_bar, "relative bar resolution and its identities", degree=True)
    p.add_argument("module", help="module name: from the pair file, 'A' or 'A/AeA'")
    p.add_argument("--subring", default="S")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p = add("tor", cmd_tor, "relative Tor dimensions", degree=True)
    p.add_argument("n", help="right module name")
    p.add_argument("m", help="left module name")
    p.add_argument("--subring", default="S")
    p.add_argument("--methods", default="definition,left-resolution,right-resolution")
    p = add("stratify", cmd_stratify, "is AeA a relative stratifying ideal", degree=True)
    p.add_argument("--subring", default="S")
    p = add("lu", cmd_lu, "LU-decomposition test", degree=True)
    p.add_argument("--subring", default="S")
    p.add_argument("--lower", default="L")
    p.add_argument("--upper", default="U")
    p.add_argument("--theorem", action="store_true",
                   help="also run the consequences and the stratification test")
    p = add("twist-build", cmd_twist_build, "algebra L (x)_S U from a twisting map",
            pair=False, algebra=False)
    for arg in ("lower", "upper", "sub", "tau"):
        p.add_argument(arg)
    p.add_argument("--order", help="comma-separated basis order for the output")
    p = add("example", cmd_example, "write a built-in example", pair=False, algebra=False)
    p.add_argument("name", choices=EXAMPLES)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        report = args.func(args)
    except (InputError, AlgebraError, ModuleError) as exc:
        sys.stdout.write(dumps({"command": {"name": args.command}, "error": str(exc),
                                "verdict": "input-error", "ok": False}))
        return 2
    text = dumps(report)
    sys.stdout.write(text)
    if args.out and args.command not in ("quotient", "twist-build", "example"):
        _write(args.out, text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
