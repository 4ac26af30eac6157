"""JSON formats: algebra files, companion pair files and twisting files.

Scalars are written as ``"num/den"`` strings (residues for prime fields).
Companion files name the algebra they describe by the sha256 digest of its
canonical serialization, so a pair file cannot silently be used with the
wrong algebra.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Mapping

import gmpy2

from ..algebra import (Algebra, SubalgebraEmbedding, check_algebra, scalar_subalgebra,
                       subalgebra, two_sided_ideal)
from ..bar import quotient_bimodule
from ..exactla import Field, Matrix
from ..module import (ModuleRep, character_module, module_from_matrices, regular_bimodule,
                      regular_left, regular_right)

__all__ = [
    "InputError", "dumps", "digest", "scalar_to_str", "parse_scalar",
    "algebra_to_dict", "algebra_from_dict", "vector_to_dict", "parse_vector",
    "embedding_to_list", "parse_subring", "parse_module", "load_json",
]


class InputError(ValueError):
    """A file is malformed or describes an invalid object."""


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def jsonable(x: Any) -> Any:
    if isinstance(x, Mapping):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (str, bool)) or x is None:
        return x
    if isinstance(x, int):
        return x
    if type(x) is type(gmpy2.mpq(0)):
        return f"{x.numerator}/{x.denominator}"
    if type(x) is type(gmpy2.mpz(0)):
        return int(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return repr(x)


def digest(obj: Any) -> str:
    """``sha256:<hex>`` of the canonical serialization."""
    if isinstance(obj, Algebra):
        obj = algebra_to_dict(obj)
    return "sha256:" + hashlib.sha256(dumps(obj).encode()).hexdigest()


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


# -- scalars and vectors --------------------------------------------------------

def scalar_to_str(field: Field, x) -> str:
    return field.format(x)


def parse_scalar(field: Field, value) -> Any:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"scalar must be an integer or a 'num/den' string, got {value!r}")
    try:
        return field(Fraction(value) if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {value!r}: {exc}") from exc


def vector_to_dict(a: Algebra, v: Mapping) -> dict[str, str]:
    return {a.names[k]: scalar_to_str(a.field, c) for k, c in sorted(v.items()) if c}


def parse_vector(a: Algebra, spec) -> dict:
    """A basis name or a ``{name: scalar}`` mapping."""
    if isinstance(spec, str):
        if spec not in a.names:
            raise InputError(f"unknown basis element {spec!r}")
        return {a.index(spec): a.field.one}
    if not isinstance(spec, Mapping):
        raise InputError(f"vector must be a basis name or an object, got {spec!r}")
    out = {}
    for name, c in spec.items():
        if name not in a.names:
            raise InputError(f"unknown basis element {name!r}")
        val = parse_scalar(a.field, c)
        if val:
            out[a.index(name)] = val
    return out


# -- algebra files ---------------------------------------------------------------

def algebra_to_dict(a: Algebra) -> dict:
    mult = []
    for (i, j), vec in sorted(a.table_items()):
        for k, c in sorted(vec.items()):
            mult.append({"i": i, "j": j, "k": k, "c": scalar_to_str(a.field, c)})
    unit = [scalar_to_str(a.field, a.unit.get(k, a.field.zero)) for k in range(a.dim)]
    return {"field": a.field.spec, "dim": a.dim, "basis_names": list(a.names),
            "unit": unit, "mult": mult}


def algebra_from_dict(d: Any, field: Field | None = None, validate: bool = True) -> Algebra:
    """Parse an algebra file. ``field`` overrides the declared field."""
    if not isinstance(d, Mapping):
        raise InputError("algebra file must be a JSON object")
    missing = {"field", "dim", "basis_names", "unit", "mult"} - set(d)
    if missing:
        raise InputError(f"algebra file lacks {sorted(missing)}")
    try:
        f = field or Field.parse(str(d["field"]))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    dim, names = d["dim"], d["basis_names"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError("dim must be a positive integer")
    if not isinstance(names, list) or len(names) != dim or not all(isinstance(n, str) for n in names):
        raise InputError("basis_names must list dim strings")
    if len(set(names)) != dim:
        raise InputError("basis names must be distinct")
    if not isinstance(d["unit"], list) or len(d["unit"]) != dim:
        raise InputError("unit must be a list of dim scalars")
    unit = {k: parse_scalar(f, c) for k, c in enumerate(d["unit"])}
    table: dict = {}
    if not isinstance(d["mult"], list):
        raise InputError("mult must be a list of {i, j, k, c} entries")
    for entry in d["mult"]:
        if not isinstance(entry, Mapping) or set(entry) != {"i", "j", "k", "c"}:
            raise InputError(f"bad mult entry {entry!r}")
        i, j, k = entry["i"], entry["j"], entry["k"]
        if not all(isinstance(t, int) and not isinstance(t, bool) and 0 <= t < dim for t in (i, j, k)):
            raise InputError(f"mult entry index out of range: {entry!r}")
        vec = table.setdefault((i, j), {})
        if k in vec:
            raise InputError(f"duplicate mult entry ({i}, {j}, {k})")
        vec[k] = parse_scalar(f, entry["c"])
    a = Algebra(f, names, table, unit)
    if validate:
        rep = check_algebra(a)
        if not rep:
            raise InputError(f"not an associative unital algebra: {rep.failures[0]}")
    return a


# -- companion files -------------------------------------------------------------

def check_reference(doc: Mapping, key: str, expected: str, what: str) -> None:
    ref = doc.get(key)
    if ref != expected:
        raise InputError(f"{what} refers to {key} {ref!r}, which does not match the given file")


def embedding_to_list(emb: SubalgebraEmbedding) -> list[dict]:
    return [vector_to_dict(emb.ambient, emb.incl.col(j)) for j in range(emb.sub.dim)]


def parse_subring(a: Algebra, spec) -> SubalgebraEmbedding:
    """A list of spanning vectors (independent, closed, containing 1)."""
    if spec == "scalars":
        return scalar_subalgebra(a)
    if not isinstance(spec, list) or not spec:
        raise InputError("a subring is a non-empty list of vectors or 'scalars'")
    vecs = [parse_vector(a, v) for v in spec]
    try:
        return subalgebra(a, vecs)
    except ValueError as exc:
        raise InputError(f"not a subring: {exc}") from exc


def _matrices(f: Field, a: Algebra, dim: int, spec) -> list[Matrix]:
    if not isinstance(spec, Mapping) or set(spec) != set(a.names):
        raise InputError("action matrices must be given for every basis name")
    out = []
    for name in a.names:
        rows = spec[name]
        if not isinstance(rows, list) or len(rows) != dim or any(
                not isinstance(r, list) or len(r) != dim for r in rows):
            raise InputError(f"action of {name!r} must be a {dim} x {dim} matrix")
        out.append(Matrix.from_dense(f, [[parse_scalar(f, c) for c in r] for r in rows], dim))
    return out


def parse_module(a: Algebra, spec) -> ModuleRep:
    """Module descriptions used by pair files.

    ``{"kind": "regular", "side": "left" | "right" | "bi"}``,
    ``{"kind": "quotient", "ideal": [vectors]}`` (``A/I`` as a bimodule),
    ``{"kind": "character", "values": [scalars], "side": ...}`` or
    ``{"kind": "matrices", "dim": n, "left": {name: rows}, "right": {name: rows}}``.
    """
    if not isinstance(spec, Mapping) or "kind" not in spec:
        raise InputError("module description needs a 'kind'")
    kind = spec["kind"]
    side = spec.get("side", "bi")
    if side not in ("left", "right", "bi"):
        raise InputError(f"unknown side {side!r}")
    if kind == "regular":
        return {"left": regular_left, "right": regular_right, "bi": regular_bimodule}[side](a)
    if kind == "quotient":
        gens = [parse_vector(a, v) for v in spec.get("ideal", [])]
        return quotient_bimodule(a, two_sided_ideal(a, gens))
    if kind == "character":
        vals = spec.get("values")
        if not isinstance(vals, list) or len(vals) != a.dim:
            raise InputError("character values must list one scalar per basis element")
        return character_module(a, [parse_scalar(a.field, v) for v in vals], side)
    if kind == "matrices":
        dim = spec.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise InputError("module dim must be a positive integer")
        left = _matrices(a.field, a, dim, spec["left"]) if "left" in spec else None
        right = _matrices(a.field, a, dim, spec["right"]) if "right" in spec else None
        if left is None and right is None:
            raise InputError("module needs a left or a right action")
        return module_from_matrices(a.field, dim, a if left else None, left,
                                    a if right else None, right)
    raise InputError(f"unknown module kind {kind!r}")
