"""Built-in algebras used by the tests and the ``example`` command."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .algebra import (Algebra, Element, IdempotentPair, SubalgebraEmbedding,
                      subalgebra)
from .exactla import QQ, Field, Matrix

__all__ = [
    "Fixture", "TwistInput", "lu_example", "lu_example_factors", "two_cycle_zero_relation",
    "truncated_polynomial", "upper_triangular",
    "lower_triangular", "full_matrix", "diagonal", "matrix_units",
    "symmetric_group_table", "cyclic_group_table", "EXAMPLE_BASIS",
]

EXAMPLE_BASIS = ("e11", "x", "y", "xy", "w", "xw", "v", "vy", "vw", "e22")

# left and right vertex of each basis element (1 or 2)
_VERTEX = {
    "e11": (1, 1), "x": (1, 1), "y": (1, 1), "xy": (1, 1),
    "w": (1, 2), "xw": (1, 2), "v": (2, 1), "vy": (2, 1),
    "vw": (2, 2), "e22": (2, 2),
}


@dataclass(frozen=True)
class Fixture:
    """An algebra with a distinguished idempotent and subrings ``S``, ``L``, ``U``."""

    algebra: Algebra
    e: Element
    s: SubalgebraEmbedding
    l: SubalgebraEmbedding | None
    u: SubalgebraEmbedding | None

    @property
    def pair(self) -> IdempotentPair:
        return IdempotentPair.of(self.e)


def lu_example(field: Field = QQ) -> Fixture:
    """The 10-dimensional algebra ``L (x)_S U`` with ``y x = xy`` and ``w v = 0``."""
    prods: dict = {
        ("x", "y"): "xy", ("y", "x"): "xy", ("x", "w"): "xw",
        ("v", "y"): "vy", ("v", "w"): "vw",
    }
    for name, (lv, rv) in _VERTEX.items():
        left_idem = "e11" if lv == 1 else "e22"
        right_idem = "e11" if rv == 1 else "e22"
        prods[(left_idem, name)] = name
        prods[(name, right_idem)] = name
    a = Algebra.from_products(field, EXAMPLE_BASIS, prods, ["e11", "e22"])
    s = subalgebra(a, ["e11", "e22"])
    l = subalgebra(a, ["e11", "x", "v", "e22"])
    u = subalgebra(a, ["e11", "y", "w", "e22"])
    return Fixture(a, a["e11"], s, l, u)


@dataclass(frozen=True)
class TwistInput:
    """Standalone ``L``, ``U`` with their copies of ``S`` and the partial ``tau``."""

    s: Algebra
    l: Algebra
    u: Algebra
    s_l: SubalgebraEmbedding
    s_u: SubalgebraEmbedding
    tau: dict


def lu_example_factors(field: Field = QQ, tau_wv: dict | None = None) -> TwistInput:
    """The lower ring ``L`` (``K[x]/(x^2)`` at vertex 1, ``v`` from 1 to 2) and
    the upper ring ``U`` (``K[y]/(y^2)`` at vertex 1, ``w`` from 2 to 1) over
    ``S = K x K``, with ``tau(y (x) x) = x (x) y`` and ``tau(w (x) v) = tau_wv``
    (zero by default)."""
    s = Algebra.from_products(field, ["e11", "e22"],
                              {("e11", "e11"): "e11", ("e22", "e22"): "e22"}, ["e11", "e22"])
    l = Algebra.from_products(field, ["e11", "x", "v", "e22"], {
        ("e11", "e11"): "e11", ("e11", "x"): "x", ("x", "e11"): "x",
        ("e22", "v"): "v", ("v", "e11"): "v", ("e22", "e22"): "e22",
    }, ["e11", "e22"])
    u = Algebra.from_products(field, ["e11", "y", "w", "e22"], {
        ("e11", "e11"): "e11", ("e11", "y"): "y", ("y", "e11"): "y",
        ("e11", "w"): "w", ("w", "e22"): "w", ("e22", "e22"): "e22",
    }, ["e11", "e22"])
    s_l = SubalgebraEmbedding(s, l, _unit_columns(field, l, ["e11", "e22"]))
    s_u = SubalgebraEmbedding(s, u, _unit_columns(field, u, ["e11", "e22"]))
    tau = {("y", "x"): {("x", "y"): 1}, ("w", "v"): dict(tau_wv or {})}
    return TwistInput(s, l, u, s_l, s_u, tau)


def _unit_columns(field: Field, a: Algebra, names) -> Matrix:
    return Matrix(field, a.dim, len(names), [{a.index(n): field.one} for n in names])


def two_cycle_zero_relation(field: Field = QQ) -> Algebra:
    """Arrows ``a: 1 -> 2`` and ``b: 2 -> 1`` with ``a b = 0`` and ``b a != 0``."""
    return Algebra.from_products(field, ["e1", "e2", "a", "b", "ba"], {
        ("e1", "e1"): "e1", ("e2", "e2"): "e2",
        ("e1", "a"): "a", ("a", "e2"): "a", ("e2", "b"): "b", ("b", "e1"): "b",
        ("b", "a"): "ba", ("e2", "ba"): "ba", ("ba", "e2"): "ba",
    }, ["e1", "e2"])


def truncated_polynomial(n: int, field: Field = QQ, var: str = "x") -> Algebra:
    """``K[x]/(x^n)`` on the basis ``1, x, ..., x^(n-1)``."""
    names = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, n)]
    table = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    return Algebra(field, names, table, {0: 1})


def matrix_units(n: int, entries, field: Field = QQ) -> Algebra:
    """Span of the matrix units ``E_ij`` for ``(i, j)`` in ``entries`` (1-based)."""
    entries = sorted(set(entries))
    idx = {ij: k for k, ij in enumerate(entries)}
    names = [f"E{i}{j}" for i, j in entries]
    table = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                if (i, l) not in idx:
                    raise ValueError("entries are not closed under multiplication")
                table[(a, b)] = {idx[(i, l)]: 1}
    unit = {}
    for i in range(1, n + 1):
        if (i, i) not in idx:
            raise ValueError("diagonal units must be present")
        unit[idx[(i, i)]] = 1
    return Algebra(field, names, table, unit)


def upper_triangular(n: int, field: Field = QQ) -> Algebra:
    return matrix_units(n, [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)], field)


def lower_triangular(n: int, field: Field = QQ) -> Algebra:
    return matrix_units(n, [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)], field)


def full_matrix(n: int, field: Field = QQ) -> Algebra:
    return matrix_units(n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)], field)


def diagonal(n: int, field: Field = QQ) -> Algebra:
    return matrix_units(n, [(i, i) for i in range(1, n + 1)], field)


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(n: int = 3) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Elements of ``S_n`` (as tuples, identity first) and the Cayley table of
    composition ``(s t)(k) = s(t(k))``."""
    elems = sorted(permutations(range(n)))
    idx = {g: k for k, g in enumerate(elems)}
    table = [[idx[tuple(s[t[k]] for k in range(n))] for t in elems] for s in elems]
    return elems, table
