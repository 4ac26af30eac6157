"""Finite-dimensional unital associative algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactla import (QQ, Coordinates, Field, Matrix, QuotientSpace, Subspace,
                      axpy, vec_scale)
from .report import Report

__all__ = [
    "Algebra", "Element", "SubalgebraEmbedding", "AlgebraHom", "IdempotentPair",
    "Peirce", "AlgebraError", "check_algebra", "check_subalgebra", "multiply",
    "subalgebra", "generated_subalgebra", "scalar_subalgebra", "peirce", "is_upper_triangular",
    "is_lower_triangular", "is_diagonal", "two_sided_ideal", "left_ideal",
    "right_ideal", "quotient_algebra", "opposite_algebra", "group_algebra",
    "corner_algebra", "span_algebra", "ideal_product", "check_group",
    "opposite_embedding", "factor_embedding",
]


class AlgebraError(ValueError):
    """Malformed algebraic input (not an ideal, not idempotent, ...)."""


class Algebra:
    """Algebra with basis ``names`` and ``b_i b_j = sum_k table[i, j][k] b_k``.

    ``table`` maps ``(i, j)`` to a sparse coefficient dict; missing pairs
    multiply to zero. ``unit`` is the sparse coefficient vector of 1.
    """

    def __init__(self, field: Field, names: Sequence[str],
                 table: Mapping[tuple[int, int], Mapping[int, object]],
                 unit: Mapping[int, object]):
        self.field = field
        self.names = tuple(names)
        self.dim = len(self.names)
        if len(set(self.names)) != self.dim:
            raise AlgebraError("basis names must be distinct")
        self._table = {}
        for (i, j), vec in table.items():
            v = {k: field(c) for k, c in vec.items() if field(c)}
            if v:
                self._table[(i, j)] = v
        self.unit = {k: field(c) for k, c in unit.items() if field(c)}
        self._index = {n: i for i, n in enumerate(self.names)}
        self._left: dict[int, Matrix] = {}
        self._right: dict[int, Matrix] = {}
        self._opposite = None

    # construction helpers
    @classmethod
    def from_products(cls, field: Field, names: Sequence[str],
                      products: Mapping[tuple[str, str], Mapping[str, object] | str],
                      unit: Iterable[str] | Mapping[str, object]) -> "Algebra":
        """Build from named products, e.g. ``{("x", "y"): "xy"}`` or
        ``{("x", "x"): {"e": 2}}``."""
        idx = {n: i for i, n in enumerate(names)}
        table = {}
        for (a, b), val in products.items():
            if isinstance(val, str):
                val = {val: 1}
            table[(idx[a], idx[b])] = {idx[k]: c for k, c in val.items()}
        if not isinstance(unit, Mapping):
            unit = {u: 1 for u in unit}
        return cls(field, names, table, {idx[k]: c for k, c in unit.items()})

    @classmethod
    def from_constants(cls, field: Field, names, constants, unit) -> "Algebra":
        table = {}
        for i, row in enumerate(constants):
            for j, vec in enumerate(row):
                table[(i, j)] = {k: c for k, c in enumerate(vec) if c}
        return cls(field, names, table, {k: c for k, c in enumerate(unit) if c})

    # basic access
    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"no basis element named {name!r}") from None

    def product(self, i: int, j: int) -> dict:
        return self._table.get((i, j), {})

    def mul(self, u: Mapping, v: Mapping) -> dict:
        p = self.field.p
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                prod = self._table.get((i, j))
                if prod:
                    axpy(out, x * y, prod, p)
        return out

    def left_matrix(self, i: int) -> Matrix:
        """Matrix of ``x -> b_i x``."""
        m = self._left.get(i)
        if m is None:
            m = Matrix(self.field, self.dim, self.dim,
                       [dict(self.product(i, j)) for j in range(self.dim)])
            self._left[i] = m
        return m

    def right_matrix(self, i: int) -> Matrix:
        """Matrix of ``x -> x b_i``."""
        m = self._right.get(i)
        if m is None:
            m = Matrix(self.field, self.dim, self.dim,
                       [dict(self.product(j, i)) for j in range(self.dim)])
            self._right[i] = m
        return m

    def left_mult(self, u: Mapping) -> Matrix:
        return Matrix.lazy(self.field, self.dim, self.dim,
                           lambda j: self.mul(u, {j: self.field.one}))

    def right_mult(self, u: Mapping) -> Matrix:
        return Matrix.lazy(self.field, self.dim, self.dim,
                           lambda j: self.mul({j: self.field.one}, u))

    def element(self, coeffs: Mapping | Sequence | str | None = None) -> "Element":
        if coeffs is None:
            return Element(self, {})
        if isinstance(coeffs, str):
            return Element(self, {self.index(coeffs): self.field.one})
        if isinstance(coeffs, Mapping):
            vec = {}
            for k, c in coeffs.items():
                i = self.index(k) if isinstance(k, str) else int(k)
                x = self.field(c)
                if x:
                    vec[i] = x
            return Element(self, vec)
        coeffs = list(coeffs)
        if len(coeffs) != self.dim:
            raise AlgebraError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return Element(self, {i: self.field(c) for i, c in enumerate(coeffs) if self.field(c)})

    def __getitem__(self, name: str) -> "Element":
        return self.element(name)

    @property
    def one(self) -> "Element":
        return Element(self, dict(self.unit))

    @property
    def zero(self) -> "Element":
        return Element(self, {})

    def basis(self) -> list["Element"]:
        return [Element(self, {i: self.field.one}) for i in range(self.dim)]

    def structure_constants(self) -> list[list[list]]:
        z = self.field.zero
        out = [[[z] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), vec in self._table.items():
            for k, c in vec.items():
                out[i][j][k] = c
        return out

    def table_items(self):
        return self._table.items()

    def permuted(self, order: Sequence[str]) -> "Algebra":
        """Same algebra with its basis listed in ``order``."""
        if sorted(order) != sorted(self.names):
            raise AlgebraError("order must be a permutation of the basis names")
        new = {self.index(n): i for i, n in enumerate(order)}
        table = {(new[i], new[j]): {new[k]: c for k, c in vec.items()}
                 for (i, j), vec in self._table.items()}
        return Algebra(self.field, order, table, {new[k]: c for k, c in self.unit.items()})

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field == other.field and self.names == other.names
                and self._table == other._table and self.unit == other.unit)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Algebra(dim={self.dim}, basis={list(self.names)}, field={self.field!r})"


class Element:
    """An element of an :class:`Algebra`, as sparse coefficients."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra: Algebra, vec: Mapping):
        self.algebra = algebra
        self.vec = dict(vec)

    @property
    def coeffs(self) -> list:
        z = self.algebra.field.zero
        return [self.vec.get(i, z) for i in range(self.algebra.dim)]

    def _check(self, other: "Element"):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, axpy(dict(self.vec), 1, other.vec, self.algebra.field.p))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, axpy(dict(self.vec), -1, other.vec, self.algebra.field.p))

    def __neg__(self):
        return Element(self.algebra, vec_scale(self.vec, -1, self.algebra.field.p))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        f = self.algebra.field
        return Element(self.algebra, vec_scale(self.vec, f(other), f.p))

    def __rmul__(self, scalar):
        f = self.algebra.field
        return Element(self.algebra, vec_scale(self.vec, f(scalar), f.p))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return other.algebra is self.algebra and other.vec == self.vec

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.vec

    def __repr__(self):
        if not self.vec:
            return "0"
        f = self.algebra.field
        parts = []
        for i in sorted(self.vec):
            c = f.format(self.vec[i])
            name = self.algebra.names[i]
            parts.append(name if c in ("1/1", "1") else f"{c}*{name}")
        return " + ".join(parts)


def multiply(x: Element, y: Element) -> Element:
    """Bilinear product through the structure constants."""
    x._check(y)
    return Element(x.algebra, x.algebra.mul(x.vec, y.vec))


def _as_vec(a: Algebra, x) -> dict:
    if isinstance(x, Element):
        if x.algebra is not a:
            raise AlgebraError("element belongs to a different algebra")
        return x.vec
    if isinstance(x, str):
        return {a.index(x): a.field.one}
    return dict(x)


def check_algebra(a: Algebra) -> Report:
    """Exhaustive associativity and unit scan over basis triples."""
    rep = Report("algebra")
    one = a.field.one
    for i in range(a.dim):
        ei = {i: one}
        if a.mul(a.unit, ei) != ei:
            rep.fail(f"unit: 1*{a.names[i]} != {a.names[i]}")
        if a.mul(ei, a.unit) != ei:
            rep.fail(f"unit: {a.names[i]}*1 != {a.names[i]}")
    witnesses = []
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.product(i, j)
            for k in range(a.dim):
                left = a.mul(ij, {k: one})
                right = a.mul({i: one}, a.product(j, k))
                if left != right:
                    triple = (a.names[i], a.names[j], a.names[k])
                    witnesses.append(triple)
                    rep.fail("associativity: ({0}*{1})*{2} != {0}*({1}*{2})".format(*triple))
    rep.details["dim"] = a.dim
    if witnesses:
        rep.details["associativity_witnesses"] = [list(t) for t in witnesses]
    return rep


def span_algebra(a: Algebra, vectors: Sequence[Mapping], unit: Mapping,
                 names: Sequence[str] | None = None) -> tuple[Algebra, Matrix]:
    """Algebra structure on the span of ``vectors`` (closed under ``a``'s
    product), with identity ``unit``. Returns the algebra and its inclusion."""
    vectors = [dict(v) for v in vectors]
    coords = Coordinates(a.field, a.dim, vectors)
    if names is None:
        names = [_vector_name(a, v) for v in vectors]
    table = {}
    for i, u in enumerate(vectors):
        for j, v in enumerate(vectors):
            c = coords(a.mul(u, v))
            if c is None:
                raise AlgebraError(f"span not closed: {names[i]}*{names[j]} lies outside")
            if c:
                table[(i, j)] = c
    uc = coords(dict(unit))
    if uc is None:
        raise AlgebraError("unit does not lie in the span")
    sub = Algebra(a.field, names, table, uc)
    return sub, Matrix(a.field, a.dim, len(vectors), vectors)


def _vector_name(a: Algebra, v: Mapping) -> str:
    if len(v) == 1:
        (i, c), = v.items()
        if c == a.field.one:
            return a.names[i]
    return repr(Element(a, v))


@dataclass(frozen=True)
class SubalgebraEmbedding:
    """Injective unital ring map ``sub -> ambient`` (a relative pair)."""

    sub: Algebra
    ambient: Algebra
    incl: Matrix

    def image(self, x) -> dict:
        if isinstance(x, Element):
            x = x.vec
        return self.incl.apply(dict(x))

    def image_space(self) -> Subspace:
        return Subspace.image(self.incl)

    def pullback(self, v) -> dict | None:
        """Sub-coordinates of an ambient vector lying in the image."""
        v = _as_vec(self.ambient, v)
        return _coords_of(self)(v)

    def compose(self, outer: "SubalgebraEmbedding") -> "SubalgebraEmbedding":
        """``self.sub -> self.ambient = outer.sub -> outer.ambient``."""
        return SubalgebraEmbedding(self.sub, outer.ambient, outer.incl @ self.incl)

    def __repr__(self):
        return f"SubalgebraEmbedding({self.sub.dim} -> {self.ambient.dim})"


_COORD_CACHE: dict[int, Coordinates] = {}


def _coords_of(emb: SubalgebraEmbedding) -> Coordinates:
    key = id(emb)
    c = _COORD_CACHE.get(key)
    if c is None or c.vectors != emb.incl.cols:
        c = Coordinates(emb.ambient.field, emb.ambient.dim, emb.incl.cols)
        _COORD_CACHE[key] = c
    return c


def subalgebra(ambient: Algebra, elements: Sequence, names: Sequence[str] | None = None
               ) -> SubalgebraEmbedding:
    """Subring spanned by ``elements`` (which must be independent, closed
    under multiplication and contain 1)."""
    vecs = [_as_vec(ambient, x) for x in elements]
    sub, incl = span_algebra(ambient, vecs, ambient.unit, names)
    return SubalgebraEmbedding(sub, ambient, incl)


def generated_subalgebra(ambient: Algebra, gens: Iterable,
                         names: Sequence[str] | None = None) -> SubalgebraEmbedding:
    """Smallest unital subring containing ``gens`` (basis in RREF order)."""
    f = ambient.field
    space = Subspace.span(f, ambient.dim, [dict(ambient.unit)] + [_as_vec(ambient, g) for g in gens])
    while True:
        prods = [ambient.mul(u, v) for u in space.rows for v in space.rows]
        bigger = Subspace.span(f, ambient.dim, list(space.rows) + prods)
        if bigger.dim == space.dim:
            break
        space = bigger
    sub, incl = span_algebra(ambient, space.rows, ambient.unit, names)
    return SubalgebraEmbedding(sub, ambient, incl)


def scalar_subalgebra(a: Algebra) -> SubalgebraEmbedding:
    """The copy of the ground field spanned by 1."""
    k = Algebra(a.field, ["1"], {(0, 0): {0: 1}}, {0: 1})
    return SubalgebraEmbedding(k, a, Matrix(a.field, a.dim, 1, [dict(a.unit)]))


def check_subalgebra(emb: SubalgebraEmbedding) -> Report:
    rep = Report("subalgebra")
    sub, amb = emb.sub, emb.ambient
    if emb.incl.shape != (amb.dim, sub.dim):
        rep.fail(f"inclusion has shape {emb.incl.shape}, expected {(amb.dim, sub.dim)}")
        return rep
    if emb.incl.rank() != sub.dim:
        rep.fail("inclusion is not injective")
    if emb.image(sub.unit) != amb.unit:
        rep.fail("unit not in image: incl(1_sub) != 1")
    for i in range(sub.dim):
        for j in range(sub.dim):
            lhs = emb.image(sub.product(i, j))
            rhs = amb.mul(emb.incl.col(i), emb.incl.col(j))
            if lhs != rhs:
                rep.fail(f"not multiplicative on ({sub.names[i]}, {sub.names[j]})")
    img = emb.image_space()
    for i in range(sub.dim):
        for j in range(sub.dim):
            if not img.contains(amb.mul(emb.incl.col(i), emb.incl.col(j))):
                rep.fail(f"image not closed: {sub.names[i]}*{sub.names[j]}")
    return rep


@dataclass(frozen=True)
class AlgebraHom:
    """Linear map ``source -> target`` meant to be a unital ring map."""

    source: Algebra
    target: Algebra
    mat: Matrix

    def __call__(self, x) -> dict:
        return self.mat.apply(_as_vec(self.source, x))

    def check(self) -> Report:
        rep = Report("algebra homomorphism")
        if self.mat.shape != (self.target.dim, self.source.dim):
            rep.fail("matrix shape does not match the algebras")
            return rep
        if self(self.source.unit) != self.target.unit:
            rep.fail("does not preserve the unit")
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                if self(self.source.product(i, j)) != self.target.mul(self.mat.col(i), self.mat.col(j)):
                    rep.fail(f"not multiplicative on ({self.source.names[i]}, {self.source.names[j]})")
        return rep


@dataclass(frozen=True)
class IdempotentPair:
    """An idempotent ``e`` together with its complement ``ebar = 1 - e``."""

    e: Element
    ebar: Element

    @classmethod
    def of(cls, e) -> "IdempotentPair":
        if not isinstance(e, Element):
            raise AlgebraError("expected an algebra element")
        a = e.algebra
        if multiply(e, e) != e:
            raise AlgebraError(f"{e!r} is not idempotent")
        return cls(e, a.one - e)

    @property
    def algebra(self) -> Algebra:
        return self.e.algebra


def _idem(e) -> IdempotentPair:
    return e if isinstance(e, IdempotentPair) else IdempotentPair.of(e)


@dataclass(frozen=True)
class Peirce:
    """Peirce blocks ``eBe, eBebar, ebarBe, ebarBebar`` (in B's coordinates)."""

    ee: Subspace
    e_ebar: Subspace
    ebar_e: Subspace
    ebar_ebar: Subspace

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.ee.dim, self.e_ebar.dim, self.ebar_e.dim, self.ebar_ebar.dim)


def _localize(b, e) -> tuple[Algebra, dict]:
    """Resolve ``b`` (algebra or embedded subring) and ``e`` to B's coordinates."""
    e = e.e if isinstance(e, IdempotentPair) else e
    if isinstance(b, SubalgebraEmbedding):
        vec = _as_vec(b.ambient, e) if isinstance(e, (Element, str)) and (
            not isinstance(e, Element) or e.algebra is b.ambient) else None
        if vec is None:
            return b.sub, _as_vec(b.sub, e)
        local = b.pullback(vec)
        if local is None:
            raise AlgebraError("idempotent does not lie in the subring")
        return b.sub, local
    return b, _as_vec(b, e)


def peirce(b, e) -> Peirce:
    """Peirce decomposition of ``b`` with respect to the idempotent ``e``."""
    alg, ev = _localize(b, e)
    if alg.mul(ev, ev) != ev:
        raise AlgebraError("not an idempotent")
    p = alg.field.p
    ebar = axpy(dict(alg.unit), -1, ev, p)
    one = alg.field.one

    def block(left, right):
        vecs = [alg.mul(alg.mul(left, {j: one}), right) for j in range(alg.dim)]
        return Subspace.span(alg.field, alg.dim, vecs)

    return Peirce(block(ev, ev), block(ev, ebar), block(ebar, ev), block(ebar, ebar))


def is_upper_triangular(b, e) -> bool:
    """``ebar B e == 0``."""
    return peirce(b, e).ebar_e.dim == 0


def is_lower_triangular(b, e) -> bool:
    """``e B ebar == 0``."""
    return peirce(b, e).e_ebar.dim == 0


def is_diagonal(b, e) -> bool:
    pc = peirce(b, e)
    return pc.e_ebar.dim == 0 and pc.ebar_e.dim == 0


def _check_ideal_closure(a: Algebra, ideal: Subspace, left=True, right=True) -> list[str]:
    bad = []
    one = a.field.one
    for v in ideal.rows:
        for i in range(a.dim):
            if left and not ideal.contains(a.mul({i: one}, v)):
                bad.append(f"{a.names[i]} * I not in I")
            if right and not ideal.contains(a.mul(v, {i: one})):
                bad.append(f"I * {a.names[i]} not in I")
    return bad


def two_sided_ideal(a: Algebra, gens: Iterable) -> Subspace:
    """``A g A`` summed over generators: span of ``b_i g b_j``."""
    one = a.field.one
    vecs = []
    for g in gens:
        gv = _as_vec(a, g)
        for j in range(a.dim):
            gb = a.mul(gv, {j: one})
            if not gb:
                continue
            for i in range(a.dim):
                vecs.append(a.mul({i: one}, gb))
    ideal = Subspace.span(a.field, a.dim, vecs)
    bad = _check_ideal_closure(a, ideal)
    if bad:
        raise AssertionError(f"generated ideal not closed: {bad[0]}")
    return ideal


def left_ideal(a: Algebra, gens: Iterable) -> Subspace:
    """``A g``: span of ``b_i g``."""
    one = a.field.one
    vecs = [a.mul({i: one}, _as_vec(a, g)) for g in gens for i in range(a.dim)]
    return Subspace.span(a.field, a.dim, vecs)


def right_ideal(a: Algebra, gens: Iterable) -> Subspace:
    """``g A``: span of ``g b_i``."""
    one = a.field.one
    vecs = [a.mul(_as_vec(a, g), {i: one}) for g in gens for i in range(a.dim)]
    return Subspace.span(a.field, a.dim, vecs)


def ideal_product(a: Algebra, left: Subspace, mid, right: Subspace) -> Subspace:
    """Span of ``l * mid * r`` for ``l`` in ``left`` and ``r`` in ``right``."""
    mv = _as_vec(a, mid)
    vecs = []
    for l in left.rows:
        lm = a.mul(l, mv)
        if lm:
            vecs.extend(a.mul(lm, r) for r in right.rows)
    return Subspace.span(a.field, a.dim, vecs)


def quotient_algebra(a: Algebra, ideal: Subspace) -> tuple[Algebra, Matrix]:
    """``A / ideal`` on the canonical complement coordinates, with projection."""
    bad = _check_ideal_closure(a, ideal)
    if bad:
        raise AlgebraError(f"not a two-sided ideal: {bad[0]}")
    q = QuotientSpace(a.dim, ideal)
    names = [a.names[j] for j in q.complement]
    table = {}
    for r, i in enumerate(q.complement):
        for s, j in enumerate(q.complement):
            v = q.project(a.product(i, j))
            if v:
                table[(r, s)] = v
    quo = Algebra(a.field, names, table, q.project(a.unit))
    return quo, q.projection


def opposite_algebra(a: Algebra) -> Algebra:
    """``A^op``; cached so that ``opposite_algebra(opposite_algebra(a)) is a``."""
    op = getattr(a, "_opposite", None)
    if op is None:
        table = {(j, i): vec for (i, j), vec in a.table_items()}
        op = Algebra(a.field, a.names, table, a.unit)
        op._opposite = a
        a._opposite = op
    return op


def opposite_embedding(emb: SubalgebraEmbedding) -> SubalgebraEmbedding:
    """``S^op -> A^op`` with the same inclusion matrix."""
    return SubalgebraEmbedding(opposite_algebra(emb.sub), opposite_algebra(emb.ambient), emb.incl)


def factor_embedding(inner: SubalgebraEmbedding, outer: SubalgebraEmbedding) -> SubalgebraEmbedding:
    """Given ``S -> A`` and ``L -> A`` with ``S`` inside ``L``, the embedding ``S -> L``."""
    if inner.ambient is not outer.ambient:
        raise AlgebraError("embeddings have different ambient algebras")
    cols = []
    for j in range(inner.sub.dim):
        c = outer.pullback(inner.incl.col(j))
        if c is None:
            raise AlgebraError(f"{inner.sub.names[j]} does not lie in the larger subring")
        cols.append(c)
    return SubalgebraEmbedding(inner.sub, outer.sub,
                               Matrix(inner.ambient.field, outer.sub.dim, inner.sub.dim, cols))


def corner_algebra(a: Algebra, f) -> tuple[Algebra, Matrix]:
    """The ring ``f A f`` with identity ``f`` and its (non-unital) inclusion."""
    fv = _as_vec(a, f)
    if a.mul(fv, fv) != fv:
        raise AlgebraError("not an idempotent")
    one = a.field.one
    block = Subspace.span(a.field, a.dim,
                          [a.mul(a.mul(fv, {j: one}), fv) for j in range(a.dim)])
    return span_algebra(a, block.vectors(), fv)


def check_group(table: Sequence[Sequence[int]]) -> int:
    """Validate a Cayley table; returns the index of the identity."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise AlgebraError("Cayley table must be a non-empty square")
    if any(not (0 <= x < n) for row in table for x in row):
        raise AlgebraError("Cayley table entries out of range")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise AlgebraError(f"not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not ids:
        raise AlgebraError("no identity element")
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e == table[b][a] for b in range(n)):
            raise AlgebraError(f"element {a} has no inverse")
    return e


def group_algebra(table: Sequence[Sequence[int]], field: Field = QQ,
                  names: Sequence[str] | None = None) -> Algebra:
    """Group algebra ``K G`` with basis the group elements."""
    e = check_group(table)
    n = len(table)
    names = list(names) if names is not None else [f"g{i}" for i in range(n)]
    prods = {(i, j): {table[i][j]: 1} for i in range(n) for j in range(n)}
    return Algebra(field, names, prods, {e: 1})
