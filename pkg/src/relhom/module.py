"""Modules given by action maps, tensor products over subrings, relative projectivity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import (Algebra, AlgebraError, AlgebraHom, SubalgebraEmbedding,
                      scalar_subalgebra)
from .exactla import (Field, Matrix, QuotientSpace, Subspace, axpy,
                      kernel_basis, solve_linear)
from .report import Report

__all__ = [
    "ModuleRep", "ModuleHom", "TensorProduct", "ModuleError", "Induced",
    "ProjectivityResult", "regular_left", "regular_right", "regular_bimodule",
    "module_from_matrices", "character_module", "check_module", "restrict",
    "submodule", "quotient_module", "tensor_over", "tensor_map",
    "free_relative_module", "is_relative_projective", "is_projective",
    "base_change", "hom_space", "has_idempotent_basis", "opposite_module",
]


class ModuleError(ValueError):
    """Side or algebra mismatch between modules."""


@dataclass(frozen=True)
class Induced:
    """Records that a module is ``A (x)_S Y`` realized by ``tensor``."""

    emb: SubalgebraEmbedding
    tensor: "TensorProduct"


class ModuleRep:
    """A left, right or bimodule of finite dimension.

    Actions are given per basis element by ``left_fn(i, j) = b_i * m_j`` and
    ``right_fn(j, i) = m_j * b_i``; results are cached, so very large induced
    modules are only evaluated where they are touched.
    """

    def __init__(self, field: Field, dim: int, left: Algebra | None = None,
                 right: Algebra | None = None,
                 left_fn: Callable[[int, int], dict] | None = None,
                 right_fn: Callable[[int, int], dict] | None = None,
                 name: str = "", induced: Induced | None = None):
        if (left is None) != (left_fn is None) or (right is None) != (right_fn is None):
            raise ModuleError("each acting algebra needs an action function")
        self.field = field
        self.dim = dim
        self.left = left
        self.right = right
        self._lf = left_fn
        self._rf = right_fn
        self._lc: dict = {}
        self._rc: dict = {}
        self.name = name
        self.induced = induced

    @property
    def side(self) -> str:
        if self.left is not None and self.right is not None:
            return "bimodule"
        if self.left is not None:
            return "left"
        if self.right is not None:
            return "right"
        return "vector space"

    def lcol(self, i: int, j: int) -> dict:
        key = (i, j)
        v = self._lc.get(key)
        if v is None:
            v = self._lf(i, j)
            self._lc[key] = v
        return v

    def rcol(self, j: int, i: int) -> dict:
        key = (j, i)
        v = self._rc.get(key)
        if v is None:
            v = self._rf(j, i)
            self._rc[key] = v
        return v

    def act_left(self, a: dict, m: dict) -> dict:
        p = self.field.p
        out: dict = {}
        for i, x in a.items():
            for j, y in m.items():
                axpy(out, x * y, self.lcol(i, j), p)
        return out

    def act_right(self, m: dict, a: dict) -> dict:
        p = self.field.p
        out: dict = {}
        for j, y in m.items():
            for i, x in a.items():
                axpy(out, x * y, self.rcol(j, i), p)
        return out

    def left_matrix(self, i: int) -> Matrix:
        return Matrix.lazy(self.field, self.dim, self.dim, lambda j: self.lcol(i, j))

    def right_matrix(self, i: int) -> Matrix:
        return Matrix.lazy(self.field, self.dim, self.dim, lambda j: self.rcol(j, i))

    def left_matrix_of(self, a: dict) -> Matrix:
        one = self.field.one
        return Matrix.lazy(self.field, self.dim, self.dim, lambda j: self.act_left(a, {j: one}))

    def right_matrix_of(self, a: dict) -> Matrix:
        one = self.field.one
        return Matrix.lazy(self.field, self.dim, self.dim, lambda j: self.act_right({j: one}, a))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"ModuleRep({self.side}{label}, dim={self.dim})"


def module_from_matrices(field: Field, dim: int, left: Algebra | None = None,
                         left_mats: Sequence[Matrix] | None = None,
                         right: Algebra | None = None,
                         right_mats: Sequence[Matrix] | None = None,
                         name: str = "") -> ModuleRep:
    """Module with ``rho(b_i)`` given as matrices (columns are images of basis vectors)."""
    for alg, mats in ((left, left_mats), (right, right_mats)):
        if alg is not None:
            if mats is None or len(mats) != alg.dim:
                raise ModuleError("need one action matrix per basis element")
            if any(m.shape != (dim, dim) for m in mats):
                raise ModuleError("action matrices must be dim x dim")
    lf = (lambda i, j: dict(left_mats[i].col(j))) if left is not None else None
    rf = (lambda j, i: dict(right_mats[i].col(j))) if right is not None else None
    return ModuleRep(field, dim, left, right, lf, rf, name=name)


def regular_left(a: Algebra) -> ModuleRep:
    return ModuleRep(a.field, a.dim, left=a, left_fn=lambda i, j: dict(a.product(i, j)),
                     name="A")


def regular_right(a: Algebra) -> ModuleRep:
    return ModuleRep(a.field, a.dim, right=a, right_fn=lambda j, i: dict(a.product(j, i)),
                     name="A")


def regular_bimodule(a: Algebra) -> ModuleRep:
    return ModuleRep(a.field, a.dim, left=a, right=a,
                     left_fn=lambda i, j: dict(a.product(i, j)),
                     right_fn=lambda j, i: dict(a.product(j, i)), name="A")


def character_module(a: Algebra, values: Sequence, side: str = "left", name: str = "") -> ModuleRep:
    """One-dimensional module where ``b_i`` acts by the scalar ``values[i]``."""
    f = a.field
    vals = [f(v) for v in values]
    if len(vals) != a.dim:
        raise ModuleError("need one scalar per basis element")

    def fn(i, j):
        return {0: vals[i]} if vals[i] else {}

    if side == "left":
        return ModuleRep(f, 1, left=a, left_fn=fn, name=name)
    if side == "right":
        return ModuleRep(f, 1, right=a, right_fn=lambda j, i: fn(i, j), name=name)
    return ModuleRep(f, 1, left=a, right=a, left_fn=fn, right_fn=lambda j, i: fn(i, j), name=name)


def opposite_module(m: ModuleRep, left_op: Algebra | None = None,
                    right_op: Algebra | None = None) -> ModuleRep:
    """Swap sides: a right ``A``-module becomes a left ``A^op``-module."""
    new_left = right_op if m.right is not None else None
    new_right = left_op if m.left is not None else None
    if m.right is not None and new_left is None:
        raise ModuleError("need the opposite of the right acting algebra")
    if m.left is not None and new_right is None:
        raise ModuleError("need the opposite of the left acting algebra")
    lf = (lambda i, j: m.rcol(j, i)) if new_left is not None else None
    rf = (lambda j, i: m.lcol(i, j)) if new_right is not None else None
    return ModuleRep(m.field, m.dim, new_left, new_right, lf, rf, name=m.name)


def check_module(m: ModuleRep) -> Report:
    """Exhaustive check of the module axioms over basis pairs."""
    rep = Report(f"module {m.name}".strip())
    one = m.field.one
    if m.left is not None:
        a = m.left
        for j in range(m.dim):
            if m.act_left(a.unit, {j: one}) != {j: one}:
                rep.fail(f"left: 1 does not act as identity on basis vector {j}")
                break
        for i in range(a.dim):
            for k in range(a.dim):
                prod = a.product(i, k)
                for j in range(m.dim):
                    lhs = m.act_left({i: one}, m.lcol(k, j))
                    if lhs != m.act_left(prod, {j: one}):
                        rep.fail(f"left: ({a.names[i]}*{a.names[k]}).m{j} != "
                                 f"{a.names[i]}.({a.names[k]}.m{j})")
                        break
    if m.right is not None:
        a = m.right
        for j in range(m.dim):
            if m.act_right({j: one}, a.unit) != {j: one}:
                rep.fail(f"right: 1 does not act as identity on basis vector {j}")
                break
        for i in range(a.dim):
            for k in range(a.dim):
                prod = a.product(i, k)
                for j in range(m.dim):
                    if m.act_right(m.rcol(j, i), {k: one}) != m.act_right({j: one}, prod):
                        rep.fail(f"right: m{j}.({a.names[i]}*{a.names[k]}) != "
                                 f"(m{j}.{a.names[i]}).{a.names[k]}")
                        break
    if m.left is not None and m.right is not None:
        for i in range(m.left.dim):
            for k in range(m.right.dim):
                for j in range(m.dim):
                    if m.act_right(m.lcol(i, j), {k: one}) != m.act_left({i: one}, m.rcol(j, k)):
                        rep.fail(f"actions do not commute: ({m.left.names[i]}.m{j}).{m.right.names[k]}")
                        break
    rep.details["dim"] = m.dim
    rep.details["side"] = m.side
    return rep


@dataclass(frozen=True)
class ModuleHom:
    """Linear map between modules over the same algebras."""

    source: ModuleRep
    target: ModuleRep
    mat: Matrix

    def __call__(self, v: dict) -> dict:
        return self.mat.apply(v)

    def check(self) -> Report:
        rep = Report("module homomorphism")
        s, t = self.source, self.target
        if self.mat.shape != (t.dim, s.dim):
            rep.fail(f"matrix shape {self.mat.shape} does not match ({t.dim}, {s.dim})")
            return rep
        one = s.field.one
        if s.left is not None:
            if t.left is not s.left:
                rep.fail("left algebras differ")
                return rep
            for i in range(s.left.dim):
                for j in range(s.dim):
                    if self.mat.apply(s.lcol(i, j)) != t.act_left({i: one}, self.mat.col(j)):
                        rep.fail(f"not left-linear at ({s.left.names[i]}, {j})")
                        break
        if s.right is not None:
            if t.right is not s.right:
                rep.fail("right algebras differ")
                return rep
            for i in range(s.right.dim):
                for j in range(s.dim):
                    if self.mat.apply(s.rcol(j, i)) != t.act_right(self.mat.col(j), {i: one}):
                        rep.fail(f"not right-linear at ({j}, {s.right.names[i]})")
                        break
        return rep


def restrict(m: ModuleRep, emb: SubalgebraEmbedding, side: str = "auto") -> ModuleRep:
    """Restrict the action(s) of ``emb.ambient`` on ``m`` to ``emb.sub``."""
    amb = emb.ambient
    do_left = m.left is amb and side in ("auto", "left", "both")
    do_right = m.right is amb and side in ("auto", "right", "both")
    if not (do_left or do_right):
        raise ModuleError("module is not acted on by the ambient algebra on that side")
    one = m.field.one
    inc = emb.incl
    left = emb.sub if do_left else m.left
    right = emb.sub if do_right else m.right
    lf = rf = None
    if left is not None:
        lf = (lambda i, j: m.act_left(inc.col(i), {j: one})) if do_left else m.lcol
    if right is not None:
        rf = (lambda j, i: m.act_right({j: one}, inc.col(i))) if do_right else m.rcol
    return ModuleRep(m.field, m.dim, left, right, lf, rf, name=m.name)


def _closure_failures(m: ModuleRep, sub: Subspace) -> list[str]:
    one = m.field.one
    bad = []
    for v in sub.rows:
        if m.left is not None:
            for i in range(m.left.dim):
                if not sub.contains(m.act_left({i: one}, v)):
                    bad.append(f"{m.left.names[i]} . N not in N")
        if m.right is not None:
            for i in range(m.right.dim):
                if not sub.contains(m.act_right(v, {i: one})):
                    bad.append(f"N . {m.right.names[i]} not in N")
    return bad


def submodule(m: ModuleRep, sub: Subspace, name: str = "") -> tuple[ModuleRep, Matrix]:
    """Submodule on the RREF basis of ``sub`` and its inclusion matrix."""
    bad = _closure_failures(m, sub)
    if bad:
        raise ModuleError(f"not a submodule: {bad[0]}")
    one = m.field.one
    rows = sub.rows

    def coords(v):
        return sub.coordinates(v)

    lf = (lambda i, j: coords(m.act_left({i: one}, rows[j]))) if m.left is not None else None
    rf = (lambda j, i: coords(m.act_right(rows[j], {i: one}))) if m.right is not None else None
    out = ModuleRep(m.field, sub.dim, m.left, m.right, lf, rf, name=name)
    return out, Matrix(m.field, m.dim, sub.dim, [dict(r) for r in rows])


def quotient_module(m: ModuleRep, sub: Subspace, name: str = "") -> tuple[ModuleRep, Matrix]:
    """``m / sub`` on the complement coordinates and its projection matrix."""
    bad = _closure_failures(m, sub)
    if bad:
        raise ModuleError(f"not a submodule: {bad[0]}")
    q = QuotientSpace(m.dim, sub)
    lf = (lambda i, j: q.project(m.lcol(i, q.lift(j)))) if m.left is not None else None
    rf = (lambda j, i: q.project(m.rcol(q.lift(j), i))) if m.right is not None else None
    out = ModuleRep(m.field, q.dim, m.left, m.right, lf, rf, name=name)
    return out, q.projection


# -- tensor products -------------------------------------------------------------

def has_idempotent_basis(s: Algebra) -> bool:
    """True when the basis of ``s`` consists of orthogonal idempotents summing to 1."""
    one = s.field.one
    for i in range(s.dim):
        for j in range(s.dim):
            want = {i: one} if i == j else {}
            if s.product(i, j) != want:
                return False
    return s.unit == {i: one for i in range(s.dim)}


def _right_s(m: ModuleRep, emb: SubalgebraEmbedding | None, over: Algebra):
    """Function ``(x, s_index) -> x * s`` for the right action of ``over``."""
    one = m.field.one
    if m.right is over:
        return lambda x, i: m.act_right(x, {i: one})
    if emb is not None and m.right is emb.ambient:
        inc = emb.incl
        return lambda x, i: m.act_right(x, inc.col(i))
    raise ModuleError("first factor must be a right module over the tensor ring")


def _left_s(m: ModuleRep, emb: SubalgebraEmbedding | None, over: Algebra):
    one = m.field.one
    if m.left is over:
        return lambda i, y: m.act_left({i: one}, y)
    if emb is not None and m.left is emb.ambient:
        inc = emb.incl
        return lambda i, y: m.act_left(inc.col(i), y)
    raise ModuleError("second factor must be a left module over the tensor ring")


class TensorProduct:
    """``X (x)_R Y`` with an explicit basis.

    Every realization offers ``pure(x, y)`` (coordinates of ``x (x) y``) and
    ``lift(k)`` (basis vector ``k`` as a sum of pure tensors). ``module``
    carries the outer actions: the left action on ``X`` and the right action
    on ``Y``.
    """

    def __init__(self, x: ModuleRep, y: ModuleRep, ring: Algebra,
                 emb: SubalgebraEmbedding | None, method: str = "auto"):
        if x.field != y.field:
            raise ModuleError("factors live over different fields")
        self.x, self.y, self.ring, self.emb = x, y, ring, emb
        self.field = x.field
        self._xs = _right_s(x, emb, ring)
        self._ys = _left_s(y, emb, ring)
        if method == "auto":
            if emb is None and y.induced is not None and y.induced.emb.ambient is ring:
                method = "collapse"
            elif has_idempotent_basis(ring):
                method = "idempotent"
            else:
                method = "generic"
        self.method = method
        if method == "generic":
            self._init_generic()
        elif method == "idempotent":
            if not has_idempotent_basis(ring):
                raise ModuleError("idempotent realization needs an idempotent basis")
            self._init_idempotent()
        elif method == "collapse":
            if y.induced is None or y.induced.emb.ambient is not ring:
                raise ModuleError("collapse needs an induced second factor over the ring")
            self._init_collapse()
        else:
            raise ValueError(f"unknown tensor method {method!r}")
        self._module = None

    # generic: quotient of X (x)_K Y by the balancing relations
    def _init_generic(self):
        x, y, ring = self.x, self.y, self.ring
        p = self.field.p
        one = self.field.one
        dx, dy = x.dim, y.dim
        skip = None
        if len(ring.unit) == 1:
            (u, c), = ring.unit.items()
            if c == one:
                skip = u
        rels = []
        for s in range(ring.dim):
            if s == skip:
                continue
            ys = [self._ys(s, {b: one}) for b in range(dy)]
            for a in range(dx):
                xs = self._xs({a: one}, s)
                for b in range(dy):
                    r: dict = {}
                    for i, c in xs.items():
                        r[i * dy + b] = c
                    for j, c in ys[b].items():
                        axpy(r, -c, {a * dy + j: 1}, p)
                    if r:
                        rels.append(r)
        self._q = QuotientSpace(dx * dy, Subspace.span(self.field, dx * dy, rels))
        self.dim = self._q.dim

    def _init_idempotent(self):
        x, y, ring = self.x, self.y, self.ring
        one = self.field.one
        self._blocks = []
        off = 0
        for i in range(ring.dim):
            xi = Subspace.span(self.field, x.dim, [self._xs({a: one}, i) for a in range(x.dim)])
            yi = Subspace.span(self.field, y.dim, [self._ys(i, {b: one}) for b in range(y.dim)])
            self._blocks.append((off, xi, yi, {c: k for k, c in enumerate(xi.pivots)},
                                 {c: k for k, c in enumerate(yi.pivots)}))
            off += xi.dim * yi.dim
        self.dim = off

    def _init_collapse(self):
        ind = self.y.induced
        self._outer = ind.tensor
        inner_x = self.x
        self._inner = TensorProduct(inner_x, ind.tensor.y, ind.emb.sub, ind.emb)
        self.dim = self._inner.dim

    # coordinates
    def pure(self, xv: dict, yv: dict) -> dict:
        if not xv or not yv:
            return {}
        p = self.field.p
        if self.method == "generic":
            dy = self.y.dim
            v: dict = {}
            for a, c in xv.items():
                for b, d in yv.items():
                    v[a * dy + b] = c * d if not p else c * d % p
            return self._q.project(v)
        if self.method == "idempotent":
            out: dict = {}
            for i, (off, xi, yi, xpos, ypos) in enumerate(self._blocks):
                if not xi.dim or not yi.dim:
                    continue
                xf = self._xs(xv, i)
                if not xf:
                    continue
                yf = self._ys(i, yv)
                if not yf:
                    continue
                w = yi.dim
                yc = [(ypos[c], d) for c, d in yf.items() if c in ypos]
                for c, x in xf.items():
                    k = xpos.get(c)
                    if k is None:
                        continue
                    base = off + k * w
                    for kb, d in yc:
                        s = out.get(base + kb, 0) + x * d
                        if p:
                            s %= p
                        if s:
                            out[base + kb] = s
                        else:
                            out.pop(base + kb, None)
            return out
        # collapse: n (x) (a (x) z) -> n a (x) z
        out = {}
        for k, c in yv.items():
            for coef, a, z in self._outer.lift(k):
                na = self.x.act_right(xv, a)
                if na:
                    axpy(out, c * coef, self._inner.pure(na, z), p)
        return out

    def lift(self, k: int) -> list[tuple[object, dict, dict]]:
        one = self.field.one
        if self.method == "generic":
            a, b = divmod(self._q.lift(k), self.y.dim)
            return [(one, {a: one}, {b: one})]
        if self.method == "idempotent":
            for off, xi, yi, _, _ in self._blocks:
                size = xi.dim * yi.dim
                if k < off + size:
                    a, b = divmod(k - off, yi.dim)
                    return [(one, xi.rows[a], yi.rows[b])]
            raise IndexError(k)
        unit = self._outer.ring_unit_vec()
        return [(c, n, self._outer.pure(unit, z)) for c, n, z in self._inner.lift(k)]

    def ring_unit_vec(self) -> dict:
        """The identity of the left acting algebra of ``X`` (for ``A (x)_S Y``)."""
        if self.x.left is None:
            raise ModuleError("first factor has no left action")
        return dict(self.x.left.unit)

    def element(self, k: int) -> dict:
        return {k: self.field.one}

    @property
    def module(self) -> ModuleRep:
        """The tensor product with its outer actions."""
        if self._module is None:
            x, y = self.x, self.y
            one = self.field.one
            p = self.field.p
            left = x.left
            right = y.right

            def lf(i, k):
                out: dict = {}
                for c, xv, yv in self.lift(k):
                    axpy(out, c, self.pure(x.act_left({i: one}, xv), yv), p)
                return out

            def rf(k, i):
                out: dict = {}
                for c, xv, yv in self.lift(k):
                    axpy(out, c, self.pure(xv, y.act_right(yv, {i: one})), p)
                return out

            self._module = ModuleRep(self.field, self.dim, left, right,
                                     lf if left is not None else None,
                                     rf if right is not None else None,
                                     name=f"{x.name}(x){y.name}")
        return self._module

    def __repr__(self):
        return f"TensorProduct({self.x.dim} x {self.y.dim} -> {self.dim}, {self.method})"


def tensor_over(over, x: ModuleRep, y: ModuleRep, method: str = "auto") -> TensorProduct:
    """``x (x)_S y`` where ``over`` is an algebra ``S`` or an embedding ``S -> A``.

    With an embedding, the factors may be modules over ``A`` and are
    restricted along it.
    """
    if isinstance(over, SubalgebraEmbedding):
        return TensorProduct(x, y, over.sub, over, method)
    if isinstance(over, Algebra):
        return TensorProduct(x, y, over, None, method)
    raise TypeError("tensor ring must be an Algebra or a SubalgebraEmbedding")


def tensor_map(src: TensorProduct, dst: TensorProduct, f: Matrix, g: Matrix) -> Matrix:
    """Matrix of ``f (x) g: src -> dst``."""
    p = src.field.p

    def col(k):
        out: dict = {}
        for c, xv, yv in src.lift(k):
            axpy(out, c, dst.pure(f.apply(xv), g.apply(yv)), p)
        return out

    return Matrix.lazy(src.field, dst.dim, src.dim, col)


def free_relative_module(emb: SubalgebraEmbedding, v: ModuleRep, method: str = "auto") -> ModuleRep:
    """The ``(A,S)``-free module ``A (x)_S v``; ``v`` is a left module over
    ``S`` or over ``A`` (then restricted)."""
    a = emb.ambient
    t = tensor_over(emb, regular_bimodule(a), v, method)
    one = a.field.one
    p = a.field.p

    def lf(i, k):
        out: dict = {}
        for c, xv, yv in t.lift(k):
            axpy(out, c, t.pure(a.mul({i: one}, xv), yv), p)
        return out

    return ModuleRep(a.field, t.dim, left=a, left_fn=lf,
                     name=f"A(x)_S{v.name}", induced=Induced(emb, t))


@dataclass
class ProjectivityResult:
    """Verdict of a splitting test plus the section found, if any."""

    ok: bool
    section: Matrix | None
    tensor: TensorProduct
    method: str
    report: Report

    def __bool__(self):
        return self.ok


def _action_map(t: TensorProduct, m: ModuleRep) -> Matrix:
    """``mu: A (x)_S m -> m``."""
    p = m.field.p

    def col(k):
        out: dict = {}
        for c, av, mv in t.lift(k):
            axpy(out, c, m.act_left(av, mv), p)
        return out

    return Matrix.lazy(m.field, m.dim, t.dim, col)


def _verify_section(t: TensorProduct, m: ModuleRep, sigma: Matrix, rep: Report) -> bool:
    mu = _action_map(t, m)
    tm = t.module
    one = m.field.one
    for j in range(m.dim):
        if mu.apply(sigma.col(j)) != {j: one}:
            rep.fail(f"mu . sigma differs from the identity on basis vector {j}")
            return False
    a = m.left
    for i in range(a.dim):
        for j in range(m.dim):
            if sigma.apply(m.lcol(i, j)) != tm.act_left({i: one}, sigma.col(j)):
                rep.fail(f"sigma is not A-linear at ({a.names[i]}, {j})")
                return False
    return True


def is_relative_projective(emb: SubalgebraEmbedding, m: ModuleRep) -> ProjectivityResult:
    """Decide whether ``A (x)_S m -> m`` splits A-linearly.

    Modules built as ``A (x)_S Y`` use the section ``a (x) y -> a (x) 1 (x) y``,
    which is verified; otherwise the section is found by one linear solve.
    """
    a = emb.ambient
    if m.left is not a:
        raise ModuleError("expected a left module over the ambient algebra")
    rep = Report("relative projectivity")
    t = tensor_over(emb, regular_bimodule(a), m)
    p = m.field.p
    ind = m.induced
    if ind is not None and ind.emb.ambient is a:
        inner = ind.tensor
        unit = dict(a.unit)

        def col(k):
            out: dict = {}
            for c, av, yv in inner.lift(k):
                axpy(out, c, t.pure(av, inner.pure(unit, yv)), p)
            return out

        sigma = Matrix.lazy(m.field, t.dim, m.dim, col)
        if _verify_section(t, m, sigma, rep):
            rep.details.update(dim=m.dim, method="canonical")
            return ProjectivityResult(True, sigma, t, "canonical", rep)
        rep.failures.clear()
        rep.ok = True
    sigma = _solve_section(t, m)
    if sigma is None:
        rep.fail("the action map A (x)_S M -> M has no A-linear section")
        rep.details.update(dim=m.dim, method="linear-solve")
        return ProjectivityResult(False, None, t, "linear-solve", rep)
    ok = _verify_section(t, m, sigma, rep)
    rep.details.update(dim=m.dim, method="linear-solve")
    return ProjectivityResult(ok, sigma, t, "linear-solve", rep)


def _solve_section(t: TensorProduct, m: ModuleRep) -> Matrix | None:
    """Solve ``mu X = I`` and ``X rho_m(b) = rho_T(b) X`` for ``X: m -> T``."""
    f = m.field
    p = f.p
    one = f.one
    d, big = m.dim, t.dim
    mu = _action_map(t, m)
    tm = t.module
    a = m.left

    def var(r, c):
        return r * d + c

    rows = []
    rhs = []
    mu_rows = [dict() for _ in range(d)]
    for r in range(big):
        for q, v in mu.col(r).items():
            mu_rows[q][r] = v
    for q in range(d):
        for c in range(d):
            rows.append({var(r, c): v for r, v in mu_rows[q].items()})
            rhs.append(one if q == c else f.zero)
    for i in range(a.dim):
        rho_m = [m.lcol(i, j) for j in range(d)]
        rho_t_rows = [dict() for _ in range(big)]
        for r in range(big):
            for r2, v in tm.lcol(i, r).items():
                rho_t_rows[r2][r] = v
        for c in range(d):
            for r2 in range(big):
                eq: dict = {}
                for j, v in rho_m[c].items():
                    axpy(eq, v, {var(r2, j): 1}, p)
                for r, v in rho_t_rows[r2].items():
                    axpy(eq, -v, {var(r, c): 1}, p)
                if eq:
                    rows.append(eq)
                    rhs.append(f.zero)
    sol = solve_linear(Matrix.from_rows(f, big * d, rows), rhs)
    if sol is None:
        return None
    cols = [dict() for _ in range(d)]
    for r in range(big):
        for c in range(d):
            v = sol[var(r, c)]
            if v:
                cols[c][r] = v
    return Matrix(f, big, d, cols)


def is_projective(a: Algebra, m: ModuleRep) -> ProjectivityResult:
    """Ordinary projectivity: relative projectivity over ``K * 1``."""
    return is_relative_projective(scalar_subalgebra(a), m)


def base_change(phi: AlgebraHom, m: ModuleRep) -> ModuleRep:
    """``R (x)_A m`` for a unital ring map ``phi: A -> R``."""
    rep = phi.check()
    if not rep:
        raise AlgebraError(f"not a ring homomorphism: {rep.failures[0]}")
    a, r = phi.source, phi.target
    if m.left is not a:
        raise ModuleError("expected a left module over the source algebra")
    one = r.field.one
    images = [phi({i: one}) for i in range(a.dim)]
    r_a = ModuleRep(r.field, r.dim, left=r, right=a,
                    left_fn=lambda i, j: dict(r.product(i, j)),
                    right_fn=lambda j, i: r.mul({j: one}, images[i]), name="R")
    t = tensor_over(a, r_a, m)
    out = t.module
    out.name = f"R(x)_A{m.name}"
    return out


def hom_space(m: ModuleRep, n: ModuleRep) -> list[ModuleHom]:
    """Basis of the intertwiners ``m -> n`` (left and right actions)."""
    if m.left is not n.left or m.right is not n.right:
        raise ModuleError("modules are over different algebras or sides")
    f = m.field
    p = f.p
    one = f.one
    dm, dn = m.dim, n.dim

    def var(r, c):
        return r * dm + c

    rows = []
    for alg, act_m, act_n in ((m.left, "l", "l"), (m.right, "r", "r")):
        if alg is None:
            continue
        for i in range(alg.dim):
            if act_m == "l":
                rho_m = [m.lcol(i, j) for j in range(dm)]
                rho_n = [n.lcol(i, j) for j in range(dn)]
            else:
                rho_m = [m.rcol(j, i) for j in range(dm)]
                rho_n = [n.rcol(j, i) for j in range(dn)]
            rn_rows = [dict() for _ in range(dn)]
            for r in range(dn):
                for r2, v in rho_n[r].items():
                    rn_rows[r2][r] = v
            for c in range(dm):
                for r2 in range(dn):
                    eq: dict = {}
                    for j, v in rho_m[c].items():
                        axpy(eq, v, {var(r2, j): one}, p)
                    for r, v in rn_rows[r2].items():
                        axpy(eq, -v, {var(r, c): one}, p)
                    if eq:
                        rows.append(eq)
    ker = kernel_basis(Matrix.from_rows(f, dn * dm, rows))
    out = []
    for v in ker.rows:
        cols = [dict() for _ in range(dm)]
        for k, x in v.items():
            r, c = divmod(k, dm)
            cols[c][r] = x
        out.append(ModuleHom(m, n, Matrix(f, dn, dm, cols)))
    return out
