"""Relative bar resolutions, relative Tor and the stratifying test."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (Algebra, AlgebraError, SubalgebraEmbedding, _as_vec,
                      opposite_embedding, scalar_subalgebra,
                      two_sided_ideal)
from .exactla import Matrix, axpy
from .homology import (ChainComplex, homology_dims, tensor_complex,
                       verify_complex, verify_homotopy)
from .module import (ModuleError, ModuleRep, free_relative_module,
                     is_relative_projective, opposite_module, quotient_module,
                     regular_bimodule, tensor_over)
from .report import Report

__all__ = [
    "BarResolution", "TorReport", "StratifyReport", "TorMismatchError",
    "bar_resolution", "relative_tor", "ordinary_tor", "is_stratifying",
    "left_part", "right_part", "quotient_bimodule", "DEFAULT_DEGREE",
]

DEFAULT_DEGREE = 4


class TorMismatchError(RuntimeError):
    """Two computations of the same relative Tor disagree."""


def left_part(m: ModuleRep) -> ModuleRep:
    """Forget the right action."""
    if m.left is None:
        raise ModuleError("module has no left action")
    return ModuleRep(m.field, m.dim, left=m.left, left_fn=m.lcol, name=m.name,
                     induced=m.induced)


def right_part(m: ModuleRep) -> ModuleRep:
    """Forget the left action."""
    if m.right is None:
        raise ModuleError("module has no right action")
    return ModuleRep(m.field, m.dim, right=m.right, right_fn=m.rcol, name=m.name)


class BarResolution:
    """``B(A,S,M)``: ``B_{-1} = M`` and ``B_k = A (x)_S B_{k-1}``.

    Writing ``T_0 = M`` and ``T_k = A (x)_S T_{k-1}``, so ``B_k = T_{k+1}``,
    the face ``T_k -> T_{k-1}`` with index 0 is the action of ``A`` and the
    face with index ``j > 0`` is ``id_A (x)`` (face ``j-1`` of ``T_{k-1}``).
    Everything is lazy: columns are evaluated on first use.
    """

    def __init__(self, emb: SubalgebraEmbedding, m: ModuleRep, degree: int):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        a = emb.ambient
        if m.left is not a:
            raise ModuleError("coefficients must be a left module over the ambient algebra")
        self.emb = emb
        self.algebra = a
        self.coefficients = m
        self.degree = degree
        self.field = a.field
        self._t = [m]
        self._faces: dict[tuple[int, int], Matrix] = {}
        self._complex = None

    def t(self, k: int) -> ModuleRep:
        """``T_k = A^{(x) k} (x)_S M``."""
        while len(self._t) <= k:
            prev = self._t[-1]
            nxt = free_relative_module(self.emb, prev)
            nxt.name = f"T{len(self._t)}"
            self._t.append(nxt)
        return self._t[k]

    def b(self, k: int) -> ModuleRep:
        return self.t(k + 1)

    def face(self, k: int, j: int) -> Matrix:
        """Face ``j`` of ``T_k -> T_{k-1}`` (``0 <= j < k``)."""
        if not (0 <= j < k):
            raise IndexError(f"face ({k}, {j}) does not exist")
        key = (k, j)
        mat = self._faces.get(key)
        if mat is not None:
            return mat
        tk = self.t(k)
        ten = tk.induced.tensor
        below = self.t(k - 1)
        p = self.field.p
        if j == 0:
            def col(idx):
                out: dict = {}
                for c, av, yv in ten.lift(idx):
                    axpy(out, c, below.act_left(av, yv), p)
                return out
        else:
            inner = self.face(k - 1, j - 1)
            below_ten = below.induced.tensor

            def col(idx):
                out: dict = {}
                for c, av, yv in ten.lift(idx):
                    axpy(out, c, below_ten.pure(av, inner.apply(yv)), p)
                return out
        mat = Matrix.lazy(self.field, below.dim, tk.dim, col)
        self._faces[key] = mat
        return mat

    def d_face(self, k: int, j: int) -> Matrix:
        """``d_{k,j}: B_k -> B_{k-1}``."""
        return self.face(k + 1, j)

    def d(self, k: int) -> Matrix:
        """``d_k = sum_j (-1)^j d_{k,j}``."""
        faces = [self.d_face(k, j) for j in range(k + 1)]
        p = self.field.p
        src, dst = self.b(k), self.b(k - 1)

        def col(idx):
            out: dict = {}
            for j, f in enumerate(faces):
                axpy(out, 1 if j % 2 == 0 else -1, f.col(idx), p)
            return out

        return Matrix.lazy(self.field, dst.dim, src.dim, col)

    def s(self, k: int) -> Matrix:
        """``s_k: B_k -> B_{k+1}``, ``x -> 1 (x) x``."""
        src, dst = self.b(k), self.b(k + 1)
        ten = dst.induced.tensor
        unit = dict(self.algebra.unit)
        one = self.field.one
        return Matrix.lazy(self.field, dst.dim, src.dim, lambda idx: ten.pure(unit, {idx: one}))

    @property
    def complex(self) -> ChainComplex:
        """The augmented complex ``B_{-1} .. B_degree`` with its homotopy."""
        if self._complex is None:
            n = self.degree
            dims = [self.b(k).dim for k in range(-1, n + 1)]
            diffs = {k: self.d(k) for k in range(0, n + 1)}
            hom = {k: self.s(k) for k in range(-1, n)}
            mods = {k: self.b(k) for k in range(-1, n + 1)}
            self._complex = ChainComplex(self.field, -1, dims, diffs, hom, mods,
                                         name=f"B({self.coefficients.name})")
        return self._complex

    def resolution(self) -> ChainComplex:
        """The deleted resolution ``B_0 .. B_degree``."""
        return self.complex.truncated(0)

    def verify(self, projectivity: bool = True, max_degree: int | None = None) -> Report:
        """Check d^2 = 0, the contracting homotopy, the alternating-sum
        formula and relative projectivity of every ``B_k``."""
        rep = Report("bar resolution")
        c = self.complex
        top = self.degree if max_degree is None else min(max_degree, self.degree)
        if top < self.degree:
            c = ChainComplex(c.field, -1, c.dims[:top + 2],
                             {k: v for k, v in c.diffs.items() if k <= top},
                             {k: v for k, v in c.homotopy.items() if k < top},
                             {k: v for k, v in c.modules.items() if k <= top}, name=c.name)
        rep.add(verify_complex(c))
        rep.add(verify_homotopy(c))
        if projectivity:
            proj = Report("relative projectivity of B_k")
            for k in range(0, top + 1):
                res = is_relative_projective(self.emb, self.b(k))
                if not res:
                    proj.fail(f"B_{k} failed the splitting test: {res.report.failures[:1]}")
            rep.add(proj)
        rep.details.update(degree=top, dims=c.dims)
        return rep

    def __repr__(self):
        return f"BarResolution(degree={self.degree}, coefficients={self.coefficients!r})"


def bar_resolution(emb: SubalgebraEmbedding, m: ModuleRep, degree: int = DEFAULT_DEGREE,
                   verify: bool = True, side: str = "left") -> BarResolution:
    """Relative bar resolution of ``m``. With ``side="right"``, ``m`` is a
    right module and the resolution is built over the opposite pair."""
    if side == "right":
        op = opposite_embedding(emb)
        m = opposite_module(right_part(m), right_op=op.ambient)
        emb = op
    elif side != "left":
        raise ValueError("side must be 'left' or 'right'")
    bar = BarResolution(emb, m, degree)
    if verify:
        rep = bar.verify()
        if not rep:
            raise AssertionError(f"bar resolution identities failed:\n{rep}")
    return bar


@dataclass
class TorReport:
    """Dimensions of relative Tor in degrees ``0 .. degree``."""

    degree: int
    dims: list[int]
    methods: dict[str, list[int]]
    complex_dims: dict[str, list[int]] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return all(v == self.dims for v in self.methods.values())

    def to_dict(self) -> dict:
        return {"degree": self.degree, "dims": list(self.dims),
                "methods": {k: list(v) for k, v in self.methods.items()},
                "complex_dims": {k: list(v) for k, v in self.complex_dims.items()}}


def _definition_complex(emb: SubalgebraEmbedding, n_mod: ModuleRep, bar: BarResolution,
                        top: int) -> ChainComplex:
    """``N (x)_S A^{(x) k} (x)_S M`` with the alternating sum of faces."""
    tens = [tensor_over(emb, n_mod, bar.t(k)) for k in range(top + 1)]
    p = bar.field.p
    diffs = {}
    for k in range(1, top + 1):
        src, dst = tens[k], tens[k - 1]
        tk = bar.t(k).induced.tensor
        inner = [bar.face(k, j) for j in range(k)]

        def col(idx, src=src, dst=dst, tk=tk, inner=inner):
            out: dict = {}
            for c, nv, tv in src.lift(idx):
                # face 0 moves the first tensor factor into N
                for k2, c2 in tv.items():
                    for c3, av, yv in tk.lift(k2):
                        axpy(out, c * c2 * c3, dst.pure(n_mod.act_right(nv, av), yv), p)
                for j, f in enumerate(inner, start=1):
                    axpy(out, c if j % 2 == 0 else -c, dst.pure(nv, f.apply(tv)), p)
            return out

        diffs[k] = Matrix.lazy(bar.field, dst.dim, src.dim, col)
    return ChainComplex(bar.field, 0, [t.dim for t in tens], diffs, name="definition")


def _check_modules(emb: SubalgebraEmbedding, n_mod: ModuleRep, m_mod: ModuleRep):
    a = emb.ambient
    if n_mod.right is not a:
        raise ModuleError("first Tor argument must be a right module over the ambient algebra")
    if m_mod.left is not a:
        raise ModuleError("second Tor argument must be a left module over the ambient algebra")


def relative_tor(emb: SubalgebraEmbedding, n_mod: ModuleRep, m_mod: ModuleRep,
                 degree: int = DEFAULT_DEGREE,
                 methods: Sequence[str] = ("definition", "left-resolution", "right-resolution"),
                 ) -> TorReport:
    """``dim Tor^{(A,S)}_k(N, M)`` for ``k = 0 .. degree``.

    ``definition`` uses ``N (x)_S A^{(x)k} (x)_S M``; ``left-resolution``
    tensors ``N`` with the bar resolution of ``M``; ``right-resolution``
    tensors the bar resolution of ``N`` with ``M``. Any disagreement raises
    :class:`TorMismatchError`.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    _check_modules(emb, n_mod, m_mod)
    n_r, m_l = right_part(n_mod), left_part(m_mod)
    top = degree + 1
    results: dict[str, list[int]] = {}
    cdims: dict[str, list[int]] = {}
    bar_m = None
    for method in methods:
        if method == "definition":
            bar_m = bar_m or BarResolution(emb, m_l, top)
            c = _definition_complex(emb, n_r, bar_m, top)
        elif method == "left-resolution":
            bar_m = bar_m or BarResolution(emb, m_l, top)
            c = tensor_complex("left", n_r, bar_m.resolution())
        elif method == "right-resolution":
            op = opposite_embedding(emb)
            n_op = opposite_module(n_r, right_op=op.ambient)
            m_op = opposite_module(m_l, left_op=op.ambient)
            bar_n = BarResolution(op, n_op, top)
            c = tensor_complex("left", m_op, bar_n.resolution())
        else:
            raise ValueError(f"unknown Tor method {method!r}")
        results[method] = homology_dims(c, range(0, degree + 1), check=False)
        cdims[method] = c.dims
    first = next(iter(results.values()))
    for name, dims in results.items():
        if dims != first:
            raise TorMismatchError(f"Tor methods disagree: {results}")
    return TorReport(degree, list(first), results, cdims)


def ordinary_tor(a: Algebra, n_mod: ModuleRep, m_mod: ModuleRep, degree: int = DEFAULT_DEGREE,
                 methods: Sequence[str] = ("definition",)) -> TorReport:
    """Absolute Tor: relative Tor over ``K * 1``."""
    return relative_tor(scalar_subalgebra(a), n_mod, m_mod, degree, methods)


def quotient_bimodule(a: Algebra, ideal) -> ModuleRep:
    """``A / I`` as an ``A``-bimodule."""
    q, _ = quotient_module(regular_bimodule(a), ideal, name="A/I")
    return q


@dataclass
class StratifyReport:
    degree: int
    dim_ideal: int
    dim_quotient: int
    tor: TorReport
    verdict: str
    failing_degree: int | None

    @property
    def ok(self) -> bool:
        return self.failing_degree is None

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"degree": self.degree, "dim_ideal": self.dim_ideal,
                "dim_quotient": self.dim_quotient, "tor_dims": list(self.tor.dims),
                "tor_methods": {k: list(v) for k, v in self.tor.methods.items()},
                "verdict": self.verdict}


def is_stratifying(emb: SubalgebraEmbedding, e, degree: int = DEFAULT_DEGREE,
                   methods: Sequence[str] = ("definition", "left-resolution", "right-resolution"),
                   ) -> StratifyReport:
    """Test ``Tor_k^{(A,S)}(A/AeA, A/AeA) = 0`` for ``1 <= k <= degree``.

    Only the stated degrees are decided; the verdict says so.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    a = emb.ambient
    ev = _as_vec(a, e.e if hasattr(e, "ebar") else e)
    if a.mul(ev, ev) != ev:
        raise AlgebraError("e is not idempotent")
    if emb.pullback(ev) is None:
        raise AlgebraError("e does not lie in the subring")
    ideal = two_sided_ideal(a, [ev])
    abar = quotient_bimodule(a, ideal)
    tor = relative_tor(emb, abar, abar, degree, methods)
    failing = next((k for k in range(1, degree + 1) if tor.dims[k]), None)
    verdict = f"stratifying-up-to-{degree}" if failing is None else f"fails-at-{failing}"
    return StratifyReport(degree, ideal.dim, abar.dim, tor, verdict, failing)
