"""Finite truncations of chain complexes: d^2 = 0, homology, contracting homotopies."""
from __future__ import annotations

from typing import Mapping, Sequence

from .exactla import Field, Matrix, axpy
from .module import ModuleRep, TensorProduct, tensor_map, tensor_over
from .report import Report

__all__ = [
    "ChainComplex", "ComplexError", "verify_complex", "homology_dims",
    "verify_homotopy", "tensor_complex",
]


class ComplexError(ValueError):
    """A map in a complex does not fit, or d^2 != 0 where homology was requested."""


class ChainComplex:
    """Spaces ``C_low .. C_high`` with ``d_k: C_k -> C_{k-1}``.

    ``diffs[k]`` is stored for ``low < k <= high``. ``homotopy[k]`` maps
    ``C_k -> C_{k+1}`` and is only claimed to be linear over the subring.
    ``bounded`` means every space outside the stored range is zero.
    """

    def __init__(self, field: Field, low: int, dims: Sequence[int],
                 diffs: Mapping[int, Matrix], homotopy: Mapping[int, Matrix] | None = None,
                 modules: Mapping[int, ModuleRep] | None = None, bounded: bool = False,
                 name: str = "", tensors: Mapping[int, TensorProduct] | None = None):
        self.field = field
        self.low = low
        self.dims = list(dims)
        self.high = low + len(self.dims) - 1
        self.diffs = dict(diffs)
        self.homotopy = dict(homotopy) if homotopy is not None else None
        self.modules = dict(modules) if modules is not None else None
        self.tensors = dict(tensors) if tensors is not None else None
        self.bounded = bounded
        self.name = name
        for k, d in self.diffs.items():
            if not (self.low < k <= self.high):
                raise ComplexError(f"differential d_{k} outside the degree range")
            if d.shape != (self.dim(k - 1), self.dim(k)):
                raise ComplexError(f"d_{k} has shape {d.shape}, expected "
                                   f"{(self.dim(k - 1), self.dim(k))}")
        for k, s in (self.homotopy or {}).items():
            if s.shape != (self.dim(k + 1), self.dim(k)):
                raise ComplexError(f"s_{k} has shape {s.shape}, expected "
                                   f"{(self.dim(k + 1), self.dim(k))}")

    @property
    def degrees(self) -> range:
        return range(self.low, self.high + 1)

    def dim(self, k: int) -> int:
        if self.low <= k <= self.high:
            return self.dims[k - self.low]
        if self.bounded:
            return 0
        raise ComplexError(f"degree {k} is outside the stored truncation")

    def d(self, k: int) -> Matrix:
        if k in self.diffs:
            return self.diffs[k]
        if k == self.low or (self.bounded and (k <= self.low or k > self.high)):
            return Matrix.zeros(self.field, self.dim(k - 1) if k - 1 >= self.low else 0,
                                self.dim(k) if self.low <= k <= self.high else 0)
        raise ComplexError(f"d_{k} is not stored")

    def truncated(self, low: int) -> "ChainComplex":
        """Drop the degrees below ``low`` (e.g. remove an augmentation)."""
        if low < self.low:
            raise ComplexError("cannot extend a complex downward")
        off = low - self.low
        keep = lambda mp: ({k: v for k, v in mp.items() if k >= low} if mp is not None else None)
        diffs = {k: v for k, v in self.diffs.items() if k > low}
        return ChainComplex(self.field, low, self.dims[off:], diffs, keep(self.homotopy),
                            keep(self.modules), False, self.name, keep(self.tensors))

    def __repr__(self):
        return f"ChainComplex({self.name or 'C'}, degrees {self.low}..{self.high}, dims={self.dims})"


def verify_complex(c: ChainComplex) -> Report:
    """Check ``d_k d_{k+1} = 0`` on every basis vector of every stored degree."""
    rep = Report("d^2 = 0")
    for k in range(c.low + 1, c.high):
        if k not in c.diffs or k + 1 not in c.diffs:
            continue
        dk, dk1 = c.diffs[k], c.diffs[k + 1]
        for j in range(c.dim(k + 1)):
            if dk.apply(dk1.col(j)):
                rep.fail(f"d_{k} d_{k + 1} != 0 on basis vector {j} of degree {k + 1}")
                break
    rep.details["degrees"] = [c.low, c.high]
    return rep


def homology_dims(c: ChainComplex, degrees: Sequence[int] | range | None = None,
                  check: bool = True) -> list[int]:
    """``dim H_k = dim ker d_k - rank d_{k+1}`` for each requested degree."""
    if degrees is None:
        degrees = range(c.low, c.high + 1 if c.bounded else c.high)
    degrees = list(degrees)
    if check:
        rep = verify_complex(c)
        if not rep:
            raise ComplexError(f"not a complex: {rep.failures[0]}")
    ranks: dict[int, int] = {}

    def rank_of(k):
        if k not in ranks:
            if k in c.diffs:
                ranks[k] = c.diffs[k].rank()
            elif k <= c.low or (c.bounded and k > c.high):
                ranks[k] = 0
            else:
                raise ComplexError(f"d_{k} is needed but not stored; extend the truncation")
        return ranks[k]

    out = []
    for k in degrees:
        dim_k = c.dim(k)
        out.append(dim_k - rank_of(k) - rank_of(k + 1))
    return out


def verify_homotopy(c: ChainComplex) -> Report:
    """Check ``d_{low+1} s_low = id`` and ``d_{k+1} s_k + s_{k-1} d_k = id``."""
    rep = Report("contracting homotopy")
    if not c.homotopy:
        rep.fail("complex carries no homotopy maps")
        return rep
    one = c.field.one
    p = c.field.p
    for k in range(c.low, c.high):
        s_k = c.homotopy.get(k)
        if s_k is None or k + 1 not in c.diffs:
            continue
        d_up = c.diffs[k + 1]
        s_prev = c.homotopy.get(k - 1)
        d_k = c.diffs.get(k)
        if k > c.low and (s_prev is None or d_k is None):
            continue
        for j in range(c.dim(k)):
            v = d_up.apply(s_k.col(j))
            if k > c.low:
                axpy(v, 1, s_prev.apply(d_k.col(j)), p)
            if v != {j: one}:
                what = "d s" if k == c.low else "d s + s d"
                rep.fail(f"{what} != id in degree {k} (basis vector {j})")
                break
    return rep


def tensor_complex(side: str, m: ModuleRep, c: ChainComplex, method: str = "auto",
                   over=None) -> ChainComplex:
    """``m (x)_R C`` (side ``"left"``) or ``C (x)_R m`` (side ``"right"``),
    where ``R`` acts on ``m`` and on every term of ``C``.

    ``over`` may name the ring explicitly (an algebra or an embedding
    ``R -> A``, letting ``m`` be an ``A``-module)."""
    if c.modules is None:
        raise ComplexError("complex has no module structure to tensor with")
    tensors: dict[int, TensorProduct] = {}
    for k in c.degrees:
        ck = c.modules[k]
        if side == "left":
            ring = m.right if over is None else over
            if ring is None or (over is None and ck.left is not ring):
                raise ComplexError("need a right module and a complex of left modules over one ring")
            tensors[k] = tensor_over(ring, m, ck, method)
        elif side == "right":
            ring = m.left if over is None else over
            if ring is None or (over is None and ck.right is not ring):
                raise ComplexError("need a complex of right modules and a left module over one ring")
            tensors[k] = tensor_over(ring, ck, m, method)
        else:
            raise ValueError("side must be 'left' or 'right'")
    ident = Matrix.identity(c.field, m.dim)
    diffs = {}
    for k, d in c.diffs.items():
        if side == "left":
            diffs[k] = tensor_map(tensors[k], tensors[k - 1], ident, d)
        else:
            diffs[k] = tensor_map(tensors[k], tensors[k - 1], d, ident)
    out = ChainComplex(c.field, c.low, [tensors[k].dim for k in c.degrees], diffs,
                       modules={k: t.module for k, t in tensors.items()},
                       bounded=c.bounded, name=f"{m.name}(x){c.name}" if side == "left"
                       else f"{c.name}(x){m.name}", tensors=tensors)
    return out
