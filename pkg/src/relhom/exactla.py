"""Exact linear algebra over the rationals and prime fields.

Vectors are sparse ``dict`` objects mapping an index to a nonzero scalar.
Matrices store sparse columns and may be *lazy*: a column function is
evaluated on first access and cached, which lets very large maps (bar
differentials) be touched only where they are needed.

Rationals are ``gmpy2.mpq`` values (always in lowest terms); residues mod p
are plain ``int`` values in ``[0, p)``.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import gmpy2

__all__ = [
    "Field", "QQ", "GF", "Matrix", "Subspace", "QuotientSpace",
    "rref", "rank", "kernel_basis", "solve_linear", "quotient_space",
    "inverse", "axpy", "vec_scale", "vec_add", "vec_sub", "Coordinates",
]


class Field:
    """The rationals (``p == 0``) or the prime field with ``p`` elements."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        p = int(p)
        if p and not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, spec: str) -> "Field":
        s = spec.strip().lower()
        if s in ("q", "qq"):
            return cls(0)
        if s.startswith("fp:"):
            return cls(int(s[3:]))
        raise ValueError(f"unknown field {spec!r} (expected 'Q' or 'Fp:<prime>')")

    @property
    def spec(self) -> str:
        return f"Fp:{self.p}" if self.p else "Q"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"

    @property
    def zero(self):
        return 0 if self.p else gmpy2.mpq(0)

    @property
    def one(self):
        return 1 if self.p else gmpy2.mpq(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            value = gmpy2.mpq(value.numerator, value.denominator)
        q = gmpy2.mpq(value)
        if not self.p:
            return q
        den = int(q.denominator) % self.p
        if den == 0:
            raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
        return int(q.numerator) * pow(den, -1, self.p) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(int(x), -1, self.p)
        return 1 / x

    def format(self, x) -> str:
        if self.p:
            return str(int(x) % self.p)
        x = gmpy2.mpq(x)
        return f"{x.numerator}/{x.denominator}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# -- sparse vectors -----------------------------------------------------------

def axpy(acc: dict, coef, vec: dict, p: int = 0) -> dict:
    """``acc += coef * vec`` in place; returns ``acc``."""
    if not coef:
        return acc
    get = acc.get
    if p:
        for k, v in vec.items():
            s = (get(k, 0) + coef * v) % p
            if s:
                acc[k] = s
            elif k in acc:
                del acc[k]
    else:
        for k, v in vec.items():
            s = get(k, 0) + coef * v
            if s:
                acc[k] = s
            elif k in acc:
                del acc[k]
    return acc


def vec_scale(vec: dict, coef, p: int = 0) -> dict:
    if not coef:
        return {}
    if p:
        return {k: v * coef % p for k, v in vec.items() if v * coef % p}
    return {k: v * coef for k, v in vec.items()}


def vec_add(u: dict, v: dict, p: int = 0) -> dict:
    return axpy(dict(u), 1, v, p)


def vec_sub(u: dict, v: dict, p: int = 0) -> dict:
    return axpy(dict(u), -1, v, p)


def _echelon(vectors: Iterable[dict], p: int, pivots: dict | None = None) -> dict:
    """Row-echelon form of ``vectors``: maps pivot column -> row with a
    leading 1 there. Leftmost-pivot elimination; rows are not back-reduced."""
    if pivots is None:
        pivots = {}
    for v in vectors:
        if not v:
            continue
        v = dict(v)
        heap = list(v)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            x = v.get(c)
            if x is None:
                continue
            row = pivots.get(c)
            if row is None:
                inv = pow(int(x), -1, p) if p else 1 / x
                if p:
                    pivots[c] = {k: val * inv % p for k, val in v.items()}
                else:
                    pivots[c] = {k: val * inv for k, val in v.items()}
                break
            axpy(v, -x, row, p)
            for k in row:
                if k != c and k in v:
                    heapq.heappush(heap, k)
    return pivots


def _back_reduce(pivots: dict, p: int) -> list[int]:
    """Turn an echelon ``pivots`` map into reduced form in place."""
    order = sorted(pivots)
    done = set()
    for c in reversed(order):
        row = pivots[c]
        for k in [k for k in row if k != c and k in done]:
            f = row.get(k)
            if f:
                axpy(row, -f, pivots[k], p)
        done.add(c)
    return order


class Matrix:
    """Immutable sparse matrix over a :class:`Field`, stored by columns."""

    __slots__ = ("field", "nrows", "ncols", "_cols", "_fn")

    def __init__(self, field: Field, nrows: int, ncols: int,
                 cols: Sequence[dict] | None = None,
                 fn: Callable[[int], dict] | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if cols is None and fn is None:
            cols = [{} for _ in range(ncols)]
        if cols is not None:
            if len(cols) != ncols:
                raise ValueError("column count mismatch")
            self._cols = list(cols)
            self._fn = None
        else:
            self._cols = [None] * ncols
            self._fn = fn

    # construction
    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        one = field.one
        return cls(field, n, n, [{j: one} for j in range(n)])

    @classmethod
    def lazy(cls, field, nrows, ncols, fn):
        return cls(field, nrows, ncols, fn=fn)

    @classmethod
    def from_columns(cls, field, nrows, cols):
        return cls(field, nrows, len(cols), [dict(c) for c in cols])

    @classmethod
    def from_rows(cls, field, ncols, rows: Sequence[dict]):
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, v in row.items():
                cols[j][i] = v
        return cls(field, len(rows), ncols, cols)

    @classmethod
    def from_dense(cls, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                x = field(v)
                if x:
                    cols[j][i] = x
        return cls(field, len(rows), ncols, cols)

    # access
    def col(self, j: int) -> dict:
        c = self._cols[j]
        if c is None:
            c = self._fn(j)
            self._cols[j] = c
        return c

    @property
    def cols(self) -> list[dict]:
        if self._fn is not None:
            for j in range(self.ncols):
                self.col(j)
        return self._cols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.col(j).get(i, self.field.zero)

    def rows(self) -> list[dict]:
        out = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def to_dense(self) -> list[list]:
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, self.rows())

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    # arithmetic
    def apply(self, vec: dict) -> dict:
        p = self.field.p
        out: dict = {}
        for j, x in vec.items():
            axpy(out, x, self.col(j), p)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.field, self.nrows, other.ncols,
                      [self.apply(c) for c in other.cols])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        p = self.field.p
        return Matrix(self.field, self.nrows, self.ncols,
                      [vec_add(a, b, p) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        p = self.field.p
        return Matrix(self.field, self.nrows, self.ncols,
                      [vec_sub(a, b, p) for a, b in zip(self.cols, other.cols)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, coef) -> "Matrix":
        coef = self.field(coef)
        p = self.field.p
        return Matrix(self.field, self.nrows, self.ncols,
                      [vec_scale(c, coef, p) for c in self.cols])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.cols)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        one = self.field.one
        return all(c == {j: one} for j, c in enumerate(self.cols))

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row/col index ``(i, k) -> i * other.nrows + k``."""
        p = self.field.p
        m = other.nrows
        cols = []
        for a in self.cols:
            for b in other.cols:
                c = {}
                for i, x in a.items():
                    for k, y in b.items():
                        v = x * y % p if p else x * y
                        if v:
                            c[i * m + k] = v
                cols.append(c)
        return Matrix(self.field, self.nrows * m, self.ncols * other.ncols, cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(self.field, self.nrows, self.ncols + other.ncols,
                      self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        off = self.nrows
        cols = [dict(a) for a in self.cols]
        for c, b in zip(cols, other.cols):
            for i, v in b.items():
                c[i + off] = v
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, cols)

    def rank(self) -> int:
        return rank(self)

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            body = [[self.field.format(x) for x in r] for r in self.to_dense()]
            return f"Matrix({body})"
        return f"Matrix<{self.nrows}x{self.ncols}, {self.field!r}>"


def rank(m: Matrix) -> int:
    return len(_echelon(m.cols, m.field.p))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns (leftmost pivoting).

    Zero rows are dropped from the echelon part and appended at the bottom so
    the result has the same shape as ``m``."""
    p = m.field.p
    piv = _echelon(m.rows(), p)
    order = _back_reduce(piv, p)
    rows = [piv[c] for c in order] + [{} for _ in range(m.nrows - len(order))]
    return Matrix.from_rows(m.field, m.ncols, rows), order


def kernel_basis(m: Matrix) -> "Subspace":
    """Canonical basis of ``{x : m x = 0}``."""
    p = m.field.p
    piv = _echelon(m.rows(), p)
    order = _back_reduce(piv, p)
    pivset = set(order)
    one = m.field.one
    vecs = {f: {f: one} for f in range(m.ncols) if f not in pivset}
    for c in order:
        for f, val in piv[c].items():
            if f != c:
                vecs[f][c] = (-val) % p if p else -val
    return Subspace.span(m.field, m.ncols, vecs.values())


def solve_linear(m: Matrix, b) -> list | None:
    """Some ``x`` with ``m x = b`` (free variables zero), or ``None``."""
    if isinstance(b, dict):
        bvec = b
    else:
        b = list(b)
        if len(b) != m.nrows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {m.nrows}")
        bvec = {i: m.field(x) for i, x in enumerate(b) if m.field(x)}
    if any(i >= m.nrows for i in bvec):
        raise ValueError("right-hand side index out of range")
    p = m.field.p
    rows = m.rows()
    n = m.ncols
    for i, x in bvec.items():
        rows[i][n] = x
    piv = _echelon(rows, p)
    if n in piv:
        return None
    order = _back_reduce(piv, p)
    x = [m.field.zero] * n
    for c in order:
        x[c] = piv[c].get(n, m.field.zero)
    return x


def inverse(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    if m.nrows != m.ncols:
        return None
    n = m.nrows
    p = m.field.p
    one = m.field.one
    rows = m.rows()
    for i in range(n):
        rows[i][n + i] = one
    piv = _echelon(rows, p)
    if len(piv) < n or any(c >= n for c in piv):
        return None
    _back_reduce(piv, p)
    inv_rows = [{k - n: v for k, v in piv[c].items() if k >= n} for c in range(n)]
    return Matrix.from_rows(m.field, n, inv_rows)


class Subspace:
    """A subspace of ``field^ambient_dim`` with its canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots", "_pos")

    def __init__(self, field: Field, ambient_dim: int, rows: Sequence[dict], pivots: Sequence[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)
        self._pos = {c: i for i, c in enumerate(self.pivots)}

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[dict]) -> "Subspace":
        p = field.p
        piv = _echelon(vectors, p)
        order = _back_reduce(piv, p)
        return cls(field, ambient_dim, [piv[c] for c in order], order)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field, ambient_dim):
        one = field.one
        return cls(field, ambient_dim, [{i: one} for i in range(ambient_dim)], range(ambient_dim))

    @classmethod
    def image(cls, m: Matrix) -> "Subspace":
        return cls.span(m.field, m.nrows, m.cols)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> Matrix:
        return Matrix.from_rows(self.field, self.ambient_dim, self.rows)

    def vectors(self) -> list[dict]:
        return [dict(r) for r in self.rows]

    def reduce(self, v: dict) -> dict:
        """Residue of ``v`` after eliminating every pivot coordinate."""
        p = self.field.p
        out = dict(v)
        for c in [c for c in v if c in self._pos]:
            x = out.get(c)
            if x:
                axpy(out, -x, self.rows[self._pos[c]], p)
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v: dict) -> dict | None:
        """Coefficients of ``v`` in the RREF basis, or ``None`` if ``v`` is outside."""
        if self.reduce(v):
            return None
        return {i: v[c] for c, i in self._pos.items() if v.get(c)}

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.rows == other.rows)

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, list(self.rows) + list(other.rows))

    def intersection(self, other: "Subspace") -> "Subspace":
        n = self.ambient_dim
        p = self.field.p
        cols = list(self.rows) + [vec_scale(r, -1, p) for r in other.rows]
        ker = kernel_basis(Matrix(self.field, n, len(cols), cols))
        out = []
        for k in ker.rows:
            v: dict = {}
            for i, c in k.items():
                if i < self.dim:
                    axpy(v, c, self.rows[i], p)
            out.append(v)
        return Subspace.span(self.field, n, out)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class QuotientSpace:
    """``field^ambient_dim / killed`` realised on the non-pivot coordinates."""

    __slots__ = ("field", "ambient_dim", "killed", "complement", "_index",
                 "_projection", "_section")

    def __init__(self, ambient_dim: int, killed: Subspace):
        if killed.ambient_dim != ambient_dim:
            raise ValueError("killed subspace lives in a different ambient space")
        self.field = killed.field
        self.ambient_dim = ambient_dim
        self.killed = killed
        piv = set(killed.pivots)
        self.complement = [j for j in range(ambient_dim) if j not in piv]
        self._index = {j: i for i, j in enumerate(self.complement)}
        self._projection = None
        self._section = None

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project(self, v: dict) -> dict:
        r = self.killed.reduce(v)
        idx = self._index
        return {idx[j]: x for j, x in r.items()}

    def lift(self, i: int) -> int:
        """Ambient coordinate whose unit vector represents quotient basis ``i``."""
        return self.complement[i]

    @property
    def projection(self) -> Matrix:
        if self._projection is None:
            one = self.field.one
            self._projection = Matrix.lazy(self.field, self.dim, self.ambient_dim,
                                           lambda j: self.project({j: one}))
        return self._projection

    @property
    def section(self) -> Matrix:
        if self._section is None:
            one = self.field.one
            self._section = Matrix(self.field, self.ambient_dim, self.dim,
                                   [{j: one} for j in self.complement])
        return self._section

    def __repr__(self):
        return f"QuotientSpace({self.ambient_dim} / {self.killed.dim} = {self.dim})"


def quotient_space(ambient_dim: int, killed: Subspace) -> QuotientSpace:
    return QuotientSpace(ambient_dim, killed)


class Coordinates:
    """Coordinates with respect to a fixed, user-ordered list of vectors."""

    __slots__ = ("field", "ambient_dim", "vectors", "span", "_combo")

    def __init__(self, field: Field, ambient_dim: int, vectors: Sequence[dict]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.vectors = [dict(v) for v in vectors]
        n = ambient_dim
        one = field.one
        tagged = []
        for i, v in enumerate(self.vectors):
            w = dict(v)
            w[n + i] = one
            tagged.append(w)
        p = field.p
        piv = _echelon(tagged, p)
        order = _back_reduce(piv, p)
        if any(c >= n for c in order):
            raise ValueError("vectors are linearly dependent")
        self.span = Subspace(field, n, [{k: x for k, x in piv[c].items() if k < n} for c in order], order)
        self._combo = [{k - n: x for k, x in piv[c].items() if k >= n} for c in order]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __call__(self, v: dict) -> dict | None:
        """Coefficients ``c`` with ``v = sum c[i] * vectors[i]``, or ``None``."""
        rc = self.span.coordinates(v)
        if rc is None:
            return None
        out: dict = {}
        p = self.field.p
        for r, x in rc.items():
            axpy(out, x, self._combo[r], p)
        return out
