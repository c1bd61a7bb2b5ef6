"""Exact dense linear algebra over arbitrary-precision rationals.

Everything here is deterministic and tolerance-free: ranks, kernels and
solves are computed by reduced row echelon form with exact ``Fraction``
arithmetic.  Matrices are small (at most a few thousand entries), so a
dense row-major layout with sparsity-aware elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Dense matrix of rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[Fraction]]):
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "RatMatrix":
        data = [[_fr(x) for x in row] for row in rows]
        n = len(data)
        m = len(data[0]) if data else 0
        if any(len(r) != m for r in data):
            raise ValueError("ragged rows")
        return cls(n, m, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = _ONE
        return m

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RatMatrix":
        n = len(entries)
        m = cls.zeros(n, n)
        for i, x in enumerate(entries):
            m.data[i][i] = _fr(x)
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RatMatrix":
        cols = [list(c) for c in columns]
        if rows is None:
            if not cols:
                raise ValueError("need explicit row count for a matrix with no columns")
            rows = len(cols[0])
        data = [[_fr(cols[j][i]) for j in range(len(cols))] for i in range(rows)]
        return cls(rows, len(cols), data)

    # -- basics --------------------------------------------------------

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.data[i][j]

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.data]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    def copy(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [row[:] for row in self.data])

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [[-x for x in row] for row in self.data])

    def scale(self, k) -> "RatMatrix":
        k = _fr(k)
        return RatMatrix(self.rows, self.cols, [[k * x for x in row] for row in self.data])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            acc = out[i]
            for k, a in enumerate(row):
                if a:
                    orow = odata[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] = acc[j] + a * b
        return RatMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.data:
            s = _ZERO
            for a, x in zip(row, vec):
                if a and x:
                    s += a * _fr(x)
            out.append(s)
        return out

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, [list(col) for col in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        """Tensor product: entry ((i*rB+k), (j*cB+l)) is self[i,j]*other[k,l]."""
        rb, cb = other.rows, other.cols
        out = [[_ZERO] * (self.cols * cb) for _ in range(self.rows * rb)]
        for i, row in enumerate(self.data):
            for j, a in enumerate(row):
                if a:
                    for k, orow in enumerate(other.data):
                        dest = out[i * rb + k]
                        base = j * cb
                        for l, b in enumerate(orow):
                            if b:
                                dest[base + l] = a * b
        return RatMatrix(self.rows * rb, self.cols * cb, out)

    def _check_same_shape(self, other: "RatMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- elimination ---------------------------------------------------

    def rref(self) -> tuple["RatMatrix", tuple[int, ...], int]:
        """Reduced row echelon form; returns (rref, pivot columns, rank)."""
        data = [row[:] for row in self.data]
        pivots = _rref_inplace(data, self.cols)
        return RatMatrix(self.rows, self.cols, data), tuple(pivots), len(pivots)

    def rank(self) -> int:
        data = [row[:] for row in self.data]
        return len(_rref_inplace(data, self.cols))

    def kernel_basis(self) -> list[list[Fraction]]:
        """Basis of the right null space, one vector per free column."""
        data = [row[:] for row in self.data]
        pivots = _rref_inplace(data, self.cols)
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [_ZERO] * self.cols
            v[f] = _ONE
            for i, p in enumerate(pivots):
                v[p] = -data[i][f]
            basis.append(v)
        return basis

    def solve(self, b: Sequence) -> list[Fraction] | None:
        """One solution of self @ x = b, or None when inconsistent."""
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        sol = self.solve_matrix(RatMatrix.from_columns([b], rows=self.rows))
        return sol.column(0) if sol is not None else None

    def solve_matrix(self, rhs: "RatMatrix") -> "RatMatrix | None":
        """Solve self @ X = rhs columnwise; None when any column is inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("right-hand side row mismatch")
        n, m, k = self.rows, self.cols, rhs.cols
        data = [self.data[i][:] + rhs.data[i][:] for i in range(n)]
        pivots = _rref_inplace(data, m + k)
        if any(p >= m for p in pivots):
            return None
        out = RatMatrix.zeros(m, k)
        for i, p in enumerate(pivots):
            out.data[p] = data[i][m:]
        return out

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        data = [row[:] for row in self.data]
        n = self.rows
        sign = 1
        acc = _ONE
        for col in range(n):
            piv = None
            for i in range(col, n):
                if data[i][col]:
                    piv = i
                    break
            if piv is None:
                return _ZERO
            if piv != col:
                data[col], data[piv] = data[piv], data[col]
                sign = -sign
            pval = data[col][col]
            acc *= pval
            inv = _ONE / pval
            prow = data[col]
            for i in range(col + 1, n):
                f = data[i][col]
                if f:
                    f *= inv
                    row = data[i]
                    for j in range(col, n):
                        if prow[j]:
                            row[j] = row[j] - f * prow[j]
        return acc if sign > 0 else -acc

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        inv = self.solve_matrix(RatMatrix.identity(self.rows))
        if inv is None:
            raise ValueError("matrix is singular")
        return inv


def _rref_inplace(data: list[list[Fraction]], cols: int) -> list[int]:
    """Reduce rows in place; returns pivot column indices."""
    pivots: list[int] = []
    nrows = len(data)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, nrows):
            if data[i][c]:
                piv = i
                break
        if piv is None:
            continue
        data[r], data[piv] = data[piv], data[r]
        prow = data[r]
        pval = prow[c]
        if pval != 1:
            inv = _ONE / pval
            for j in range(c, cols):
                if prow[j]:
                    prow[j] *= inv
        for i in range(nrows):
            if i != r:
                f = data[i][c]
                if f:
                    row = data[i]
                    for j in range(c, cols):
                        if prow[j]:
                            row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


# -- subspace helpers ---------------------------------------------------
#
# Subspaces of Q^n are passed around as lists of length-n vectors.  The
# helpers below are the plumbing used to restrict, quotient and pull back
# module actions.


def span_basis(vectors: Iterable[Sequence], dim: int) -> list[list[Fraction]]:
    """Reduced echelon basis of the span of the given vectors."""
    rows = [[_fr(x) for x in v] for v in vectors]
    if not rows:
        return []
    _rref_inplace(rows, dim)
    return [row for row in rows if any(row)]


def preimage_basis(m: RatMatrix, span: list[Sequence]) -> list[list[Fraction]]:
    """Basis of { v : m @ v lies in the span of the given vectors }."""
    aug = RatMatrix(
        m.rows,
        m.cols + len(span),
        [m.data[i][:] + [_fr(span[k][i]) for k in range(len(span))] for i in range(m.rows)],
    )
    sols = aug.kernel_basis()
    return span_basis([v[: m.cols] for v in sols], m.cols)


def annihilator_basis(vectors: list[Sequence], dim: int) -> list[list[Fraction]]:
    """Basis of the functionals (as vectors) vanishing on all given vectors."""
    if not vectors:
        return [e for e in RatMatrix.identity(dim).data]
    return RatMatrix.from_rows(vectors).kernel_basis()


def quotient_maps(sub_basis: list[Sequence], dim: int) -> tuple[RatMatrix, RatMatrix]:
    """Projection/lift pair for Q^dim modulo a subspace.

    Returns (proj, lift) with proj of shape q x dim, lift of shape dim x q,
    proj @ lift = identity, and kernel(proj) exactly the subspace.
    """
    basis = span_basis(sub_basis, dim)
    pivots = []
    for row in basis:
        for j, x in enumerate(row):
            if x:
                pivots.append(j)
                break
    pivot_set = set(pivots)
    free = [j for j in range(dim) if j not in pivot_set]
    q = len(free)
    proj = RatMatrix.zeros(q, dim)
    for qi, j in enumerate(free):
        proj.data[qi][j] = _ONE
        for bi, p in enumerate(pivots):
            proj.data[qi][p] = -basis[bi][j]
    lift = RatMatrix.zeros(dim, q)
    for qi, j in enumerate(free):
        lift.data[j][qi] = _ONE
    return proj, lift


def restrict_to_invariant(m: RatMatrix, basis: list[Sequence]) -> RatMatrix:
    """Matrix of m on an invariant subspace, in the given basis coordinates."""
    if not basis:
        return RatMatrix.zeros(0, 0)
    bmat = RatMatrix.from_columns(basis)
    sol = bmat.solve_matrix(m @ bmat)
    if sol is None:
        raise ValueError("subspace is not invariant under the map")
    return sol


def express_in_basis(vectors: list[Sequence], basis: list[Sequence], dim: int) -> RatMatrix:
    """Coordinates of each vector in the given basis; raises if outside the span."""
    bmat = RatMatrix.from_columns(basis, rows=dim)
    vmat = RatMatrix.from_columns(vectors, rows=dim)
    sol = bmat.solve_matrix(vmat)
    if sol is None:
        raise ValueError("vector outside the spanning set")
    return sol
