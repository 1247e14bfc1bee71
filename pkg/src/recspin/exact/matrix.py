"""Dense matrices and canonical subspaces over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .._tracking import public_op
from .scalar import ONE, ZERO, GaussianRational

__all__ = [
    "MatrixGR",
    "SubspaceGR",
    "Vector",
    "as_scalar",
    "rref",
    "kernel",
    "intersect",
    "span",
]

Vector = tuple  # tuple[GaussianRational, ...]


def as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def _vec(xs: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in xs)


@dataclass(frozen=True)
class MatrixGR:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} does not match shape {self.rows}x{self.cols}"
            )

    # -- construction ----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> MatrixGR:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_scalar(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> MatrixGR:
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> MatrixGR:
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> MatrixGR:
        return cls.scalar(n, ONE)

    @classmethod
    def scalar(cls, n: int, c) -> MatrixGR:
        c = as_scalar(c)
        return cls(n, n, tuple(c if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> MatrixGR:
        n = len(values)
        vals = _vec(values)
        return cls(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    # -- access ----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols]

    def row_list(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_real(self) -> bool:
        return all(x.is_real() for x in self.entries)

    def trace(self) -> GaussianRational:
        t = ZERO
        for i in range(min(self.rows, self.cols)):
            t = t + self.entries[i * self.cols + i]
        return t

    # -- arithmetic ------------------------------------------------------
    def _check_same(self, other: MatrixGR):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: MatrixGR) -> MatrixGR:
        self._check_same(other)
        return MatrixGR(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: MatrixGR) -> MatrixGR:
        self._check_same(other)
        return MatrixGR(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> MatrixGR:
        return MatrixGR(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> MatrixGR:
        c = as_scalar(c)
        if not c:
            return MatrixGR.zeros(self.rows, self.cols)
        return MatrixGR(self.rows, self.cols, tuple(c * a if a else ZERO for a in self.entries))

    def __mul__(self, c) -> MatrixGR:
        if isinstance(c, MatrixGR):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, MatrixGR):
            return self.matmul(other)
        return self.apply(other)

    def matmul(self, other: MatrixGR) -> MatrixGR:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a = self.entries
        b_rows = [
            [(j, y) for j, y in enumerate(other.entries[t * m : (t + 1) * m]) if y]
            for t in range(k)
        ]
        out = []
        for i in range(n):
            acc = [ZERO] * m
            for t in range(k):
                x = a[i * k + t]
                if not x:
                    continue
                for j, y in b_rows[t]:
                    acc[j] = acc[j] + x * y
            out.extend(acc)
        return MatrixGR(n, m, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        v = _vec(v)
        nz = [(j, x) for j, x in enumerate(v) if x]
        out = []
        c = self.cols
        e = self.entries
        for i in range(self.rows):
            acc = ZERO
            base = i * c
            for j, x in nz:
                y = e[base + j]
                if y:
                    acc = acc + y * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> MatrixGR:
        return MatrixGR(self.cols, self.rows, tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def conj_transpose(self) -> MatrixGR:
        return MatrixGR(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j].conjugate() for j in range(self.cols) for i in range(self.rows)),
        )

    def conjugate(self) -> MatrixGR:
        return MatrixGR(self.rows, self.cols, tuple(a.conjugate() for a in self.entries))

    def kron(self, other: MatrixGR) -> MatrixGR:
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [ZERO] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other.entries[k * other.cols + l]
                        if b:
                            out[(i * other.rows + k) * c + j * other.cols + l] = a * b
        return MatrixGR(r, c, tuple(out))

    def commutator(self, other: MatrixGR) -> MatrixGR:
        return self.matmul(other) - other.matmul(self)

    def anticommutator(self, other: MatrixGR) -> MatrixGR:
        return self.matmul(other) + other.matmul(self)

    def power(self, k: int) -> MatrixGR:
        result = MatrixGR.identity(self.rows)
        for _ in range(k):
            result = result.matmul(self)
        return result

    def restrict(self, sub: SubspaceGR) -> MatrixGR:
        """Matrix of this map on an invariant subspace, in the subspace's RREF basis.

        Raises ``ValueError`` if ``sub`` is not invariant.
        """
        cols = []
        for b in sub.basis:
            img = self.apply(b)
            coords = sub.coordinates(img)
            if coords is None:
                raise ValueError("subspace is not invariant under the matrix")
            cols.append(coords)
        return MatrixGR.from_columns(cols, rows=sub.dim) if cols else MatrixGR.zeros(0, 0)

    def flat(self) -> Vector:
        return self.entries

    def to_lists(self) -> list[list[str]]:
        return [[x.to_str() for x in self.row(i)] for i in range(self.rows)]

    def pretty(self) -> str:
        cells = [[x.pretty() for x in self.row(i)] for i in range(self.rows)]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


# ---------------------------------------------------------------------------
# elimination


def _rref_rows(rows: list[list[GaussianRational]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[c].inverse()
        if inv != ONE:
            prow = [x * inv if x else ZERO for x in prow]
            rows[r] = prow
        nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if not f:
                continue
            row = rows[i]
            for j, y in nz:
                row[j] = row[j] - f * y
        pivots.append(c)
        r += 1
    return pivots


@public_op("exact_core.rref")
def rref(M: MatrixGR) -> tuple[MatrixGR, int]:
    """Unique reduced row-echelon form of ``M`` and its rank."""
    rows = M.row_list()
    pivots = _rref_rows(rows, M.cols)
    return MatrixGR.from_rows(rows, M.cols) if rows else M, len(pivots)


def rank(M: MatrixGR) -> int:
    return rref(M)[1]


@dataclass(frozen=True)
class SubspaceGR:
    """A subspace of Q(i)^n held by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple  # tuple of row vectors, RREF

    @classmethod
    def zero(cls, n: int) -> SubspaceGR:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> SubspaceGR:
        return cls(n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for b in self.basis:
            for j, x in enumerate(b):
                if x:
                    out.append(j)
                    break
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.basis

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in the RREF basis, or ``None`` if ``v`` lies outside."""
        v = _vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector dimension mismatch")
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, b in zip(coords, self.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        residual[j] = residual[j] - c * x
        if any(residual):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: SubspaceGR) -> bool:
        return all(self.contains(b) for b in other.basis)

    def combine(self, coords: Sequence) -> Vector:
        out = [ZERO] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            c = as_scalar(c)
            if c:
                for j, x in enumerate(b):
                    if x:
                        out[j] = out[j] + c * x
        return tuple(out)

    def image(self, M: MatrixGR) -> SubspaceGR:
        return span([M.apply(b) for b in self.basis], M.rows)

    def is_invariant(self, M: MatrixGR) -> bool:
        return all(self.contains(M.apply(b)) for b in self.basis)

    def as_matrix(self) -> MatrixGR:
        return MatrixGR.from_rows(self.basis, self.ambient_dim) if self.basis else MatrixGR.zeros(0, self.ambient_dim)

    def sort_key(self):
        return (self.dim, tuple(tuple(x.sort_key() for x in b) for b in self.basis))

    def to_lists(self) -> list[list[str]]:
        return [[x.to_str() for x in b] for b in self.basis]


def span(vectors: Iterable[Sequence], ambient_dim: int) -> SubspaceGR:
    rows = [list(_vec(v)) for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise ValueError("vector dimension mismatch")
    pivots = _rref_rows(rows, ambient_dim)
    return SubspaceGR(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))


def _kernel_from_rows(rows: list[list[GaussianRational]], ncols: int) -> SubspaceGR:
    pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            x = rows[r][f]
            if x:
                v[p] = -x
        basis.append(v)
    # already canonical up to ordering; re-reduce to guarantee RREF
    return span(basis, ncols)


@public_op("exact_core.kernel")
def kernel(M: MatrixGR) -> SubspaceGR:
    """Canonical basis of {v : Mv = 0}."""
    return _kernel_from_rows(M.row_list(), M.cols)


def stacked_kernel(mats: Sequence[MatrixGR], ncols: int) -> SubspaceGR:
    rows = []
    for m in mats:
        if m.cols != ncols:
            raise ValueError("dimension mismatch")
        for i in range(m.rows):
            r = m.row(i)
            if any(r):
                rows.append(list(r))
    return _kernel_from_rows(rows, ncols)


def annihilator(sub: SubspaceGR) -> SubspaceGR:
    """Bilinear annihilator {w : sum_j w_j v_j = 0 for all v in sub}."""
    return _kernel_from_rows([list(b) for b in sub.basis], sub.ambient_dim)


@public_op("exact_core.intersect")
def intersect(A: SubspaceGR, B: SubspaceGR) -> SubspaceGR:
    """Canonical basis of A ∩ B."""
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient mismatch {A.ambient_dim} vs {B.ambient_dim}")
    n = A.ambient_dim
    if A.is_zero() or B.is_zero():
        return SubspaceGR.zero(n)
    eqs = annihilator(B).basis  # B = {v : w.v = 0 for w in eqs}
    if not eqs:
        return A
    # a in coordinates of A: sum_t a_t (w . A_t) = 0
    rows = []
    for w in eqs:
        row = []
        for b in A.basis:
            acc = ZERO
            for x, y in zip(w, b):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        rows.append(row)
    coeffs = _kernel_from_rows(rows, A.dim)
    return span([A.combine(c) for c in coeffs.basis], n)


def sum_spaces(A: SubspaceGR, B: SubspaceGR) -> SubspaceGR:
    if A.ambient_dim != B.ambient_dim:
        raise ValueError("ambient mismatch")
    return span(list(A.basis) + list(B.basis), A.ambient_dim)


def solve(M: MatrixGR, b: Sequence) -> Vector | None:
    """One solution x of Mx = b (free variables zero), or ``None``."""
    b = _vec(b)
    if len(b) != M.rows:
        raise ValueError("rhs dimension mismatch")
    rows = [list(M.row(i)) + [b[i]] for i in range(M.rows)]
    pivots = _rref_rows(rows, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [ZERO] * M.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][M.cols]
    return tuple(x)
