"""so(r,s) as bivectors, Lie algebra containers and the spin lift."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .._tracking import public_op
from ..clifford import CliffordRep, Signature, two_form_action
from ..exact import ONE, ZERO, GaussianRational, MatrixGR, SubspaceGR, solve, span
from ..exact.matrix import as_scalar

__all__ = [
    "SoElement",
    "LieAlgebraRep",
    "so_basis",
    "lambda_star",
    "derived_algebra",
    "lie_closure_check",
    "pairs",
    "coords_in",
]

HALF = GaussianRational(Fraction(1, 2))


def pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@dataclass(frozen=True)
class SoElement:
    """A g-skew endomorphism together with its bivector coefficients.

    ``(x ^ y) z = g(x, z) y - g(y, z) x``, so ``e_i ^ e_j`` sends ``e_i`` to
    ``k_i e_j`` and ``e_j`` to ``-k_j e_i``.
    """

    signature: Signature
    bivector: MatrixGR
    matrix: MatrixGR

    @classmethod
    def from_bivector(cls, sig: Signature, table) -> SoElement:
        n = sig.n
        k = sig.k
        om = [[ZERO] * n for _ in range(n)]
        M = [[ZERO] * n for _ in range(n)]
        for i, j in pairs(n):
            w = table[i, j] if isinstance(table, MatrixGR) else as_scalar(table[i][j])
            if not w:
                continue
            om[i][j] = w
            om[j][i] = -w
            M[j][i] = M[j][i] + (w if k[i] > 0 else -w)
            M[i][j] = M[i][j] - (w if k[j] > 0 else -w)
        return cls(sig, MatrixGR.from_rows(om, n), MatrixGR.from_rows(M, n))

    @classmethod
    def from_coords(cls, sig: Signature, coords: Sequence) -> SoElement:
        n = sig.n
        table = [[ZERO] * n for _ in range(n)]
        for (i, j), c in zip(pairs(n), coords):
            table[i][j] = as_scalar(c)
        return cls.from_bivector(sig, table)

    @classmethod
    def wedge(cls, sig: Signature, x: Sequence, y: Sequence) -> SoElement:
        x = [as_scalar(a) for a in x]
        y = [as_scalar(b) for b in y]
        n = sig.n
        table = [[ZERO] * n for _ in range(n)]
        for i, j in pairs(n):
            table[i][j] = x[i] * y[j] - x[j] * y[i]
        return cls.from_bivector(sig, table)

    @classmethod
    def from_matrix(cls, sig: Signature, M: MatrixGR) -> SoElement:
        if M.shape != (sig.n, sig.n):
            raise ValueError(f"matrix shape {M.shape} does not match signature {sig}")
        k = sig.k
        coords = [M[j, i] * k[i] for i, j in pairs(sig.n)]
        el = cls.from_coords(sig, coords)
        if el.matrix != M:
            raise ValueError("matrix is not g-skew for this signature")
        return el

    def coords(self) -> tuple:
        return tuple(self.bivector[i, j] for i, j in pairs(self.signature.n))

    def bracket(self, other: SoElement) -> SoElement:
        return SoElement.from_matrix(self.signature, self.matrix.commutator(other.matrix))

    def __add__(self, other: SoElement) -> SoElement:
        return SoElement.from_coords(self.signature, [a + b for a, b in zip(self.coords(), other.coords())])

    def scale(self, c) -> SoElement:
        c = as_scalar(c)
        return SoElement.from_coords(self.signature, [c * a for a in self.coords()])

    def is_zero(self) -> bool:
        return self.bivector.is_zero()

    def is_g_skew(self) -> bool:
        G = MatrixGR.diag(self.signature.k)
        GA = G.matmul(self.matrix)
        return (GA + GA.transpose()).is_zero()

    def embed(self, target: Signature, offset: int) -> SoElement:
        """Same bivector placed at indices ``offset..offset+n-1`` of ``target``."""
        n, N = self.signature.n, target.n
        if offset + n > N:
            raise ValueError("embedding does not fit")
        for i in range(n):
            if self.signature.k[i] != target.k[offset + i]:
                raise ValueError("embedding does not respect the metric")
        table = [[ZERO] * N for _ in range(N)]
        for i, j in pairs(n):
            table[offset + i][offset + j] = self.bivector[i, j]
        return SoElement.from_bivector(target, table)

    def label(self) -> str:
        terms = []
        for (i, j), c in zip(pairs(self.signature.n), self.coords()):
            if c:
                terms.append(f"{c.pretty()}*e{i + 1}^e{j + 1}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class LieAlgebraRep:
    name: str
    signature: Signature
    generators: tuple
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        vecs = [g.coords() for g in self.generators]
        nc = len(pairs(self.signature.n))
        if vecs and span(vecs, nc).dim != len(vecs):
            raise ValueError(f"generators of {self.name} are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.generators)

    def coord_space(self) -> SubspaceGR:
        return span([g.coords() for g in self.generators], len(pairs(self.signature.n)))

    @classmethod
    def from_coords(cls, name: str, sig: Signature, vectors, metadata=None) -> LieAlgebraRep:
        gens = tuple(SoElement.from_coords(sig, v) for v in vectors)
        return cls(name, sig, gens, dict(metadata or {}))


def _basis_table(n: int, i: int, j: int):
    table = [[ZERO] * n for _ in range(n)]
    table[i][j] = ONE
    return table


@public_op("holonomy.so_basis")
def so_basis(sig: Signature) -> LieAlgebraRep:
    """The bivectors e_i ^ e_j, i < j."""
    gens = tuple(SoElement.from_bivector(sig, _basis_table(sig.n, i, j)) for i, j in pairs(sig.n))
    return LieAlgebraRep(f"so({sig.r},{sig.s})", sig, gens, {"kind": "so"})


@public_op("holonomy.lambda_star")
def lambda_star(rep: CliffordRep, A: SoElement, normalization: str = "half") -> MatrixGR:
    """Spin lift of ``A``: sum omega_ij c e_i e_j with c = 1/2 (half) or 1 (paper).

    Only ``half`` is a Lie algebra homomorphism for the bivector convention
    used here; both give the same invariant subspaces.
    """
    if A.signature != rep.signature:
        raise ValueError(f"signature mismatch {A.signature} vs {rep.signature}")
    M = two_form_action(rep, A.bivector)
    if normalization == "half":
        return M.scale(HALF)
    if normalization == "paper":
        return M
    raise ValueError(f"normalization must be 'half' or 'paper', got {normalization!r}")


def coords_in(g: LieAlgebraRep, el: SoElement):
    """Coordinates of ``el`` with respect to ``g.generators``, or ``None``."""
    if not g.generators:
        return () if el.is_zero() else None
    M = MatrixGR.from_columns([x.coords() for x in g.generators])
    return solve(M, el.coords())


@public_op("holonomy.derived_algebra")
def derived_algebra(g: LieAlgebraRep) -> LieAlgebraRep:
    """[g, g] with a canonical (RREF) basis."""
    nc = len(pairs(g.signature.n))
    brackets = []
    gens = g.generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            brackets.append(gens[a].bracket(gens[b]).coords())
    sub = span(brackets, nc)
    return LieAlgebraRep.from_coords(f"[{g.name},{g.name}]", g.signature, sub.basis, {"derived_of": g.name})


def _residual(sub: SubspaceGR, v) -> tuple:
    out = list(v)
    for p, b in zip(sub.pivots, sub.basis):
        c = out[p]
        if c:
            for j, x in enumerate(b):
                if x:
                    out[j] = out[j] - c * x
    return tuple(out)


@public_op("holonomy.lie_closure_check")
def lie_closure_check(g: LieAlgebraRep) -> tuple[bool, dict | None]:
    """Whether every generator bracket stays in the span; witness on failure."""
    sub = g.coord_space()
    gens = g.generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            br = gens[a].bracket(gens[b])
            res = _residual(sub, br.coords())
            if any(res):
                return False, {
                    "pair": [a, b],
                    "bracket": br.label(),
                    "residual": SoElement.from_coords(g.signature, res).label(),
                }
    return True, None
