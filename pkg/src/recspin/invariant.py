"""One-dimensional invariant subspaces (with characters) of a Lie algebra of matrices.

A line spanned by ``v`` is invariant with character ``chi`` when
``A_j v = chi_j v`` for every generator.  Characters vanish on commutators,
so all such lines sit in the joint kernel ``K`` of ``D = span [A_i, A_j]``.
``D`` is an ideal, hence ``K`` is invariant, and the generators restricted to
``K`` commute; splitting ``K`` into joint eigenspaces of the restrictions
gives every invariant line whose character is Q(i)-valued.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ._tracking import public_op
from .exact import (
    ZERO,
    GaussianRational,
    MatrixGR,
    PolyGR,
    SubspaceGR,
    char_poly,
    gaussian_roots,
    kernel,
    span,
    stacked_kernel,
)
from .exact.matrix import as_scalar

__all__ = [
    "InvariantComponent",
    "LineReport",
    "NotClosedError",
    "joint_kernel",
    "invariant_lines",
    "line_count",
    "spinc_exists",
    "check_matrix_closure",
    "character_of",
]


class NotClosedError(ValueError):
    """The generator span is not closed under commutators."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class InvariantComponent:
    subspace: SubspaceGR
    character: tuple
    annihilated: bool
    isolated: bool

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def to_json(self) -> dict:
        return {
            "basis": self.subspace.to_lists(),
            "character": [c.to_str() for c in self.character],
            "annihilated": self.annihilated,
            "isolated": self.isolated,
        }


@dataclass(frozen=True)
class LineReport:
    components: tuple
    isolated_count: int
    family_count: int
    residual_factors: tuple = ()
    ambient_dim: int = 0
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self) -> dict:
        return {
            "components": [c.to_json() for c in self.components],
            "residual_factors": [p.to_lists() for p in self.residual_factors],
        }


def _infer_dim(mats: Sequence[MatrixGR], dim: int | None) -> int:
    if mats:
        N = mats[0].rows
        for m in mats:
            if m.shape != (N, N):
                raise ValueError(f"dimension mismatch: {m.shape} vs {(N, N)}")
        if dim is not None and dim != N:
            raise ValueError(f"dimension mismatch: matrices are {N}x{N}, dim={dim}")
        return N
    if dim is None:
        raise ValueError("ambient dimension required for an empty generator list")
    return dim


@public_op("invariant_solver.joint_kernel")
def joint_kernel(mats: Sequence[MatrixGR], dim: int | None = None) -> SubspaceGR:
    """Intersection of the kernels; the full space for an empty list."""
    N = _infer_dim(mats, dim)
    return stacked_kernel(list(mats), N)


def _unflatten(v, N: int) -> MatrixGR:
    return MatrixGR(N, N, tuple(v))


def check_matrix_closure(gens: Sequence[MatrixGR]) -> tuple[bool, dict | None, SubspaceGR]:
    """Closure of the complex span under commutators.

    Returns (closed, witness, span of all commutators as flattened matrices).
    """
    if not gens:
        return True, None, SubspaceGR.zero(0)
    N = gens[0].rows
    S = span([g.entries for g in gens], N * N)
    comms = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            c = gens[a].commutator(gens[b])
            if c.is_zero():
                continue
            if not S.contains(c.entries):
                return False, {"pair": [a, b]}, SubspaceGR.zero(N * N)
            comms.append(c.entries)
    return True, None, span(comms, N * N)


def _scalar_value(R: MatrixGR):
    """The scalar if R is a multiple of the identity, else None."""
    n = R.rows
    if n == 0:
        return ZERO
    lam = R[0, 0]
    for i in range(n):
        for j in range(n):
            x = R[i, j]
            if (i == j and x != lam) or (i != j and x):
                return None
    return lam


def _split(space: SubspaceGR, gens: Sequence[MatrixGR], j: int, residuals: list) -> list[SubspaceGR]:
    if space.is_zero():
        return []
    if j == len(gens):
        return [space]
    R = gens[j].restrict(space)
    if _scalar_value(R) is not None:
        return _split(space, gens, j + 1, residuals)
    roots, residual = gaussian_roots(char_poly(R))
    if residual.degree > 0:
        residuals.append(residual)
    out = []
    seen = []
    for lam in roots:
        if lam in seen:
            continue
        seen.append(lam)
        coords = kernel(R - MatrixGR.scalar(R.rows, lam))
        eig = span([space.combine(c) for c in coords.basis], space.ambient_dim)
        out.extend(_split(eig, gens, j + 1, residuals))
    return out


def character_of(gens: Sequence[MatrixGR], sub: SubspaceGR) -> tuple:
    """Scalars chi_j with A_j v = chi_j v on ``sub``; raises if any generator is not scalar there."""
    b0 = sub.basis[0]
    piv = sub.pivots[0]
    chars = []
    for A in gens:
        chi = A.apply(b0)[piv] / b0[piv]
        for b in sub.basis:
            img = A.apply(b)
            if any(x - chi * y for x, y in zip(img, b)):
                raise AssertionError("generator does not act by a scalar on the component")
        chars.append(chi)
    return tuple(chars)


def _dedupe_polys(polys: list[PolyGR]) -> tuple:
    out = []
    keys = set()
    for p in polys:
        k = tuple(p.to_lists())
        if k not in keys:
            keys.add(k)
            out.append(p)
    return tuple(sorted(out, key=lambda p: (p.degree, tuple(c.sort_key() for c in p.coefficients))))


def _make_report(components: list[InvariantComponent], residuals, N: int, meta=None) -> LineReport:
    comps = tuple(sorted(components, key=lambda c: c.subspace.sort_key()))
    iso = sum(1 for c in comps if c.isolated)
    return LineReport(comps, iso, len(comps) - iso, _dedupe_polys(list(residuals)), N, dict(meta or {}))


@public_op("invariant_solver.invariant_lines")
def invariant_lines(gens: Sequence[MatrixGR], dim: int | None = None) -> LineReport:
    """All joint eigenspaces of the algebra spanned by ``gens`` (see module docstring)."""
    gens = list(gens)
    N = _infer_dim(gens, dim)
    closed, witness, D = check_matrix_closure(gens)
    if not closed:
        raise NotClosedError("generators are not closed under commutators", witness)
    K = stacked_kernel([_unflatten(v, N) for v in D.basis], N)
    residuals: list = []
    leaves = _split(K, gens, 0, residuals)
    comps = []
    for leaf in leaves:
        chi = character_of(gens, leaf)
        comps.append(InvariantComponent(leaf, chi, not any(chi), leaf.dim == 1))
    return _make_report(comps, residuals, N, {"derived_kernel_dim": K.dim})


@public_op("invariant_solver.line_count")
def line_count(report: LineReport) -> tuple[int, int, int]:
    """(isolated lines, projective families, annihilated isolated lines)."""
    iso = sum(1 for c in report.components if c.isolated)
    fam = sum(1 for c in report.components if not c.isolated)
    ann = sum(1 for c in report.components if c.isolated and c.annihilated)
    return iso, fam, ann


@public_op("invariant_solver.spinc_exists")
def spinc_exists(pairs: Sequence[tuple[MatrixGR, object]], dim: int | None = None) -> tuple[bool, SubspaceGR]:
    """Joint solutions of A v = i t v over the given (A, t) pairs."""
    mats = [A for A, _ in pairs]
    N = _infer_dim(mats, dim)
    shifted = []
    for A, t in pairs:
        it = GaussianRational(0, 1) * as_scalar(t)
        shifted.append(A - MatrixGR.scalar(N, it))
    sub = stacked_kernel(shifted, N)
    return not sub.is_zero(), sub
