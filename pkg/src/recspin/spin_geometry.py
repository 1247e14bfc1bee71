"""Hermitian product, Dirac current, the T/E spaces, Kähler-form spectra and
the neutral-signature action formula, all on the spinor module.

The Hermitian product is ``<u, v> = (beta u)^H v`` with ``beta = Id`` in
definite signature and ``beta = Phi(e_1)`` when r = 1.  Only the properties
checked in :func:`hermitian_form` are relied upon downstream.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._tracking import public_op
from .clifford import CliffordRep, Signature, WittFrame, two_form_action, vector_action
from .exact import I, ZERO, GaussianRational, MatrixGR, SubspaceGR, char_poly, gaussian_roots, kernel, solve
from .exact.matrix import as_scalar
from .holonomy import lambda_star, neutral_element, so_basis

__all__ = [
    "HermitianForm",
    "DiracCurrent",
    "ComplexStructureResult",
    "KahlerSpectrum",
    "NeutralAction",
    "hermitian_form",
    "dirac_current",
    "t_space",
    "induced_complex_structure",
    "kahler_spectrum",
    "neutral_action",
    "complex_structure_form",
]


def _pair(beta: MatrixGR, u: Sequence, v: Sequence) -> GaussianRational:
    bu = beta.apply(u)
    acc = ZERO
    for a, b in zip(bu, v):
        if a and b:
            acc = acc + a.conjugate() * b
    return acc


@dataclass(frozen=True)
class HermitianForm:
    signature: Signature
    beta: MatrixGR
    kappa: int | None = None  # <X u, v> = kappa <u, X v>; None when r = 0

    def pair(self, u: Sequence, v: Sequence) -> GaussianRational:
        return _pair(self.beta, u, v)


@public_op("spin_geometry.hermitian_form")
def hermitian_form(rep: CliffordRep) -> HermitianForm:
    """Spin-invariant Hermitian product, verified exactly on construction."""
    sig = rep.signature
    if sig.r == 0:
        beta = MatrixGR.identity(rep.dim_delta)
    elif sig.r == 1:
        beta = rep.generators[0]
    else:
        raise ValueError(f"Hermitian form for r >= 2 is not supported (signature {sig})")
    if beta.conj_transpose() != beta:
        raise AssertionError("beta is not Hermitian")
    for A in so_basis(sig).generators:
        L = lambda_star(rep, A, "half")
        if not (L.conj_transpose().matmul(beta) + beta.matmul(L)).is_zero():
            raise AssertionError(f"form is not spin-invariant under {A.label()}")
    kappa = None
    if sig.r == 1:
        # X^H beta = kappa beta X for every frame vector X
        for X in rep.generators:
            lhs = X.conj_transpose().matmul(beta)
            rhs = beta.matmul(X)
            if lhs == rhs:
                k = 1
            elif lhs == -rhs:
                k = -1
            else:
                raise AssertionError("vectors are neither self- nor anti-self-adjoint")
            if kappa is None:
                kappa = k
            elif kappa != k:
                raise AssertionError("self-adjointness sign differs between frame vectors")
    return HermitianForm(sig, beta, kappa)


@dataclass(frozen=True)
class DiracCurrent:
    signature: Signature
    components: tuple  # Fractions over the orthonormal frame

    def norm(self) -> Fraction:
        return sum((k * c * c for k, c in zip(self.signature.k, self.components)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.components)

    def proportional_to(self, v: Sequence) -> bool:
        """True when the current is a real multiple of ``v`` (zero included)."""
        v = [Fraction(as_scalar(x).real) for x in v]
        piv = next(i for i, x in enumerate(v) if x)
        c = self.components[piv] / v[piv]
        return all(a == c * b for a, b in zip(self.components, v))


@public_op("spin_geometry.dirac_current")
def dirac_current(rep: CliffordRep, form: HermitianForm, s: Sequence) -> DiracCurrent:
    """p with g(p, X) = -<X.s, s>, i.e. p_i = -k_i <e_i.s, s>."""
    s = [as_scalar(x) for x in s]
    if len(s) != rep.dim_delta:
        raise ValueError("spinor has the wrong length")
    comps = []
    for k, X in zip(rep.signature.k, rep.generators):
        val = form.pair(X.apply(s), s)
        if not val.is_real():
            raise AssertionError(f"<X.s, s> is not real: {val}")
        comps.append(-k * val.real)
    return DiracCurrent(rep.signature, tuple(comps))


def _columns(rep: CliffordRep, s: Sequence) -> list[tuple]:
    return [X.apply(s) for X in rep.generators]


def _realify(cols: list[tuple]) -> MatrixGR:
    """Real 2N x n matrix of real and imaginary parts of the given complex columns."""
    N = len(cols[0]) if cols else 0
    rows = []
    for a in range(N):
        rows.append([GaussianRational(c[a].real) for c in cols])
    for a in range(N):
        rows.append([GaussianRational(c[a].imag) for c in cols])
    return MatrixGR.from_rows(rows, len(cols))


def _realify_vec(v: Sequence) -> list:
    return [GaussianRational(x.real) for x in v] + [GaussianRational(x.imag) for x in v]


@public_op("spin_geometry.t_space")
def t_space(rep: CliffordRep, s: Sequence) -> SubspaceGR:
    """Real vectors X with X.s = 0."""
    s = [as_scalar(x) for x in s]
    return kernel(_realify(_columns(rep, s)))


@dataclass(frozen=True)
class ComplexStructureResult:
    ok: bool
    reason: str | None
    matrix: MatrixGR | None
    witness: dict = field(default_factory=dict, compare=False)


@public_op("spin_geometry.induced_complex_structure")
def induced_complex_structure(rep: CliffordRep, s: Sequence) -> ComplexStructureResult:
    """Solve X.s = i I(X).s column by column over the reals."""
    s = [as_scalar(x) for x in s]
    cols = _columns(rep, s)
    M = _realify(cols)
    T = kernel(M)
    if not T.is_zero():
        return ComplexStructureResult(False, "T_nonzero", None, {"t_dim": T.dim})
    images = []
    for j, c in enumerate(cols):
        rhs = _realify_vec([-I * x for x in c])
        y = solve(M, rhs)
        if y is None:
            return ComplexStructureResult(False, "E_not_full", None, {"column": j})
        images.append(y)
    Imat = MatrixGR.from_columns(images, rep.n)
    if Imat.matmul(Imat) != -MatrixGR.identity(rep.n):
        raise AssertionError("induced I does not square to -Id")
    return ComplexStructureResult(True, None, Imat)


def _validate_complex_structure(sig: Signature, J: MatrixGR):
    n = sig.n
    if J.shape != (n, n):
        raise ValueError("J has the wrong shape")
    if J.matmul(J) != -MatrixGR.identity(n):
        raise ValueError("J does not square to -Id")
    G = MatrixGR.diag(sig.k)
    if not (J.transpose().matmul(G) + G.matmul(J)).is_zero():
        raise ValueError("J is not g-skew")


def complex_structure_form(sig: Signature, J: MatrixGR) -> MatrixGR:
    """Antisymmetric table omega_ij = g(J e_i, e_j)."""
    _validate_complex_structure(sig, J)
    k = sig.k
    n = sig.n
    rows = [[J[j, i] * k[j] for j in range(n)] for i in range(n)]
    return MatrixGR.from_rows(rows, n)


@dataclass(frozen=True)
class KahlerSpectrum:
    m: int
    table: tuple  # ((eigenvalue, multiplicity), ...) sorted by imaginary part, descending
    omega: MatrixGR  # Clifford action of the Kähler form
    eigenspaces: tuple = field(compare=False)  # ((eigenvalue, SubspaceGR), ...)

    def as_dict(self) -> dict:
        return {lam.to_str(): mult for lam, mult in self.table}


@public_op("spin_geometry.kahler_spectrum")
def kahler_spectrum(rep: CliffordRep, J: MatrixGR) -> KahlerSpectrum:
    """Exact spectrum of Clifford multiplication by the Kähler form of J."""
    sig = rep.signature
    if sig.r % 2 or sig.s % 2:
        raise ValueError(f"Kähler spectrum needs r, s even, got {sig}")
    omega = complex_structure_form(sig, J)
    W = two_form_action(rep, omega)
    roots, residual = gaussian_roots(char_poly(W))
    if residual.degree > 0:
        raise AssertionError(f"Kähler form has non-Gaussian eigenvalues: {residual}")
    counts = Counter(roots)
    order = sorted(counts, key=lambda z: (-z.imag, -z.real))
    spaces = []
    for lam in order:
        E = kernel(W - MatrixGR.scalar(W.rows, lam))
        if E.dim != counts[lam]:
            raise AssertionError("Kähler form action is not diagonalizable")
        spaces.append((lam, E))
    return KahlerSpectrum(sig.n // 2, tuple((lam, counts[lam]) for lam in order), W, tuple(spaces))


@dataclass(frozen=True)
class AffineMatch:
    alpha: GaussianRational | None  # None when direct is itself scalar, so alpha is free
    beta: GaussianRational

    def to_json(self) -> dict:
        return {"alpha": None if self.alpha is None else self.alpha.to_str(), "beta": self.beta.to_str()}


@dataclass(frozen=True)
class NeutralAction:
    formula: MatrixGR
    direct: dict  # normalization -> MatrixGR
    affine: dict  # normalization -> AffineMatch | None


def _affine_match(F: MatrixGR, D: MatrixGR) -> AffineMatch | None:
    N = F.rows
    Id = MatrixGR.identity(N)
    scalar_D = D.is_zero() or (D[0, 0] != 0 and D == MatrixGR.scalar(N, D[0, 0]))
    if scalar_D:
        # alpha is not determined; F must itself be scalar
        if F == MatrixGR.scalar(N, F[0, 0]):
            return AffineMatch(None, F[0, 0])
        return None
    M = MatrixGR.from_columns([D.entries, Id.entries], N * N)
    sol = solve(M, F.entries)
    if sol is None:
        return None
    return AffineMatch(sol[0], sol[1])


@public_op("spin_geometry.neutral_action")
def neutral_action(rep: CliffordRep, witt: WittFrame, B) -> NeutralAction:
    """The displayed neutral-signature operator against lambda_* of diag(B, -B^T).

    formula = n/2 Id + 1/4 sum_i (e*_i . A(e_i) - A(e*_i) . e_i)
    """
    sig = rep.signature
    n = sig.r
    if witt.kind != "neutral" or witt.signature != sig:
        raise ValueError("neutral_action needs the neutral Witt frame of the same signature")
    A = neutral_element(n, B)
    N = rep.dim_delta
    acc = MatrixGR.scalar(N, GaussianRational(Fraction(n, 2)))
    quarter = GaussianRational(Fraction(1, 4))
    for e, es in zip(witt.e, witt.e_star):
        Ae = A.matrix.apply(e)
        Aes = A.matrix.apply(es)
        term = vector_action(rep, es).matmul(vector_action(rep, Ae)) - vector_action(rep, Aes).matmul(
            vector_action(rep, e)
        )
        acc = acc + term.scale(quarter)
    direct = {norm: lambda_star(rep, A, norm) for norm in ("half", "paper")}
    affine = {norm: _affine_match(acc, D) for norm, D in direct.items()}
    return NeutralAction(acc, direct, affine)
