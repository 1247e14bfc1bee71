"""Complex spinor representations of Clifford algebras of signature (r, s).

Generators are built as tensor products of the 2x2 matrices

    E = id,  T = [[0, -i], [i, 0]],  U = diag(i, -i),  V = [[0, i], [i, 0]]

with ``Phi(e_{2k-1}) = tau E x .. x E x U x T x .. x T`` and the same with
``V`` for ``e_{2k}`` (``k - 1`` trailing ``T`` factors, ``tau = i`` on timelike
directions).  For odd ``n`` the last generator is ``-i tau T x .. x T``.

Spinor basis vectors ``u(eps_k, .., eps_1)`` use the unnormalized
``u(eps) = (1, -eps i)``; every statement made here is about lines, kernels
and eigenvalues, so the dropped ``sqrt(2)/2`` does not matter.

Note on the 2x2 identities: ``T u(eps) = -eps u(eps)`` and
``V u(eps) = eps u(-eps)``.  A second identity sometimes written for ``T``
with ``u(-eps)`` on the right is wrong for ``T`` and right for ``V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ._tracking import public_op
from .exact import I, ONE, ZERO, GaussianRational, MatrixGR, SubspaceGR, kernel, span
from .exact.matrix import as_scalar

__all__ = [
    "Signature",
    "CliffordRep",
    "SpinorIndex",
    "WittFrame",
    "E2",
    "T2",
    "U2",
    "V2",
    "build_rep",
    "vector_action",
    "two_form_action",
    "half_spinor_split",
    "witt_frame",
    "lorentz_split",
    "u_vector",
    "spinor_basis_vector",
    "lift_lorentz",
]

E2 = MatrixGR.identity(2)
T2 = MatrixGR.from_rows([[0, -I], [I, 0]])
U2 = MatrixGR.from_rows([[I, 0], [0, -I]])
V2 = MatrixGR.from_rows([[0, I], [I, 0]])


@dataclass(frozen=True)
class Signature:
    """``r`` timelike directions followed by ``s`` spacelike ones."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.r + self.s < 1:
            raise ValueError(f"invalid signature ({self.r},{self.s})")

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def k(self) -> tuple[int, ...]:
        return tuple(-1 if i < self.r else 1 for i in range(self.n))

    def metric(self, x: Sequence, y: Sequence) -> GaussianRational:
        """g(x, y) for coordinate vectors over the orthonormal frame (bilinear)."""
        if len(x) != self.n or len(y) != self.n:
            raise ValueError("vector length does not match signature")
        acc = ZERO
        for ki, a, b in zip(self.k, x, y):
            a, b = as_scalar(a), as_scalar(b)
            if a and b:
                acc = acc + (a * b if ki > 0 else -(a * b))
        return acc

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if j == i else ZERO for j in range(self.n))

    @classmethod
    def parse(cls, text: str) -> Signature:
        try:
            r, s = (int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"signature must look like 'r,s', got {text!r}") from exc
        return cls(r, s)

    def __str__(self):
        return f"({self.r},{self.s})"


@dataclass(frozen=True)
class CliffordRep:
    signature: Signature
    dim_delta: int
    generators: tuple = field(compare=False)  # Phi(e_1), ..., Phi(e_n); fixed by the signature
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def slots(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class SpinorIndex:
    """Sign labels ``(eps_k, .., eps_1)``; position is big-endian with ``+1 -> 0``, ``-1 -> 1``."""

    epsilons: tuple

    @property
    def position(self) -> int:
        pos = 0
        for e in self.epsilons:
            pos = 2 * pos + (0 if e == 1 else 1)
        return pos

    @classmethod
    def from_position(cls, pos: int, slots: int) -> SpinorIndex:
        eps = []
        for _ in range(slots):
            eps.append(1 if pos % 2 == 0 else -1)
            pos //= 2
        return cls(tuple(reversed(eps)))

    @property
    def sign_product(self) -> int:
        out = 1
        for e in self.epsilons:
            out *= e
        return out


@dataclass(frozen=True)
class WittFrame:
    """Isotropic frame vectors as coordinates over the orthonormal frame.

    lorentz: ``vectors = (p, q)``; neutral: ``vectors = (e_1..e_n, e*_1..e*_n)``.
    """

    kind: str
    signature: Signature
    vectors: tuple

    @property
    def p(self):
        return self.vectors[0]

    @property
    def q(self):
        return self.vectors[1]

    @property
    def e(self) -> tuple:
        return self.vectors[: len(self.vectors) // 2]

    @property
    def e_star(self) -> tuple:
        return self.vectors[len(self.vectors) // 2 :]


def _kron_all(factors: Sequence[MatrixGR]) -> MatrixGR:
    out = MatrixGR.identity(1)
    for f in factors:
        out = out.kron(f)
    return out


@public_op("clifford.build_rep")
@lru_cache(maxsize=None)
def build_rep(sig: Signature) -> CliffordRep:
    """Generators Phi(e_1), .., Phi(e_n) acting on C^(2^floor(n/2))."""
    n = sig.n
    slots = n // 2
    tau = [I if i < sig.r else ONE for i in range(n)]
    gens = []
    for i in range(2 * slots):
        k = i // 2 + 1
        core = U2 if i % 2 == 0 else V2
        factors = [E2] * (slots - k) + [core] + [T2] * (k - 1)
        gens.append(_kron_all(factors).scale(tau[i]))
    meta = {"odd_component": None}
    if n % 2 == 1:
        last = _kron_all([T2] * slots).scale(-I * tau[n - 1])
        gens.append(last)
        meta["odd_component"] = "second: Phi(e_n) = -i*tau_n T x .. x T"
    return CliffordRep(sig, 2**slots, tuple(gens), meta)


@lru_cache(maxsize=None)
def pair_products(rep: CliffordRep) -> dict:
    """Cache of Phi(e_i) Phi(e_j) for i < j."""
    g = rep.generators
    return {(i, j): g[i].matmul(g[j]) for i in range(rep.n) for j in range(i + 1, rep.n)}


@public_op("clifford.vector_action")
def vector_action(rep: CliffordRep, x: Sequence) -> MatrixGR:
    """Clifford multiplication by the vector sum_i x_i e_i."""
    if len(x) != rep.n:
        raise ValueError(f"vector of length {len(x)} for signature {rep.signature}")
    return _lincomb(rep.dim_delta, zip(x, rep.generators))


def _lincomb(N: int, terms) -> MatrixGR:
    """sum c * M over (c, M) pairs, skipping zero coefficients and entries."""
    acc = [ZERO] * (N * N)
    for c, M in terms:
        c = as_scalar(c)
        if not c:
            continue
        for idx, y in enumerate(M.entries):
            if y:
                acc[idx] = acc[idx] + c * y
    return MatrixGR(N, N, tuple(acc))


def _omega_entry(omega, i: int, j: int) -> GaussianRational:
    if isinstance(omega, MatrixGR):
        return omega[i, j]
    return as_scalar(omega[i][j])


@public_op("clifford.two_form_action")
def two_form_action(rep: CliffordRep, omega) -> MatrixGR:
    """sum_{i<j} omega_ij Phi(e_i) Phi(e_j); no 1/2 factor.

    ``omega`` is an antisymmetric n x n table (MatrixGR or nested sequences);
    only the strict upper triangle is read.
    """
    prods = pair_products(rep)
    return _lincomb(rep.dim_delta, ((_omega_entry(omega, i, j), P) for (i, j), P in prods.items()))


def u_vector(eps: int) -> tuple:
    return (ONE, -I if eps == 1 else I)


def spinor_basis_vector(rep: CliffordRep, epsilons: Sequence[int]) -> tuple:
    """Coordinates of u(eps_k) x .. x u(eps_1) in C^N."""
    if len(epsilons) != rep.slots:
        raise ValueError(f"expected {rep.slots} sign labels")
    vec = (ONE,)
    for e in epsilons:
        u = u_vector(e)
        vec = tuple(a * b for a in vec for b in u)
    return vec


def _all_labels(slots: int):
    for pos in range(2**slots):
        yield SpinorIndex.from_position(pos, slots)


@public_op("clifford.half_spinor_split")
def half_spinor_split(rep: CliffordRep) -> tuple[SubspaceGR, SubspaceGR]:
    """(Delta+, Delta-) spanned by basis spinors with sign product +1 / -1."""
    if rep.n % 2:
        raise ValueError("half-spinor split needs even n")
    plus, minus = [], []
    for idx in _all_labels(rep.slots):
        v = spinor_basis_vector(rep, idx.epsilons)
        (plus if idx.sign_product == 1 else minus).append(v)
    return span(plus, rep.dim_delta), span(minus, rep.dim_delta)


@public_op("clifford.witt_frame")
def witt_frame(sig: Signature, kind: str) -> WittFrame:
    """Rational isotropic frames.

    lorentz (r = 1): ``p = e_- + e_+``, ``q = (e_+ - e_-)/2`` with ``e_-`` the
    timelike vector and ``e_+`` the first spacelike one.
    neutral (r = s): ``e_i = f_{r+i} + f_i``, ``e*_i = (f_{r+i} - f_i)/2``.
    """
    n = sig.n
    half = GaussianRational(Fraction(1, 2))
    if kind == "lorentz":
        if sig.r != 1 or sig.s < 1:
            raise ValueError(f"lorentz Witt frame needs signature (1, s>=1), got {sig}")
        p = [ZERO] * n
        q = [ZERO] * n
        p[0], p[1] = ONE, ONE
        q[0], q[1] = -half, half
        return WittFrame("lorentz", sig, (tuple(p), tuple(q)))
    if kind == "neutral":
        if sig.r != sig.s:
            raise ValueError(f"neutral Witt frame needs r = s, got {sig}")
        m = sig.r
        es, stars = [], []
        for i in range(m):
            e = [ZERO] * n
            st = [ZERO] * n
            e[m + i], e[i] = ONE, ONE
            st[m + i], st[i] = half, -half
            es.append(tuple(e))
            stars.append(tuple(st))
        return WittFrame("neutral", sig, tuple(es) + tuple(stars))
    raise ValueError(f"unknown Witt frame kind {kind!r}")


@public_op("clifford.lorentz_split")
def lorentz_split(rep: CliffordRep) -> tuple[dict, SubspaceGR, SubspaceGR]:
    """Identify Delta_{1,n+1} = Delta_n x Delta_{1,1}.

    The pair (e_-, e_+) = (e_1, e_2) acts through U, V on the last tensor slot
    (label eps_1), and e_{i+2} acts as Phi_n(e_i) x T.  Returns the slot map and
    ``Delta_n x u(1)``, ``Delta_n x u(-1)``.  The kernel of Clifford
    multiplication by ``p`` is checked to be exactly the first of these.
    """
    sig = rep.signature
    if sig.r != 1 or sig.s < 1:
        raise ValueError(f"lorentz_split needs signature (1, n+1), got {sig}")
    plus, minus = [], []
    for idx in _all_labels(rep.slots):
        v = spinor_basis_vector(rep, idx.epsilons)
        (plus if idx.epsilons[-1] == 1 else minus).append(v)
    sub_plus = span(plus, rep.dim_delta)
    sub_minus = span(minus, rep.dim_delta)
    frame = witt_frame(sig, "lorentz")
    P = vector_action(rep, frame.p)
    if kernel(P) != sub_plus:
        raise AssertionError("kernel of p-multiplication is not Delta_n x u(1)")
    if sub_minus.image(P) != sub_plus:
        raise AssertionError("p-multiplication does not map Delta_n x u(-1) onto Delta_n x u(1)")
    slot_map = {
        "pair_slot": 1,
        "pair_vectors": [1, 2],
        "delta_n_slots": list(range(rep.slots, 1, -1)),
        "spacelike_offset": 2,
    }
    return slot_map, sub_plus, sub_minus


def lift_lorentz(w: Sequence, eps: int = 1) -> tuple:
    """w x u(eps) for w in Delta_n."""
    u = u_vector(eps)
    return tuple(as_scalar(a) * b for a in w for b in u)
