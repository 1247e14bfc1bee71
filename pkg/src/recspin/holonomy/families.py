"""Constructors for the holonomy algebras admitting invariant spinor lines.

Coordinates: the standard complex structure pairs ``(e_{2i-1}, e_{2i})`` with
``J e_{2i-1} = e_{2i}``; timelike pairs come first.  The second complex
structure used for ``sp`` acts on blocks ``(a, b, c, d)`` of four consecutive
frame vectors by ``a -> c, c -> -a, b -> -d, d -> b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .._tracking import public_op
from ..clifford import Signature, witt_frame
from ..exact import ONE, ZERO, MatrixGR, kernel, span
from ..exact.matrix import as_scalar
from . import calibrations
from .so import LieAlgebraRep, SoElement, coords_in, derived_algebra, lie_closure_check, pairs

__all__ = [
    "standard_complex_structure",
    "quaternionic_pair",
    "unitary_family",
    "form_stabilizer",
    "SimParams",
    "sim_algebra",
    "sim_element",
    "neutral_algebra",
    "neutral_element",
    "witt_blocks",
]


def _basis_matrices(sig: Signature) -> list[SoElement]:
    out = []
    for i, j in pairs(sig.n):
        table = [[ZERO] * sig.n for _ in range(sig.n)]
        table[i][j] = ONE
        out.append(SoElement.from_bivector(sig, table))
    return out


def _solve_in_so(sig: Signature, constraint: Callable[[MatrixGR], list]) -> list[tuple]:
    """Basis (RREF coordinates) of {A in so(r,s) : constraint(A) = 0}; constraint is linear."""
    basis = _basis_matrices(sig)
    cols = [list(constraint(b.matrix)) for b in basis]
    if not cols:
        return []
    neq = len(cols[0])
    if neq == 0:
        return [b.coords() for b in basis]
    M = MatrixGR.from_columns(cols, rows=neq)
    return list(kernel(M).basis)


def standard_complex_structure(sig: Signature) -> MatrixGR:
    if sig.n % 2 or sig.r % 2:
        raise ValueError(f"complex structure needs even r and s, got {sig}")
    n = sig.n
    J = [[ZERO] * n for _ in range(n)]
    for t in range(0, n, 2):
        J[t + 1][t] = ONE
        J[t][t + 1] = -ONE
    return MatrixGR.from_rows(J, n)


def quaternionic_pair(sig: Signature) -> tuple[MatrixGR, MatrixGR]:
    if sig.n % 4 or sig.r % 4:
        raise ValueError(f"quaternionic structure needs r, s divisible by 4, got {sig}")
    n = sig.n
    J2 = [[ZERO] * n for _ in range(n)]
    for t in range(0, n, 4):
        a, b, c, d = t, t + 1, t + 2, t + 3
        J2[c][a] = ONE
        J2[a][c] = -ONE
        J2[d][b] = -ONE
        J2[b][d] = ONE
    return standard_complex_structure(sig), MatrixGR.from_rows(J2, n)


@public_op("holonomy.unitary_family")
def unitary_family(kind: str, p: int, q: int) -> LieAlgebraRep:
    """u(p,q), su(p,q) in so(2p,2q) or sp(p,q) in so(4p,4q), as centralizers."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError(f"need p, q >= 0 with p + q >= 1, got ({p},{q})")
    if kind in ("u", "su"):
        sig = Signature(2 * p, 2 * q)
        J = standard_complex_structure(sig)

        def constraint(A: MatrixGR) -> list:
            eqs = list(A.commutator(J).entries)
            if kind == "su":
                eqs.append(J.matmul(A).trace())
            return eqs

        m = p + q
        expected = m * m if kind == "u" else m * m - 1
    elif kind == "sp":
        sig = Signature(4 * p, 4 * q)
        J1, J2 = quaternionic_pair(sig)

        def constraint(A: MatrixGR) -> list:
            return list(A.commutator(J1).entries) + list(A.commutator(J2).entries)

        k = p + q
        expected = k * (2 * k + 1)
    else:
        raise ValueError(f"unknown unitary kind {kind!r}")
    vecs = _solve_in_so(sig, constraint)
    if len(vecs) != expected:
        raise AssertionError(f"{kind}({p},{q}) has dimension {len(vecs)}, expected {expected}")
    g = LieAlgebraRep.from_coords(f"{kind}({p},{q})", sig, vecs, {"kind": kind, "p": p, "q": q})
    return g


# ---------------------------------------------------------------------------
# form stabilizers


def _sort_sign(idx: Sequence[int]):
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for a in range(len(idx)):
        for b in range(len(idx) - 1 - a):
            if idx[b] > idx[b + 1]:
                idx[b], idx[b + 1] = idx[b + 1], idx[b]
                sign = -sign
    return sign, tuple(idx)


def form_action(A: MatrixGR, form: dict) -> dict:
    """Natural action of an endomorphism on a k-form given as {sorted index tuple: coeff}.

    ``A . e^i = -sum_j A[i][j] e^j`` extended as a derivation.
    """
    out: dict = {}
    n = A.rows
    for idx, c in form.items():
        c = as_scalar(c)
        if not c:
            continue
        for slot, i in enumerate(idx):
            for j in range(n):
                a = A[i, j]
                if not a:
                    continue
                new = list(idx)
                new[slot] = j
                sign, key = _sort_sign(new)
                if not sign:
                    continue
                val = -(a * c) if sign > 0 else a * c
                out[key] = out.get(key, ZERO) + val
    return {k: v for k, v in out.items() if v}


@public_op("holonomy.form_stabilizer")
def form_stabilizer(sig: Signature, form) -> LieAlgebraRep:
    """{A in so(r,s) : A . form = 0}.

    ``form`` is a built-in calibration name (``g2``, ``g2split``, ``spin7``,
    ``spin34``) or a dict mapping sorted 0-based index tuples to coefficients.
    """
    name = "stab"
    expected = None
    if isinstance(form, str):
        spec = calibrations.BUILTIN.get(form)
        if spec is None:
            raise ValueError(f"unknown calibration {form!r}")
        if spec.signature != sig:
            raise ValueError(f"calibration {form} lives on {spec.signature}, not {sig}")
        name, expected, form = spec.name, spec.expected_dim, spec.form
    degree = {len(k) for k in form}
    if len(degree) > 1:
        raise ValueError("form mixes degrees")
    keys = sorted({k for k in _all_k_subsets(sig.n, degree.pop() if degree else 0)})

    def constraint(A: MatrixGR) -> list:
        act = form_action(A, form)
        return [act.get(k, ZERO) for k in keys]

    vecs = _solve_in_so(sig, constraint) if form else [b.coords() for b in _basis_matrices(sig)]
    meta = {"kind": "form_stabilizer", "form": calibrations.form_label(form), "expected_dim": expected}
    meta["degenerate"] = expected is not None and len(vecs) > expected
    return LieAlgebraRep.from_coords(name, sig, vecs, meta)


def _all_k_subsets(n: int, k: int):
    from itertools import combinations

    return combinations(range(n), k)


# ---------------------------------------------------------------------------
# sim(n) in so(1, n+1)


@dataclass(frozen=True)
class SimParams:
    """Parameters of a subalgebra of sim(n).

    ``phi`` lists the values of the type-3 functional on ``h.generators``;
    ``psi`` lists, per generator, a vector in R^(n-m) for type 4.  Left as
    ``None`` they are chosen canonically among maps vanishing on [h, h].
    """

    type: int
    h: LieAlgebraRep
    phi: tuple | None = None
    m: int | None = None
    psi: tuple | None = None


def sim_element(sig: Signature, a, A: SoElement | None, X: Sequence) -> SoElement:
    """Bivector -a p^q + A - p^X in the rational Witt frame of signature (1, n+1).

    ``A`` lives in so(n) on the spacelike e_3..e_{n+2}; ``X`` has n entries.
    """
    frame = witt_frame(sig, "lorentz")
    n = sig.n - 2
    a = as_scalar(a)
    out = SoElement.wedge(sig, frame.p, frame.q).scale(-a)
    if A is not None:
        out = out + A.embed(sig, 2)
    x_full = [ZERO, ZERO] + [as_scalar(x) for x in X]
    if len(X) != n:
        raise ValueError("X must have n entries")
    out = out + SoElement.wedge(sig, frame.p, x_full).scale(-ONE)
    return out


def _functionals_killing_derived(h: LieAlgebraRep) -> list[tuple]:
    """Basis of linear maps h -> R (as values on generators) vanishing on [h,h]."""
    d = len(h.generators)
    if d == 0:
        return []
    dh = derived_algebra(h)
    rows = []
    for el in dh.generators:
        c = coords_in(h, el)
        if c is None:
            raise ValueError(f"{h.name} is not closed under brackets")
        rows.append(list(c))
    if not rows:
        return [tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)]
    return list(kernel(MatrixGR.from_rows(rows, d)).basis)


def _vanishes_on_derived(h: LieAlgebraRep, values: Sequence) -> bool:
    dh = derived_algebra(h)
    for el in dh.generators:
        c = coords_in(h, el)
        if c is None:
            return False
        acc = ZERO
        for x, y in zip(c, values):
            acc = acc + x * as_scalar(y)
        if acc:
            return False
    return True


@public_op("holonomy.sim_algebra")
def sim_algebra(params: SimParams, n: int) -> LieAlgebraRep:
    """Types 1-4 of the indecomposable Lorentzian holonomy algebras inside sim(n).

    ``h`` is given on signature (0, n_h) and placed on the first n_h of the
    spacelike vectors e_3..e_{n+2} of signature (1, n+1).
    """
    h = params.h
    t = params.type
    if t not in (1, 2, 3, 4):
        raise ValueError(f"sim type must be 1..4, got {t}")
    if h.signature.r != 0:
        raise ValueError("h must be a subalgebra of a Euclidean so(n_h)")
    nh = h.signature.n if h.generators or h.signature.n else 0
    if nh > n:
        raise ValueError(f"h acts on R^{nh}, which does not fit in R^{n}")
    sig = Signature(1, n + 1)
    target = Signature(0, n)
    A_list = [g.embed(target, 0) for g in h.generators]
    zero_n = [ZERO] * n
    gens: list[SoElement] = []
    meta = {"kind": "sim", "type": t, "h": h.name, "n": n}

    def unit(i):
        return [ONE if j == i else ZERO for j in range(n)]

    if t == 1:
        gens.append(sim_element(sig, ONE, None, zero_n))
        gens += [sim_element(sig, ZERO, A, zero_n) for A in A_list]
        gens += [sim_element(sig, ZERO, None, unit(i)) for i in range(n)]
    elif t == 2:
        gens += [sim_element(sig, ZERO, A, zero_n) for A in A_list]
        gens += [sim_element(sig, ZERO, None, unit(i)) for i in range(n)]
    elif t == 3:
        phi = params.phi
        if phi is None:
            cands = _functionals_killing_derived(h)
            if not cands:
                raise ValueError(f"type 3 needs a nonzero functional on {h.name} vanishing on [h,h]")
            phi = cands[0]
        phi = tuple(as_scalar(x) for x in phi)
        if len(phi) != h.dim:
            raise ValueError("phi must give one value per generator of h")
        if not any(phi):
            raise ValueError("type 3 needs phi != 0")
        if not _vanishes_on_derived(h, phi):
            raise ValueError("phi must vanish on [h,h]")
        meta["phi"] = [x.to_str() for x in phi]
        gens += [sim_element(sig, f, A, zero_n) for f, A in zip(phi, A_list)]
        gens += [sim_element(sig, ZERO, None, unit(i)) for i in range(n)]
    else:
        m = params.m
        if m is None or not 0 < m < n:
            raise ValueError(f"type 4 needs 0 < m < n, got m={m}, n={n}")
        if nh > m:
            raise ValueError(f"type 4 needs h inside so(m), but h acts on R^{nh}")
        psi = params.psi
        if psi is None:
            cands = _functionals_killing_derived(h)
            if len(cands) < n - m:
                raise ValueError(f"type 4 needs dim z(h) >= n - m = {n - m}")
            psi = tuple(tuple(cands[c][g] for c in range(n - m)) for g in range(h.dim))
        psi = tuple(tuple(as_scalar(x) for x in row) for row in psi)
        if len(psi) != h.dim or any(len(row) != n - m for row in psi):
            raise ValueError("psi must give one R^(n-m) vector per generator of h")
        if span(psi, n - m).dim != n - m:
            raise ValueError("psi must be surjective")
        for c in range(n - m):
            if not _vanishes_on_derived(h, [row[c] for row in psi]):
                raise ValueError("psi must vanish on [h,h]")
        meta["m"] = m
        meta["psi"] = [[x.to_str() for x in row] for row in psi]
        meta["psi_note"] = "X-component is -p~^psi(A) with p~ = sqrt(2) p; relative to p the map is sqrt(2)*psi"
        for A, row in zip(A_list, psi):
            gens.append(sim_element(sig, ZERO, A, [ZERO] * m + list(row)))
        gens += [sim_element(sig, ZERO, None, unit(i)) for i in range(m)]
    name = f"sim{t}[{h.name}]"
    g = LieAlgebraRep(name, sig, tuple(gens), meta)
    ok, wit = lie_closure_check(g)
    if not ok:
        raise AssertionError(f"{name} is not closed: {wit}")
    return g


# ---------------------------------------------------------------------------
# neutral signature


def neutral_element(n: int, B) -> SoElement:
    """The element diag(B, -B^T) w.r.t. the neutral Witt frame: sum -B_ik e_i ^ e*_k."""
    sig = Signature(n, n)
    frame = witt_frame(sig, "neutral")
    out = SoElement.from_coords(sig, [ZERO] * len(pairs(2 * n)))
    for i in range(n):
        for k in range(n):
            b = B[i, k] if isinstance(B, MatrixGR) else as_scalar(B[i][k])
            if b:
                out = out + SoElement.wedge(sig, frame.e[i], frame.e_star[k]).scale(-b)
    return out


def witt_blocks(el: SoElement) -> tuple[MatrixGR, MatrixGR, MatrixGR, MatrixGR]:
    """Blocks of ``el`` in the neutral Witt basis (e_1..e_n, e*_1..e*_n): (WW, W*W, WW*, W*W*)."""
    sig = el.signature
    n = sig.r
    frame = witt_frame(sig, "neutral")
    basis = list(frame.e) + list(frame.e_star)
    P = MatrixGR.from_columns(basis)
    from ..exact import solve

    cols = []
    for b in basis:
        img = el.matrix.apply(b)
        x = solve(P, img)
        cols.append(x)
    M = MatrixGR.from_columns(cols)

    def block(r0, c0):
        return MatrixGR.from_rows([[M[r0 + i, c0 + j] for j in range(n)] for i in range(n)], n)

    return block(0, 0), block(n, 0), block(0, n), block(n, n)


@public_op("holonomy.neutral_algebra")
def neutral_algebra(kind: str, n: int) -> LieAlgebraRep:
    """gl(n,R) or sl(n,R) acting as diag(B, -B^T) on W + W* in so(n,n)."""
    if n < 1:
        raise ValueError("n must be positive")
    units = []
    if kind == "gl":
        for i in range(n):
            for k in range(n):
                units.append({(i, k): ONE})
    elif kind == "sl":
        for i in range(n):
            for k in range(n):
                if i != k:
                    units.append({(i, k): ONE})
        for i in range(n - 1):
            units.append({(i, i): ONE, (i + 1, i + 1): -ONE})
    else:
        raise ValueError(f"neutral kind must be gl or sl, got {kind!r}")
    gens = []
    Bs = []
    for u in units:
        B = [[u.get((i, k), ZERO) for k in range(n)] for i in range(n)]
        Bs.append(B)
        gens.append(neutral_element(n, B))
    meta = {"kind": f"neutral-{kind}", "n": n, "B": [[[x.to_str() for x in r] for r in B] for B in Bs]}
    return LieAlgebraRep(f"{kind}({n},R)", Signature(n, n), tuple(gens), meta)
