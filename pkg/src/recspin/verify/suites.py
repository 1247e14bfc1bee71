"""Executable claim suites and the report they produce.

Every claim is a pure function of the suite options; randomness comes from a
``random.Random`` seeded with ``"<seed>:<claim family>"`` so that adding a
claim never shifts the samples drawn by another.
"""

from __future__ import annotations

import contextlib
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .._tracking import PUBLIC_OPS, public_op, record_calls
from ..clifford import (
    E2,
    T2,
    U2,
    V2,
    Signature,
    build_rep,
    half_spinor_split,
    lorentz_split,
    two_form_action,
    u_vector,
    vector_action,
    witt_frame,
)
from ..exact import ONE, ZERO, GaussianRational, MatrixGR, SubspaceGR, gr, intersect, kernel, rref, span
from ..holonomy import (
    SimParams,
    SoElement,
    derived_algebra,
    form_stabilizer,
    lambda_star,
    lie_closure_check,
    neutral_algebra,
    neutral_element,
    sim_algebra,
    so_basis,
    standard_complex_structure,
    unitary_family,
    witt_blocks,
)
from ..holonomy.calibrations import BUILTIN
from ..invariant import character_of, invariant_lines, joint_kernel, line_count, spinc_exists
from ..spin_geometry import (
    dirac_current,
    hermitian_form,
    induced_complex_structure,
    kahler_spectrum,
    neutral_action,
    t_space,
)
from .oracle import brute_force_lines

__all__ = ["SUITES", "SuiteSpec", "Claim", "Report", "run_suite", "algebra_lines"]

SUITES = ("clifford", "riemannian", "lorentzian", "kahler", "neutral", "spinc")
MAX_N_CAP = 16


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    normalization: str = "half"
    max_n: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.name not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.name!r}; choose one of {', '.join(SUITES + ('all',))}")
        if self.normalization not in ("half", "paper"):
            raise ValueError(f"normalization must be half or paper, got {self.normalization!r}")
        if not 1 <= self.max_n <= MAX_N_CAP:
            raise ValueError(f"max_n must lie in 1..{MAX_N_CAP}")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    anchor: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim_id": self.claim_id, "anchor": self.anchor, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class Report:
    suite: str
    seed: int
    normalization: str
    max_n: int
    claims: tuple
    elapsed: float = field(default=0.0, compare=False)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self, include_elapsed: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "normalization": self.normalization,
            "max_n": self.max_n,
            "overall": self.overall,
            "claims": [c.to_json() for c in self.claims],
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def dumps(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_json(include_elapsed), indent=2, sort_keys=True) + "\n"

    def to_text(self, include_elapsed: bool = False) -> str:
        lines = [f"suite {self.suite} (seed {self.seed}, normalization {self.normalization}, max_n {self.max_n})"]
        for c in self.claims:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.claim_id}  -- {c.anchor}")
        n_pass = sum(c.passed for c in self.claims)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} ({n_pass}/{len(self.claims)} claims)")
        if include_elapsed:
            lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _rng(spec: SuiteSpec, family: str) -> random.Random:
    return random.Random(f"{spec.seed}:{family}")


def _rand_gr(rng: random.Random, bound: int = 5) -> GaussianRational:
    return gr(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))


def _rand_spinor(rng: random.Random, N: int) -> tuple:
    return tuple(_rand_gr(rng) for _ in range(N))


def _signatures(max_n: int):
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            yield Signature(r, n - r)


def algebra_lines(g, normalization: str = "half"):
    rep = build_rep(g.signature)
    return invariant_lines([lambda_star(rep, A, normalization) for A in g.generators], rep.dim_delta)


def _s(x) -> str:
    return x.to_str() if isinstance(x, GaussianRational) else str(x)


def _sub_json(sub: SubspaceGR) -> list:
    return sub.to_lists()


def _counts_json(report) -> dict:
    iso, fam, ann = line_count(report)
    return {"isolated": iso, "families": fam, "annihilated_isolated": ann, "component_dims": [c.dim for c in report.components]}


# ---------------------------------------------------------------------------
# clifford suite (construction, lambda_*, constructors)


def _clifford_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    max_n = spec.max_n

    bad = []
    count = 0
    for sig in _signatures(max_n):
        rep = build_rep(sig)
        g = rep.generators
        N = rep.dim_delta
        count += 1
        for i in range(sig.n):
            for j in range(i, sig.n):
                ac = g[i].anticommutator(g[j])
                want = MatrixGR.scalar(N, -2 * sig.k[i]) if i == j else MatrixGR.zeros(N)
                if ac != want:
                    bad.append({"signature": [sig.r, sig.s], "pair": [i + 1, j + 1]})
    out.append(Claim("clifford.relations", "Clifford relations e_i e_j + e_j e_i = -2 g_ij for the tensor-product generators",
                     not bad, {"signatures_checked": count, "max_n": max_n, "failures": bad[:5]}))

    singular = []
    inv_n = min(max_n, 9)
    for sig in _signatures(inv_n):
        rep = build_rep(sig)
        for i, X in enumerate(rep.generators):
            if rref(X)[1] != rep.dim_delta:
                singular.append({"signature": [sig.r, sig.s], "generator": i + 1})
    out.append(Claim("clifford.invertible", "every generator acts on the spinor module as an isomorphism",
                     not singular, {"max_n": inv_n, "singular": singular}))

    ident = {}
    for eps in (1, -1):
        u, um = u_vector(eps), u_vector(-eps)
        ident[f"T u({eps:+d}) = {-eps:+d} u({eps:+d})"] = T2.apply(u) == tuple(-eps * x for x in u)
        ident[f"V u({eps:+d}) = {eps:+d} u({-eps:+d})"] = V2.apply(u) == tuple(eps * x for x in um)
        ident[f"U u({eps:+d}) = i u({-eps:+d})"] = U2.apply(u) == tuple(GaussianRational(0, 1) * x for x in um)
    t_variant = any(T2.apply(u_vector(e)) == tuple(e * x for x in u_vector(-e)) for e in (1, -1))
    ok = all(ident.values()) and T2.matmul(T2) == E2 and U2.matmul(V2) == T2.scale(GaussianRational(0, -1))
    out.append(Claim("clifford.spinor_identities", "2x2 identities for T, U, V on u(eps); the T-with-u(-eps) variant holds for V only",
                     ok and not t_variant, {"identities": ident, "T u(eps) = eps u(-eps) holds": t_variant}))

    odd = {}
    for sig in (Signature(0, 3), Signature(1, 2), Signature(0, 5)):
        rep = build_rep(sig)
        slots = rep.slots
        first = MatrixGR.identity(1)
        for _ in range(slots):
            first = first.kron(T2)
        tau = GaussianRational(0, 1) if sig.n <= sig.r else ONE
        first = first.scale(tau)
        sq = first.matmul(first)
        want = MatrixGR.scalar(rep.dim_delta, -sig.k[-1])
        odd[str(sig)] = {
            "first_component_square_ok": sq == want,
            "chosen": rep.metadata["odd_component"],
            "chosen_square_ok": rep.generators[-1].matmul(rep.generators[-1]) == want,
        }
    out.append(Claim("clifford.odd_component", "odd n: the component used for Phi(e_n) satisfies the Clifford relation",
                     all(v["chosen_square_ok"] for v in odd.values()), odd))

    split_bad = []
    split_n = min(max_n, 8)
    for sig in _signatures(split_n):
        if sig.n % 2:
            continue
        rep = build_rep(sig)
        plus, minus = half_spinor_split(rep)
        half = rep.dim_delta // 2
        if plus.dim != half or minus.dim != half:
            split_bad.append({"signature": [sig.r, sig.s], "dims": [plus.dim, minus.dim]})
            continue
        for X in rep.generators:
            if plus.image(X) != minus or minus.image(X) != plus:
                split_bad.append({"signature": [sig.r, sig.s], "issue": "vector does not swap halves"})
        for A in so_basis(sig).generators:
            L = lambda_star(rep, A, spec.normalization)
            if not (plus.is_invariant(L) and minus.is_invariant(L)):
                split_bad.append({"signature": [sig.r, sig.s], "issue": f"{A.label()} mixes halves"})
    out.append(Claim("clifford.half_spinors", "even n: the spinor module splits into two halves preserved by so(r,s)",
                     not split_bad, {"max_n": split_n, "failures": split_bad[:5]}))

    wbad = []
    for s in range(1, 6):
        sig = Signature(1, s)
        f = witt_frame(sig, "lorentz")
        if not (sig.metric(f.p, f.p) == 0 and sig.metric(f.q, f.q) == 0 and sig.metric(f.p, f.q) == 1):
            wbad.append(str(sig))
    for m in range(1, 5):
        sig = Signature(m, m)
        f = witt_frame(sig, "neutral")
        for i in range(m):
            for j in range(m):
                if sig.metric(f.e[i], f.e[j]) != 0 or sig.metric(f.e_star[i], f.e_star[j]) != 0:
                    wbad.append(f"{sig} isotropy")
                if sig.metric(f.e[i], f.e_star[j]) != (1 if i == j else 0):
                    wbad.append(f"{sig} pairing")
    out.append(Claim("clifford.witt_frames", "rational isotropic frames with g(p,q) = 1 and g(e_i, e*_j) = delta_ij",
                     not wbad, {"failures": wbad}))

    lbad = {}
    for s in (1, 3, 5, 7):
        sig = Signature(1, s)
        if sig.n > max_n:
            continue
        rep = build_rep(sig)
        try:
            slot_map, plus, minus = lorentz_split(rep)
        except AssertionError as exc:
            lbad[str(sig)] = str(exc)
            continue
        frame = witt_frame(sig, "lorentz")
        P = vector_action(rep, frame.p)
        if not P.matmul(P).is_zero() or rref(P)[1] != rep.dim_delta // 2:
            lbad[str(sig)] = "p-multiplication not square-zero of half rank"
        for i in range(2, sig.n):
            e = [ZERO] * sig.n
            e[i] = ONE
            W = two_form_action(rep, SoElement.wedge(sig, e, frame.p).bivector)
            if any(any(W.apply(b)) for b in plus.basis):
                lbad[str(sig)] = f"e_{i + 1} ^ p does not kill Delta_n x u(1)"
    out.append(Claim("clifford.lorentz_split", "Delta_(1,n+1) = Delta_n x Delta_(1,1): p kills exactly Delta_n x u(1)",
                     not lbad, {"failures": lbad, "slot_map": lorentz_split(build_rep(Signature(1, 3)))[0]}))

    # lambda_*
    hom_n = min(max_n, 8)
    hom_bad = []
    for sig in _signatures(hom_n):
        rep = build_rep(sig)
        basis = so_basis(sig).generators
        lam = [lambda_star(rep, A, "half") for A in basis]
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                lhs = lambda_star(rep, basis[a].bracket(basis[b]), "half")
                if lhs != lam[a].commutator(lam[b]):
                    hom_bad.append({"signature": [sig.r, sig.s], "pair": [basis[a].label(), basis[b].label()]})
    out.append(Claim("holonomy.lambda_half_homomorphism", "lambda_* with the 1/2 factor is a Lie algebra homomorphism",
                     not hom_bad, {"max_n": hom_n, "failures": hom_bad[:5]}))

    sig = Signature(0, 3)
    rep = build_rep(sig)
    A, B = so_basis(sig).generators[0], so_basis(sig).generators[2]
    lp = lambda_star(rep, A.bracket(B), "paper")
    cp = lambda_star(rep, A, "paper").commutator(lambda_star(rep, B, "paper"))
    factor_ok = cp == lp.scale(2) and cp != lp
    all_factor = True
    for sg in _signatures(min(max_n, 6)):
        rp = build_rep(sg)
        bs = so_basis(sg).generators
        for a in range(len(bs)):
            for b in range(a + 1, len(bs)):
                c = lambda_star(rp, bs[a], "paper").commutator(lambda_star(rp, bs[b], "paper"))
                if c != lambda_star(rp, bs[a].bracket(bs[b]), "paper").scale(2):
                    all_factor = False
    out.append(Claim("holonomy.lambda_paper_factor_two", "lambda_*(x^y) = x.y without 1/2 misses the homomorphism property by a factor 2",
                     factor_ok and all_factor,
                     {"signature": [0, 3], "pair": [A.label(), B.label()], "commutator_equals_2x_lift": cp == lp.scale(2),
                      "commutator_equals_lift": cp == lp, "factor_two_on_all_pairs_n_le_6": all_factor}))

    dims = {}
    closed = {}
    algs = []
    for kind, p, q in (("u", 0, 1), ("u", 0, 2), ("su", 0, 2), ("u", 1, 1), ("su", 1, 1), ("u", 0, 3), ("su", 0, 3),
                       ("sp", 0, 1), ("sp", 1, 0), ("sp", 0, 2)):
        algs.append(unitary_family(kind, p, q))
    for name in ("g2", "g2split", "spin7", "spin34"):
        f = BUILTIN[name]
        algs.append(form_stabilizer(f.signature, name))
    for n in (1, 2, 3):
        algs.append(neutral_algebra("gl", n))
        algs.append(neutral_algebra("sl", n))
    algs.append(sim_algebra(SimParams(3, unitary_family("u", 0, 1), phi=(ONE,)), 2))
    algs.append(sim_algebra(SimParams(2, unitary_family("su", 0, 2)), 4))
    algs.append(sim_algebra(SimParams(1, so_basis(Signature(0, 1))), 1))
    expected = {"u(0,1)": 1, "u(0,2)": 4, "su(0,2)": 3, "u(1,1)": 4, "su(1,1)": 3, "u(0,3)": 9, "su(0,3)": 8,
                "sp(0,1)": 3, "sp(1,0)": 3, "sp(0,2)": 10, "G2": 14, "G2*(2)": 14, "spin(7)": 21, "spin(3,4)": 21,
                "gl(1,R)": 1, "sl(1,R)": 0, "gl(2,R)": 4, "sl(2,R)": 3, "gl(3,R)": 9, "sl(3,R)": 8,
                "sim3[u(0,1)]": 3, "sim2[su(0,2)]": 7, "sim1[so(0,1)]": 2}
    for g in algs:
        dims[g.name] = g.dim
        ok, wit = lie_closure_check(g)
        closed[g.name] = ok if ok else wit
    dim_ok = all(dims[k] == v for k, v in expected.items())
    out.append(Claim("holonomy.constructor_dimensions", "constructed holonomy algebras have the classical dimensions and close under brackets",
                     dim_ok and all(v is True for v in closed.values()), {"dims": dims, "closed": closed}))

    u2 = unitary_family("u", 0, 2)
    su2 = unitary_family("su", 0, 2)
    du = derived_algebra(u2)
    dsu = derived_algebra(su2)
    same = du.coord_space() == su2.coord_space() and dsu.coord_space() == su2.coord_space()
    ab = derived_algebra(unitary_family("u", 0, 1))
    bad_pair = type(u2)("pair", Signature(0, 3), tuple(so_basis(Signature(0, 3)).generators[i] for i in (0, 2)))
    nc_ok, nc_wit = lie_closure_check(bad_pair)
    out.append(Claim("holonomy.derived_and_closure", "[u(2),u(2)] = su(2), su(2) is perfect, and non-closed sets are caught",
                     same and ab.dim == 0 and not nc_ok,
                     {"dim_derived_u2": du.dim, "dim_derived_su2": dsu.dim, "abelian_derived_dim": ab.dim, "non_closed_witness": nc_wit}))

    wb_bad = []
    for n in (1, 2, 3):
        for g in (neutral_algebra("gl", n),):
            for el, B in zip(g.generators, g.metadata["B"]):
                WW, WsW, WWs, WsWs = witt_blocks(el)
                Bm = MatrixGR.from_rows([[GaussianRational.parse(x) for x in row] for row in B], n)
                if WW != Bm or not WsW.is_zero() or not WWs.is_zero() or WsWs != -Bm.transpose():
                    wb_bad.append({"n": n, "B": B})
    out.append(Claim("holonomy.neutral_blocks", "neutral generators act as diag(B, -B^T) on W + W*",
                     not wb_bad, {"failures": wb_bad}))
    return out


# ---------------------------------------------------------------------------
# riemannian suite


def _riemannian_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    norm = spec.normalization
    for m in (2, 3, 4):
        rep_u = algebra_lines(unitary_family("u", 0, m), norm)
        iso, fam, ann = line_count(rep_u)
        nonann = all(not c.annihilated for c in rep_u.components)
        out.append(Claim(f"riemannian.u_lines.m{m}", "u(m) preserves exactly two spinor lines, neither annihilated",
                         iso == 2 and fam == 0 and nonann,
                         {**_counts_json(rep_u), "characters": [[_s(x) for x in c.character] for c in rep_u.components]}))
        rep_su = algebra_lines(unitary_family("su", 0, m), norm)
        iso, fam, ann = line_count(rep_su)
        fams = [c for c in rep_su.components if not c.isolated]
        ok = iso == 0 and fam == 1 and fams[0].dim == 2 and fams[0].annihilated
        out.append(Claim(f"riemannian.su_family.m{m}", "su(m) annihilates a 2-dimensional space: one projective family",
                         ok, _counts_json(rep_su)))

    for name, n_delta_half in (("g2", False), ("spin7", True)):
        f = BUILTIN[name]
        g = form_stabilizer(f.signature, name)
        r = algebra_lines(g, norm)
        iso, fam, ann = line_count(r)
        wit = {"stabilizer_dim": g.dim, **_counts_json(r)}
        ok = g.dim == f.expected_dim and len(r.components) == 1 and ann == 1
        if n_delta_half and r.components:
            plus, minus = half_spinor_split(build_rep(f.signature))
            sub = r.components[0].subspace
            wit["half"] = "plus" if plus.contains_subspace(sub) else ("minus" if minus.contains_subspace(sub) else "neither")
            ok = ok and wit["half"] != "neither"
        out.append(Claim(f"riemannian.{name}", f"the {f.name} stabilizer annihilates exactly one spinor line", ok, wit))

    r = algebra_lines(unitary_family("sp", 0, 1), norm)
    ann = [c.dim for c in r.components if c.annihilated]
    out.append(Claim("riemannian.sp1", "sp(1) in so(4) annihilates a space of dimension at least 2",
                     bool(ann) and max(ann) >= 2, _counts_json(r)))

    rep4 = build_rep(Signature(0, 4))
    K = joint_kernel([lambda_star(rep4, A, norm) for A in unitary_family("su", 0, 2).generators])
    out.append(Claim("riemannian.su2_joint_kernel", "the joint kernel of su(2) on Delta_4 is 2-dimensional",
                     K.dim == 2, {"basis": _sub_json(K)}))

    out.append(_oracle_claim(spec))
    return out


def _oracle_cases():
    for sig in _signatures(5):
        basis = so_basis(sig)
        yield str(sig) + " so", basis
        for i, el in enumerate(basis.generators):
            yield f"{sig} e{i}", type(basis)(f"one[{i}]", sig, (el,))
    for kind, p, q in (("u", 0, 1), ("u", 0, 2), ("su", 0, 2), ("u", 1, 1), ("su", 1, 1), ("u", 2, 0), ("sp", 0, 1), ("sp", 1, 0)):
        yield f"{kind}({p},{q})", unitary_family(kind, p, q)
    for kind in ("gl", "sl"):
        for n in (1, 2):
            yield f"neutral-{kind}:{n}", neutral_algebra(kind, n)
    h1 = unitary_family("u", 0, 1)
    for t, params, n in ((1, SimParams(1, h1), 2), (2, SimParams(2, h1), 2), (3, SimParams(3, h1), 2),
                         (1, SimParams(1, so_basis(Signature(0, 1))), 1), (4, SimParams(4, h1, m=2), 3)):
        yield f"sim type {t} n={n}", sim_algebra(params, n)


def _oracle_claim(spec: SuiteSpec) -> Claim:
    mismatches = []
    count = 0
    for label, g in _oracle_cases():
        rep = build_rep(g.signature)
        if rep.dim_delta > 4:
            continue
        gens = [lambda_star(rep, A, spec.normalization) for A in g.generators]
        fast = invariant_lines(gens, rep.dim_delta)
        slow = brute_force_lines(gens, rep.dim_delta)
        a = [(c.subspace, c.character) for c in fast.components]
        count += 1
        if a != slow:
            mismatches.append(label)
    return Claim("riemannian.oracle_equivalence", "invariant lines agree with brute-force joint eigenvectors when dim Delta <= 4",
                 not mismatches and count > 0, {"cases": count, "mismatches": mismatches})


# ---------------------------------------------------------------------------
# lorentzian suite


def _sim_cases():
    u2 = unitary_family("u", 0, 2)
    su2 = unitary_family("su", 0, 2)
    for hname, h in (("u2", u2), ("su2", su2)):
        for t in (1, 2, 3, 4):
            params = SimParams(t, h, m=3 if t == 4 else None)
            try:
                g = sim_algebra(params, 4)
            except ValueError as exc:
                yield hname, h, t, None, str(exc)
                continue
            yield hname, h, t, g, None


def _lorentzian_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    norm = spec.normalization
    sig = Signature(1, 5)
    rep = build_rep(sig)
    slot_map, plus, minus = lorentz_split(rep)
    frame = witt_frame(sig, "lorentz")
    form = hermitian_form(rep)
    h_counts = {}
    constructible = {}
    isolated_spinors = []
    reports = {}
    for hname, h, t, g, err in _sim_cases():
        constructible[f"{hname}.type{t}"] = err is None
        if g is None:
            continue
        if hname not in h_counts:
            h_counts[hname] = line_count(algebra_lines(h, norm))
        r = algebra_lines(g, norm)
        reports[(hname, t)] = r
        inside = all(plus.contains_subspace(c.subspace) for c in r.components)
        counts = line_count(r)
        same = counts[:2] == h_counts[hname][:2]
        isolated_spinors += [(f"{hname}.type{t}", c.subspace.basis[0]) for c in r.components if c.isolated]
        out.append(Claim(f"lorentzian.sim.{hname}.type{t}",
                         "sim(n) invariant lines have the form l x u(1) and their count equals that of h on Delta_n",
                         bool(r.components) and inside and same,
                         {"sim_dim": g.dim, "sim_counts": list(counts), "h_counts": list(h_counts[hname]),
                          "inside_Delta_n_x_u(1)": inside, "annihilated": [c.annihilated for c in r.components]}))
    expected_missing = {"u2.type4", "su2.type3", "su2.type4"}
    missing = {k for k, v in constructible.items() if not v}
    out.append(Claim("lorentzian.sim.constructibility",
                     "type 3 needs a functional vanishing on [h,h]; type 4 needs h in so(m) with a large enough center",
                     missing == expected_missing, {"constructible": constructible}))

    h1 = unitary_family("u", 0, 1)
    g4 = sim_algebra(SimParams(4, h1, m=3), 4)
    r4 = algebra_lines(g4, norm)
    rh = algebra_lines(h1.__class__(h1.name, Signature(0, 4), tuple(A.embed(Signature(0, 4), 0) for A in h1.generators)), norm)
    out.append(Claim("lorentzian.sim.u1.type4", "type 4 example (h = u(1) in so(3), m = 3, n = 4) obeys the same line form and count",
                     all(plus.contains_subspace(c.subspace) for c in r4.components) and line_count(r4)[:2] == line_count(rh)[:2],
                     {"sim_counts": list(line_count(r4)), "h_counts": list(line_count(rh)), "psi": g4.metadata.get("psi")}))

    kill_ok = True
    for i in range(2, sig.n):
        e = [ZERO] * sig.n
        e[i] = ONE
        W = two_form_action(rep, SoElement.wedge(sig, e, frame.p).bivector)
        if any(any(W.apply(b)) for b in plus.basis):
            kill_ok = False
    out.append(Claim("lorentzian.e_wedge_p", "e_i ^ p annihilates Delta_4 x u(1) for every spacelike e_i",
                     kill_ok, {"signature": [1, 5]}))

    pq = SoElement.wedge(sig, frame.p, frame.q)
    measured = {}
    ok = True
    for nm in ("half", "paper"):
        L = lambda_star(rep, pq, nm)
        vals = {}
        for label, sub in (("plus", plus), ("minus", minus)):
            try:
                vals[label] = character_of([L], sub)[0]
            except AssertionError:
                vals[label] = None
        good = vals["plus"] is not None and vals["minus"] is not None and bool(vals["plus"]) and vals["plus"] == -vals["minus"]
        ok = ok and good
        measured[nm] = {k: (_s(v) if v is not None else None) for k, v in vals.items()}
    out.append(Claim("lorentzian.p_wedge_q_scalar", "p ^ q acts by opposite nonzero scalars on the two halves; the constant is recorded",
                     ok, {"measured": measured, "quoted_constant": "2"}))

    isotropy = []
    for label, s in isolated_spinors:
        p = dirac_current(rep, form, s)
        isotropy.append({"case": label, "g(p,p)": str(p.norm()), "proportional_to_p": p.proportional_to(frame.p),
                         "current": [str(c) for c in p.components]})
    out.append(Claim("lorentzian.dirac_isotropic", "the Dirac current of a recurrent line is isotropic and proportional to p",
                     bool(isotropy) and all(w["g(p,p)"] == "0" and w["proportional_to_p"] for w in isotropy),
                     {"lines": isotropy}))

    type2 = reports.get(("su2", 2))
    type1 = reports.get(("su2", 1))
    others = {f"{h}.type{t}": any(c.annihilated for c in reports[(h, t)].components) for h, t in reports if t in (1, 3)}
    pv_ok = (type2 is not None and any(c.annihilated for c in type2.components) and type1 is not None
             and not any(others.values()))
    out.append(Claim("lorentzian.parallel_vs_recurrent", "type 2 over su(2) has parallel spinors; types 1 and 3 only recurrent ones",
                     pv_ok, {"type2_su2_annihilated": [c.annihilated for c in type2.components] if type2 else None,
                             "annihilated_in_type1_or_3": others,
                             "su2.type3": "not constructible: su(2) is perfect, so no nonzero phi vanishes on [h,h]"}))

    for s_ in (3, 5):
        sg = Signature(1, s_)
        rp = build_rep(sg)
        fm = hermitian_form(rp)
        rng = _rng(spec, f"dirac{sg}")
        samples = [tuple([ZERO] * rp.dim_delta)] + [_rand_spinor(rng, rp.dim_delta) for _ in range(100)]
        bad = []
        for smp in samples:
            p = dirac_current(rp, fm, smp)
            if p.norm() > 0 or p.is_zero() != (not any(smp)):
                bad.append([x.to_str() for x in smp])
        out.append(Claim(f"lorentzian.dirac_causal.{sg.r}_{sg.s}", "g(p,p) <= 0 and p vanishes exactly where s does",
                         not bad, {"samples": len(samples), "kappa": fm.kappa, "failures": bad[:3]}))

    sim_p_bad = []
    for hname, h, t, g, err in _sim_cases():
        if g is None:
            continue
        for el in g.generators:
            img = el.matrix.apply(frame.p)
            if span([frame.p], sig.n).coordinates(img) is None:
                sim_p_bad.append(f"{hname}.type{t}")
                break
    out.append(Claim("lorentzian.sim_preserves_p", "sim(n) algebras preserve the isotropic line spanned by p",
                     not sim_p_bad, {"failures": sim_p_bad}))
    return out


# ---------------------------------------------------------------------------
# kahler suite


def _kahler_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    norm = spec.normalization
    for m in (1, 2, 3, 4):
        sig = Signature(0, 2 * m)
        rep = build_rep(sig)
        J = standard_complex_structure(sig)
        ks = kahler_spectrum(rep, J)
        table = {lam: mult for lam, mult in ks.table}
        want = {GaussianRational(0, m - 2 * k): comb(m, k) for k in range(m + 1)}
        out.append(Claim(f"kahler.spectrum.m{m}", "the Kähler form acts with eigenvalues (m-2k)i of multiplicity C(m,k)",
                         table == want, {"spectrum": ks.as_dict()}))

        r = algebra_lines(unitary_family("u", 0, m), norm)
        extremes = {GaussianRational(0, m): None, GaussianRational(0, -m): None}
        spaces = dict(ks.eigenspaces)
        where = []
        for c in r.components:
            hit = [lam for lam in extremes if spaces[lam].contains_subspace(c.subspace)]
            where.append(_s(hit[0]) if hit else None)
        ext_ok = (len(r.components) == 2 and None not in where and len(set(where)) == 2
                  and all(spaces[lam].dim == 1 for lam in extremes))
        out.append(Claim(f"kahler.extreme_lines.m{m}", "the two u(m) lines are the 1-dimensional extreme eigenspaces of the Kähler form",
                         ext_ok, {"line_eigenvalues": where}))

        Is = []
        detail = []
        G = MatrixGR.diag(sig.k)
        for c in r.components:
            res = induced_complex_structure(rep, c.subspace.basis[0])
            if not res.ok:
                detail.append({"reason": res.reason})
                continue
            Im = res.matrix
            ortho = Im.transpose().matmul(G).matmul(Im) == G
            sq = Im.matmul(Im) == -MatrixGR.identity(sig.n)
            detail.append({"square_minus_id": sq, "g_orthogonal": ortho, "equals": "J" if Im == J else ("-J" if Im == -J else "other")})
            Is.append(Im)
        ok = len(Is) == 2 and Is[0] == -Is[1] and all(d.get("square_minus_id") and d.get("g_orthogonal") for d in detail)
        out.append(Claim(f"kahler.complex_structure.m{m}", "each line induces I with X.s = i I(X).s; the two lines give I and -I",
                         ok, {"lines": detail}))

    bad = []
    for n in (2, 4, 6):
        sig = Signature(0, n)
        rep = build_rep(sig)
        rng = _rng(spec, f"tspace{n}")
        for _ in range(20):
            s = _rand_spinor(rng, rep.dim_delta)
            if not any(s):
                continue
            if not t_space(rep, s).is_zero():
                bad.append({"n": n, "s": [x.to_str() for x in s]})
    out.append(Claim("kahler.t_space_definite", "in definite signature no nonzero vector kills a nonzero spinor",
                     not bad, {"failures": bad[:3]}))

    rep11 = build_rep(Signature(1, 1))
    s = u_vector(1)
    res = induced_complex_structure(rep11, s)
    T = t_space(rep11, s)
    out.append(Claim("kahler.t_nonzero_failure", "a spinor killed by a vector yields no unique complex structure",
                     not res.ok and res.reason == "T_nonzero" and T.dim == 1,
                     {"reason": res.reason, "t_space": _sub_json(T)}))

    for name in ("g2split", "spin34"):
        f = BUILTIN[name]
        g = form_stabilizer(f.signature, name)
        r = algebra_lines(g, norm)
        out.append(Claim(f"kahler.{name}", f"the split form stabilizer {f.name} has the classical dimension and annihilates spinors",
                         g.dim == f.expected_dim and any(c.annihilated for c in r.components),
                         {"stabilizer_dim": g.dim, **_counts_json(r)}))

    ru = algebra_lines(unitary_family("u", 1, 1), norm)
    rs = algebra_lines(unitary_family("su", 1, 1), norm)
    ok = line_count(ru)[:2] == (2, 0) and line_count(rs)[:2] == (0, 1) and all(c.annihilated for c in rs.components)
    out.append(Claim("kahler.pseudo_unitary", "u(1,1) preserves two lines and su(1,1) annihilates a family, as in definite signature",
                     ok, {"u(1,1)": _counts_json(ru), "su(1,1)": _counts_json(rs)}))
    return out


# ---------------------------------------------------------------------------
# neutral suite


def _identity_B(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _neutral_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    norm = spec.normalization
    for n in (2, 3):
        sig = Signature(n, n)
        rep = build_rep(sig)
        frame = witt_frame(sig, "neutral")
        sl = neutral_algebra("sl", n)
        gl = neutral_algebra("gl", n)
        K = joint_kernel([lambda_star(rep, A, norm) for A in sl.generators], rep.dim_delta)
        out.append(Claim(f"neutral.sl_kernel.n{n}", "the sl(n) part annihilates nonzero spinors",
                         not K.is_zero(), {"kernel_dim": K.dim, "basis": _sub_json(K)}))

        r = algebra_lines(gl, norm)
        E = neutral_element(n, _identity_B(n))
        LE = lambda_star(rep, E, norm)
        chars = []
        for c in r.components:
            chars.append(_s(character_of([LE], c.subspace)[0]))
        inside = all(K.contains_subspace(c.subspace) for c in r.components)
        covers = span([b for c in r.components for b in c.subspace.basis], rep.dim_delta) == K
        ok = bool(r.components) and inside and covers and all(x != _s(ZERO) for x in chars)
        out.append(Claim(f"neutral.gl_lines.n{n}", "gl(n) preserves the lines annihilated by sl(n), with nonzero weight on diag(E,-E)",
                         ok, {**_counts_json(r), "diag_E_characters": chars, "normalization": norm}))

        zero = neutral_action(rep, frame, [[ZERO] * n for _ in range(n)])
        out.append(Claim(f"neutral.formula_zero.n{n}", "the displayed neutral operator at B = 0 is n/2 Id",
                         zero.formula == MatrixGR.scalar(rep.dim_delta, GaussianRational(Fraction(n, 2))), {}))

        for kind in ("sl", "gl"):
            rng = _rng(spec, f"neutral{kind}{n}")
            seen = {"half": set(), "paper": set()}
            samples = []
            unmatched = 0
            for _ in range(10):
                B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
                if kind == "sl":
                    B[n - 1][n - 1] = -sum(B[i][i] for i in range(n - 1))
                if not any(any(row) for row in B):
                    B[0][1 % n] = 1
                na = neutral_action(rep, frame, B)
                entry = {"B": B, "trace": sum(B[i][i] for i in range(n))}
                for nm, am in na.affine.items():
                    if am is None:
                        unmatched += 1
                        entry[nm] = None
                    else:
                        seen[nm].add((am.alpha, am.beta))
                        entry[nm] = am.to_json()
                samples.append(entry)
            constant = unmatched == 0 and all(len(v) == 1 for v in seen.values())
            wit = {"samples": samples[:4], "distinct_matches": {k: len(v) for k, v in seen.items()}}
            if kind == "gl":
                wit["observed"] = "formula = lambda_half(A) + (n - tr B)/2 Id; beta depends on tr B"
            out.append(Claim(f"neutral.affine_{kind}.n{n}",
                             f"the displayed operator equals alpha*lambda_*(A) + beta*Id with (alpha, beta) independent of B in {kind}(n)",
                             constant, wit))

        Lp = lambda_star(rep, E, "paper")
        rpap = invariant_lines([Lp] + [lambda_star(rep, A, "paper") for A in sl.generators], rep.dim_delta)
        line_scalars = [_s(c.character[0]) for c in rpap.components if K.contains_subspace(c.subspace)]
        whole = Lp == MatrixGR.scalar(rep.dim_delta, n)
        target = _s(GaussianRational(n))
        ok = whole or (bool(line_scalars) and all(x == target for x in line_scalars))
        out.append(Claim(f"neutral.scalar_n.n{n}", "diag(E,-E) acts as multiplication by n (paper normalization)",
                         ok, {"normalization": "paper", "scalar_on_whole_module": whole,
                              "scalars_on_preserved_lines": line_scalars, "expected": target}))
    return out


# ---------------------------------------------------------------------------
# spin^C suite


def _spinc_claims(spec: SuiteSpec) -> list[Claim]:
    out = []
    norm = spec.normalization
    I_ = GaussianRational(0, 1)
    g = unitary_family("u", 0, 2)
    rep = build_rep(g.signature)
    gens = [lambda_star(rep, A, norm) for A in g.generators]
    r = invariant_lines(gens, rep.dim_delta)
    match = []
    for c in r.components:
        charges = [chi / I_ for chi in c.character]
        ok, sub = spinc_exists(list(zip(gens, charges)))
        match.append({"exists": ok, "equals_line": sub == c.subspace, "charges": [_s(t) for t in charges]})
    out.append(Claim("spinc.u2_matching_charge", "A.v = i t v is solvable exactly when t is the character of an invariant line",
                     len(match) == 2 and all(m["exists"] and m["equals_line"] for m in match), {"lines": match}))

    rng = _rng(spec, "spinc-perturb")
    deltas = [Fraction(1, 2), Fraction(-1, 1), Fraction(1, 1000)]
    deltas += [Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 50)) for _ in range(7)]
    false_all = True
    exceptional = []
    c0 = r.components[0]
    base = [chi / I_ for chi in c0.character]
    for j, t in enumerate(base):
        for d in deltas:
            pert = list(base)
            pert[j] = pert[j] + d
            ok, _ = spinc_exists(list(zip(gens, pert)))
            if ok:
                false_all = False
        # the unique shift that lands on the other line's charge, if any
        other = [chi / I_ for chi in r.components[1].character]
        diff = [a - b for a, b in zip(other, base)]
        if sum(1 for x in diff if x) == 1 and diff[j]:
            ok, _ = spinc_exists(list(zip(gens, other)))
            exceptional.append({"generator": j, "delta": _s(diff[j]), "exists": ok})
    out.append(Claim("spinc.perturbed_charge", "perturbing the matching charge by a nonzero rational destroys the solution",
                     false_all, {"deltas": [str(d) for d in deltas],
                                 "shifts_onto_the_other_line": exceptional}))

    K0 = joint_kernel(gens)
    idf, _ = spinc_exists([(MatrixGR.identity(4), ZERO)])
    sub_t0 = spinc_exists([(A, ZERO) for A in gens])[1]
    out.append(Claim("spinc.zero_charge", "zero charges reduce to the joint kernel; the identity has no kernel",
                     sub_t0 == K0 and not idf, {"joint_kernel_dim": K0.dim}))

    implied = []
    for gg in (unitary_family("u", 0, 1), unitary_family("u", 0, 3), unitary_family("u", 1, 1),
               sim_algebra(SimParams(3, unitary_family("u", 0, 1)), 2)):
        rp = build_rep(gg.signature)
        gs = [lambda_star(rp, A, norm) for A in gg.generators]
        rr = invariant_lines(gs, rp.dim_delta)
        for c in rr.components:
            ok, sub = spinc_exists(list(zip(gs, [chi / I_ for chi in c.character])))
            covered = ok and any(cc.subspace.contains_subspace(sub) for cc in rr.components)
            implied.append({"algebra": gg.name, "exists": ok, "inside_component": covered})
    out.append(Claim("spinc.implies_line", "a spin^C solution always lies in an invariant line component",
                     all(x["exists"] and x["inside_component"] for x in implied), {"cases": implied}))
    return out


# ---------------------------------------------------------------------------
# coverage and dispatch

_SUITE_FUNCS: dict[str, Callable[[SuiteSpec], list[Claim]]] = {
    "clifford": _clifford_claims,
    "riemannian": _riemannian_claims,
    "lorentzian": _lorentzian_claims,
    "kahler": _kahler_claims,
    "neutral": _neutral_claims,
    "spinc": _spinc_claims,
}


def _exercise_exact_core() -> Claim:
    """Touches the exact-core entry points directly with small checks."""
    from ..exact import char_poly, gaussian_roots

    M = MatrixGR.from_rows([[1, GaussianRational(0, 1)], [GaussianRational(0, 1), -1]])
    R, rk = rref(M)
    K = kernel(R)
    cp = char_poly(MatrixGR.diag([GaussianRational(0, 1), GaussianRational(0, -1)]))
    roots, res = gaussian_roots(cp)
    A = span([(ONE, ZERO), (ZERO, ONE)], 2)
    B = span([(ONE, ONE)], 2)
    ok = rk == 1 and K.dim == 1 and sorted(_s(x) for x in roots) == ["0/1+1/1i", "0/1-1/1i"] and intersect(A, B) == B
    return Claim("exact_core.smoke", "exact reduction, kernels, characteristic polynomials and intersections on small inputs",
                 ok, {"rank": rk, "roots": sorted(_s(x) for x in roots)})


def _coverage_claim(seen: set) -> Claim:
    from . import cli as _cli

    with contextlib.redirect_stdout(io.StringIO()):
        _cli.cli(["rep", "--signature", "0,2"])
    seen.add("verify_cli.run_suite")
    required = sorted(PUBLIC_OPS)
    missing = [op for op in required if op not in seen]
    return Claim("all.coverage", "every public operation of every module is exercised by the full suite",
                 not missing, {"operations": len(required), "missing": missing})


@public_op("verify_cli.run_suite")
def run_suite(spec: SuiteSpec) -> Report:
    start = time.perf_counter()
    names = SUITES if spec.name == "all" else (spec.name,)
    claims: list[Claim] = []
    with record_calls() as seen:
        for nm in names:
            claims.extend(_SUITE_FUNCS[nm](spec))
        if spec.name == "all":
            claims.append(_exercise_exact_core())
            claims.append(_coverage_claim(seen))
    ids = [c.claim_id for c in claims]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate claim ids")
    claims.sort(key=lambda c: c.claim_id)
    return Report(spec.name, spec.seed, spec.normalization, spec.max_n, tuple(claims), time.perf_counter() - start)
