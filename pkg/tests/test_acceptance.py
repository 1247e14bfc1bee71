"""Acceptance criteria, one test each.

Every test prints a single ``criterion NN: PASS|FAIL  <title>`` line, which is
also collected into the terminal summary by ``conftest.py``.
"""

from __future__ import annotations

import contextlib
import random
import subprocess
import sys
from fractions import Fraction
from math import comb


from conftest import ACCEPTANCE_LINES
from recspin.clifford import (
    Signature,
    build_rep,
    half_spinor_split,
    lorentz_split,
    two_form_action,
    witt_frame,
)
from recspin.exact import ONE, ZERO, GaussianRational, MatrixGR, gr, rank
from recspin.holonomy import (
    LieAlgebraRep,
    SimParams,
    SoElement,
    form_stabilizer,
    lambda_star,
    neutral_algebra,
    neutral_element,
    sim_algebra,
    so_basis,
    standard_complex_structure,
    unitary_family,
)
from recspin.invariant import character_of, invariant_lines, joint_kernel, line_count, spinc_exists
from recspin.spin_geometry import (
    dirac_current,
    hermitian_form,
    induced_complex_structure,
    kahler_spectrum,
    neutral_action,
    t_space,
)
from recspin.verify.oracle import brute_force_lines

I_ = GaussianRational(0, 1)


@contextlib.contextmanager
def criterion(num: int, title: str):
    try:
        yield
    except BaseException:
        line = f"criterion {num:02d}: FAIL  {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"criterion {num:02d}: PASS  {title}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def signatures(max_n):
    return [Signature(r, n - r) for n in range(1, max_n + 1) for r in range(n + 1)]


def lines_of(g, normalization="half"):
    rep = build_rep(g.signature)
    gens = [lambda_star(rep, A, normalization) for A in g.generators]
    return invariant_lines(gens, rep.dim_delta)


def rand_spinor(rng, N):
    return tuple(gr(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
                 for _ in range(N))


def embed_h(h, n):
    sig = Signature(0, n)
    return LieAlgebraRep(h.name, sig, tuple(A.embed(sig, 0) for A in h.generators))


def test_criterion_01_clifford_relations():
    with criterion(1, "Clifford relations and invertibility for all signatures with n <= 9"):
        for sig in signatures(9):
            rep = build_rep(sig)
            g = rep.generators
            N = rep.dim_delta
            for i in range(sig.n):
                assert rank(g[i]) == N, (sig, i)
                for j in range(i, sig.n):
                    want = MatrixGR.scalar(N, -2 * sig.k[i]) if i == j else MatrixGR.zeros(N)
                    assert g[i].anticommutator(g[j]) == want, (sig, i, j)


def test_criterion_02_lambda_homomorphism():
    with criterion(2, "lambda_* (half) is a homomorphism for n <= 8; paper normalization is off by exactly 2"):
        for sig in signatures(8):
            rep = build_rep(sig)
            basis = so_basis(sig).generators
            lam = [lambda_star(rep, A, "half") for A in basis]
            for a in range(len(basis)):
                for b in range(a + 1, len(basis)):
                    assert lambda_star(rep, basis[a].bracket(basis[b]), "half") == lam[a].commutator(lam[b])
        sig = Signature(0, 3)
        rep = build_rep(sig)
        A, B = so_basis(sig).generators[0], so_basis(sig).generators[2]
        lhs = lambda_star(rep, A.bracket(B), "paper")
        rhs = lambda_star(rep, A, "paper").commutator(lambda_star(rep, B, "paper"))
        assert not lhs.is_zero()
        assert rhs != lhs and rhs == lhs.scale(2)
        print(f"  witnessed pair {A.label()}, {B.label()}: [lam A, lam B] = 2 lam [A, B] under paper normalization")


def test_criterion_03_riemannian_lines():
    with criterion(3, "u(m) preserves exactly two non-annihilated lines; su(m) annihilates one 2-dim family (m = 2, 3, 4)"):
        for m in (2, 3, 4):
            r = lines_of(unitary_family("u", 0, m))
            assert line_count(r)[:2] == (2, 0), m
            assert all(not c.annihilated for c in r.components), m
            r = lines_of(unitary_family("su", 0, m))
            assert line_count(r)[:2] == (0, 1), m
            (fam,) = r.components
            assert fam.dim == 2 and fam.annihilated, m


def test_criterion_04_parallel_spinor_holonomies():
    with criterion(4, "G2 (dim 14) and Spin(7) (dim 21) annihilate one line; sp(1) annihilates a space of dim >= 2"):
        g2 = form_stabilizer(Signature(0, 7), "g2")
        assert g2.dim == 14
        r = lines_of(g2)
        assert len(r.components) == 1 and r.components[0].annihilated

        sp7 = form_stabilizer(Signature(0, 8), "spin7")
        assert sp7.dim == 21
        r = lines_of(sp7)
        assert len(r.components) == 1 and r.components[0].annihilated
        plus, minus = half_spinor_split(build_rep(Signature(0, 8)))
        sub = r.components[0].subspace
        half = "plus" if plus.contains_subspace(sub) else "minus" if minus.contains_subspace(sub) else None
        assert half is not None
        print(f"  Spin(7) line lies in the {half} half-spinor module")

        r = lines_of(unitary_family("sp", 0, 1))
        assert any(c.annihilated and c.dim >= 2 for c in r.components)


def _sim_reports():
    out = {}
    for hname in ("u", "su"):
        h = unitary_family(hname, 0, 2)
        for t in (1, 2, 3, 4):
            try:
                g = sim_algebra(SimParams(t, h, m=3 if t == 4 else None), 4)
            except ValueError:
                out[(hname, t)] = None
                continue
            out[(hname, t)] = (h, g, lines_of(g))
    return out


def test_criterion_05_lorentzian_lines():
    with criterion(5, "sim(4) lines lie in Delta_4 x u(1) with the counts of h; e_i^p kills it; p^q acts by opposite scalars"):
        sig = Signature(1, 5)
        rep = build_rep(sig)
        _, plus, minus = lorentz_split(rep)
        reports = _sim_reports()
        built = [k for k, v in reports.items() if v is not None]
        print(f"  constructible sim types: {sorted(f'{h}(2).type{t}' for h, t in built)}")
        assert built
        for key in built:
            h, g, r = reports[key]
            assert r.components, key
            assert all(plus.contains_subspace(c.subspace) for c in r.components), key
            assert line_count(r)[:2] == line_count(lines_of(h))[:2], key

        frame = witt_frame(sig, "lorentz")
        for i in range(2, sig.n):
            e = [ZERO] * sig.n
            e[i] = ONE
            W = two_form_action(rep, SoElement.wedge(sig, e, frame.p).bivector)
            assert all(not any(W.apply(b)) for b in plus.basis), i

        pq = SoElement.wedge(sig, frame.p, frame.q)
        for norm in ("half", "paper"):
            L = lambda_star(rep, pq, norm)
            cp = character_of([L], plus)[0]
            cm = character_of([L], minus)[0]
            assert cp and cp == -cm
            print(f"  p^q scalar ({norm}): {cp.pretty()} on Delta_4 x u(1), {cm.pretty()} on the other half (quoted: 2)")


def test_criterion_06_parallel_vs_recurrent():
    with criterion(6, "type 2 over su(2) has annihilated components; types 1 and 3 have none"):
        reports = _sim_reports()
        _, _, r2 = reports[("su", 2)]
        assert any(c.annihilated for c in r2.components)
        _, _, r1 = reports[("su", 1)]
        assert r1.components and not any(c.annihilated for c in r1.components)
        # su(2) is perfect, so no nonzero phi vanishes on [h, h]: type 3 exists only over u(2)
        assert reports[("su", 3)] is None
        _, _, r3 = reports[("u", 3)]
        assert r3.components and not any(c.annihilated for c in r3.components)
        _, _, r1u = reports[("u", 1)]
        assert not any(c.annihilated for c in r1u.components)


def test_criterion_07_dirac_current():
    with criterion(7, "Dirac current: isotropic and along p on recurrent lines; causal on 100 random spinors"):
        sig = Signature(1, 5)
        rep = build_rep(sig)
        form = hermitian_form(rep)
        p_tilde = witt_frame(sig, "lorentz").p
        count = 0
        for v in _sim_reports().values():
            if v is None:
                continue
            for c in v[2].components:
                if not c.isolated:
                    continue
                p = dirac_current(rep, form, c.subspace.basis[0])
                assert p.norm() == 0 and p.proportional_to(p_tilde)
                count += 1
        assert count > 0
        for s in (3, 5):
            rp = build_rep(Signature(1, s))
            fm = hermitian_form(rp)
            rng = random.Random(f"0:dirac{s}")
            assert dirac_current(rp, fm, [ZERO] * rp.dim_delta).is_zero()
            for _ in range(100):
                smp = rand_spinor(rng, rp.dim_delta)
                p = dirac_current(rp, fm, smp)
                assert p.norm() <= 0
                assert p.is_zero() == (not any(smp))


def test_criterion_08_kahler_spectrum():
    with criterion(8, "Kahler form spectrum (m-2k)i with C(m,k); u(m) lines are the extreme eigenspaces; I and -I"):
        for m in (1, 2, 3, 4):
            sig = Signature(0, 2 * m)
            rep = build_rep(sig)
            ks = kahler_spectrum(rep, standard_complex_structure(sig))
            assert dict(ks.table) == {GaussianRational(0, m - 2 * k): comb(m, k) for k in range(m + 1)}
            spaces = dict(ks.eigenspaces)
            top, bottom = spaces[GaussianRational(0, m)], spaces[GaussianRational(0, -m)]
            assert top.dim == bottom.dim == 1
            r = lines_of(unitary_family("u", 0, m))
            subs = {c.subspace for c in r.components}
            assert subs == {top, bottom}
            Is = [induced_complex_structure(rep, c.subspace.basis[0]).matrix for c in r.components]
            assert None not in Is and Is[0] == -Is[1]


def test_criterion_09_complex_structure_machinery():
    with criterion(9, "u(m) lines induce I with I^2 = -Id, g-orthogonal; definite t_space of s != 0 is zero"):
        for m in (1, 2, 3, 4):
            sig = Signature(0, 2 * m)
            rep = build_rep(sig)
            G = MatrixGR.diag(sig.k)
            for c in lines_of(unitary_family("u", 0, m)).components:
                res = induced_complex_structure(rep, c.subspace.basis[0])
                assert res.ok
                Im = res.matrix
                assert Im.matmul(Im) == -MatrixGR.identity(sig.n)
                assert Im.transpose().matmul(G).matmul(Im) == G
        for n in (2, 3, 4, 5, 6):
            rep = build_rep(Signature(0, n))
            rng = random.Random(f"0:tspace{n}")
            for _ in range(20):
                s = rand_spinor(rng, rep.dim_delta)
                if any(s):
                    assert t_space(rep, s).is_zero()


def test_criterion_10_neutral_signature():
    with criterion(10, "neutral signature: sl kernel, gl lines, B-independent affine match, diag(E,-E) acts as n"):
        findings = []
        for n in (2, 3):
            sig = Signature(n, n)
            rep = build_rep(sig)
            frame = witt_frame(sig, "neutral")
            sl = neutral_algebra("sl", n)
            K = joint_kernel([lambda_star(rep, A) for A in sl.generators], rep.dim_delta)
            assert not K.is_zero()
            r = lines_of(neutral_algebra("gl", n))
            E = neutral_element(n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])
            LE = lambda_star(rep, E)
            assert r.components and all(K.contains_subspace(c.subspace) for c in r.components)
            assert all(character_of([LE], c.subspace)[0] for c in r.components)

            rng = random.Random(f"0:neutral{n}")
            matches = {"half": set(), "paper": set()}
            for _ in range(10):
                B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
                na = neutral_action(rep, frame, B)
                for norm, am in na.affine.items():
                    matches[norm].add(None if am is None else (am.alpha, am.beta))
            for norm, seen in matches.items():
                if len(seen) != 1 or None in seen:
                    findings.append(f"n={n} {norm}: affine match depends on B ({len(seen)} distinct (alpha, beta))")

            Lp = lambda_star(rep, E, "paper")
            if Lp != MatrixGR.scalar(rep.dim_delta, n):
                rp = invariant_lines([Lp], rep.dim_delta)
                vals = sorted(c.character[0].pretty() for c in rp.components if K.contains_subspace(c.subspace))
                findings.append(f"n={n} paper: diag(E,-E) is not the scalar {n}; on the sl-kernel lines it acts by {vals}")
        for f in findings:
            print("  " + f)
        assert not findings, findings


def test_criterion_11_spinc():
    with criterion(11, "spin^C: matching charge recovers the u(2) line; perturbed charges have no solution"):
        g = unitary_family("u", 0, 2)
        rep = build_rep(g.signature)
        gens = [lambda_star(rep, A) for A in g.generators]
        r = invariant_lines(gens, rep.dim_delta)
        lines = {c.subspace for c in r.components}
        rng = random.Random("0:spinc")
        deltas = [Fraction(1), Fraction(-1, 2), Fraction(1, 1000)]
        deltas += [Fraction(rng.choice((-1, 1)) * rng.randint(1, 40), rng.randint(1, 40)) for _ in range(7)]
        for c in r.components:
            charges = [chi / I_ for chi in c.character]
            ok, sub = spinc_exists(list(zip(gens, charges)))
            assert ok and sub in lines and sub == c.subspace
            for j in range(len(charges)):
                for d in deltas:
                    pert = list(charges)
                    pert[j] += d
                    assert not spinc_exists(list(zip(gens, pert)))[0], (j, d)


def _small_algebras():
    for sig in signatures(5):
        basis = so_basis(sig)
        yield basis
        for i, el in enumerate(basis.generators):
            yield LieAlgebraRep(f"e{i}", sig, (el,))
    for kind, p, q in (("u", 0, 1), ("u", 0, 2), ("su", 0, 2), ("u", 1, 1), ("su", 1, 1), ("u", 2, 0), ("sp", 0, 1)):
        yield unitary_family(kind, p, q)
    for kind in ("gl", "sl"):
        for n in (1, 2):
            yield neutral_algebra(kind, n)
    h1 = unitary_family("u", 0, 1)
    for t in (1, 2, 3):
        yield sim_algebra(SimParams(t, h1), 2)
    yield sim_algebra(SimParams(1, so_basis(Signature(0, 1))), 1)


def test_criterion_12_oracle_equivalence():
    with criterion(12, "invariant_lines agrees with brute-force enumeration for dim Delta <= 4 (both normalizations)"):
        checked = 0
        for g in _small_algebras():
            rep = build_rep(g.signature)
            if rep.dim_delta > 4:
                continue
            for normalization in ("half", "paper"):
                gens = [lambda_star(rep, A, normalization) for A in g.generators]
                r = invariant_lines(gens, rep.dim_delta)
                got = [(c.subspace, c.character) for c in r.components]
                assert got == brute_force_lines(gens, rep.dim_delta), (g.name, normalization)
                checked += 1
        assert checked > 100


def test_criterion_13_determinism():
    with criterion(13, "verify --suite all --seed 0 --format json is byte-identical across runs"):
        cmd = [sys.executable, "-m", "recspin", "verify", "--suite", "all", "--seed", "0", "--format", "json"]
        a = subprocess.run(cmd, capture_output=True, timeout=600)
        b = subprocess.run(cmd, capture_output=True, timeout=600)
        assert a.stdout and a.stdout == b.stdout
        assert a.returncode == b.returncode
