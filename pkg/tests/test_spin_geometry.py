from __future__ import annotations

import random
from fractions import Fraction

import pytest

from recspin.clifford import Signature, build_rep, u_vector, witt_frame
from recspin.exact import ONE, ZERO, GaussianRational, MatrixGR, SubspaceGR, gr
from recspin.holonomy import SimParams, lambda_star, sim_algebra, standard_complex_structure, unitary_family
from recspin.invariant import invariant_lines
from recspin.spin_geometry import (
    complex_structure_form,
    dirac_current,
    hermitian_form,
    induced_complex_structure,
    kahler_spectrum,
    neutral_action,
    t_space,
)


def _rand_spinor(rng, N):
    return tuple(gr(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                 for _ in range(N))


def test_hermitian_form_examples():
    f = hermitian_form(build_rep(Signature(0, 2)))
    assert f.beta == MatrixGR.identity(2) and f.kappa is None
    f = hermitian_form(build_rep(Signature(1, 1)))
    assert f.beta == MatrixGR.diag([-1, 1])
    f = hermitian_form(build_rep(Signature(1, 3)))
    assert f.kappa == 1


def test_hermitian_form_rejects_r2():
    with pytest.raises(ValueError):
        hermitian_form(build_rep(Signature(2, 2)))


@pytest.mark.parametrize("s", [3, 5])
def test_dirac_current_is_causal(s):
    rep = build_rep(Signature(1, s))
    form = hermitian_form(rep)
    assert dirac_current(rep, form, [ZERO] * rep.dim_delta).is_zero()
    rng = random.Random(s)
    for _ in range(30):
        v = _rand_spinor(rng, rep.dim_delta)
        p = dirac_current(rep, form, v)
        assert p.norm() <= 0
        assert p.is_zero() == (not any(v))


def test_dirac_current_of_sim_line_is_isotropic():
    sig = Signature(1, 5)
    rep = build_rep(sig)
    g = sim_algebra(SimParams(1, unitary_family("u", 0, 2)), 4)
    r = invariant_lines([lambda_star(rep, A) for A in g.generators], rep.dim_delta)
    p_tilde = witt_frame(sig, "lorentz").p
    assert r.components
    for c in r.components:
        p = dirac_current(rep, hermitian_form(rep), c.subspace.basis[0])
        assert p.norm() == 0 and not p.is_zero() and p.proportional_to(p_tilde)


def test_dirac_current_wrong_length():
    rep = build_rep(Signature(1, 3))
    with pytest.raises(ValueError):
        dirac_current(rep, hermitian_form(rep), [ONE])


def test_t_space_examples():
    rep = build_rep(Signature(0, 4))
    assert t_space(rep, [ZERO] * 4) == SubspaceGR.full(4)
    rng = random.Random(0)
    for _ in range(10):
        assert t_space(rep, _rand_spinor(rng, 4)).is_zero()
    sig = Signature(1, 1)
    rep = build_rep(sig)
    T = t_space(rep, u_vector(1))
    assert T.contains(witt_frame(sig, "lorentz").p)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_induced_complex_structure_on_u_lines(m):
    sig = Signature(0, 2 * m)
    rep = build_rep(sig)
    J = standard_complex_structure(sig)
    r = invariant_lines([lambda_star(rep, A) for A in unitary_family("u", 0, m).generators], rep.dim_delta)
    Is = []
    for c in r.components:
        res = induced_complex_structure(rep, c.subspace.basis[0])
        assert res.ok
        assert res.matrix.matmul(res.matrix) == -MatrixGR.identity(sig.n)
        assert res.matrix in (J, -J)
        Is.append(res.matrix)
    assert Is[0] == -Is[1]


def test_induced_complex_structure_failures():
    rep = build_rep(Signature(1, 1))
    res = induced_complex_structure(rep, u_vector(1))
    assert not res.ok and res.reason == "T_nonzero"
    # a generic spinor in Delta_4 is not pure, so X.s = i I(X).s has no solution
    rep = build_rep(Signature(0, 4))
    res = induced_complex_structure(rep, (ONE, ONE, ZERO, ZERO))
    assert not res.ok and res.reason == "E_not_full"


def test_complex_structure_form_validates():
    sig = Signature(0, 2)
    J = standard_complex_structure(sig)
    w = complex_structure_form(sig, J)
    assert w.transpose() == -w
    with pytest.raises(ValueError):
        complex_structure_form(sig, MatrixGR.identity(2))


@pytest.mark.parametrize("m,want", [
    (1, {"0/1+1/1i": 1, "0/1-1/1i": 1}),
    (2, {"0/1+2/1i": 1, "0/1+0/1i": 2, "0/1-2/1i": 1}),
    (3, {"0/1+3/1i": 1, "0/1+1/1i": 3, "0/1-1/1i": 3, "0/1-3/1i": 1}),
])
def test_kahler_spectrum(m, want):
    sig = Signature(0, 2 * m)
    ks = kahler_spectrum(build_rep(sig), standard_complex_structure(sig))
    assert ks.as_dict() == want and ks.m == m


def test_kahler_needs_even_parts():
    with pytest.raises(ValueError):
        kahler_spectrum(build_rep(Signature(1, 3)), MatrixGR.identity(4))


def test_neutral_formula_at_zero():
    for n in (1, 2, 3):
        sig = Signature(n, n)
        rep = build_rep(sig)
        na = neutral_action(rep, witt_frame(sig, "neutral"), [[0] * n for _ in range(n)])
        assert na.formula == MatrixGR.scalar(rep.dim_delta, GaussianRational(Fraction(n, 2)))


def test_neutral_formula_measured_relation():
    # measured: formula = lambda_half(A) + (n - tr B)/2 Id
    rng = random.Random(7)
    for n in (2, 3):
        sig = Signature(n, n)
        rep = build_rep(sig)
        frame = witt_frame(sig, "neutral")
        for _ in range(3):
            B = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            tr = sum(B[i][i] for i in range(n))
            na = neutral_action(rep, frame, B)
            want = na.direct["half"] + MatrixGR.scalar(rep.dim_delta, GaussianRational(Fraction(n - tr, 2)))
            assert na.formula == want


def test_neutral_action_needs_neutral_frame():
    sig = Signature(1, 1)
    with pytest.raises(ValueError):
        neutral_action(build_rep(sig), witt_frame(sig, "lorentz"), [[1]])
