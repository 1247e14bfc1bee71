from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import matrices
from recspin.clifford import Signature, build_rep
from recspin.exact import I, ONE, ZERO, GaussianRational, MatrixGR, SubspaceGR, gr, rank, solve, span
from recspin.holonomy import SoElement, lambda_star, so_basis, unitary_family
from recspin.invariant import NotClosedError, invariant_lines, joint_kernel, line_count, spinc_exists
from recspin.verify.oracle import brute_force_lines


def lifted(g, normalization="half"):
    rep = build_rep(g.signature)
    return [lambda_star(rep, A, normalization) for A in g.generators], rep.dim_delta


def test_joint_kernel_examples():
    assert joint_kernel([], 4) == SubspaceGR.full(4)
    assert joint_kernel([MatrixGR.identity(3)]).is_zero()
    gens, N = lifted(unitary_family("su", 0, 2))
    assert joint_kernel(gens, N).dim == 2


def test_joint_kernel_dimension_mismatch():
    with pytest.raises(ValueError):
        joint_kernel([MatrixGR.identity(2), MatrixGR.identity(3)])
    with pytest.raises(ValueError):
        joint_kernel([])


def test_empty_generators():
    r = invariant_lines([], 3)
    assert len(r.components) == 1
    c = r.components[0]
    assert c.subspace == SubspaceGR.full(3) and c.character == () and not c.isolated
    assert line_count(r) == (0, 1, 0)


def test_u1_paper_normalization():
    gens, N = lifted(unitary_family("u", 0, 1), "paper")
    r = invariant_lines(gens, N)
    got = {c.subspace: c.character for c in r.components}
    assert got == {span([(ONE, -I)], 2): (I,), span([(ONE, I)], 2): (-I,)}


def test_u2_and_su2_counts():
    gens, N = lifted(unitary_family("u", 0, 2))
    r = invariant_lines(gens, N)
    assert line_count(r) == (2, 0, 0)
    assert all(any(c.character) for c in r.components)
    gens, N = lifted(unitary_family("su", 0, 2))
    r = invariant_lines(gens, N)
    assert line_count(r) == (0, 1, 0)
    assert r.components[0].annihilated and r.components[0].dim == 2


def test_not_closed_rejected():
    sig = Signature(0, 3)
    rep = build_rep(sig)
    b = so_basis(sig).generators
    with pytest.raises(NotClosedError) as info:
        invariant_lines([lambda_star(rep, b[0]), lambda_star(rep, b[2])], rep.dim_delta)
    assert info.value.witness["pair"] == [0, 1]


def test_residual_factor_reported():
    # rotation by a non-Gaussian eigenvalue pair: x^2 - 2
    A = MatrixGR.from_rows([[0, 2], [1, 0]])
    r = invariant_lines([A], 2)
    assert r.components == ()
    assert [p.to_lists() for p in r.residual_factors] == [["-2/1+0/1i", "0/1+0/1i", "1/1+0/1i"]]


def _assert_sound(gens, report):
    for c in report.components:
        for A, chi in zip(gens, c.character):
            for b in c.subspace.basis:
                assert A.apply(b) == tuple(chi * x for x in b)
        assert c.isolated == (c.dim == 1)
        assert c.annihilated == (not any(c.character))


def _polys_of(M: MatrixGR, coeffs):
    """Commuting family: polynomials in a single matrix."""
    out = []
    for cs in coeffs:
        acc = MatrixGR.zeros(M.rows)
        P = MatrixGR.identity(M.rows)
        for c in cs:
            acc = acc + P.scale(c)
            P = P.matmul(M)
        out.append(acc)
    return out


small = st.builds(GaussianRational, st.integers(-2, 2), st.integers(-2, 2))


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, 2)), st.lists(st.lists(small, min_size=1, max_size=3), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_sound_and_matches_oracle_on_commuting_families(M, coeffs):
    gens = _polys_of(M, coeffs)
    r = invariant_lines(gens, M.rows)
    _assert_sound(gens, r)
    assert [(c.subspace, c.character) for c in r.components] == brute_force_lines(gens, M.rows)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.lists(st.integers(-1, 1), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_conjugated_diagonal_families(diags, P_rows):
    P = MatrixGR.from_rows(P_rows)
    assume(rank(P) == 3)
    cols = [solve(P, [ONE if i == j else ZERO for i in range(3)]) for j in range(3)]
    Pinv = MatrixGR.from_columns(cols, 3)
    gens = [P.matmul(MatrixGR.diag(d)).matmul(Pinv) for d in diags]
    r = invariant_lines(gens, 3)
    _assert_sound(gens, r)
    # diagonalizable: the components together span everything
    assert sum(c.dim for c in r.components) == 3


@pytest.mark.parametrize("sig", [Signature(0, 2), Signature(1, 1), Signature(0, 3), Signature(2, 1), Signature(0, 4),
                                 Signature(1, 3), Signature(2, 2)], ids=str)
def test_oracle_on_single_bivectors(sig):
    rep = build_rep(sig)
    for A in so_basis(sig).generators:
        gens = [lambda_star(rep, A)]
        r = invariant_lines(gens, rep.dim_delta)
        _assert_sound(gens, r)
        assert [(c.subspace, c.character) for c in r.components] == brute_force_lines(gens, rep.dim_delta)


@pytest.mark.parametrize("kind,p,q", [("u", 0, 2), ("u", 0, 3), ("u", 1, 1), ("su", 0, 3)])
def test_characters_vanish_on_commutators(kind, p, q):
    g = unitary_family(kind, p, q)
    gens, N = lifted(g)
    r = invariant_lines(gens, N)
    for c in r.components:
        for a in range(len(g.generators)):
            for b in range(a + 1, len(g.generators)):
                br = g.generators[a].bracket(g.generators[b])
                L = lambda_star(build_rep(g.signature), br)
                v = c.subspace.basis[0]
                assert not any(L.apply(v))


def test_character_is_linear():
    g = unitary_family("u", 0, 2)
    rep = build_rep(g.signature)
    gens, N = lifted(g)
    r = invariant_lines(gens, N)
    A, B = g.generators[0], g.generators[3]
    combo = A.matrix.scale(gr(2)) + B.matrix.scale(gr(-3))
    L = lambda_star(rep, SoElement.from_matrix(g.signature, combo))
    for c in r.components:
        chi = 2 * c.character[0] - 3 * c.character[3]
        v = c.subspace.basis[0]
        assert L.apply(v) == tuple(chi * x for x in v)


def test_spinc_examples():
    gens, N = lifted(unitary_family("u", 0, 1), "paper")
    ok, sub = spinc_exists([(gens[0], 1)])
    assert ok and sub == span([(ONE, -I)], 2)
    ok, _ = spinc_exists([(MatrixGR.identity(2), 0)])
    assert not ok
    gens, N = lifted(unitary_family("su", 0, 2))
    ok, sub = spinc_exists([(A, 0) for A in gens])
    assert ok and sub == joint_kernel(gens)


def test_report_json_shape():
    gens, N = lifted(unitary_family("u", 0, 1), "paper")
    doc = invariant_lines(gens, N).to_json()
    assert set(doc) == {"components", "residual_factors"}
    assert set(doc["components"][0]) == {"basis", "character", "annihilated", "isolated"}
