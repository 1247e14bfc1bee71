from __future__ import annotations

import pytest

from recspin.clifford import Signature, build_rep, u_vector
from recspin.exact import I, ONE, MatrixGR, span
from recspin.holonomy import (
    LieAlgebraRep,
    SimParams,
    SoElement,
    derived_algebra,
    form_stabilizer,
    lambda_star,
    lie_closure_check,
    neutral_algebra,
    sim_algebra,
    so_basis,
    standard_complex_structure,
    unitary_family,
    witt_blocks,
)


def test_so_basis_examples():
    (g,) = so_basis(Signature(0, 2)).generators
    assert g.matrix == MatrixGR.from_rows([[0, -1], [1, 0]])
    (b,) = so_basis(Signature(1, 1)).generators
    assert b.matrix == MatrixGR.from_rows([[0, -1], [-1, 0]])
    assert so_basis(Signature(0, 4)).dim == 6


@pytest.mark.parametrize("sig", [Signature(0, 3), Signature(1, 2), Signature(2, 2), Signature(1, 4)], ids=str)
def test_so_elements_are_g_skew(sig):
    G = MatrixGR.diag(sig.k)
    for A in so_basis(sig).generators:
        assert (A.matrix.transpose().matmul(G) + G.matmul(A.matrix)).is_zero()


@pytest.mark.parametrize("sig", [Signature(0, 3), Signature(1, 3), Signature(2, 2), Signature(0, 5)], ids=str)
def test_lambda_half_is_homomorphism(sig):
    rep = build_rep(sig)
    basis = so_basis(sig).generators
    lam = [lambda_star(rep, A, "half") for A in basis]
    for a in range(len(basis)):
        for b in range(len(basis)):
            assert lambda_star(rep, basis[a].bracket(basis[b]), "half") == lam[a].commutator(lam[b])


def test_lambda_paper_is_twice_half():
    sig = Signature(0, 4)
    rep = build_rep(sig)
    for A in so_basis(sig).generators:
        assert lambda_star(rep, A, "paper") == lambda_star(rep, A, "half").scale(2)


def test_lambda_paper_u1_eigenvectors():
    sig = Signature(0, 2)
    rep = build_rep(sig)
    L = lambda_star(rep, so_basis(sig).generators[0], "paper")
    assert L == MatrixGR.from_rows([[0, -1], [1, 0]])
    assert L.apply(u_vector(1)) == tuple(I * x for x in u_vector(1))
    assert L.apply(u_vector(-1)) == tuple(-I * x for x in u_vector(-1))


def test_lambda_zero_and_bad_normalization():
    sig = Signature(0, 3)
    rep = build_rep(sig)
    zero = SoElement.from_matrix(sig, MatrixGR.zeros(3))
    assert lambda_star(rep, zero, "half").is_zero()
    with pytest.raises(ValueError):
        lambda_star(rep, so_basis(sig).generators[0], "double")


@pytest.mark.parametrize("kind,p,q,dim", [("u", 0, 1, 1), ("u", 0, 2, 4), ("su", 0, 2, 3), ("u", 0, 3, 9),
                                          ("su", 0, 4, 15), ("u", 1, 1, 4), ("sp", 0, 1, 3), ("sp", 0, 2, 10)])
def test_unitary_dimensions(kind, p, q, dim):
    g = unitary_family(kind, p, q)
    assert g.dim == dim
    assert lie_closure_check(g)[0]


def test_u11_contains_central_j():
    g = unitary_family("u", 1, 1)
    sig = g.signature
    J = SoElement.from_matrix(sig, standard_complex_structure(sig))
    assert g.coord_space().contains(J.coords())
    assert all(A.bracket(J).matrix.is_zero() for A in g.generators)


def test_calibration_stabilizers():
    assert form_stabilizer(Signature(0, 7), "g2").dim == 14
    assert form_stabilizer(Signature(0, 8), "spin7").dim == 21
    assert form_stabilizer(Signature(0, 3), {}).dim == 3


def test_sim_examples():
    g = sim_algebra(SimParams(2, unitary_family("su", 0, 2)), 4)
    assert g.dim == 7 and g.signature == Signature(1, 5)
    g = sim_algebra(SimParams(1, so_basis(Signature(0, 1))), 1)
    assert g.dim == 2
    g = sim_algebra(SimParams(3, unitary_family("u", 0, 1), phi=(ONE,)), 2)
    assert g.dim == 3 and lie_closure_check(g)[0]


def test_sim_type3_needs_nonperfect_h():
    with pytest.raises(ValueError):
        sim_algebra(SimParams(3, unitary_family("su", 0, 2)), 4)


def test_neutral_algebras():
    g = neutral_algebra("gl", 1)
    assert g.dim == 1
    assert witt_blocks(g.generators[0])[0] == MatrixGR.identity(1)
    assert neutral_algebra("sl", 2).dim == 3
    assert lie_closure_check(neutral_algebra("gl", 2))[0]


def test_derived_algebra():
    assert derived_algebra(unitary_family("u", 0, 1)).dim == 0
    su2 = unitary_family("su", 0, 2)
    assert derived_algebra(su2).coord_space() == su2.coord_space()
    assert derived_algebra(unitary_family("u", 0, 2)).coord_space() == su2.coord_space()


def test_closure_witness():
    assert lie_closure_check(so_basis(Signature(1, 3)))[0]
    sig = Signature(0, 3)
    gens = so_basis(sig).generators
    pair = LieAlgebraRep("pair", sig, (gens[0], gens[2]))
    ok, wit = lie_closure_check(pair)
    assert not ok
    assert wit["bracket"].endswith("e1^e3")
    assert span([SoElement.wedge(sig, [1, 0, 0], [0, 0, 1]).coords()], 3) == span([gens[1].coords()], 3)
