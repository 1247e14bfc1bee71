"""Brute-force joint-eigenvector enumeration, independent of the derived-kernel route.

Each generator is diagonalized on its own over Q(i); every choice of one
eigenspace per generator is intersected and the nonzero results are the
joint eigenspaces.  Exponential in the number of generators, fine for N <= 4.
"""

from __future__ import annotations

from typing import Sequence

from ..exact import MatrixGR, SubspaceGR, char_poly, gaussian_roots, intersect, kernel


def eigenspaces(A: MatrixGR) -> list[tuple[object, SubspaceGR]]:
    roots, _ = gaussian_roots(char_poly(A))
    out = []
    for lam in sorted(set(roots), key=lambda z: z.sort_key()):
        out.append((lam, kernel(A - MatrixGR.scalar(A.rows, lam))))
    return out


def brute_force_lines(gens: Sequence[MatrixGR], dim: int) -> list[tuple[SubspaceGR, tuple]]:
    """All nonzero joint eigenspaces as (subspace, character), sorted canonically."""
    partial = [(SubspaceGR.full(dim), ())]
    for A in gens:
        nxt = []
        for sub, chi in partial:
            for lam, E in eigenspaces(A):
                cut = intersect(sub, E)
                if not cut.is_zero():
                    nxt.append((cut, chi + (lam,)))
        partial = nxt
    return sorted(partial, key=lambda sc: sc[0].sort_key())
