"""JSON encoding of exact scalars, vectors and matrices.

Scalars are strings ``"a/b+c/di"``; matrices are arrays of arrays of such strings.
"""

from __future__ import annotations

from typing import Any, Sequence

from .matrix import MatrixGR
from .scalar import GaussianRational


def encode_scalar(x: GaussianRational) -> str:
    return x.to_str()


def decode_scalar(s: Any) -> GaussianRational:
    if isinstance(s, int):
        return GaussianRational(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a scalar string, got {type(s).__name__}")
    return GaussianRational.parse(s)


def encode_vector(v: Sequence[GaussianRational]) -> list[str]:
    return [x.to_str() for x in v]


def decode_vector(data: Any) -> tuple:
    if not isinstance(data, list):
        raise ValueError("expected a JSON array for a vector")
    return tuple(decode_scalar(x) for x in data)


def encode_matrix(M: MatrixGR) -> list[list[str]]:
    return M.to_lists()


def decode_matrix(data: Any) -> MatrixGR:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("expected a JSON array of arrays for a matrix")
    return MatrixGR.from_rows([[decode_scalar(x) for x in r] for r in data])
