"""Algebra spec strings.

Grammar (each production name appears in error messages)::

    algebra      := so-spec | unitary-spec | calibration | sim-spec | neutral-spec | file-spec
    so-spec      := "so:" signature
    unitary-spec := ("u" | "su" | "sp") ":" signature
    calibration  := "g2" | "g2split" | "spin7" | "spin34"
    sim-spec     := "sim:" sim-field ("," sim-field)*
    sim-field    := "type=" INT | "h=" algebra | "n=" INT | "m=" INT
    neutral-spec := ("neutral-gl" | "neutral-sl") ":" INT
    file-spec    := "file:" PATH
    signature    := INT "," INT
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from ..clifford import Signature
from ..exact.io import decode_matrix, encode_matrix
from ..holonomy import (
    LieAlgebraRep,
    SimParams,
    SoElement,
    form_stabilizer,
    neutral_algebra,
    sim_algebra,
    so_basis,
    unitary_family,
)
from ..holonomy.calibrations import BUILTIN

__all__ = ["SpecError", "parse_algebra", "export_algebra", "load_algebra_file", "parse_signature"]


class SpecError(ValueError):
    def __init__(self, production: str, text: str, detail: str):
        super().__init__(f"in production <{production}>: {detail} (got {text!r})")
        self.production = production


def _int(production: str, text: str) -> int:
    if not re.fullmatch(r"\d+", text.strip()):
        raise SpecError(production, text, "expected a non-negative integer")
    return int(text)


def parse_signature(text: str) -> Signature:
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m:
        raise SpecError("signature", text, "expected INT,INT")
    r, s = int(m.group(1)), int(m.group(2))
    if r + s < 1:
        raise SpecError("signature", text, "need r + s >= 1")
    return Signature(r, s)


_SIM_SPLIT = re.compile(r",(?=(?:type|h|n|m)=)")


def _parse_sim(body: str) -> LieAlgebraRep:
    fields: dict[str, str] = {}
    for part in _SIM_SPLIT.split(body):
        key, eq, val = part.partition("=")
        if not eq or key not in ("type", "h", "n", "m"):
            raise SpecError("sim-field", part, "expected type=, h=, n= or m=")
        if key in fields:
            raise SpecError("sim-field", part, f"duplicate field {key}")
        fields[key] = val
    for req in ("type", "h", "n"):
        if req not in fields:
            raise SpecError("sim-spec", body, f"missing field {req}=")
    t = _int("sim-field", fields["type"])
    n = _int("sim-field", fields["n"])
    m = _int("sim-field", fields["m"]) if "m" in fields else None
    h = parse_algebra(fields["h"])
    try:
        return sim_algebra(SimParams(t, h, m=m), n)
    except ValueError as exc:
        raise SpecError("sim-spec", body, str(exc)) from exc


def parse_algebra(text: str) -> LieAlgebraRep:
    """Build the algebra named by ``text``; raises :class:`SpecError` on bad input."""
    text = text.strip()
    if text in BUILTIN:
        return form_stabilizer(BUILTIN[text].signature, text)
    head, colon, body = text.partition(":")
    if not colon:
        raise SpecError("algebra", text, "unknown algebra; expected NAME:ARGS or a calibration name")
    if head == "so":
        return so_basis(parse_signature(body))
    if head in ("u", "su", "sp"):
        sig = parse_signature(body)
        try:
            return unitary_family(head, sig.r, sig.s)
        except (ValueError, AssertionError) as exc:
            raise SpecError("unitary-spec", text, str(exc)) from exc
    if head == "sim":
        return _parse_sim(body)
    if head in ("neutral-gl", "neutral-sl"):
        n = _int("neutral-spec", body)
        if n < 1:
            raise SpecError("neutral-spec", text, "need n >= 1")
        return neutral_algebra(head.split("-")[1], n)
    if head == "file":
        return load_algebra_file(body)
    raise SpecError("algebra", text, f"unknown algebra kind {head!r}")


def export_algebra(g: LieAlgebraRep) -> dict:
    return {
        "name": g.name,
        "signature": [g.signature.r, g.signature.s],
        "generators": [encode_matrix(el.matrix) for el in g.generators],
    }


def load_algebra_file(path: str) -> LieAlgebraRep:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError("file-spec", path, f"cannot read JSON: {exc}") from exc
    try:
        r, s = data["signature"]
        sig = Signature(int(r), int(s))
        gens = tuple(SoElement.from_matrix(sig, decode_matrix(m)) for m in data["generators"])
        return LieAlgebraRep(str(data.get("name", f"file[{path}]")), sig, gens, {"source": "file"})
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError("file-spec", path, f"malformed generator file: {exc}") from exc
