"""Explicit calibration forms, coordinate by coordinate (1-based labels).

G2 on R^(0,7):
    e123 + e145 + e167 + e246 - e257 - e347 - e356
split G2 on R^(3,4) (timelike e1, e2, e3), obtained by e_j -> i e_j on the
quadrangle {4,5,6,7} followed by a global metric sign:
    e123 - e145 - e167 - e246 + e257 + e347 + e356
Cayley on R^(0,8): e8 ^ phi + *phi with phi the G2 form, * the Euclidean
Hodge star on R^7:
    e1238 + e1458 + e1678 + e2468 - e2578 - e3478 - e3568
  + e4567 + e2367 + e2345 + e1357 - e1346 - e1256 - e1247
split Cayley on R^(4,4): the same substitution on {4,5,6,7}, then the
relabelling 4,5,6,7 -> 1,2,3,4 and 1,2,3,8 -> 5,6,7,8 so the timelike
directions come first.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..clifford import Signature
from ..exact import GaussianRational

__all__ = ["FormSpec", "BUILTIN", "parse_form", "form_label"]


def _sort_sign(idx):
    idx = list(idx)
    sign = 1
    for a in range(len(idx)):
        for b in range(len(idx) - 1 - a):
            if idx[b] > idx[b + 1]:
                idx[b], idx[b + 1] = idx[b + 1], idx[b]
                sign = -sign
    return sign, tuple(idx)


def parse_form(text: str) -> dict:
    """``"+123 -257"`` -> {(0,1,2): 1, (1,4,6): -1}; digits are 1-based frame labels."""
    out: dict = {}
    for tok in text.split():
        sign = -1 if tok[0] == "-" else 1
        digits = tok.lstrip("+-")
        s, key = _sort_sign([int(ch) - 1 for ch in digits])
        out[key] = out.get(key, 0) + sign * s
    return {k: GaussianRational(v) for k, v in out.items() if v}


def form_label(form: dict) -> str:
    parts = []
    for key in sorted(form):
        c = form[key]
        lab = "e" + "".join(str(i + 1) for i in key)
        if c == 1:
            parts.append(f"+{lab}")
        elif c == -1:
            parts.append(f"-{lab}")
        else:
            parts.append(f"{'' if c.pretty().startswith('-') else '+'}{c.pretty()}*{lab}")
    return " ".join(parts)


G2 = "+123 +145 +167 +246 -257 -347 -356"
G2_SPLIT = "+123 -145 -167 -246 +257 +347 +356"
CAYLEY = (
    "+1238 +1458 +1678 +2468 -2578 -3478 -3568 "
    "+4567 +2367 +2345 +1357 -1346 -1256 -1247"
)


def _relabel(text: str, mapping: dict[int, int]) -> str:
    out = []
    for tok in text.split():
        sign = tok[0]
        out.append(sign + "".join(str(mapping[int(ch)]) for ch in tok[1:]))
    return " ".join(out)


def _substitute(text: str, flipped: set[int]) -> str:
    """Sign change from e_j -> i e_j for j in ``flipped`` (each term must meet it evenly)."""
    out = []
    for tok in text.split():
        hits = sum(1 for ch in tok[1:] if int(ch) in flipped)
        if hits % 2:
            raise ValueError(f"term {tok} meets the substituted set oddly")
        sign = 1 if tok[0] == "+" else -1
        if hits % 4 == 2:
            sign = -sign
        out.append(("+" if sign > 0 else "-") + tok[1:])
    return " ".join(out)


CAYLEY_SPLIT = _relabel(
    _substitute(CAYLEY, {4, 5, 6, 7}), {4: 1, 5: 2, 6: 3, 7: 4, 1: 5, 2: 6, 3: 7, 8: 8}
)


@dataclass(frozen=True)
class FormSpec:
    name: str
    signature: Signature
    text: str
    expected_dim: int

    @property
    def form(self) -> dict:
        return parse_form(self.text)


BUILTIN = {
    "g2": FormSpec("G2", Signature(0, 7), G2, 14),
    "g2split": FormSpec("G2*(2)", Signature(3, 4), G2_SPLIT, 14),
    "spin7": FormSpec("spin(7)", Signature(0, 8), CAYLEY, 21),
    "spin34": FormSpec("spin(3,4)", Signature(4, 4), CAYLEY_SPLIT, 21),
}
