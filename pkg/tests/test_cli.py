from __future__ import annotations

import json
from fractions import Fraction

import pytest

from recspin.clifford import Signature, build_rep, lorentz_split
from recspin.verify import SuiteSpec, run_suite
from recspin.verify.cli import cli
from recspin.verify.specs import SpecError, parse_algebra, parse_signature


def run(capsys, *argv):
    code = cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("text,production", [
    ("so:1", "signature"),
    ("so:a,b", "signature"),
    ("u:0", "signature"),
    ("sim:type=2,h=su:0,2", "sim-spec"),
    ("sim:type=x,h=su:0,2,n=4", "sim-field"),
    ("sim:kind=2,h=su:0,2,n=4", "sim-field"),
    ("neutral-gl:two", "neutral-spec"),
    ("bogus", "algebra"),
    ("weird:1,2", "algebra"),
    ("file:/nonexistent/alg.json", "file-spec"),
])
def test_grammar_errors_name_production(text, production):
    with pytest.raises(SpecError) as info:
        parse_algebra(text)
    assert info.value.production == production
    assert f"<{production}>" in str(info.value)


def test_parse_examples():
    assert parse_signature("1,3").n == 4
    assert parse_algebra("u:0,2").dim == 4
    assert parse_algebra("g2").dim == 14
    assert parse_algebra("sim:type=2,h=su:0,2,n=4").dim == 7
    assert parse_algebra("neutral-sl:2").dim == 3


def test_rep_json(capsys):
    code, out, _ = run(capsys, "rep", "--signature", "0,2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 2
    assert doc["generators"][0] == [["0/1+1/1i", "0/1+0/1i"], ["0/1+0/1i", "0/1-1/1i"]]


def test_lines_u1_paper(capsys):
    code, out, _ = run(capsys, "lines", "--algebra", "u:0,2", "--normalization", "paper", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    chars = sorted(tuple(c["character"]) for c in doc["components"])
    assert len(chars) == 2 and all(c[0] in ("0/1+1/1i", "0/1-1/1i") for c in chars)


def test_lines_sim_text(capsys):
    code, out, _ = run(capsys, "lines", "--algebra", "sim:type=2,h=su:0,2,n=4")
    assert code == 0 and "projective family" in out and "annihilated" in out


def test_bad_algebra_exit_code(capsys):
    code, _, err = run(capsys, "lines", "--algebra", "so:1")
    assert code == 2 and "<signature>" in err


def test_dirac(capsys, tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps(["1", "0", "0", "0"]))
    code, out, _ = run(capsys, "dirac", "--signature", "1,3", "--spinor", str(f), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and Fraction(doc["g(p,p)"]) < 0
    # spinors in the half killed by p have isotropic current
    _, plus, _ = lorentz_split(build_rep(Signature(1, 3)))
    f.write_text(json.dumps([x.to_str() for x in plus.basis[0]]))
    code, out, _ = run(capsys, "dirac", "--signature", "1,3", "--spinor", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["g(p,p)"] == "0"
    code, _, err = run(capsys, "dirac", "--signature", "0,4", "--spinor", str(f))
    assert code == 2


def test_kahler(capsys):
    code, out, _ = run(capsys, "kahler", "--signature", "0,4", "--format", "json")
    assert code == 0 and json.loads(out)["spectrum"] == {"0/1+2/1i": 1, "0/1+0/1i": 2, "0/1-2/1i": 1}


def test_export_roundtrip(capsys, tmp_path):
    f = tmp_path / "alg.json"
    code, _, _ = run(capsys, "export", "--algebra", "su:0,2", "--output", str(f))
    assert code == 0
    g = parse_algebra(f"file:{f}")
    assert g.dim == 3 and g.coord_space() == parse_algebra("su:0,2").coord_space()
    code, out, _ = run(capsys, "export", "--algebra", "u:0,1", "--spinor-images", "--normalization", "paper")
    assert json.loads(out)["generators"] == [[["0/1+0/1i", "-1/1+0/1i"], ["1/1+0/1i", "0/1+0/1i"]]]


def test_verify_exit_and_determinism(capsys):
    code, out1, _ = run(capsys, "verify", "--suite", "spinc", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--suite", "spinc", "--format", "json")
    assert code == code2 == 0 and out1 == out2
    doc = json.loads(out1)
    assert doc["overall"] and "elapsed" not in doc
    assert all(set(c) == {"claim_id", "anchor", "pass", "witness"} for c in doc["claims"])


def test_verify_timing_flag(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "spinc", "--format", "json", "--timing")
    assert "elapsed" in json.loads(out)


def test_verify_failing_suite_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "neutral")
    assert code == 1 and "FAIL" in out


def test_suite_spec_validation():
    with pytest.raises(ValueError):
        SuiteSpec("clifford", max_n=17)
    with pytest.raises(ValueError):
        SuiteSpec("nope")
    r = run_suite(SuiteSpec("clifford", max_n=4))
    assert r.overall
