"""Command-line front end: ``recspin <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .._tracking import public_op
from ..clifford import Signature, build_rep
from ..exact.io import decode_vector, encode_matrix
from ..holonomy import lambda_star, standard_complex_structure
from ..spin_geometry import dirac_current, hermitian_form, kahler_spectrum
from .specs import SpecError, export_algebra, parse_algebra, parse_signature
from .suites import SUITES, SuiteSpec, algebra_lines, run_suite

__all__ = ["main", "cli", "build_parser"]


def _common(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--normalization", choices=("half", "paper"), default=d("half"),
                   help="lambda_* normalization (default: half)")
    p.add_argument("--format", choices=("json", "text"), default=d("text"), help="output format (default: text)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled checks (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recspin", description="Exact spinor-line computations for holonomy algebras.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rep", help="print the Clifford generators for a signature")
    p.add_argument("--signature", required=True, help="r,s")
    _common(p, suppress=True)

    p = sub.add_parser("lines", help="invariant spinor lines of an algebra")
    p.add_argument("--algebra", required=True, help="algebra spec, e.g. u:0,2 or sim:type=2,h=su:0,2,n=4")
    _common(p, suppress=True)

    p = sub.add_parser("dirac", help="Dirac current of a spinor in signature (1, N)")
    p.add_argument("--signature", required=True, help="1,N")
    p.add_argument("--spinor", required=True, help="JSON file holding a vector of exact scalars")
    _common(p, suppress=True)

    p = sub.add_parser("kahler", help="spectrum of the Kähler form of the standard complex structure")
    p.add_argument("--signature", required=True, help="r,s with r and s even")
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run a claim suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=10, help="largest n for exhaustive Clifford checks (cap 16)")
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identical output)")
    _common(p, suppress=True)

    p = sub.add_parser("export", help="write a representation or algebra as JSON")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--signature", help="export the Clifford generators for r,s")
    grp.add_argument("--algebra", help="export so(r,s) generator matrices of an algebra spec")
    p.add_argument("--spinor-images", action="store_true", help="with --algebra: export lambda_* images instead")
    p.add_argument("--output", help="file to write (default: stdout)")
    _common(p, suppress=True)
    return parser


def _emit(text: str, out=None):
    (out or sys.stdout).write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _rep_doc(sig: Signature) -> dict:
    rep = build_rep(sig)
    return {"signature": [sig.r, sig.s], "dim": rep.dim_delta, "generators": [encode_matrix(g) for g in rep.generators],
            "odd_component": rep.metadata["odd_component"]}


def _cmd_rep(args) -> int:
    sig = parse_signature(args.signature)
    if args.format == "json":
        _emit(_json(_rep_doc(sig)))
        return 0
    rep = build_rep(sig)
    lines = [f"signature {sig}, dim Delta = {rep.dim_delta}"]
    if rep.metadata["odd_component"]:
        lines.append(f"odd n: {rep.metadata['odd_component']}")
    for i, g in enumerate(rep.generators):
        lines.append(f"Phi(e{i + 1}) =")
        lines.append(g.pretty())
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_lines(args) -> int:
    g = parse_algebra(args.algebra)
    report = algebra_lines(g, args.normalization)
    if args.format == "json":
        doc = report.to_json()
        doc.update({"algebra": g.name, "signature": [g.signature.r, g.signature.s], "normalization": args.normalization})
        _emit(_json(doc))
        return 0
    iso, fam = report.isolated_count, report.family_count
    lines = [f"{g.name} in so{g.signature}: dim {g.dim}, normalization {args.normalization}",
             f"{iso} isolated line(s), {fam} projective famil{'y' if fam == 1 else 'ies'}"]
    for c in report.components:
        kind = "line" if c.isolated else f"family (dim {c.dim})"
        tag = " annihilated" if c.annihilated else ""
        lines.append(f"- {kind}{tag}; character [{', '.join(x.pretty() for x in c.character)}]")
        for b in c.subspace.basis:
            lines.append("    (" + ", ".join(x.pretty() for x in b) + ")")
    for p in report.residual_factors:
        lines.append(f"residual factor: {p}")
    _emit("\n".join(lines) + "\n")
    return 0


def _cmd_dirac(args) -> int:
    sig = parse_signature(args.signature)
    if sig.r != 1:
        raise SpecError("signature", args.signature, "dirac needs signature 1,N")
    rep = build_rep(sig)
    s = decode_vector(json.loads(Path(args.spinor).read_text()))
    p = dirac_current(rep, hermitian_form(rep), s)
    if args.format == "json":
        _emit(_json({"signature": [sig.r, sig.s], "current": [str(c) for c in p.components], "g(p,p)": str(p.norm())}))
    else:
        _emit(f"p = ({', '.join(str(c) for c in p.components)})\ng(p,p) = {p.norm()}\n")
    return 0


def _cmd_kahler(args) -> int:
    sig = parse_signature(args.signature)
    rep = build_rep(sig)
    ks = kahler_spectrum(rep, standard_complex_structure(sig))
    if args.format == "json":
        _emit(_json({"signature": [sig.r, sig.s], "m": ks.m, "spectrum": ks.as_dict()}))
    else:
        rows = [f"Kähler form spectrum on Delta{sig} (m = {ks.m}):"]
        rows += [f"  {lam.pretty():>6}  x{mult}" for lam, mult in ks.table]
        _emit("\n".join(rows) + "\n")
    return 0


def _cmd_verify(args) -> int:
    spec = SuiteSpec(args.suite, args.normalization, args.max_n, args.seed)
    report = run_suite(spec)
    if args.format == "json":
        _emit(report.dumps(args.timing))
    else:
        _emit(report.to_text(args.timing))
    return 0 if report.overall else 1


def _cmd_export(args) -> int:
    if args.signature:
        doc = _rep_doc(parse_signature(args.signature))
    else:
        g = parse_algebra(args.algebra)
        doc = export_algebra(g)
        if args.spinor_images:
            rep = build_rep(g.signature)
            doc = {"name": g.name, "signature": doc["signature"], "dim": rep.dim_delta, "normalization": args.normalization,
                   "generators": [encode_matrix(lambda_star(rep, A, args.normalization)) for A in g.generators]}
    text = _json(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        _emit(text)
    return 0


_COMMANDS = {"rep": _cmd_rep, "lines": _cmd_lines, "dirac": _cmd_dirac, "kahler": _cmd_kahler,
             "verify": _cmd_verify, "export": _cmd_export}


@public_op("verify_cli.cli")
def cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SpecError as exc:
        print(f"recspin: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"recspin: error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return cli(argv)


if __name__ == "__main__":
    sys.exit(main())
