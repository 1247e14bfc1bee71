"""Claim suites, the algebra spec grammar and the command-line interface."""

from .oracle import brute_force_lines
from .specs import SpecError, export_algebra, load_algebra_file, parse_algebra, parse_signature
from .suites import SUITES, Claim, Report, SuiteSpec, algebra_lines, run_suite

__all__ = [
    "SUITES",
    "SuiteSpec",
    "Claim",
    "Report",
    "run_suite",
    "algebra_lines",
    "parse_algebra",
    "parse_signature",
    "export_algebra",
    "load_algebra_file",
    "SpecError",
    "brute_force_lines",
]
