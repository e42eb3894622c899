"""Exact boundary noncommutative residue computations."""

import json

from ._ncresidue import (
    UsageError,
    canonical,
    compare,
    emit,
    emit_clifford,
    references,
    run,
    theorems,
    verify,
)

__all__ = [
    "UsageError",
    "canonical",
    "compare",
    "emit",
    "emit_clifford",
    "references",
    "run",
    "run_json",
    "theorems",
    "verify",
]


def run_json(config=""):
    """Run a config and return the report as a dict."""
    return json.loads(run(config, "json"))
