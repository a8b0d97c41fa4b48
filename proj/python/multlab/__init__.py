"""Exact GF(p) homological algebra for artinian local rings."""

import json

from ._multlab import (
    MultlabError,
    acceptance,
    betti_numbers,
    classify,
    corpus_names,
    corpus_text,
    hilbert_function,
    linearity_defect,
    run_cli,
    theorem_consistent,
)

__all__ = [
    "MultlabError",
    "acceptance",
    "betti_numbers",
    "classify",
    "corpus_names",
    "corpus_text",
    "hilbert_function",
    "linearity_defect",
    "run_cli",
    "run_json",
    "theorem_consistent",
]


def run_json(*args):
    """Run a CLI command and parse its JSON report. Returns (exit code, report)."""
    code, out, err = run_cli(list(args))
    if code == 2:
        raise MultlabError(err.strip())
    return code, json.loads(out)
