"""Local dual spaces, staircases and embedded-component tests."""

import json as _json

from ._ecdetect import (
    Component,
    DeflationSystem,
    DualBasis,
    EmbeddedVerdict,
    Error,
    HilbertData,
    IncompleteStaircaseError,
    InconclusiveError,
    NotOnVarietyError,
    NumericalConfig,
    Oracle,
    ParseError,
    Polynomial,
    PreconditionError,
    ProblemFileError,
    Ring,
    SamplingError,
    Staircase,
    TruncationSpace,
    command_names,
    compare_primal,
    deflate,
    double_truncation,
    dual_dims_of_truncated_ideal,
    fiber_dual_dim,
    gcorners,
    hilbert_values,
    ideal_membership,
    ideal_truncation,
    interpolate_isolated,
    is_component_embedded,
    is_point_embedded,
    is_witness_polynomial,
    monomial_names,
    monomial_staircase,
    run_command,
    staircase_stats,
    truncated_dual,
)


def polynomials(ring, texts):
    """Parse a list of polynomial strings in `ring`."""
    return [Polynomial(t, ring) for t in texts]


def run(command, problem, **options):
    """Run a CLI command and return (exit_code, parsed JSON document)."""
    code, text = run_command(command, str(problem), **options)
    return code, _json.loads(text)


__all__ = [name for name in dir() if not name.startswith("_")]
