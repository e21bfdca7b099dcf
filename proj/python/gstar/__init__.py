"""Exact verification of graded field-theory identities.

Thin Python layer over the C++ engine: built-in theory fixtures with named
check suites, `gstar-theory v1` file loading, expression evaluation, descent
sequences, and Weil-complex cohomology.
"""

from ._core import (
    canonical_form,
    cartan_relations_hold,
    descent,
    eval_expression,
    fixture_names,
    fixture_suites,
    load_theory,
    run_suite,
    verify,
    weil_cohomology,
)

__all__ = [
    "canonical_form",
    "cartan_relations_hold",
    "descent",
    "eval_expression",
    "fixture_names",
    "fixture_suites",
    "load_theory",
    "run_suite",
    "verify",
    "weil_cohomology",
]
