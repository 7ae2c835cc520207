"""Finite-ring ideal and submodule classification workbench.

The heavy lifting happens in the compiled extension; this package re-exports
its operations.
"""

from ringlab._core import (
    RinglabError,
    RinglabParseError,
    canonical,
    check_ids,
    classify_ideal,
    classify_submodule,
    cli,
    fixtures,
    ring_info,
    run_fixture,
    run_suite,
    search,
)

__all__ = [
    "RinglabError",
    "RinglabParseError",
    "canonical",
    "check_ids",
    "classify_ideal",
    "classify_submodule",
    "cli",
    "fixtures",
    "ring_info",
    "run_fixture",
    "run_suite",
    "search",
]
