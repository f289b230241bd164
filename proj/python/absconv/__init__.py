"""Exact abstract convex analysis over finite function families.

The heavy lifting lives in the `_absconv` extension module; this package
re-exports its surface.  All rationals cross the boundary as exact "p/q"
strings.
"""

try:
    from ._absconv import (
        Workspace,
        canonical_expr,
        eval_expr,
        run_scenario,
        run_suite,
        scenario_names,
    )
except ImportError:  # running against a build tree with the module on sys.path
    from _absconv import (
        Workspace,
        canonical_expr,
        eval_expr,
        run_scenario,
        run_suite,
        scenario_names,
    )

__all__ = [
    "Workspace",
    "canonical_expr",
    "eval_expr",
    "run_scenario",
    "run_suite",
    "scenario_names",
]
