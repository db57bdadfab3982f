"""Exact verification of quadratic algebra models."""

import json

from ._qalg import (
    MathError,
    dual_hahn_orthogonality,
    eigen_correspondence,
    l1_eigenvalue,
    normalize,
    rep_structure_ok,
    run,
    s9_verify,
    sphere_coords,
)

__all__ = [
    "MathError",
    "dual_hahn_orthogonality",
    "eigen_correspondence",
    "l1_eigenvalue",
    "normalize",
    "rep_structure_ok",
    "report",
    "run",
    "s9_verify",
    "sphere_coords",
]


class UsageError(RuntimeError):
    pass


def report(*args):
    """Run a subcommand and return its JSON report as a dict.

    Raises UsageError on exit code 2. A failed check gives exit code 1 and
    still returns the report; inspect its checks.
    """
    code, out, err = run([str(a) for a in args])
    if code == 2:
        raise UsageError(err.strip())
    return json.loads(out)
