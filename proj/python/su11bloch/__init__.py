"""SU(1,1) group map, closed-form trajectories and Bloch ODE."""

import json as _json

from ._su11bloch import (
    Error,
    GroupElement,
    adjoint_closed_form,
    adjoint_vec,
    classify,
    compute_P,
    compute_R1,
    decompose,
    elliptic_bounds,
    exact_R2K,
    exp_element,
    integrate,
    intermediate_t,
    iterate_R2K,
    kappa_dot,
    mcross,
    mdot,
    orbit_vector,
    reproject,
    stroboscopic_residual,
    symmetry_order_check,
    trajectory_point,
    verify_exact_vs_iterated,
)
from ._su11bloch import verify_scenario as _verify_scenario

Error.kind = property(lambda self: self.args[0])


def verify_scenario(path):
    """Runs every check on a scenario file and returns the report as a dict."""
    return _json.loads(_verify_scenario(str(path)))


__all__ = [name for name in dir() if not name.startswith("_") and name != "_json"]
