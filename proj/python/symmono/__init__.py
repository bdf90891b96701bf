"""Entanglement monotones from observables on symmetric tensor powers."""

import json

from ._core import (
    CapExceeded,
    InvalidArgument,
    NumericalError,
    State,
    character,
    closed_lower_bound,
    closed_upper_bound,
    enumerate_partitions,
    gmean,
    irrep_dim,
    kronecker,
    littlewood_richardson,
    renyi_entropy,
    run_cli,
    suite_names,
    weyl_dim,
)
from . import _core


def estimate(psi, alpha=0.5, n_max=4, bipartitions="elementary", theta=None, shape="balanced"):
    """Finite-n report as a dict. alpha=None selects the alpha -> 1 limit."""
    if isinstance(psi, str):
        psi = State(psi)
    return json.loads(_core._estimate_json(psi, alpha, n_max, bipartitions, theta, shape))


def lower_functional(psi, alpha, bipartitions="elementary", theta=None, budget=0, seed=0):
    if isinstance(psi, str):
        psi = State(psi)
    return json.loads(_core._lower_json(psi, alpha, bipartitions, theta, budget, seed))


def verify(suite="default", seed=0, tol=1e-9):
    return _core._verify(suite, seed, tol)


__all__ = [
    "CapExceeded",
    "InvalidArgument",
    "NumericalError",
    "State",
    "character",
    "closed_lower_bound",
    "closed_upper_bound",
    "enumerate_partitions",
    "estimate",
    "gmean",
    "irrep_dim",
    "kronecker",
    "littlewood_richardson",
    "lower_functional",
    "renyi_entropy",
    "run_cli",
    "suite_names",
    "verify",
    "weyl_dim",
]
