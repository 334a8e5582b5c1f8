"""Inertial Jordan sets of cuspidal representations of p-adic symplectic groups.

Thin wrapper over the C++ extension: descriptors and reports travel as JSON.
"""

import json as _json

from ._ijord import (
    IjordError,
    compute_json,
    enumerate_params_json,
    enumerate_self_dual_polys,
    existence_table,
    jordan_blocks,
    parity_decision,
    synthetic_registry_json,
    verify,
)

__all__ = [
    "IjordError",
    "compute",
    "compute_json",
    "enumerate_params",
    "enumerate_params_json",
    "enumerate_self_dual_polys",
    "existence_table",
    "jordan_blocks",
    "parity_decision",
    "synthetic_registry",
    "synthetic_registry_json",
    "verify",
]


def compute(descriptor):
    """Evaluate a descriptor (dict or JSON string); returns the report as a dict."""
    if not isinstance(descriptor, str):
        descriptor = _json.dumps(descriptor)
    return _json.loads(compute_json(descriptor))


def enumerate_params(n, registry):
    if not isinstance(registry, str):
        registry = _json.dumps(registry)
    return _json.loads(enumerate_params_json(n, registry))


def synthetic_registry(seed=1, n_classes=60):
    return _json.loads(synthetic_registry_json(seed, n_classes))
