"""Kernel backend selection.

Two interchangeable array backends exist: ``numba`` (jitted scalar loops,
compiled lazily and cached on disk) and ``numpy`` (vectorized fallback).
Selection, in order of precedence:

1. ``KOEBE_BACKEND=numpy|numba`` forces a backend for every call;
2. otherwise small workloads (below ``SIZE_CUTOFF`` points) run on numpy,
   where jit compilation would cost more than it saves;
3. larger workloads run on numba, falling back to numpy if numba is
   unavailable.

``benchmarks/bench_kernels.py`` measures the crossover.
"""

import importlib
import os

ENV_VAR = "KOEBE_BACKEND"
BACKEND_NAMES = ("numba", "numpy")

# below this many points the jit overhead dominates; see the benchmark
SIZE_CUTOFF = 32768

_modules = {}


def _load(name):
    if name not in _modules:
        _modules[name] = importlib.import_module(f".{name}_backend", __package__)
    return _modules[name]


def get_backend(size_hint=None):
    """Return the backend module serving a workload of ``size_hint`` points."""
    forced = os.environ.get(ENV_VAR, "").strip().lower()
    if forced:
        if forced not in BACKEND_NAMES:
            raise ValueError(
                f"{ENV_VAR} must be one of {BACKEND_NAMES}, got {forced!r}")
        return _load(forced)
    if size_hint is not None and size_hint < SIZE_CUTOFF:
        return _load("numpy")
    try:
        return _load("numba")
    except ImportError:
        return _load("numpy")


def warmup(backend=None):
    """Force-compile every kernel of ``backend`` (default: the numba one)."""
    import numpy as np

    k = _load(backend) if backend else get_backend(size_hint=SIZE_CUTOFF)
    z = np.array([0.3 + 0.1j, -0.2 + 0.4j])
    r = np.array([0.25, 0.5])
    theta = np.array([0.0, 2.0])
    for kind in (0, 1, 2):
        k.candidate_values(z, kind, 1 + 0j, 0.5)
        k.candidate_log_derivs(z, kind, 1 + 0j, 0.5)
        k.starlike_phis(z, kind, 1 + 0j, 0.5)
        k.transplant_values(z, 0.5 + 0j, kind, 1 + 0j, 0.5)
        k.transplant_phis(z, 0.5 + 0j, kind, 1 + 0j, 0.5)
    k.two_point_bounds_arrays(z, z + 0.1, 1 + 0j)
    k.growth_bounds_arrays(r, 1 + 0j)
    k.montel_bounds_arrays(r, theta, 0.5, 1 + 0j)
    k.koebe_radii(theta, 0.5, 1 + 0j)
    return k.NAME
