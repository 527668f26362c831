"""Numba-jitted kernels: tight scalar loops over the shared formula kernels.

Compiled lazily on first call and cached on disk (``cache=True``), so the
compile cost is paid once per environment.
"""

import numpy as np
from numba import njit

from . import scalarfuncs as sf

NAME = "numba"


def _as_c(z):
    return np.ascontiguousarray(z, dtype=np.complex128)


def _as_f(x):
    return np.ascontiguousarray(x, dtype=np.float64)


@njit(cache=True)
def _candidate_values(z, kind, b, alpha):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = sf.candidate_value(kind, b, alpha, z[i])
    return out


@njit(cache=True)
def _candidate_log_derivs(z, kind, b, alpha):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = sf.candidate_log_deriv(kind, b, alpha, z[i])
    return out


@njit(cache=True)
def _starlike_phis(z, kind, b, alpha):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = sf.candidate_phi(kind, b, alpha, z[i])
    return out


@njit(cache=True)
def _transplant_values(z, v, kind, b, alpha):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = sf.transplant_value(kind, b, alpha, v, z[i])
    return out


@njit(cache=True)
def _transplant_phis(z, v, kind, b, alpha):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = sf.transplant_phi(kind, b, alpha, v, z[i])
    return out


@njit(cache=True)
def _two_point_bounds(u, v, b):
    lo = np.empty(u.shape[0], dtype=np.float64)
    up = np.empty(u.shape[0], dtype=np.float64)
    for i in range(u.shape[0]):
        lo[i], up[i] = sf.two_point_lower_upper(u[i], v[i], b)
    return lo, up


@njit(cache=True)
def _growth_bounds(r, b):
    lo = np.empty(r.shape[0], dtype=np.float64)
    up = np.empty(r.shape[0], dtype=np.float64)
    for i in range(r.shape[0]):
        lo[i], up[i] = sf.growth_lower_upper(r[i], b)
    return lo, up


@njit(cache=True)
def _montel_bounds(r, theta, r0, b):
    lo = np.empty(r.shape[0], dtype=np.float64)
    up = np.empty(r.shape[0], dtype=np.float64)
    for i in range(r.shape[0]):
        lo[i], up[i] = sf.montel_lower_upper(r[i], theta[i], r0, b)
    return lo, up


@njit(cache=True)
def _koebe_radii(theta, r0, b):
    out = np.empty(theta.shape[0], dtype=np.float64)
    for i in range(theta.shape[0]):
        out[i] = sf.koebe_radius_value(theta[i], r0, b)
    return out


def candidate_values(z, kind, b, alpha):
    return _candidate_values(_as_c(z), kind, complex(b), float(alpha))


def candidate_log_derivs(z, kind, b, alpha):
    return _candidate_log_derivs(_as_c(z), kind, complex(b), float(alpha))


def starlike_phis(z, kind, b, alpha):
    return _starlike_phis(_as_c(z), kind, complex(b), float(alpha))


def transplant_values(z, v, kind, b, alpha):
    return _transplant_values(_as_c(z), complex(v), kind, complex(b), float(alpha))


def transplant_phis(z, v, kind, b, alpha):
    return _transplant_phis(_as_c(z), complex(v), kind, complex(b), float(alpha))


def two_point_bounds_arrays(u, v, b):
    return _two_point_bounds(_as_c(u), _as_c(v), complex(b))


def growth_bounds_arrays(r, b):
    return _growth_bounds(_as_f(r), complex(b))


def montel_bounds_arrays(r, theta, r0, b):
    r = _as_f(r)
    theta = _as_f(theta)
    if r.shape != theta.shape:
        r, theta = np.broadcast_arrays(r, theta)
        r = np.ascontiguousarray(r)
        theta = np.ascontiguousarray(theta)
    return _montel_bounds(r, theta, float(r0), complex(b))


def koebe_radii(theta, r0, b):
    return _koebe_radii(_as_f(theta), float(r0), complex(b))
