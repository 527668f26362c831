"""Pure-numpy vectorized kernels (fallback path, selected via KOEBE_BACKEND).

Same contracts as the numba backend: 1-D arrays in, 1-D arrays out, scalar
parameters ``kind``/``b``/``alpha``/``v`` broadcast over the arrays.
"""

import numpy as np

from .scalarfuncs import KIND_IDENTITY, KIND_ROTATED

NAME = "numpy"


def _as_c(z):
    return np.ascontiguousarray(z, dtype=np.complex128)


def _as_f(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def candidate_values(z, kind, b, alpha):
    z = _as_c(z)
    if kind == KIND_IDENTITY:
        return z.copy()
    rot = np.exp(-1j * alpha) if kind == KIND_ROTATED else 1.0
    w = rot * z
    return w * np.exp(-2.0 * b * np.log(1.0 - w)) / rot


def candidate_log_derivs(z, kind, b, alpha):
    z = _as_c(z)
    if kind == KIND_IDENTITY:
        return np.ones_like(z)
    w = np.exp(-1j * alpha) * z if kind == KIND_ROTATED else z
    return 1.0 + 2.0 * b * w / (1.0 - w)


def starlike_phis(z, kind, b, alpha):
    return 1.0 + (candidate_log_derivs(z, kind, b, alpha) - 1.0) / b


def transplant_values(z, v, kind, b, alpha):
    z = _as_c(z)
    v = complex(v)
    u = (z + v) / (1.0 + np.conj(v) * z)
    fu = candidate_values(u, kind, b, alpha)
    fv = candidate_values(np.array([v]), kind, b, alpha)[0]
    av2 = abs(v) ** 2
    num = v * np.exp((2.0 * b - 1.0) * np.log(1.0 - u * np.conj(v))) * (u - v) * fu
    den = u * np.exp(2.0 * b * np.log(complex(1.0 - av2))) * fv
    return num / den


def transplant_phis(z, v, kind, b, alpha):
    z = _as_c(z)
    v = complex(v)
    vbar = np.conj(v)
    u = (z + v) / (1.0 + vbar * z)
    ld = candidate_log_derivs(u, kind, b, alpha)
    one_vz = 1.0 + vbar * z
    av2 = abs(v) ** 2
    zfpf = (1.0 + z * (1.0 - av2) / (one_vz * (z + v)) * ld
            - z / (z + v) - (2.0 * b - 1.0) * vbar * z / one_vz)
    return 1.0 + (zfpf - 1.0) / b


def two_point_bounds_arrays(u, v, b):
    u = _as_c(u)
    v = _as_c(v)
    a = np.abs(1.0 - u * np.conj(v))
    d = np.abs(u - v)
    pref = (2.0 * np.abs(u) * (1.0 - np.abs(v) ** 2) ** (2.0 * b.real)
            / ((1.0 + abs(b)) * np.abs(v) * a ** (2.0 * b.real - 2.0)))
    return pref / (a + d) ** 2, pref / (a - d) ** 2


def growth_bounds_arrays(r, b):
    r = _as_f(r)
    num = 2.0 * r / (1.0 + abs(b))
    return num / (1.0 + r) ** 2, num / (1.0 - r) ** 2


def montel_bounds_arrays(r, theta, r0, b):
    r = _as_f(r)
    theta = _as_f(theta)
    zc = r * np.exp(1j * theta)
    a = np.abs(1.0 - r0 * zc)
    d = np.abs(zc - r0)
    num = 2.0 * r * (1.0 - r0 * r0) ** (2.0 * b.real)
    den = (1.0 + abs(b)) * a ** (2.0 * b.real - 2.0)
    return num / (den * (a + d) ** 2), num / (den * (a - d) ** 2)


def koebe_radii(theta, r0, b):
    theta = _as_f(theta)
    q = 1.0 - 2.0 * r0 * np.cos(theta) + r0 * r0
    return ((1.0 - r0 * r0) ** (2.0 * b.real)
            / (2.0 * (1.0 + abs(b)) * q ** b.real))
