"""Scalar formula kernels shared by every execution path.

Each function here is plain Python operating on machine scalars, with no
input validation (callers are responsible for preconditions).  The same
source is consumed three ways:

* directly, by the public scalar API;
* inlined into ``@njit`` loops by the numba backend (``register_jitable``);
* as the reference the vectorized numpy backend is tested against.

Candidate kinds are encoded as small ints so they survive jit compilation:
0 = identity, 1 = extremal, 2 = rotated extremal.
"""

import cmath
import math

try:
    from numba.extending import register_jitable
except ImportError:  # pragma: no cover - numba is an install-time dependency
    def register_jitable(func=None, **kwargs):
        if func is None:
            return lambda f: f
        return func

KIND_IDENTITY = 0
KIND_EXTREMAL = 1
KIND_ROTATED = 2


@register_jitable
def principal_log(w):
    """log on the principal branch, imaginary part in (-pi, pi].

    A negative real ``w`` carrying a -0.0 imaginary part would land on -pi;
    squashing the signed zero keeps the half-open convention.
    """
    if w.imag == 0.0:
        w = complex(w.real, 0.0)
    return cmath.log(w)


@register_jitable
def principal_power(w, c):
    """w**c through the principal log; ``w`` must be nonzero."""
    return cmath.exp(c * principal_log(w))


@register_jitable
def pos_power(x, c):
    """Modulus semantics for a positive real base: x**Re(c), a positive real."""
    return x ** c.real


@register_jitable
def mobius_shift(z, v):
    """Disk automorphism sending 0 to v: u = (z + v) / (1 + conj(v) z)."""
    return (z + v) / (1.0 + v.conjugate() * z)


@register_jitable
def mobius_unshift(u, v):
    """Inverse automorphism sending v to 0: z = (u - v) / (1 - u conj(v))."""
    return (u - v) / (1.0 - u * v.conjugate())


@register_jitable
def extremal_value(b, z):
    # z * (1 - z)^{-2b}; 1 - z has positive real part on the disk, so the
    # principal branch is smooth here.
    if z == 0.0:
        return 0.0 + 0.0j
    return z * principal_power(1.0 - z, -2.0 * b)


@register_jitable
def candidate_value(kind, b, alpha, z):
    """Value of the candidate function at z."""
    if kind == KIND_IDENTITY:
        return z + 0.0j
    if kind == KIND_EXTREMAL:
        return extremal_value(b, z)
    rot = cmath.exp(-1j * alpha)
    return extremal_value(b, rot * z) / rot


@register_jitable
def candidate_log_deriv(kind, b, alpha, z):
    """z f'(z)/f(z) in closed form; equals 1 at z = 0 for every kind."""
    if kind == KIND_IDENTITY:
        return 1.0 + 0.0j
    if kind == KIND_ROTATED:
        z = cmath.exp(-1j * alpha) * z
    return 1.0 + 2.0 * b * z / (1.0 - z)


@register_jitable
def candidate_phi(kind, b, alpha, z):
    """Starlikeness-of-complex-order functional 1 + (z f'/f - 1)/b."""
    return 1.0 + (candidate_log_deriv(kind, b, alpha, z) - 1.0) / b


@register_jitable
def transplant_value(kind, b, alpha, v, z):
    """Value at z of the automorphism transplant of the candidate, anchored at v.

    F(z) = v (1 - u conj(v))^{2b-1} (u - v) f(u) / (u (1 - |v|^2)^{2b} f(v))
    with u the shifted point; F(0) = 0 and F'(0) = 1 by construction.
    """
    u = mobius_shift(z, v)
    av2 = abs(v) ** 2
    fu = candidate_value(kind, b, alpha, u)
    fv = candidate_value(kind, b, alpha, v)
    num = v * principal_power(1.0 - u * v.conjugate(), 2.0 * b - 1.0) * (u - v) * fu
    den = u * principal_power(complex(1.0 - av2, 0.0), 2.0 * b) * fv
    return num / den


@register_jitable
def transplant_log_deriv(kind, b, alpha, v, z):
    """z F'(z)/F(z) for the transplant, assembled from the candidate's closed form."""
    u = mobius_shift(z, v)
    ld = candidate_log_deriv(kind, b, alpha, u)
    vbar = v.conjugate()
    one_vz = 1.0 + vbar * z
    av2 = abs(v) ** 2
    return (1.0 + z * (1.0 - av2) / (one_vz * (z + v)) * ld
            - z / (z + v) - (2.0 * b - 1.0) * vbar * z / one_vz)


@register_jitable
def transplant_phi(kind, b, alpha, v, z):
    """Starlikeness functional of the transplant."""
    return 1.0 + (transplant_log_deriv(kind, b, alpha, v, z) - 1.0) / b


@register_jitable
def two_point_lower_upper(u, v, b):
    """Two-point distortion bounds on |f(u)/f(v)|, modulus semantics.

    2|u| (1-|v|^2)^{2b} / ((1+|b|) |v| |1-u conj(v)|^{2b-2} [a +/- d]^2)
    with a = |1 - u conj(v)|, d = |u - v|; '+' gives the lower member.
    """
    a = abs(1.0 - u * v.conjugate())
    d = abs(u - v)
    pref = (2.0 * abs(u) * pos_power(1.0 - abs(v) ** 2, 2.0 * b)
            / ((1.0 + abs(b)) * abs(v) * pos_power(a, 2.0 * b - 2.0)))
    return pref / (a + d) ** 2, pref / (a - d) ** 2


@register_jitable
def growth_lower_upper(r, b):
    """Growth bounds 2r / ((1+|b|)(1 +/- r)^2) at modulus r < 1."""
    num = 2.0 * r / (1.0 + abs(b))
    return num / (1.0 + r) ** 2, num / (1.0 - r) ** 2


@register_jitable
def montel_lower_upper(r, theta, r0, b):
    """Sharp modulus bounds for |f(r e^{i theta})| under the interior
    fixed-point normalization f(r0) = r0; the two-point bounds at v = r0
    with the |v| factor absorbed by f(r0) = r0."""
    zc = complex(r * math.cos(theta), r * math.sin(theta))
    a = abs(1.0 - r0 * zc)
    d = abs(zc - r0)
    num = 2.0 * r * pos_power(1.0 - r0 * r0, 2.0 * b)
    den = (1.0 + abs(b)) * pos_power(a, 2.0 * b - 2.0)
    return num / (den * (a + d) ** 2), num / (den * (a - d) ** 2)


@register_jitable
def koebe_radius_value(theta, r0, b):
    """Koebe-domain boundary radius

    R(theta) = (1-r0^2)^{2b} / (2 (1+|b|) (1 - 2 r0 cos(theta) + r0^2)^{b})

    with modulus semantics on both positive-real bases.  The exponent on the
    theta factor is b (not 2b): the bracket of the modulus bound tends to
    4 |1 - r0 e^{i theta}|^2 as r -> 1-, and the squared modulus equals
    1 - 2 r0 cos(theta) + r0^2, cancelling one power.
    """
    q = 1.0 - 2.0 * r0 * math.cos(theta) + r0 * r0
    return (pos_power(1.0 - r0 * r0, 2.0 * b)
            / (2.0 * (1.0 + abs(b)) * pos_power(q, b)))
