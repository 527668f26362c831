"""Koebe-domain boundary under the interior fixed-point normalization.

Adding the normalization f(r0) = r0 for a fixed 0 < r0 < 1 breaks rotation
invariance, so the Koebe boundary becomes angle-dependent.  Specializing the
two-point bounds to v = r0, u = r e^{i theta} gives the sharp modulus bound
M(r, theta); its r -> 1- limit is the boundary radius

    R(theta) = (1 - r0^2)^{2b} / (2 (1+|b|) (1 - 2 r0 cos theta + r0^2)^b).

The exponent on the theta factor is b, not 2b: in the limit the bracket
[|1 - r0 r e^{i theta}| + |r e^{i theta} - r0|]^2 tends to
4 |1 - r0 e^{i theta}|^2 = 4 (1 - 2 r0 cos theta + r0^2), which cancels one
of the two powers coming from |1 - r0 e^{i theta}|^{2b-2}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from ._kernels import scalarfuncs as _sf
from .complex_core import (DegenerateInputError, DomainError, OrderParameter,
                           TWO_PI, as_angle, as_order)

#: ladder of boundary offsets used by limit verification, one per decade
EPSILON_LADDER = (1e-2, 1e-3, 1e-4, 1e-5)

_CASE_IDS = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class MontelConfig:
    """Fixed point r0 of the normalization f(r0) = r0, plus the order."""

    r0: float
    order: OrderParameter

    def __post_init__(self):
        r0 = float(self.r0)
        if not (0.0 < r0 < 1.0):
            raise DomainError(f"fixed point r0 must satisfy 0 < r0 < 1, got {r0}")
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "order", as_order(self.order))


@dataclass(frozen=True)
class SpecialCase:
    """One of the four classical specializations of the order parameter.

    I   b = 1                                   (starlike)
    II  b = 1 - alpha, 0 <= alpha < 1           (starlike of order alpha)
    III b = cos(lam) e^{-i lam}, |lam| < pi/2   (spirallike)
    IV  b = (1 - alpha) cos(lam) e^{-i lam}     (spirallike of order alpha)
    """

    case_id: str
    alpha_order: float = 0.0
    lambda_angle: float = 0.0

    def __post_init__(self):
        if self.case_id not in _CASE_IDS:
            raise DomainError(f"case_id must be one of {_CASE_IDS}, got {self.case_id!r}")
        a = float(self.alpha_order)
        lam = float(self.lambda_angle)
        if self.case_id in ("II", "IV") and not (0.0 <= a < 1.0):
            raise DomainError(f"order parameter alpha must lie in [0, 1), got {a}")
        if self.case_id in ("III", "IV") and not (abs(lam) < math.pi / 2):
            raise DomainError(f"spiral angle must satisfy |lambda| < pi/2, got {lam}")
        object.__setattr__(self, "alpha_order", a)
        object.__setattr__(self, "lambda_angle", lam)

    def order_parameter(self) -> OrderParameter:
        if self.case_id == "I":
            return OrderParameter(1.0 + 0j)
        if self.case_id == "II":
            return OrderParameter(complex(1.0 - self.alpha_order))
        spiral = math.cos(self.lambda_angle) * cmath.exp(-1j * self.lambda_angle)
        if self.case_id == "III":
            return OrderParameter(spiral)
        return OrderParameter((1.0 - self.alpha_order) * spiral)


@dataclass(frozen=True)
class KoebeProfile:
    """Sampled polar boundary {(theta_i, R(theta_i))} for one configuration."""

    config: MontelConfig
    thetas: np.ndarray
    radii: np.ndarray
    samples: list = field(init=False, repr=False)

    def __post_init__(self):
        thetas = np.asarray(self.thetas, dtype=np.float64)
        radii = np.asarray(self.radii, dtype=np.float64)
        if thetas.shape != radii.shape or thetas.ndim != 1:
            raise ValueError("thetas and radii must be matching 1-D arrays")
        if thetas.size and not (thetas[0] >= 0.0 and thetas[-1] < TWO_PI):
            raise ValueError("angles must lie in [0, 2*pi)")
        if thetas.size > 1 and not np.all(np.diff(thetas) > 0):
            raise ValueError("angles must be strictly increasing")
        if not np.all(radii > 0):
            raise ValueError("radii must be positive")
        for arr in (thetas, radii):
            arr.flags.writeable = False
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "samples",
                           list(zip(thetas.tolist(), radii.tolist())))


def _validate_interior_radius(r: float) -> float:
    r = float(r)
    if not (0.0 < r < 1.0):
        raise DomainError(f"radius must satisfy 0 < r < 1, got {r}")
    return r


def _montel_pair(r, theta, cfg: MontelConfig):
    r = _validate_interior_radius(r)
    theta = as_angle(theta)
    point = r * cmath.exp(1j * theta.theta)
    if abs(point - cfg.r0) == 0.0:
        raise DegenerateInputError(
            "modulus bound is degenerate at the fixed point r e^{i theta} = r0")
    return _sf.montel_lower_upper(r, theta.theta, cfg.r0, cfg.order.b)


def montel_lower(r, theta, cfg: MontelConfig) -> float:
    """Sharp lower bound M(r, theta) for |f(r e^{i theta})| over the class."""
    return _montel_pair(r, theta, cfg)[0]


def montel_upper(r, theta, cfg: MontelConfig) -> float:
    """Upper companion of :func:`montel_lower` (sign of |u - v| flipped)."""
    return _montel_pair(r, theta, cfg)[1]


def koebe_radius(theta, cfg: MontelConfig) -> float:
    """Boundary radius R(theta): the r -> 1- limit of M(r, theta)."""
    theta = as_angle(theta)
    return _sf.koebe_radius_value(theta.theta, cfg.r0, cfg.order.b)


def limit_gaps(theta, cfg: MontelConfig, epsilons=EPSILON_LADDER):
    """Gaps |M(1 - eps, theta) - R(theta)| for each boundary offset.

    Offsets must lie in (0, 1 - r0) so the sampled radius stays beyond the
    fixed point; gaps must shrink to 0 as eps does (this is what pins the
    exponent b in R over the alternative 2b).
    """
    theta = as_angle(theta)
    eps = [float(e) for e in epsilons]
    if not eps:
        raise DomainError("at least one boundary offset is required")
    for e in eps:
        if not (0.0 < e < 1.0 - cfg.r0):
            raise DomainError(
                f"boundary offsets must lie in (0, 1 - r0) = (0, {1.0 - cfg.r0}), got {e}")
    target = koebe_radius(theta, cfg)
    return [(e, abs(montel_lower(1.0 - e, theta, cfg) - target)) for e in eps]


def special_case_radius(case: SpecialCase, theta, r0) -> float:
    """R(theta) with the order substituted per the classical case."""
    cfg = MontelConfig(r0, case.order_parameter())
    return koebe_radius(theta, cfg)


def boundary_profile(cfg: MontelConfig, n_samples: int) -> KoebeProfile:
    """Uniform [0, 2*pi) sampling of the boundary, theta_i = 2*pi*i/n.

    The endpoint 2*pi is excluded (it would duplicate theta = 0).
    """
    n = int(n_samples)
    if n < 2:
        raise DomainError(f"profile needs at least 2 samples, got {n}")
    thetas = TWO_PI * np.arange(n) / n
    radii = _kernels.get_backend(size_hint=n).koebe_radii(thetas, cfg.r0, cfg.order.b)
    return KoebeProfile(cfg, thetas, radii)
