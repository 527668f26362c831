"""Branch-disciplined complex primitives and the unit-disk domain types.

Everything downstream reduces to four operations defined here: the principal
power ``w**c = exp(c Log w)`` with ``Im(Log) in (-pi, pi]``, its positive-real
specialization ``x**Re(c)`` (the modulus of ``x**c`` for ``x > 0``), and the
Moebius shift pair

    u = (z + v) / (1 + conj(v) z)      <->      z = (u - v) / (1 - u conj(v))

which exchanges 0 and an anchor point ``v`` of the open unit disk.  Every base
raised to a complex power downstream has the form ``1 - z`` or
``1 - u conj(v)`` with ``z, u, v`` in the disk, hence strictly positive real
part, so no branch-cut crossing can occur.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from ._kernels import scalarfuncs as _sf

TWO_PI = 2.0 * math.pi


class DomainError(ValueError):
    """An input lies outside an operation's mathematical domain."""


class DegenerateInputError(ValueError):
    """An input hits a removable or excluded point of a formula."""


@dataclass(frozen=True)
class OrderParameter:
    """The nonzero complex order datum b."""

    b: complex

    def __post_init__(self):
        b = complex(self.b)
        if b == 0:
            raise DomainError("order parameter must be nonzero")
        if not (math.isfinite(b.real) and math.isfinite(b.imag)):
            raise DomainError("order parameter must be finite")
        object.__setattr__(self, "b", b)

    @cached_property
    def modulus(self) -> float:
        return abs(self.b)

    @cached_property
    def real_part(self) -> float:
        return self.b.real


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk; construction rejects |z| >= 1."""

    z: complex

    def __post_init__(self):
        z = complex(self.z)
        if not (abs(z) < 1.0):
            raise DomainError(f"point must lie strictly inside the unit disk, got |z| = {abs(z)}")
        object.__setattr__(self, "z", z)

    @property
    def modulus(self) -> float:
        return abs(self.z)


@dataclass(frozen=True)
class BoundaryPoint:
    """An angle, normalized into [0, 2*pi)."""

    theta: float

    def __post_init__(self):
        t = float(self.theta)
        if not math.isfinite(t):
            raise DomainError("angle must be finite")
        t = t % TWO_PI
        if t >= TWO_PI:  # rounding of tiny negatives can land exactly on 2*pi
            t = 0.0
        object.__setattr__(self, "theta", t)


def as_order(b) -> OrderParameter:
    return b if isinstance(b, OrderParameter) else OrderParameter(complex(b))


def as_disk(z) -> DiskPoint:
    return z if isinstance(z, DiskPoint) else DiskPoint(complex(z))


def as_angle(theta) -> BoundaryPoint:
    return theta if isinstance(theta, BoundaryPoint) else BoundaryPoint(float(theta))


def principal_power(w, c) -> complex:
    """exp(c Log w) on the principal branch, Im(Log) in (-pi, pi].

    ``w = 0`` returns 0 when Re(c) > 0 (continuity convention) and is a
    domain error otherwise.
    """
    w = complex(w)
    c = complex(c)
    if w == 0:
        if c.real > 0:
            return 0j
        raise DomainError("0 cannot be raised to an exponent with Re <= 0")
    return _sf.principal_power(w, c)


def pos_power(x, c) -> float:
    """x**Re(c) for positive real x: the modulus of x**c.

    This is the canonical reading of a positive-real base raised to a complex
    exponent inside a real-valued bound.
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"base must be a positive real, got {x}")
    return _sf.pos_power(x, complex(c))


def mobius_shift(z, v) -> DiskPoint:
    """Disk automorphism sending 0 to v, evaluated at z."""
    z = as_disk(z)
    v = as_disk(v)
    return DiskPoint(_sf.mobius_shift(z.z, v.z))


def mobius_unshift(u, v) -> DiskPoint:
    """Inverse of :func:`mobius_shift`: sends v to 0, evaluated at u."""
    u = as_disk(u)
    v = as_disk(v)
    return DiskPoint(_sf.mobius_unshift(u.z, v.z))
