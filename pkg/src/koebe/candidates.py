"""Candidate function family and the starlikeness-of-complex-order functional.

Three candidates are provided, all normalized so f(0) = 0 and f'(0) = 1:

* identity          f(z) = z
* extremal          f(z) = z (1 - z)^{-2b}
* rotated extremal  f(z) = e^{i a} f_ext(e^{-i a} z)

A function f with f(z)/z != 0 on the disk is starlike of complex order (1-b)
when Re Phi(z) > 0 everywhere, with

    Phi(z) = 1 + (z f'(z)/f(z) - 1) / b.

For the extremal candidate Phi(z) = (1 + z)/(1 - z) independently of b, which
is a Moebius map of the disk onto the right half plane; all three candidates
therefore belong to the class for every admissible b.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from ._kernels import scalarfuncs as _sf
from .complex_core import DomainError, OrderParameter, TWO_PI, as_disk, as_order

# tripwire for a mis-normalized family: f(h)/h = 1 + O((1+|b|) h)
_NORM_CHECK_STEP = 1e-6
_NORM_CHECK_SCALE = 1e-5


class CandidateKind(IntEnum):
    IDENTITY = _sf.KIND_IDENTITY
    EXTREMAL = _sf.KIND_EXTREMAL
    ROTATED_EXTREMAL = _sf.KIND_ROTATED


@dataclass(frozen=True)
class CandidateFunction:
    """An immutable candidate; ``order`` and ``rotation`` are ignored by the
    kinds that do not use them."""

    kind: CandidateKind
    order: OrderParameter
    rotation: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", CandidateKind(self.kind))
        object.__setattr__(self, "order", as_order(self.order))
        rot = float(self.rotation) % TWO_PI
        if rot >= TWO_PI:
            rot = 0.0
        object.__setattr__(self, "rotation", rot)
        self._check_normalization()

    def _check_normalization(self):
        kind, b, rot = int(self.kind), self.order.b, self.rotation
        if _sf.candidate_value(kind, b, rot, 0j) != 0:
            raise DomainError("candidate must vanish at the origin")
        h = _NORM_CHECK_STEP
        ratio = _sf.candidate_value(kind, b, rot, complex(h)) / h
        if abs(ratio - 1.0) > _NORM_CHECK_SCALE * (1.0 + abs(b)):
            raise DomainError("candidate is not normalized to unit derivative at 0")

    @property
    def label(self) -> str:
        return self.kind.name.lower()


def identity(order=1) -> CandidateFunction:
    """The identity candidate; ``order`` only matters to transplant formulas."""
    return CandidateFunction(CandidateKind.IDENTITY, as_order(order))


def extremal(order) -> CandidateFunction:
    """The bound-attaining candidate z (1 - z)^{-2b}."""
    return CandidateFunction(CandidateKind.EXTREMAL, as_order(order))


def rotated_extremal(order, rotation) -> CandidateFunction:
    """The extremal candidate conjugated by a rotation of angle ``rotation``."""
    return CandidateFunction(CandidateKind.ROTATED_EXTREMAL, as_order(order), rotation)


def evaluate(f: CandidateFunction, z) -> complex:
    """f(z) for a disk point z."""
    z = as_disk(z)
    return _sf.candidate_value(int(f.kind), f.order.b, f.rotation, z.z)


def log_derivative(f: CandidateFunction, z) -> complex:
    """z f'(z)/f(z) in closed form; the removable value at z = 0 is 1."""
    z = as_disk(z)
    return _sf.candidate_log_deriv(int(f.kind), f.order.b, f.rotation, z.z)


def starlikeness_functional(f: CandidateFunction, z) -> complex:
    """Phi(z) = 1 + (z f'/f - 1)/b; membership at z means Re Phi(z) > 0."""
    z = as_disk(z)
    return _sf.candidate_phi(int(f.kind), f.order.b, f.rotation, z.z)
