"""Growth and two-point distortion bounds, plus the automorphism transplant.

The one-point growth bound sandwiches the transplant modulus,

    2|z| / ((1+|b|)(1+|z|)^2)  <=  |F(z)|  <=  2|z| / ((1+|b|)(1-|z|)^2),

and pulling it back through the Moebius shift yields the two-point bound on
|f(u)/f(v)|.  All positive-real bases raised to complex exponents inside the
real-valued bounds use modulus semantics (x**Re c); see ``pos_power``.

Validity caveat, quantified by the verification suites: the factor (1+|b|)
makes the sandwich exact and sharp at |b| = 1 (it reduces to the classical
starlike bounds), but for |b| != 1 the bounds are not attained by the
extremal candidate everywhere -- near-coincident pairs u ~ v already force
both members to 2/(1+|b|) times the trivial ratio 1.  The suites report such
violations rather than hiding them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ._kernels import scalarfuncs as _sf
from .candidates import CandidateFunction, evaluate
from .complex_core import DegenerateInputError, as_disk, as_order


@dataclass(frozen=True)
class BoundPair:
    """A two-sided positive bound, optionally carrying the bounded quantity."""

    lower: float
    upper: float
    middle: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.lower <= self.upper:
            raise ValueError(f"bounds must satisfy 0 <= lower <= upper, got {self}")
        if self.middle is not None and not self.middle >= 0.0:
            raise ValueError("middle quantity must be nonnegative")

    def with_middle(self, value: float) -> "BoundPair":
        return replace(self, middle=float(value))

    @property
    def width(self) -> float:
        return self.upper - self.lower


def growth_bounds(z, b) -> BoundPair:
    """One-point growth bounds at z (z = 0 gives the degenerate pair (0, 0))."""
    z = as_disk(z)
    b = as_order(b)
    lo, up = _sf.growth_lower_upper(z.modulus, b.b)
    return BoundPair(lo, up)


def transplant(f: CandidateFunction, v, z) -> complex:
    """Moebius transplant of ``f`` anchored at ``v``, evaluated at ``z``.

    F(z) = v (1 - u conj(v))^{2b-1} (u - v) f(u) / (u (1-|v|^2)^{2b} f(v))

    with u the image of z under the shift sending 0 to v.  F(0) = 0 and
    F'(0) = 1 regardless of ``f`` and ``b``; the anchor must be nonzero and
    z = -v (i.e. u = 0) is excluded.
    """
    v = as_disk(v)
    z = as_disk(z)
    if v.z == 0:
        raise DegenerateInputError("transplant anchor v must be nonzero")
    if z.z == -v.z:
        raise DegenerateInputError("transplant is degenerate at z = -v (shifted point is 0)")
    return _sf.transplant_value(int(f.kind), f.order.b, f.rotation, v.z, z.z)


def two_point_bounds(u, v, b) -> BoundPair:
    """Two-point distortion bounds on |f(u)/f(v)| over the order-b class.

    The lower and upper members differ only in the sign of |u - v| inside the
    squared bracket.  The bounded ratio itself can be attached afterwards via
    :meth:`BoundPair.with_middle`.
    """
    u = as_disk(u)
    v = as_disk(v)
    b = as_order(b)
    if u.z == v.z:
        raise DegenerateInputError("u must differ from v")
    if u.z == 0:
        raise DegenerateInputError("u must be nonzero")
    if v.z == 0:
        raise DegenerateInputError("v must be nonzero")
    lo, up = _sf.two_point_lower_upper(u.z, v.z, b.b)
    return BoundPair(lo, up)


def candidate_ratio(f: CandidateFunction, u, v) -> float:
    """|f(u)/f(v)|, the quantity the two-point bounds sandwich."""
    u = as_disk(u)
    v = as_disk(v)
    if v.z == 0:
        raise DegenerateInputError("v must be nonzero")
    return abs(evaluate(f, u) / evaluate(f, v))
