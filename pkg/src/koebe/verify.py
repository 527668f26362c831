"""Verification suites: every inequality and limit, made executable.

Each suite evaluates one family of checks over a deterministic grid or a
seeded sample, and reduces to a :class:`VerificationReport` carrying the
violation count, the worst margin, and the inputs attaining it.  Margins are
signed slacks: nonnegative means the check holds, and a report passes when
the worst margin stays above ``-tolerance``.

Margin conventions (see the module design notes in ``bounds``):

* ``starlike``  -- absolute: min Re Phi over the grid (positivity check);
* ``two-point`` / ``growth`` -- log-scale, i.e. relative slack of the
  sandwiched quantity against each bound member;
* ``limit``     -- dimensionless slack of the gap-shrink factor (>= 5 per
  decade of eps) and of the final gap against 1e-3 of the limit value.

Reductions are order-independent: the worst margin is a minimum, and among
tied witnesses the lexicographically smallest input tuple is reported, so a
parallel evaluation would produce byte-identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .candidates import CandidateFunction
from .complex_core import DomainError, TWO_PI
from .domain import EPSILON_LADDER, MontelConfig, koebe_radius, limit_gaps

#: fixed transplant anchors used by the starlike and growth suites
V_PANEL = (0.5 + 0j, -0.35 + 0j, 0.3 + 0.4j, -0.2 - 0.55j)

#: angles per radius in the growth suite
GROWTH_ANGLE_COUNT = 16

#: stochastic sampling stays inside this radius; near-boundary behavior is
#: covered by the limit suite with explicit offsets instead
SAMPLING_RADIUS = 0.95

#: inputs closer than this to a removable point are skipped and counted
DEGENERACY_EPS = 1e-12

#: required gap-shrink factor per decade of eps, and the final-gap fraction
LIMIT_SHRINK_FACTOR = 5.0
LIMIT_FINAL_FRACTION = 1e-3

DEFAULT_TOLERANCES = {
    "starlike": 0.0,
    "two-point": 1e-9,
    "growth": 1e-9,
    "limit": 0.0,
}

SUITE_NAMES = tuple(DEFAULT_TOLERANCES)


@dataclass(frozen=True)
class VerificationReport:
    suite_name: str
    n_checks: int
    n_violations: int
    worst_margin: float
    witness: tuple | None
    tolerance: float
    seed: int
    n_skipped: int = 0

    def __post_init__(self):
        if self.n_checks < 1:
            raise ValueError("a report needs at least one evaluated check")
        if (self.n_violations == 0) != (self.worst_margin >= -self.tolerance):
            raise ValueError(
                "inconsistent report: zero violations must match worst_margin >= -tolerance")

    @property
    def passed(self) -> bool:
        return self.n_violations == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_name,
            "n_checks": self.n_checks,
            "n_skipped": self.n_skipped,
            "n_violations": self.n_violations,
            "worst_margin": self.worst_margin,
            "witness": None if self.witness is None else list(self.witness),
            "tolerance": self.tolerance,
            "seed": self.seed,
            "passed": self.passed,
        }


def _polar_grid(grid_n: int) -> np.ndarray:
    """grid_n radii (k/(grid_n+1)) times grid_n angles (2*pi*j/grid_n)."""
    if grid_n < 1:
        raise DomainError(f"grid size must be >= 1, got {grid_n}")
    radii = np.arange(1, grid_n + 1) / (grid_n + 1.0)
    angles = TWO_PI * np.arange(grid_n) / grid_n
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def _witness_columns(z: np.ndarray, v: complex) -> np.ndarray:
    cols = np.empty((z.size, 4))
    cols[:, 0] = z.real
    cols[:, 1] = z.imag
    cols[:, 2] = v.real
    cols[:, 3] = v.imag
    return cols


def _reduce(suite, margins, witnesses, tol, seed, n_skipped):
    worst = float(margins.min())
    n_violations = int(np.count_nonzero(margins < -tol))
    ties = np.flatnonzero(margins == margins.min())
    witness = min(tuple(float(x) for x in witnesses[i]) for i in ties)
    return VerificationReport(suite, int(margins.size), n_violations, worst,
                              witness, tol, seed, n_skipped)


def verify_starlikeness(f: CandidateFunction, grid_n: int, *,
                        tol: float = DEFAULT_TOLERANCES["starlike"],
                        include_transplants: bool = True,
                        v_panel=V_PANEL) -> VerificationReport:
    """Re Phi > 0 over a polar grid, for the candidate and (optionally) its
    transplants at each panel anchor.

    Witness tuples are (Re z, Im z, Re v, Im v); the candidate's own
    functional is recorded with the sentinel anchor v = 0.
    """
    z = _polar_grid(grid_n)
    kind, b, alpha = int(f.kind), f.order.b, f.rotation
    work = z.size * (1 + (len(v_panel) if include_transplants else 0))
    kern = _kernels.get_backend(size_hint=work)

    margins = [kern.starlike_phis(z, kind, b, alpha).real]
    witnesses = [_witness_columns(z, 0j)]
    n_skipped = 0
    if include_transplants:
        for v in v_panel:
            keep = np.abs(z + v) > DEGENERACY_EPS
            n_skipped += int(np.count_nonzero(~keep))
            zv = z[keep]
            margins.append(kern.transplant_phis(zv, v, kind, b, alpha).real)
            witnesses.append(_witness_columns(zv, complex(v)))
    return _reduce("starlike", np.concatenate(margins), np.vstack(witnesses),
                   tol, 0, n_skipped)


def verify_two_point(f: CandidateFunction, n_pairs: int, seed: int, *,
                     tol: float = DEFAULT_TOLERANCES["two-point"]) -> VerificationReport:
    """lower <= |f(u)/f(v)| <= upper over seeded area-uniform pairs.

    Pairs are drawn inside the 0.95-disk via radius = 0.95 sqrt(U); pairs
    hitting a removable point (u, v or u - v below the degeneracy epsilon)
    are skipped and counted.
    """
    if n_pairs < 1:
        raise DomainError(f"need at least one pair, got {n_pairs}")
    rng = np.random.default_rng(seed)
    ru = SAMPLING_RADIUS * np.sqrt(rng.random(n_pairs))
    tu = TWO_PI * rng.random(n_pairs)
    rv = SAMPLING_RADIUS * np.sqrt(rng.random(n_pairs))
    tv = TWO_PI * rng.random(n_pairs)
    u = ru * np.exp(1j * tu)
    v = rv * np.exp(1j * tv)
    keep = ((np.abs(u) > DEGENERACY_EPS) & (np.abs(v) > DEGENERACY_EPS)
            & (np.abs(u - v) > DEGENERACY_EPS))
    u, v = u[keep], v[keep]
    n_skipped = int(np.count_nonzero(~keep))
    if u.size == 0:
        raise DomainError("every sampled pair was degenerate")

    kind, b, alpha = int(f.kind), f.order.b, f.rotation
    kern = _kernels.get_backend(size_hint=u.size)
    lower, upper = kern.two_point_bounds_arrays(u, v, b)
    mid = np.abs(kern.candidate_values(u, kind, b, alpha)
                 / kern.candidate_values(v, kind, b, alpha))
    log_mid = np.log(mid)
    margins = np.minimum(log_mid - np.log(lower), np.log(upper) - log_mid)
    cols = np.column_stack([u.real, u.imag, v.real, v.imag])
    return _reduce("two-point", margins, cols, tol, seed, n_skipped)


def verify_growth(f: CandidateFunction, n_radii: int, *,
                  tol: float = DEFAULT_TOLERANCES["growth"],
                  v_panel=V_PANEL) -> VerificationReport:
    """Growth sandwich on |F(z)| for the transplants of ``f``.

    z runs over ``n_radii`` radii up to the sampling cap times a fixed set of
    angles, for every panel anchor.
    """
    if n_radii < 1:
        raise DomainError(f"need at least one radius, got {n_radii}")
    radii = SAMPLING_RADIUS * np.arange(1, n_radii + 1) / n_radii
    angles = TWO_PI * np.arange(GROWTH_ANGLE_COUNT) / GROWTH_ANGLE_COUNT
    z = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()

    kind, b, alpha = int(f.kind), f.order.b, f.rotation
    kern = _kernels.get_backend(size_hint=z.size * len(v_panel))
    margins, witnesses = [], []
    n_skipped = 0
    for v in v_panel:
        keep = np.abs(z + v) > DEGENERACY_EPS
        n_skipped += int(np.count_nonzero(~keep))
        zv = z[keep]
        mid = np.abs(kern.transplant_values(zv, v, kind, b, alpha))
        lower, upper = kern.growth_bounds_arrays(np.abs(zv), b)
        log_mid = np.log(mid)
        margins.append(np.minimum(log_mid - np.log(lower), np.log(upper) - log_mid))
        witnesses.append(_witness_columns(zv, complex(v)))
    return _reduce("growth", np.concatenate(margins), np.vstack(witnesses),
                   tol, 0, n_skipped)


def verify_limit(cfg: MontelConfig, theta_grid_n: int, *,
                 tol: float = DEFAULT_TOLERANCES["limit"]) -> VerificationReport:
    """M(1 - eps, theta) must converge to R(theta) along the offset ladder.

    Per angle, every gap must shrink by at least ``LIMIT_SHRINK_FACTOR`` per
    decade of eps and the final gap must stay below ``LIMIT_FINAL_FRACTION``
    of R(theta); the margin is the worse of the two normalized slacks.
    """
    if theta_grid_n < 1:
        raise DomainError(f"need at least one angle, got {theta_grid_n}")
    epsilons = [e for e in EPSILON_LADDER if e < 1.0 - cfg.r0]
    if len(epsilons) < 2:
        raise DomainError(
            f"r0 = {cfg.r0} leaves fewer than two usable offsets in {EPSILON_LADDER}")
    thetas = TWO_PI * np.arange(theta_grid_n) / theta_grid_n
    margins = np.empty(theta_grid_n)
    for j, theta in enumerate(thetas):
        gaps = [g for _, g in limit_gaps(theta, cfg, epsilons)]
        ratios = [gaps[i] / gaps[i + 1] if gaps[i + 1] > 0 else math.inf
                  for i in range(len(gaps) - 1)]
        shrink_slack = min(ratios) / LIMIT_SHRINK_FACTOR - 1.0
        final_slack = 1.0 - gaps[-1] / (LIMIT_FINAL_FRACTION * koebe_radius(theta, cfg))
        margins[j] = min(shrink_slack, final_slack)
    return _reduce("limit", margins, thetas.reshape(-1, 1), tol, 0, 0)
