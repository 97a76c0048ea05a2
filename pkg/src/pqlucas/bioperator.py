"""A three-term differential operator on normalized analytic functions.

For parameters ``lam >= 1``, ``mu >= 0``, ``delta >= 0`` the operator acts
on ``f(z) = z + a2 z^2 + ...`` as

    D[f](z) = (1 - lam) (f/z)^mu + lam f'(z) (f/z)^(mu-1) + xi delta z f''(z),

with ``xi = (2 lam + mu) / (2 lam + 1)``.  ``D[f]`` has constant term 1 and
its first two Taylor coefficients are clean combinations of ``a2``, ``a3``:

    [z^1]  c1 * a2                       with  c1 = mu + lam + 2 xi delta
    [z^2]  (mu + 2 lam) * ( (mu-1)/2 * a2^2 + (1 + 6 delta/(2 lam + 1)) * a3 )

The same expansion around the compositional inverse ``g = f^{-1}`` gives the
mirrored pair (``-c1 a2`` at first order, and an ``a2^2``-heavy second
order).  Everything downstream (bounds, oracle) leans on those four closed
forms, so this module exposes both the honest series pipeline and the closed
forms, plus a sampled real-part membership check on sub-disks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import series as ps
from .series import FunctionSpec, TruncatedSeries, revert_series

MEMBERSHIP_MODES = ("operator", "starlike", "convex")

# Grid points whose denominator is smaller than this are flagged, not used.
_DENOMINATOR_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    """Operator parameters ``(lam, mu, delta)`` plus the order bound ``alpha``.

    Validation mirrors the definition of the function class: ``lam >= 1``,
    ``mu >= 0``, ``delta >= 0`` and ``0 <= alpha < 1``.  Under those ranges
    the derived combinations ``c1`` and ``c2`` are automatically >= 1.
    """

    lam: float
    mu: float
    delta: float
    alpha: float = 0.0

    def __post_init__(self) -> None:
        for name in ("lam", "mu", "delta", "alpha"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not all(math.isfinite(getattr(self, n)) for n in ("lam", "mu", "delta", "alpha")):
            raise ValueError("parameters must be finite")
        if self.lam < 1.0:
            raise ValueError("lam must be >= 1")
        if self.mu < 0.0:
            raise ValueError("mu must be >= 0")
        if self.delta < 0.0:
            raise ValueError("delta must be >= 0")
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError("alpha must lie in [0, 1)")

    @property
    def xi(self) -> float:
        return (2.0 * self.lam + self.mu) / (2.0 * self.lam + 1.0)

    @property
    def c1(self) -> float:
        """First-order coefficient multiplier ``mu + lam + 2 xi delta``."""
        return self.mu + self.lam + 2.0 * self.xi * self.delta

    @property
    def c2(self) -> float:
        """Second-order coefficient multiplier ``mu + 2 lam + 2 xi delta``."""
        return self.mu + 2.0 * self.lam + 2.0 * self.xi * self.delta


def _operator_series(params: ClassParams, s: TruncatedSeries) -> TruncatedSeries:
    """Apply the operator to a normalized series (c0 = 0, c1 = 1)."""
    ratio = ps.shift_down(s)
    out = ps.scale(ps.pow_real(ratio, params.mu), 1.0 - params.lam)
    out = ps.add(
        out,
        ps.scale(ps.mul(ps.derivative(s), ps.pow_real(ratio, params.mu - 1.0)), params.lam),
    )
    out = ps.add(
        out,
        ps.scale(ps.shift_up(ps.derivative(ps.derivative(s))), params.xi * params.delta),
    )
    return out


def apply_operator(params: ClassParams, f: FunctionSpec, order: int = 2) -> TruncatedSeries:
    """Taylor series of ``D[f]`` through ``order`` (constant term 1)."""
    if order < 2:
        raise ValueError("operator expansion needs order >= 2")
    return _operator_series(params, f.to_series(order + 1))


def apply_operator_inverse_side(
    params: ClassParams, f: FunctionSpec, order: int = 2
) -> TruncatedSeries:
    """Taylor series of ``D[g]`` for ``g = f^{-1}``, through ``order``.

    The inverse is produced by series reversion, so ``order`` must stay
    within what the coefficients of ``f`` determine (``order <= truncation``).
    """
    if order < 2:
        raise ValueError("operator expansion needs order >= 2")
    g = revert_series(f, order + 1)
    return _operator_series(params, g)


def direct_linear_coefficient(params: ClassParams, a2: float) -> float:
    """Closed form of ``[z^1] D[f]``."""
    return params.c1 * a2


def direct_quadratic_coefficient(params: ClassParams, a2: float, a3: float) -> float:
    """Closed form of ``[z^2] D[f]``."""
    band = 1.0 + 6.0 * params.delta / (2.0 * params.lam + 1.0)
    return (params.mu + 2.0 * params.lam) * (0.5 * (params.mu - 1.0) * a2 * a2 + band * a3)


def inverse_linear_coefficient(params: ClassParams, a2: float) -> float:
    """Closed form of ``[w^1] D[f^{-1}]``; the sign flips against the direct side."""
    return -params.c1 * a2


def inverse_quadratic_coefficient(params: ClassParams, a2: float, a3: float) -> float:
    """Closed form of ``[w^2] D[f^{-1}]``."""
    lam1 = 2.0 * params.lam + 1.0
    return (params.mu + 2.0 * params.lam) * (
        (0.5 * (params.mu + 3.0) + 12.0 * params.delta / lam1) * a2 * a2
        - (1.0 + 6.0 * params.delta / lam1) * a3
    )


@dataclass(frozen=True)
class CoefficientIdentityReport:
    """Pipeline vs closed-form values for the four operator coefficients.

    Order of entries: direct ``z``, direct ``z^2``, inverse ``w``,
    inverse ``w^2``.
    """

    pipeline: tuple[complex, complex, complex, complex]
    closed_form: tuple[float, float, float, float]
    residuals: tuple[float, float, float, float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals)


def extract_coefficient_identities(
    params: ClassParams, f: FunctionSpec
) -> CoefficientIdentityReport:
    """Expand ``D[f]`` and ``D[f^{-1}]`` and compare against the closed forms."""
    if f.truncation < 3:
        raise ValueError("identity extraction needs coefficients a2 and a3")
    a2 = f.coefficient(2)
    a3 = f.coefficient(3)
    direct = apply_operator(params, f, order=2)
    inverse = apply_operator_inverse_side(params, f, order=2)
    pipeline = (
        direct.coefficient(1),
        direct.coefficient(2),
        inverse.coefficient(1),
        inverse.coefficient(2),
    )
    closed = (
        direct_linear_coefficient(params, a2),
        direct_quadratic_coefficient(params, a2, a3),
        inverse_linear_coefficient(params, a2),
        inverse_quadratic_coefficient(params, a2, a3),
    )
    residuals = tuple(abs(pipe - ref) for pipe, ref in zip(pipeline, closed))
    return CoefficientIdentityReport(pipeline, closed, residuals)


@dataclass(frozen=True)
class DiskGrid:
    """Polar sampling grid on the closed disk of radius ``r_max < 1``.

    Radii are ``r_max * k / n_radii`` for ``k = 1..n_radii`` (the origin is
    excluded; every sampled expression is regular there anyway), angles are
    the ``n_angles`` equispaced directions starting at 0.
    """

    r_max: float = 0.95
    n_radii: int = 64
    n_angles: int = 256

    def __post_init__(self) -> None:
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")
        if self.n_radii < 1 or self.n_angles < 1:
            raise ValueError("grid resolutions must be >= 1")

    def points(self) -> np.ndarray:
        radii = self.r_max * np.arange(1, self.n_radii + 1) / self.n_radii
        angles = 2.0 * np.pi * np.arange(self.n_angles) / self.n_angles
        return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of a sampled real-part check.

    ``passed`` means the real part stayed strictly above ``alpha`` at every
    evaluated grid point.  Points with a vanishing denominator are excluded
    from the minimum and listed in ``flagged``; a grid whose points are all
    flagged cannot certify anything and fails with ``min_real_part = inf``.
    A pass is sampled evidence on the chosen grid, not a proof.
    """

    mode: str
    alpha: float
    passed: bool
    min_real_part: float
    margin: float
    worst_point: complex | None
    n_evaluated: int
    flagged: tuple[complex, ...] = ()


def _horner(coeffs: tuple[float, ...], z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def check_membership_realpart(
    params: ClassParams,
    f: FunctionSpec,
    grid: DiskGrid = DiskGrid(),
    mode: str = "operator",
) -> MembershipReport:
    """Check ``Re(expr) > alpha`` on the grid, for the mode's expression.

    Modes: ``"operator"`` uses ``D[f](z)``, ``"starlike"`` uses
    ``z f'(z)/f(z)``, ``"convex"`` uses ``1 + z f''(z)/f'(z)``.  The
    minimum is an order-independent reduction, so any partition of the grid
    yields the same report; ties pick the first point in (radius, angle)
    order.
    """
    if mode not in MEMBERSHIP_MODES:
        raise ValueError(f"unknown membership mode: {mode!r}")
    z = grid.points()
    coeffs = f.full_coefficients()
    fz = _horner(coeffs, z)
    d1 = tuple((k + 1) * c for k, c in enumerate(coeffs[1:]))
    fpz = _horner(d1, z)

    if mode == "starlike":
        denom = fz
    elif mode == "convex":
        denom = fpz
    else:
        denom = fz / z  # the ratio raised to real powers below
    valid = np.abs(denom) >= _DENOMINATOR_TOL
    zv = z[valid]

    with np.errstate(all="ignore"):
        if mode == "starlike":
            values = zv * fpz[valid] / fz[valid]
        elif mode == "convex":
            d2 = tuple((k + 1) * (k + 2) * c for k, c in enumerate(coeffs[2:]))
            values = 1.0 + zv * _horner(d2, zv) / fpz[valid]
        else:
            d2 = tuple((k + 1) * (k + 2) * c for k, c in enumerate(coeffs[2:]))
            log_ratio = np.log(denom[valid])
            values = (
                (1.0 - params.lam) * np.exp(params.mu * log_ratio)
                + params.lam * fpz[valid] * np.exp((params.mu - 1.0) * log_ratio)
                + params.xi * params.delta * zv * _horner(d2, zv)
            )

    flagged = tuple(complex(w) for w in z[~valid])
    if zv.size == 0:
        return MembershipReport(
            mode, params.alpha, False, math.inf, math.inf, None, 0, flagged
        )
    re = values.real
    idx = int(np.argmin(re))
    min_re = float(re[idx])
    return MembershipReport(
        mode=mode,
        alpha=params.alpha,
        passed=bool(min_re > params.alpha),
        min_real_part=min_re,
        margin=min_re - params.alpha,
        worst_point=complex(zv[idx]),
        n_evaluated=int(zv.size),
        flagged=flagged,
    )
