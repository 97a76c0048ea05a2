"""Brute-force verification of the closed-form coefficient bounds.

The bounds in :mod:`pqlucas.bounds` are derived by eliminating the free
coefficients ``r1, r2`` and ``s1, s2`` of the two subordinating functions
(one per side of the bi-univalent pair) from the operator coefficient
identities.  This module runs that elimination numerically: it rebuilds
``a2`` and ``a3`` from a sampled ``(r1, r2, s1, s2)``, sweeps the
constraint box on a dense corner-inclusive grid, and compares the observed
supremum of each functional against its closed-form bound.

Constraint boxes ("modes"):

* ``"paper"``   -- the closed box ``|r1|, |r2|, |s2| <= 1`` with
  ``s1 = -r1`` enforced; this is the exact feasible set used in the
  derivation of the bounds, so suprema here land on the proof's corners.
* ``"schwarz"`` -- additionally ``|r2| <= 1 - r1^2`` and
  ``|s2| <= 1 - s1^2``, the sharper second-coefficient constraint actually
  satisfied by the subordinating functions.  Its suprema can only be
  smaller, which is reported, never asserted against the bounds' corners.

Reconstruction routes (all exact consequences of the coefficient
identities under ``s1 = -r1``):

    a2^2        = p^3 (r2 + s2) / theta
    a3          = p^2 (r1^2 + s1^2) / (2 c1^2) + p (r2 - s2) / (2 c2)
    a3 - u a2^2 = (1 - u) p^3 (r2 + s2) / theta + p (r2 - s2) / (2 c2)

Note the Fekete-Szego line substitutes the squared-coefficient route for
``a2^2`` inside ``a3`` as well; mixing it with the ``r1``-route ``a3``
above would double-count ``r1`` and is not what the functional eliminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import bounds as bnd
from .bounds import BoundInputs, DegenerateDenominatorError
from .bioperator import ClassParams

FUNCTIONALS = ("abs_a2", "abs_a3", "fekete")
MODES = ("paper", "schwarz")

_BOX_TOL = 1e-12


@dataclass(frozen=True)
class SchwarzSample:
    """One point of the constraint box, with ``s1 = -r1`` built in."""

    r1: float
    r2: float
    s1: float
    s2: float

    def __post_init__(self) -> None:
        for name in ("r1", "r2", "s1", "s2"):
            value = float(getattr(self, name))
            object.__setattr__(self, name, value)
            if abs(value) > 1.0 + _BOX_TOL:
                raise ValueError(f"{name} outside the unit box")
        if abs(self.s1 + self.r1) > _BOX_TOL:
            raise ValueError("s1 must equal -r1")

    @classmethod
    def free(cls, r1: float, r2: float, s2: float) -> "SchwarzSample":
        return cls(r1, r2, -r1, s2)

    def within_schwarz_cap(self) -> bool:
        """True when the sharper second-coefficient caps also hold."""
        cap_r = 1.0 - self.r1 * self.r1
        cap_s = 1.0 - self.s1 * self.s1
        return abs(self.r2) <= cap_r + _BOX_TOL and abs(self.s2) <= cap_s + _BOX_TOL


@dataclass(frozen=True)
class ReconstructedPair:
    """Coefficient data rebuilt from one sample.

    ``a2_sq`` comes from the squared-coefficient route and may be negative
    (the sample need not be realizable); ``a2_abs = sqrt(|a2_sq|)``.
    ``a2_linear`` is the first-order route ``p r1 / c1``, kept separately
    because the two routes agree only on realizable samples.
    """

    a2_sq: float
    a2_abs: float
    a3: float
    a2_linear: float


def reconstruct(inputs: BoundInputs, sample: SchwarzSample) -> ReconstructedPair:
    """Rebuild ``(a2, a3)`` data from one sample of the constraint box."""
    if inputs.theta_zero:
        raise DegenerateDenominatorError("reconstruction degenerate: theta = 0")
    p = inputs.p
    c1 = inputs.params.c1
    c2 = inputs.params.c2
    a2_sq = p**3 * (sample.r2 + sample.s2) / inputs.theta
    a3 = p * p * (sample.r1**2 + sample.s1**2) / (2.0 * c1 * c1) + p * (
        sample.r2 - sample.s2
    ) / (2.0 * c2)
    return ReconstructedPair(
        a2_sq=a2_sq,
        a2_abs=math.sqrt(abs(a2_sq)),
        a3=a3,
        a2_linear=p * sample.r1 / c1,
    )


def _functional_values(
    inputs: BoundInputs, functional: str, r1: float, r2: np.ndarray, s2: np.ndarray
) -> np.ndarray:
    p = inputs.p
    th = inputs.theta
    c1 = inputs.params.c1
    c2 = inputs.params.c2
    if functional == "abs_a2":
        return np.sqrt(np.abs(p**3 * (r2 + s2) / th))
    if functional == "abs_a3":
        return np.abs(p * p * r1 * r1 / (c1 * c1) + p * (r2 - s2) / (2.0 * c2))
    if functional == "fekete":
        return np.abs(
            (1.0 - inputs.upsilon) * p**3 * (r2 + s2) / th
            + p * (r2 - s2) / (2.0 * c2)
        )
    raise ValueError(f"unknown functional: {functional!r}")


def closed_form_bound(inputs: BoundInputs, functional: str) -> float:
    """The matching closed-form bound value for a functional."""
    if functional == "abs_a2":
        return bnd.bound_a2(inputs).value
    if functional == "abs_a3":
        return bnd.bound_a3(inputs).value
    if functional == "fekete":
        return bnd.fekete_szego_bound(inputs).value
    raise ValueError(f"unknown functional: {functional!r}")


@dataclass(frozen=True)
class SupremumReport:
    """Grid supremum of one functional next to its closed-form bound."""

    functional: str
    mode: str
    grid_n: int
    supremum: float
    argmax: SchwarzSample
    bound: float

    @property
    def ratio(self) -> float:
        """Tightness ratio ``supremum / bound`` (1.0 for the 0/0 corner)."""
        if math.isinf(self.bound):
            return 0.0
        if self.bound > 0.0:
            return self.supremum / self.bound
        return 1.0 if self.supremum == 0.0 else math.inf

    def as_dict(self) -> dict:
        return {
            "functional": self.functional,
            "mode": self.mode,
            "grid_n": self.grid_n,
            "supremum": self.supremum,
            "argmax": [self.argmax.r1, self.argmax.r2, self.argmax.s1, self.argmax.s2],
            "bound": self.bound,
            "ratio": self.ratio,
        }


def sweep_max(
    inputs: BoundInputs, functional: str, grid_n: int = 21, mode: str = "paper"
) -> SupremumReport:
    """Maximize one functional over the constraint box on a dense grid.

    Every axis is sampled with ``grid_n`` equispaced points including both
    endpoints, so the corners of the box are always on the grid; all three
    functionals are |affine| or even in each variable, which puts their true
    suprema on those corners.  The reduction is deterministic: ties resolve
    to the lexicographically smallest ``(r1, r2, s2)``.
    """
    if functional not in FUNCTIONALS:
        raise ValueError(f"unknown functional: {functional!r}")
    if mode not in MODES:
        raise ValueError(f"unknown mode: {mode!r}")
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    if inputs.theta_zero:
        raise DegenerateDenominatorError("sweep degenerate: theta = 0")

    best_value = -math.inf
    best_key = (0.0, 0.0, 0.0)
    for r1 in np.linspace(-1.0, 1.0, grid_n):
        cap = 1.0 if mode == "paper" else 1.0 - float(r1) * float(r1)
        r2_vals = np.linspace(-cap, cap, grid_n)
        s2_vals = np.linspace(-cap, cap, grid_n)
        r2_grid, s2_grid = np.meshgrid(r2_vals, s2_vals, indexing="ij")
        values = _functional_values(inputs, functional, float(r1), r2_grid, s2_grid)
        flat = int(np.argmax(values))  # first max in C order = lexicographic
        value = float(values.flat[flat])
        if value > best_value:
            i, j = divmod(flat, grid_n)
            best_value = value
            best_key = (float(r1), float(r2_vals[i]), float(s2_vals[j]))
    return SupremumReport(
        functional=functional,
        mode=mode,
        grid_n=grid_n,
        supremum=best_value,
        argmax=SchwarzSample.free(*best_key),
        bound=closed_form_bound(inputs, functional),
    )


@dataclass(frozen=True)
class VerificationReport:
    """Dominance verdicts for all functionals at one evaluation point."""

    inputs: BoundInputs
    reports: tuple[SupremumReport, ...]
    tolerance: float
    passes: tuple[bool, ...]

    @property
    def all_pass(self) -> bool:
        return all(self.passes)


def verify_bounds(
    inputs: BoundInputs,
    grid_n: int = 21,
    mode: str = "paper",
    tolerance: float = 1e-9,
) -> VerificationReport:
    """Check ``supremum <= bound + tolerance`` for every functional."""
    reports = tuple(sweep_max(inputs, f, grid_n, mode) for f in FUNCTIONALS)
    passes = tuple(r.supremum <= r.bound + tolerance for r in reports)
    return VerificationReport(inputs, reports, tolerance, passes)


def random_inputs(
    rng: np.random.Generator,
    count: int,
    *,
    p_min: float = 0.1,
    theta_min: float = 2.0,
    max_tries: int = 100_000,
) -> list[BoundInputs]:
    """Draw nondegenerate evaluation points for verification sweeps.

    Parameters are uniform over ``lam in [1,3]``, ``mu in [0,3]``,
    ``delta in [0,2]``, ``p, q in [-2,2]`` and ``upsilon in [-1,3]``;
    draws with ``|p| < p_min`` or ``|theta| < theta_min`` are rejected so
    that every returned point is safely away from the degenerate set.  The
    sequence is fully determined by the generator state.
    """
    out: list[BoundInputs] = []
    for _ in range(max_tries):
        if len(out) >= count:
            break
        lam = rng.uniform(1.0, 3.0)
        mu = rng.uniform(0.0, 3.0)
        delta = rng.uniform(0.0, 2.0)
        p = rng.uniform(-2.0, 2.0)
        q = rng.uniform(-2.0, 2.0)
        upsilon = rng.uniform(-1.0, 3.0)
        if abs(p) < p_min:
            continue
        inputs = BoundInputs(ClassParams(lam, mu, delta), p, q, upsilon)
        if abs(inputs.theta) < theta_min:
            continue
        out.append(inputs)
    if len(out) < count:
        raise RuntimeError("rejection sampling did not converge")
    return out
