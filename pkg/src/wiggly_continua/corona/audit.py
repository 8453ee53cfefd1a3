"""Module for the scaling audit of a finished construction."""

import logging
import math

import numpy as np
from scipy.stats import linregress

from ..exceptions import ScaleBelowResolutionError
from ..models.corona import ScalingAuditModel, ScalingProbe
from ..multiscale import ScaleGrid
from ..utils.parallel import parallel_map
from .client import CoronaClient
from .tree import CoronaMeasure

logger = logging.getLogger("wiggly-continua.corona")


class AuditMixin(CoronaClient):
    """Mixin fitting the constants of μ(B(x, r)) <= C·(r/R)·exp(-C′·∫β²)."""

    def _integral_prefixes(self, x: np.ndarray, grid: ScaleGrid) -> np.ndarray:
        """log(1/λ)·Σ_{i<k} β(x, λ^i)² for every position k of the grid."""
        profile = self.beta_profile(x, grid)
        squares = profile.beta**2
        prefixes = np.concatenate([[0.0], np.cumsum(squares)[:-1]])
        return grid.log_step * prefixes

    def scaling_audit(
        self,
        measure: CoronaMeasure,
        grid: ScaleGrid | None = None,
        probe_count: int | None = None,
        seed: int | None = None,
    ) -> ScalingAuditModel:
        """
        Probe μ(B(x, r)) at atoms and fit the scaling constants.

        Probe points are drawn from the atoms with probability equal to their
        mass; probe radii cycle through the grid scales, largest first. The
        integral at a probe is the Riemann sum of β² over the grid scales
        above r, measured on the whole sample.

        Args:
            measure: The construction to audit
            grid: Probe scales (defaults to the λ-grid between the resolution
                floor and the root radius)
            probe_count: Number of probes (defaults to the configured count)
            seed: Random seed for the probe points

        Returns:
            The probes and fitted constants
        """
        config = self.corona_config
        probe_count = config.probe_count if probe_count is None else probe_count
        seed = config.seed if seed is None else seed
        big_r = measure.root_radius
        if grid is None:
            grid = ScaleGrid.spanning(
                self.multiscale_config.lam, self.min_scale, big_r
            )
        usable = grid.truncated(min_scale=self.min_scale)
        if usable is None:
            error_msg = (
                f"no probe scale lies above the resolution floor {self.min_scale:.6g}"
            )
            raise ScaleBelowResolutionError(error_msg)
        grid = usable

        rng = np.random.default_rng(seed)
        weights = measure.atom_masses / math.fsum(measure.atom_masses)
        picks = rng.choice(len(weights), size=probe_count, p=weights)
        positions = np.arange(probe_count) % len(grid)
        atoms = sorted(set(int(i) for i in picks))
        prefixes = dict(
            zip(
                atoms,
                parallel_map(
                    lambda i: self._integral_prefixes(measure.atom_points[i], grid),
                    atoms,
                ),
                strict=True,
            )
        )

        scales = grid.scales
        probes: list[ScalingProbe] = []
        for atom, position in zip(picks, positions, strict=True):
            x = measure.atom_points[atom]
            r = float(scales[position])
            probes.append(
                ScalingProbe(
                    x=[float(c) for c in x],
                    r=r,
                    mass=measure.query(x, r),
                    integral=float(prefixes[int(atom)][position]),
                )
            )
        return fit_scaling(probes, big_r)


def fit_scaling(probes: list[ScalingProbe], root_radius: float) -> ScalingAuditModel:
    """
    Fit C, C′ to a list of probes.

    C is the smallest constant with μ <= C·r/R on every probe. C′ is the
    largest value keeping μ <= C·(r/R)·exp(-C′·∫) on every probe with the
    same C; probes with a zero integral or zero mass do not bound it, and it
    is left unconstrained when no probe does. The slope of log(μR/r)
    regressed on the integral is reported alongside.
    """
    mass = np.array([p.mass for p in probes])
    r = np.array([p.r for p in probes])
    integral = np.array([p.integral for p in probes])
    ratio = mass * root_radius / r
    c_linear = float(ratio.max())

    binding = (integral > 0) & (mass > 0)
    constrained = bool(np.any(binding))
    c_prime = 0.0
    if constrained:
        room = np.log(c_linear / ratio[binding]) / integral[binding]
        c_prime = max(0.0, float(room.min()))

    slope: float | None = None
    stderr: float | None = None
    positive = ratio > 0
    if np.count_nonzero(positive) >= 3 and np.ptp(integral[positive]) > 0:
        fit = linregress(integral[positive], np.log(ratio[positive]))
        slope, stderr = float(fit.slope), float(fit.stderr)

    tolerance = 1.0 + 1e-9
    linear_bound = c_linear * r / root_radius * tolerance
    violations = int(
        np.count_nonzero(mass > linear_bound)
        + np.count_nonzero(mass > linear_bound * np.exp(-c_prime * integral))
    )
    if violations:
        logger.warning(f"Scaling audit found {violations} violated bounds")
    logger.info(
        f"Scaling audit over {len(probes)} probes: C = {c_linear:.4g}, "
        f"C' = {c_prime:.4g}"
    )
    return ScalingAuditModel(
        root_radius=root_radius,
        probes=probes,
        c_linear=c_linear,
        c_unnormalised=float((mass / r).max()),
        c_prime=c_prime,
        slope=slope,
        stderr=stderr,
        c_prime_constrained=constrained,
        violations=violations,
    )
