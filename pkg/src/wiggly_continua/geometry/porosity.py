"""Module for porosity probes: empty balls inside B(x, r)."""

import logging
import math

import numpy as np

from ..exceptions import ScaleBelowResolutionError
from .client import GeometryClient
from .types import PorosityResult

logger = logging.getLogger("wiggly-continua.geometry")

MAX_ACTIVE_CELLS = 200_000


class PorosityMixin(GeometryClient):
    """Mixin for ε-porosity probes."""

    def porosity_probe(self, x: np.ndarray, r: float, eps: float) -> PorosityResult:
        """
        Look for a ball B(z, εr) inside B(x, r) that misses the sample.

        A centre z qualifies when |z - x| <= r - εr and no sample point lies
        at distance less than εr - h from z. The search starts from a lattice
        of pitch εr/4 and refines only the cells whose bounds still allow a
        qualifying centre, down to a pitch of h/2.

        Args:
            x: Ball centre
            r: Ball radius
            eps: Porosity parameter in (0, 1/2)

        Returns:
            The probe result; ``witness`` is the qualifying centre with the
            largest clearance found

        Raises:
            ValueError: If eps is outside (0, 1/2)
            ScaleBelowResolutionError: If εr < 2h
        """
        if not 0.0 < eps < 0.5:
            error_msg = f"porosity parameter must lie in (0, 1/2), got {eps}"
            raise ValueError(error_msg)
        h = self.sample.resolution
        if eps * r < 2.0 * h:
            error_msg = (
                f"porosity scale {eps * r:.6g} is below the resolution floor "
                f"{2 * h:.6g}"
            )
            raise ScaleBelowResolutionError(error_msg)

        x = np.asarray(x, dtype=float)
        d = self.sample.ambient_dim
        target = eps * r - h
        reach = r - eps * r
        pitch = eps * r / 4.0
        steps = math.ceil(reach / pitch)
        axis = pitch * np.arange(-steps, steps + 1)
        grids = np.meshgrid(*([axis] * d), indexing="ij")
        centres = np.stack([g.ravel() for g in grids], axis=1) + x

        offsets = np.stack(
            np.meshgrid(*([np.array([-1.0, 1.0])] * d), indexing="ij"), axis=-1
        ).reshape(-1, d)

        while True:
            half_diag = pitch * math.sqrt(d) / 2.0
            gap = np.linalg.norm(centres - x, axis=1)
            clearance, _ = self.sample.kdtree.query(centres)
            hits = np.flatnonzero((gap <= reach) & (clearance > target))
            if hits.size:
                best = hits[np.argmax(clearance[hits])]
                return PorosityResult(
                    porous=True,
                    witness=tuple(float(c) for c in centres[best]),
                    clearance=float(clearance[best]),
                )
            if pitch <= h / 2.0:
                return PorosityResult(porous=False)

            alive = (gap - half_diag <= reach) & (clearance + half_diag > target)
            if not np.any(alive):
                return PorosityResult(porous=False)
            centres = centres[alive]
            if len(centres) > MAX_ACTIVE_CELLS:
                logger.debug(
                    f"Porosity search at ({x}, {r:.3g}) keeps the "
                    f"{MAX_ACTIVE_CELLS} most open cells of {len(centres)}"
                )
                keep = np.argsort(-clearance[alive], kind="stable")[:MAX_ACTIVE_CELLS]
                centres = centres[np.sort(keep)]
            children = centres[:, None, :] + offsets[None, :, :] * (pitch / 4.0)
            centres = children.reshape(-1, d)
            pitch /= 2.0
