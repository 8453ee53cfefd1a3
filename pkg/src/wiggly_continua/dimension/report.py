"""Module for assembling dimension reports."""

import logging

import numpy as np

from ..corona import CoronaMeasure
from ..exceptions import DegenerateFitError
from ..models.constants import MASS_BOUND_SLACK
from ..models.dimension import BoundInputs, DimensionReport
from .boxcount import BoxCountMixin
from .bounds import theorem_bounds
from .local import LocalMixin, quantile_bound

logger = logging.getLogger("wiggly-continua.dimension")


class ReportMixin(BoxCountMixin, LocalMixin):
    """Mixin combining the estimators into one report."""

    def dimension_report(
        self,
        measure: CoronaMeasure | None = None,
        inputs: BoundInputs | None = None,
        mask: np.ndarray | None = None,
        box_ratio: float | None = None,
    ) -> DimensionReport:
        """
        Box dimension, local dimensions and the bound table.

        A failed box-count fit leaves ``box`` unset and the bounds unchecked.
        Without a measure no local dimensions are computed.

        Args:
            measure: Optional corona measure for the local dimensions
            inputs: Measured bound inputs; ``ambient_dim`` defaults to the
                sample's
            mask: Optional point selection for the box count
            box_ratio: Ratio of the box grid, λ when unset

        Returns:
            The report
        """
        quantile = self.dimension_config.quantile
        try:
            box = self.box_dimension(mask=mask, ratio=box_ratio)
        except DegenerateFitError as e:
            logger.warning(f"Box dimension not computed: {e}")
            box = None

        local_dims = []
        mass_bound = None
        if measure is not None:
            local_dims = self.local_dimensions(measure)
            mass_bound = quantile_bound(local_dims, quantile)
            if mass_bound is None:
                logger.warning("Every local dimension is flagged")
            elif box is not None and mass_bound > box.dim + MASS_BOUND_SLACK:
                logger.warning(
                    f"Mass bound {mass_bound:.4f} exceeds box dimension "
                    f"{box.dim:.4f}"
                )

        inputs = inputs or BoundInputs()
        if inputs.ambient_dim is None:
            inputs = inputs.model_copy(
                update={"ambient_dim": self.sample.ambient_dim}
            )
        constants = self.dimension_config.constants
        bounds = theorem_bounds(
            inputs, constants, box_dim=None if box is None else box.dim
        )
        return DimensionReport(
            box=box,
            local_dims=local_dims,
            mass_bound=mass_bound,
            quantile=quantile,
            constants=constants.to_model(),
            theorem_bounds=bounds,
        )
