"""Corona constructions of Frostman-type measures for wiggly-continua.

This module provides stopping scales, covering nets, the level-by-level
corona measure in its universal, avoiding and nonporous variants, and the
scaling audit of a finished measure.
"""

from .audit import AuditMixin, fit_scaling
from .client import CoronaClient
from .config import CoronaConfig
from .measure import MeasureMixin, local_measure, spread_mass
from .nets import NetFilter, filter_net, lemma_check, select_net
from .stopping import (
    ScaleField,
    StoppingMixin,
    StoppingScale,
    WigglySplit,
    cell_representatives,
    split_field,
    window_scales,
)
from .tree import CoronaBall, CoronaMeasure, measure_bracket, measure_query


class CoronaBuilder(MeasureMixin, AuditMixin):
    """
    Corona measures over one tagged sample.

    This class inherits from the corona mixins:
    - StoppingMixin: stopping scales and the Z/W split of a ball
    - MeasureMixin: seed balls and the level-by-level construction
    - AuditMixin: the scaling audit of a finished measure
    """

    pass


__all__ = [
    "CoronaBall",
    "CoronaBuilder",
    "CoronaClient",
    "CoronaConfig",
    "CoronaMeasure",
    "NetFilter",
    "ScaleField",
    "StoppingMixin",
    "StoppingScale",
    "WigglySplit",
    "cell_representatives",
    "filter_net",
    "fit_scaling",
    "lemma_check",
    "local_measure",
    "measure_bracket",
    "measure_query",
    "select_net",
    "split_field",
    "spread_mass",
    "window_scales",
]
