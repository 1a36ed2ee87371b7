"""Billiard flow in periodic wind-tree tables and diffusion estimates."""

from .diffusion import (
    CampaignResult,
    CampaignRow,
    DiffusionEstimate,
    TrajectoryRecord,
    campaign,
    estimate_diffusion,
    fit_slope,
    geometric_schedule,
    random_launch,
    trajectory_seed,
)
from .engine import Billiard, TrajectoryState, unit_direction
from .geometry import is_free, polygon_walls, table_walls
from .sequences import (
    billiard_square_sequence,
    cell_sequence,
    origami_square_sequence,
    unfolding_sequences,
)

__all__ = [
    "Billiard",
    "CampaignResult",
    "CampaignRow",
    "DiffusionEstimate",
    "TrajectoryRecord",
    "TrajectoryState",
    "billiard_square_sequence",
    "campaign",
    "cell_sequence",
    "estimate_diffusion",
    "fit_slope",
    "geometric_schedule",
    "is_free",
    "origami_square_sequence",
    "polygon_walls",
    "random_launch",
    "table_walls",
    "trajectory_seed",
    "unfolding_sequences",
    "unit_direction",
]
