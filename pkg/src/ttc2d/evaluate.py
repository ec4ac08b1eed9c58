"""Measure evaluation over trajectories.

Maps trajectory samples onto the closed-form measures: the conventional TTC
and the aligned-frame baseline via their articulated adapters, and versions 2
and 3 directly. Version 1 is a rigid-pair measure and is rejected for
articulated trajectories.
"""

from __future__ import annotations

import numpy as np

from .articulated import (
    SolverConfig,
    conventional_articulated,
    guo2d_articulated,
    ttc2d_v2,
    ttc2d_v3,
)
from .measures import TtcOutcome
from .scenario import Trajectory

MEASURES = ("CONV", "GUO2D", "V1", "V2", "V3")
ARTICULATED_MEASURES = ("CONV", "GUO2D", "V2", "V3")


class MeasureSelectionError(ValueError):
    """Raised for empty selections or measures invalid for the trajectory type."""


def normalize_selection(names) -> tuple[str, ...]:
    out = []
    for name in names:
        key = name.strip().upper()
        if not key:
            continue
        if key not in MEASURES:
            raise MeasureSelectionError(f"unknown measure {name!r}")
        if key not in out:
            out.append(key)
    if not out:
        raise MeasureSelectionError("measure selection is empty")
    return tuple(out)


def measure_at(
    traj: Trajectory,
    index: int,
    measure: str,
    cfg: SolverConfig | None = None,
) -> TtcOutcome:
    """Evaluate one measure at one trajectory sample."""
    art = traj.articulated_state(index)
    car = traj.car_state(index)
    cfg = cfg if cfg is not None else SolverConfig()
    if measure == "CONV":
        return conventional_articulated(art, car, traj.geometry)
    if measure == "GUO2D":
        return guo2d_articulated(art, car, traj.car_geom, traj.geometry)
    if measure == "V2":
        return ttc2d_v2(art, car, traj.car_geom, traj.geometry, cfg)
    if measure == "V3":
        return ttc2d_v3(art, car, traj.car_geom, traj.geometry, cfg)
    if measure == "V1":
        raise MeasureSelectionError(
            "V1 is defined for rigid vehicle pairs only and cannot run on an "
            "articulated trajectory"
        )
    raise MeasureSelectionError(f"unknown measure {measure!r}")


def measure_series(
    traj: Trajectory,
    measure: str,
    cfg: SolverConfig | None = None,
    indices=None,
) -> list[TtcOutcome]:
    """Evaluate one measure over trajectory samples (all by default)."""
    if indices is None:
        indices = range(len(traj))
    return [measure_at(traj, int(i), measure, cfg) for i in indices]


def finite_to_inf_transition(times: np.ndarray, values: list[TtcOutcome]) -> float | None:
    """Last time a measure switches from finite to no-collision and stays there.

    Returns None when the series never has a finite-to-infinite edge.
    """
    finite = np.array([out.collides for out in values], dtype=bool)
    edges = np.flatnonzero(finite[:-1] & ~finite[1:])
    if edges.size == 0:
        return None
    return float(times[edges[-1] + 1])
