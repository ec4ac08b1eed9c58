"""Closed-form time-to-collision measures for rigid vehicle pairs.

Three measures are provided:

* :func:`ttc_conventional` -- the classic longitudinal-only TTC.
* :func:`ttc2d_baseline` -- the two-dimensional extension that assumes the
  lead and following frames are aligned (raw body speeds, unprojected
  extents).
* :func:`ttc2d_v1` -- the orientation-aware variant that rotates the lead
  speeds and footprint into the follower frame before gating.

Both 2-D measures share one gating core, so with equal headings they are
bitwise identical. All contact checks treat grazing equality as no overlap,
and closing speeds below ``MIN_CLOSING_SPEED`` as non-approaching.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .frames import (
    RelativeKinematics,
    RotationMatrix2,
    VehicleGeometry,
    VehicleState,
    relative_kinematics,
    relative_offset,
    relative_rotation,
)

NO_COLLISION = math.inf
MIN_CLOSING_SPEED = 1e-9


class Direction(enum.Enum):
    LONGITUDINAL = "longitudinal"
    LATERAL = "lateral"
    NONE = "none"


class Unit(enum.Enum):
    TRACTOR = "tractor"
    SEMITRAILER = "semitrailer"
    SINGLE = "single"


@dataclass(frozen=True)
class TtcOutcome:
    """A predicted contact time, or ``NO_COLLISION`` with direction NONE."""

    time: float
    direction: Direction = Direction.NONE
    unit: Unit = Unit.SINGLE
    valid: bool = True

    def __post_init__(self):
        if math.isnan(self.time) or (math.isfinite(self.time) and self.time < 0.0):
            raise ValueError(f"contact time must be >= 0 or inf, got {self.time}")
        if math.isinf(self.time) != (self.direction is Direction.NONE):
            raise ValueError("direction must be NONE exactly for NO_COLLISION outcomes")

    @property
    def collides(self) -> bool:
        return math.isfinite(self.time)


NO_COLLISION_OUTCOME = TtcOutcome(NO_COLLISION)


@dataclass(frozen=True)
class RigidPair:
    """States and footprints of a lead and a following vehicle at one timestamp."""

    lead: VehicleState
    lead_geom: VehicleGeometry
    follower: VehicleState
    follower_geom: VehicleGeometry


def ttc_conventional(
    gap_lon: float,
    v_follow: float,
    v_lead: float,
    lead_length: float,
) -> TtcOutcome:
    """Longitudinal TTC from the front-to-front gap and the lead length.

    Returns NO_COLLISION when the follower is not faster than the lead, or
    when the front-to-front gap no longer exceeds the lead length (the
    follower's front already passed the lead's rear without contact).
    """
    for name, v in (("gap_lon", gap_lon), ("v_follow", v_follow), ("v_lead", v_lead)):
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")
    if not (math.isfinite(lead_length) and lead_length > 0.0):
        raise ValueError(f"lead_length must be positive, got {lead_length!r}")
    closing = v_follow - v_lead
    if closing <= MIN_CLOSING_SPEED:
        return NO_COLLISION_OUTCOME
    gap = gap_lon - lead_length
    if gap <= 0.0:
        return NO_COLLISION_OUTCOME
    return TtcOutcome(gap / closing, Direction.LONGITUDINAL)


@dataclass(frozen=True)
class _AxisGates:
    """Canonicalized single-axis quantities consumed by the gating core.

    Everything is expressed in the follower frame after mirroring the lateral
    axis so the lead sits at non-negative ``s_y`` (the gating conditions are
    written for that geometry; mirroring also flips the relative heading, so
    the signed corner projections stay consistent).
    """

    s_x: float
    s_y: float
    dv_x: float
    dv_y: float
    da_x: float
    da_y: float
    ext_x: float
    ext_y: float


def _canonical_gates(
    kin: RelativeKinematics,
    lead_geom: VehicleGeometry,
    follower_geom: VehicleGeometry,
    rot: RotationMatrix2,
    reverse: bool,
) -> _AxisGates:
    mirror = -1.0 if kin.s_y < 0.0 else 1.0
    # Mirroring the lateral axis flips the relative heading, hence the signed
    # projections are re-evaluated with the transposed off-diagonal terms.
    # The longitudinal extent is taken by magnitude (it degenerates to the
    # projected half width near perpendicular headings); the lateral one
    # stays signed, tracking the rear corner nearest the follower.
    c_x = abs(rot.r11 * lead_geom.length + mirror * rot.r12 * (0.5 * lead_geom.width))
    c_y = mirror * rot.r21 * lead_geom.length + rot.r22 * (0.5 * lead_geom.width)
    if reverse:
        # Lead unit approaching the follower from behind: the follower's own
        # length is the longitudinal extent and the approach sign flips.
        return _AxisGates(
            s_x=-kin.s_x,
            s_y=mirror * kin.s_y,
            dv_x=-kin.dv_x,
            dv_y=mirror * kin.dv_y,
            da_x=-kin.da_x,
            da_y=mirror * kin.da_y,
            ext_x=follower_geom.length,
            ext_y=c_y + 0.5 * follower_geom.width,
        )
    return _AxisGates(
        s_x=kin.s_x,
        s_y=mirror * kin.s_y,
        dv_x=kin.dv_x,
        dv_y=mirror * kin.dv_y,
        da_x=kin.da_x,
        da_y=mirror * kin.da_y,
        ext_x=c_x,
        ext_y=c_y + 0.5 * follower_geom.width,
    )


def _offset_at(s: float, dv: float, da: float, t: float) -> float:
    return s - dv * t - 0.5 * da * t * t


def _gate_longitudinal(g: _AxisGates) -> float:
    if not (g.s_x > g.ext_x and g.dv_x > MIN_CLOSING_SPEED):
        return NO_COLLISION
    t = (g.s_x - g.ext_x) / g.dv_x
    if abs(_offset_at(g.s_y, g.dv_y, 0.0, t)) < g.ext_y:
        return t
    return NO_COLLISION


def _gate_lateral(g: _AxisGates) -> float:
    if not (g.s_y > g.ext_y and g.dv_y > MIN_CLOSING_SPEED):
        return NO_COLLISION
    t = (g.s_y - g.ext_y) / g.dv_y
    if abs(_offset_at(g.s_x, g.dv_x, 0.0, t)) < g.ext_x:
        return t
    return NO_COLLISION


def combine_axis_times(t_lon: float, t_lat: float, unit: Unit = Unit.SINGLE) -> TtcOutcome:
    """Minimum of the two axis times; exact ties resolve as lateral contact."""
    if math.isinf(t_lon) and math.isinf(t_lat):
        return TtcOutcome(NO_COLLISION, Direction.NONE, unit)
    if t_lat <= t_lon:
        return TtcOutcome(t_lat, Direction.LATERAL, unit)
    return TtcOutcome(t_lon, Direction.LONGITUDINAL, unit)


def gate_rigid(
    kin: RelativeKinematics,
    lead_geom: VehicleGeometry,
    follower_geom: VehicleGeometry,
    rot: RotationMatrix2,
    reverse: bool = False,
    unit: Unit = Unit.SINGLE,
) -> TtcOutcome:
    """Three-condition axis gating shared by the baseline and version-1 measures."""
    g = _canonical_gates(kin, lead_geom, follower_geom, rot, reverse)
    return combine_axis_times(_gate_longitudinal(g), _gate_lateral(g), unit)


_IDENTITY = RotationMatrix2.from_angle(0.0)


def ttc2d_baseline(pair: RigidPair, reverse: bool = False) -> TtcOutcome:
    """Aligned-frame 2-D TTC: body speeds taken as frame speeds, raw extents.

    The lateral clearance threshold is the half-width sum of the two
    vehicles, measured between front-edge midpoints.
    """
    s_x, s_y = relative_offset(pair.lead.pose, pair.follower.pose)
    kin = RelativeKinematics(
        s_x=s_x,
        s_y=s_y,
        dv_x=pair.follower.vel.u - pair.lead.vel.u,
        dv_y=pair.follower.vel.v - pair.lead.vel.v,
        da_x=pair.follower.acc.ax - pair.lead.acc.ax,
        da_y=pair.follower.acc.ay - pair.lead.acc.ay,
        c_x=pair.lead_geom.length,
        c_y=0.5 * pair.lead_geom.width,
    )
    return gate_rigid(kin, pair.lead_geom, pair.follower_geom, _IDENTITY, reverse)


def ttc2d_v1(pair: RigidPair, reverse: bool = False) -> TtcOutcome:
    """Orientation-aware 2-D TTC for a rigid pair.

    Lead body speeds and the lead footprint are rotated into the follower
    frame; with equal headings this reduces exactly to the baseline.
    """
    rot = relative_rotation(pair.lead.pose.psi, pair.follower.pose.psi)
    kin = relative_kinematics(pair.lead, pair.lead_geom, pair.follower)
    return gate_rigid(kin, pair.lead_geom, pair.follower_geom, rot, reverse)
