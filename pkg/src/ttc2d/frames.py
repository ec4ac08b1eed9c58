"""Coordinate conventions and frame transforms between a lead and a following vehicle.

All poses refer to the midpoint of a vehicle's front edge. Yaw angles are
counterclockwise-positive and normalized to (-pi, pi]. Body velocities and
accelerations use the ISO vehicle frame (x forward, y left).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    r = math.fmod(angle + math.pi, TWO_PI)
    if r <= 0.0:
        r += TWO_PI
    return r - math.pi


def wrap_angle_array(angles: np.ndarray) -> np.ndarray:
    """Vectorized :func:`wrap_angle`."""
    r = np.fmod(np.asarray(angles, dtype=float) + np.pi, TWO_PI)
    r = np.where(r <= 0.0, r + TWO_PI, r)
    return r - np.pi


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class Pose2D:
    """Global pose of a front-edge midpoint: position in meters, yaw in radians."""

    x: float
    y: float
    psi: float

    def __post_init__(self):
        _require_finite("Pose2D", self.x, self.y, self.psi)
        object.__setattr__(self, "psi", wrap_angle(self.psi))


@dataclass(frozen=True)
class BodyVelocity:
    """Body-frame velocity: u longitudinal, v lateral (m/s)."""

    u: float
    v: float = 0.0

    def __post_init__(self):
        _require_finite("BodyVelocity", self.u, self.v)


@dataclass(frozen=True)
class BodyAcceleration:
    """Body-frame acceleration (m/s^2) plus yaw rate (rad/s)."""

    ax: float = 0.0
    ay: float = 0.0
    yaw_rate: float = 0.0

    def __post_init__(self):
        _require_finite("BodyAcceleration", self.ax, self.ay, self.yaw_rate)


@dataclass(frozen=True)
class VehicleGeometry:
    """Rectangular footprint: overall length and width in meters."""

    length: float
    width: float

    def __post_init__(self):
        _require_finite("VehicleGeometry", self.length, self.width)
        if self.length <= 0.0 or self.width <= 0.0:
            raise ValueError(
                f"geometry must be positive, got length={self.length}, width={self.width}"
            )


@dataclass(frozen=True)
class VehicleState:
    """Global pose plus body-frame velocity/acceleration of one rigid unit."""

    pose: Pose2D
    vel: BodyVelocity
    acc: BodyAcceleration = BodyAcceleration()


_ORTHO_TOL = 1e-12


@dataclass(frozen=True)
class RotationMatrix2:
    """2x2 rotation matrix, validated to be orthonormal with determinant 1."""

    r11: float
    r12: float
    r21: float
    r22: float

    def __post_init__(self):
        _require_finite("RotationMatrix2", self.r11, self.r12, self.r21, self.r22)
        row1 = self.r11 * self.r11 + self.r12 * self.r12
        row2 = self.r21 * self.r21 + self.r22 * self.r22
        det = self.r11 * self.r22 - self.r12 * self.r21
        if abs(row1 - 1.0) > 1e-9 or abs(row2 - 1.0) > 1e-9 or abs(det - 1.0) > 1e-9:
            raise ValueError("matrix is not a proper rotation")

    @classmethod
    def from_angle(cls, angle: float) -> "RotationMatrix2":
        _require_finite("rotation angle", angle)
        c, s = math.cos(angle), math.sin(angle)
        return cls(c, -s, s, c)

    @property
    def angle(self) -> float:
        return math.atan2(self.r21, self.r11)

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (self.r11 * x + self.r12 * y, self.r21 * x + self.r22 * y)


@dataclass(frozen=True)
class RelativeKinematics:
    """Lead-vehicle offsets, closing rates and projected extents in the follower frame.

    ``s_x``/``s_y`` locate the lead front-edge midpoint. ``dv`` and ``da`` are
    follower-minus-lead rates, so a positive ``dv_x`` shrinks a positive gap.
    ``c_x``/``c_y`` are the signed projections of the lead footprint
    (length, half width) rotated by the relative heading; consumers take
    magnitudes or mirror signs where they compare physical extents.
    """

    s_x: float
    s_y: float
    dv_x: float
    dv_y: float
    da_x: float = 0.0
    da_y: float = 0.0
    c_x: float = 0.0
    c_y: float = 0.0

    def __post_init__(self):
        _require_finite(
            "RelativeKinematics",
            self.s_x, self.s_y, self.dv_x, self.dv_y,
            self.da_x, self.da_y, self.c_x, self.c_y,
        )


def relative_rotation(psi_lead: float, psi_follow: float) -> RotationMatrix2:
    """Rotation mapping lead body coordinates into the follower frame."""
    _require_finite("relative_rotation", psi_lead, psi_follow)
    return RotationMatrix2.from_angle(wrap_angle(psi_lead - psi_follow))


def project_extent(geom: VehicleGeometry, rot: RotationMatrix2) -> tuple[float, float]:
    """Signed projections of the lead (length, width/2) onto the follower axes."""
    return rot.apply(geom.length, 0.5 * geom.width)


def transform_velocity(lead_body: BodyVelocity, rot: RotationMatrix2) -> tuple[float, float]:
    """Lead body velocity expressed in the follower frame."""
    return rot.apply(lead_body.u, lead_body.v)


def transform_acceleration(
    lead_acc: BodyAcceleration,
    lead_vel: BodyVelocity,
    rot: RotationMatrix2,
) -> tuple[float, float]:
    """Lead acceleration in the follower frame, including the yaw-rate Coriolis terms."""
    ax = lead_acc.ax - lead_vel.v * lead_acc.yaw_rate
    ay = lead_acc.ay + lead_vel.u * lead_acc.yaw_rate
    return rot.apply(ax, ay)


def relative_offset(lead: Pose2D, follow: Pose2D) -> tuple[float, float]:
    """Offset of the lead front-edge midpoint in the follower frame."""
    dx = lead.x - follow.x
    dy = lead.y - follow.y
    c, s = math.cos(follow.psi), math.sin(follow.psi)
    return (dx * c + dy * s, -dx * s + dy * c)


def relative_kinematics(
    lead: VehicleState,
    lead_geom: VehicleGeometry,
    follower: VehicleState,
) -> RelativeKinematics:
    """Assemble the full relative state of a lead vehicle seen from a follower.

    The follower's own body rates are its frame rates (its yaw rate is treated
    as negligible over the prediction horizon; the lead's yaw rate enters the
    acceleration transform as a Coriolis correction).
    """
    rot = relative_rotation(lead.pose.psi, follower.pose.psi)
    s_x, s_y = relative_offset(lead.pose, follower.pose)
    v0_x, v0_y = transform_velocity(lead.vel, rot)
    a0_x, a0_y = transform_acceleration(lead.acc, lead.vel, rot)
    c_x, c_y = project_extent(lead_geom, rot)
    return RelativeKinematics(
        s_x=s_x,
        s_y=s_y,
        dv_x=follower.vel.u - v0_x,
        dv_y=follower.vel.v - v0_y,
        da_x=follower.acc.ax - a0_x,
        da_y=follower.acc.ay - a0_y,
        c_x=c_x,
        c_y=c_y,
    )
