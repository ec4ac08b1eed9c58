"""Brute-force collision ground truth.

An oriented-rectangle footprint and an exact separating-axis overlap test,
plus a fine-grained forward simulator that realizes exactly the assumption
set of each closed-form measure (constant speed or constant acceleration,
frozen headings, analytic semitrailer yaw) and reports the first contact
time, refined by bisection well below the stepping resolution.

Contact is closed-set: touching footprints count as a collision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kinematics
from .articulated import ArticulatedGeometry, ArticulatedState, tractor_rear_axle_x
from .frames import Pose2D, VehicleGeometry, VehicleState, wrap_angle
from .measures import NO_COLLISION, Direction, TtcOutcome, Unit

DEFAULT_ORACLE_DT = 0.0025
_CHUNK = 512


class MotionModelKind(enum.Enum):
    CONSTANT_SPEED_HEADING = "constant_speed_heading"
    CONSTANT_ACCEL_HEADING = "constant_accel_heading"
    ARTICULATED_CONSTANT_SPEED = "articulated_constant_speed"
    ARTICULATED_CONSTANT_ACCEL = "articulated_constant_accel"

    @property
    def articulated(self) -> bool:
        return self in (
            MotionModelKind.ARTICULATED_CONSTANT_SPEED,
            MotionModelKind.ARTICULATED_CONSTANT_ACCEL,
        )

    @property
    def accelerated(self) -> bool:
        return self in (
            MotionModelKind.CONSTANT_ACCEL_HEADING,
            MotionModelKind.ARTICULATED_CONSTANT_ACCEL,
        )


@dataclass(frozen=True)
class OrientedRect:
    """Rectangle referenced at its front-edge midpoint, extending backward."""

    pose: Pose2D
    length: float
    width: float

    def __post_init__(self):
        if self.length <= 0.0 or self.width <= 0.0:
            raise ValueError("rectangle extents must be positive")

    def corners(self) -> list[tuple[float, float]]:
        c, s = math.cos(self.pose.psi), math.sin(self.pose.psi)
        hw = 0.5 * self.width
        out = []
        for bx, by in ((0.0, hw), (0.0, -hw), (-self.length, -hw), (-self.length, hw)):
            out.append((self.pose.x + bx * c - by * s, self.pose.y + bx * s + by * c))
        return out


def _project(corners, axis) -> tuple[float, float]:
    dots = [cx * axis[0] + cy * axis[1] for cx, cy in corners]
    return min(dots), max(dots)


def rects_overlap(a: OrientedRect, b: OrientedRect) -> bool:
    """Exact separating-axis test over the four edge normals; closed sets."""
    ca, cb = a.corners(), b.corners()
    for psi in (a.pose.psi, b.pose.psi):
        c, s = math.cos(psi), math.sin(psi)
        for axis in ((c, s), (-s, c)):
            lo_a, hi_a = _project(ca, axis)
            lo_b, hi_b = _project(cb, axis)
            if hi_a < lo_b or hi_b < lo_a:
                return False
    return True


def _corners_array(x, y, psi, geom: VehicleGeometry) -> np.ndarray:
    """Corner positions over time, shape (n, 4, 2)."""
    c, s = np.cos(psi), np.sin(psi)
    hw = 0.5 * geom.width
    body = np.array(
        [(0.0, hw), (0.0, -hw), (-geom.length, -hw), (-geom.length, hw)]
    )
    out = np.empty((len(x), 4, 2))
    out[:, :, 0] = x[:, None] + body[:, 0][None, :] * c[:, None] - body[:, 1][None, :] * s[:, None]
    out[:, :, 1] = y[:, None] + body[:, 0][None, :] * s[:, None] + body[:, 1][None, :] * c[:, None]
    return out


def overlap_mask(xa, ya, psia, geom_a, xb, yb, psib, geom_b) -> np.ndarray:
    """Vectorized separating-axis overlap of two footprint tracks."""
    ca = _corners_array(np.asarray(xa, float), np.asarray(ya, float), np.asarray(psia, float), geom_a)
    cb = _corners_array(np.asarray(xb, float), np.asarray(yb, float), np.asarray(psib, float), geom_b)
    mask = np.ones(ca.shape[0], dtype=bool)
    for psi in (np.asarray(psia, float), np.asarray(psib, float)):
        c, s = np.cos(psi), np.sin(psi)
        for ax, ay in ((c, s), (-s, c)):
            pa = ca[:, :, 0] * ax[:, None] + ca[:, :, 1] * ay[:, None]
            pb = cb[:, :, 0] * ax[:, None] + cb[:, :, 1] * ay[:, None]
            sep = (pa.max(axis=1) < pb.min(axis=1)) | (pb.max(axis=1) < pa.min(axis=1))
            mask &= ~sep
    return mask


def _global_rates(state: VehicleState):
    c, s = math.cos(state.pose.psi), math.sin(state.pose.psi)
    vel = (state.vel.u * c - state.vel.v * s, state.vel.u * s + state.vel.v * c)
    acc = (state.acc.ax * c - state.acc.ay * s, state.acc.ax * s + state.acc.ay * c)
    return vel, acc


@dataclass(frozen=True)
class MotionModel:
    """Frozen prediction-horizon motion assumptions for one vehicle pair."""

    kind: MotionModelKind
    car: VehicleState
    car_geom: VehicleGeometry
    lead: VehicleState | None = None
    lead_geom: VehicleGeometry | None = None
    art: ArticulatedState | None = None
    art_geom: ArticulatedGeometry | None = None

    @classmethod
    def rigid(cls, lead, lead_geom, car, car_geom, accel=False) -> "MotionModel":
        kind = (
            MotionModelKind.CONSTANT_ACCEL_HEADING
            if accel
            else MotionModelKind.CONSTANT_SPEED_HEADING
        )
        return cls(kind, car, car_geom, lead=lead, lead_geom=lead_geom)

    @classmethod
    def articulated(cls, art, art_geom, car, car_geom, accel=False) -> "MotionModel":
        kind = (
            MotionModelKind.ARTICULATED_CONSTANT_ACCEL
            if accel
            else MotionModelKind.ARTICULATED_CONSTANT_SPEED
        )
        return cls(kind, car, car_geom, art=art, art_geom=art_geom)

    def _point_track(self, state: VehicleState, t: np.ndarray):
        (vx, vy), (ax, ay) = _global_rates(state)
        if self.kind.accelerated:
            x = state.pose.x + vx * t + 0.5 * ax * t * t
            y = state.pose.y + vy * t + 0.5 * ay * t * t
        else:
            x = state.pose.x + vx * t
            y = state.pose.y + vy * t
        psi = np.full_like(t, state.pose.psi)
        return x, y, psi

    def tracks(self, t: np.ndarray):
        """Footprint tracks (x, y, psi, geom, unit) of every lead unit plus the car."""
        car_track = self._point_track(self.car, t)
        units = []
        if self.kind.articulated:
            art, geom = self.art, self.art_geom
            ax_t, ay_t, apsi = self._point_track(art.tractor, t)
            units.append((ax_t, ay_t, apsi, geom.tractor, Unit.TRACTOR))
            psi0 = art.tractor.pose.psi
            if self.kind.accelerated:
                traveled = art.u_b0 * t + 0.5 * art.tractor.acc.ax * t * t
                xb0_0 = tractor_rear_axle_x(art, geom)
                psi1 = kinematics.semitrailer_yaw_variable_speed(
                    art.psi1, psi0, xb0_0, xb0_0 + math.cos(psi0) * traveled,
                    psi0, geom.joint_to_rear_axle_l1,
                )
            else:
                psi1 = kinematics.semitrailer_yaw_constant_speed(
                    art.psi1, psi0, art.u_b0, geom.joint_to_rear_axle_l1, t
                )
            psi1 = np.asarray(psi1, dtype=float)
            bx = ax_t - geom.l_fa * math.cos(psi0) + geom.l_ra * np.cos(psi1)
            by = ay_t - geom.l_fa * math.sin(psi0) + geom.l_ra * np.sin(psi1)
            units.append((bx, by, psi1, geom.semitrailer, Unit.SEMITRAILER))
        else:
            lx, ly, lpsi = self._point_track(self.lead, t)
            units.append((lx, ly, lpsi, self.lead_geom, Unit.SINGLE))
        return car_track, units

    def rects_at(self, tau: float):
        """Car and lead-unit rectangles at one instant (scalar path for refinement)."""
        t = np.array([tau])
        (cx, cy, cpsi), units = self.tracks(t)
        car = OrientedRect(Pose2D(cx[0], cy[0], wrap_angle(float(cpsi[0]))), self.car_geom.length, self.car_geom.width)
        out = []
        for ux, uy, upsi, ugeom, unit in units:
            out.append(
                (OrientedRect(Pose2D(ux[0], uy[0], wrap_angle(float(upsi[0]))), ugeom.length, ugeom.width), unit)
            )
        return car, out


def _contact_direction(car: OrientedRect, other: OrientedRect) -> Direction:
    """Classify the contact normal: the separating axis with least overlap."""
    ca, cb = car.corners(), other.corners()
    best_axis, best_depth = None, math.inf
    for psi in (car.pose.psi, other.pose.psi):
        c, s = math.cos(psi), math.sin(psi)
        for axis in ((c, s), (-s, c)):
            lo_a, hi_a = _project(ca, axis)
            lo_b, hi_b = _project(cb, axis)
            depth = min(hi_a, hi_b) - max(lo_a, lo_b)
            if depth < best_depth:
                best_depth, best_axis = depth, axis
    c, s = math.cos(car.pose.psi), math.sin(car.pose.psi)
    along = abs(best_axis[0] * c + best_axis[1] * s)
    across = abs(-best_axis[0] * s + best_axis[1] * c)
    return Direction.LONGITUDINAL if along >= across else Direction.LATERAL


def first_contact_time(
    model: MotionModel,
    dt_oracle: float = DEFAULT_ORACLE_DT,
    horizon: float = 20.0,
) -> TtcOutcome:
    """First footprint contact under the model, or NO_COLLISION within the horizon.

    The coarse scan at ``dt_oracle`` is refined by bisection between the last
    clear step and the first overlapping step down to ``dt_oracle / 16``.
    """
    if dt_oracle <= 0.0 or horizon <= 0.0:
        raise ValueError("dt_oracle and horizon must be positive")
    n = int(math.floor(horizon / dt_oracle + 1e-9))
    hit_step = None
    for start in range(0, n + 1, _CHUNK):
        stop = min(start + _CHUNK, n + 1)
        t = np.arange(start, stop, dtype=float) * dt_oracle
        (cx, cy, cpsi), units = model.tracks(t)
        combined = np.zeros(len(t), dtype=bool)
        for ux, uy, upsi, ugeom, _unit in units:
            combined |= overlap_mask(ux, uy, upsi, ugeom, cx, cy, cpsi, model.car_geom)
        if combined.any():
            hit_step = start + int(np.argmax(combined))
            break
    if hit_step is None:
        return TtcOutcome(NO_COLLISION)

    t_hit = hit_step * dt_oracle
    if hit_step == 0:
        car, rects = model.rects_at(0.0)
        for rect, unit in rects:
            if rects_overlap(car, rect):
                return TtcOutcome(0.0, _contact_direction(car, rect), unit)

    lo, hi = t_hit - dt_oracle, t_hit
    while hi - lo > dt_oracle / 16.0:
        mid = 0.5 * (lo + hi)
        car, rects = model.rects_at(mid)
        if any(rects_overlap(car, rect) for rect, _ in rects):
            hi = mid
        else:
            lo = mid
    car, rects = model.rects_at(hi)
    for rect, unit in rects:
        if rects_overlap(car, rect):
            return TtcOutcome(0.5 * (lo + hi), _contact_direction(car, rect), unit)
    # Fall back to the coarse step if the refined instant lost the overlap.
    car, rects = model.rects_at(t_hit)
    for rect, unit in rects:
        if rects_overlap(car, rect):
            return TtcOutcome(t_hit, _contact_direction(car, rect), unit)
    return TtcOutcome(NO_COLLISION)
