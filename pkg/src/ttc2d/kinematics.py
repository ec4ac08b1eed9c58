"""Non-holonomic kinematics of a tractor-semitrailer combination.

Single-track model: the steered front axle and the tractor rear axle cannot
slip sideways, the semitrailer rear axle cannot slip sideways, and the
side-slip at the tractor rear axle is neglected. From these constraints the
tractor and semitrailer yaw rates follow in closed form, and for a straight
driving tractor the semitrailer yaw angle integrates analytically (constant
and variable rear-axle speed variants). A forward-Euler stepper assembles the
relations into the simulator used by the cut-in scenario.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .frames import wrap_angle

if TYPE_CHECKING:
    from .articulated import ArticulatedGeometry

JACKKNIFE_LIMIT = 0.5 * math.pi
COS_PSI_GUARD = 1e-6


class JackknifeError(ValueError):
    """Articulation angle left the validity range of the kinematic model."""


@dataclass(frozen=True)
class AxleState:
    """Global position of an axle midpoint."""

    x: float
    y: float


@dataclass(frozen=True)
class KinematicState:
    """Minimal state of the combination: tractor rear axle pose plus both yaws."""

    x_b0: float
    y_b0: float
    psi0: float
    psi1: float

    @property
    def articulation(self) -> float:
        return wrap_angle(self.psi1 - self.psi0)


def tractor_yaw_rate(u_b0: float, delta: float, l0: float) -> float:
    """Tractor yaw rate ``u_b0 * tan(delta) / l0`` from the front-axle constraint."""
    if not (math.isfinite(u_b0) and math.isfinite(delta)):
        raise ValueError("u_b0 and delta must be finite")
    if l0 <= 0.0:
        raise ValueError(f"wheelbase must be positive, got {l0}")
    if abs(delta) >= 0.5 * math.pi:
        raise ValueError(f"steering angle out of range: {delta}")
    return u_b0 * math.tan(delta) / l0


def semitrailer_yaw_rate(
    u_b0: float,
    delta: float,
    psi0: float,
    psi1: float,
    geom: "ArticulatedGeometry",
) -> float:
    """Semitrailer yaw rate from the rear-axle non-holonomic constraint."""
    psi0_dot = tractor_yaw_rate(u_b0, delta, geom.wheelbase_l0)
    offset = psi1 - psi0
    l1 = geom.joint_to_rear_axle_l1
    return psi0_dot * (geom.rear_axle_to_joint_lb / l1) * math.cos(offset) - (
        u_b0 / l1
    ) * math.sin(offset)


def _yaw_from_decay(psi1_t0, psi0_t0, exponent, psi1_prev):
    """Common closed form: articulation magnitude decays via 2*atan(tan(.)*exp(.))."""
    exponent = np.asarray(exponent, dtype=float)
    branch = psi1_prev - psi0_t0
    if branch == 0.0:
        result = psi0_t0 + np.zeros_like(exponent)
    else:
        offset0 = psi1_t0 - psi0_t0
        magnitude = 2.0 * np.arctan(np.abs(np.tan(0.5 * offset0)) * np.exp(exponent))
        result = psi0_t0 - magnitude if branch < 0.0 else psi0_t0 + magnitude
    return result if result.ndim else float(result)


def semitrailer_yaw_constant_speed(
    psi1_t0: float,
    psi0_t0: float,
    u_b0: float,
    l1: float,
    elapsed,
    psi1_prev: float | None = None,
):
    """Analytic semitrailer yaw for a constant-speed, straight-driving tractor.

    ``elapsed`` may be a scalar or an array of times since ``t0``. The branch
    of the closed form is selected by the sign of ``psi1_prev - psi0_t0``
    (defaults to the initial offset; the offset never changes sign, so this
    matches stepwise evaluation). A zero initial offset is a fixed point.
    """
    if u_b0 < 0.0:
        raise ValueError(f"rear axle speed must be non-negative, got {u_b0}")
    if l1 <= 0.0:
        raise ValueError(f"joint-to-axle distance must be positive, got {l1}")
    if psi1_prev is None:
        psi1_prev = psi1_t0
    exponent = -(u_b0 / l1) * np.asarray(elapsed, dtype=float)
    return _yaw_from_decay(psi1_t0, psi0_t0, exponent, psi1_prev)


def semitrailer_yaw_variable_speed(
    psi1_t0: float,
    psi0_t0: float,
    xb0_t0: float,
    xb0_t,
    psi0: float,
    l1: float,
    psi1_prev: float | None = None,
):
    """Analytic semitrailer yaw when the rear-axle speed varies.

    The elapsed-time exponent is replaced by the rear-axle displacement
    ``(X_b0(t0) - X_b0(t)) / (l1 * cos(psi0))``; for headings near +-pi/2 the
    displacement no longer encodes the traveled distance and the formula is
    singular.
    """
    if l1 <= 0.0:
        raise ValueError(f"joint-to-axle distance must be positive, got {l1}")
    if abs(math.cos(psi0)) <= COS_PSI_GUARD:
        raise ValueError("tractor heading too close to +-pi/2 for the displacement form")
    if psi1_prev is None:
        psi1_prev = psi1_t0
    exponent = (xb0_t0 - np.asarray(xb0_t, dtype=float)) / (l1 * math.cos(psi0))
    return _yaw_from_decay(psi1_t0, psi0_t0, exponent, psi1_prev)


def front_axle(state: KinematicState, geom: "ArticulatedGeometry") -> AxleState:
    l0 = geom.wheelbase_l0
    return AxleState(
        state.x_b0 + l0 * math.cos(state.psi0),
        state.y_b0 + l0 * math.sin(state.psi0),
    )


def joint_position(state: KinematicState, geom: "ArticulatedGeometry") -> AxleState:
    lb = geom.rear_axle_to_joint_lb
    return AxleState(
        state.x_b0 + lb * math.cos(state.psi0),
        state.y_b0 + lb * math.sin(state.psi0),
    )


def semitrailer_rear_axle(state: KinematicState, geom: "ArticulatedGeometry") -> AxleState:
    joint = joint_position(state, geom)
    l1 = geom.joint_to_rear_axle_l1
    return AxleState(
        joint.x - l1 * math.cos(state.psi1),
        joint.y - l1 * math.sin(state.psi1),
    )


def tractor_front_edge(state: KinematicState, geom: "ArticulatedGeometry") -> AxleState:
    joint = joint_position(state, geom)
    return AxleState(
        joint.x + geom.l_fa * math.cos(state.psi0),
        joint.y + geom.l_fa * math.sin(state.psi0),
    )


def semitrailer_front_edge(state: KinematicState, geom: "ArticulatedGeometry") -> AxleState:
    joint = joint_position(state, geom)
    return AxleState(
        joint.x + geom.l_ra * math.cos(state.psi1),
        joint.y + geom.l_ra * math.sin(state.psi1),
    )


def step_kinematic_model(
    state: KinematicState,
    u_b0: float,
    delta: float,
    geom: "ArticulatedGeometry",
    dt: float,
) -> KinematicState:
    """Advance the combination one forward-Euler step.

    Steering and rear-axle speed are held constant over the step; rear-axle
    side slip is zero by assumption. Raises :class:`JackknifeError` when the
    articulation angle leaves (-pi/2, pi/2).
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    psi0_dot = tractor_yaw_rate(u_b0, delta, geom.wheelbase_l0)
    psi1_dot = semitrailer_yaw_rate(u_b0, delta, state.psi0, state.psi1, geom)
    new = KinematicState(
        x_b0=state.x_b0 + u_b0 * math.cos(state.psi0) * dt,
        y_b0=state.y_b0 + u_b0 * math.sin(state.psi0) * dt,
        psi0=wrap_angle(state.psi0 + psi0_dot * dt),
        psi1=wrap_angle(state.psi1 + psi1_dot * dt),
    )
    if abs(new.articulation) >= JACKKNIFE_LIMIT:
        raise JackknifeError(
            f"articulation angle {new.articulation:.3f} rad reached the jackknife limit"
        )
    return new
