"""2-D time-to-collision for a tractor-semitrailer against a car.

Version 2 keeps the constant speed-and-heading assumption: the tractor-car
contact time is the rigid orientation-aware measure, while the semitrailer is
tracked step by step -- the relative state advances under frozen rates, the
semitrailer yaw follows its analytic decay toward the frozen tractor heading,
and contact gating with per-step footprint projections fires on the first
crossing of a small tolerance band.

Version 3 replaces constant speed with constant acceleration: the tractor-car
axis times become the smallest positive roots of quadratics, the stepped
propagation gains the half-acceleration term, and the semitrailer yaw uses
the displacement-based decay.

Both versions return the minimum over the two units, tagged with the unit and
contact direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kinematics
from .frames import (
    BodyVelocity,
    Pose2D,
    RelativeKinematics,
    VehicleGeometry,
    VehicleState,
    relative_kinematics,
    relative_offset,
    relative_rotation,
    wrap_angle,
    wrap_angle_array,
)
from .measures import (
    MIN_CLOSING_SPEED,
    NO_COLLISION,
    NO_COLLISION_OUTCOME,
    Direction,
    RigidPair,
    TtcOutcome,
    Unit,
    _canonical_gates,
    _offset_at,
    combine_axis_times,
    gate_rigid,
    ttc2d_baseline,
    ttc_conventional,
)

LINEAR_FALLBACK_ACCEL = 1e-9
# Lower bound of the contact tolerance bands. The crossing scan tests every
# step, so the band only needs to absorb rounding, not a full step of
# penetration; a large floor would bias slow approaches early.
EPS_FLOOR = 0.01


@dataclass(frozen=True)
class ArticulatedGeometry:
    """Footprints and linkage lengths of a tractor-semitrailer combination.

    ``l_fa``/``l_ra`` run from the tractor and semitrailer front edges to the
    articulation joint; the axle distances (wheelbase, joint offsets) feed the
    kinematic model. The joint is not assumed to lie between the tractor
    axles, so the lengths are validated for positivity only.
    """

    tractor: VehicleGeometry
    semitrailer: VehicleGeometry
    l_fa: float
    l_ra: float
    wheelbase_l0: float
    joint_to_rear_axle_l1: float
    rear_axle_to_joint_lb: float
    front_axle_to_joint_la: float

    def __post_init__(self):
        for name in (
            "l_fa", "l_ra", "wheelbase_l0", "joint_to_rear_axle_l1",
            "rear_axle_to_joint_lb", "front_axle_to_joint_la",
        ):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive, got {v!r}")


@dataclass(frozen=True)
class ArticulatedState:
    """Tractor front-edge state plus semitrailer yaw, steering and axle speed."""

    tractor: VehicleState
    psi1: float
    delta: float = 0.0
    u_b0: float = 0.0

    @property
    def articulation(self) -> float:
        return wrap_angle(self.psi1 - self.tractor.pose.psi)

    @property
    def jackknifed(self) -> bool:
        return abs(self.articulation) >= kinematics.JACKKNIFE_LIMIT


@dataclass(frozen=True)
class SolverConfig:
    """Stepping and contact tolerances for the semitrailer search.

    When ``eps_x``/``eps_y`` are left unset, the bands track the local
    penetration per step, ``max(EPS_FLOOR, |closing speed| * dt)``.
    """

    dt: float = 0.01
    horizon: float = 20.0
    eps_x: float | None = None
    eps_y: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0.0):
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not (math.isfinite(self.horizon) and self.horizon >= self.dt):
            raise ValueError(f"horizon must be at least dt, got {self.horizon}")
        for name in ("eps_x", "eps_y"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive, got {v!r}")


DEFAULT_SOLVER = SolverConfig()

INVALID_OUTCOME_TRACTOR = TtcOutcome(NO_COLLISION, Direction.NONE, Unit.TRACTOR, valid=False)
INVALID_OUTCOME_TRAILER = TtcOutcome(NO_COLLISION, Direction.NONE, Unit.SEMITRAILER, valid=False)


def propagate_relative(rel: RelativeKinematics, dt: float, with_accel: bool = False) -> RelativeKinematics:
    """One forward-Euler step of the relative state.

    Positive closing rates shrink the gap: ``s(t+dt) = s(t) - dv*dt``, with
    the half-acceleration term and the rate update added in the
    constant-acceleration form. Projections are left untouched; callers
    re-evaluate them when the relative heading evolves.
    """
    if with_accel:
        return RelativeKinematics(
            s_x=rel.s_x - rel.dv_x * dt - 0.5 * rel.da_x * dt * dt,
            s_y=rel.s_y - rel.dv_y * dt - 0.5 * rel.da_y * dt * dt,
            dv_x=rel.dv_x + rel.da_x * dt,
            dv_y=rel.dv_y + rel.da_y * dt,
            da_x=rel.da_x,
            da_y=rel.da_y,
            c_x=rel.c_x,
            c_y=rel.c_y,
        )
    return RelativeKinematics(
        s_x=rel.s_x - rel.dv_x * dt,
        s_y=rel.s_y - rel.dv_y * dt,
        dv_x=rel.dv_x,
        dv_y=rel.dv_y,
        da_x=rel.da_x,
        da_y=rel.da_y,
        c_x=rel.c_x,
        c_y=rel.c_y,
    )


def semitrailer_offset(
    s0: tuple[float, float],
    psi0: float,
    psi1: float,
    psi_car: float,
    geom: ArticulatedGeometry,
) -> tuple[float, float]:
    """Semitrailer front-edge offset in the car frame, from the tractor offset."""
    th0 = psi0 - psi_car
    th1 = psi1 - psi_car
    return (
        s0[0] - geom.l_fa * math.cos(th0) + geom.l_ra * math.cos(th1),
        s0[1] - geom.l_fa * math.sin(th0) + geom.l_ra * math.sin(th1),
    )


def quadratic_contact_time(gap: float, dv: float, da: float) -> float | None:
    """Smallest positive real time with ``gap = dv*t + 0.5*da*t**2``.

    Falls back to the linear solution for ``|da| < 1e-9``. Returns ``None``
    when the gap is never covered (negative discriminant or no positive
    root).
    """
    if not (math.isfinite(gap) and math.isfinite(dv) and math.isfinite(da)):
        raise ValueError("gap, dv and da must be finite")
    if gap < 0.0:
        raise ValueError(f"gap must be non-negative, got {gap}")
    if gap == 0.0:
        return 0.0
    if abs(da) < LINEAR_FALLBACK_ACCEL:
        if dv > MIN_CLOSING_SPEED:
            return gap / dv
        return None
    # 0.5*da*t^2 + dv*t - gap = 0, solved in the numerically stable form.
    disc = dv * dv + 2.0 * da * gap
    if disc < 0.0:
        return None
    sq = math.sqrt(disc)
    if dv >= 0.0:
        q = -0.5 * (dv + sq)
    else:
        q = -0.5 * (dv - sq)
    roots = []
    if q != 0.0:
        roots.append(-gap / q)          # c / q with c = -gap
    if da != 0.0:
        roots.append(q / (0.5 * da))    # q / a
    positive = [r for r in roots if r > 0.0]
    if not positive:
        return None
    t = min(positive)
    # One guarded Newton polish keeps the residual at rounding level.
    deriv = dv + da * t
    if abs(deriv) > 1e-12:
        t -= (dv * t + 0.5 * da * t * t - gap) / deriv
    return t if t > 0.0 else None


def trailer_front_state(art: ArticulatedState, geom: ArticulatedGeometry) -> VehicleState:
    """Pose and body velocity of the semitrailer front-edge midpoint.

    The front edge rides on the joint, so its velocity combines the rear-axle
    speed, the joint's sweep from the tractor yaw rate and the semitrailer's
    own yaw rate.
    """
    psi0 = art.tractor.pose.psi
    psi1 = art.psi1
    joint_x = art.tractor.pose.x - geom.l_fa * math.cos(psi0)
    joint_y = art.tractor.pose.y - geom.l_fa * math.sin(psi0)
    pose = Pose2D(
        joint_x + geom.l_ra * math.cos(psi1),
        joint_y + geom.l_ra * math.sin(psi1),
        psi1,
    )
    psi0_dot = kinematics.tractor_yaw_rate(art.u_b0, art.delta, geom.wheelbase_l0)
    psi1_dot = kinematics.semitrailer_yaw_rate(art.u_b0, art.delta, psi0, psi1, geom)
    vx = (
        art.u_b0 * math.cos(psi0)
        - geom.rear_axle_to_joint_lb * psi0_dot * math.sin(psi0)
        - geom.l_ra * psi1_dot * math.sin(psi1)
    )
    vy = (
        art.u_b0 * math.sin(psi0)
        + geom.rear_axle_to_joint_lb * psi0_dot * math.cos(psi0)
        + geom.l_ra * psi1_dot * math.cos(psi1)
    )
    vel = BodyVelocity(
        vx * math.cos(psi1) + vy * math.sin(psi1),
        -vx * math.sin(psi1) + vy * math.cos(psi1),
    )
    return VehicleState(pose, vel, art.tractor.acc)


def tractor_rear_axle_x(art: ArticulatedState, geom: ArticulatedGeometry) -> float:
    """Global X of the tractor rear axle, recovered from the front-edge pose."""
    back = geom.l_fa + geom.rear_axle_to_joint_lb
    return art.tractor.pose.x - back * math.cos(art.tractor.pose.psi)


def _tractor_outcome(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
    with_accel: bool,
    reverse: bool,
) -> TtcOutcome:
    if not with_accel:
        return gate_rigid(
            relative_kinematics(art.tractor, geom.tractor, car),
            geom.tractor,
            car_geom,
            relative_rotation(art.tractor.pose.psi, car.pose.psi),
            reverse,
            Unit.TRACTOR,
        )
    kin = relative_kinematics(art.tractor, geom.tractor, car)
    rot = relative_rotation(art.tractor.pose.psi, car.pose.psi)
    g = _canonical_gates(kin, geom.tractor, car_geom, rot, reverse)
    t_lon = NO_COLLISION
    if g.s_x > g.ext_x:
        root = quadratic_contact_time(g.s_x - g.ext_x, g.dv_x, g.da_x)
        if root is not None and abs(_offset_at(g.s_y, g.dv_y, g.da_y, root)) < g.ext_y:
            t_lon = root
    t_lat = NO_COLLISION
    if g.s_y > g.ext_y:
        root = quadratic_contact_time(g.s_y - g.ext_y, g.dv_y, g.da_y)
        if root is not None and abs(_offset_at(g.s_x, g.dv_x, g.da_x, root)) < g.ext_x:
            t_lat = root
    return combine_axis_times(t_lon, t_lat, Unit.TRACTOR)


def _semitrailer_search(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
    cfg: SolverConfig,
    t_end: float,
    with_accel: bool,
    reverse: bool = False,
) -> TtcOutcome:
    kin = relative_kinematics(art.tractor, geom.tractor, car)
    psi0 = art.tractor.pose.psi
    psi_car = car.pose.psi
    th0 = wrap_angle(psi0 - psi_car)

    n = int(math.floor(t_end / cfg.dt + 1e-9))
    t = np.arange(n + 1, dtype=float) * cfg.dt

    if with_accel:
        s0x = kin.s_x - kin.dv_x * t - 0.5 * kin.da_x * t * t
        s0y = kin.s_y - kin.dv_y * t - 0.5 * kin.da_y * t * t
        dvx_t = kin.dv_x + kin.da_x * t
        dvy_t = kin.dv_y + kin.da_y * t
        traveled = art.u_b0 * t + 0.5 * art.tractor.acc.ax * t * t
        xb0_0 = tractor_rear_axle_x(art, geom)
        xb0_t = xb0_0 + math.cos(psi0) * traveled
        psi1_t = kinematics.semitrailer_yaw_variable_speed(
            art.psi1, psi0, xb0_0, xb0_t, psi0, geom.joint_to_rear_axle_l1
        )
    else:
        s0x = kin.s_x - kin.dv_x * t
        s0y = kin.s_y - kin.dv_y * t
        dvx_t = np.full_like(t, kin.dv_x)
        dvy_t = np.full_like(t, kin.dv_y)
        psi1_t = kinematics.semitrailer_yaw_constant_speed(
            art.psi1, psi0, art.u_b0, geom.joint_to_rear_axle_l1, t
        )

    violated = np.abs(wrap_angle_array(psi1_t - psi0)) >= kinematics.JACKKNIFE_LIMIT
    cutoff = len(t)
    invalid = False
    if violated.any():
        cutoff = int(np.argmax(violated))
        invalid = True
        if cutoff == 0:
            return INVALID_OUTCOME_TRAILER

    th1 = wrap_angle_array(psi1_t[:cutoff] - psi_car)
    s0x = s0x[:cutoff]
    s0y = s0y[:cutoff]
    dvx_t = dvx_t[:cutoff]
    dvy_t = dvy_t[:cutoff]
    t = t[:cutoff]

    cos1, sin1 = np.cos(th1), np.sin(th1)
    s1x = s0x - geom.l_fa * math.cos(th0) + geom.l_ra * cos1
    s1y = s0y - geom.l_fa * math.sin(th0) + geom.l_ra * sin1

    l1 = geom.semitrailer.length
    hw1 = 0.5 * geom.semitrailer.width
    mirror = np.where(s1y < 0.0, -1.0, 1.0)
    c1x = np.abs(l1 * cos1 - mirror * hw1 * sin1)
    c1y = mirror * l1 * sin1 + hw1 * cos1
    ext_y = c1y + 0.5 * car_geom.width
    sy_eff = np.abs(s1y)
    sx_eff = s1x

    if reverse:
        # Approach from behind: the car's rear face and length take over the
        # longitudinal gate and the approach sign flips.
        gap_x = -sx_eff - car_geom.length
    else:
        gap_x = sx_eff - c1x
    gap_y = sy_eff - ext_y

    # Contact bands sized to the local penetration per step.
    eps_x = cfg.eps_x if cfg.eps_x is not None else np.maximum(EPS_FLOOR, np.abs(dvx_t) * cfg.dt)
    eps_y = cfg.eps_y if cfg.eps_y is not None else np.maximum(EPS_FLOOR, np.abs(dvy_t) * cfg.dt)

    # Contact requires both axis bands at once; the footprints must also not
    # have slid fully past each other longitudinally.
    in_x = gap_x <= eps_x
    in_y = gap_y <= eps_y
    front_ext = hw1 * np.abs(sin1)
    if reverse:
        window = sx_eff < front_ext
    else:
        window = sx_eff + front_ext > -car_geom.length
    contact = in_x & in_y & window

    if contact[0]:
        # Already in contact when the prediction starts; no prediction made.
        if invalid:
            return INVALID_OUTCOME_TRAILER
        return NO_COLLISION_OUTCOME
    hits = np.nonzero(contact)[0]
    if hits.size == 0:
        if invalid:
            return INVALID_OUTCOME_TRAILER
        return NO_COLLISION_OUTCOME

    k = int(hits[0])
    crossed_x = not in_x[k - 1]
    crossed_y = not in_y[k - 1]
    if crossed_y and not crossed_x:
        direction = Direction.LATERAL
    elif crossed_x and not crossed_y:
        direction = Direction.LONGITUDINAL
    else:
        # Simultaneous crossing: the axis with the smaller residual is the
        # contact face.
        direction = (
            Direction.LATERAL
            if abs(gap_y[k]) <= abs(gap_x[k])
            else Direction.LONGITUDINAL
        )
    return TtcOutcome(float(t[k]), direction, Unit.SEMITRAILER)


def _ttc2d_articulated(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
    cfg: SolverConfig,
    with_accel: bool,
    reverse: bool,
) -> TtcOutcome:
    if art.jackknifed:
        return INVALID_OUTCOME_TRACTOR
    tractor = _tractor_outcome(art, car, car_geom, geom, with_accel, reverse)
    if tractor.collides and tractor.time > cfg.horizon:
        # The prediction horizon bounds the whole measure, closed-form
        # branches included.
        tractor = NO_COLLISION_OUTCOME
    t_end = min(cfg.horizon, tractor.time) if tractor.collides else cfg.horizon
    trailer = _semitrailer_search(art, car, car_geom, geom, cfg, t_end, with_accel, reverse)
    if not trailer.valid or not tractor.valid:
        return trailer if not trailer.valid else tractor
    if trailer.time <= tractor.time:
        return trailer
    return tractor


def ttc2d_v2(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
    cfg: SolverConfig = DEFAULT_SOLVER,
    reverse: bool = False,
) -> TtcOutcome:
    """Articulated 2-D TTC under constant speed and heading.

    Minimum of the tractor-car closed form and the stepped semitrailer-car
    prediction; the outcome is tagged with the colliding unit and flagged
    invalid if the articulation leaves the model's validity range.
    """
    return _ttc2d_articulated(art, car, car_geom, geom, cfg, False, reverse)


def ttc2d_v3(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
    cfg: SolverConfig = DEFAULT_SOLVER,
    reverse: bool = False,
) -> TtcOutcome:
    """Articulated 2-D TTC under constant acceleration and heading.

    The car's yaw rate is taken as negligible; both vehicles' accelerations
    are frozen at their input values over the prediction horizon. With zero
    accelerations this coincides with :func:`ttc2d_v2`.
    """
    return _ttc2d_articulated(art, car, car_geom, geom, cfg, True, reverse)


def conventional_articulated(
    art: ArticulatedState,
    car: VehicleState,
    geom: ArticulatedGeometry,
) -> TtcOutcome:
    """Conventional TTC adapted to the combination (1-D, aligned-frame).

    The combination is one longitudinal interval whose rear is the
    semitrailer's rear edge, so the gap is measured to the semitrailer front
    and the semitrailer length is the lead length. Speeds are raw body
    speeds, per the aligned-frame assumption.
    """
    trailer = trailer_front_state(art, geom)
    s_x, _ = relative_offset(trailer.pose, car.pose)
    out = ttc_conventional(s_x, car.vel.u, trailer.vel.u, geom.semitrailer.length)
    return TtcOutcome(out.time, out.direction, Unit.SEMITRAILER if out.collides else Unit.SINGLE)


def guo2d_articulated(
    art: ArticulatedState,
    car: VehicleState,
    car_geom: VehicleGeometry,
    geom: ArticulatedGeometry,
) -> TtcOutcome:
    """Aligned-frame baseline applied per unit, minimum over units.

    Each unit of the combination is treated as an independent rigid lead
    vehicle with unprojected extents and raw body speeds.
    """
    tractor_pair = RigidPair(art.tractor, geom.tractor, car, car_geom)
    trailer_pair = RigidPair(trailer_front_state(art, geom), geom.semitrailer, car, car_geom)
    best = None
    for unit, pair in ((Unit.TRACTOR, tractor_pair), (Unit.SEMITRAILER, trailer_pair)):
        out = ttc2d_baseline(pair)
        out = TtcOutcome(out.time, out.direction, unit if out.collides else Unit.SINGLE)
        if best is None or out.time < best.time:
            best = out
    return best
