"""Cut-in scenario reconstruction, trajectory files and distance series.

The scenario is two actors on a straight road: a tractor-semitrailer that
pulls away first and later merges toward the adjacent lane, and a car that
starts from rest behind it and closes in quickly. The published experiment
gives the control inputs only as figures, so the default configuration ships
calibrated values tuned to reproduce the reported timing anchors; they are
reconstructions, not measured constants.

Trajectories are uniformly sampled CSV series with one row per timestep and
a small comment header carrying the vehicle geometry.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import kinematics, oracle
from .articulated import ArticulatedGeometry, ArticulatedState
from .frames import (
    BodyAcceleration,
    BodyVelocity,
    Pose2D,
    VehicleGeometry,
    VehicleState,
    wrap_angle,
)
from .measures import Direction, Unit

CSV_COLUMNS = [
    "t",
    "car_x", "car_y", "car_psi", "car_u", "car_v", "car_ax", "car_ay",
    "trk_x", "trk_y", "psi0", "trk_u", "trk_v", "trk_ax", "trk_ay",
    "psi1", "delta", "ub0",
]
_OPTIONAL_COLUMNS = {"car_ax", "car_ay", "trk_ax", "trk_ay"}


class ScenarioError(ValueError):
    """Configuration or trajectory-file problem, with the offending item named."""


@dataclass(frozen=True)
class SpeedProfile:
    """Piecewise-linear speed vs time; constant beyond the last breakpoint."""

    times: tuple[float, ...]
    speeds: tuple[float, ...]

    def __post_init__(self):
        if len(self.times) != len(self.speeds) or len(self.times) < 1:
            raise ScenarioError("speed profile needs matching time/speed lists")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ScenarioError("speed profile times must be strictly increasing")
        if any(s < 0.0 for s in self.speeds):
            raise ScenarioError("speed profile speeds must be non-negative")

    def speed(self, t):
        return np.interp(t, self.times, self.speeds)

    @classmethod
    def parse(cls, text: str, key: str) -> "SpeedProfile":
        times, speeds = [], []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                ts, vs = chunk.split(":")
                times.append(float(ts))
                speeds.append(float(vs))
            except ValueError as exc:
                raise ScenarioError(f"bad profile entry {chunk!r} in {key}") from exc
        try:
            return cls(tuple(times), tuple(speeds))
        except ScenarioError as exc:
            raise ScenarioError(f"{key}: {exc}") from exc


@dataclass(frozen=True)
class SteerPulse:
    """Half-sine steering pulse with an optional counter lobe.

    The main lobe ramps the tractor heading into the target lane; the counter
    lobe eases part of it back so the semitrailer overshoots the settled
    heading, which is what a real lane-change steering trace does.
    """

    start_time: float
    amplitude: float
    duration: float
    counter_amplitude: float = 0.0
    counter_duration: float = 0.0

    def __post_init__(self):
        if self.duration <= 0.0:
            raise ScenarioError("steer pulse duration must be positive")
        if self.counter_duration < 0.0:
            raise ScenarioError("counter pulse duration must be non-negative")

    def angle(self, t: float) -> float:
        tau = t - self.start_time
        if tau < 0.0:
            return 0.0
        if tau <= self.duration:
            return self.amplitude * math.sin(math.pi * tau / self.duration)
        tau -= self.duration
        if self.counter_duration > 0.0 and tau <= self.counter_duration:
            return self.counter_amplitude * math.sin(math.pi * tau / self.counter_duration)
        return 0.0


@dataclass(frozen=True)
class CutInConfig:
    """Full parameterization of the reconstructed cut-in scenario."""

    geometry: ArticulatedGeometry
    car_geom: VehicleGeometry
    truck_speed: SpeedProfile
    truck_start: tuple[float, float, float]
    car_speed: SpeedProfile
    car_start_delay: float
    car_start_x: float
    lane_offset: float
    steer: SteerPulse
    dt: float = 0.01
    duration: float = 20.0

    def __post_init__(self):
        if self.dt <= 0.0 or self.duration <= self.dt:
            raise ScenarioError("sim dt must be positive and duration larger than dt")
        if self.car_start_delay < 0.0:
            raise ScenarioError("car start delay must be non-negative")


@dataclass
class Trajectory:
    """Uniformly sampled joint time series of the car and the combination."""

    t: np.ndarray
    data: dict[str, np.ndarray]
    geometry: ArticulatedGeometry
    car_geom: VehicleGeometry

    def __post_init__(self):
        n = len(self.t)
        if n < 2:
            raise ScenarioError("trajectory needs at least two samples")
        steps = np.diff(self.t)
        if np.any(steps <= 0.0):
            raise ScenarioError("trajectory timestamps must be strictly increasing")
        if np.max(np.abs(steps - steps[0])) > 1e-6 * max(1.0, steps[0]):
            raise ScenarioError("trajectory sampling must be uniform")
        for name in CSV_COLUMNS[1:]:
            if name not in self.data:
                raise ScenarioError(f"trajectory misses column {name!r}")
            if len(self.data[name]) != n:
                raise ScenarioError(f"column {name!r} has wrong length")
            if not np.all(np.isfinite(self.data[name])):
                row = int(np.flatnonzero(~np.isfinite(self.data[name]))[0])
                raise ScenarioError(f"column {name!r} has a non-finite value at row {row}")

    def __len__(self) -> int:
        return len(self.t)

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])

    def index_at(self, time: float) -> int:
        return int(round((time - float(self.t[0])) / self.dt))

    def car_state(self, i: int) -> VehicleState:
        d = self.data
        return VehicleState(
            Pose2D(d["car_x"][i], d["car_y"][i], d["car_psi"][i]),
            BodyVelocity(d["car_u"][i], d["car_v"][i]),
            BodyAcceleration(d["car_ax"][i], d["car_ay"][i], 0.0),
        )

    def articulated_state(self, i: int) -> ArticulatedState:
        d = self.data
        yaw_rate = kinematics.tractor_yaw_rate(
            d["ub0"][i], d["delta"][i], self.geometry.wheelbase_l0
        )
        tractor = VehicleState(
            Pose2D(d["trk_x"][i], d["trk_y"][i], d["psi0"][i]),
            BodyVelocity(d["trk_u"][i], d["trk_v"][i]),
            BodyAcceleration(d["trk_ax"][i], d["trk_ay"][i], yaw_rate),
        )
        return ArticulatedState(
            tractor, psi1=float(d["psi1"][i]), delta=float(d["delta"][i]), u_b0=float(d["ub0"][i])
        )


def _central_diff(values: np.ndarray, dt: float) -> np.ndarray:
    out = np.gradient(values, dt)
    return out


def generate_cutin(cfg: CutInConfig) -> Trajectory:
    """Simulate the two actors and return the joint trajectory.

    The combination follows the non-holonomic stepper under the configured
    speed profile and steering pulse; the car is a straight-driving point
    body in the adjacent lane that starts after the configured delay.
    """
    n = int(round(cfg.duration / cfg.dt))
    t = np.arange(n + 1, dtype=float) * cfg.dt
    geom = cfg.geometry

    x0, y0, psi_init = cfg.truck_start
    back = geom.l_fa + geom.rear_axle_to_joint_lb
    state = kinematics.KinematicState(
        x_b0=x0 - back * math.cos(psi_init),
        y_b0=y0 - back * math.sin(psi_init),
        psi0=psi_init,
        psi1=psi_init,
    )

    cols = {name: np.empty(n + 1) for name in CSV_COLUMNS[1:]}
    u_b0 = np.asarray(cfg.truck_speed.speed(t), dtype=float)
    front_arm = geom.rear_axle_to_joint_lb + geom.l_fa

    for i in range(n + 1):
        delta = cfg.steer.angle(float(t[i]))
        a_pos = kinematics.tractor_front_edge(state, geom)
        psi0_dot = kinematics.tractor_yaw_rate(float(u_b0[i]), delta, geom.wheelbase_l0)
        cols["trk_x"][i] = a_pos.x
        cols["trk_y"][i] = a_pos.y
        cols["psi0"][i] = state.psi0
        cols["psi1"][i] = state.psi1
        cols["delta"][i] = delta
        cols["ub0"][i] = u_b0[i]
        cols["trk_u"][i] = u_b0[i]
        cols["trk_v"][i] = front_arm * psi0_dot
        if i < n:
            try:
                state = kinematics.step_kinematic_model(
                    state, float(u_b0[i]), delta, geom, cfg.dt
                )
            except kinematics.JackknifeError as exc:
                raise ScenarioError(
                    f"configuration jackknifes at t={t[i]:.2f} s: {exc}"
                ) from exc

    car_u = np.where(
        t >= cfg.car_start_delay,
        cfg.car_speed.speed(np.maximum(t - cfg.car_start_delay, 0.0)),
        0.0,
    )
    car_x = np.concatenate(
        ([0.0], np.cumsum(0.5 * (car_u[1:] + car_u[:-1]) * cfg.dt))
    ) + cfg.car_start_x
    cols["car_x"] = car_x
    cols["car_y"] = np.full(n + 1, y0 + cfg.lane_offset)
    cols["car_psi"] = np.full(n + 1, psi_init)
    cols["car_u"] = car_u
    cols["car_v"] = np.zeros(n + 1)
    cols["car_ax"] = _central_diff(car_u, cfg.dt)
    cols["car_ay"] = np.zeros(n + 1)
    cols["trk_ax"] = _central_diff(cols["trk_u"], cfg.dt)
    cols["trk_ay"] = _central_diff(cols["trk_v"], cfg.dt)

    return Trajectory(t, cols, geom, cfg.car_geom)


@dataclass(frozen=True)
class UnitDistances:
    """Rear-edge longitudinal gap and side-edge lateral gap for one unit."""

    lon_gap: np.ndarray
    lat_gap: np.ndarray


@dataclass(frozen=True)
class DistanceSeries:
    t: np.ndarray
    tractor: UnitDistances
    semitrailer: UnitDistances


def _unit_tracks(traj: Trajectory):
    d = traj.data
    geom = traj.geometry
    psi0 = d["psi0"]
    psi1 = d["psi1"]
    jx = d["trk_x"] - geom.l_fa * np.cos(psi0)
    jy = d["trk_y"] - geom.l_fa * np.sin(psi0)
    bx = jx + geom.l_ra * np.cos(psi1)
    by = jy + geom.l_ra * np.sin(psi1)
    return (
        (d["trk_x"], d["trk_y"], psi0, geom.tractor, Unit.TRACTOR),
        (bx, by, psi1, geom.semitrailer, Unit.SEMITRAILER),
    )


def _unit_distances(traj: Trajectory, ux, uy, upsi, ugeom) -> UnitDistances:
    d = traj.data
    cpsi = d["car_psi"]
    cos_c, sin_c = np.cos(cpsi), np.sin(cpsi)

    unit_rear_x = ux - ugeom.length * np.cos(upsi)
    unit_rear_y = uy - ugeom.length * np.sin(upsi)
    car_rear_x = d["car_x"] - traj.car_geom.length * cos_c
    car_rear_y = d["car_y"] - traj.car_geom.length * sin_c
    lon_gap = (unit_rear_x - car_rear_x) * cos_c + (unit_rear_y - car_rear_y) * sin_c

    # Side-edge clearance in the car frame: the unit's near side edge is
    # evaluated over the longitudinal window it shares with the car, or at
    # its nearest station when the footprints do not overlap longitudinally.
    # For vehicles traveling in separate lanes this is the plain lane offset.
    rel_x = ux - d["car_x"]
    rel_y = uy - d["car_y"]
    base_x = rel_x * cos_c + rel_y * sin_c
    base_y = -rel_x * sin_c + rel_y * cos_c
    th = upsi - cpsi
    cos_t, sin_t = np.cos(th), np.sin(th)
    hw = 0.5 * ugeom.width
    half_w_car = 0.5 * traj.car_geom.width

    above = base_y >= 0.0
    edge_sign = np.where(above, -1.0, 1.0)
    front_x = base_x - edge_sign * hw * sin_t
    front_y = base_y + edge_sign * hw * cos_t
    rear_x = front_x - ugeom.length * cos_t
    rear_y = front_y - ugeom.length * sin_t
    slope = np.where(np.abs(cos_t) > 1e-9, np.tan(th), 0.0)

    edge_lo = np.minimum(front_x, rear_x)
    edge_hi = np.maximum(front_x, rear_x)
    w_lo = np.maximum(edge_lo, -traj.car_geom.length)
    w_hi = np.minimum(edge_hi, 0.0)
    # Nearest-station fallback keeps the series continuous when the unit is
    # fully ahead of or behind the car.
    x_a = np.where(w_lo <= w_hi, w_lo, np.where(edge_lo > 0.0, edge_lo, edge_hi))
    x_b = np.where(w_lo <= w_hi, w_hi, x_a)

    def edge_y_at(x):
        return front_y + (x - front_x) * slope

    y_a, y_b = edge_y_at(x_a), edge_y_at(x_b)
    near_edge = np.where(above, np.minimum(y_a, y_b), np.maximum(y_a, y_b))
    lat_gap = np.maximum(
        np.where(above, near_edge - half_w_car, -half_w_car - near_edge), 0.0
    )
    return UnitDistances(lon_gap=lon_gap, lat_gap=lat_gap)


def distance_series(traj: Trajectory) -> DistanceSeries:
    """Per-unit longitudinal (rear edges) and lateral (side edges) gaps.

    The longitudinal gap is negative while the unit's rear edge trails the
    car's; the lateral gap reaches zero exactly at sideswipe contact.
    """
    tracks = _unit_tracks(traj)
    tractor = _unit_distances(traj, *tracks[0][:4])
    trailer = _unit_distances(traj, *tracks[1][:4])
    return DistanceSeries(t=traj.t, tractor=tractor, semitrailer=trailer)


@dataclass(frozen=True)
class ContactEvent:
    time: float
    unit: Unit
    direction: Direction

    @property
    def kind(self) -> str:
        return "SIDESWIPE" if self.direction is Direction.LATERAL else "REAR_END"


def first_contact(traj: Trajectory) -> ContactEvent | None:
    """First footprint contact along the simulated trajectory, if any.

    The sample-level hit is refined by bisection on linearly interpolated
    states to a small fraction of the sampling step.
    """
    d = traj.data
    car_track = (d["car_x"], d["car_y"], d["car_psi"])
    hits = []
    for ux, uy, upsi, ugeom, unit in _unit_tracks(traj):
        mask = oracle.overlap_mask(
            ux, uy, upsi, ugeom, *car_track, traj.car_geom
        )
        if mask.any():
            hits.append((int(np.argmax(mask)), (ux, uy, upsi), ugeom, unit))
    if not hits:
        return None
    hits.sort(key=lambda h: h[0])
    idx, (ux, uy, upsi), ugeom, unit = hits[0]

    def rect_at(track, geom_, frac, i0, i1):
        x = (1 - frac) * track[0][i0] + frac * track[0][i1]
        y = (1 - frac) * track[1][i0] + frac * track[1][i1]
        psi = (1 - frac) * track[2][i0] + frac * track[2][i1]
        return oracle.OrientedRect(Pose2D(x, y, wrap_angle(float(psi))), geom_.length, geom_.width)

    if idx == 0:
        car = rect_at(car_track, traj.car_geom, 0.0, 0, 0)
        other = rect_at((ux, uy, upsi), ugeom, 0.0, 0, 0)
        return ContactEvent(float(traj.t[0]), unit, oracle._contact_direction(car, other))

    lo, hi = 0.0, 1.0
    for _ in range(8):
        mid = 0.5 * (lo + hi)
        car = rect_at(car_track, traj.car_geom, mid, idx - 1, idx)
        other = rect_at((ux, uy, upsi), ugeom, mid, idx - 1, idx)
        if oracle.rects_overlap(car, other):
            hi = mid
        else:
            lo = mid
    time = float(traj.t[idx - 1]) + hi * traj.dt
    car = rect_at(car_track, traj.car_geom, hi, idx - 1, idx)
    other = rect_at((ux, uy, upsi), ugeom, hi, idx - 1, idx)
    return ContactEvent(time, unit, oracle._contact_direction(car, other))


# --- trajectory files -------------------------------------------------------

_GEOM_KEYS = [
    "tractor_length", "tractor_width", "trailer_length", "trailer_width",
    "front_edge_to_joint", "trailer_front_to_joint", "wheelbase",
    "joint_to_trailer_axle", "rear_axle_to_joint", "front_axle_to_joint",
    "car_length", "car_width",
]


def _geom_to_dict(geom: ArticulatedGeometry, car_geom: VehicleGeometry) -> dict[str, float]:
    return {
        "tractor_length": geom.tractor.length,
        "tractor_width": geom.tractor.width,
        "trailer_length": geom.semitrailer.length,
        "trailer_width": geom.semitrailer.width,
        "front_edge_to_joint": geom.l_fa,
        "trailer_front_to_joint": geom.l_ra,
        "wheelbase": geom.wheelbase_l0,
        "joint_to_trailer_axle": geom.joint_to_rear_axle_l1,
        "rear_axle_to_joint": geom.rear_axle_to_joint_lb,
        "front_axle_to_joint": geom.front_axle_to_joint_la,
        "car_length": car_geom.length,
        "car_width": car_geom.width,
    }


def _geom_from_dict(meta: dict[str, float]) -> tuple[ArticulatedGeometry, VehicleGeometry]:
    geom = ArticulatedGeometry(
        tractor=VehicleGeometry(meta["tractor_length"], meta["tractor_width"]),
        semitrailer=VehicleGeometry(meta["trailer_length"], meta["trailer_width"]),
        l_fa=meta["front_edge_to_joint"],
        l_ra=meta["trailer_front_to_joint"],
        wheelbase_l0=meta["wheelbase"],
        joint_to_rear_axle_l1=meta["joint_to_trailer_axle"],
        rear_axle_to_joint_lb=meta["rear_axle_to_joint"],
        front_axle_to_joint_la=meta["front_axle_to_joint"],
    )
    return geom, VehicleGeometry(meta["car_length"], meta["car_width"])


def default_geometry() -> tuple[ArticulatedGeometry, VehicleGeometry]:
    cfg = default_config()
    return cfg.geometry, cfg.car_geom


def save_trajectory(traj: Trajectory, path) -> None:
    rows = np.column_stack([traj.t] + [traj.data[name] for name in CSV_COLUMNS[1:]])
    meta = _geom_to_dict(traj.geometry, traj.car_geom)
    with open(path, "w", encoding="utf-8") as fh:
        for key in _GEOM_KEYS:
            fh.write(f"# {key} = {meta[key]!r}\n")
        fh.write(",".join(CSV_COLUMNS) + "\n")
        for row in rows:
            fh.write(",".join(f"{v:.12g}" for v in row) + "\n")


def load_trajectory(path) -> Trajectory:
    """Parse and validate a trajectory CSV.

    Geometry metadata lines (``# key = value``) are optional and default to
    the packaged scenario geometry; acceleration columns are optional and
    derived by central differences when absent.
    """
    meta: dict[str, float] = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    key, _, value = body.partition("=")
                    try:
                        meta[key.strip()] = float(value.strip())
                    except ValueError as exc:
                        raise ScenarioError(f"bad metadata line {lineno}: {line!r}") from exc
                continue
            parts = [p.strip() for p in line.split(",")]
            if header is None:
                header = parts
                continue
            if len(parts) != len(header):
                raise ScenarioError(
                    f"row {len(rows) + 1} has {len(parts)} fields, expected {len(header)}"
                )
            try:
                rows.append([float(p) for p in parts])
            except ValueError:
                for col, p in zip(header, parts):
                    try:
                        float(p)
                    except ValueError:
                        raise ScenarioError(
                            f"row {len(rows) + 1}, column {col!r}: not a number: {p!r}"
                        ) from None
    if header is None:
        raise ScenarioError("trajectory file has no header row")
    missing = [c for c in CSV_COLUMNS if c not in header and c not in _OPTIONAL_COLUMNS]
    if missing:
        raise ScenarioError(f"missing required column {missing[0]!r}")
    unknown = [c for c in header if c not in CSV_COLUMNS]
    if unknown:
        raise ScenarioError(f"unknown column {unknown[0]!r}")
    if len(rows) < 2:
        raise ScenarioError("trajectory needs at least two rows")

    table = np.asarray(rows, dtype=float)
    series = {name: table[:, header.index(name)] for name in header}
    t = series.pop("t")
    dt = t[1] - t[0]
    for name in _OPTIONAL_COLUMNS:
        if name not in series:
            source = {"car_ax": "car_u", "car_ay": "car_v", "trk_ax": "trk_u", "trk_ay": "trk_v"}[name]
            series[name] = _central_diff(series[source], float(dt))

    if meta:
        missing_meta = [k for k in _GEOM_KEYS if k not in meta]
        if missing_meta:
            raise ScenarioError(f"metadata misses geometry key {missing_meta[0]!r}")
        geom, car_geom = _geom_from_dict(meta)
    else:
        geom, car_geom = default_geometry()
    return Trajectory(t, series, geom, car_geom)


# --- scenario configuration files -------------------------------------------

_SECTION_KEYS = {
    "truck": {
        "x", "y", "heading", "speed_profile",
        "tractor_length", "tractor_width", "trailer_length", "trailer_width",
        "front_edge_to_joint", "trailer_front_to_joint", "wheelbase",
        "joint_to_trailer_axle", "rear_axle_to_joint", "front_axle_to_joint",
    },
    "car": {"length", "width", "start_delay", "start_x", "speed_profile"},
    "cutin": {
        "start_time", "steer_amplitude", "steer_duration",
        "counter_amplitude", "counter_duration", "lane_offset",
    },
    "sim": {"dt", "duration"},
}


def load_config(path) -> CutInConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    read = parser.read(path)
    if not read:
        raise ScenarioError(f"cannot read scenario config {path!r}")
    return _config_from_parser(parser)


def _config_from_parser(parser: configparser.ConfigParser) -> CutInConfig:
    for section in _SECTION_KEYS:
        if not parser.has_section(section):
            raise ScenarioError(f"missing config section [{section}]")
    for section in parser.sections():
        if section not in _SECTION_KEYS:
            raise ScenarioError(f"unknown config section [{section}]")
        for key in parser[section]:
            if key not in _SECTION_KEYS[section]:
                raise ScenarioError(f"unknown key {key!r} in section [{section}]")

    def num(section, key):
        try:
            return parser.getfloat(section, key)
        except (configparser.NoOptionError, ValueError) as exc:
            raise ScenarioError(f"bad or missing numeric key {key!r} in [{section}]") from exc

    truck = parser["truck"]
    geom = ArticulatedGeometry(
        tractor=VehicleGeometry(num("truck", "tractor_length"), num("truck", "tractor_width")),
        semitrailer=VehicleGeometry(num("truck", "trailer_length"), num("truck", "trailer_width")),
        l_fa=num("truck", "front_edge_to_joint"),
        l_ra=num("truck", "trailer_front_to_joint"),
        wheelbase_l0=num("truck", "wheelbase"),
        joint_to_rear_axle_l1=num("truck", "joint_to_trailer_axle"),
        rear_axle_to_joint_lb=num("truck", "rear_axle_to_joint"),
        front_axle_to_joint_la=num("truck", "front_axle_to_joint"),
    )
    car_geom = VehicleGeometry(num("car", "length"), num("car", "width"))
    steer = SteerPulse(
        start_time=num("cutin", "start_time"),
        amplitude=num("cutin", "steer_amplitude"),
        duration=num("cutin", "steer_duration"),
        counter_amplitude=num("cutin", "counter_amplitude"),
        counter_duration=num("cutin", "counter_duration"),
    )
    return CutInConfig(
        geometry=geom,
        car_geom=car_geom,
        truck_speed=SpeedProfile.parse(truck.get("speed_profile", ""), "truck.speed_profile"),
        truck_start=(num("truck", "x"), num("truck", "y"), num("truck", "heading")),
        car_speed=SpeedProfile.parse(parser["car"].get("speed_profile", ""), "car.speed_profile"),
        car_start_delay=num("car", "start_delay"),
        car_start_x=num("car", "start_x"),
        lane_offset=num("cutin", "lane_offset"),
        steer=steer,
        dt=num("sim", "dt"),
        duration=num("sim", "duration"),
    )


def default_config() -> CutInConfig:
    """Calibrated default cut-in configuration shipped with the package."""
    ref = resources.files("ttc2d.data").joinpath("default_cutin.ini")
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    parser.read_string(ref.read_text(encoding="utf-8"))
    return _config_from_parser(parser)
